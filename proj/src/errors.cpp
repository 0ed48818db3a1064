#include "braidsong/errors.hpp"

namespace braidsong {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingArrow: return "DanglingArrow";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnmappedElement: return "UnmappedElement";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::NotATour: return "NotATour";
    case ErrorCode::OpenTour: return "OpenTour";
    case ErrorCode::StrandCountMismatch: return "StrandCountMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::MalformedDiagram: return "MalformedDiagram";
    case ErrorCode::ComponentNotFound: return "ComponentNotFound";
    case ErrorCode::SameComponent: return "SameComponent";
    case ErrorCode::DegenerateProjection: return "DegenerateProjection";
    case ErrorCode::OpenCurve: return "OpenCurve";
    case ErrorCode::SkeletonMismatch: return "SkeletonMismatch";
    case ErrorCode::SampleCountMismatch: return "SampleCountMismatch";
    case ErrorCode::WrongSkeleton: return "WrongSkeleton";
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::MissingHeader: return "MissingHeader";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooManyVoices: return "TooManyVoices";
    case ErrorCode::InvalidEvent: return "InvalidEvent";
    case ErrorCode::MalformedChunk: return "MalformedChunk";
    case ErrorCode::TruncatedFile: return "TruncatedFile";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace braidsong
