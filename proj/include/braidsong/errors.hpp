#pragma once

#include <stdexcept>
#include <string>

namespace braidsong {

// Error codes double as the machine-parseable CLI prefix: error[<Name>]: ...
enum class ErrorCode {
  // skeleton / gesture
  DanglingArrow,
  DuplicateId,
  UnmappedElement,
  EndpointMismatch,
  NotATour,
  OpenTour,
  StrandCountMismatch,
  // structured-text documents and braid words
  ParseError,
  SchemaError,
  GeneratorOutOfRange,
  // link diagrams
  TooManyCrossings,
  MalformedDiagram,
  ComponentNotFound,
  SameComponent,
  DegenerateProjection,
  OpenCurve,
  // hypergestures
  SkeletonMismatch,
  SampleCountMismatch,
  WrongSkeleton,
  // sonification
  EmptyPattern,
  EmptyInput,
  InvalidBase,
  MissingHeader,
  // midi
  OutOfRange,
  TooManyVoices,
  InvalidEvent,
  MalformedChunk,
  TruncatedFile,
  // filesystem
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace braidsong
