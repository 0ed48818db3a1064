#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidsong/braid.hpp"
#include "braidsong/errors.hpp"
#include "braidsong/geometry.hpp"

namespace braidsong {

struct Arrow {
  std::string id;
  std::string from;
  std::string to;

  bool operator==(const Arrow&) const = default;
};

// Directed multigraph; parallel arrows and self-loops are allowed.
struct Skeleton {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  bool has_vertex(const std::string& id) const;
  const Arrow* find_arrow(const std::string& id) const;

  bool operator==(const Skeleton&) const = default;
};

// Spatial realization: vertices go to points, arrows to sampled curves whose
// endpoints coincide bit-exactly with the mapped endpoint vertices.
struct Gesture {
  Skeleton skeleton;
  std::map<std::string, Point3> vertex_map;
  std::map<std::string, SampledCurve> arrow_map;

  bool operator==(const Gesture&) const = default;
};

struct ValidationIssue {
  ErrorCode code;
  std::string message;
};

// Empty result means valid. Reported codes: DuplicateId, DanglingArrow.
std::vector<ValidationIssue> validate_skeleton(const Skeleton& s);

// Validates the skeleton first, then coverage of the maps (UnmappedElement)
// and the endpoint identities (EndpointMismatch).
std::vector<ValidationIssue> validate_gesture(const Gesture& g);

// Throws the first issue, if any.
void require_valid(const std::vector<ValidationIssue>& issues);

// Walks the listed arrows head-to-tail, closing a component every time the
// walk returns to the component's starting vertex; the next listed arrow
// starts the next component. Junction samples are deduplicated; every output
// curve is closed (first sample == last sample). Throws NotATour when an
// arrow does not continue the walk, OpenTour when the list ends mid-tour.
std::vector<SampledCurve> close_gesture(const Gesture& g,
                                        const std::vector<std::string>& tour);

// Braids parallel strands: the curve starting in position i ends in position
// permutation(w)(i). Each letter occupies an equal parameter window in which
// the two involved strands trade positions; the over-strand is lifted and
// the under-strand lowered so that they stay 1.0 model unit apart in z at
// the crossing. Throws StrandCountMismatch when the strand list does not
// match w.strands or the strands disagree in sample count.
std::vector<SampledCurve> braid_strands(const std::vector<SampledCurve>& strands,
                                        const BraidWord& w);

// Structured-text persistence (UTF-8, full round-trip precision for reals).
std::string save_gesture(const Gesture& g);
Gesture load_gesture(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace braidsong
