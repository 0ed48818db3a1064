#pragma once

#include <cstdint>
#include <vector>

#include "braidsong/geometry.hpp"
#include "braidsong/laurent.hpp"
#include "braidsong/link_diagram.hpp"

namespace braidsong {

// State-sum ceiling: 2^16 smoothings is the largest sum evaluated exactly.
inline constexpr int kMaxBracketCrossings = 16;

// Kauffman bracket in the variable A (every stored half-exponent is even).
// Each crossing is smoothed two ways; with the counterclockwise slot order
// (a, b, c, d) starting at the incoming under-strand, the A-smoothing joins
// a-b and c-d (the channel swept when the under-strand rotates
// counterclockwise onto the over-strand) and the B-smoothing joins a-d and
// b-c. A state with i A-choices and j B-choices and L resulting loops
// contributes A^(i-j) * (-A^2 - A^-2)^(L-1).
LaurentPolynomial kauffman_bracket(const LinkDiagram& d);

// Jones polynomial in t: (-A)^(-3w) * bracket, with t = A^-4 applied on
// exponents. Knots give integer exponents, links may give half-integers.
LaurentPolynomial jones(const LinkDiagram& d, int writhe);

// Jones value of the c-component crossing-free unlink.
LaurentPolynomial unlink_jones(int components);

// Half the signed count of crossings between the two distinct components.
int linking_number(const LinkDiagram& d, int component_a, int component_b);

enum class Knottedness { Knotted, PossiblyUnknot };

// Knotted when the Jones polynomial differs from the unlink value for the
// diagram's component count (for one component: differs from 1). Equality
// is necessary, not sufficient, for unknottedness.
Knottedness certify_knotted(const LinkDiagram& d, int writhe);

// === projection of spatial curves ===

struct ProjectionOptions {
  std::uint64_t seed = 0;
  int max_attempts = 8;  // attempt 0 projects unrotated
};

struct ProjectionResult {
  LinkDiagram diagram;
  int writhe = 0;        // signed crossing sum over the whole diagram
  int attempts_used = 1; // rotations tried until a generic projection
};

// Projects closed polyline curves onto the xy-plane viewed from +z (larger
// z passes over). Crossing signs follow the right-hand rule: +1 when the
// over-direction rotated a quarter turn counterclockwise gives the
// under-direction. Non-generic projections (tangencies, shared points,
// vanishing z-separation) trigger seeded random rotations of the whole
// curve set; after max_attempts the call throws DegenerateProjection.
// Every curve must be closed (first sample == last) or OpenCurve is thrown.
// Component i of the diagram is curves[i].
ProjectionResult project_to_diagram(const std::vector<SampledCurve>& curves,
                                    const ProjectionOptions& options = {});

}  // namespace braidsong
