#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "braidsong/skeleton.hpp"

namespace braidsong {

// A sampled path in gesture space: at least 2 steps, all over one skeleton,
// with identical per-arrow sample counts so steps can be compared pointwise.
class Hypergesture {
public:
  // Validates every step, skeleton agreement (SkeletonMismatch) and sample
  // counts (SampleCountMismatch). Fewer than 2 steps is a programming error
  // and throws std::invalid_argument.
  explicit Hypergesture(std::vector<Gesture> steps);

  const Skeleton& skeleton() const { return steps_.front().skeleton; }
  const std::vector<Gesture>& steps() const { return steps_; }
  std::size_t step_count() const { return steps_.size(); }
  const Gesture& step(std::size_t k) const { return steps_.at(k); }

  bool operator==(const Hypergesture&) const = default;

private:
  std::vector<Gesture> steps_;
};

// Runs f over parameter [0, 1/2] and g over [1/2, 1]. samples == 0 picks
// f.size() + g.size() - 1. The joint f.back() == g.front() must hold
// bitwise (EndpointMismatch otherwise); the output keeps both outer
// endpoints bitwise.
SampledCurve compose_paths(const SampledCurve& f, const SampledCurve& g,
                           std::size_t samples = 0);

// Straight-line homotopy: step k is the pointwise convex combination at
// weight k/(steps-1). The first and last steps are bitwise copies of g1
// and g2. steps must be >= 2 (OutOfRange).
Hypergesture linear_hypergesture(const Gesture& g1, const Gesture& g2,
                                 int steps);

// Monotone piecewise-linear [0,1] -> [0,1] map given by its knots
// (first (0,0), last (1,1), strictly increasing in u).
class Reparametrization {
public:
  explicit Reparametrization(std::vector<std::pair<double, double>> knots);

  double apply(double u) const;
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }

private:
  std::vector<std::pair<double, double>> knots_;
};

struct AssociatorReport {
  Reparametrization reparam;
  double max_deviation = 0.0;
  bool ok = false;
};

// Both groupings of the chain f, then g, then h trace the same image:
// grouping (f.g).h puts the seams at 1/4 and 1/2, grouping f.(g.h) puts
// them at 1/2 and 3/4, and the piecewise-linear map with knots
// {(0,0), (1/4,1/2), (1/2,3/4), (1,1)} carries one grid onto the other.
// The check evaluates ((f.g).h)(t) against (f.(g.h))(map(t)) directly on
// f, g, h (no intermediate resampling) over a uniform grid and reports
// the largest pointwise distance; ok iff it is <= tolerance.
AssociatorReport associator_check(const SampledCurve& f, const SampledCurve& g,
                                  const SampledCurve& h,
                                  double tolerance = 1e-6,
                                  std::size_t grid = 1024);

// The (start, end) pair of the single curve of every step. Only defined for
// the point-arrow-point skeleton: two vertices joined by one arrow
// (WrongSkeleton otherwise).
std::vector<std::pair<Point3, Point3>> flatten_recursion(const Hypergesture& h);

// The two braiding paths (p1: g1 -> g2, p2: g2 -> g1); p2 lists p1's steps
// in reverse order, so the pair is bitwise symmetric.
std::pair<Hypergesture, Hypergesture> swap_pair(const Gesture& g1,
                                                const Gesture& g2, int steps);

// Constant 2-step path at g.
Hypergesture embed_as_point(const Gesture& g);

// Persistence: the skeleton stated once, then one body per step.
std::string save_hypergesture(const Hypergesture& h);
Hypergesture load_hypergesture(const std::string& text);

}  // namespace braidsong
