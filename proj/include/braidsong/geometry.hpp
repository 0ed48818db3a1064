#pragma once

#include <cstddef>
#include <vector>

namespace braidsong {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Point3&) const = default;
};

Point3 operator+(const Point3& a, const Point3& b);
Point3 operator-(const Point3& a, const Point3& b);
Point3 operator*(double s, const Point3& p);

double dot(const Point3& a, const Point3& b);
double norm(const Point3& p);
double distance(const Point3& a, const Point3& b);
bool is_finite(const Point3& p);

// Convex combination (1-t)*a + t*b; exact at t == 0 and t == 1.
Point3 lerp(const Point3& a, const Point3& b, double t);

// Uniformly parametrized polyline over [0, 1]. Immutable; at least two
// finite samples.
class SampledCurve {
public:
  explicit SampledCurve(std::vector<Point3> samples);

  const std::vector<Point3>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  const Point3& front() const { return samples_.front(); }
  const Point3& back() const { return samples_.back(); }

  // Piecewise-linear evaluation; t clamped to [0, 1], endpoints bit-exact.
  Point3 eval(double t) const;

  SampledCurve resampled(std::size_t count) const;
  SampledCurve reversed() const;

  bool closed() const { return front() == back(); }

  bool operator==(const SampledCurve&) const = default;

private:
  std::vector<Point3> samples_;
};

}  // namespace braidsong
