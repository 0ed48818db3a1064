#include "braidsong/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace braidsong {

Point3 operator+(const Point3& a, const Point3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

Point3 operator-(const Point3& a, const Point3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

Point3 operator*(double s, const Point3& p) {
  return {s * p.x, s * p.y, s * p.z};
}

double dot(const Point3& a, const Point3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

double norm(const Point3& p) { return std::sqrt(dot(p, p)); }

double distance(const Point3& a, const Point3& b) { return norm(a - b); }

bool is_finite(const Point3& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

Point3 lerp(const Point3& a, const Point3& b, double t) {
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return (1.0 - t) * a + t * b;
}

SampledCurve::SampledCurve(std::vector<Point3> samples)
    : samples_(std::move(samples)) {
  if (samples_.size() < 2) {
    throw std::invalid_argument("sampled curve needs at least 2 samples");
  }
  for (const Point3& p : samples_) {
    if (!is_finite(p)) {
      throw std::invalid_argument("sampled curve has a non-finite sample");
    }
  }
}

Point3 SampledCurve::eval(double t) const {
  if (t <= 0.0) return samples_.front();
  if (t >= 1.0) return samples_.back();
  const double x = t * static_cast<double>(samples_.size() - 1);
  auto i = static_cast<std::size_t>(x);
  if (i >= samples_.size() - 1) i = samples_.size() - 2;
  return lerp(samples_[i], samples_[i + 1], x - static_cast<double>(i));
}

SampledCurve SampledCurve::resampled(std::size_t count) const {
  if (count < 2) {
    throw std::invalid_argument("resample count must be at least 2");
  }
  std::vector<Point3> out;
  out.reserve(count);
  out.push_back(samples_.front());
  for (std::size_t i = 1; i + 1 < count; ++i) {
    out.push_back(eval(static_cast<double>(i) / static_cast<double>(count - 1)));
  }
  out.push_back(samples_.back());
  return SampledCurve(std::move(out));
}

SampledCurve SampledCurve::reversed() const {
  std::vector<Point3> out(samples_.rbegin(), samples_.rend());
  return SampledCurve(std::move(out));
}

}  // namespace braidsong
