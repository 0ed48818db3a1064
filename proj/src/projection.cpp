#include <algorithm>
#include <cmath>
#include <random>

#include "braidsong/errors.hpp"
#include "braidsong/knot.hpp"

namespace braidsong {

namespace {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

double cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

double dist2(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Thrown internally to trigger a rotation retry.
struct NonGeneric {
  std::string reason;
};

struct Segment {
  Vec2 a, b;
  double za = 0.0, zb = 0.0;
  std::size_t curve = 0;
  std::size_t index = 0;  // position along the curve
  std::size_t rank = 0;   // position among the curve's kept segments
  double length = 0.0;
};

struct Passage {
  double param = 0.0;            // segment index + local parameter
  std::size_t crossing = 0;
  bool under = false;
};

struct RawCrossing {
  Vec2 point;
  int sign = 0;
  std::size_t under_curve = 0, over_curve = 0;
  double under_param = 0.0, over_param = 0.0;
  // Filled once passages are sorted along their curves.
  int under_in = -1, under_out = -1, over_in = -1, over_out = -1;
};

Point3 rotate_point(const Point3& p, const Point3& axis, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Point3 cross{axis.y * p.z - axis.z * p.y, axis.z * p.x - axis.x * p.z,
                     axis.x * p.y - axis.y * p.x};
  const double k = dot(axis, p) * (1.0 - c);
  return {p.x * c + cross.x * s + axis.x * k,
          p.y * c + cross.y * s + axis.y * k,
          p.z * c + cross.z * s + axis.z * k};
}

std::vector<SampledCurve> rotate_curves(const std::vector<SampledCurve>& curves,
                                        std::uint64_t seed, int attempt) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull *
                              static_cast<std::uint64_t>(attempt)));
  std::normal_distribution<double> gauss(0.0, 1.0);
  Point3 axis{gauss(rng), gauss(rng), gauss(rng)};
  double n = norm(axis);
  while (n < 1e-6) {
    axis = {gauss(rng), gauss(rng), gauss(rng)};
    n = norm(axis);
  }
  axis = (1.0 / n) * axis;
  std::uniform_real_distribution<double> angle_dist(0.4, 2.0 * 3.14159265358979323846 - 0.4);
  const double angle = angle_dist(rng);

  std::vector<SampledCurve> out;
  out.reserve(curves.size());
  for (const SampledCurve& c : curves) {
    std::vector<Point3> pts;
    pts.reserve(c.size());
    for (const Point3& p : c.samples()) {
      pts.push_back(rotate_point(p, axis, angle));
    }
    // Keep the closure seam bit-exact under rounding.
    pts.back() = pts.front();
    out.emplace_back(std::move(pts));
  }
  return out;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 d{b.x - a.x, b.y - a.y};
  const double len2 = d.x * d.x + d.y * d.y;
  if (len2 == 0.0) return dist2(p, a);
  double t = ((p.x - a.x) * d.x + (p.y - a.y) * d.y) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return dist2(p, {a.x + t * d.x, a.y + t * d.y});
}

double segment_distance(const Segment& s, const Segment& t) {
  return std::min(
      std::min(point_segment_distance(s.a, t.a, t.b),
               point_segment_distance(s.b, t.a, t.b)),
      std::min(point_segment_distance(t.a, s.a, s.b),
               point_segment_distance(t.b, s.a, s.b)));
}

ProjectionResult build_diagram(const std::vector<SampledCurve>& curves) {
  // Collect projected segments, dropping the zero-length ones.
  std::vector<std::vector<Segment>> by_curve(curves.size());
  std::vector<std::size_t> segment_count(curves.size());
  double diameter = 0.0;
  {
    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    bool any = false;
    for (const SampledCurve& c : curves) {
      for (const Point3& p : c.samples()) {
        if (!any) {
          min_x = max_x = p.x;
          min_y = max_y = p.y;
          any = true;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
      }
    }
    diameter = std::hypot(max_x - min_x, max_y - min_y);
  }
  const double eps = 1e-9 * std::max(diameter, 1.0);

  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& samples = curves[ci].samples();
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      Segment s;
      s.a = {samples[i].x, samples[i].y};
      s.b = {samples[i + 1].x, samples[i + 1].y};
      s.za = samples[i].z;
      s.zb = samples[i + 1].z;
      s.curve = ci;
      s.index = i;
      s.length = dist2(s.a, s.b);
      if (s.length > eps) {
        s.rank = by_curve[ci].size();
        by_curve[ci].push_back(s);
      }
    }
    segment_count[ci] = by_curve[ci].size();
  }

  std::vector<Segment> all;
  for (const auto& v : by_curve) all.insert(all.end(), v.begin(), v.end());

  // Adjacency over the kept cyclic order, so that zero-length gaps (for
  // instance a doubled sample at a closure seam) still separate neighbours.
  const auto adjacent = [&](const Segment& s, const Segment& t) {
    if (s.curve != t.curve) return false;
    const std::size_t n = segment_count[s.curve];
    if (n <= 2) return true;
    const std::size_t d = (s.rank + n - t.rank) % n;
    return d <= 1 || d == n - 1;
  };

  std::vector<RawCrossing> crossings;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Segment& s = all[i];
      const Segment& t = all[j];
      if (adjacent(s, t)) continue;
      const Vec2 d1{s.b.x - s.a.x, s.b.y - s.a.y};
      const Vec2 d2{t.b.x - t.a.x, t.b.y - t.a.y};
      const double denom = cross2(d1, d2);
      if (std::abs(denom) < 1e-12 * s.length * t.length) {
        if (segment_distance(s, t) < eps) {
          throw NonGeneric{"near-parallel segments overlap"};
        }
        continue;
      }
      const Vec2 offset{t.a.x - s.a.x, t.a.y - s.a.y};
      const double u = cross2(offset, d2) / denom;
      const double v = cross2(offset, d1) / denom;
      const double mu = std::max(eps / s.length, 1e-12);
      const double mv = std::max(eps / t.length, 1e-12);
      if (u < -mu || u > 1.0 + mu || v < -mv || v > 1.0 + mv) continue;
      if (u < mu || u > 1.0 - mu || v < mv || v > 1.0 - mv) {
        throw NonGeneric{"intersection grazes a curve sample"};
      }
      const double zs = s.za + u * (s.zb - s.za);
      const double zt = t.za + v * (t.zb - t.za);
      if (std::abs(zs - zt) < eps) {
        throw NonGeneric{"strands meet without depth separation"};
      }
      RawCrossing rc;
      rc.point = {s.a.x + u * d1.x, s.a.y + u * d1.y};
      const bool s_over = zs > zt;
      const Vec2& od = s_over ? d1 : d2;
      const Vec2& ud = s_over ? d2 : d1;
      rc.sign = cross2(od, ud) > 0.0 ? +1 : -1;
      rc.over_curve = s_over ? s.curve : t.curve;
      rc.under_curve = s_over ? t.curve : s.curve;
      rc.over_param = s_over ? static_cast<double>(s.index) + u
                             : static_cast<double>(t.index) + v;
      rc.under_param = s_over ? static_cast<double>(t.index) + v
                              : static_cast<double>(s.index) + u;
      crossings.push_back(rc);
    }
  }

  // Triple points and near-coincident crossings defeat the edge ordering.
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    for (std::size_t j = i + 1; j < crossings.size(); ++j) {
      if (dist2(crossings[i].point, crossings[j].point) < eps) {
        throw NonGeneric{"two crossings coincide (triple point)"};
      }
    }
  }

  // Order passages along each curve and cut the curves into edges.
  std::vector<std::vector<Passage>> passages(curves.size());
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    passages[crossings[k].under_curve].push_back(
        {crossings[k].under_param, k, true});
    passages[crossings[k].over_curve].push_back(
        {crossings[k].over_param, k, false});
  }

  LinkDiagram d;
  d.component_count = static_cast<int>(curves.size());
  int next_edge = 0;
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    auto& list = passages[ci];
    if (list.empty()) {
      ++d.free_loops;
      continue;
    }
    std::sort(list.begin(), list.end(),
              [](const Passage& a, const Passage& b) { return a.param < b.param; });
    const int base = next_edge;
    const int m = static_cast<int>(list.size());
    next_edge += m;
    for (int e = 0; e < m; ++e) {
      d.edge_component.push_back(static_cast<int>(ci));
    }
    for (int p = 0; p < m; ++p) {
      // Edge (base + p) starts at passage p; the previous edge ends there.
      const int in_edge = base + (p - 1 + m) % m;
      const int out_edge = base + p;
      RawCrossing& rc = crossings[list[static_cast<std::size_t>(p)].crossing];
      if (list[static_cast<std::size_t>(p)].under) {
        rc.under_in = in_edge;
        rc.under_out = out_edge;
      } else {
        rc.over_in = in_edge;
        rc.over_out = out_edge;
      }
    }
  }
  d.num_edges = next_edge;

  int writhe = 0;
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    const RawCrossing& rc = crossings[k];
    Crossing c;
    c.id = static_cast<int>(k);
    c.sign = rc.sign;
    c.edges[0] = rc.under_in;
    c.edges[2] = rc.under_out;
    if (rc.sign > 0) {
      c.edges[1] = rc.over_out;
      c.edges[3] = rc.over_in;
    } else {
      c.edges[1] = rc.over_in;
      c.edges[3] = rc.over_out;
    }
    writhe += rc.sign;
    d.crossings.push_back(c);
  }

  validate_diagram(d);
  ProjectionResult result;
  result.diagram = std::move(d);
  result.writhe = writhe;
  return result;
}

}  // namespace

ProjectionResult project_to_diagram(const std::vector<SampledCurve>& curves,
                                    const ProjectionOptions& options) {
  if (curves.empty()) {
    fail(ErrorCode::MalformedDiagram, "no curves to project");
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (!curves[i].closed()) {
      fail(ErrorCode::OpenCurve,
           "curve " + std::to_string(i) + " is not closed");
    }
  }
  std::string last_reason = "no attempt made";
  const int attempts = std::max(1, options.max_attempts);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    try {
      ProjectionResult result =
          attempt == 0
              ? build_diagram(curves)
              : build_diagram(rotate_curves(curves, options.seed, attempt));
      result.attempts_used = attempt + 1;
      return result;
    } catch (const NonGeneric& bad) {
      last_reason = bad.reason;
    }
  }
  fail(ErrorCode::DegenerateProjection,
       "projection stayed degenerate after " + std::to_string(attempts) +
           " attempts (seed " + std::to_string(options.seed) +
           "): " + last_reason);
}

}  // namespace braidsong
