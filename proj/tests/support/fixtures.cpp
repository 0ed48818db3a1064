#include "fixtures.hpp"

#include <cmath>

namespace braidsong::fixtures {

namespace {

constexpr double kPi = 3.14159265358979323846;

Point3 torus_point(double s) {
  const double r = 2.0 + std::cos(3.0 * s);
  return {r * std::cos(2.0 * s), r * std::sin(2.0 * s), std::sin(3.0 * s)};
}

// Arc of the unit-speed parameter interval [s0, s1] with endpoints forced
// onto the given points so vertex images match bit-exactly.
SampledCurve torus_arc(double s0, double s1, const Point3& from,
                       const Point3& to, int segments, bool mirrored) {
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(segments) + 1);
  pts.push_back(from);
  for (int i = 1; i < segments; ++i) {
    pts.push_back(torus_point(s0 + (s1 - s0) * i / segments));
  }
  pts.push_back(to);
  if (mirrored) {
    for (Point3& p : pts) p.z = -p.z;
  }
  return SampledCurve(std::move(pts));
}

SampledCurve circle_arc(double a0, double a1, const Point3& from,
                        const Point3& to, int segments) {
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(segments) + 1);
  pts.push_back(from);
  for (int i = 1; i < segments; ++i) {
    const double a = a0 + (a1 - a0) * i / segments;
    pts.push_back({3.0 * std::cos(a), 3.0 * std::sin(a), 0.0});
  }
  pts.push_back(to);
  return SampledCurve(std::move(pts));
}

Skeleton cyclic3_skeleton() {
  Skeleton s;
  s.vertices = {"v0", "v1", "v2"};
  s.arrows = {{"a1", "v0", "v1"}, {"a2", "v1", "v2"}, {"a3", "v2", "v0"}};
  return s;
}

}  // namespace

Gesture conducting() {
  Gesture g;
  g.skeleton.vertices = {"b1", "b2", "b3", "b4"};
  g.skeleton.arrows = {
      {"a1", "b1", "b2"},  // downbeat
      {"a2", "b2", "b3"},  // sweep left with an inner loop
      {"a3", "b3", "b4"},  // sweep across
      {"a4", "b4", "b1"},  // back up
  };
  g.vertex_map = {{"b1", {0, 2, 0}},
                  {"b2", {0, -2, 0}},
                  {"b3", {-2, 0, 0}},
                  {"b4", {2, 0, 0}}};
  g.arrow_map.emplace(
      "a1", SampledCurve({{0, 2, 0}, {0, 0.7, 0}, {0, -0.3, 0}, {0, -1.4, 0},
                          {0, -2, 0}}));
  g.arrow_map.emplace(
      "a2", SampledCurve({{0, -2, 0}, {1, -1, 0}, {0.5, -0.5, 0.4},
                          {-0.5, 0.5, 0.4}, {-1, 1, 0}, {-2, 0, 0}}));
  g.arrow_map.emplace(
      "a3", SampledCurve({{-2, 0, 0}, {-0.5, -1, 0.5}, {0.5, -1, 0.5},
                          {2, 0, 0}}));
  g.arrow_map.emplace("a4", SampledCurve({{2, 0, 0}, {0, 2, 0}}));
  return g;
}

std::array<Point3, 3> cyclic3_vertices() {
  return {torus_point(0.0), torus_point(2.0 * kPi / 3.0),
          torus_point(4.0 * kPi / 3.0)};
}

Gesture trefoil(bool mirrored, int segments_per_arc) {
  const auto v = cyclic3_vertices();
  Gesture g;
  g.skeleton = cyclic3_skeleton();
  g.vertex_map = {{"v0", v[0]}, {"v1", v[1]}, {"v2", v[2]}};
  const double third = 2.0 * kPi / 3.0;
  g.arrow_map.emplace("a1", torus_arc(0.0, third, v[0], v[1], segments_per_arc,
                                      mirrored));
  g.arrow_map.emplace("a2", torus_arc(third, 2.0 * third, v[1], v[2],
                                      segments_per_arc, mirrored));
  g.arrow_map.emplace("a3", torus_arc(2.0 * third, 3.0 * third, v[2], v[0],
                                      segments_per_arc, mirrored));
  if (mirrored) {
    for (auto& [id, p] : g.vertex_map) p.z = -p.z;
  }
  return g;
}

Gesture round_unknot(int segments_per_arc) {
  const auto v = cyclic3_vertices();
  Gesture g;
  g.skeleton = cyclic3_skeleton();
  g.vertex_map = {{"v0", v[0]}, {"v1", v[1]}, {"v2", v[2]}};
  // Clockwise traversal visits v0, v1, v2 in skeleton order: the angular
  // positions are 0, -2pi/3, -4pi/3.
  const double third = -2.0 * kPi / 3.0;
  g.arrow_map.emplace("a1",
                      circle_arc(0.0, third, v[0], v[1], segments_per_arc));
  g.arrow_map.emplace("a2", circle_arc(third, 2.0 * third, v[1], v[2],
                                       segments_per_arc));
  g.arrow_map.emplace("a3", circle_arc(2.0 * third, 3.0 * third, v[2], v[0],
                                       segments_per_arc));
  return g;
}

std::vector<SampledCurve> linked_rings(int samples) {
  std::vector<Point3> a;
  std::vector<Point3> b;
  a.reserve(static_cast<std::size_t>(samples) + 1);
  b.reserve(static_cast<std::size_t>(samples) + 1);
  const double tilt = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < samples; ++i) {
    const double t = 2.0 * kPi * i / samples;
    a.push_back({std::cos(t), std::sin(t), 0.0});
    // Second ring through the first one's disc, tilted out of the plane.
    b.push_back({1.0 + std::cos(t), tilt * std::sin(t), tilt * std::sin(t)});
  }
  a.push_back(a.front());
  b.push_back(b.front());
  return {SampledCurve(std::move(a)), SampledCurve(std::move(b))};
}

std::vector<SampledCurve> flat_linked_rings(int samples) {
  std::vector<Point3> a;
  std::vector<Point3> b;
  a.reserve(static_cast<std::size_t>(samples) + 1);
  b.reserve(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i < samples; ++i) {
    const double t = 2.0 * kPi * i / samples;
    a.push_back({std::cos(t), std::sin(t), 0.0});
    // This ring lives in the xz-plane: seen from +z it collapses onto a
    // segment of the x-axis.
    b.push_back({1.0 + std::cos(t), 0.0, std::sin(t)});
  }
  a.push_back(a.front());
  b.push_back(b.front());
  return {SampledCurve(std::move(a)), SampledCurve(std::move(b))};
}

std::vector<SampledCurve> parallel_strands(int n, int samples) {
  std::vector<SampledCurve> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::vector<Point3> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      pts.push_back({static_cast<double>(s),
                     static_cast<double>(i) / (samples - 1), 0.0});
    }
    out.emplace_back(std::move(pts));
  }
  return out;
}

std::vector<SampledCurve> close_two_strands(
    const std::vector<SampledCurve>& strands) {
  std::vector<SampledCurve> out;
  for (std::size_t p = 0; p < strands.size(); ++p) {
    const double lane = static_cast<double>(p);
    const Point3 top = strands[p].back();
    const Point3 bottom = strands[p].front();
    std::vector<Point3> pts(strands[p].samples());
    // Return arc around the left of the braid region, one lane per strand.
    pts.push_back({top.x, 1.25 + 0.25 * lane, 0.0});
    pts.push_back({-1.0 - lane, 1.25 + 0.25 * lane, 0.0});
    pts.push_back({-1.0 - lane, -0.25 - 0.25 * lane, 0.0});
    pts.push_back({bottom.x, -0.25 - 0.25 * lane, 0.0});
    pts.push_back(bottom);
    out.emplace_back(std::move(pts));
  }
  return out;
}

Gesture segment_gesture(const Point3& from, const Point3& to, int samples) {
  Gesture g;
  g.skeleton.vertices = {"p", "q"};
  g.skeleton.arrows = {{"a", "p", "q"}};
  g.vertex_map = {{"p", from}, {"q", to}};
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  pts.push_back(from);
  for (int i = 1; i + 1 < samples; ++i) {
    pts.push_back(lerp(from, to, static_cast<double>(i) / (samples - 1)));
  }
  pts.push_back(to);
  g.arrow_map.emplace("a", SampledCurve(std::move(pts)));
  return g;
}

}  // namespace braidsong::fixtures
