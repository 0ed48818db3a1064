#include "braidsong/homotopy.hpp"

#include <algorithm>
#include <stdexcept>

#include "json_util.hpp"

namespace braidsong {

Hypergesture::Hypergesture(std::vector<Gesture> steps)
    : steps_(std::move(steps)) {
  if (steps_.size() < 2) {
    throw std::invalid_argument("a hypergesture needs at least 2 steps");
  }
  for (const Gesture& g : steps_) {
    require_valid(validate_gesture(g));
  }
  const Gesture& first = steps_.front();
  for (std::size_t k = 1; k < steps_.size(); ++k) {
    if (!(steps_[k].skeleton == first.skeleton)) {
      fail(ErrorCode::SkeletonMismatch,
           "step " + std::to_string(k) + " uses a different skeleton");
    }
    for (const Arrow& a : first.skeleton.arrows) {
      if (steps_[k].arrow_map.at(a.id).size() !=
          first.arrow_map.at(a.id).size()) {
        fail(ErrorCode::SampleCountMismatch,
             "arrow '" + a.id + "' changes sample count at step " +
                 std::to_string(k));
      }
    }
  }
}

SampledCurve compose_paths(const SampledCurve& f, const SampledCurve& g,
                           std::size_t samples) {
  if (!(f.back() == g.front())) {
    fail(ErrorCode::EndpointMismatch,
         "first path ends away from the second path's start");
  }
  if (samples == 0) samples = f.size() + g.size() - 1;
  if (samples < 2) {
    throw std::invalid_argument("compose_paths needs at least 2 samples");
  }
  std::vector<Point3> out;
  out.reserve(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    if (j == 0) {
      out.push_back(f.front());
      continue;
    }
    if (j == samples - 1) {
      out.push_back(g.back());
      continue;
    }
    const double t =
        static_cast<double>(j) / static_cast<double>(samples - 1);
    if (t < 0.5) {
      out.push_back(f.eval(2.0 * t));
    } else if (t > 0.5) {
      out.push_back(g.eval(2.0 * t - 1.0));
    } else {
      out.push_back(f.back());
    }
  }
  return SampledCurve(std::move(out));
}

Hypergesture linear_hypergesture(const Gesture& g1, const Gesture& g2,
                                 int steps) {
  require_valid(validate_gesture(g1));
  require_valid(validate_gesture(g2));
  if (!(g1.skeleton == g2.skeleton)) {
    fail(ErrorCode::SkeletonMismatch,
         "homotopy endpoints use different skeleta");
  }
  for (const Arrow& a : g1.skeleton.arrows) {
    if (g1.arrow_map.at(a.id).size() != g2.arrow_map.at(a.id).size()) {
      fail(ErrorCode::SampleCountMismatch,
           "arrow '" + a.id + "' differs in sample count between endpoints");
    }
  }
  if (steps < 2) {
    fail(ErrorCode::OutOfRange, "a homotopy needs at least 2 steps");
  }
  std::vector<Gesture> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    if (k == 0) {
      out.push_back(g1);
      continue;
    }
    if (k == steps - 1) {
      out.push_back(g2);
      continue;
    }
    const double alpha =
        static_cast<double>(k) / static_cast<double>(steps - 1);
    Gesture step;
    step.skeleton = g1.skeleton;
    for (const auto& [id, p] : g1.vertex_map) {
      step.vertex_map.emplace(id, lerp(p, g2.vertex_map.at(id), alpha));
    }
    for (const auto& [id, curve] : g1.arrow_map) {
      const SampledCurve& other = g2.arrow_map.at(id);
      std::vector<Point3> pts;
      pts.reserve(curve.size());
      for (std::size_t s = 0; s < curve.size(); ++s) {
        pts.push_back(lerp(curve.samples()[s], other.samples()[s], alpha));
      }
      step.arrow_map.emplace(id, SampledCurve(std::move(pts)));
    }
    out.push_back(std::move(step));
  }
  return Hypergesture(std::move(out));
}

Reparametrization::Reparametrization(
    std::vector<std::pair<double, double>> knots)
    : knots_(std::move(knots)) {
  if (knots_.size() < 2 || knots_.front() != std::pair{0.0, 0.0} ||
      knots_.back() != std::pair{1.0, 1.0}) {
    throw std::invalid_argument(
        "reparametrization knots must run from (0,0) to (1,1)");
  }
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (knots_[i].first <= knots_[i - 1].first ||
        knots_[i].second < knots_[i - 1].second) {
      throw std::invalid_argument("reparametrization knots must be monotone");
    }
  }
}

double Reparametrization::apply(double u) const {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (u <= knots_[i].first) {
      const auto& [u0, v0] = knots_[i - 1];
      const auto& [u1, v1] = knots_[i];
      const double s = (u - u0) / (u1 - u0);
      return v0 + s * (v1 - v0);
    }
  }
  return 1.0;
}

AssociatorReport associator_check(const SampledCurve& f, const SampledCurve& g,
                                  const SampledCurve& h, double tolerance,
                                  std::size_t grid) {
  if (!(f.back() == g.front()) || !(g.back() == h.front())) {
    fail(ErrorCode::EndpointMismatch, "paths do not chain end-to-start");
  }
  Reparametrization map(
      {{0.0, 0.0}, {0.25, 0.5}, {0.5, 0.75}, {1.0, 1.0}});
  // Seams of the two groupings: left (f.g).h at 1/4 and 1/2, right
  // f.(g.h) at 1/2 and 3/4. Evaluation goes straight to f, g, h so the
  // only discrepancy left is parameter round-off.
  const auto left = [&](double t) {
    if (t <= 0.25) return f.eval(4.0 * t);
    if (t <= 0.5) return g.eval(4.0 * t - 1.0);
    return h.eval(2.0 * t - 1.0);
  };
  const auto right = [&](double t) {
    if (t <= 0.5) return f.eval(2.0 * t);
    if (t <= 0.75) return g.eval(4.0 * t - 2.0);
    return h.eval(4.0 * t - 3.0);
  };
  if (grid < 2) grid = 2;
  double worst = 0.0;
  for (std::size_t j = 0; j < grid; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(grid - 1);
    worst = std::max(worst, distance(left(t), right(map.apply(t))));
  }
  return {std::move(map), worst, worst <= tolerance};
}

std::vector<std::pair<Point3, Point3>> flatten_recursion(
    const Hypergesture& h) {
  const Skeleton& s = h.skeleton();
  if (s.vertices.size() != 2 || s.arrows.size() != 1 ||
      s.arrows.front().from == s.arrows.front().to) {
    fail(ErrorCode::WrongSkeleton,
         "recursion flattening needs a point-arrow-point skeleton");
  }
  std::vector<std::pair<Point3, Point3>> pairs;
  pairs.reserve(h.step_count());
  for (const Gesture& step : h.steps()) {
    const SampledCurve& curve = step.arrow_map.at(s.arrows.front().id);
    pairs.emplace_back(curve.front(), curve.back());
  }
  return pairs;
}

std::pair<Hypergesture, Hypergesture> swap_pair(const Gesture& g1,
                                                const Gesture& g2, int steps) {
  Hypergesture p1 = linear_hypergesture(g1, g2, steps);
  // The reverse path re-lists p1's steps so the pair is exactly symmetric.
  std::vector<Gesture> rev(p1.steps().rbegin(), p1.steps().rend());
  return {std::move(p1), Hypergesture(std::move(rev))};
}

Hypergesture embed_as_point(const Gesture& g) {
  require_valid(validate_gesture(g));
  return Hypergesture({g, g});
}

std::string save_hypergesture(const Hypergesture& h) {
  detail::json doc;
  doc["skeleton"] = detail::skeleton_to_json(h.skeleton());
  detail::json steps = detail::json::array();
  for (const Gesture& g : h.steps()) {
    detail::json body;
    detail::write_body(body, g);
    steps.push_back(std::move(body));
  }
  doc["steps"] = std::move(steps);
  return doc.dump(2) + "\n";
}

Hypergesture load_hypergesture(const std::string& text) {
  const detail::json doc = detail::parse_document(text);
  const Skeleton skeleton =
      detail::skeleton_from_json(detail::member(doc, "skeleton", "document"));
  const detail::json& steps = detail::member(doc, "steps", "document");
  if (!steps.is_array() || steps.size() < 2) {
    fail(ErrorCode::SchemaError, "steps must be an array of at least 2 bodies");
  }
  std::vector<Gesture> gestures;
  gestures.reserve(steps.size());
  for (const detail::json& body : steps) {
    Gesture g;
    g.skeleton = skeleton;
    detail::read_body(body, g);
    gestures.push_back(std::move(g));
  }
  return Hypergesture(std::move(gestures));
}

}  // namespace braidsong
