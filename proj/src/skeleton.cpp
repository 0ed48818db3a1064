#include "braidsong/skeleton.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json_util.hpp"

namespace braidsong {

bool Skeleton::has_vertex(const std::string& id) const {
  for (const auto& v : vertices) {
    if (v == id) return true;
  }
  return false;
}

const Arrow* Skeleton::find_arrow(const std::string& id) const {
  for (const Arrow& a : arrows) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

// === validation ===

std::vector<ValidationIssue> validate_skeleton(const Skeleton& s) {
  std::vector<ValidationIssue> issues;
  std::set<std::string> vertex_ids;
  for (const auto& v : s.vertices) {
    if (!vertex_ids.insert(v).second) {
      issues.push_back({ErrorCode::DuplicateId, "duplicate vertex id '" + v + "'"});
    }
  }
  std::set<std::string> arrow_ids;
  for (const Arrow& a : s.arrows) {
    if (!arrow_ids.insert(a.id).second) {
      issues.push_back({ErrorCode::DuplicateId, "duplicate arrow id '" + a.id + "'"});
    }
    for (const std::string& end : {a.from, a.to}) {
      if (!vertex_ids.count(end)) {
        issues.push_back({ErrorCode::DanglingArrow,
                          "arrow '" + a.id + "' references missing vertex '" +
                              end + "'"});
      }
    }
  }
  return issues;
}

std::vector<ValidationIssue> validate_gesture(const Gesture& g) {
  std::vector<ValidationIssue> issues = validate_skeleton(g.skeleton);
  for (const auto& v : g.skeleton.vertices) {
    if (!g.vertex_map.count(v)) {
      issues.push_back({ErrorCode::UnmappedElement, "vertex '" + v + "' has no image"});
    }
  }
  for (const Arrow& a : g.skeleton.arrows) {
    auto it = g.arrow_map.find(a.id);
    if (it == g.arrow_map.end()) {
      issues.push_back({ErrorCode::UnmappedElement, "arrow '" + a.id + "' has no curve"});
      continue;
    }
    const auto from = g.vertex_map.find(a.from);
    const auto to = g.vertex_map.find(a.to);
    if (from != g.vertex_map.end() && !(it->second.front() == from->second)) {
      issues.push_back({ErrorCode::EndpointMismatch,
                        "curve of arrow '" + a.id +
                            "' does not start at the image of '" + a.from + "'"});
    }
    if (to != g.vertex_map.end() && !(it->second.back() == to->second)) {
      issues.push_back({ErrorCode::EndpointMismatch,
                        "curve of arrow '" + a.id +
                            "' does not end at the image of '" + a.to + "'"});
    }
  }
  return issues;
}

void require_valid(const std::vector<ValidationIssue>& issues) {
  if (!issues.empty()) {
    fail(issues.front().code, issues.front().message);
  }
}

// === closing tours ===

std::vector<SampledCurve> close_gesture(const Gesture& g,
                                        const std::vector<std::string>& tour) {
  require_valid(validate_gesture(g));
  if (tour.empty()) {
    fail(ErrorCode::NotATour, "tour lists no arrows");
  }
  std::vector<SampledCurve> components;
  std::size_t idx = 0;
  while (idx < tour.size()) {
    const Arrow* first = g.skeleton.find_arrow(tour[idx]);
    if (!first) {
      fail(ErrorCode::NotATour, "unknown arrow '" + tour[idx] + "' in tour");
    }
    const std::string start = first->from;
    std::vector<Point3> samples = g.arrow_map.at(first->id).samples();
    std::string at = first->to;
    ++idx;
    while (at != start) {
      if (idx == tour.size()) {
        fail(ErrorCode::OpenTour,
             "tour ends at '" + at + "' without returning to '" + start + "'");
      }
      const Arrow* next = g.skeleton.find_arrow(tour[idx]);
      if (!next) {
        fail(ErrorCode::NotATour, "unknown arrow '" + tour[idx] + "' in tour");
      }
      if (next->from != at) {
        fail(ErrorCode::NotATour,
             "arrow '" + next->id + "' starts at '" + next->from +
                 "', walk is at '" + at + "'");
      }
      const auto& curve = g.arrow_map.at(next->id).samples();
      samples.insert(samples.end(), curve.begin() + 1, curve.end());
      at = next->to;
      ++idx;
    }
    components.emplace_back(std::move(samples));
  }
  return components;
}

// === geometric braiding ===

std::vector<SampledCurve> braid_strands(const std::vector<SampledCurve>& strands,
                                        const BraidWord& w) {
  validate_braid_word(w);
  if (static_cast<int>(strands.size()) != w.strands) {
    fail(ErrorCode::StrandCountMismatch,
         std::to_string(strands.size()) + " strands for a word on " +
             std::to_string(w.strands));
  }
  const std::size_t m = strands.front().size();
  for (const SampledCurve& s : strands) {
    if (s.size() != m) {
      fail(ErrorCode::StrandCountMismatch,
           "strands must agree in sample count to be braided");
    }
  }
  if (w.letters.empty()) return strands;

  const std::size_t k = w.letters.size();
  // crossing_of[strand][window]: -1 not involved, else target position,
  // with over[strand][window] telling who is lifted.
  std::vector<std::vector<int>> target(strands.size(),
                                       std::vector<int>(k, -1));
  std::vector<std::vector<bool>> lifted(strands.size(),
                                        std::vector<bool>(k, false));
  std::vector<std::vector<int>> at(strands.size(), std::vector<int>(k, 0));
  {
    std::vector<int> pos(strands.size());
    for (std::size_t i = 0; i < strands.size(); ++i) pos[i] = static_cast<int>(i);
    for (std::size_t j = 0; j < k; ++j) {
      const int p = w.letters[j].generator - 1;
      const int q = p + 1;
      for (std::size_t i = 0; i < strands.size(); ++i) {
        at[i][j] = pos[i];
        if (pos[i] == p) {
          target[i][j] = q;
          lifted[i][j] = w.letters[j].sign > 0;
          pos[i] = q;
        } else if (pos[i] == q) {
          target[i][j] = p;
          lifted[i][j] = w.letters[j].sign < 0;
          pos[i] = p;
        }
      }
    }
  }

  std::vector<SampledCurve> out;
  out.reserve(strands.size());
  for (std::size_t i = 0; i < strands.size(); ++i) {
    std::vector<Point3> samples;
    samples.reserve(m);
    for (std::size_t js = 0; js < m; ++js) {
      const double u = static_cast<double>(js) / static_cast<double>(m - 1);
      auto window = static_cast<std::size_t>(u * static_cast<double>(k));
      if (window >= k) window = k - 1;
      const double local = u * static_cast<double>(k) - static_cast<double>(window);
      const int pos = at[i][window];
      const int to = target[i][window];
      if (to < 0) {
        samples.push_back(strands[static_cast<std::size_t>(pos)].eval(u));
      } else {
        Point3 p = lerp(strands[static_cast<std::size_t>(pos)].eval(u),
                        strands[static_cast<std::size_t>(to)].eval(u), local);
        // Tent profile: the strands sit 1.0 apart in z at the window centre.
        const double tent = 1.0 - std::abs(2.0 * local - 1.0);
        p.z += (lifted[i][window] ? 0.5 : -0.5) * tent;
        samples.push_back(p);
      }
    }
    out.emplace_back(std::move(samples));
  }
  return out;
}

// === persistence ===

std::string save_gesture(const Gesture& g) {
  detail::json doc;
  doc["skeleton"] = detail::skeleton_to_json(g.skeleton);
  detail::write_body(doc, g);
  return doc.dump(2) + "\n";
}

Gesture load_gesture(const std::string& text) {
  const detail::json doc = detail::parse_document(text);
  Gesture g;
  g.skeleton = detail::skeleton_from_json(detail::member(doc, "skeleton", "document"));
  detail::read_body(doc, g);
  return g;
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      fail(ErrorCode::IoError, "cannot open '" + tmp + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      fail(ErrorCode::IoError, "write failed for '" + tmp + "'");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    fail(ErrorCode::IoError, "cannot move '" + tmp + "' to '" + path + "'");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    fail(ErrorCode::IoError, "read failed for '" + path + "'");
  }
  return buf.str();
}

}  // namespace braidsong
