#include "braidsong/link_diagram.hpp"

#include <sstream>

#include "braidsong/errors.hpp"

namespace braidsong {

std::string LinkDiagram::debug_dump() const {
  std::ostringstream out;
  out << "edges=" << num_edges << " components=" << component_count
      << " free_loops=" << free_loops << "\n";
  for (const Crossing& c : crossings) {
    out << "X" << c.id << (c.sign > 0 ? " +" : " -") << " edges(" << c.edges[0]
        << "," << c.edges[1] << "," << c.edges[2] << "," << c.edges[3]
        << ") comp(" << edge_component[static_cast<std::size_t>(c.edges[0])]
        << "," << edge_component[static_cast<std::size_t>(c.edges[1])] << ")\n";
  }
  return out.str();
}

void validate_diagram(const LinkDiagram& d) {
  if (d.num_edges < 0 || d.free_loops < 0 || d.component_count < 0) {
    fail(ErrorCode::MalformedDiagram, "negative counts in diagram");
  }
  if (d.edge_component.size() != static_cast<std::size_t>(d.num_edges)) {
    fail(ErrorCode::MalformedDiagram,
         "edge component table does not cover every edge");
  }
  if (d.crossings.empty() && d.num_edges == 0 && d.free_loops == 0) {
    fail(ErrorCode::MalformedDiagram, "empty diagram");
  }
  std::vector<int> uses(static_cast<std::size_t>(d.num_edges), 0);
  for (const Crossing& c : d.crossings) {
    if (c.sign != 1 && c.sign != -1) {
      fail(ErrorCode::MalformedDiagram, "crossing sign must be +1 or -1");
    }
    for (int e : c.edges) {
      if (e < 0 || e >= d.num_edges) {
        fail(ErrorCode::MalformedDiagram, "crossing references unknown edge");
      }
      ++uses[static_cast<std::size_t>(e)];
    }
    // The under-strand passes straight through (a -> c), the over-strand
    // through the other diagonal, so each diagonal stays on one component.
    const auto comp = [&](int e) {
      return d.edge_component[static_cast<std::size_t>(e)];
    };
    if (comp(c.edges[0]) != comp(c.edges[2]) ||
        comp(c.edges[1]) != comp(c.edges[3])) {
      fail(ErrorCode::MalformedDiagram,
           "component labels disagree across a crossing");
    }
  }
  for (std::size_t e = 0; e < uses.size(); ++e) {
    if (uses[e] != 2) {
      fail(ErrorCode::MalformedDiagram,
           "edge " + std::to_string(e) + " has " + std::to_string(uses[e]) +
               " crossing slots, expected 2");
    }
  }
  for (int comp : d.edge_component) {
    if (comp < 0 || comp >= d.component_count) {
      fail(ErrorCode::MalformedDiagram, "component index out of range");
    }
  }
}

}  // namespace braidsong
