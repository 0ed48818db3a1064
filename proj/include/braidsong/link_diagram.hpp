#pragma once

#include <array>
#include <string>
#include <vector>

namespace braidsong {

// One crossing of a planar diagram. `edges` lists the four incident edge ids
// counterclockwise starting from the incoming under-strand:
//
//        c   b
//         \ /        under-strand runs a -> c
//          X         over-strand runs d -> b when sign = +1,
//         / \        and b -> d when sign = -1
//        d   a
//
// sign is +1 when rotating the over-strand's direction a quarter turn
// counterclockwise aligns it with the under-strand's direction.
struct Crossing {
  int id = 0;
  std::array<int, 4> edges{};  // (a, b, c, d)
  int sign = 0;
};

// Combinatorial closed-curve diagram. Edges are the arcs between crossing
// passages, numbered 0..num_edges-1; each edge id appears exactly twice among
// crossing slots. Closed curves that meet no crossing at all are not edges;
// they are counted in free_loops (and still own a component index).
struct LinkDiagram {
  std::vector<Crossing> crossings;
  int num_edges = 0;
  std::vector<int> edge_component;  // edge id -> component index
  int component_count = 0;          // includes free loops
  int free_loops = 0;

  std::string debug_dump() const;  // one crossing per line
};

// Throws MalformedDiagram when the combinatorial invariants fail.
void validate_diagram(const LinkDiagram& d);

}  // namespace braidsong
