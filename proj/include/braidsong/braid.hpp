#pragma once

#include <string>
#include <vector>

#include "braidsong/link_diagram.hpp"

namespace braidsong {

// One Artin generator occurrence. generator is 1-based (1..strands-1);
// sign +1 means strand at position `generator` passes over its right
// neighbour while they swap, sign -1 the inverse.
struct BraidLetter {
  int generator = 1;
  int sign = 1;

  bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  bool operator==(const BraidWord&) const = default;
};

// Bijection on {0..n-1}; apply(i) is where bottom position i ends up.
class Permutation {
public:
  static Permutation identity(int n);
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& images() const { return images_; }

  // Composition "this after first": apply `first`, then this.
  Permutation after(const Permutation& first) const;

  // Cycles in canonical form: each starts at its smallest element, cycles
  // ordered by that element. Fixed points are included.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;

  // 1-based cycle display, e.g. "(1 3 2)(2)".
  std::string format_cycles() const;

  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

// Parses "B<n>: i1 i2 ... ik" (negative i = inverse generator). The empty
// word "B<n>:" is valid. Throws ParseError on malformed text and
// GeneratorOutOfRange when any |i| is outside 1..n-1.
BraidWord parse_braid(const std::string& text);
std::string format_braid(const BraidWord& w);

// Throws GeneratorOutOfRange if any letter index is invalid for w.strands.
void validate_braid_word(const BraidWord& w);

// Where each bottom position ends at the top after traversing the letters
// in order. permutation(concat(w1, w2)) == permutation(w2).after(permutation(w1)).
Permutation permutation(const BraidWord& w);

// Cancels adjacent inverse pairs to a fixed point.
BraidWord free_reduce(const BraidWord& w);

// Sum of letter signs.
int writhe(const BraidWord& w);

// Number of closed curves in the braid closure = cycles of permutation(w).
int closure_components(const BraidWord& w);

// Planar diagram of the braid closure: one crossing per letter, crossing
// signs equal to letter signs, component indices matching the permutation
// cycles in canonical order.
LinkDiagram closure_diagram(const BraidWord& w);

// Concatenation; both words must share the strand count.
BraidWord concat(const BraidWord& a, const BraidWord& b);

}  // namespace braidsong
