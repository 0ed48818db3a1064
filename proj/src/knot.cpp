#include "braidsong/knot.hpp"

#include <numeric>

#include "braidsong/errors.hpp"

namespace braidsong {

namespace {

// delta = -A^2 - A^-2, the value of a disjoint loop.
LaurentPolynomial loop_value() {
  LaurentPolynomial d;
  d.add_term(4, -1);
  d.add_term(-4, -1);
  return d;
}

class LoopCounter {
public:
  explicit LoopCounter(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void merge(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  int classes() {
    int count = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      if (find(i) == i) ++count;
    }
    return count;
  }

private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LaurentPolynomial kauffman_bracket(const LinkDiagram& d) {
  validate_diagram(d);
  const int n = static_cast<int>(d.crossings.size());
  if (n > kMaxBracketCrossings) {
    fail(ErrorCode::TooManyCrossings,
         "diagram has " + std::to_string(n) + " crossings, state sum capped at " +
             std::to_string(kMaxBracketCrossings));
  }

  // Powers of delta up to the largest possible loop count.
  const int max_loops = d.num_edges + d.free_loops + 1;
  std::vector<LaurentPolynomial> delta_pow;
  delta_pow.reserve(static_cast<std::size_t>(max_loops) + 1);
  delta_pow.push_back(LaurentPolynomial::constant(1));
  const LaurentPolynomial delta = loop_value();
  for (int i = 0; i < max_loops; ++i) {
    delta_pow.push_back(delta_pow.back() * delta);
  }

  LaurentPolynomial sum;
  const auto edges = static_cast<std::size_t>(d.num_edges);
  for (std::uint32_t state = 0; state < (1u << n); ++state) {
    LoopCounter uf(edges);
    int b_count = 0;
    for (int i = 0; i < n; ++i) {
      const Crossing& c = d.crossings[static_cast<std::size_t>(i)];
      const auto a_slot = static_cast<std::size_t>(c.edges[0]);
      const auto b_slot = static_cast<std::size_t>(c.edges[1]);
      const auto c_slot = static_cast<std::size_t>(c.edges[2]);
      const auto d_slot = static_cast<std::size_t>(c.edges[3]);
      if (state & (1u << i)) {
        ++b_count;  // B-smoothing joins a-d and b-c
        uf.merge(a_slot, d_slot);
        uf.merge(b_slot, c_slot);
      } else {
        uf.merge(a_slot, b_slot);  // A-smoothing joins a-b and c-d
        uf.merge(c_slot, d_slot);
      }
    }
    const int loops = uf.classes() + d.free_loops;
    const int exponent = n - 2 * b_count;  // a_count - b_count
    sum = sum + LaurentPolynomial::monomial(1, 2 * exponent) *
                    delta_pow[static_cast<std::size_t>(loops - 1)];
  }
  return sum;
}

LaurentPolynomial jones(const LinkDiagram& d, int writhe) {
  const LaurentPolynomial bracket = kauffman_bracket(d);
  // (-A)^(-3w) * bracket, then t = A^-4 on exponents.
  const std::int64_t sign = (writhe % 2 == 0) ? 1 : -1;
  LaurentPolynomial normalized =
      LaurentPolynomial::monomial(sign, -6 * writhe) * bracket;
  LaurentPolynomial out;
  for (const auto& [half_exp, coeff] : normalized.terms()) {
    // A half-exponents of the normalized bracket are multiples of 4, so the
    // t half-exponent -half_exp/4 stays integral.
    if (half_exp % 4 != 0) {
      fail(ErrorCode::MalformedDiagram,
           "bracket exponent not reducible under t = A^-4");
    }
    out.add_term(-half_exp / 4, coeff);
  }
  return out;
}

LaurentPolynomial unlink_jones(int components) {
  if (components < 1) {
    fail(ErrorCode::MalformedDiagram, "unlink needs at least one component");
  }
  // (-t^1/2 - t^-1/2)^(c-1)
  LaurentPolynomial loop;
  loop.add_term(1, -1);
  loop.add_term(-1, -1);
  return loop.pow(static_cast<unsigned>(components - 1));
}

int linking_number(const LinkDiagram& d, int component_a, int component_b) {
  validate_diagram(d);
  if (component_a == component_b) {
    fail(ErrorCode::SameComponent,
         "linking number needs two distinct components");
  }
  for (int c : {component_a, component_b}) {
    if (c < 0 || c >= d.component_count) {
      fail(ErrorCode::ComponentNotFound,
           "component " + std::to_string(c) + " not in diagram with " +
               std::to_string(d.component_count) + " components");
    }
  }
  int sum = 0;
  for (const Crossing& c : d.crossings) {
    const int under = d.edge_component[static_cast<std::size_t>(c.edges[0])];
    const int over = d.edge_component[static_cast<std::size_t>(c.edges[1])];
    const bool between = (under == component_a && over == component_b) ||
                         (under == component_b && over == component_a);
    if (between) sum += c.sign;
  }
  // Crossings between two closed components pair up; the half-sum is exact.
  return sum / 2;
}

Knottedness certify_knotted(const LinkDiagram& d, int writhe) {
  const LaurentPolynomial v = jones(d, writhe);
  return v == unlink_jones(d.component_count) ? Knottedness::PossiblyUnknot
                                              : Knottedness::Knotted;
}

}  // namespace braidsong
