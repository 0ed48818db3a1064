#include "braidsong/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "braidsong/errors.hpp"

namespace braidsong {

// === permutations ===

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() ||
        seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::after(const Permutation& first) const {
  if (first.size() != size()) {
    throw std::invalid_argument("permutation sizes differ");
  }
  std::vector<int> images(images_.size());
  for (int i = 0; i < size(); ++i) {
    images[static_cast<std::size_t>(i)] = apply(first.apply(i));
  }
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int cur = start;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      cycle.push_back(cur);
      cur = apply(cur);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::cycle_count() const {
  return static_cast<int>(cycles().size());
}

std::string Permutation::format_cycles() const {
  std::ostringstream out;
  for (const auto& cycle : cycles()) {
    out << "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << " ";
      out << cycle[i] + 1;
    }
    out << ")";
  }
  return out.str();
}

// === words ===

BraidWord parse_braid(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  in >> head;
  if (head.size() < 2 || head.front() != 'B') {
    fail(ErrorCode::ParseError,
         "braid word must start with 'B<strands>:', got '" + text + "'");
  }
  std::string body = head.substr(1);
  // The colon may be glued to the strand count or stand alone.
  bool colon = false;
  if (!body.empty() && body.back() == ':') {
    colon = true;
    body.pop_back();
  }
  int strands = 0;
  {
    std::istringstream num(body);
    if (!(num >> strands) || !num.eof()) {
      fail(ErrorCode::ParseError, "bad strand count in '" + head + "'");
    }
  }
  if (strands < 1) {
    fail(ErrorCode::ParseError, "strand count must be at least 1");
  }
  if (!colon) {
    std::string sep;
    if (!(in >> sep) || sep != ":") {
      fail(ErrorCode::ParseError, "missing ':' after strand count");
    }
  }
  BraidWord w{strands, {}};
  std::string token;
  while (in >> token) {
    int value = 0;
    std::istringstream num(token);
    if (!(num >> value) || !num.eof()) {
      fail(ErrorCode::ParseError, "bad generator token '" + token + "'");
    }
    const int index = std::abs(value);
    if (index < 1 || index > strands - 1) {
      fail(ErrorCode::GeneratorOutOfRange,
           "generator " + token + " out of range for " +
               std::to_string(strands) + " strands");
    }
    w.letters.push_back({index, value > 0 ? 1 : -1});
  }
  return w;
}

std::string format_braid(const BraidWord& w) {
  std::ostringstream out;
  out << "B" << w.strands << ":";
  for (const BraidLetter& l : w.letters) {
    out << " " << l.sign * l.generator;
  }
  return out.str();
}

void validate_braid_word(const BraidWord& w) {
  if (w.strands < 1) {
    fail(ErrorCode::ParseError, "strand count must be at least 1");
  }
  for (const BraidLetter& l : w.letters) {
    if (l.generator < 1 || l.generator > w.strands - 1) {
      fail(ErrorCode::GeneratorOutOfRange,
           "generator " + std::to_string(l.generator) + " out of range for " +
               std::to_string(w.strands) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) {
      fail(ErrorCode::ParseError, "letter sign must be +1 or -1");
    }
  }
}

Permutation permutation(const BraidWord& w) {
  validate_braid_word(w);
  // strand_at[p] = bottom position of the strand currently at position p.
  std::vector<int> strand_at(static_cast<std::size_t>(w.strands));
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (const BraidLetter& l : w.letters) {
    std::swap(strand_at[static_cast<std::size_t>(l.generator - 1)],
              strand_at[static_cast<std::size_t>(l.generator)]);
  }
  std::vector<int> images(static_cast<std::size_t>(w.strands));
  for (int pos = 0; pos < w.strands; ++pos) {
    images[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(pos)])] =
        pos;
  }
  return Permutation(std::move(images));
}

BraidWord free_reduce(const BraidWord& w) {
  validate_braid_word(w);
  std::vector<BraidLetter> stack;
  for (const BraidLetter& l : w.letters) {
    if (!stack.empty() && stack.back().generator == l.generator &&
        stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return {w.strands, std::move(stack)};
}

int writhe(const BraidWord& w) {
  int sum = 0;
  for (const BraidLetter& l : w.letters) sum += l.sign;
  return sum;
}

int closure_components(const BraidWord& w) {
  return permutation(w).cycle_count();
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) {
    fail(ErrorCode::StrandCountMismatch,
         "cannot concatenate words on different strand counts");
  }
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

// === closure diagram ===

namespace {

// Tiny union-find over provisional edge ids.
class EdgeUnion {
public:
  explicit EdgeUnion(std::size_t n) : parent_(n) {
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

private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LinkDiagram closure_diagram(const BraidWord& w) {
  validate_braid_word(w);
  const auto n = static_cast<std::size_t>(w.strands);
  const std::size_t total_edges = n + 2 * w.letters.size();

  std::vector<int> cur_edge(n);        // provisional edge at each position
  std::vector<int> cur_strand(n);      // bottom position of strand there
  std::iota(cur_edge.begin(), cur_edge.end(), 0);
  std::iota(cur_strand.begin(), cur_strand.end(), 0);

  std::vector<int> edge_strand(total_edges, 0);
  for (std::size_t i = 0; i < n; ++i) edge_strand[i] = static_cast<int>(i);

  struct RawCrossing {
    std::array<int, 4> edges;
    int sign;
  };
  std::vector<RawCrossing> raw;
  raw.reserve(w.letters.size());

  int next_edge = static_cast<int>(n);
  for (const BraidLetter& l : w.letters) {
    const auto p = static_cast<std::size_t>(l.generator - 1);
    const auto q = p + 1;
    const int new_p = next_edge++;
    const int new_q = next_edge++;
    if (l.sign > 0) {
      // Over-strand enters at p: tuple (in-under, out-over, out-under, in-over).
      raw.push_back({{cur_edge[q], new_q, new_p, cur_edge[p]}, +1});
    } else {
      // Over-strand enters at q: tuple (in-under, in-over, out-under, out-over).
      raw.push_back({{cur_edge[p], cur_edge[q], new_q, new_p}, -1});
    }
    edge_strand[static_cast<std::size_t>(new_p)] = cur_strand[q];
    edge_strand[static_cast<std::size_t>(new_q)] = cur_strand[p];
    cur_edge[p] = new_p;
    cur_edge[q] = new_q;
    std::swap(cur_strand[p], cur_strand[q]);
  }

  // Close each position: the edge leaving the top joins the edge that
  // entered at the bottom of the same position.
  EdgeUnion uf(total_edges);
  for (std::size_t pos = 0; pos < n; ++pos) {
    uf.merge(static_cast<std::size_t>(cur_edge[pos]), pos);
  }

  // Components = cycles of the closure permutation, in canonical order.
  const Permutation perm = permutation(w);
  std::vector<int> strand_component(n, -1);
  {
    int index = 0;
    for (const auto& cycle : perm.cycles()) {
      for (int s : cycle) strand_component[static_cast<std::size_t>(s)] = index;
      ++index;
    }
  }

  // Compact the classes that actually touch crossings into final edge ids.
  std::vector<int> class_id(total_edges, -1);
  LinkDiagram d;
  d.component_count = perm.cycle_count();
  int next_final = 0;
  const auto final_id = [&](int provisional) {
    const std::size_t root = uf.find(static_cast<std::size_t>(provisional));
    if (class_id[root] < 0) {
      class_id[root] = next_final++;
      d.edge_component.push_back(
          strand_component[static_cast<std::size_t>(edge_strand[root])]);
    }
    return class_id[root];
  };
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Crossing c;
    c.id = static_cast<int>(i);
    c.sign = raw[i].sign;
    for (int k = 0; k < 4; ++k) {
      c.edges[static_cast<std::size_t>(k)] =
          final_id(raw[i].edges[static_cast<std::size_t>(k)]);
    }
    d.crossings.push_back(c);
  }
  d.num_edges = next_final;

  // Positions never involved in a crossing close into crossing-free loops.
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (cur_edge[pos] == static_cast<int>(pos)) ++d.free_loops;
  }

  validate_diagram(d);
  return d;
}

}  // namespace braidsong
