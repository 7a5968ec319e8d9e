#include "foxcolor/fox_coloring.hpp"

#include <algorithm>
#include <limits>

#include "foxcolor/arc_matrix.hpp"
#include "foxcolor/error.hpp"

namespace foxcolor {

std::uint64_t ColoringSpace::coloring_count() const noexcept {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / p) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= p;
  }
  return out;
}

Quandle dihedral_quandle(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::MalformedTable, "quandle order must be >= 1");
  Quandle q{n, std::vector<std::uint32_t>(n * n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) q.table[a * n + b] = static_cast<std::uint32_t>((2 * b + n - a) % n);
  return q;
}

std::vector<AxiomViolation> check_quandle_axioms(const Quandle& q) {
  const std::size_t n = q.order;
  if (n == 0 || q.table.size() != n * n) {
    throw Error(ErrorKind::MalformedTable, "table must hold order^2 entries");
  }
  for (std::size_t i = 0; i < q.table.size(); ++i) {
    if (q.table[i] >= n) {
      throw Error(ErrorKind::MalformedTable, "entry " + std::to_string(q.table[i]) + " at (" +
                                                 std::to_string(i / n) + ", " +
                                                 std::to_string(i % n) + ") out of range");
    }
  }
  const auto N = static_cast<std::uint32_t>(n);
  std::vector<AxiomViolation> out;
  for (std::uint32_t a = 0; a < N; ++a) {
    if (q.op(a, a) != a) {
      out.push_back({1, a, a, 0, "a*a = " + std::to_string(q.op(a, a)) + " != a"});
    }
  }
  // x * a = b must have exactly one solution x for each (a, b).
  for (std::uint32_t a = 0; a < N; ++a) {
    std::vector<int> hits(n, 0);
    for (std::uint32_t x = 0; x < N; ++x) ++hits[q.op(x, a)];
    for (std::uint32_t b = 0; b < N; ++b) {
      if (hits[b] != 1) {
        out.push_back({2, a, b, 0, "x*a = b has " + std::to_string(hits[b]) + " solutions"});
      }
    }
  }
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b)
      for (std::uint32_t c = 0; c < N; ++c) {
        const auto lhs = q.op(q.op(a, b), c);
        const auto rhs = q.op(q.op(a, c), q.op(b, c));
        if (lhs != rhs) {
          out.push_back({3, a, b, c,
                         "(a*b)*c = " + std::to_string(lhs) + " but (a*c)*(b*c) = " +
                             std::to_string(rhs)});
        }
      }
  return out;
}

ColoringSpace coloring_space(const GaussCode& code, std::uint64_t p) {
  ColoringSpace s;
  s.p = p;
  s.basis = nullspace_mod_p(coloring_matrix(code).entries, p);
  s.contains_trivial = true;
  return s;
}

bool is_heterogeneous(const Coloring& c) {
  std::vector<std::uint64_t> v = c.values;
  for (auto& x : v) x %= c.n;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

namespace {

bool is_constant(const std::vector<std::uint64_t>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

}  // namespace

std::optional<Coloring> nontrivial_representative(const ColoringSpace& s) {
  if (s.dimension() < 2) return std::nullopt;
  for (const ModPVector& v : s.basis) {
    if (!is_constant(v.entries)) return Coloring{s.p, v.entries};
  }
  return std::nullopt;
}

bool has_fundamental_coloring(const ColoringSpace& s) { return s.dimension() == 2; }

std::vector<Coloring> enumerate_nontrivial(const ColoringSpace& s) {
  if (s.coloring_count() > kMaxBruteForceAssignments) {
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "span of " + std::to_string(s.dimension()) + " vectors mod " + std::to_string(s.p));
  }
  const std::size_t len = s.basis.empty() ? 0 : s.basis.front().entries.size();
  std::vector<Coloring> out;
  std::vector<std::uint64_t> coeff(s.dimension(), 0);
  const std::uint64_t total = s.coloring_count();
  for (std::uint64_t step = 0; step < total; ++step) {
    std::vector<std::uint64_t> v(len, 0);
    for (std::size_t b = 0; b < coeff.size(); ++b) {
      if (coeff[b] == 0) continue;
      for (std::size_t i = 0; i < len; ++i) v[i] = (v[i] + coeff[b] * s.basis[b].entries[i]) % s.p;
    }
    if (!is_constant(v)) out.push_back(Coloring{s.p, std::move(v)});
    for (std::size_t b = 0; b < coeff.size() && ++coeff[b] == s.p; ++b) coeff[b] = 0;
  }
  return out;
}

namespace {

struct CrossingRelation {
  ArcId incoming, outgoing, over;
};

class ColoringSearch {
 public:
  ColoringSearch(const Quandle& q, std::size_t arcs, std::vector<std::vector<CrossingRelation>> due,
                 bool emit)
      : q_(q), values_(arcs, 0), due_(std::move(due)), emit_(emit) {}

  BruteForceColorings run() {
    descend(0);
    return std::move(result_);
  }

 private:
  void descend(std::size_t depth) {
    if (depth == values_.size()) {
      ++result_.count;
      if (emit_) {
        result_.colorings.push_back(
            Coloring{q_.order, std::vector<std::uint64_t>(values_.begin(), values_.end())});
      }
      return;
    }
    for (std::uint32_t colour = 0; colour < q_.order; ++colour) {
      values_[depth] = colour;
      const bool ok = std::all_of(due_[depth].begin(), due_[depth].end(), [&](const auto& rel) {
        return values_[rel.outgoing] == q_.op(values_[rel.incoming], values_[rel.over]);
      });
      if (ok) descend(depth + 1);
    }
  }

  const Quandle& q_;
  std::vector<std::uint32_t> values_;
  // due_[d]: relations whose highest arc id is d, checked once arc d is set.
  std::vector<std::vector<CrossingRelation>> due_;
  bool emit_;
  BruteForceColorings result_;
};

}  // namespace

BruteForceColorings brute_force_quandle_colorings(const GaussCode& code, const Quandle& q,
                                                  bool emit_list) {
  const ArcTable arcs = compute_arcs(code);
  const std::size_t k = arcs.size();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < k; ++i) {
    space *= q.order;
    if (space > kMaxBruteForceAssignments) {
      throw Error(ErrorKind::SearchSpaceTooLarge,
                  std::to_string(q.order) + "^" + std::to_string(k) + " assignments exceed " +
                      std::to_string(kMaxBruteForceAssignments));
    }
  }
  std::vector<std::vector<CrossingRelation>> due(k);
  for (Label label : code.labels()) {
    CrossingRelation rel{arcs.under_incoming.at(label), arcs.under_outgoing.at(label),
                         arcs.over_arc.at(label)};
    due[std::max({rel.incoming, rel.outgoing, rel.over})].push_back(rel);
  }
  return ColoringSearch(q, k, std::move(due), emit_list).run();
}

}  // namespace foxcolor
