#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foxcolor/exact_linalg.hpp"
#include "foxcolor/gauss_code.hpp"

namespace foxcolor {

/// Residues mod n indexed by arc id.
struct Coloring {
  std::uint64_t n = 2;
  std::vector<std::uint64_t> values;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Mod-p kernel of the coloring matrix. The constant vector always lies in
/// the span because every row of the matrix sums to zero.
struct ColoringSpace {
  std::uint64_t p = 2;
  std::vector<ModPVector> basis;
  bool contains_trivial = true;

  std::size_t dimension() const noexcept { return basis.size(); }
  /// p^dimension, saturating at UINT64_MAX.
  std::uint64_t coloring_count() const noexcept;
};

/// Finite binary operation table over {0..order-1}; table[a * order + b] = a * b.
struct Quandle {
  std::size_t order = 1;
  std::vector<std::uint32_t> table;

  std::uint32_t op(std::uint32_t a, std::uint32_t b) const { return table[a * order + b]; }
  std::uint32_t& at(std::uint32_t a, std::uint32_t b) { return table[a * order + b]; }
};

struct AxiomViolation {
  /// 1 idempotence, 2 right translations bijective, 3 right self-distributivity.
  int axiom = 0;
  std::uint32_t a = 0, b = 0, c = 0;
  std::string detail;
};

/// a * b = 2b - a (mod n).
Quandle dihedral_quandle(std::size_t n);

/// Empty iff all three axioms hold. Throws MalformedTable for entries out of
/// range or a table of the wrong size.
std::vector<AxiomViolation> check_quandle_axioms(const Quandle& q);

/// Throws CompositeModulus for non-prime p, EmptyCode for the unknot.
ColoringSpace coloring_space(const GaussCode& code, std::uint64_t p);

/// Pairwise distinct values (impossible when arcs outnumber colors).
bool is_heterogeneous(const Coloring& c);

/// First basis vector that is not a multiple of the constant vector, or
/// nothing when the space holds only trivial colorings. In a 2-dimensional
/// space every nontrivial coloring is a*v + b*T with a != 0, and such a map
/// preserves pairwise distinctness, so v decides heterogeneity of them all.
std::optional<Coloring> nontrivial_representative(const ColoringSpace& s);

/// Every nontrivial coloring is an affine image of any other: dimension 2.
bool has_fundamental_coloring(const ColoringSpace& s);

/// Every vector in the span of the basis that is not constant. p^dim - p items.
std::vector<Coloring> enumerate_nontrivial(const ColoringSpace& s);

/// Upper bound on order^k for brute_force_quandle_colorings.
inline constexpr std::uint64_t kMaxBruteForceAssignments = 10'000'000;

struct BruteForceColorings {
  std::uint64_t count = 0;
  std::vector<Coloring> colorings;  // filled only when requested
};

/// Exhaustive search over all arc assignments. Convention at every crossing:
/// under_outgoing = under_incoming * over. Independent of the linear
/// algebra, used as its oracle. Throws SearchSpaceTooLarge past the guard.
BruteForceColorings brute_force_quandle_colorings(const GaussCode& code, const Quandle& q,
                                                  bool emit_list = false);

}  // namespace foxcolor
