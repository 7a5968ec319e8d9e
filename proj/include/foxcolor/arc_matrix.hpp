#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "foxcolor/bigint.hpp"
#include "foxcolor/exact_linalg.hpp"
#include "foxcolor/gauss_code.hpp"

namespace foxcolor {

/// Arc ids are 0-based indices into ArcTable::arcs.
using ArcId = std::size_t;

/// A strand from one Under visit to the next, passing only Over visits.
struct Arc {
  ArcId id = 0;
  /// Position just after the Under visit that starts the arc.
  std::size_t start = 0;
  /// Position of the Under visit that ends the arc.
  std::size_t end = 0;
  std::vector<Label> over_labels;
};

/// Arcs are numbered in cyclic order; arc 0 is the one containing position
/// 0 of the code.
struct ArcTable {
  std::vector<Arc> arcs;
  std::map<Label, ArcId> under_incoming;
  std::map<Label, ArcId> under_outgoing;
  std::map<Label, ArcId> over_arc;

  std::size_t size() const noexcept { return arcs.size(); }
  /// Arc containing code position `pos`.
  ArcId arc_at(std::size_t pos) const;
};

/// k x k coloring matrix: rows are crossings in ascending label order,
/// columns are arcs.
struct ColoringMatrix {
  IntMatrix entries;
  std::vector<Label> row_labels;
  std::vector<ArcId> col_arcs;
};

/// Throws EmptyCode for the unknot.
ArcTable compute_arcs(const GaussCode& code);

/// Row c: +2 at c's over-arc, -1 at each of its two under-arcs, summed
/// where they coincide. Columns in arc id order.
ColoringMatrix coloring_matrix(const GaussCode& code);

/// Columns permuted so column i is the arc passing over row i's crossing.
/// Throws NotAlternating unless every arc has exactly one over-pass.
ColoringMatrix canonical_alternating_labeling(const GaussCode& code);

/// gcd of |minor| over all k^2 minors of a square matrix (0 when all vanish).
BigInt minor_gcd(const IntMatrix& m);

/// Unknot gives 1. Reduced alternating codes take the single-minor fast
/// path; everything else takes the gcd of all minors.
BigInt diagram_determinant(const GaussCode& code);

/// Always the gcd of all minors; no fast path.
BigInt diagram_determinant_gcd(const GaussCode& code);

}  // namespace foxcolor
