#include "foxcolor/arc_matrix.hpp"

#include <algorithm>

#include "foxcolor/error.hpp"

namespace foxcolor {

ArcId ArcTable::arc_at(std::size_t pos) const {
  // Arc i ends at the i-th Under visit; positions after the last Under
  // wrap into arc 0.
  for (const Arc& a : arcs) {
    if (pos <= a.end) return a.id;
  }
  return 0;
}

ArcTable compute_arcs(const GaussCode& code) {
  if (code.empty()) {
    throw Error(ErrorKind::EmptyCode, "the unknot has a single closed arc and no crossings");
  }
  const std::size_t n = code.size();
  std::vector<std::size_t> unders;
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (code[pos].pass == Pass::Under) unders.push_back(pos);
  }
  const std::size_t k = unders.size();

  ArcTable table;
  table.arcs.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    Arc& arc = table.arcs[i];
    arc.id = i;
    arc.end = unders[i];
    arc.start = (unders[(i + k - 1) % k] + 1) % n;
    const Label at_end = code[unders[i]].label;
    table.under_incoming[at_end] = i;
    table.under_outgoing[at_end] = (i + 1) % k;
  }
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (code[pos].pass != Pass::Over) continue;
    const ArcId id = table.arc_at(pos);
    table.over_arc[code[pos].label] = id;
  }
  // over_labels in walk order along each arc.
  for (Arc& arc : table.arcs) {
    for (std::size_t pos = arc.start; pos != arc.end; pos = (pos + 1) % n) {
      if (code[pos].pass == Pass::Over) arc.over_labels.push_back(code[pos].label);
    }
  }
  return table;
}

ColoringMatrix coloring_matrix(const GaussCode& code) {
  const ArcTable arcs = compute_arcs(code);
  const std::vector<Label> labels = code.labels();
  const std::size_t k = labels.size();
  ColoringMatrix out{IntMatrix(k, k), labels, {}};
  for (std::size_t c = 0; c < k; ++c) out.col_arcs.push_back(c);
  for (std::size_t r = 0; r < k; ++r) {
    const Label label = labels[r];
    out.entries(r, arcs.over_arc.at(label)) += 2;
    out.entries(r, arcs.under_incoming.at(label)) -= 1;
    out.entries(r, arcs.under_outgoing.at(label)) -= 1;
  }
  return out;
}

ColoringMatrix canonical_alternating_labeling(const GaussCode& code) {
  const ArcTable arcs = compute_arcs(code);
  for (const Arc& arc : arcs.arcs) {
    if (arc.over_labels.size() != 1) {
      throw Error(ErrorKind::NotAlternating,
                  "arc " + std::to_string(arc.id) + " has " +
                      std::to_string(arc.over_labels.size()) + " over-passes");
    }
  }
  const ColoringMatrix plain = coloring_matrix(code);
  const std::size_t k = plain.row_labels.size();
  ColoringMatrix out{IntMatrix(k, k), plain.row_labels, {}};
  for (std::size_t i = 0; i < k; ++i) {
    const ArcId col = arcs.over_arc.at(plain.row_labels[i]);
    out.col_arcs.push_back(col);
    for (std::size_t r = 0; r < k; ++r) out.entries(r, i) = plain.entries(r, col);
  }
  return out;
}

BigInt minor_gcd(const IntMatrix& m) {
  BigInt g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      g = gcd(g, minor(m, i, j));
      if (g == 1) return g;
    }
  return g;
}

BigInt diagram_determinant_gcd(const GaussCode& code) {
  if (code.empty()) return 1;
  return minor_gcd(coloring_matrix(code).entries);
}

BigInt diagram_determinant(const GaussCode& code) {
  if (code.empty()) return 1;
  if (is_alternating(code) && is_reduced(code)) {
    const IntMatrix m = coloring_matrix(code).entries;
    return abs(minor(m, m.rows() - 1, m.cols() - 1));
  }
  return diagram_determinant_gcd(code);
}

}  // namespace foxcolor
