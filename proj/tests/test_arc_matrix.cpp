#include <doctest.h>

#include "foxcolor/arc_matrix.hpp"
#include "foxcolor/error.hpp"
#include "oracles.hpp"

using namespace foxcolor;

TEST_CASE("arcs of the trefoil") {
  const ArcTable t = compute_arcs(parse_gauss_code("O1U2O3U1O2U3"));
  REQUIRE(t.size() == 3);
  // arc 0 wraps around position 0 and ends at U2
  CHECK(t.arcs[0].end == 1);
  CHECK(t.arcs[0].over_labels == std::vector<Label>{1});
  CHECK(t.arcs[1].over_labels == std::vector<Label>{3});
  CHECK(t.arcs[2].over_labels == std::vector<Label>{2});
  CHECK(t.under_incoming.at(2) == 0);
  CHECK(t.under_outgoing.at(2) == 1);
  CHECK(t.over_arc.at(1) == 0);
  for (std::size_t pos = 0; pos < 6; ++pos) CHECK(t.arc_at(pos) < 3);
  CHECK(t.arc_at(0) == 0);
  CHECK(t.arc_at(5) == 2);
}

TEST_CASE("unknot has no arcs") {
  CHECK_THROWS_AS(compute_arcs(GaussCode{}), Error);
  CHECK(diagram_determinant(GaussCode{}) == 1);
}

TEST_CASE("coloring matrix examples") {
  const ColoringMatrix m = coloring_matrix(parse_gauss_code("O1U2O2U1"));
  CHECK(m.entries == IntMatrix{{1, -1}, {-1, 1}});
  CHECK(m.row_labels == std::vector<Label>{1, 2});

  // a kink: the over-arc is also both under-arcs
  CHECK(coloring_matrix(parse_gauss_code("O1U1")).entries == IntMatrix{{0}});

  const ColoringMatrix t = canonical_alternating_labeling(parse_gauss_code("O1U2O3U1O2U3"));
  CHECK(t.entries == IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CHECK(t.col_arcs == std::vector<ArcId>{0, 2, 1});
  CHECK_THROWS_AS(canonical_alternating_labeling(parse_gauss_code("O1O2U1U2")), Error);
}

TEST_CASE("determinants") {
  CHECK(diagram_determinant(parse_gauss_code("O1U2O3U1O2U3")) == 3);
  CHECK(diagram_determinant(parse_gauss_code("O1U2O3U4O2U1O4U3")) == 5);
  CHECK(diagram_determinant(parse_gauss_code("O1U2O2U1")) == 1);
  CHECK(diagram_determinant(parse_gauss_code("O1U1")) == 1);
  CHECK(diagram_determinant(parse_gauss_code("O1U2O3U1O2U3O4U5O6U4O5U6")) == 9);
  // non-alternating: every minor is +-1
  CHECK(diagram_determinant(parse_gauss_code("O1O2U1U2")) == 1);
  CHECK(coloring_matrix(parse_gauss_code("O1O2U1U2")).entries == IntMatrix{{1, -1}, {1, -1}});
}

TEST_CASE("4x4 fixture matrix: minors disagree, gcd is 1") {
  const IntMatrix m{{-1, -1, 2, 0}, {2, -1, -1, 0}, {2, 0, -1, -1}, {-1, 2, 0, -1}};
  CHECK(abs(minor(m, 0, 0)) == 1);
  CHECK(abs(minor(m, 3, 3)) == 3);
  CHECK(minor_gcd(m) == 1);
  CHECK(minor_gcd(IntMatrix(3, 3)) == 0);
}

TEST_CASE("matrix properties on random codes") {
  for (std::uint64_t s = 0; s < 400; ++s) {
    const std::size_t k = 1 + s % 9;
    const GaussCode c = s % 2 ? random_alternating(k, s) : random_reduced_alternating(std::max<std::size_t>(k, 3), s);
    const ColoringMatrix m = coloring_matrix(c);
    const auto walk = oracle::walk_coloring_matrix(c);
    REQUIRE(m.entries.rows() == c.k());
    for (std::size_t r = 0; r < c.k(); ++r) {
      BigInt row_sum = 0;
      for (std::size_t j = 0; j < c.k(); ++j) {
        REQUIRE(m.entries(r, j) == walk[r][j]);
        row_sum += m.entries(r, j);
      }
      REQUIRE(row_sum == 0);
    }
    // relabelling crossings permutes rows and leaves the determinant alone
    const GaussCode shuffled = oracle::shuffle_labels(c, s);
    REQUIRE(diagram_determinant_gcd(shuffled) == diagram_determinant_gcd(c));
    REQUIRE(isolated_chords(shuffled).size() == isolated_chords(c).size());
    // rotating the code permutes columns only
    REQUIRE(diagram_determinant_gcd(rotate(c, 2 * s)) == diagram_determinant_gcd(c));
    // fast path agrees with the gcd path
    REQUIRE(diagram_determinant(c) == diagram_determinant_gcd(c));
    // each arc of an alternating code has one over-pass and two under ends
    const ColoringMatrix cm = canonical_alternating_labeling(c);
    for (std::size_t j = 0; j < c.k(); ++j) {
      BigInt col_sum = 0;
      for (std::size_t i = 0; i < c.k(); ++i) col_sum += cm.entries(i, j);
      REQUIRE(col_sum == 0);
    }
  }
}
