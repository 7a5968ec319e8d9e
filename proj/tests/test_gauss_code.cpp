#include <doctest.h>

#include "foxcolor/error.hpp"
#include "foxcolor/gauss_code.hpp"
#include "oracles.hpp"

using namespace foxcolor;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected foxcolor::Error");
  return ErrorKind::InvalidConfig;
}

const char* const kTrefoil = "O1U2O3U1O2U3";
const char* const kFigureEight = "O1U2O3U4O2U1O4U3";

}  // namespace

TEST_CASE("parse transcribes tokens in order") {
  const GaussCode c = parse_gauss_code(kTrefoil);
  CHECK(c.k() == 3);
  const std::vector<std::pair<Label, Pass>> expected = {{1, Pass::Over}, {2, Pass::Under}, {3, Pass::Over},
                                                        {1, Pass::Under}, {2, Pass::Over}, {3, Pass::Under}};
  REQUIRE(c.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(c[i].label == expected[i].first);
    CHECK(c[i].pass == expected[i].second);
    CHECK_FALSE(c[i].sign.has_value());
  }
}

TEST_CASE("parse accepts whitespace, signs and the empty unknot") {
  CHECK(parse_gauss_code("").k() == 0);
  CHECK(parse_gauss_code("  ").empty());
  CHECK(parse_gauss_code("O1 U2 O3 U1 O2 U3") == parse_gauss_code(kTrefoil));
  const GaussCode s = parse_gauss_code("O1+U2-O2-U1+");
  CHECK(s[0].sign == Sign::Positive);
  CHECK(s[1].sign == Sign::Negative);
  CHECK(s.str() == "O1+U2-O2-U1+");
  // U+2212 minus sign
  CHECK(parse_gauss_code("O1\xE2\x88\x92U1\xE2\x88\x92").str() == "O1-U1-");
  // labels need not be contiguous
  CHECK(parse_gauss_code("O7U12O12U7").labels() == std::vector<Label>{7, 12});
}

TEST_CASE("parse errors") {
  CHECK(kind_of([] { parse_gauss_code("O1U2O1U2"); }) == ErrorKind::LabelArityError);
  CHECK(kind_of([] { parse_gauss_code("O1U2"); }) == ErrorKind::LabelArityError);
  CHECK(kind_of([] { parse_gauss_code("O1"); }) == ErrorKind::LabelArityError);
  CHECK(kind_of([] { parse_gauss_code("X1U1"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { parse_gauss_code("O0U0"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { parse_gauss_code("OU1"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { parse_gauss_code("O01U1"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { parse_gauss_code("O1+U1-"); }) == ErrorKind::SignConflict);
  CHECK(kind_of([] { parse_gauss_code("O1+U1"); }) == ErrorKind::SignConflict);
}

TEST_CASE("is_alternating") {
  CHECK(is_alternating(parse_gauss_code(kTrefoil)));
  CHECK_FALSE(is_alternating(parse_gauss_code("O1O2U1U2")));
  CHECK(is_alternating(parse_gauss_code("O1U2O2U1")));
  CHECK(is_alternating(parse_gauss_code("")));
  CHECK(is_alternating(parse_gauss_code("O1U1")));
  // the wrap-around pair counts
  CHECK_FALSE(is_alternating(parse_gauss_code("U1O2U2O3O1U3")));
}

TEST_CASE("isolated chords") {
  CHECK(isolated_chords(parse_gauss_code(kTrefoil)).empty());
  CHECK(isolated_chords(parse_gauss_code(kFigureEight)).empty());
  CHECK(isolated_chords(parse_gauss_code("O1U1")) == std::set<Label>{1});
  // nested chords do not interleave
  CHECK(isolated_chords(parse_gauss_code("O1U2O2U1")) == std::set<Label>{1, 2});
  CHECK(isolated_chords(parse_gauss_code("O1U2O2U1O3U3")) == std::set<Label>{1, 2, 3});
  // trefoil with a kink: only the kink is isolated
  CHECK(isolated_chords(parse_gauss_code("O1U2O3U1O2U3O4U4")) == std::set<Label>{4});
  CHECK(isolated_chords(parse_gauss_code("")).empty());
}

TEST_CASE("reduced needs k >= 2 and no isolated chord") {
  CHECK(is_reduced(parse_gauss_code(kTrefoil)));
  CHECK_FALSE(is_reduced(parse_gauss_code("O1U1")));
  CHECK_FALSE(is_reduced(parse_gauss_code("")));
  CHECK_FALSE(is_reduced(parse_gauss_code("O1U2O2U1")));
}

TEST_CASE("mirror") {
  CHECK(mirror(parse_gauss_code(kTrefoil)).str() == "U1O2U3O1U2O3");
  CHECK(mirror(parse_gauss_code("")).empty());
  CHECK(mirror(parse_gauss_code("O1U2O2U1")).str() == "U1O2U2O1");
  CHECK(mirror(parse_gauss_code("O1+U1+")).str() == "U1-O1-");
}

TEST_CASE("connected sum") {
  const GaussCode t = parse_gauss_code(kTrefoil);
  const GaussCode s = connected_sum(t, t);
  CHECK(s.str() == "O1U2O3U1O2U3O4U5O6U4O5U6");
  CHECK(s.k() == 6);
  CHECK(connected_sum(t, GaussCode{}) == t);
  CHECK(connected_sum(GaussCode{}, t) == t);
  // b is relabelled canonically before shifting
  CHECK(connected_sum(parse_gauss_code("O1U1"), parse_gauss_code("O9U9")).str() == "O1U1O2U2");
  // rotation by an even offset keeps alternation
  const GaussCode r = connected_sum(t, parse_gauss_code(kFigureEight), 2);
  CHECK(is_alternating(r));
  CHECK(r.k() == 7);
  CHECK(isolated_chords(r).empty());
}

TEST_CASE("summand split") {
  const auto split = find_summand_split(parse_gauss_code("O1U2O3U1O2U3O4U5O6U4O5U6"));
  REQUIRE(split);
  CHECK(split->first.str() == kTrefoil);
  CHECK(split->second.str() == kTrefoil);
  CHECK_FALSE(find_summand_split(parse_gauss_code(kTrefoil)));
  CHECK_FALSE(find_summand_split(parse_gauss_code("")));
  CHECK_FALSE(find_summand_split(parse_gauss_code("O1U1")));
  // least first cut wins: the inner chord of nested pair {1 {2}} splits at 1|3
  const auto nested = find_summand_split(parse_gauss_code("O1U2O2U1"));
  REQUIRE(nested);
  CHECK(nested->first.str() == "U1O1");
  CHECK(nested->second.str() == "U1O1");
}

TEST_CASE("classify") {
  const DiagramClass d = classify(parse_gauss_code("O1U2O3U1O2U3O4U4"));
  CHECK(d.alternating);
  CHECK_FALSE(d.reduced);
  CHECK(d.isolated_chords == std::set<Label>{4});
  REQUIRE(d.summand_split);
  CHECK(d.summand_split->second.str() == "O1U1");
}

TEST_CASE("random reduced alternating codes") {
  SUBCASE("deterministic in (k, seed)") {
    CHECK(random_reduced_alternating(5, 42) == random_reduced_alternating(5, 42));
    CHECK(random_reduced_alternating(7, 1) != random_reduced_alternating(7, 2));
  }
  SUBCASE("k = 2 has no reduced alternating code") {
    // Alternation gives every chord an odd span, so the span of one of two
    // chords holds 0 or 2 visits of the other: never an interleaving.
    CHECK(kind_of([] { random_reduced_alternating(2, 9); }) == ErrorKind::GenerationExhausted);
  }
  SUBCASE("k < 2 rejected") { CHECK(kind_of([] { random_reduced_alternating(1, 0); }) == ErrorKind::TooSmall); }
  SUBCASE("10,000 outputs over k in [3,10] are alternating and reduced") {
    for (std::uint64_t s = 0; s < 10'000; ++s) {
      const std::size_t k = 3 + s % 8;
      const GaussCode c = random_reduced_alternating(k, s);
      REQUIRE(c.k() == k);
      REQUIRE(is_alternating(c));
      REQUIRE(isolated_chords(c).empty());
      REQUIRE(c == canonical_labels(c));
    }
  }
}

TEST_CASE("properties over random alternating codes") {
  for (std::uint64_t s = 0; s < 600; ++s) {
    const GaussCode c = random_alternating(1 + s % 9, s * 977);
    // round trip through the compact form
    REQUIRE(parse_gauss_code(c.str()) == c);
    // mirror is an involution preserving alternation and isolated chords
    REQUIRE(mirror(mirror(c)) == c);
    REQUIRE(is_alternating(mirror(c)) == is_alternating(c));
    REQUIRE(isolated_chords(mirror(c)) == isolated_chords(c));
    // independent pairwise-crossing oracle
    REQUIRE(isolated_chords(c) == oracle::isolated_by_pairs(c));
    // chord structure is rotation invariant
    REQUIRE(isolated_chords(rotate(c, s)) == isolated_chords(c));
    // any nonempty sum splits
    const GaussCode d = random_alternating(1 + (s / 3) % 6, s + 5);
    REQUIRE(find_summand_split(connected_sum(c, d, 2 * s)));
  }
}
