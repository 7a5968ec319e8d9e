// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "foxcolor/arc_matrix.hpp"
#include "foxcolor/cli.hpp"
#include "foxcolor/euler_graph.hpp"
#include "foxcolor/fox_coloring.hpp"
#include "foxcolor/kh_verify.hpp"
#include "foxcolor/splitmix.hpp"

using namespace foxcolor;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr std::size_t kCorpusSize = 500;
constexpr std::size_t kCorpusKMin = 3;
constexpr std::size_t kCorpusKMax = 10;
constexpr std::size_t kConnectedSums = 100;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  // Runtime bound in seconds; nullopt means none.
  std::optional<double> limit;
  std::function<Outcome()> body;
};

std::vector<GaussCode> g_corpus;
std::vector<BigInt> g_dets;

Outcome fixture_minors() {
  Outcome o;
  const IntMatrix m{{-1, -1, 2, 0}, {2, -1, -1, 0}, {2, 0, -1, -1}, {-1, 2, 0, -1}};
  const BigInt m11 = abs(minor(m, 0, 0)), m44 = abs(minor(m, 3, 3)), g = minor_gcd(m);
  if (m11 != 1) o.fail("|minor(1,1)| = " + to_decimal(m11));
  if (m44 != 3) o.fail("|minor(4,4)| = " + to_decimal(m44));
  if (g != 1) o.fail("gcd determinant = " + to_decimal(g));
  if (o.pass) o.detail = "|m11|=1 |m44|=3 gcd=1";
  return o;
}

Outcome trefoil() {
  Outcome o;
  const GaussCode t = parse_gauss_code("O1U2O3U1O2U3");
  if (diagram_determinant(t) != 3) o.fail("determinant " + to_decimal(diagram_determinant(t)));
  const ColoringSpace s = coloring_space(t, 3);
  if (s.dimension() != 2) o.fail("dimension " + std::to_string(s.dimension()));
  const auto brute = brute_force_quandle_colorings(t, dihedral_quandle(3));
  if (s.coloring_count() != 9 || brute.count != 9) o.fail("coloring count " + std::to_string(brute.count));
  const auto nontrivial = enumerate_nontrivial(s);
  if (nontrivial.size() != 6) o.fail("nontrivial count " + std::to_string(nontrivial.size()));
  for (const auto& c : nontrivial)
    if (!is_heterogeneous(c)) o.fail("homogeneous nontrivial coloring");
  const DirectedMultigraph g = build_euler_graph(t);
  if (euler_circuit_count_best(g) != 3) o.fail("BEST count");
  if (euler_circuit_count_bruteforce(g) != 3) o.fail("brute-force circuit count");
  if (o.pass) o.detail = "det=3 dim=2 colorings=9 nontrivial=6 euler=3";
  return o;
}

Outcome figure_eight() {
  Outcome o;
  const GaussCode f = parse_gauss_code("O1U2O3U4O2U1O4U3");
  const KHReport r = verify_kh(f);
  if (r.determinant != 5) o.fail("determinant " + to_decimal(r.determinant));
  if (r.heterogeneous != true) o.fail("not heterogeneous");
  const auto all = enumerate_nontrivial(coloring_space(f, 5));
  if (all.size() != 20) o.fail("nontrivial count " + std::to_string(all.size()));
  for (const auto& c : all)
    if (!is_heterogeneous(c)) o.fail("homogeneous nontrivial coloring");
  if (o.pass) o.detail = "det=5 heterogeneous nontrivial=20";
  return o;
}

Outcome cofactor_corpus() {
  Outcome o;
  std::size_t failures = 0;
  for (const GaussCode& c : g_corpus) {
    const Lemma22Report r = lemma22_check(c);
    const bool ok = r.cofactors_equal && r.identity_holds && r.fast_path_agrees &&
                    r.det_plus_ones == BigInt(c.k() * c.k()) * r.common_cofactor;
    if (!ok) {
      ++failures;
      o.fail("first failure " + c.str());
    }
  }
  o.detail = std::to_string(g_corpus.size()) + " codes, " + std::to_string(failures) + " failures" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome determinant_bound() {
  Outcome o;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < g_corpus.size(); ++i) {
    if (g_dets[i] < g_corpus[i].k()) {
      ++failures;
      o.fail("first failure " + g_corpus[i].str());
    }
  }
  o.detail = std::to_string(failures) + " codes with det < k" + (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome connected_sums() {
  Outcome o;
  SplitMix64 rng(kCorpusSeed ^ 0x5u);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < kConnectedSums; ++t) {
    const std::size_t i = rng.below(g_corpus.size()), j = rng.below(g_corpus.size());
    const GaussCode& b = g_corpus[j];
    const GaussCode sum = connected_sum(g_corpus[i], b, 2 * rng.below(b.k()));
    if (diagram_determinant_gcd(sum) != g_dets[i] * g_dets[j]) {
      ++failures;
      o.fail("first failure " + sum.str());
    }
  }
  o.detail = std::to_string(kConnectedSums) + " sums, " + std::to_string(failures) + " failures" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome euler_equivalence() {
  Outcome o;
  std::size_t brute = 0, failures = 0;
  for (std::size_t i = 0; i < g_corpus.size(); ++i) {
    const DirectedMultigraph g = build_euler_graph(g_corpus[i]);
    const BigInt best = euler_circuit_count_best(g);
    bool ok = best == g_dets[i];
    if (g.edges.size() <= kMaxBruteForceEdges) {
      ++brute;
      ok = ok && euler_circuit_count_bruteforce(g) == best;
    }
    if (!ok) {
      ++failures;
      o.fail("first failure " + g_corpus[i].str());
    }
  }
  o.detail = std::to_string(failures) + " failures, brute force on " + std::to_string(brute) + " graphs" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome theorem_campaign() {
  Outcome o;
  std::size_t subset = 0, enumerated = 0;
  for (std::size_t i = 0; i < g_corpus.size(); ++i) {
    if (!is_prime(g_dets[i])) continue;
    ++subset;
    const KHReport r = verify_kh(g_corpus[i]);
    if (r.enumerated_nontrivial) ++enumerated;
    const bool ok = r.premises_hold() && r.passed() && r.coloring_dimension == 2u && r.heterogeneous == true &&
                    (g_dets[i] > kFullEnumerationPrimeLimit || r.enumerated_nontrivial.has_value());
    if (!ok) o.fail("first failure " + g_corpus[i].str());
  }
  if (subset == 0) o.fail("no prime-determinant codes in the corpus");
  o.detail = "prime-determinant subset " + std::to_string(subset) + ", fully enumerated " +
             std::to_string(enumerated) + (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome adjugate_nonvanishing() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < g_corpus.size(); ++i) {
    if (!is_prime(g_dets[i])) continue;
    ++checked;
    const auto r = adjugate_columns_nonzero_mod_p(g_corpus[i], static_cast<std::uint64_t>(g_dets[i]));
    if (!r.all_nonzero) o.fail("zero column in " + g_corpus[i].str());
  }
  o.detail = std::to_string(checked) + " codes checked" + (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome gcd_criterion() {
  Outcome o;
  std::size_t codes = 0;
  for (std::size_t i = 0; i < g_corpus.size(); ++i) {
    const GaussCode& c = g_corpus[i];
    if (c.k() > 5) continue;
    ++codes;
    for (std::uint64_t n = 2; n <= 12; ++n) {
      const std::uint64_t count = brute_force_quandle_colorings(c, dihedral_quandle(n)).count;
      const bool exists = count > n;
      const bool predicted = gcd(BigInt(n), g_dets[i]) > 1;
      if (exists != predicted) o.fail(c.str() + " n=" + std::to_string(n));
      if (n == 2 || n == 3 || n == 5 || n == 7) {
        if (count != coloring_space(c, n).coloring_count()) o.fail(c.str() + " count mismatch p=" + std::to_string(n));
      }
    }
  }
  o.detail = std::to_string(codes) + " codes with k <= 5, n in [2,12]" + (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome quandles() {
  Outcome o;
  for (std::size_t n = 1; n <= 20; ++n)
    if (!check_quandle_axioms(dihedral_quandle(n)).empty()) o.fail("dihedral n=" + std::to_string(n));
  const Quandle base = dihedral_quandle(5);
  std::size_t mutations = 0;
  for (std::uint32_t a = 0; a < 5; ++a)
    for (std::uint32_t b = 0; b < 5; ++b)
      for (std::uint32_t v = 0; v < 5; ++v) {
        if (v == base.op(a, b)) continue;
        Quandle q = base;
        q.at(a, b) = v;
        ++mutations;
        if (check_quandle_axioms(q).empty()) o.fail("undetected mutation");
      }
  o.detail = "n in [1,20] clean, " + std::to_string(mutations) + " mutations detected" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> args = {"fuzz",     "--kmin", "2", "--kmax", "8",
                                         "--samples", "50",     "--seed", "7", "--json"};
  std::string first, second;
  for (std::string* dst : {&first, &second}) {
    std::istringstream in;
    std::ostringstream out, err;
    const int rc = cli::run(args, in, out, err);
    if (rc != cli::kExitOk) o.fail("exit code " + std::to_string(rc) + ": " + err.str());
    *dst = out.str();
  }
  if (first != second) o.fail("reports differ");
  if (first.empty()) o.fail("empty report");
  if (o.pass) o.detail = std::to_string(first.size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  g_corpus = generate_corpus(kCorpusKMin, kCorpusKMax, kCorpusSize, kCorpusSeed);
  for (const auto& c : g_corpus) g_dets.push_back(diagram_determinant(c));
  std::printf("corpus: %zu reduced alternating codes, k in [%zu,%zu], seed %llu (%.2f s)\n", g_corpus.size(),
              kCorpusKMin, kCorpusKMax, static_cast<unsigned long long>(kCorpusSeed),
              std::chrono::duration<double>(Clock::now() - t0).count());

  const std::vector<Criterion> criteria = {
      {1, "4x4 fixture matrix minors", 1.0, fixture_minors},
      {2, "trefoil suite", 1.0, trefoil},
      {3, "figure-eight suite", 1.0, figure_eight},
      {4, "cofactor identity corpus", 60.0, cofactor_corpus},
      {5, "determinant >= k", std::nullopt, determinant_bound},
      {6, "determinant multiplicative under connected sum", std::nullopt, connected_sums},
      {7, "Euler circuit count = determinant", std::nullopt, euler_equivalence},
      {8, "heterogeneity on prime-determinant codes", 120.0, theorem_campaign},
      {9, "adjugate columns nonzero mod p", std::nullopt, adjugate_nonvanishing},
      {10, "brute-force colorings vs gcd(n, det)", 60.0, gcd_criterion},
      {11, "dihedral quandle axioms", std::nullopt, quandles},
      {12, "fuzz report determinism", std::nullopt, determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit && secs >= *c.limit) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(*c.limit)) + " s limit";
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(),
                secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
