#include "foxcolor/kh_verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "foxcolor/arc_matrix.hpp"
#include "foxcolor/error.hpp"
#include "foxcolor/euler_graph.hpp"
#include "foxcolor/splitmix.hpp"

namespace foxcolor {

namespace {

std::optional<std::uint64_t> as_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

void require_reduced_alternating(const GaussCode& code, const char* op) {
  if (!is_alternating(code)) {
    throw Error(ErrorKind::PremiseViolation, std::string(op) + ": " + code.str() + " is not alternating");
  }
  if (!is_reduced(code)) {
    throw Error(ErrorKind::PremiseViolation, std::string(op) + ": " + code.str() + " is not reduced");
  }
}

}  // namespace

KHReport verify_kh(const GaussCode& code) {
  KHReport r;
  r.gauss_code = code.str();
  r.k = code.k();
  r.alternating = is_alternating(code);
  r.reduced = is_reduced(code);
  r.determinant = diagram_determinant(code);
  r.determinant_prime = is_prime(r.determinant);

  if (!r.alternating) r.premise_failures.emplace_back("not alternating");
  if (!r.reduced) r.premise_failures.emplace_back("not reduced");
  if (!r.determinant_prime) r.premise_failures.emplace_back("determinant not prime");
  if (!r.determinant_prime || code.empty()) return r;

  const auto p = as_u64(r.determinant);
  if (!p) {
    r.check_failures.push_back("determinant " + to_decimal(r.determinant) +
                               " exceeds the 64-bit modulus range");
    return r;
  }
  const ColoringSpace space = coloring_space(code, *p);
  r.coloring_dimension = space.dimension();
  if (!r.premises_hold()) return r;

  if (space.dimension() != 2) {
    r.check_failures.push_back("coloring dimension " + std::to_string(space.dimension()) +
                               " != 2 (no fundamental coloring)");
  }
  r.representative = nontrivial_representative(space);
  if (!r.representative) {
    r.check_failures.emplace_back("no nontrivial coloring despite prime determinant");
    return r;
  }
  r.heterogeneous = is_heterogeneous(*r.representative);
  if (!*r.heterogeneous) r.check_failures.emplace_back("representative coloring is not heterogeneous");

  const AdjugateCheck adj = adjugate_columns_nonzero_mod_p(code, *p);
  r.adjugate_columns_nonzero = adj.all_nonzero;
  if (!adj.all_nonzero) {
    r.check_failures.push_back("adjugate column " + std::to_string(*adj.zero_column) +
                               " vanishes mod p");
  }

  if (*p <= kFullEnumerationPrimeLimit && space.dimension() == 2) {
    const std::vector<Coloring> all = enumerate_nontrivial(space);
    r.enumerated_nontrivial = all.size();
    if (all.size() != *p * *p - *p) {
      r.check_failures.push_back("enumerated " + std::to_string(all.size()) +
                                 " nontrivial colorings, expected p^2 - p");
    }
    const auto bad = std::find_if(all.begin(), all.end(),
                                  [](const Coloring& c) { return !is_heterogeneous(c); });
    if (bad != all.end()) {
      r.check_failures.emplace_back("enumeration found a non-heterogeneous nontrivial coloring");
    }
    if (*r.heterogeneous != (bad == all.end())) {
      r.check_failures.emplace_back("representative and enumeration disagree on heterogeneity");
    }
  }
  return r;
}

AdjugateCheck adjugate_columns_nonzero_mod_p(const GaussCode& code, std::uint64_t p,
                                             std::optional<std::size_t> deleted) {
  require_reduced_alternating(code, "adjugate check");
  if (!is_prime(BigInt(p))) {
    throw Error(ErrorKind::PremiseViolation, std::to_string(p) + " is not prime");
  }
  const BigInt d = diagram_determinant(code);
  if (d != p) {
    throw Error(ErrorKind::PremiseViolation,
                "determinant " + to_decimal(d) + " is not " + std::to_string(p));
  }
  const IntMatrix m = canonical_alternating_labeling(code).entries;
  const std::size_t drop = deleted.value_or(m.rows() - 1);
  const IntMatrix adj = adjugate(m.without(drop, drop));
  AdjugateCheck out;
  for (std::size_t c = 0; c < adj.cols(); ++c) {
    bool nonzero = false;
    for (std::size_t r = 0; r < adj.rows() && !nonzero; ++r) nonzero = residue(adj(r, c), p) != 0;
    if (!nonzero) {
      out.all_nonzero = false;
      out.zero_column = c;
      break;
    }
  }
  return out;
}

namespace {

Lemma22Report lemma22_on(const IntMatrix& m, const BigInt& expected_det,
                         const BigInt& fast_path) {
  Lemma22Report r;
  const std::size_t k = m.rows();
  const IntMatrix cof = all_cofactors(m);
  r.common_cofactor = cof(0, 0);
  r.cofactors_equal = true;
  for (std::size_t i = 0; i < k && r.cofactors_equal; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (cof(i, j) != r.common_cofactor) {
        r.cofactors_equal = false;
        r.violations.push_back("cofactor (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") = " + to_decimal(cof(i, j)) + " differs from " +
                               to_decimal(r.common_cofactor));
        break;
      }
    }
  r.det_plus_ones = det(add_all_ones(m));
  r.identity_holds = r.det_plus_ones == BigInt(k * k) * r.common_cofactor;
  if (!r.identity_holds) {
    r.violations.push_back("det(M+N) = " + to_decimal(r.det_plus_ones) + " but k^2 c = " +
                           to_decimal(BigInt(k * k) * r.common_cofactor));
  }
  r.matches_determinant = abs(r.common_cofactor) == expected_det;
  if (!r.matches_determinant) {
    r.violations.push_back("|c| = " + to_decimal(abs(r.common_cofactor)) +
                           " but determinant = " + to_decimal(expected_det));
  }
  r.fast_path_agrees = fast_path == expected_det;
  if (!r.fast_path_agrees) {
    r.violations.push_back("single-minor value " + to_decimal(fast_path) + " but gcd of minors " +
                           to_decimal(expected_det));
  }
  return r;
}

}  // namespace

Lemma22Report lemma22_check(const GaussCode& code, PremisePolicy policy) {
  if (policy == PremisePolicy::Enforce) require_reduced_alternating(code, "lemma22_check");
  if (code.empty()) throw Error(ErrorKind::EmptyCode, "lemma22_check needs k >= 1");
  const IntMatrix m = coloring_matrix(code).entries;
  return lemma22_on(m, diagram_determinant_gcd(code), diagram_determinant(code));
}

Lemma22Report lemma22_check(const IntMatrix& m) {
  if (!m.is_square() || m.rows() == 0) {
    throw Error(ErrorKind::NotSquare, "lemma22_check needs a nonempty square matrix");
  }
  return lemma22_on(m, minor_gcd(m), abs(minor(m, m.rows() - 1, m.cols() - 1)));
}

MirrorTransposeReport mirror_transpose_check(const GaussCode& code) {
  require_reduced_alternating(code, "mirror_transpose_check");
  const GaussCode m = mirror(code);
  MirrorTransposeReport r;
  r.entrywise_transpose =
      canonical_alternating_labeling(m).entries == canonical_alternating_labeling(code).entries.transpose();
  r.determinant_equal = diagram_determinant(m) == diagram_determinant(code);
  return r;
}

std::string_view to_string(Check c) {
  switch (c) {
    case Check::Kh: return "kh";
    case Check::Lemma22: return "lemma22";
    case Check::Prop23Lower: return "prop23_lower";
    case Check::Euler: return "euler";
    case Check::Adjugate: return "adjugate";
    case Check::MirrorTranspose: return "mirror_transpose";
  }
  return "?";
}

Check parse_check(std::string_view name) {
  for (Check c : kAllChecks) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorKind::InvalidConfig, "unknown check '" + std::string(name) + "'");
}

std::set<Check> parse_checks(std::string_view list) {
  std::set<Check> out;
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    const std::string_view item = list.substr(0, comma);
    if (item == "all") {
      out.insert(std::begin(kAllChecks), std::end(kAllChecks));
    } else if (!item.empty()) {
      out.insert(parse_check(item));
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidConfig, "no checks selected");
  return out;
}

void FuzzConfig::validate() const {
  if (k_min < 2) throw Error(ErrorKind::InvalidConfig, "k_min must be >= 2");
  if (k_max < k_min) throw Error(ErrorKind::InvalidConfig, "k_max must be >= k_min");
  if (samples < 1) throw Error(ErrorKind::InvalidConfig, "samples must be >= 1");
  if (checks.empty()) throw Error(ErrorKind::InvalidConfig, "no checks selected");
  if (threads < 1) throw Error(ErrorKind::InvalidConfig, "threads must be >= 1");
}

std::uint64_t derive_seed(std::uint64_t seed, std::size_t k, std::size_t index,
                          std::size_t attempt) {
  SplitMix64 mix(seed);
  std::uint64_t s = mix.next();
  s = SplitMix64(s ^ static_cast<std::uint64_t>(k)).next();
  s = SplitMix64(s ^ static_cast<std::uint64_t>(index)).next();
  return SplitMix64(s ^ static_cast<std::uint64_t>(attempt)).next();
}

SampleOutcome run_checks(const GaussCode& code, const std::set<Check>& checks) {
  SampleOutcome out;
  const auto fail = [&](Check c, std::string detail) { out.failures.emplace_back(c, std::move(detail)); };
  const BigInt determinant = diagram_determinant(code);
  out.prime_determinant = is_prime(determinant);
  const std::size_t k = code.k();

  for (Check c : checks) {
    try {
      switch (c) {
        case Check::Kh: {
          if (!out.prime_determinant) {
            out.not_applicable.insert(c);
            break;
          }
          const KHReport r = verify_kh(code);
          for (const auto& why : r.premise_failures) fail(c, "premise: " + why);
          for (const auto& why : r.check_failures) fail(c, why);
          break;
        }
        case Check::Lemma22: {
          const Lemma22Report r = lemma22_check(code);
          for (const auto& why : r.violations) fail(c, why);
          break;
        }
        case Check::Prop23Lower:
          if (determinant < k) {
            fail(c, "determinant " + to_decimal(determinant) + " < k = " + std::to_string(k));
          }
          break;
        case Check::Euler: {
          const DirectedMultigraph g = build_euler_graph(code);
          const BigInt best = euler_circuit_count_best(g);
          if (best != determinant) {
            fail(c, "BEST count " + to_decimal(best) + " != determinant " + to_decimal(determinant));
          }
          if (k <= 6) {
            for (Label root : g.vertices) {
              const BigInt other = euler_circuit_count_best(g, root);
              if (other != best) {
                fail(c, "BEST count depends on root: " + to_decimal(other) + " at root " +
                            std::to_string(root));
              }
            }
          }
          if (g.edges.size() <= kMaxBruteForceEdges) {
            const BigInt brute = euler_circuit_count_bruteforce(g);
            if (brute != best) {
              fail(c, "brute-force count " + to_decimal(brute) + " != BEST " + to_decimal(best));
            }
          }
          break;
        }
        case Check::Adjugate: {
          if (!out.prime_determinant) {
            out.not_applicable.insert(c);
            break;
          }
          const AdjugateCheck r =
              adjugate_columns_nonzero_mod_p(code, static_cast<std::uint64_t>(determinant));
          if (!r.all_nonzero) {
            fail(c, "adjugate column " + std::to_string(*r.zero_column) + " vanishes mod p");
          }
          break;
        }
        case Check::MirrorTranspose: {
          const MirrorTransposeReport r = mirror_transpose_check(code);
          if (!r.entrywise_transpose) fail(c, "M(mirror) != transpose(M)");
          if (!r.determinant_equal) fail(c, "det(mirror) != det");
          break;
        }
      }
    } catch (const Error& e) {
      fail(c, e.what());
    }
  }
  return out;
}

namespace {

struct SampleResult {
  std::optional<GaussCode> code;
  std::string generation_error;
  SampleOutcome outcome;
};

SampleResult run_sample(const FuzzConfig& cfg, std::size_t k, std::size_t index) {
  SampleResult res;
  try {
    const int attempts = cfg.require_prime_det ? kPrimeRedraws : 1;
    for (int a = 0; a < attempts; ++a) {
      GaussCode code = random_reduced_alternating(k, derive_seed(cfg.seed, k, index, a));
      if (!cfg.require_prime_det || is_prime(diagram_determinant(code))) {
        res.code = std::move(code);
        break;
      }
    }
    if (!res.code) {
      res.generation_error = "no prime-determinant code in " + std::to_string(kPrimeRedraws) + " draws";
      return res;
    }
  } catch (const Error& e) {
    res.generation_error = e.what();
    return res;
  }
  res.outcome = run_checks(*res.code, cfg.checks);
  return res;
}

}  // namespace

FuzzReport fuzz(const FuzzConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  const std::size_t ks = config.k_max - config.k_min + 1;
  const std::size_t total = ks * config.samples;
  std::vector<SampleResult> results(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      results[i] = run_sample(config, config.k_min + i / config.samples, i % config.samples);
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < config.threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  FuzzReport report;
  report.config = config;
  for (Check c : config.checks) report.tallies.emplace_back(c, CheckTally{});
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t k = config.k_min + i / config.samples;
    const std::size_t sample = i % config.samples;
    const SampleResult& res = results[i];
    if (!res.code) {
      report.generation_failures.push_back({k, sample, res.generation_error});
      continue;
    }
    ++report.generated;
    if (res.outcome.prime_determinant) ++report.prime_determinant;
    for (auto& [check, tally] : report.tallies) {
      const auto failed = std::count_if(res.outcome.failures.begin(), res.outcome.failures.end(),
                                        [c = check](const auto& f) { return f.first == c; });
      if (res.outcome.not_applicable.contains(check)) {
        ++tally.not_applicable;
      } else if (failed > 0) {
        ++tally.failed;
      } else {
        ++tally.passed;
      }
    }
    for (const auto& [check, detail] : res.outcome.failures) {
      report.failures.push_back({k, sample, res.code->str(), check, detail});
    }
  }
  report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

std::vector<GaussCode> generate_corpus(std::size_t k_min, std::size_t k_max, std::size_t count,
                                       std::uint64_t seed) {
  if (k_min < 2 || k_max < k_min) throw Error(ErrorKind::InvalidConfig, "bad corpus k range");
  std::vector<GaussCode> out;
  out.reserve(count);
  const std::size_t span = k_max - k_min + 1;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t k = k_min + i % span;
    out.push_back(random_reduced_alternating(k, derive_seed(seed, k, i / span)));
  }
  return out;
}

}  // namespace foxcolor
