#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "foxcolor/bigint.hpp"
#include "foxcolor/exact_linalg.hpp"
#include "foxcolor/fox_coloring.hpp"
#include "foxcolor/gauss_code.hpp"
#include "foxcolor/primes.hpp"

namespace foxcolor {

/// Largest prime for which verify_kh enumerates every nontrivial coloring.
inline constexpr std::uint64_t kFullEnumerationPrimeLimit = 13;

/// Premise and conclusion record of the heterogeneity theorem for one code:
/// a reduced alternating diagram with prime determinant p has only
/// heterogeneous nontrivial p-colorings.
struct KHReport {
  std::string gauss_code;
  std::size_t k = 0;
  bool alternating = false;
  bool reduced = false;
  BigInt determinant = 1;
  bool determinant_prime = false;
  std::optional<std::size_t> coloring_dimension;
  std::optional<Coloring> representative;
  std::optional<bool> heterogeneous;
  std::optional<bool> adjugate_columns_nonzero;
  /// Nontrivial colorings enumerated for p <= kFullEnumerationPrimeLimit.
  std::optional<std::uint64_t> enumerated_nontrivial;
  std::vector<std::string> premise_failures;
  /// Conclusions that failed although the premises held.
  std::vector<std::string> check_failures;

  bool premises_hold() const noexcept { return premise_failures.empty(); }
  bool passed() const noexcept { return check_failures.empty(); }
};

KHReport verify_kh(const GaussCode& code);

struct AdjugateCheck {
  bool all_nonzero = true;
  /// First column of the adjugate that vanishes mod p.
  std::optional<std::size_t> zero_column;
};

/// Deletes row and column `deleted` (default: the last) of the canonical
/// coloring matrix, takes the adjugate of what remains and tests every
/// column for a nonzero entry mod p. Throws PremiseViolation unless the code
/// is reduced, alternating, and has determinant exactly p with p prime.
AdjugateCheck adjugate_columns_nonzero_mod_p(const GaussCode& code, std::uint64_t p,
                                             std::optional<std::size_t> deleted = std::nullopt);

enum class PremisePolicy { Enforce, Evaluate };

/// Cofactor equality for a zero-line-sum matrix: every cofactor C equals a
/// common c, det(M + N) = k^2 c, |c| equals the diagram determinant.
struct Lemma22Report {
  bool cofactors_equal = false;
  BigInt common_cofactor = 0;
  BigInt det_plus_ones = 0;
  bool identity_holds = false;
  /// |c| = diagram determinant; for bare matrices, |c| = gcd of minors.
  bool matches_determinant = false;
  /// Single-minor fast path agrees with the gcd of all minors.
  bool fast_path_agrees = false;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Enforce throws PremiseViolation on non-reduced or non-alternating input;
/// Evaluate runs the check anyway (for negative testing).
Lemma22Report lemma22_check(const GaussCode& code, PremisePolicy policy = PremisePolicy::Enforce);
Lemma22Report lemma22_check(const IntMatrix& m);

struct MirrorTransposeReport {
  bool entrywise_transpose = false;
  bool determinant_equal = false;

  bool ok() const noexcept { return entrywise_transpose && determinant_equal; }
};

/// Canonical matrix of the mirror against the transpose of the canonical
/// matrix, crossings matched by label. Throws PremiseViolation.
MirrorTransposeReport mirror_transpose_check(const GaussCode& code);

enum class Check { Kh, Lemma22, Prop23Lower, Euler, Adjugate, MirrorTranspose };

inline constexpr Check kAllChecks[] = {Check::Kh,       Check::Lemma22,  Check::Prop23Lower,
                                       Check::Euler,    Check::Adjugate, Check::MirrorTranspose};

std::string_view to_string(Check c);
/// Throws InvalidConfig for unknown names.
Check parse_check(std::string_view name);
/// Comma-separated list; "all" selects every check.
std::set<Check> parse_checks(std::string_view list);

struct FuzzConfig {
  std::size_t k_min = 2;
  std::size_t k_max = 6;
  std::size_t samples = 50;
  std::uint64_t seed = 7;
  /// Redraw (up to kPrimeRedraws times) until the determinant is prime.
  bool require_prime_det = false;
  std::set<Check> checks{std::begin(kAllChecks), std::end(kAllChecks)};
  std::size_t threads = 1;

  /// Throws InvalidConfig.
  void validate() const;
};

inline constexpr int kPrimeRedraws = 1000;

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t not_applicable = 0;
};

struct FuzzFailure {
  std::size_t k = 0;
  std::size_t sample = 0;
  std::string gauss_code;
  Check check = Check::Kh;
  std::string detail;
};

struct GenerationFailure {
  std::size_t k = 0;
  std::size_t sample = 0;
  std::string detail;
};

struct FuzzReport {
  FuzzConfig config;
  std::size_t generated = 0;
  std::size_t prime_determinant = 0;
  std::vector<std::pair<Check, CheckTally>> tallies;
  std::vector<FuzzFailure> failures;
  std::vector<GenerationFailure> generation_failures;
  std::chrono::milliseconds wall_time{0};

  bool passed() const noexcept { return failures.empty(); }
};

/// Seed for sample `index` at crossing count `k` (attempt > 0 for redraws).
std::uint64_t derive_seed(std::uint64_t seed, std::size_t k, std::size_t index,
                          std::size_t attempt = 0);

/// Runs the selected checks over random reduced alternating codes. Output
/// ordering is (k, sample) regardless of the thread count.
FuzzReport fuzz(const FuzzConfig& config);

/// Failure details from running `checks` on one code; empty means all passed.
/// Checks that do not apply (e.g. adjugate on a composite determinant) are
/// reported through `not_applicable`.
struct SampleOutcome {
  std::vector<std::pair<Check, std::string>> failures;
  std::set<Check> not_applicable;
  bool prime_determinant = false;
};
SampleOutcome run_checks(const GaussCode& code, const std::set<Check>& checks);

/// `count` random reduced alternating codes with k cycling over
/// [k_min, k_max].
std::vector<GaussCode> generate_corpus(std::size_t k_min, std::size_t k_max, std::size_t count,
                                       std::uint64_t seed);

}  // namespace foxcolor
