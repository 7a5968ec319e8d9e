#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace foxcolor {

using Label = std::uint32_t;

enum class Pass : std::uint8_t { Over, Under };
enum class Sign : std::uint8_t { Positive, Negative };

constexpr Pass opposite(Pass p) noexcept { return p == Pass::Over ? Pass::Under : Pass::Over; }
constexpr Sign opposite(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

struct Visit {
  Label label = 1;
  Pass pass = Pass::Over;
  std::optional<Sign> sign;

  friend bool operator==(const Visit&, const Visit&) = default;
};

/// A knot diagram modulo virtual moves: the cyclic sequence of classical
/// crossing visits read along the knot. Virtual crossings are not
/// represented. Every label occurs exactly twice, once Over and once Under.
///
/// Construction validates; a GaussCode value is always well formed.
class GaussCode {
 public:
  GaussCode() = default;
  explicit GaussCode(std::vector<Visit> visits);

  std::span<const Visit> visits() const noexcept { return visits_; }
  std::size_t size() const noexcept { return visits_.size(); }
  /// Classical crossing count.
  std::size_t k() const noexcept { return visits_.size() / 2; }
  bool empty() const noexcept { return visits_.empty(); }
  const Visit& operator[](std::size_t pos) const { return visits_[pos]; }

  /// Crossing labels in ascending order.
  std::vector<Label> labels() const;
  Label max_label() const noexcept;
  /// Positions of the Over and Under visits of `label`.
  std::pair<std::size_t, std::size_t> positions(Label label) const;

  /// Compact token form, e.g. "O1U2O3U1O2U3".
  std::string str() const;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;

 private:
  std::vector<Visit> visits_;
};

/// Grammar: visit := ('O'|'U') [1-9][0-9]* ('+'|'-'|U+2212)? with optional
/// whitespace between visits. Empty input is the unknot.
GaussCode parse_gauss_code(std::string_view text);

bool is_alternating(const GaussCode& code);

/// Labels whose chord interleaves no other chord.
std::set<Label> isolated_chords(const GaussCode& code);

/// No isolated chord and at least two crossings.
bool is_reduced(const GaussCode& code);

GaussCode mirror(const GaussCode& code);

/// Renumbers crossings 1..k in order of first appearance.
GaussCode canonical_labels(const GaussCode& code);

/// Rotates the cyclic sequence so that position `offset` comes first.
GaussCode rotate(const GaussCode& code, std::size_t offset);

/// Concatenates `a` with `b` (b canonically relabelled, then shifted past
/// a's largest label). `b_offset` starts b's sequence at that cyclic
/// position; even offsets keep alternating inputs alternating.
GaussCode connected_sum(const GaussCode& a, const GaussCode& b, std::size_t b_offset = 0);

/// Two cut points splitting the cycle into nonempty arcs with no chord
/// crossing between them. Picks the least first cut, then the least second
/// cut; both parts come back canonically relabelled.
std::optional<std::pair<GaussCode, GaussCode>> find_summand_split(const GaussCode& code);

struct DiagramClass {
  bool alternating = false;
  bool reduced = false;
  std::set<Label> isolated_chords;
  std::optional<std::pair<GaussCode, GaussCode>> summand_split;
};

DiagramClass classify(const GaussCode& code);

/// Maximum consecutive rejections before random_reduced_alternating gives up.
inline constexpr int kMaxGenerationRejections = 10'000;

/// One uniform draw of an alternating code on k >= 1 crossings; isolated
/// chords allowed. Same stream as random_reduced_alternating's first draw.
GaussCode random_alternating(std::size_t k, std::uint64_t seed);

/// Uniform alternating code on k crossings (Over visits at even offsets,
/// Under visits at odd offsets, Fisher-Yates pairing driven by splitmix64),
/// rejection-resampled until no chord is isolated. Labels are canonical.
GaussCode random_reduced_alternating(std::size_t k, std::uint64_t seed);

}  // namespace foxcolor
