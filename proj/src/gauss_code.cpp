#include "foxcolor/gauss_code.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "foxcolor/error.hpp"
#include "foxcolor/splitmix.hpp"

namespace foxcolor {

namespace {

struct LabelSlots {
  std::optional<std::size_t> over;
  std::optional<std::size_t> under;
};

}  // namespace

GaussCode::GaussCode(std::vector<Visit> visits) : visits_(std::move(visits)) {
  std::map<Label, LabelSlots> slots;
  for (std::size_t pos = 0; pos < visits_.size(); ++pos) {
    const Visit& v = visits_[pos];
    if (v.label == 0) throw Error(ErrorKind::MalformedToken, "crossing label must be >= 1");
    auto& slot = v.pass == Pass::Over ? slots[v.label].over : slots[v.label].under;
    if (slot) {
      throw Error(ErrorKind::LabelArityError,
                  "label " + std::to_string(v.label) + " appears " +
                      (v.pass == Pass::Over ? "O" : "U") + " more than once");
    }
    slot = pos;
  }
  for (const auto& [label, s] : slots) {
    if (!s.over || !s.under) {
      throw Error(ErrorKind::LabelArityError,
                  "label " + std::to_string(label) + " must appear once as O and once as U");
    }
    const auto& a = visits_[*s.over].sign;
    const auto& b = visits_[*s.under].sign;
    if (a != b) {
      throw Error(ErrorKind::SignConflict,
                  "label " + std::to_string(label) + " has inconsistent signs");
    }
  }
}

std::vector<Label> GaussCode::labels() const {
  std::vector<Label> out;
  out.reserve(k());
  for (const Visit& v : visits_) {
    if (v.pass == Pass::Over) out.push_back(v.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Label GaussCode::max_label() const noexcept {
  Label m = 0;
  for (const Visit& v : visits_) m = std::max(m, v.label);
  return m;
}

std::pair<std::size_t, std::size_t> GaussCode::positions(Label label) const {
  std::optional<std::size_t> over, under;
  for (std::size_t pos = 0; pos < visits_.size(); ++pos) {
    if (visits_[pos].label != label) continue;
    (visits_[pos].pass == Pass::Over ? over : under) = pos;
  }
  if (!over || !under) {
    throw Error(ErrorKind::IndexOutOfRange, "no crossing labelled " + std::to_string(label));
  }
  return {*over, *under};
}

std::string GaussCode::str() const {
  std::string out;
  for (const Visit& v : visits_) {
    out += v.pass == Pass::Over ? 'O' : 'U';
    out += std::to_string(v.label);
    if (v.sign) out += *v.sign == Sign::Positive ? '+' : '-';
  }
  return out;
}

GaussCode parse_gauss_code(std::string_view text) {
  constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  std::vector<Visit> visits;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto malformed = [&](const std::string& why) {
      std::size_t end = start;
      while (end < text.size() && !is_space(text[end])) ++end;
      return Error(ErrorKind::MalformedToken,
                   "'" + std::string(text.substr(start, end - start)) + "' at offset " +
                       std::to_string(start) + ": " + why);
    };
    Visit v;
    const char kind = text[i];
    if (kind == 'O' || kind == 'o') {
      v.pass = Pass::Over;
    } else if (kind == 'U' || kind == 'u') {
      v.pass = Pass::Under;
    } else {
      throw malformed("expected 'O' or 'U'");
    }
    ++i;
    if (i >= text.size() || text[i] < '1' || text[i] > '9') {
      throw malformed("expected a positive crossing label");
    }
    std::uint64_t label = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      label = label * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (label > 0xFFFFFFFFULL) throw malformed("crossing label too large");
      ++i;
    }
    v.label = static_cast<Label>(label);
    if (i < text.size() && text[i] == '+') {
      v.sign = Sign::Positive;
      ++i;
    } else if (i < text.size() && text[i] == '-') {
      v.sign = Sign::Negative;
      ++i;
    } else if (text.substr(i).starts_with(kUnicodeMinus)) {
      v.sign = Sign::Negative;
      i += kUnicodeMinus.size();
    }
    visits.push_back(v);
  }
  return GaussCode(std::move(visits));
}

bool is_alternating(const GaussCode& code) {
  const std::size_t n = code.size();
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (code[pos].pass == code[(pos + 1) % n].pass) return false;
  }
  return true;
}

std::set<Label> isolated_chords(const GaussCode& code) {
  const std::size_t n = code.size();
  // Chord of `label` spans [first, second]; d interleaves c iff exactly one
  // endpoint of d lies strictly inside c's span.
  std::map<Label, std::pair<std::size_t, std::size_t>> span;
  for (std::size_t pos = 0; pos < n; ++pos) {
    auto [it, fresh] = span.try_emplace(code[pos].label, pos, pos);
    if (!fresh) it->second.second = pos;
  }
  std::set<Label> out;
  for (const auto& [label, s] : span) {
    std::map<Label, int> inside;
    for (std::size_t pos = s.first + 1; pos < s.second; ++pos) ++inside[code[pos].label];
    bool interleaves = std::any_of(inside.begin(), inside.end(),
                                   [](const auto& entry) { return entry.second == 1; });
    if (!interleaves) out.insert(label);
  }
  return out;
}

bool is_reduced(const GaussCode& code) {
  return code.k() >= 2 && isolated_chords(code).empty();
}

GaussCode mirror(const GaussCode& code) {
  std::vector<Visit> visits(code.visits().begin(), code.visits().end());
  for (Visit& v : visits) {
    v.pass = opposite(v.pass);
    if (v.sign) v.sign = opposite(*v.sign);
  }
  return GaussCode(std::move(visits));
}

GaussCode canonical_labels(const GaussCode& code) {
  std::map<Label, Label> renumber;
  std::vector<Visit> visits(code.visits().begin(), code.visits().end());
  for (Visit& v : visits) {
    auto [it, fresh] = renumber.try_emplace(v.label, static_cast<Label>(renumber.size() + 1));
    v.label = it->second;
  }
  return GaussCode(std::move(visits));
}

GaussCode rotate(const GaussCode& code, std::size_t offset) {
  if (code.empty()) return code;
  std::vector<Visit> visits(code.visits().begin(), code.visits().end());
  std::rotate(visits.begin(), visits.begin() + static_cast<std::ptrdiff_t>(offset % visits.size()),
              visits.end());
  return GaussCode(std::move(visits));
}

GaussCode connected_sum(const GaussCode& a, const GaussCode& b, std::size_t b_offset) {
  const Label shift = a.max_label();
  std::vector<Visit> visits(a.visits().begin(), a.visits().end());
  const GaussCode tail = canonical_labels(rotate(b, b_offset));
  for (Visit v : tail.visits()) {
    v.label += shift;
    visits.push_back(v);
  }
  return GaussCode(std::move(visits));
}

std::optional<std::pair<GaussCode, GaussCode>> find_summand_split(const GaussCode& code) {
  const std::size_t n = code.size();
  const auto slice = [&](std::size_t from, std::size_t len) {
    std::vector<Visit> visits;
    visits.reserve(len);
    for (std::size_t i = 0; i < len; ++i) visits.push_back(code[(from + i) % n]);
    return canonical_labels(GaussCode(std::move(visits)));
  };
  // A cut "before position s" and "before position t" (s < t) leaves the
  // window [s, t); it is a valid split iff every chord meeting the window
  // lies entirely inside it.
  for (std::size_t s = 0; s < n; ++s) {
    std::map<Label, int> seen;
    int open = 0;
    for (std::size_t t = s + 1; t < n; ++t) {
      if (++seen[code[t - 1].label] == 2) {
        --open;
      } else {
        ++open;
      }
      if (open == 0) return std::make_pair(slice(s, t - s), slice(t, n - (t - s)));
    }
  }
  return std::nullopt;
}

DiagramClass classify(const GaussCode& code) {
  DiagramClass out;
  out.alternating = is_alternating(code);
  out.isolated_chords = isolated_chords(code);
  out.reduced = code.k() >= 2 && out.isolated_chords.empty();
  out.summand_split = find_summand_split(code);
  return out;
}

namespace {

GaussCode draw_alternating(std::size_t k, SplitMix64& rng) {
  // Crossing i owns the i-th Over slot; a shuffled permutation picks its
  // Under slot.
  std::vector<std::size_t> under_slot(k);
  std::iota(under_slot.begin(), under_slot.end(), std::size_t{0});
  for (std::size_t i = k; i-- > 1;) {
    std::swap(under_slot[i], under_slot[rng.below(i + 1)]);
  }
  std::vector<Visit> visits(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto label = static_cast<Label>(i + 1);
    visits[2 * i] = Visit{label, Pass::Over, std::nullopt};
    visits[2 * under_slot[i] + 1] = Visit{label, Pass::Under, std::nullopt};
  }
  return canonical_labels(GaussCode(std::move(visits)));
}

}  // namespace

GaussCode random_alternating(std::size_t k, std::uint64_t seed) {
  if (k < 1) throw Error(ErrorKind::TooSmall, "random_alternating needs k >= 1");
  SplitMix64 rng(seed);
  return draw_alternating(k, rng);
}

GaussCode random_reduced_alternating(std::size_t k, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorKind::TooSmall, "random_reduced_alternating needs k >= 2");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kMaxGenerationRejections; ++attempt) {
    GaussCode code = draw_alternating(k, rng);
    if (isolated_chords(code).empty()) return code;
  }
  throw Error(ErrorKind::GenerationExhausted,
              std::to_string(kMaxGenerationRejections) + " consecutive rejections at k=" +
                  std::to_string(k));
}

}  // namespace foxcolor
