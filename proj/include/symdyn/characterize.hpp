#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "symdyn/language.hpp"
#include "symdyn/substitution.hpp"
#include "symdyn/words.hpp"

// Forbidden-pattern checks on finite words. A factor of the Morse (resp.
// Toeplitz) minimal set never contains an overlap (resp. an even square);
// the converse only holds for bilaterally infinite sequences, so a clean
// finite word is not thereby a factor.

namespace symdyn {

enum class PatternKind { overlap_BBb, even_square_BB };

inline constexpr std::string_view to_string(PatternKind k) {
  return k == PatternKind::overlap_BBb ? "overlap" : "toeplitz";
}

struct PatternWitness {
  std::size_t start = 0;
  std::size_t half_length = 0;  // |B|
  PatternKind kind = PatternKind::overlap_BBb;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

namespace detail {

inline void check_pattern_length(const Word& w, const Limits& limits) {
  if (w.size() > limits.max_pattern_length) {
    fail(ErrorKind::capacity, "word of length " + std::to_string(w.size()) + " exceeds the pattern scan cap");
  }
}

// run[p] = number of consecutive q >= p with w[q] == w[q + period].
inline std::vector<std::size_t> match_runs(const Word& w, std::size_t period) {
  std::vector<std::size_t> run(w.size() - period + 1, 0);
  for (std::size_t p = w.size() - period; p-- > 0;) {
    run[p] = w[p] == w[p + period] ? run[p + 1] + 1 : 0;
  }
  return run;
}

}  // namespace detail

/// Leftmost BBb (b the first letter of B), shortest B among those.
inline std::optional<PatternWitness> find_overlap(const Word& w, const Limits& limits = {}) {
  detail::check_pattern_length(w, limits);
  std::optional<PatternWitness> best;
  for (std::size_t len = 1; 2 * len + 1 <= w.size(); ++len) {
    const auto run = detail::match_runs(w, len);
    const std::size_t stop = best ? best->start : w.size();
    for (std::size_t i = 0; i + 2 * len < w.size() && i < stop; ++i) {
      if (run[i] >= len + 1) {
        best = PatternWitness{i, len, PatternKind::overlap_BBb};
        break;
      }
    }
  }
  return best;
}

/// Leftmost BB whose B holds an even number (possibly zero) of `zero`
/// letters, shortest B among those.
inline std::optional<PatternWitness> find_even_square(const Word& w, Letter zero,
                                                      const Limits& limits = {}) {
  detail::check_pattern_length(w, limits);
  std::vector<std::size_t> zeros(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) zeros[i + 1] = zeros[i] + (w[i] == zero ? 1 : 0);
  std::optional<PatternWitness> best;
  for (std::size_t len = 1; 2 * len <= w.size(); ++len) {
    const auto run = detail::match_runs(w, len);
    const std::size_t stop = best ? best->start : w.size();
    for (std::size_t i = 0; i + 2 * len <= w.size() && i < stop; ++i) {
      if (run[i] >= len && (zeros[i + len] - zeros[i]) % 2 == 0) {
        best = PatternWitness{i, len, PatternKind::even_square_BB};
        break;
      }
    }
  }
  return best;
}

// As above, but `zero` is checked against the alphabet first.
inline std::optional<PatternWitness> find_even_square(const Alphabet& alphabet, const Word& w, Letter zero,
                                                      const Limits& limits = {}) {
  if (zero >= alphabet.size()) fail(ErrorKind::domain, "designated letter outside the alphabet");
  if (!alphabet.contains(w)) fail(ErrorKind::domain, "word uses letters outside the alphabet");
  return find_even_square(w, zero, limits);
}

/// Replays a witness against the word.
inline bool witness_holds(const Word& w, const PatternWitness& wit, Letter zero = 0) {
  const std::size_t i = wit.start;
  const std::size_t len = wit.half_length;
  if (len == 0) return false;
  const std::size_t extent = 2 * len + (wit.kind == PatternKind::overlap_BBb ? 1 : 0);
  if (i + extent > w.size()) return false;
  for (std::size_t t = 0; t < len; ++t) {
    if (w[i + t] != w[i + len + t]) return false;
  }
  if (wit.kind == PatternKind::overlap_BBb) return w[i + 2 * len] == w[i];
  std::size_t count = 0;
  for (std::size_t t = 0; t < len; ++t) count += w[i + t] == zero ? 1 : 0;
  return count % 2 == 0;
}

enum class FactorStatus { yes, no, unchecked };

inline constexpr std::string_view to_string(FactorStatus f) {
  switch (f) {
    case FactorStatus::yes: return "yes";
    case FactorStatus::no: return "no";
    case FactorStatus::unchecked: return "unchecked";
  }
  return "unchecked";
}

struct WordReport {
  std::optional<PatternWitness> overlap;
  std::optional<PatternWitness> even_square;
  FactorStatus morse_factor = FactorStatus::unchecked;
  FactorStatus toeplitz_factor = FactorStatus::unchecked;

  bool overlap_free() const noexcept { return !overlap; }
  bool toeplitz_admissible() const noexcept { return !even_square; }
};

inline WordReport classify_word(const Word& w, std::size_t factor_bound = 4096, const Limits& limits = {}) {
  if (!Alphabet::binary().contains(w)) fail(ErrorKind::domain, "classify_word needs a binary word");
  WordReport out;
  out.overlap = find_overlap(w, limits);
  out.even_square = find_even_square(w, 0, limits);
  if (w.size() <= factor_bound) {
    auto status = [&](const Substitution& s) {
      return is_factor(s, w, limits) ? FactorStatus::yes : FactorStatus::no;
    };
    out.morse_factor = status(morse_substitution());
    out.toeplitz_factor = status(toeplitz_substitution());
  }
  return out;
}

}  // namespace symdyn
