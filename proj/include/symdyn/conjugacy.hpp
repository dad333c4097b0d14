#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symdyn/characterize.hpp"
#include "symdyn/graphs.hpp"
#include "symdyn/language.hpp"
#include "symdyn/sliding_code.hpp"
#include "symdyn/substitution.hpp"
#include "symdyn/tiling.hpp"

// Finite-radius witnesses for conjugacy to the Toeplitz and Morse minimal
// sets. A certificate names 2^k-blocks; a point of the candidate system is
// accepted when it cuts, at exactly one phase, into those blocks and the
// resulting token sequence obeys the Toeplitz (no even square) or Morse (no
// overlap plus gap table) constraints. Passing at radius N is evidence, not a
// proof; conjugacy is a statement about infinite points.

namespace symdyn {

struct ToeplitzCertificate {
  std::size_t k = 0;
  Word c0;
  Word c1;

  std::size_t block_length() const noexcept { return std::size_t{1} << k; }
  friend auto operator<=>(const ToeplitzCertificate&, const ToeplitzCertificate&) = default;
};

// c0p / c1p are C0' / C1'. Only c0 != c1 is required; c0 == c0p is legal.
struct MorseCertificate {
  std::size_t k = 0;
  Word c0;
  Word c1;
  Word c0p;
  Word c1p;

  std::size_t block_length() const noexcept { return std::size_t{1} << k; }
  friend auto operator<=>(const MorseCertificate&, const MorseCertificate&) = default;
};

enum class FailureReason { none, no_phase, multiple_phases, token_pattern, gap_rule, blocks_equal };

inline constexpr std::string_view to_string(FailureReason r) {
  switch (r) {
    case FailureReason::none: return "none";
    case FailureReason::no_phase: return "no_phase";
    case FailureReason::multiple_phases: return "multiple_phases";
    case FailureReason::token_pattern: return "token_pattern";
    case FailureReason::gap_rule: return "gap_rule";
    case FailureReason::blocks_equal: return "blocks_equal";
  }
  return "none";
}

// Token letters of a Morse parse. Gap tokens are labelled by the position in
// the neighbor table, never by comparing raw blocks.
enum MorseToken : Letter { tok_c0 = 0, tok_c1 = 1, tok_c0p = 2, tok_c1p = 3 };

struct WindowParse {
  std::size_t window = 0;   // index into the tested windows
  std::size_t phase = 0;    // tile starts are congruent to this mod 2^k
  std::int64_t start = 0;   // bilateral index of the first token
  Word tokens;
  int parity = -1;          // Morse only: parity of the C0/C1 tiles

  friend bool operator==(const WindowParse&, const WindowParse&) = default;
};

struct ParseVerdict {
  bool accepted = false;
  FailureReason failure = FailureReason::none;
  std::size_t radius = 0;
  std::size_t windows_tested = 0;
  std::optional<std::size_t> failed_window;
  std::vector<WindowParse> phases;
};

/// The points checked for "some (and hence every) point": one window per
/// periodic point plus every language block of length 2 * radius, centered.
inline std::vector<Window> test_windows(const LanguageSource& lang, std::size_t radius) {
  std::vector<Window> out = lang.windows(radius);
  for (const Word& b : lang.blocks(2 * radius)) out.emplace_back(b, radius);
  return out;
}

namespace detail {

inline void check_block_lengths(std::size_t k, std::initializer_list<const Word*> blocks) {
  if (k >= 30) fail(ErrorKind::capacity, "certificate exponent too large");
  for (const Word* b : blocks) {
    if (b->size() != (std::size_t{1} << k)) {
      fail(ErrorKind::domain, "certificate blocks must have length 2^k = " + std::to_string(std::size_t{1} << k));
    }
  }
}

inline void check_radius(std::size_t k, std::size_t radius) {
  if (radius < 3 * (std::size_t{1} << k)) {
    fail(ErrorKind::range, "radius must be at least 3 * 2^k");
  }
}

inline ParseVerdict reject(ParseVerdict v, FailureReason why, std::optional<std::size_t> window = std::nullopt) {
  v.accepted = false;
  v.failure = why;
  v.failed_window = window;
  v.phases.clear();
  return v;
}

}  // namespace detail

inline ParseVerdict verify_toeplitz_windows(const std::vector<Window>& windows, const ToeplitzCertificate& cert,
                                            std::size_t radius) {
  detail::check_block_lengths(cert.k, {&cert.c0, &cert.c1});
  ParseVerdict v;
  v.radius = radius;
  v.windows_tested = windows.size();
  if (cert.c0 == cert.c1) return detail::reject(v, FailureReason::blocks_equal);
  const std::size_t L = cert.block_length();
  const std::vector<Word> blocks{cert.c0, cert.c1};
  for (std::size_t w = 0; w < windows.size(); ++w) {
    auto parses = parse_phases(windows[w], blocks, L);
    if (parses.empty()) return detail::reject(v, FailureReason::no_phase, w);
    if (parses.size() > 1 && windows[w].size() / L >= 4) {
      return detail::reject(v, FailureReason::multiple_phases, w);
    }
    TilePhase& p = parses.front();
    if (find_even_square(p.tokens, 0)) return detail::reject(v, FailureReason::token_pattern, w);
    v.phases.push_back({w, p.phase, p.start, std::move(p.tokens), -1});
  }
  v.accepted = true;
  return v;
}

/// Accepts iff C0 != C1 and every tested window cuts at exactly one phase into
/// C0/C1 tiles whose token word has no square BB with an even number of C0.
inline ParseVerdict verify_toeplitz_certificate(const LanguageSource& lang, const ToeplitzCertificate& cert,
                                                std::size_t radius) {
  detail::check_block_lengths(cert.k, {&cert.c0, &cert.c1});
  detail::check_radius(cert.k, radius);
  return verify_toeplitz_windows(test_windows(lang, radius), cert, radius);
}

namespace detail {

// Table for the Morse gap between main tokens `left` and `right` (0 = C0,
// 1 = C1), read left to right.
inline MorseToken gap_label(Letter left, Letter right) {
  if (left == tok_c1 && right == tok_c1) return tok_c0;
  if (left == tok_c0 && right == tok_c0) return tok_c1;
  if (left == tok_c1 && right == tok_c0) return tok_c0p;
  return tok_c1p;
}

inline const Word& morse_block(const MorseCertificate& c, MorseToken t) {
  switch (t) {
    case tok_c0: return c.c0;
    case tok_c1: return c.c1;
    case tok_c0p: return c.c0p;
    default: return c.c1p;
  }
}

// Recoded letter of a token: C0 and C0' go to 0, C1 and C1' to 1.
inline Letter morse_letter(Letter token) { return token == tok_c0 || token == tok_c0p ? 0 : 1; }

struct MorseAttempt {
  FailureReason failure = FailureReason::none;
  WindowParse parse;
};

// One phase / parity reading of a window. tiles.tokens index into
// {C0, C1, C0', C1'} (lowest index on ties). Gaps before the first and after
// the last main tile lack a neighbor and are left out of the parse.
inline MorseAttempt morse_attempt(const MorseCertificate& cert, const TilePhase& tiles, int parity) {
  const std::vector<const Word*> by_index{&cert.c0, &cert.c1, &cert.c0p, &cert.c1p};
  const std::size_t L = cert.block_length();
  // global tile index of tile t: (start - phase) / L + t
  const std::int64_t base = (tiles.start - static_cast<std::int64_t>(tiles.phase)) / static_cast<std::int64_t>(L);
  const std::size_t first = static_cast<std::size_t>(((base % 2) + 2) % 2) == static_cast<std::size_t>(parity) ? 0 : 1;

  MorseAttempt out;
  Word mains;
  Word tokens;
  for (std::size_t t = first; t < tiles.tokens.size(); t += 2) {
    const Word& raw = *by_index[tiles.tokens[t]];
    Letter main;
    if (raw == cert.c0) {
      main = tok_c0;
    } else if (raw == cert.c1) {
      main = tok_c1;
    } else {
      out.failure = FailureReason::gap_rule;
      return out;
    }
    if (!mains.empty()) {
      const MorseToken label = gap_label(mains.back(), main);
      if (*by_index[tiles.tokens[t - 1]] != morse_block(cert, label)) {
        out.failure = FailureReason::gap_rule;
        return out;
      }
      tokens.push_back(label);
    }
    mains.push_back(main);
    tokens.push_back(main);
  }
  if (mains.size() < 2) {
    out.failure = FailureReason::no_phase;
    return out;
  }
  if (find_overlap(mains)) {
    out.failure = FailureReason::token_pattern;
    return out;
  }
  out.parse.phase = tiles.phase;
  out.parse.start = tiles.start + static_cast<std::int64_t>(first * L);
  out.parse.tokens = std::move(tokens);
  out.parse.parity = parity;
  return out;
}

inline int failure_rank(FailureReason r) {
  switch (r) {
    case FailureReason::no_phase: return 0;
    case FailureReason::gap_rule: return 1;
    case FailureReason::token_pattern: return 2;
    default: return 3;
  }
}

}  // namespace detail

inline ParseVerdict verify_morse_windows(const std::vector<Window>& windows, const MorseCertificate& cert,
                                         std::size_t radius) {
  detail::check_block_lengths(cert.k, {&cert.c0, &cert.c1, &cert.c0p, &cert.c1p});
  ParseVerdict v;
  v.radius = radius;
  v.windows_tested = windows.size();
  if (cert.c0 == cert.c1) return detail::reject(v, FailureReason::blocks_equal);
  const std::size_t L = cert.block_length();
  const std::vector<Word> blocks{cert.c0, cert.c1, cert.c0p, cert.c1p};
  for (std::size_t w = 0; w < windows.size(); ++w) {
    const auto tilings = parse_phases(windows[w], blocks, L);
    if (tilings.empty()) return detail::reject(v, FailureReason::no_phase, w);
    std::vector<WindowParse> valid;
    FailureReason worst = FailureReason::no_phase;
    for (const TilePhase& tiles : tilings) {
      for (int parity = 0; parity < 2; ++parity) {
        auto attempt = detail::morse_attempt(cert, tiles, parity);
        if (attempt.failure == FailureReason::none) {
          attempt.parse.window = w;
          valid.push_back(std::move(attempt.parse));
        } else if (detail::failure_rank(attempt.failure) > detail::failure_rank(worst)) {
          worst = attempt.failure;
        }
      }
    }
    if (valid.empty()) return detail::reject(v, worst, w);
    if (valid.size() > 1) return detail::reject(v, FailureReason::multiple_phases, w);
    v.phases.push_back(std::move(valid.front()));
  }
  v.accepted = true;
  return v;
}

/// Accepts iff C0 != C1 and every tested window has exactly one (phase,
/// parity) reading where the parity tiles are C0/C1 without an overlap BBb
/// and every tile between them follows the neighbor table
///   (C1,C1) -> C0, (C0,C0) -> C1, (C1,C0) -> C0', (C0,C1) -> C1'.
inline ParseVerdict verify_morse_certificate(const LanguageSource& lang, const MorseCertificate& cert,
                                             std::size_t radius) {
  detail::check_block_lengths(cert.k, {&cert.c0, &cert.c1, &cert.c0p, &cert.c1p});
  detail::check_radius(cert.k, radius);
  return verify_morse_windows(test_windows(lang, radius), cert, radius);
}

inline std::size_t default_radius(std::size_t k) { return 32 * (std::size_t{1} << k); }

namespace detail {

inline void check_recoding(const Word& out, const Substitution& target, std::size_t k) {
  const std::size_t nmax = std::min(out.size(), (std::size_t{1} << k) + 2);
  for (std::size_t n = 1; n <= nmax; ++n) {
    const Language lang = language(target, n);
    for (const Word& f : factors(out, n)) {
      if (!lang.count(f)) fail(ErrorKind::consistency, "recoded window leaves the target language");
    }
  }
}

inline Window place(Word letters, std::int64_t start) {
  if (start > 0 || static_cast<std::size_t>(-start) > letters.size()) {
    fail(ErrorKind::range, "recoded tokens do not cover bilateral index 0");
  }
  return Window(std::move(letters), static_cast<std::size_t>(-start));
}

}  // namespace detail

/// C0 -> tau^k(0), C1 -> tau^k(1), blockwise and in place.
inline Window recode_toeplitz(const ToeplitzCertificate& cert, const WindowParse& parse) {
  detail::check_block_lengths(cert.k, {&cert.c0, &cert.c1});
  if (cert.c0 == cert.c1) fail(ErrorKind::state, "certificate blocks are equal");
  for (Letter t : parse.tokens) {
    if (t > 1) fail(ErrorKind::state, "token outside {C0, C1}");
  }
  if (find_even_square(parse.tokens, 0)) fail(ErrorKind::state, "tokens contain a square with an even C0 count");
  const Substitution tau = toeplitz_substitution();
  const auto blocks = power_images(tau, cert.k);
  Word out;
  for (Letter t : parse.tokens) out = concat(std::move(out), blocks[t]);
  detail::check_recoding(out, tau, cert.k);
  return detail::place(std::move(out), parse.start);
}

/// C0, C0' -> mu^k(0) and C1, C1' -> mu^k(1). Gap tokens carry their table
/// label, so even C0' == C1 as raw blocks recodes correctly.
inline Window recode_morse(const MorseCertificate& cert, const WindowParse& parse) {
  detail::check_block_lengths(cert.k, {&cert.c0, &cert.c1, &cert.c0p, &cert.c1p});
  if (cert.c0 == cert.c1) fail(ErrorKind::state, "certificate blocks are equal");
  const Word& tokens = parse.tokens;
  if (tokens.empty() || tokens.size() % 2 == 0) fail(ErrorKind::state, "Morse tokens must alternate main/gap");
  Word mains;
  for (std::size_t t = 0; t < tokens.size(); t += 2) {
    if (tokens[t] > tok_c1) fail(ErrorKind::state, "main token outside {C0, C1}");
    if (t > 0 && tokens[t - 1] != detail::gap_label(tokens[t - 2], tokens[t])) {
      fail(ErrorKind::state, "gap token violates the neighbor table");
    }
    mains.push_back(tokens[t]);
  }
  if (find_overlap(mains)) fail(ErrorKind::state, "main tokens contain an overlap");
  const Substitution mu = morse_substitution();
  const auto blocks = power_images(mu, cert.k);
  Word out;
  for (Letter t : tokens) out = concat(std::move(out), blocks[detail::morse_letter(t)]);
  detail::check_recoding(out, mu, cert.k);
  return detail::place(std::move(out), parse.start);
}

namespace detail {

inline std::vector<Word> candidate_blocks(const LanguageSource& lang, std::size_t k, const Limits& limits) {
  if (k >= 30 || (std::size_t{1} << k) * 64 > limits.max_word_length) {
    fail(ErrorKind::capacity, "2^k exceeds the word cap for certificate search");
  }
  const Language blocks = lang.blocks(std::size_t{1} << k);
  return {blocks.begin(), blocks.end()};
}

}  // namespace detail

/// Lexicographically least (k, C0, C1) with k <= kmax and blocks from the
/// system's 2^k-blocks, verified at radius 32 * 2^k.
inline std::optional<ToeplitzCertificate> search_toeplitz_certificate(const LanguageSource& lang, std::size_t kmax,
                                                                      const Limits& limits = {}) {
  for (std::size_t k = 0; k <= kmax; ++k) {
    const auto blocks = detail::candidate_blocks(lang, k, limits);
    const std::size_t radius = default_radius(k);
    const auto windows = test_windows(lang, radius);
    for (const Word& c0 : blocks) {
      for (const Word& c1 : blocks) {
        if (c0 == c1) continue;
        ToeplitzCertificate cert{k, c0, c1};
        if (verify_toeplitz_windows(windows, cert, radius).accepted) return cert;
      }
    }
  }
  return std::nullopt;
}

/// Lexicographically least (k, C0, C1, C0', C1'). Candidates whose parses
/// would put a pair outside {C0C1, C0C1', C1C0, C1C0', C0'C0, C1'C1} next to
/// each other fail the gap table inside verification.
inline std::optional<MorseCertificate> search_morse_certificate(const LanguageSource& lang, std::size_t kmax,
                                                                const Limits& limits = {}) {
  for (std::size_t k = 0; k <= kmax; ++k) {
    const auto blocks = detail::candidate_blocks(lang, k, limits);
    const std::size_t radius = default_radius(k);
    const auto windows = test_windows(lang, radius);
    for (const Word& c0 : blocks) {
      for (const Word& c1 : blocks) {
        if (c0 == c1) continue;
        for (const Word& c0p : blocks) {
          for (const Word& c1p : blocks) {
            MorseCertificate cert{k, c0, c1, c0p, c1p};
            if (verify_morse_windows(windows, cert, radius).accepted) return cert;
          }
        }
      }
    }
  }
  return std::nullopt;
}

enum class TargetKind { toeplitz, morse };

inline constexpr std::string_view to_string(TargetKind k) { return k == TargetKind::toeplitz ? "toeplitz" : "morse"; }

struct NecessaryConditions {
  TargetKind kind = TargetKind::toeplitz;
  bool injective = false;
  bool primitive = false;
  std::size_t length = 0;
  bool length_power_of_two = false;
  std::size_t alphabet_size = 0;
  std::size_t alphabet_bound = 0;
  bool alphabet_bound_ok = false;
  bool all_pass = false;  // necessary only; never a proof of conjugacy
};

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline NecessaryConditions necessary_conditions(TargetKind kind, const Substitution& s) {
  NecessaryConditions out;
  out.kind = kind;
  out.injective = is_injective(s);
  out.primitive = is_primitive(s);
  out.length = s.length();
  out.length_power_of_two = is_power_of_two(s.length());
  out.alphabet_size = s.size();
  out.alphabet_bound = kind == TargetKind::toeplitz ? 3 : 6;
  out.alphabet_bound_ok = s.size() <= out.alphabet_bound;
  out.all_pass = out.injective && out.primitive && out.length_power_of_two && out.alphabet_bound_ok;
  return out;
}

struct DerivedSubstitution {
  Substitution substitution;
  std::vector<Word> blocks;  // letter i of the result names blocks[i]
  bool primitive = false;
};

namespace detail {

inline constexpr std::string_view block_letter_names =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz!#$%&*+,-/:<=>?@^_`|~";

}  // namespace detail

/// Induced substitution of a conjugacy (X, sigma) -> (X', sigma^r) given by a
/// memory-0 rule sending (m+1)-blocks to r-blocks. The rule is padded to read
/// m(r-1)+1 letters, so each (mr+1)-block b of X has an (mr+r)-letter image;
/// its r windows of length mr+1 are the image letters of b.
inline DerivedSubstitution derive_substitution(const LanguageSource& lang, const LocalRule& rule, std::size_t r) {
  if (r < 2) fail(ErrorKind::domain, "r must be at least 2");
  if (rule.memory() != 0) fail(ErrorKind::domain, "derive_substitution needs a memory-0 rule");
  if (rule.output_length() != r) fail(ErrorKind::domain, "rule must emit r-blocks");
  if (!(rule.input() == lang.alphabet()) || !(rule.output() == lang.alphabet())) {
    fail(ErrorKind::domain, "rule alphabets must match the system alphabet");
  }
  const std::size_t m = rule.anticipation();
  const std::size_t width = m * r + 1;

  const Language r_blocks = lang.blocks(r);
  for (const Word& u : lang.blocks(m + 1)) {
    const Word* img = rule.find(u);
    if (!img || !r_blocks.count(*img)) {
      fail(ErrorKind::consistency, "rule image of \"" + lang.alphabet().render(u) + "\" is not a block of X");
    }
  }

  const Language block_set = lang.blocks(width);
  std::vector<Word> blocks(block_set.begin(), block_set.end());
  std::map<Word, Letter> letter_of;
  for (std::size_t i = 0; i < blocks.size(); ++i) letter_of.emplace(blocks[i], static_cast<Letter>(i));
  if (blocks.size() < 2) fail(ErrorKind::degenerate, "system has fewer than two blocks of length mr+1");

  std::string names;
  if (width == 1) {
    for (const Word& b : blocks) names.push_back(lang.alphabet().name(b.front()));
  } else {
    if (blocks.size() > detail::block_letter_names.size()) {
      fail(ErrorKind::capacity, "too many blocks to name with single characters");
    }
    names = std::string(detail::block_letter_names.substr(0, blocks.size()));
  }

  std::vector<Word> images;
  images.reserve(blocks.size());
  for (const Word& b : blocks) {
    const Word expanded = apply_block(rule, b);  // (m+1) windows, mr + r letters
    Word img;
    for (std::size_t t = 0; t < r; ++t) {
      auto it = letter_of.find(slice(expanded, t, width));
      if (it == letter_of.end()) {
        fail(ErrorKind::consistency, "coded image of a block leaves the language of X");
      }
      img.push_back(it->second);
    }
    images.push_back(std::move(img));
  }
  Substitution sub(Alphabet(names), std::move(images));
  const bool primitive = is_primitive(sub);
  return {std::move(sub), std::move(blocks), primitive};
}

struct SelfSimilarityReport {
  std::size_t n = 0;
  std::size_t image_count = 0;   // |theta(language(n))|
  std::size_t target_count = 0;  // |language(r n)|
  bool contained = false;
  bool proper = false;
  std::size_t windows_checked = 0;
  bool unique_phase = false;

  bool holds() const noexcept { return contained && proper && unique_phase; }
};

/// Finite form of "(X, sigma) is conjugate to (theta-bar(X), sigma^r) and
/// theta-bar(X) is a proper subset": images of n-blocks are (r n)-blocks,
/// not all of them, and sample windows desubstitute at a single phase.
inline SelfSimilarityReport self_similarity_witness(const Substitution& s, std::size_t n, const Limits& limits = {}) {
  if (!is_injective(s)) fail(ErrorKind::precondition, "self_similarity_witness needs an injective substitution");
  SubstitutionLanguage lang(s, limits);
  SelfSimilarityReport out;
  out.n = n;
  std::set<Word> images;
  for (const Word& w : language(s, n, limits)) images.insert(substitute(s, w));
  const Language target = language(s, s.length() * n, limits);
  out.image_count = images.size();
  out.target_count = target.size();
  out.contained = std::includes(target.begin(), target.end(), images.begin(), images.end());
  out.proper = out.contained && images.size() < target.size();
  out.unique_phase = true;
  for (const Window& win : lang.windows(16 * s.length())) {
    ++out.windows_checked;
    if (desubstitute(s, 1, win, limits).size() != 1) out.unique_phase = false;
  }
  return out;
}

}  // namespace symdyn
