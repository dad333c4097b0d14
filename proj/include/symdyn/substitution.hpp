#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "symdyn/tiling.hpp"
#include "symdyn/words.hpp"

namespace symdyn {

/// Constant-length substitution: every letter maps to a word of the same
/// length r >= 2 over the same alphabet.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::vector<Word> images)
      : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (images_.size() != alphabet_.size()) {
      fail(ErrorKind::domain, "substitution needs exactly one image per letter");
    }
    length_ = images_.front().size();
    if (length_ < 2) fail(ErrorKind::domain, "substitution length must be at least 2");
    for (const Word& img : images_) {
      if (img.size() != length_) fail(ErrorKind::domain, "substitution images differ in length");
      if (!alphabet_.contains(img)) fail(ErrorKind::domain, "image uses a letter outside the alphabet");
    }
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return images_.size(); }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const noexcept { return images_; }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
  std::size_t length_ = 0;
};

// The two substitutions everything else is measured against.
inline Substitution morse_substitution() {
  return Substitution(Alphabet::binary(), {{0, 1}, {1, 0}});
}

inline Substitution toeplitz_substitution() {
  return Substitution(Alphabet::binary(), {{0, 1}, {0, 0}});
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Reads `a->w(;b->w)*`. Letters are declared by the order of the rules.
inline Substitution parse_substitution(std::string_view text) {
  std::vector<std::pair<char, std::string_view>> rules;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(';', pos), text.size());
    const std::string_view rule = detail::trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (rule.empty() && end == text.size() && !rules.empty()) break;
    const auto arrow = rule.find("->");
    if (arrow == std::string_view::npos) {
      fail(ErrorKind::domain, "substitution rule \"" + std::string(rule) + "\" lacks '->'");
    }
    const std::string_view lhs = detail::trim(rule.substr(0, arrow));
    if (lhs.size() != 1) {
      fail(ErrorKind::domain, "substitution rule \"" + std::string(rule) + "\" must name one letter");
    }
    rules.emplace_back(lhs.front(), detail::trim(rule.substr(arrow + 2)));
  }
  std::string names;
  for (const auto& [letter, img] : rules) names.push_back(letter);
  Alphabet alphabet(names);
  std::vector<Word> images;
  images.reserve(rules.size());
  for (const auto& [letter, img] : rules) images.push_back(alphabet.parse(img));
  return Substitution(std::move(alphabet), std::move(images));
}

inline std::string to_string(const Substitution& s) {
  std::string out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (a) out.push_back(';');
    out.push_back(s.alphabet().name(static_cast<Letter>(a)));
    out += "->";
    out += s.alphabet().render(s.image(static_cast<Letter>(a)));
  }
  return out;
}

inline Word substitute(const Substitution& s, const Word& w) {
  Word out;
  out.reserve(w.size() * s.length());
  for (Letter a : w) {
    if (a >= s.size()) fail(ErrorKind::domain, "letter outside the substitution alphabet");
    const Word& img = s.image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

inline Word substitute_n(const Substitution& s, Word w, std::size_t times, const Limits& limits = {}) {
  for (std::size_t i = 0; i < times; ++i) {
    if (w.size() * s.length() > limits.max_word_length) {
      fail(ErrorKind::capacity, "iterated image exceeds the maximum word length");
    }
    w = substitute(s, w);
  }
  return w;
}

// r^k, or 0 when it exceeds `cap`.
inline std::size_t checked_power(std::size_t r, std::size_t k, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > cap / r) return 0;
    out *= r;
  }
  return out;
}

inline Substitution power(const Substitution& s, std::size_t k, const Limits& limits = {}) {
  if (k < 1) fail(ErrorKind::domain, "substitution power must be at least 1");
  if (checked_power(s.length(), k, limits.max_word_length) == 0) {
    fail(ErrorKind::capacity, "power " + std::to_string(k) + " exceeds the maximum word length");
  }
  std::vector<Word> images;
  images.reserve(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    images.push_back(substitute_n(s, Word{static_cast<Letter>(a)}, k, limits));
  }
  return Substitution(s.alphabet(), std::move(images));
}

// Images of theta^k for k >= 0 (k = 0 gives the letters themselves).
inline std::vector<Word> power_images(const Substitution& s, std::size_t k, const Limits& limits = {}) {
  if (k == 0) {
    std::vector<Word> out;
    for (std::size_t a = 0; a < s.size(); ++a) out.push_back({static_cast<Letter>(a)});
    return out;
  }
  return power(s, k, limits).images();
}

/// Letter a sits at index -1 and b at index 0 of a theta^period-fixed point.
struct Seed {
  Letter a = 0;
  Letter b = 0;
  std::size_t period = 1;

  friend auto operator<=>(const Seed&, const Seed&) = default;
};

namespace detail {

// a -> last letter of theta(a), and a -> first letter of theta(a).
inline std::vector<Letter> last_letter_map(const Substitution& s) {
  std::vector<Letter> f(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) f[a] = s.image(static_cast<Letter>(a)).back();
  return f;
}

inline std::vector<Letter> first_letter_map(const Substitution& s) {
  std::vector<Letter> f(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) f[a] = s.image(static_cast<Letter>(a)).front();
  return f;
}

inline Letter iterate(const std::vector<Letter>& f, Letter a, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) a = f[a];
  return a;
}

inline std::size_t cycle_length_lcm(const std::vector<Letter>& f) {
  std::size_t out = 1;
  for (std::size_t a = 0; a < f.size(); ++a) {
    // walk |A| steps to land on the cycle, then measure it
    Letter x = iterate(f, static_cast<Letter>(a), f.size());
    std::size_t len = 1;
    for (Letter y = f[x]; y != x; y = f[y]) ++len;
    out = std::lcm(out, len);
  }
  return out;
}

}  // namespace detail

inline bool is_valid_seed(const Substitution& s, const Seed& seed) {
  if (seed.period < 1 || seed.a >= s.size() || seed.b >= s.size()) return false;
  return detail::iterate(detail::last_letter_map(s), seed.a, seed.period) == seed.a &&
         detail::iterate(detail::first_letter_map(s), seed.b, seed.period) == seed.b;
}

/// All (a, b) with theta^p(a) ending in a and theta^p(b) beginning with b,
/// in lexicographic order.
inline std::vector<Seed> periodic_seeds(const Substitution& s, std::size_t period) {
  if (period < 1) fail(ErrorKind::domain, "period must be at least 1");
  const auto last = detail::last_letter_map(s);
  const auto first = detail::first_letter_map(s);
  std::vector<Seed> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (detail::iterate(last, static_cast<Letter>(a), period) != a) continue;
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (detail::iterate(first, static_cast<Letter>(b), period) != b) continue;
      out.push_back({static_cast<Letter>(a), static_cast<Letter>(b), period});
    }
  }
  return out;
}

// Smallest period at which every periodic point of theta-bar is fixed.
inline std::size_t common_seed_period(const Substitution& s) {
  return std::lcm(detail::cycle_length_lcm(detail::last_letter_map(s)),
                  detail::cycle_length_lcm(detail::first_letter_map(s)));
}

/// Central excerpt [-radius, radius) of the theta^period-fixed point grown from
/// the seed. Each side is iterated with truncation: the prefix of theta(w)
/// only depends on the prefix of w, and symmetrically for suffixes.
inline Window periodic_window(const Substitution& s, const Seed& seed, std::size_t radius,
                              const Limits& limits = {}) {
  if (!is_valid_seed(s, seed)) {
    fail(ErrorKind::seed, "seed (" + std::string(1, s.alphabet().name(seed.a < s.size() ? seed.a : 0)) +
                              "," + std::string(1, s.alphabet().name(seed.b < s.size() ? seed.b : 0)) +
                              ") is not fixed by theta^" + std::to_string(seed.period));
  }
  if (radius > limits.max_word_length / 2) {
    fail(ErrorKind::capacity, "window radius exceeds the maximum word length");
  }
  Word right{seed.b};
  Word left{seed.a};
  while (right.size() < radius) {
    for (std::size_t i = 0; i < seed.period; ++i) {
      right = substitute(s, right);
      if (right.size() > radius) right.resize(std::max<std::size_t>(radius, 1));
    }
  }
  while (left.size() < radius) {
    for (std::size_t i = 0; i < seed.period; ++i) {
      left = substitute(s, left);
      if (left.size() > radius) left.erase(left.begin(), left.end() - static_cast<std::ptrdiff_t>(std::max<std::size_t>(radius, 1)));
    }
  }
  right.resize(radius);
  left.erase(left.begin(), left.end() - static_cast<std::ptrdiff_t>(radius));
  Word letters = concat(std::move(left), right);
  return Window(std::move(letters), radius);
}

inline bool is_injective(const Substitution& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s.image(static_cast<Letter>(a)) == s.image(static_cast<Letter>(b))) return false;
    }
  }
  return true;
}

struct Quotient {
  Substitution substitution;
  std::vector<Letter> class_of;  // original letter -> quotient letter
};

/// Merge letters with equal images until the result is injective. Each class
/// keeps the name of its smallest member.
inline Quotient identify_equal_images(const Substitution& s) {
  std::vector<Letter> class_of(s.size());
  std::iota(class_of.begin(), class_of.end(), Letter{0});
  Substitution current = s;
  while (!is_injective(current)) {
    std::map<Word, Letter> class_by_image;
    std::vector<Letter> step(current.size());
    std::vector<Letter> representatives;
    for (std::size_t a = 0; a < current.size(); ++a) {
      auto [it, fresh] = class_by_image.emplace(current.image(static_cast<Letter>(a)),
                                                static_cast<Letter>(representatives.size()));
      if (fresh) representatives.push_back(static_cast<Letter>(a));
      step[a] = it->second;
    }
    if (representatives.size() < 2) {
      fail(ErrorKind::degenerate, "identifying equal images leaves fewer than two letters");
    }
    std::string names;
    std::vector<Word> images;
    for (Letter rep : representatives) {
      names.push_back(current.alphabet().name(rep));
      Word img = current.image(rep);
      for (Letter& x : img) x = step[x];
      images.push_back(std::move(img));
    }
    current = Substitution(Alphabet(names), std::move(images));
    for (Letter& c : class_of) c = step[c];
  }
  return {std::move(current), std::move(class_of)};
}

struct Desubstitution {
  std::size_t phase = 0;
  std::int64_t start = 0;   // bilateral index of the first tile
  std::size_t offset = 0;   // array position of the first tile
  Word preimage;            // recovered letters, one per tile

  friend bool operator==(const Desubstitution&, const Desubstitution&) = default;
};

/// Every phase at which the window is a concatenation of the r^k-blocks
/// theta^k(a). Non-injective substitutions resolve a tile to its smallest
/// preimage letter.
inline std::vector<Desubstitution> desubstitute(const Substitution& s, std::size_t k, const Window& win,
                                                const Limits& limits = {}) {
  if (!s.alphabet().contains(win.letters)) {
    fail(ErrorKind::domain, "window uses letters outside the substitution alphabet");
  }
  const std::vector<Word> blocks = power_images(s, k, limits);
  const std::size_t L = blocks.front().size();
  if (win.size() < min_tiles_per_phase * L) {
    fail(ErrorKind::insufficient_window, "window shorter than three blocks of length " + std::to_string(L));
  }
  std::vector<Desubstitution> out;
  for (TilePhase& p : parse_phases(win, blocks, L)) {
    out.push_back({p.phase, p.start, p.offset, std::move(p.tokens)});
  }
  return out;
}

}  // namespace symdyn
