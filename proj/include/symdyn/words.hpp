#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symdyn/error.hpp"

namespace symdyn {

// A letter is an index into its alphabet.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline constexpr std::size_t max_alphabet_size = 255;

// Caps on how much the library is willing to materialize.
struct Limits {
  std::size_t max_word_length = std::size_t{1} << 20;
  std::size_t max_pattern_length = std::size_t{1} << 16;
  std::size_t max_preimage_expansions = std::size_t{1} << 22;
};

/// Ordered set of distinct single-character symbol names; letter i is named
/// names()[i].
class Alphabet {
 public:
  explicit Alphabet(std::string names) : names_(std::move(names)) {
    if (names_.size() < 2) {
      fail(ErrorKind::domain, "alphabet needs at least two symbols, got \"" + names_ + "\"");
    }
    if (names_.size() > max_alphabet_size) {
      fail(ErrorKind::capacity, "alphabet larger than 255 symbols");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const char c = names_[i];
      if (c <= ' ' || c > '~' || c == '.') {
        fail(ErrorKind::domain, std::string("symbol name must be printable and not '.': '") + c + "'");
      }
      if (names_.find(c, i + 1) != std::string::npos) {
        fail(ErrorKind::domain, std::string("duplicate symbol '") + c + "'");
      }
      index_[static_cast<unsigned char>(c)] = static_cast<int>(i);
    }
  }

  static Alphabet binary() { return Alphabet("01"); }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& names() const noexcept { return names_; }
  char name(Letter a) const { return names_.at(a); }
  bool is_binary() const noexcept { return names_ == "01"; }

  std::optional<Letter> find(char c) const noexcept {
    const int i = index_[static_cast<unsigned char>(c)];
    if (i < 0) return std::nullopt;
    return static_cast<Letter>(i);
  }

  Letter letter(char c) const {
    if (auto a = find(c)) return *a;
    fail(ErrorKind::domain, std::string("symbol '") + c + "' not in alphabet \"" + names_ + "\"");
  }

  bool contains(const Word& w) const noexcept {
    return std::all_of(w.begin(), w.end(), [&](Letter a) { return a < names_.size(); });
  }

  Word parse(std::string_view text) const {
    Word w;
    w.reserve(text.size());
    for (char c : text) w.push_back(letter(c));
    return w;
  }

  std::string render(const Word& w) const {
    std::string out;
    out.reserve(w.size());
    for (Letter a : w) out.push_back(name(a));
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.names_ == b.names_;
  }

 private:
  std::string names_;
  std::array<int, 256> index_ = [] {
    std::array<int, 256> t{};
    t.fill(-1);
    return t;
  }();
};

/// Finite excerpt of a bilaterally infinite sequence. The letter at array
/// position `origin` has bilateral index 0; `origin == letters.size()` means
/// the excerpt ends just before index 0.
struct Window {
  Word letters;
  std::size_t origin = 0;

  Window() = default;
  Window(Word w, std::size_t o) : letters(std::move(w)), origin(o) {
    if (origin > letters.size()) {
      fail(ErrorKind::range, "window origin outside the window");
    }
  }

  std::size_t size() const noexcept { return letters.size(); }

  // Bilateral index of the first letter.
  std::int64_t first_index() const noexcept {
    return -static_cast<std::int64_t>(origin);
  }

  friend bool operator==(const Window&, const Window&) = default;
};

inline std::string render(const Alphabet& alphabet, const Window& win) {
  std::string out = alphabet.render(win.letters);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(win.origin), '.');
  return out;
}

// Accepts "left.right"; a string without '.' is read with origin 0.
inline Window parse_window(const Alphabet& alphabet, std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Window(alphabet.parse(text), 0);
  if (text.find('.', dot + 1) != std::string_view::npos) {
    fail(ErrorKind::domain, "window has more than one '.'");
  }
  Word letters = alphabet.parse(text.substr(0, dot));
  const Word right = alphabet.parse(text.substr(dot + 1));
  const std::size_t origin = letters.size();
  letters.insert(letters.end(), right.begin(), right.end());
  return Window(std::move(letters), origin);
}

inline std::set<Word> factors(const Word& w, std::size_t n) {
  if (n < 1 || n > w.size()) {
    fail(ErrorKind::range, "factor length " + std::to_string(n) + " outside [1, " +
                               std::to_string(w.size()) + "]");
  }
  std::set<Word> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    out.emplace(w.begin() + static_cast<std::ptrdiff_t>(i),
                w.begin() + static_cast<std::ptrdiff_t>(i + n));
  }
  return out;
}

inline Word complement(const Alphabet& alphabet, const Word& w) {
  if (!alphabet.is_binary()) {
    fail(ErrorKind::domain, "complement needs the binary alphabet \"01\"");
  }
  Word out(w.size());
  std::transform(w.begin(), w.end(), out.begin(), [](Letter a) { return static_cast<Letter>(1 - a); });
  return out;
}

inline std::size_t count_letter(const Word& w, Letter a) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

// sigma^j: bilateral index 0 moves j places to the right.
inline Window shift(const Window& win, std::int64_t j) {
  const std::int64_t moved = static_cast<std::int64_t>(win.origin) + j;
  if (moved < 0 || moved > static_cast<std::int64_t>(win.size())) {
    fail(ErrorKind::range, "shift by " + std::to_string(j) + " moves the origin outside the window");
  }
  return Window(win.letters, static_cast<std::size_t>(moved));
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word slice(const Word& w, std::size_t pos, std::size_t len) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
              w.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

}  // namespace symdyn
