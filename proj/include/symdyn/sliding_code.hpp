#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "symdyn/substitution.hpp"
#include "symdyn/words.hpp"

namespace symdyn {

/// Sliding block code as an explicit table. Output position i is read from
/// input positions i - memory ... i + anticipation and emits `output_length`
/// letters, so output_length > 1 describes a code into (X, sigma^r).
///
/// A total rule has an entry for every input window. A partial rule (the
/// Morse conjugacies are only defined on Morse blocks) covers exactly the
/// windows listed in its table, and applying it elsewhere is an error.
class LocalRule {
 public:
  LocalRule(Alphabet input, Alphabet output, std::size_t memory, std::size_t anticipation,
            std::map<Word, Word> table, bool partial = false)
      : input_(std::move(input)),
        output_(std::move(output)),
        memory_(memory),
        anticipation_(anticipation),
        table_(std::move(table)),
        partial_(partial) {
    if (table_.empty()) fail(ErrorKind::domain, "local rule table is empty");
    output_length_ = table_.begin()->second.size();
    if (output_length_ == 0) fail(ErrorKind::domain, "local rule outputs must be nonempty");
    for (const auto& [in, out] : table_) {
      if (in.size() != span()) fail(ErrorKind::domain, "rule window length differs from memory + anticipation + 1");
      if (!input_.contains(in)) fail(ErrorKind::domain, "rule window uses letters outside the input alphabet");
      if (out.size() != output_length_) fail(ErrorKind::domain, "rule outputs differ in length");
      if (!output_.contains(out)) fail(ErrorKind::domain, "rule output uses letters outside the output alphabet");
    }
    if (!partial_) {
      const std::size_t full = checked_power(input_.size(), span(), std::size_t{1} << 22);
      if (full == 0 || table_.size() != full) {
        fail(ErrorKind::domain, "total rule must list every input window (" + std::to_string(table_.size()) +
                                    " entries given)");
      }
    }
  }

  const Alphabet& input() const noexcept { return input_; }
  const Alphabet& output() const noexcept { return output_; }
  std::size_t memory() const noexcept { return memory_; }
  std::size_t anticipation() const noexcept { return anticipation_; }
  std::size_t span() const noexcept { return memory_ + anticipation_ + 1; }
  std::size_t output_length() const noexcept { return output_length_; }
  bool partial() const noexcept { return partial_; }
  const std::map<Word, Word>& table() const noexcept { return table_; }

  const Word* find(const Word& window) const {
    auto it = table_.find(window);
    return it == table_.end() ? nullptr : &it->second;
  }

  const Word& at(const Word& window) const {
    if (const Word* out = find(window)) return *out;
    fail(ErrorKind::domain, "rule undefined on window \"" + input_.render(window) + "\"");
  }

  friend bool operator==(const LocalRule&, const LocalRule&) = default;

 private:
  Alphabet input_;
  Alphabet output_;
  std::size_t memory_;
  std::size_t anticipation_;
  std::map<Word, Word> table_;
  bool partial_;
  std::size_t output_length_ = 1;
};

namespace detail {

inline void for_each_word(std::size_t alphabet_size, std::size_t length, const std::function<void(const Word&)>& f) {
  Word w(length, 0);
  while (true) {
    f(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] + 1u == alphabet_size) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

}  // namespace detail

// u + v + 1 mod 2 on adjacent letters.
inline LocalRule oxtoby_rule() {
  std::map<Word, Word> table;
  for (Letter u = 0; u < 2; ++u) {
    for (Letter v = 0; v < 2; ++v) table[{u, v}] = {static_cast<Letter>((u + v + 1) % 2)};
  }
  return LocalRule(Alphabet::binary(), Alphabet::binary(), 0, 1, std::move(table));
}

inline LocalRule identity_rule(const Alphabet& alphabet) {
  std::map<Word, Word> table;
  for (std::size_t a = 0; a < alphabet.size(); ++a) table[{static_cast<Letter>(a)}] = {static_cast<Letter>(a)};
  return LocalRule(alphabet, alphabet, 0, 0, std::move(table));
}

// 1-block code a -> image[a].
inline LocalRule projection_rule(const Alphabet& input, const Alphabet& output, const std::vector<Letter>& image) {
  if (image.size() != input.size()) fail(ErrorKind::domain, "projection needs one image per input letter");
  std::map<Word, Word> table;
  for (std::size_t a = 0; a < input.size(); ++a) table[{static_cast<Letter>(a)}] = {image[a]};
  return LocalRule(input, output, 0, 0, std::move(table));
}

// theta itself as a code into (X, sigma^r): memory 0, anticipation 0.
inline LocalRule substitution_rule(const Substitution& s) {
  std::map<Word, Word> table;
  for (std::size_t a = 0; a < s.size(); ++a) table[{static_cast<Letter>(a)}] = s.image(static_cast<Letter>(a));
  return LocalRule(s.alphabet(), s.alphabet(), 0, 0, std::move(table));
}

/// Image of a finite word: one output chunk per full input window.
inline Word apply_block(const LocalRule& rule, const Word& w) {
  if (w.size() < rule.span()) {
    fail(ErrorKind::range, "word of length " + std::to_string(w.size()) + " is shorter than the rule window " +
                               std::to_string(rule.span()));
  }
  Word out;
  out.reserve((w.size() - rule.span() + 1) * rule.output_length());
  Word window(rule.span());
  for (std::size_t j = 0; j + rule.span() <= w.size(); ++j) {
    std::copy(w.begin() + static_cast<std::ptrdiff_t>(j),
              w.begin() + static_cast<std::ptrdiff_t>(j + rule.span()), window.begin());
    const Word& chunk = rule.at(window);
    out.insert(out.end(), chunk.begin(), chunk.end());
  }
  return out;
}

/// Applies the code to a window; output index i is computed from input
/// indices i - memory ... i + anticipation (scaled by the output length), so
/// the result commutes with the shift.
inline Window apply_code(const LocalRule& rule, const Window& win) {
  Word out = apply_block(rule, win.letters);
  if (win.origin < rule.memory() || win.origin + rule.anticipation() > win.size()) {
    fail(ErrorKind::range, "coded window would not contain bilateral index 0");
  }
  return Window(std::move(out), (win.origin - rule.memory()) * rule.output_length());
}

/// Every input word of length |w|/q + memory + anticipation whose image is w,
/// in lexicographic order. Built left to right, pruning on each new window.
inline std::set<Word> preimage_blocks(const LocalRule& rule, const Word& w, const Limits& limits = {}) {
  if (!rule.output().contains(w)) fail(ErrorKind::domain, "word uses letters outside the rule output alphabet");
  const std::size_t q = rule.output_length();
  if (w.size() % q != 0) fail(ErrorKind::domain, "word length is not a multiple of the rule output length");
  const std::size_t positions = w.size() / q;
  const std::size_t target = positions + rule.span() - 1;
  const std::size_t k = rule.input().size();

  std::set<Word> out;
  std::size_t expansions = 0;
  Word current;
  current.reserve(target);
  Word window(rule.span());
  std::function<void()> grow = [&] {
    if (current.size() == target) {
      out.insert(current);
      return;
    }
    for (std::size_t a = 0; a < k; ++a) {
      if (++expansions > limits.max_preimage_expansions) {
        fail(ErrorKind::capacity, "preimage search exceeded its expansion cap");
      }
      current.push_back(static_cast<Letter>(a));
      bool ok = true;
      if (current.size() >= rule.span()) {
        const std::size_t pos = current.size() - rule.span();
        std::copy(current.end() - static_cast<std::ptrdiff_t>(rule.span()), current.end(), window.begin());
        const Word* chunk = rule.find(window);
        ok = chunk && std::equal(chunk->begin(), chunk->end(), w.begin() + static_cast<std::ptrdiff_t>(pos * q));
      }
      if (ok) grow();
      current.pop_back();
    }
  };
  grow();
  return out;
}

inline std::set<Word> image_language(const LocalRule& rule, const std::set<Word>& blocks) {
  std::set<Word> out;
  if (blocks.empty()) return out;
  const std::size_t n = blocks.begin()->size();
  for (const Word& w : blocks) {
    if (w.size() != n) fail(ErrorKind::domain, "image_language needs blocks of equal length");
    out.insert(apply_block(rule, w));
  }
  return out;
}

}  // namespace symdyn
