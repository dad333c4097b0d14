#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "symdyn/graphs.hpp"
#include "symdyn/substitution.hpp"

namespace symdyn {

using Language = std::set<Word>;

/// Legal 2-blocks of the minimal set of a primitive substitution: start from
/// the 2-blocks inside the letter images, then close under "uv legal implies
/// every 2-block of theta(u)theta(v) is legal".
inline Language two_block_closure(const Substitution& s) {
  Language known;
  std::vector<Word> todo;
  auto add_all = [&](const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      Word pair{w[i], w[i + 1]};
      if (known.insert(pair).second) todo.push_back(std::move(pair));
    }
  };
  for (const Word& img : s.images()) add_all(img);
  while (!todo.empty()) {
    const Word uv = std::move(todo.back());
    todo.pop_back();
    add_all(substitute(s, uv));
  }
  return known;
}

/// The n-blocks of the unique minimal set of a primitive substitution. Every
/// such block fits inside theta^m(u)theta^m(v) for a legal 2-block uv once
/// r^m >= n.
inline Language language(const Substitution& s, std::size_t n, const Limits& limits = {}) {
  if (n < 1) fail(ErrorKind::range, "language block length must be at least 1");
  if (!is_primitive(s)) {
    fail(ErrorKind::primitivity,
         "substitution graph is not primitive; reduce it first (identify_equal_images, graph analysis)");
  }
  std::size_t m = 0;
  std::size_t span = 1;
  while (span < n) {
    if (span > limits.max_word_length / (2 * s.length())) {
      fail(ErrorKind::capacity, "block length " + std::to_string(n) + " exceeds the maximum word length");
    }
    span *= s.length();
    ++m;
  }
  Language out;
  for (const Word& uv : two_block_closure(s)) {
    const Word expanded = substitute_n(s, uv, m, limits);
    for (std::size_t i = 0; i + n <= expanded.size(); ++i) {
      out.emplace(expanded.begin() + static_cast<std::ptrdiff_t>(i),
                  expanded.begin() + static_cast<std::ptrdiff_t>(i + n));
    }
  }
  return out;
}

/// Whether w occurs in the minimal set, without materializing language(s, |w|).
inline bool is_factor(const Substitution& s, const Word& w, const Limits& limits = {}) {
  if (w.empty()) return true;
  if (!is_primitive(s)) fail(ErrorKind::primitivity, "substitution graph is not primitive");
  if (!s.alphabet().contains(w)) return false;
  std::size_t m = 0;
  for (std::size_t span = 1; span < w.size(); span *= s.length()) {
    if (span > limits.max_word_length / (2 * s.length())) {
      fail(ErrorKind::capacity, "word too long for a factor check");
    }
    ++m;
  }
  for (const Word& uv : two_block_closure(s)) {
    const Word expanded = substitute_n(s, uv, m, limits);
    if (std::search(expanded.begin(), expanded.end(), w.begin(), w.end()) != expanded.end()) return true;
  }
  return false;
}

/// Finite access to a candidate symbolic minimal set: its blocks and some
/// sample windows of its points.
class LanguageSource {
 public:
  virtual ~LanguageSource() = default;
  virtual const Alphabet& alphabet() const = 0;
  virtual Language blocks(std::size_t n) const = 0;
  // Windows [-radius, radius) of points in the system.
  virtual std::vector<Window> windows(std::size_t radius) const = 0;
};

/// Minimal set of a primitive substitution. Sample windows are the periodic
/// points grown from every legal seed at the common seed period.
class SubstitutionLanguage final : public LanguageSource {
 public:
  explicit SubstitutionLanguage(Substitution s, Limits limits = {})
      : sub_(std::move(s)), limits_(limits) {
    if (!is_primitive(sub_)) {
      fail(ErrorKind::primitivity, "language source substitution is not primitive");
    }
  }

  const Substitution& substitution() const noexcept { return sub_; }
  const Alphabet& alphabet() const override { return sub_.alphabet(); }
  Language blocks(std::size_t n) const override { return language(sub_, n, limits_); }

  std::vector<Seed> legal_seeds() const {
    const Language pairs = two_block_closure(sub_);
    std::vector<Seed> out;
    for (const Seed& seed : periodic_seeds(sub_, common_seed_period(sub_))) {
      if (pairs.count(Word{seed.a, seed.b})) out.push_back(seed);
    }
    return out;
  }

  std::vector<Window> windows(std::size_t radius) const override {
    std::vector<Window> out;
    for (const Seed& seed : legal_seeds()) out.push_back(periodic_window(sub_, seed, radius, limits_));
    return out;
  }

 private:
  Substitution sub_;
  Limits limits_;
};

/// Explicit sample windows, e.g. produced by hand or by another tool. Blocks
/// of length n are the n-factors of the samples; windows are the samples
/// trimmed to the requested radius (samples too short are skipped).
class BlockSetLanguage final : public LanguageSource {
 public:
  BlockSetLanguage(Alphabet alphabet, std::vector<Window> samples)
      : alphabet_(std::move(alphabet)), samples_(std::move(samples)) {}

  const Alphabet& alphabet() const override { return alphabet_; }

  Language blocks(std::size_t n) const override {
    Language out;
    for (const Window& w : samples_) {
      if (w.size() < n) continue;
      const Language f = factors(w.letters, n);
      out.insert(f.begin(), f.end());
    }
    return out;
  }

  std::vector<Window> windows(std::size_t radius) const override {
    std::vector<Window> out;
    for (const Window& w : samples_) {
      if (w.origin < radius || w.size() - w.origin < radius) continue;
      out.emplace_back(slice(w.letters, w.origin - radius, 2 * radius), radius);
    }
    return out;
  }

 private:
  Alphabet alphabet_;
  std::vector<Window> samples_;
};

}  // namespace symdyn
