#pragma once

// Slow, independent reference implementations used only by the tests. They
// work on plain strings and never call into the library's algorithms.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Rules = std::map<char, std::string>;

inline std::string iterate(const Rules& rules, std::string w, int times) {
  for (int i = 0; i < times; ++i) {
    std::string next;
    for (char c : w) next += rules.at(c);
    w = std::move(next);
  }
  return w;
}

// n-factors of theta^K(a) over all letters a, with r^K >= 64 n.
inline std::set<std::string> language(const Rules& rules, std::size_t n) {
  const std::size_t r = rules.begin()->second.size();
  int K = 0;
  for (std::size_t span = 1; span < 64 * n; span *= r) ++K;
  std::set<std::string> out;
  for (const auto& [a, img] : rules) {
    const std::string w = iterate(rules, std::string(1, a), K);
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  }
  return out;
}

// Every (i, l) pair, scanned in (i, l) order.
inline std::optional<std::pair<std::size_t, std::size_t>> overlap(const std::string& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t l = 1; i + 2 * l < w.size(); ++l) {
      if (w.substr(i, l) == w.substr(i + l, l) && w[i + 2 * l] == w[i]) return std::make_pair(i, l);
    }
  }
  return std::nullopt;
}

inline std::optional<std::pair<std::size_t, std::size_t>> even_square(const std::string& w, char zero) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t l = 1; i + 2 * l <= w.size(); ++l) {
      const std::string b = w.substr(i, l);
      std::size_t zeros = 0;
      for (char c : b) zeros += c == zero;
      if (b == w.substr(i + l, l) && zeros % 2 == 0) return std::make_pair(i, l);
    }
  }
  return std::nullopt;
}

inline std::vector<std::string> all_binary_words(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::string w(n, '0');
    for (std::size_t i = 0; i < n; ++i) w[i] = (bits >> (n - 1 - i)) & 1 ? '1' : '0';
    out.push_back(w);
  }
  return out;
}

// phi(u, v) = u + v + 1 mod 2, applied to adjacent pairs.
inline std::string oxtoby(const std::string& w) {
  std::string out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) out.push_back(((w[i] - '0') + (w[i + 1] - '0') + 1) % 2 ? '1' : '0');
  return out;
}

inline std::string complement(std::string w) {
  for (char& c : w) c = c == '0' ? '1' : '0';
  return w;
}


// Toeplitz reading of one long word: exactly one phase tiles it by {c0, c1}
// and the token word has no even square.
inline bool toeplitz_reading(const std::string& w, const std::string& c0, const std::string& c1) {
  const std::size_t L = c0.size();
  std::vector<std::string> readings;
  for (std::size_t j = 0; j < L; ++j) {
    std::string tokens;
    bool ok = true;
    for (std::size_t i = j; i + L <= w.size() && ok; i += L) {
      const std::string t = w.substr(i, L);
      if (t == c0) tokens += '0';
      else if (t == c1) tokens += '1';
      else ok = false;
    }
    if (ok) readings.push_back(tokens);
  }
  return readings.size() == 1 && !even_square(readings[0], '0');
}

// Morse reading of one long word: exactly one (phase, parity) where the
// parity tiles are c0/c1 without overlap and the other tiles follow
// (1,1)->c0, (0,0)->c1, (1,0)->c0p, (0,1)->c1p.
inline bool morse_reading(const std::string& w, const std::string& c0, const std::string& c1,
                          const std::string& c0p, const std::string& c1p) {
  const std::size_t L = c0.size();
  int valid = 0;
  for (std::size_t j = 0; j < 2 * L; ++j) {
    std::vector<std::string> tiles;
    for (std::size_t i = j; i + L <= w.size(); i += L) tiles.push_back(w.substr(i, L));
    std::string mains;
    bool ok = true;
    for (std::size_t t = 0; t < tiles.size() && ok; t += 2) {
      if (tiles[t] == c0) mains += '0';
      else if (tiles[t] == c1) mains += '1';
      else ok = false;
      if (ok && t >= 2) {
        const char a = mains[mains.size() - 2], b = mains.back();
        const std::string& want = a == '1' ? (b == '1' ? c0 : c0p) : (b == '0' ? c1 : c1p);
        ok = tiles[t - 1] == want;
      }
    }
    if (ok && mains.size() >= 2 && !overlap(mains)) ++valid;
  }
  return valid == 1;
}

}  // namespace oracle
