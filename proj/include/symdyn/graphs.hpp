#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <vector>

#include "symdyn/error.hpp"
#include "symdyn/substitution.hpp"

namespace symdyn {

/// Dense boolean adjacency matrix.
class Digraph {
 public:
  explicit Digraph(std::size_t vertices) : n_(vertices), adj_(vertices * vertices, false) {}

  std::size_t size() const noexcept { return n_; }
  bool arc(std::size_t from, std::size_t to) const { return adj_[from * n_ + to]; }
  void add_arc(std::size_t from, std::size_t to) { adj_[from * n_ + to] = true; }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_;
  std::vector<bool> adj_;
};

// G(theta): arc a -> b iff b occurs in theta(a).
inline Digraph build_graph(const Substitution& s) {
  Digraph g(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (Letter b : s.image(static_cast<Letter>(a))) g.add_arc(a, b);
  }
  return g;
}

namespace detail {

// BFS distances from `root`; unreachable vertices get -1.
inline std::vector<long> bfs_levels(const Digraph& g, std::size_t root, bool reversed = false) {
  std::vector<long> level(g.size(), -1);
  std::queue<std::size_t> todo;
  level[root] = 0;
  todo.push(root);
  while (!todo.empty()) {
    const std::size_t u = todo.front();
    todo.pop();
    for (std::size_t v = 0; v < g.size(); ++v) {
      const bool edge = reversed ? g.arc(v, u) : g.arc(u, v);
      if (edge && level[v] < 0) {
        level[v] = level[u] + 1;
        todo.push(v);
      }
    }
  }
  return level;
}

}  // namespace detail

inline bool is_strongly_connected(const Digraph& g) {
  if (g.size() == 0) return false;
  auto reaches_all = [](const std::vector<long>& lv) {
    return std::all_of(lv.begin(), lv.end(), [](long d) { return d >= 0; });
  };
  return reaches_all(detail::bfs_levels(g, 0)) && reaches_all(detail::bfs_levels(g, 0, true));
}

struct Period {
  std::size_t period = 1;
  // classes[i] lists the vertices of A_i; arcs only go from A_i to A_{i+1 mod period}
  std::vector<std::vector<std::size_t>> classes;
};

namespace detail {

// gcd of level[u] + 1 - level[v] over all arcs; 0 when the graph has no cycle.
inline long cycle_gcd(const Digraph& g, const std::vector<long>& level) {
  long d = 0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g.arc(u, v)) d = std::gcd(d, std::labs(level[u] + 1 - level[v]));
    }
  }
  return d;
}

}  // namespace detail

/// gcd of all cycle lengths, via BFS level differences. Requires strong
/// connectivity and at least one cycle (a lone vertex without a loop has none).
inline Period period(const Digraph& g) {
  if (!is_strongly_connected(g)) {
    fail(ErrorKind::precondition, "period is only defined for strongly connected graphs");
  }
  const auto level = detail::bfs_levels(g, 0);
  const long d = detail::cycle_gcd(g, level);
  if (d == 0) fail(ErrorKind::precondition, "graph has no cycle");
  Period out;
  out.period = static_cast<std::size_t>(d);
  out.classes.resize(out.period);
  for (std::size_t v = 0; v < g.size(); ++v) {
    out.classes[static_cast<std::size_t>(level[v]) % out.period].push_back(v);
  }
  return out;
}

inline bool is_primitive(const Digraph& g) {
  return is_strongly_connected(g) && detail::cycle_gcd(g, detail::bfs_levels(g, 0)) == 1;
}

// Boolean matrix product support.
inline Digraph boolean_product(const Digraph& a, const Digraph& b) {
  Digraph out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!a.arc(i, k)) continue;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (b.arc(k, j)) out.add_arc(i, j);
      }
    }
  }
  return out;
}

/// Smallest K <= (n-1)^2 + 1 such that every ordered pair is joined by a path
/// of length exactly K, or 0 if there is none. Independent of the BFS route.
inline std::size_t primitivity_exponent(const Digraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return 0;
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  Digraph walk = g;
  for (std::size_t K = 1; K <= bound; ++K) {
    bool full = true;
    for (std::size_t i = 0; i < n && full; ++i) {
      for (std::size_t j = 0; j < n && full; ++j) full = walk.arc(i, j);
    }
    if (full) return K;
    walk = boolean_product(walk, g);
  }
  return 0;
}

inline bool is_primitive_by_powers(const Digraph& g) { return primitivity_exponent(g) != 0; }

inline bool is_primitive(const Substitution& s) { return is_primitive(build_graph(s)); }

}  // namespace symdyn
