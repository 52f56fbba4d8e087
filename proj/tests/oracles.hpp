#pragma once

// Test-only reference implementations. Only the library's data structures
// are used here, never its algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "detarr/graph.hpp"
#include "detarr/polymatrix.hpp"
#include "detarr/polynomial.hpp"

namespace detarr::testing {

/// Fixed seeds so every randomized suite is reproducible.
inline constexpr std::uint64_t kRingSeed = 20240611;
inline constexpr std::uint64_t kMatrixSeed = 77031;
inline constexpr std::uint64_t kGraphSeed = 4242;
inline constexpr std::uint64_t kDerivationSeed = 9001;

/// Random polynomial with up to `terms` terms, degree <= max_degree, in the
/// first `vars` variable slots (x1, y1, x2, ...), coefficients in [-5, 5].
inline Polynomial random_poly(std::mt19937_64& rng, int ambient, int vars, int max_degree, int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> slot(0, vars - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  PolynomialBuilder b(ambient);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) m = m * Monomial::of(VarId::from_slot(slot(rng)));
    b.add(m, coeff(rng));
  }
  return std::move(b).build();
}

inline Point random_point(std::mt19937_64& rng, int ambient, int bound = 50) {
  std::uniform_int_distribution<long> value(-bound, bound);
  Point p;
  for (int i = 1; i <= ambient; ++i) {
    p.set(VarId::x(i), Integer(value(rng)));
    p.set(VarId::y(i), Integer(value(rng)));
  }
  return p;
}

/// Leibniz formula over all permutations; integer matrices only.
inline Integer permutation_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (perm[a] > perm[b]) ++inversions;
      }
    }
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t r = 0; r < n; ++r) term *= m[r][perm[r]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Chordality oracle: enumerate every simple cycle of length >= 4 by DFS
/// and check that each one has a chord.
inline bool brute_force_chordal(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> on_path(n + 1, 0);
  bool ok = true;
  // Cycles are rooted at their smallest vertex.
  std::function<void(int, int)> dfs = [&](int root, int v) {
    if (!ok) return;
    for (int w : g.neighbors(v)) {
      if (w < root) continue;
      if (w == root && path.size() >= 4) {
        bool chord = false;
        const std::size_t k = path.size();
        for (std::size_t a = 0; a < k && !chord; ++a) {
          for (std::size_t b = a + 2; b < k && !chord; ++b) {
            if (a == 0 && b == k - 1) continue;
            chord = g.adjacent(path[a], path[b]);
          }
        }
        if (!chord) ok = false;
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      dfs(root, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (int root = 1; root <= n && ok; ++root) {
    path = {root};
    on_path.assign(n + 1, 0);
    on_path[root] = 1;
    dfs(root, root);
  }
  return ok;
}

/// Longest chordless cycle by enumerating every simple cycle; 0 if none.
inline int brute_force_longest_chordless(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  std::vector<int> path;
  std::vector<char> on_path(n + 1, 0);
  std::function<void(int, int)> dfs = [&](int root, int v) {
    for (int w : g.neighbors(v)) {
      if (w < root) continue;
      if (w == root && path.size() >= 4) {
        bool chord = false;
        const std::size_t k = path.size();
        for (std::size_t a = 0; a < k && !chord; ++a) {
          for (std::size_t b = a + 2; b < k && !chord; ++b) {
            if (a == 0 && b == k - 1) continue;
            chord = g.adjacent(path[a], path[b]);
          }
        }
        if (!chord) best = std::max(best, static_cast<int>(k));
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      dfs(root, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (int root = 1; root <= n; ++root) {
    path = {root};
    on_path.assign(n + 1, 0);
    on_path[root] = 1;
    dfs(root, root);
  }
  return best;
}

inline Graph graph_from_mask(int n, std::uint32_t mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++bit) {
      if ((mask >> bit) & 1u) g.add_edge(i, j);
    }
  }
  return g;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

/// Random chordal graph: each new vertex attaches to a random clique of
/// earlier vertices (a subset of an existing vertex's earlier clique).
inline Graph random_chordal_graph(std::mt19937_64& rng, int n) {
  Graph g(n);
  std::vector<std::vector<int>> clique_of(n + 1);
  for (int v = 2; v <= n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    const int anchor = pick(rng);  // 0 means isolated
    if (anchor == 0) continue;
    std::vector<int> candidates = clique_of[anchor];
    candidates.push_back(anchor);
    std::vector<int> chosen;
    std::bernoulli_distribution keep(0.6);
    for (int c : candidates) {
      if (c == anchor || keep(rng)) chosen.push_back(c);
    }
    for (int c : chosen) g.add_edge(c, v);
    clique_of[v] = chosen;
  }
  return g;
}

}  // namespace detarr::testing
