#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "detarr/graph.hpp"
#include "detarr/polynomial.hpp"

namespace detarr {

/// The 2x2 minor x_i*y_j - x_j*y_i of columns i < j. Reversed or equal
/// indices are rejected rather than sign-flipped.
Polynomial minor(int i, int j, int n);

/// Determinantal arrangement of a graph: one hypersurface V(minor(i, j))
/// per edge.
class Arrangement {
 public:
  explicit Arrangement(Graph g);

  const Graph& graph() const { return graph_; }
  int columns() const { return graph_.vertex_count(); }

  /// Product of the edge minors in sorted edge order, computed once and
  /// shared between copies. Throws for an edge-free graph.
  const Polynomial& defining_poly() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<Polynomial> poly;
  };

  Graph graph_;
  std::shared_ptr<Cache> cache_;
};

Polynomial defining_poly(const Arrangement& a);

/// minor(i,k)*minor(j,l) - minor(i,j)*minor(k,l) - minor(i,l)*minor(j,k)
/// for i < j < k < l; identically zero (three-term Pluecker relation).
Polynomial plucker_residual(int i, int j, int k, int l, int n);

}  // namespace detarr
