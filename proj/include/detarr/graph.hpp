#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace detarr {

using Edge = std::pair<int, int>;  // (i, j) with i < j, 1-based

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  explicit Graph(int n = 0);
  Graph(int n, const std::vector<Edge>& edges);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Edges sorted lexicographically, each with i < j.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Accepts (i, j) in either order; rejects loops, duplicates and out of
  /// range endpoints.
  void add_edge(int i, int j);
  bool adjacent(int i, int j) const;
  /// Neighbours of v in increasing order.
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool is_complete() const;

  /// Vertex sets of the connected components, each sorted, ordered by their
  /// lowest vertex.
  std::vector<std::vector<int>> components() const;

  /// Relabels vertices of o by +vertex_count() and returns the union.
  Graph disjoint_union(const Graph& o) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> matrix_;
};

/// Vertex ordering in which the earlier neighbours of every vertex form a
/// clique.
struct EliminationOrder {
  std::vector<int> order;
};

/// True when `order` is a permutation of 1..n whose earlier neighbourhoods
/// are cliques.
bool verify_elimination_order(const Graph& g, const std::vector<int>& order);

/// True when `cycle` lists >= 4 distinct vertices forming an induced cycle.
bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle);

struct ChordalityVerdict {
  std::optional<EliminationOrder> order;  // set iff chordal
  std::vector<int> witness;               // induced chordless cycle otherwise

  bool chordal() const { return order.has_value(); }
};

/// Maximum-cardinality search (lowest index breaks ties), independently
/// verified. Non-chordal graphs get a normalised chordless cycle witness:
/// rotated to start at its lowest vertex and oriented towards the smaller
/// neighbour.
ChordalityVerdict is_chordal(const Graph& g);

class NotChordalError : public std::runtime_error {
 public:
  explicit NotChordalError(std::vector<int> witness);
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

inline constexpr int kDefaultCycleSearchLimit = 12;

/// Longest induced chordless cycle (length >= 4) by exhaustive subset
/// search. Throws std::length_error above `max_vertices`.
std::optional<std::vector<int>> longest_chordless_cycle_vertices(const Graph& g,
                                                                 int max_vertices = kDefaultCycleSearchLimit);
std::optional<int> longest_chordless_cycle(const Graph& g, int max_vertices = kDefaultCycleSearchLimit);

/// k - 3 for the longest chordless cycle of length k. nullopt means the
/// graph is chordal and the cycle obstruction is silent; that is not a
/// freeness certificate.
std::optional<int> pdim_lower_bound(const Graph& g, int max_vertices = kDefaultCycleSearchLimit);

struct BuildOrder {
  std::vector<int> order;            // v_1..v_n
  std::vector<int> earlier_degree;   // d_k = earlier neighbours of v_k
};

/// Elimination order with each connected component contiguous and started
/// at its lowest vertex. Throws NotChordalError.
BuildOrder chordal_build_order(const Graph& g);

class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the graph text format: first content line `n` (or `complete n`),
/// then one `i j` edge per line; `#` starts a comment.
Graph parse_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

std::string format_cycle(const std::vector<int>& cycle);

}  // namespace detarr
