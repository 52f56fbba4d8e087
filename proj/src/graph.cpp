#include "detarr/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <fstream>
#include <sstream>

namespace detarr {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(n + 1);
  matrix_.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [i, j] : edges) add_edge(i, j);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(1, n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
  if (i > j) std::swap(i, j);
  if (adjacent(i, j)) {
    throw std::invalid_argument("duplicate edge " + std::to_string(i) + " " + std::to_string(j));
  }
  matrix_[static_cast<std::size_t>(i) * (n_ + 1) + j] = 1;
  matrix_[static_cast<std::size_t>(j) * (n_ + 1) + i] = 1;
  adj_[i].insert(std::upper_bound(adj_[i].begin(), adj_[i].end(), j), j);
  adj_[j].insert(std::upper_bound(adj_[j].begin(), adj_[j].end(), i), i);
  const Edge e{i, j};
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

bool Graph::adjacent(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return matrix_[static_cast<std::size_t>(i) * (n_ + 1) + j] != 0;
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::is_complete() const {
  return edges_.size() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<int> label(n_ + 1, -1);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n_; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    label[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : adj_[v]) {
        if (label[w] < 0) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Graph Graph::disjoint_union(const Graph& o) const {
  Graph g(n_ + o.n_);
  for (auto [i, j] : edges_) g.add_edge(i, j);
  for (auto [i, j] : o.edges_) g.add_edge(i + n_, j + n_);
  return g;
}

// ---------------------------------------------------------------------------

bool verify_elimination_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> position(n + 1, -1);
  for (int k = 0; k < n; ++k) {
    const int v = order[k];
    if (v < 1 || v > n || position[v] >= 0) return false;
    position[v] = k;
  }
  for (int k = 0; k < n; ++k) {
    std::vector<int> earlier;
    for (int w : g.neighbors(order[k])) {
      if (position[w] < k) earlier.push_back(w);
    }
    for (std::size_t a = 0; a < earlier.size(); ++a) {
      for (std::size_t b = a + 1; b < earlier.size(); ++b) {
        if (!g.adjacent(earlier[a], earlier[b])) return false;
      }
    }
  }
  return true;
}

bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : cycle) {
    if (v < 1 || v > g.vertex_count()) return false;
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
      if (g.adjacent(cycle[a], cycle[b]) != consecutive) return false;
    }
  }
  return true;
}

namespace {

std::vector<int> normalize_cycle(std::vector<int> cycle) {
  auto lowest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), lowest, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

std::vector<int> max_cardinality_search(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n + 1, 0);
  std::vector<char> done(n + 1, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v) {
      if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
    }
    done[best] = 1;
    order.push_back(best);
    for (int w : g.neighbors(best)) {
      if (!done[w]) ++weight[w];
    }
  }
  return order;
}

// Any chordless cycle passes through some v with non-adjacent cycle
// neighbours u, w, and the rest of the cycle avoids N[v] \ {u, w}; a
// shortest u-w path there closes a chordless cycle through v.
std::vector<int> find_chordless_cycle(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 1; v <= n; ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        const int u = nb[a];
        const int w = nb[b];
        if (g.adjacent(u, w)) continue;
        std::vector<char> blocked(n + 1, 0);
        blocked[v] = 1;
        for (int x : nb) blocked[x] = 1;
        blocked[u] = 0;
        blocked[w] = 0;
        std::vector<int> parent(n + 1, 0);
        std::deque<int> queue{u};
        parent[u] = u;
        while (!queue.empty() && parent[w] == 0) {
          const int x = queue.front();
          queue.pop_front();
          for (int y : g.neighbors(x)) {
            if (blocked[y] || parent[y] != 0) continue;
            // u and w may only be path endpoints.
            if (x == u && y == w) continue;
            parent[y] = x;
            queue.push_back(y);
          }
        }
        if (parent[w] == 0) continue;
        std::vector<int> path;
        for (int x = w; x != u; x = parent[x]) path.push_back(x);
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        std::vector<int> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return normalize_cycle(std::move(cycle));
      }
    }
  }
  return {};
}

}  // namespace

ChordalityVerdict is_chordal(const Graph& g) {
  ChordalityVerdict verdict;
  std::vector<int> order = max_cardinality_search(g);
  if (verify_elimination_order(g, order)) {
    verdict.order = EliminationOrder{std::move(order)};
    return verdict;
  }
  verdict.witness = find_chordless_cycle(g);
  if (!is_chordless_cycle(g, verdict.witness)) {
    throw std::logic_error("MCS order failed but no chordless cycle was found");
  }
  return verdict;
}

NotChordalError::NotChordalError(std::vector<int> witness)
    : std::runtime_error("graph is not chordal; chordless cycle " + format_cycle(witness)),
      witness_(std::move(witness)) {}

std::optional<std::vector<int>> longest_chordless_cycle_vertices(const Graph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices) {
    throw std::length_error("exhaustive cycle search limited to " + std::to_string(max_vertices) +
                            " vertices, graph has " + std::to_string(n));
  }
  if (n > 30) throw std::length_error("exhaustive cycle search supports at most 30 vertices");
  std::vector<std::uint32_t> nbmask(n + 1, 0);
  for (auto [i, j] : g.edges()) {
    nbmask[i] |= 1u << (j - 1);
    nbmask[j] |= 1u << (i - 1);
  }
  std::uint32_t best = 0;
  int best_size = 0;
  const std::uint32_t limit = n == 0 ? 1u : (1u << n);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (size < 4 || size <= best_size) continue;
    bool regular = true;
    for (int v = 1; v <= n && regular; ++v) {
      if ((mask >> (v - 1)) & 1u) regular = std::popcount(nbmask[v] & mask) == 2;
    }
    if (!regular) continue;
    // A 2-regular induced subgraph is a cycle iff it is connected.
    std::uint32_t seen = mask & (~mask + 1);
    std::uint32_t frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (int v = 1; v <= n; ++v) {
        if ((frontier >> (v - 1)) & 1u) next |= nbmask[v] & mask;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == mask) {
      best = mask;
      best_size = size;
    }
  }
  if (best_size == 0) return std::nullopt;

  std::vector<int> cycle;
  int start = std::countr_zero(best) + 1;
  int prev = 0;
  int cur = start;
  do {
    cycle.push_back(cur);
    int next = 0;
    for (int w : g.neighbors(cur)) {
      if (((best >> (w - 1)) & 1u) && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start);
  return normalize_cycle(std::move(cycle));
}

std::optional<int> longest_chordless_cycle(const Graph& g, int max_vertices) {
  auto cycle = longest_chordless_cycle_vertices(g, max_vertices);
  if (!cycle) return std::nullopt;
  return static_cast<int>(cycle->size());
}

std::optional<int> pdim_lower_bound(const Graph& g, int max_vertices) {
  auto k = longest_chordless_cycle(g, max_vertices);
  if (!k) return std::nullopt;
  return *k - 3;
}

BuildOrder chordal_build_order(const Graph& g) {
  ChordalityVerdict verdict = is_chordal(g);
  if (!verdict.chordal()) throw NotChordalError(verdict.witness);
  // MCS with lowest-index ties already finishes one component before it
  // starts the next (unvisited vertices of other components keep weight 0),
  // and each component is entered at its lowest vertex.
  BuildOrder out;
  out.order = std::move(verdict.order->order);
  std::vector<int> position(g.vertex_count() + 1, 0);
  for (std::size_t k = 0; k < out.order.size(); ++k) position[out.order[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < out.order.size(); ++k) {
    int d = 0;
    for (int w : g.neighbors(out.order[k])) {
      if (position[w] < static_cast<int>(k)) ++d;
    }
    out.earlier_degree.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string format_cycle(const std::vector<int>& cycle) {
  std::string s = "(";
  for (std::size_t i = 0; i < cycle.size(); ++i) s += (i ? "," : "") + std::to_string(cycle[i]);
  return s + ")";
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

int parse_int(const std::string& token, int line) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw GraphFormatError("line " + std::to_string(line) + ": expected an integer, got '" + token + "'", line);
  }
  if (value < -1000000 || value > 1000000) {
    throw GraphFormatError("line " + std::to_string(line) + ": integer out of range", line);
  }
  return static_cast<int>(value);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<Graph> g;
  bool generated = false;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tokens = tokens_of(line);
    if (tokens.empty()) continue;
    if (!g) {
      if (tokens[0] == "complete") {
        if (tokens.size() != 2) throw GraphFormatError("line " + std::to_string(line_no) + ": expected 'complete <n>'", line_no);
        const int n = parse_int(tokens[1], line_no);
        if (n < 1) throw GraphFormatError("line " + std::to_string(line_no) + ": vertex count must be positive", line_no);
        g = Graph::complete(n);
        generated = true;
        continue;
      }
      if (tokens.size() != 1) throw GraphFormatError("line " + std::to_string(line_no) + ": expected vertex count", line_no);
      const int n = parse_int(tokens[0], line_no);
      if (n < 1) throw GraphFormatError("line " + std::to_string(line_no) + ": vertex count must be positive", line_no);
      g = Graph(n);
      continue;
    }
    if (generated) throw GraphFormatError("line " + std::to_string(line_no) + ": no edges may follow 'complete <n>'", line_no);
    if (tokens.size() != 2) throw GraphFormatError("line " + std::to_string(line_no) + ": expected 'i j'", line_no);
    const int i = parse_int(tokens[0], line_no);
    const int j = parse_int(tokens[1], line_no);
    const int n = g->vertex_count();
    if (!(1 <= i && i < j && j <= n)) {
      throw GraphFormatError("line " + std::to_string(line_no) + ": edge '" + tokens[0] + " " + tokens[1] +
                                 "' violates 1 <= i < j <= " + std::to_string(n),
                             line_no);
    }
    if (g->adjacent(i, j)) throw GraphFormatError("line " + std::to_string(line_no) + ": duplicate edge", line_no);
    g->add_edge(i, j);
  }
  if (!g) throw GraphFormatError("missing vertex count", line_no);
  return *g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open graph file '" + path + "'", 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace detarr
