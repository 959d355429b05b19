#include "skewbetti/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace skewbetti {

int SimpleGraph::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return static_cast<int>(i);
  throw ValidationError("unknown vertex " + label);
}

int SimpleGraph::degree(int v) const { return std::popcount(adj[v]); }

std::vector<std::pair<int, int>> SimpleGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(n()); ++u)
    for (int v = u + 1; v < static_cast<int>(n()); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (const auto m : adj) total += std::popcount(m);
  return total / 2;
}

SimpleGraph make_graph(const std::vector<std::string>& vertices,
                       const std::vector<std::pair<std::string, std::string>>& edges) {
  if (vertices.size() > 64) throw ValidationError("at most 64 vertices supported");
  SimpleGraph g;
  g.vertices = vertices;
  {
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("duplicate vertex label");
  }
  g.adj.assign(vertices.size(), 0);
  g.side.assign(vertices.size(), Side::none);
  for (const auto& [a, b] : edges) {
    const int u = g.index_of(a), v = g.index_of(b);
    if (u == v) throw ValidationError("loop at vertex " + a);
    if (g.adjacent(u, v)) throw ValidationError("duplicate edge " + a + "-" + b);
    g.adj[u] |= 1ull << v;
    g.adj[v] |= 1ull << u;
  }
  return g;
}

SimpleGraph reorder(const SimpleGraph& g, const std::vector<std::string>& order) {
  if (order.size() != g.n()) throw ValidationError("labeling must list every vertex once");
  std::vector<int> old_index(order.size());
  std::vector<bool> seen(g.n(), false);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int i = g.index_of(order[k]);
    if (seen[i]) throw ValidationError("labeling repeats vertex " + order[k]);
    seen[i] = true;
    old_index[k] = i;
  }
  SimpleGraph out;
  out.vertices = order;
  out.adj.assign(g.n(), 0);
  out.side.assign(g.n(), Side::none);
  std::vector<int> new_pos(g.n());
  for (std::size_t k = 0; k < order.size(); ++k) new_pos[old_index[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.side[k] = g.side[old_index[k]];
    uint64_t m = g.adj[old_index[k]];
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      out.adj[k] |= 1ull << new_pos[v];
    }
  }
  return out;
}

SimpleGraph graph_of_diagram(const CellDiagram& d) {
  std::vector<std::string> verts;
  std::vector<int> row_of_vertex;
  std::vector<bool> col_used(d.n_cols(), false);
  for (std::size_t r = 0; r < d.n_rows(); ++r) {
    if (!d.row_interval[r]) continue;
    verts.push_back("x" + std::to_string(d.row_labels[r]));
    row_of_vertex.push_back(static_cast<int>(r));
    for (int c = d.row_interval[r]->first; c <= d.row_interval[r]->second; ++c)
      col_used[c] = true;
  }
  const int n_left = static_cast<int>(verts.size());
  std::vector<int> col_vertex(d.n_cols(), -1);
  for (std::size_t c = 0; c < d.n_cols(); ++c) {
    if (!col_used[c]) continue;
    col_vertex[c] = static_cast<int>(verts.size());
    verts.push_back("y" + std::to_string(d.col_labels[c]));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (int k = 0; k < n_left; ++k) {
    const int r = row_of_vertex[k];
    for (int c = d.row_interval[r]->first; c <= d.row_interval[r]->second; ++c)
      edges.emplace_back(verts[k], verts[col_vertex[c]]);
  }
  SimpleGraph g = make_graph(verts, edges);
  for (int k = 0; k < static_cast<int>(g.n()); ++k)
    g.side[k] = k < n_left ? Side::left : Side::right;
  return g;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<std::string>& s) {
  std::vector<int> keep;
  for (const auto& lab : s) keep.push_back(g.index_of(lab));
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw ValidationError("duplicate vertex in subset");
  SimpleGraph out;
  std::vector<int> new_pos(g.n(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    out.vertices.push_back(g.vertices[keep[k]]);
    out.side.push_back(g.side[keep[k]]);
    new_pos[keep[k]] = static_cast<int>(k);
  }
  out.adj.assign(keep.size(), 0);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    uint64_t m = g.adj[keep[k]];
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (new_pos[v] >= 0) out.adj[k] |= 1ull << new_pos[v];
    }
  }
  return out;
}

namespace {

// Search over edge subsets that are pairwise nonadjacent and not linked by any
// edge: equivalently, independent sets in the square of the line graph.  The
// blocked mask holds every vertex within distance 1 of a chosen edge.
struct MatchingSearch {
  std::vector<std::pair<int, int>> edges;
  std::vector<uint64_t> closed_nbhd;  // endpoints plus their neighborhoods, per edge
  int best = 0;
  long long count_at_best = 0;
  bool counting = false;
  int target = 0;

  void run(std::size_t start, uint64_t blocked, int chosen) {
    if (!counting && chosen > best) best = chosen;
    if (counting && chosen == target) {
      ++count_at_best;
      return;
    }
    for (std::size_t k = start; k < edges.size(); ++k) {
      if (static_cast<int>(edges.size() - k) + chosen < (counting ? target : best + 1))
        break;  // not enough edges left
      const auto [u, v] = edges[k];
      if ((blocked >> u & 1) || (blocked >> v & 1)) continue;
      run(k + 1, blocked | closed_nbhd[k], chosen + 1);
    }
  }
};

MatchingSearch matching_search(const SimpleGraph& g) {
  MatchingSearch s;
  s.edges = g.edge_list();
  for (const auto& [u, v] : s.edges)
    s.closed_nbhd.push_back(g.adj[u] | g.adj[v] | (1ull << u) | (1ull << v));
  return s;
}

}  // namespace

int induced_matching_number(const SimpleGraph& g) {
  MatchingSearch s = matching_search(g);
  s.run(0, 0, 0);
  return s.best;
}

long long count_max_induced_matchings(const SimpleGraph& g) {
  if (g.edge_count() == 0) throw ValidationError("count needs at least one edge");
  MatchingSearch s = matching_search(g);
  s.run(0, 0, 0);
  s.counting = true;
  s.target = s.best;
  s.run(0, 0, 0);
  return s.count_at_best;
}

namespace {

// Depth-first articulation/block machinery (low-link with an edge stack).
struct BlockFinder {
  const SimpleGraph& g;
  std::vector<int> disc, low;
  std::vector<bool> is_cut;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<int>> block_vertex_sets;
  int timer = 0;

  explicit BlockFinder(const SimpleGraph& gr)
      : g(gr), disc(gr.n(), -1), low(gr.n(), 0), is_cut(gr.n(), false) {}

  void pop_block(const std::pair<int, int>& until) {
    uint64_t verts = 0;
    while (true) {
      const auto e = edge_stack.back();
      edge_stack.pop_back();
      verts |= (1ull << e.first) | (1ull << e.second);
      if (e == until) break;
    }
    std::vector<int> vs;
    uint64_t m = verts;
    while (m) {
      vs.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    block_vertex_sets.push_back(std::move(vs));
  }

  void dfs(int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    uint64_t m = g.adj[u];
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (v == parent) {
        parent = -1;  // consume one parent edge (no multi-edges anyway)
        continue;
      }
      if (disc[v] == -1) {
        ++children;
        edge_stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (disc[u] == 0 ? children > 1 : low[v] >= disc[u]) is_cut[u] = true;
        if (low[v] >= disc[u]) pop_block({u, v});
      } else if (disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

}  // namespace

std::vector<std::string> cut_vertices(const SimpleGraph& g) {
  // One finder per component so the dfs root always has disc == 0.
  std::vector<bool> cut(g.n(), false), visited(g.n(), false);
  for (int root = 0; root < static_cast<int>(g.n()); ++root) {
    if (visited[root]) continue;
    BlockFinder f(g);
    f.dfs(root, -1);
    for (int v = 0; v < static_cast<int>(g.n()); ++v)
      if (f.disc[v] != -1) {
        visited[v] = true;
        if (f.is_cut[v]) cut[v] = true;
      }
  }
  std::vector<std::string> out;
  for (int v = 0; v < static_cast<int>(g.n()); ++v)
    if (cut[v]) out.push_back(g.vertices[v]);
  return out;
}

bool is_connected(const SimpleGraph& g) {
  if (g.n() == 0) return true;
  uint64_t seen = 1, frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    uint64_t m = frontier;
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      next |= g.adj[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == static_cast<int>(g.n());
}

std::vector<SimpleGraph> blocks(const SimpleGraph& g) {
  if (!is_connected(g)) throw ValidationError("blocks need a connected graph");
  if (g.n() == 0) return {};
  if (g.edge_count() == 0) return {g};  // single isolated vertex
  BlockFinder f(g);
  f.dfs(0, -1);
  std::vector<SimpleGraph> out;
  std::sort(f.block_vertex_sets.begin(), f.block_vertex_sets.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (const auto& vs : f.block_vertex_sets) {
    std::vector<std::string> labels;
    for (int v : vs) labels.push_back(g.vertices[v]);
    out.push_back(induced_subgraph(g, labels));
  }
  return out;
}

bool is_closed_labeling(const SimpleGraph& g) {
  const int n = static_cast<int>(g.n());
  for (int v = 0; v < n; ++v) {
    const uint64_t above = v + 1 < 64 ? g.adj[v] >> (v + 1) << (v + 1) : 0;
    const uint64_t below = v ? g.adj[v] & ((1ull << v) - 1) : 0;
    for (uint64_t side : {above, below}) {
      uint64_t m = side;
      while (m) {
        const int a = std::countr_zero(m);
        m &= m - 1;
        if ((side & ~g.adj[a] & ~(1ull << a)) != 0) return false;  // nonadjacent pair
      }
    }
  }
  return true;
}

std::optional<std::vector<std::string>> find_closed_labeling(const SimpleGraph& g) {
  const int n = static_cast<int>(g.n());
  if (n > 9) throw ValidationError("exhaustive labeling search is limited to 9 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::string> order;
    for (int k : perm) order.push_back(g.vertices[k]);
    if (is_closed_labeling(reorder(g, order))) return order;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::pair<std::vector<int>, int> mu_vector(const SimpleGraph& g) {
  if (!is_closed_labeling(g)) throw ValidationError("not closed under the current order");
  const int n = static_cast<int>(g.n());
  std::vector<int> mu(n);
  for (int j = 1; j <= n; ++j) {
    const uint64_t above = j < 64 ? g.adj[j - 1] >> j << j : 0;
    mu[j - 1] = n - j - std::popcount(above);
  }
  int s = 0;
  for (int k = 1; k <= n; ++k)
    if (mu[k - 1] == 0) {
      s = k - 1;
      break;
    }
  return {mu, s};
}

SimpleGraph initial_closed_graph(const SimpleGraph& g) {
  const int n = static_cast<int>(g.n());
  if (n < 2) throw ValidationError("need at least two vertices");
  if (!is_connected(g)) throw ValidationError("need a connected graph");
  const auto [mu, s] = mu_vector(g);  // validates closedness

  CellDiagram d;
  try {
    std::vector<int> lam, mu_head;
    for (int i = 1; i < n; ++i) {
      lam.push_back(n - i);
      mu_head.push_back(mu[i - 1]);
    }
    d = new_skew_ferrers(lam, mu_head);
  } catch (const ValidationError& e) {
    throw StructuralError(std::string("mu-vector is not a staircase shape: ") + e.what());
  }

  // The lead-term pairs (x_i, y_{j-1}) must coincide with the diagram's cells.
  std::vector<Cell> direct;
  for (const auto& [u, v] : g.edge_list()) direct.emplace_back(u + 1, v);  // 1-based i, j-1
  std::sort(direct.begin(), direct.end());
  if (direct != cells(d))
    throw StructuralError("lead-term graph does not match the expected staircase shape");
  return graph_of_diagram(d);
}

std::optional<ClosedAnalysis> analyze_closed(const SimpleGraph& g,
                                             const std::optional<std::vector<std::string>>& labeling) {
  if (!is_connected(g)) throw ValidationError("closed analysis needs a connected graph");
  SimpleGraph gr;
  if (labeling) {
    gr = reorder(g, *labeling);
    if (!is_closed_labeling(gr)) return std::nullopt;
  } else {
    const auto found = find_closed_labeling(g);
    if (!found) return std::nullopt;
    gr = reorder(g, *found);
  }

  ClosedAnalysis out;
  out.labeling = gr.vertices;
  std::tie(out.mu, out.s) = mu_vector(gr);
  out.cut_vertices = cut_vertices(gr);
  out.blocks = blocks(gr);

  // Blocks of a connected closed graph chain along the labeling: consecutive
  // blocks overlap in exactly one vertex, which is a cut vertex.
  int prev_max = -1;
  for (std::size_t k = 0; k < out.blocks.size(); ++k) {
    int mn = static_cast<int>(gr.n()), mx = -1;
    for (const auto& lab : out.blocks[k].vertices) {
      const int p = gr.index_of(lab);
      mn = std::min(mn, p);
      mx = std::max(mx, p);
    }
    if (k == 0) {
      if (mn != 0) throw StructuralError("blocks do not chain along the labeling");
    } else {
      if (mn != prev_max) throw StructuralError("blocks do not chain along the labeling");
      const auto& shared = gr.vertices[mn];
      if (std::find(out.cut_vertices.begin(), out.cut_vertices.end(), shared) ==
          out.cut_vertices.end())
        throw StructuralError("block overlap is not a cut vertex");
    }
    prev_max = mx;
  }
  if (!out.blocks.empty() && prev_max != static_cast<int>(gr.n()) - 1)
    throw StructuralError("blocks do not chain along the labeling");
  return out;
}

}  // namespace skewbetti
