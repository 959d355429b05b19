#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewbetti/diagram.hpp"
#include "skewbetti/errors.hpp"

namespace skewbetti {

enum class Side : int8_t { none = -1, left = 0, right = 1 };

/* Simple graph on an ordered list of labeled vertices (at most 64).  The
 * vertex order doubles as the labeling 1..n for closedness checks.  Adjacency
 * is kept as one 64-bit mask per vertex; edges never repeat and never loop.
 * Vertices may carry a bipartition tag; tagged edges must cross sides. */
struct SimpleGraph {
  std::vector<std::string> vertices;
  std::vector<uint64_t> adj;
  std::vector<Side> side;

  std::size_t n() const { return vertices.size(); }
  int index_of(const std::string& label) const;  // ValidationError if unknown
  bool adjacent(int u, int v) const { return (adj[u] >> v) & 1u; }
  int degree(int v) const;
  // Edges as index pairs (u < v), ascending.
  std::vector<std::pair<int, int>> edge_list() const;
  int edge_count() const;
};

SimpleGraph make_graph(const std::vector<std::string>& vertices,
                       const std::vector<std::pair<std::string, std::string>>& edges);

// Same graph with vertices reordered as given (must be a permutation).
SimpleGraph reorder(const SimpleGraph& g, const std::vector<std::string>& order);

// Bipartite graph on the nonempty rows ("x<label>") and columns ("y<label>"),
// one edge per cell.  An all-empty diagram yields the empty graph.
SimpleGraph graph_of_diagram(const CellDiagram& d);

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<std::string>& s);

// Exact nu(G): largest set of edges pairwise nonadjacent with no edge between them.
int induced_matching_number(const SimpleGraph& g);

// Number of induced matchings of size exactly nu(G); needs at least one edge.
long long count_max_induced_matchings(const SimpleGraph& g);

std::vector<std::string> cut_vertices(const SimpleGraph& g);

// Maximal blocks (2-connected pieces or bridges) of a connected graph, labels
// kept, ordered by first vertex position.  Isolated-vertex input yields one
// trivial block.
std::vector<SimpleGraph> blocks(const SimpleGraph& g);

// True iff under the current vertex order every upper and every lower
// neighborhood induces a clique.
bool is_closed_labeling(const SimpleGraph& g);

// First vertex order (lexicographic over permutations) under which g is
// closed, or nullopt.  Exhaustive; limited to n <= 9.
std::optional<std::vector<std::string>> find_closed_labeling(const SimpleGraph& g);

// mu_j = n - j - deg^>(j) for the current (closed) order, and
// s = min{k-1 : mu_k = 0}.  mu_n is always 0 and kept for display.
std::pair<std::vector<int>, int> mu_vector(const SimpleGraph& g);

/* Bipartite graph H of the lead terms x_i y_j (i < j) of a connected graph
 * closed under its current order: edge (x_i, y_{j-1}) per edge {i,j}.  The
 * column relabel j-1 makes Y = {y_1..y_{n-1}}; the result is checked to be the
 * skew Ferrers graph with lambda_i = n - i and the mu-vector of g
 * (StructuralError on mismatch). */
SimpleGraph initial_closed_graph(const SimpleGraph& g);

struct ClosedAnalysis {
  std::vector<std::string> labeling;  // vertex order under which g is closed
  std::vector<int> mu;
  int s;
  std::vector<std::string> cut_vertices;
  std::vector<SimpleGraph> blocks;  // chain order along the labeling
};

// Analysis under the given order (or a discovered one).  nullopt when g is not
// closed (under the given order, or at all).  g must be connected.
std::optional<ClosedAnalysis> analyze_closed(
    const SimpleGraph& g, const std::optional<std::vector<std::string>>& labeling = {});

bool is_connected(const SimpleGraph& g);

}  // namespace skewbetti
