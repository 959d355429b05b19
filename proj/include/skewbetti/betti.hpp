#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "skewbetti/diagram.hpp"
#include "skewbetti/graph.hpp"
#include "skewbetti/homology.hpp"

namespace skewbetti {

/* Graded Betti numbers of an ideal, indexed so that beta_{0,2} counts the
 * degree-2 generators.  Only nonzero entries are stored. */
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;

  long long at(int i, int j) const;
  void add(int i, int j, long long v);
  bool empty() const { return entries.empty(); }
  int pd() const;   // ValidationError on an all-zero table
  int reg() const;  // likewise
  long long corner() const { return at(pd(), pd() + reg()); }
  std::map<int, long long> totals() const;  // beta_i = sum_j beta_{i,j}
};

// Exact table of the edge ideal via the homology sum over all vertex subsets
// W: beta_{i,j} = sum_{|W|=j} dim H~_{|W|-i-2} of the independence complex
// restricted to W.  Needs >= 1 edge; exponential in |V|, capped by
// max_vertices (hard limit 20).  threads > 1 splits the subset range.
BettiTable hochster_betti(const SimpleGraph& g, HomField field, int max_vertices = 16,
                          int threads = 1);

// Same sum for an arbitrary complex (vertices outside every face shift the
// table; used by the variable-adjunction property test).
BettiTable hochster_betti_complex(const SimplicialComplex& c, HomField field);

// Spherical counting: beta_{i,j} = number of row/column subset pairs with
// |X'|+|Y'| = j whose restriction is spherical of rectangularity j-i-1.
// Needs >= 1 cell and |rows|+|cols| <= 22.
BettiTable nagel_reiner_betti(const CellDiagram& d);

struct CorsoNagelResult {
  std::vector<long long> totals;  // beta_i for 0 <= i <= pd
  int pd;
  BettiTable to_table() const;  // 2-linear placement beta_{i,i+2}
};

// Closed form for honest Ferrers shapes (mu = 0): beta_i =
// sum_j C(lambda_j+j-1, i+1) - C(n, i+2), pd = max{lambda_j+j-2}.  The i = 0
// value is checked against the cell count.
CorsoNagelResult corso_nagel_betti(const CellDiagram& d);

// Table of a join (disjoint union of graphs): convolution in the shifted
// index i' = i+1, each factor entering through beta_{a-1,b} with a virtual
// unit at (a,b) = (0,0).
BettiTable join_convolve(const std::vector<BettiTable>& tables);

// pd = max{|X'|+|Y'| - rect - 1} over spherical restrictions; reg = rect(D)+1.
std::pair<int, int> pd_reg_spherical(const CellDiagram& d);

// True iff the only nonzero entry in homological degree pd sits at
// internal degree pd + reg.
bool last_column_concentrated(const BettiTable& t);

// The corner (pd, pd+reg, value) iff it is nonzero and is the unique entry
// maximal under (i, j-i) dominance; nullopt otherwise.
std::optional<std::tuple<int, int, long long>> unique_extremal_corner(const BettiTable& t);

struct BlockData {
  int n;
  int mu;
  int s;
};

struct ExtremalPrediction {
  bool applicable;
  std::string reason;  // set when not applicable
  int p = -1;
  int r = -1;
  long long value = 0;
  std::vector<BlockData> per_block;
};

/* Predicted unique extremal Betti number of the binomial edge ideal of a
 * connected closed graph: per block (n_i, mu_i, s_i); applicable iff every
 * block has mu_1 = ... = mu_{s_i} = mu_i >= 1 with s_i >= 1; then
 * p = 2n - 3 - sum(mu_i + s_i), r = 2m + 3 (m cut vertices), value =
 * prod s_i mu_i.  A complete block (s_i = 0) reports "block regularity 2". */
ExtremalPrediction extremal_betti_closed(
    const SimpleGraph& g, const std::optional<std::vector<std::string>>& labeling = {});

/* Exact table of the lead-term ideal of the binomial edge ideal of a
 * connected closed graph: the bipartite lead-term graph is assembled over all
 * edges, per-block tables are convolved, and when the assembled graph fits
 * max_vertices the homology sum over it is computed too and checked equal.
 * The corner entry is checked nonzero on every run. */
BettiTable initial_ideal_betti(const SimpleGraph& g, HomField field, int max_vertices = 16,
                               int threads = 1,
                               const std::optional<std::vector<std::string>>& labeling = {});

}  // namespace skewbetti
