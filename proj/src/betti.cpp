#include "skewbetti/betti.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <string>
#include <thread>

namespace skewbetti {

namespace {

long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 v = 1;
  for (int k = 1; k <= b; ++k) v = v * static_cast<unsigned>(a - b + k) / static_cast<unsigned>(k);
  return static_cast<long long>(v);
}

std::vector<uint32_t> adjacency32(const SimpleGraph& g) {
  std::vector<uint32_t> adj(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) adj[v] = static_cast<uint32_t>(g.adj[v]);
  return adj;
}

// Accumulate the homology sum for one induced subgraph mask.
void accumulate_mask(const std::vector<uint32_t>& adj, uint32_t wm, HomField field,
                     BettiTable& out) {
  // A vertex with no neighbor inside W makes the independence complex a cone;
  // cones contribute nothing.
  uint32_t m = wm;
  while (m) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    if (!(adj[v] & wm)) return;
  }
  const DimVector dims = homology_from_buckets(independent_set_buckets(adj, wm), field);
  const int j = std::popcount(wm);
  for (const auto& [p, d] : dims.dims) {
    const int i = j - p - 2;
    if (i < 0) throw StructuralError("homology in a degree the resolution cannot reach");
    out.add(i, j, d);
  }
}

// Cell masks of a diagram by position, for the subset enumerations.
struct MaskShape {
  int nr, nc;
  std::vector<uint32_t> row_cells;  // columns of each row
  std::vector<uint32_t> col_cells;  // rows of each column
};

MaskShape shape_of(const CellDiagram& d) {
  MaskShape s;
  s.nr = static_cast<int>(d.n_rows());
  s.nc = static_cast<int>(d.n_cols());
  if (s.nr + s.nc > 22)
    throw ValidationError("diagram too large for subset enumeration (rows + columns <= 22)");
  s.row_cells.assign(s.nr, 0);
  s.col_cells.assign(s.nc, 0);
  for (int r = 0; r < s.nr; ++r) {
    const auto& iv = d.row_interval[r];
    if (!iv) continue;
    s.row_cells[r] = ((2u << iv->second) - 1) ^ ((1u << iv->first) - 1);
    for (int c = iv->first; c <= iv->second; ++c) s.col_cells[c] |= 1u << r;
  }
  return s;
}

// Rectangularity of the restriction to (R, C) when it is spherical, else -1.
// Mirrors the label-level decomposition: remaining cells are always the
// original cells inside the active rows times the active columns.
int spherical_rect(const MaskShape& s, uint32_t R, uint32_t C) {
  int pieces = 0;
  while (R || C) {
    for (uint32_t m = R; m;) {
      const int r = std::countr_zero(m);
      m &= m - 1;
      if (!(s.row_cells[r] & C)) return -1;
    }
    for (uint32_t m = C; m;) {
      const int c = std::countr_zero(m);
      m &= m - 1;
      if (!(s.col_cells[c] & R)) return -1;
    }
    const int tr = std::countr_zero(R), tc = std::countr_zero(C);
    if (!(s.row_cells[tr] >> tc & 1))
      throw StructuralError("top-left position of the remainder is not a cell");
    R &= ~(s.col_cells[tc]);
    C &= ~(s.row_cells[tr]);
    ++pieces;
  }
  return pieces;
}

template <class Fn>
void for_each_spherical(const CellDiagram& d, Fn&& fn) {
  const MaskShape s = shape_of(d);
  for (uint32_t R = 1; R < (1u << s.nr); ++R)
    for (uint32_t C = 1; C < (1u << s.nc); ++C) {
      const int r = spherical_rect(s, R, C);
      if (r >= 0) fn(std::popcount(R) + std::popcount(C), r);
    }
}

}  // namespace

long long BettiTable::at(int i, int j) const {
  const auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long v) {
  if (v == 0) return;
  const auto it = entries.emplace(std::make_pair(i, j), 0).first;
  it->second += v;
  if (it->second == 0) entries.erase(it);
}

int BettiTable::pd() const {
  if (entries.empty()) throw ValidationError("all-zero Betti table");
  int p = 0;
  for (const auto& [ij, v] : entries) p = std::max(p, ij.first);
  return p;
}

int BettiTable::reg() const {
  if (entries.empty()) throw ValidationError("all-zero Betti table");
  int r = 0;
  for (const auto& [ij, v] : entries) r = std::max(r, ij.second - ij.first);
  return r;
}

std::map<int, long long> BettiTable::totals() const {
  std::map<int, long long> t;
  for (const auto& [ij, v] : entries) t[ij.first] += v;
  return t;
}

BettiTable hochster_betti(const SimpleGraph& g, HomField field, int max_vertices, int threads) {
  max_vertices = std::min(max_vertices, 20);
  const int n = static_cast<int>(g.n());
  if (n > max_vertices)
    throw ValidationError("graph has " + std::to_string(n) + " vertices; the homology sum is capped at " +
                          std::to_string(max_vertices) + " (see --max-vertices, hard cap 20)");
  if (g.edge_count() == 0) throw ValidationError("graph has no edges");
  const std::vector<uint32_t> adj = adjacency32(g);
  const uint32_t total = 1u << n;

  threads = std::clamp(threads, 1, 64);
  if (threads == 1) {
    BettiTable out;
    for (uint32_t wm = 1; wm < total; ++wm) accumulate_mask(adj, wm, field, out);
    return out;
  }

  std::vector<BettiTable> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (uint32_t wm = 1 + t; wm < total; wm += threads)
          accumulate_mask(adj, wm, field, parts[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  BettiTable out;
  for (const auto& part : parts)
    for (const auto& [ij, v] : part.entries) out.add(ij.first, ij.second, v);
  return out;
}

BettiTable hochster_betti_complex(const SimplicialComplex& c, HomField field) {
  const int n = static_cast<int>(c.n_vertices());
  const auto full = c.faces_by_card();
  BettiTable out;
  std::vector<std::vector<uint32_t>> buckets(full.size());
  for (uint32_t wm = 1; wm < (1u << n); ++wm) {
    for (std::size_t card = 0; card < full.size(); ++card) {
      buckets[card].clear();
      for (const uint32_t f : full[card])
        if ((f & wm) == f) buckets[card].push_back(f);
    }
    const DimVector dims = homology_from_buckets(buckets, field);
    const int j = std::popcount(wm);
    for (const auto& [p, d] : dims.dims) {
      const int i = j - p - 2;
      if (i < 0) throw StructuralError("homology in a degree the resolution cannot reach");
      out.add(i, j, d);
    }
  }
  return out;
}

BettiTable nagel_reiner_betti(const CellDiagram& d) {
  if (d.cell_count() == 0) throw ValidationError("diagram has no cells");
  BettiTable out;
  for_each_spherical(d, [&](int j, int r) { out.add(j - r - 1, j, 1); });
  return out;
}

CorsoNagelResult corso_nagel_betti(const CellDiagram& d) {
  const int n = static_cast<int>(d.n_rows());
  const int m = static_cast<int>(d.n_cols());
  if (d.cell_count() == 0) throw ValidationError("diagram has no cells");
  for (int r = 0; r < n; ++r) {
    const auto& iv = d.row_interval[r];
    if (!iv || iv->second != m - 1)
      throw ValidationError("not a Ferrers diagram: every row must reach the last column");
  }
  if (d.row_interval[0]->first != 0)
    throw ValidationError("not a Ferrers diagram: the first row must span all columns");

  std::vector<int> lambda(n);
  for (int r = 0; r < n; ++r) lambda[r] = m - d.row_interval[r]->first;

  CorsoNagelResult res;
  res.pd = 0;
  for (int j = 0; j < n; ++j) res.pd = std::max(res.pd, lambda[j] + j - 1);
  for (int i = 0; i <= res.pd; ++i) {
    long long b = -binom(n, i + 2);
    for (int j = 0; j < n; ++j) b += binom(lambda[j] + j, i + 1);
    res.totals.push_back(b);
  }
  if (res.totals[0] != static_cast<long long>(d.cell_count()))
    throw StructuralError("degree-2 generator count differs from the cell count");
  return res;
}

BettiTable CorsoNagelResult::to_table() const {
  BettiTable t;
  for (int i = 0; i < static_cast<int>(totals.size()); ++i) t.add(i, i + 2, totals[i]);
  return t;
}

BettiTable join_convolve(const std::vector<BettiTable>& tables) {
  // Work in the module indexing (a, b) = (i+1, j), where every factor also
  // carries a unit at (0, 0); multiply them all and drop the unit at the end.
  std::map<std::pair<int, int>, long long> acc{{{0, 0}, 1}};
  for (const auto& t : tables) {
    std::map<std::pair<int, int>, long long> factor{{{0, 0}, 1}};
    for (const auto& [ij, v] : t.entries) factor[{ij.first + 1, ij.second}] = v;
    std::map<std::pair<int, int>, long long> next;
    for (const auto& [ab, v] : acc)
      for (const auto& [cd, w] : factor) next[{ab.first + cd.first, ab.second + cd.second}] += v * w;
    acc = std::move(next);
  }
  acc.erase({0, 0});
  BettiTable out;
  for (const auto& [ab, v] : acc) out.add(ab.first - 1, ab.second, v);
  return out;
}

std::pair<int, int> pd_reg_spherical(const CellDiagram& d) {
  if (d.cell_count() == 0) throw ValidationError("diagram has no cells");
  int p = 0;
  for_each_spherical(d, [&](int j, int r) { p = std::max(p, j - r - 1); });
  return {p, rect(d) + 1};
}

bool last_column_concentrated(const BettiTable& t) {
  const int p = t.pd(), target = p + t.reg();
  for (const auto& [ij, v] : t.entries)
    if (ij.first == p && ij.second != target) return false;
  return true;
}

std::optional<std::tuple<int, int, long long>> unique_extremal_corner(const BettiTable& t) {
  // Maximal entries under componentwise dominance of (i, j-i).
  std::vector<std::pair<int, int>> maximal;
  for (const auto& [ij, v] : t.entries) {
    const std::pair<int, int> pt{ij.first, ij.second - ij.first};
    bool dominated = false;
    for (const auto& [kl, w] : t.entries) {
      const std::pair<int, int> other{kl.first, kl.second - kl.first};
      if (other != pt && other.first >= pt.first && other.second >= pt.second) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(pt);
  }
  if (maximal.size() != 1) return std::nullopt;
  const auto [i, r] = maximal.front();
  return std::make_tuple(i, i + r, t.at(i, i + r));
}

ExtremalPrediction extremal_betti_closed(const SimpleGraph& g,
                                         const std::optional<std::vector<std::string>>& labeling) {
  ExtremalPrediction pred;
  const auto analysis = analyze_closed(g, labeling);
  if (!analysis) {
    pred.applicable = false;
    pred.reason = labeling ? "not closed under the given labeling" : "not closed under any labeling";
    return pred;
  }

  pred.applicable = true;
  int mu_s_sum = 0;
  long long value = 1;
  for (const auto& block : analysis->blocks) {
    const auto [bmu, bs] = mu_vector(block);
    BlockData data{static_cast<int>(block.n()), bs > 0 ? bmu[0] : 0, bs};
    pred.per_block.push_back(data);
    if (bs == 0) {
      pred.applicable = false;
      if (pred.reason.empty()) pred.reason = "block regularity 2";
      continue;
    }
    for (int k = 1; k < bs; ++k)
      if (bmu[k] != bmu[0]) {
        pred.applicable = false;
        if (pred.reason.empty()) pred.reason = "block mu-vector not uniform";
      }
    mu_s_sum += data.mu + data.s;
    value *= static_cast<long long>(data.s) * data.mu;
  }
  if (!pred.applicable) return pred;

  const int n = static_cast<int>(g.n());
  const int cuts = static_cast<int>(analysis->cut_vertices.size());
  pred.p = 2 * n - 3 - mu_s_sum;
  pred.r = 2 * cuts + 3;
  pred.value = value;
  return pred;
}

BettiTable initial_ideal_betti(const SimpleGraph& g, HomField field, int max_vertices, int threads,
                               const std::optional<std::vector<std::string>>& labeling) {
  const auto analysis = analyze_closed(g, labeling);
  if (!analysis)
    throw ValidationError(labeling ? "graph is not closed under the given labeling"
                                   : "graph is not closed under any labeling");
  const SimpleGraph gl = reorder(g, analysis->labeling);
  if (gl.edge_count() == 0) return {};  // a single vertex: zero ideal

  std::vector<BettiTable> block_tables;
  for (const auto& block : analysis->blocks)
    block_tables.push_back(hochster_betti(initial_closed_graph(block), field, max_vertices, threads));
  BettiTable out = join_convolve(block_tables);

  // The lead-term graphs of the blocks partition the edges of the full
  // lead-term graph, so the convolution must reproduce the direct sum.
  const int hn = 2 * (static_cast<int>(gl.n()) - 1);
  if (hn <= std::min(max_vertices, 20)) {
    const BettiTable direct = hochster_betti(initial_closed_graph(gl), field, max_vertices, threads);
    if (direct.entries != out.entries)
      throw StructuralError("block convolution disagrees with the assembled lead-term graph");
  }

  if (out.corner() == 0) throw StructuralError("vanishing corner entry in the lead-term table");
  return out;
}

}  // namespace skewbetti
