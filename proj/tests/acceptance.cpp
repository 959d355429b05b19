// Acceptance run: the worked example, oracle equivalences, structural laws,
// and determinism, one pass/fail line each.  Exits nonzero if anything fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skewbetti/betti.hpp"
#include "skewbetti/fuzz.hpp"
#include "skewbetti/graph.hpp"

using namespace skewbetti;

namespace {

int failures = 0;

void criterion(const std::string& name, bool ok, const std::string& note = "") {
  std::printf("[%s] %s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              note.empty() ? "" : (" (" + note + ")").c_str());
  if (!ok) ++failures;
}

template <typename Fn>
void run(const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    criterion(name, false, std::string("exception: ") + e.what());
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

struct PoolInstance {
  CellDiagram d;
  SimpleGraph g;
  BettiTable table;
};

std::vector<PoolInstance> pool;

SimpleGraph labeled_union(const SimpleGraph& a, const SimpleGraph& b) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& v : a.vertices) labels.push_back("a" + v);
  for (const auto& v : b.vertices) labels.push_back("b" + v);
  for (const auto& [u, v] : a.edge_list())
    edges.emplace_back("a" + a.vertices[u], "a" + a.vertices[v]);
  for (const auto& [u, v] : b.edge_list())
    edges.emplace_back("b" + b.vertices[u], "b" + b.vertices[v]);
  return make_graph(labels, edges);
}

// The lead-term shape with n-1 rows: lambda_i = n-i, mu = (mu,...,mu,0,...,0)
// with s leading entries.
CellDiagram family_diagram(int n, int mu, int s) {
  std::vector<int> lambda, muv;
  for (int i = 1; i <= n - 1; ++i) {
    lambda.push_back(n - i);
    muv.push_back(i <= s ? mu : 0);
  }
  return new_skew_ferrers(lambda, muv);
}

// Closed graph on 1..n whose upper neighborhoods are the intervals
// [j+1, n-mu] for j <= s and [j+1, n] above; its mu-vector is
// (mu,...,mu,0,...,0) with s leading entries and it has no cut vertex
// whenever mu + s <= n - 2.
SimpleGraph family_graph(int n, int mu, int s) {
  std::vector<std::string> labels;
  for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int j = 1; j < n; ++j) {
    const int r = j <= s ? n - mu : n;
    for (int k = j + 1; k <= r; ++k)
      edges.emplace_back(std::to_string(j), std::to_string(k));
  }
  return make_graph(labels, edges);
}

std::string run_cli(const std::string& args, int& rc) {
  const std::string cmd = std::string(SKEWBETTI_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    rc = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  rc = pclose(p);
  return out;
}

void crit_worked_example() {
  const auto t0 = std::chrono::steady_clock::now();
  const CellDiagram d = new_skew_ferrers({7, 6, 6, 5, 4, 3, 2}, {4, 4, 2, 2, 2, 1, 0});
  const RectangularDecomposition dec = rectangular_decomposition(d);
  bool ok = dec.rect() == 3 && !dec.degenerate;
  ok = ok && dec.empties.size() == 2 && dec.empties[0].row_type &&
       dec.empties[0].labels == std::vector<int>{2} && !dec.empties[1].row_type &&
       dec.empties[1].labels == std::vector<int>{7};
  const CellDiagram stripped = restrict(d, {1, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6});
  ok = ok && is_spherical(stripped);
  ok = ok && pd_reg_spherical(d).second == 4;
  const double dt = seconds_since(t0);
  ok = ok && dt < 1.0;
  criterion("worked example: decomposition, empty rectangles, regularity 4", ok, secs(dt));
}

void crit_oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260822);
  bool ok = true;
  for (int k = 0; k < 100; ++k) {
    const CellDiagram d = random_skew_diagram(rng, 6, 6);
    const SimpleGraph g = graph_of_diagram(d);
    const BettiTable nr = nagel_reiner_betti(d);
    const BettiTable h2 = hochster_betti(g, HomField::gf2);
    const BettiTable hq = hochster_betti(g, HomField::rational);
    ok = ok && nr.entries == h2.entries && nr.entries == hq.entries;
    pool.push_back({d, g, nr});
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < 60.0;
  criterion("spherical counting = homology sum over GF(2) and Q on 100 random skew shapes",
            ok, secs(dt));
}

void crit_closed_form() {
  std::mt19937_64 rng(7041776);
  bool ok = true;
  std::vector<CellDiagram> cases;
  for (int k = 0; k < 50; ++k) cases.push_back(random_ferrers_diagram(rng, 6, 6));
  cases.push_back(new_skew_ferrers({2, 2}, {0, 0}));
  for (int m = 1; m <= 6; ++m) cases.push_back(new_skew_ferrers({m}, {0}));
  for (const CellDiagram& d : cases) {
    const SimpleGraph g = graph_of_diagram(d);
    const CorsoNagelResult cn = corso_nagel_betti(d);
    const BettiTable oracle = hochster_betti(g, HomField::gf2);

    std::map<int, long long> tot;
    for (int i = 0; i <= cn.pd; ++i) tot[i] = cn.totals[i];
    ok = ok && oracle.totals() == tot;
    for (const auto& [ij, v] : oracle.entries) ok = ok && ij.second == ij.first + 2;

    int pd_formula = 0;
    for (std::size_t j = 0; j < d.n_rows(); ++j) {
      const int lambda_j = static_cast<int>(d.n_cols()) - d.row_interval[j]->first;
      pd_formula = std::max(pd_formula, lambda_j + static_cast<int>(j) + 1 - 2);
    }
    ok = ok && oracle.pd() == pd_formula && cn.pd == pd_formula;
    pool.push_back({d, g, cn.to_table()});
  }

  const CorsoNagelResult square = corso_nagel_betti(new_skew_ferrers({2, 2}, {0, 0}));
  ok = ok && square.totals == std::vector<long long>{4, 4, 1};
  for (int m = 1; m <= 6; ++m) {
    const CorsoNagelResult row = corso_nagel_betti(new_skew_ferrers({m}, {0}));
    long long binom = m;
    for (int i = 0; i <= row.pd; ++i) {
      ok = ok && row.totals[i] == binom;
      binom = binom * (m - i - 1) / (i + 2);
    }
  }
  criterion("Ferrers closed form: totals, 2-linearity, pd on 57 shapes", ok);
}

void crit_concentration() {
  bool ok = !pool.empty();
  for (const auto& inst : pool) ok = ok && last_column_concentrated(inst.table);
  criterion("top homological degree concentrated in the last column on every instance", ok);
}

void crit_pd_reg_inequality() {
  bool ok = !pool.empty();
  int equality_cases = 0;
  for (const auto& inst : pool) {
    const int p = inst.table.pd(), r = inst.table.reg();
    ok = ok && p + 2 >= r;
    if (p + 2 == r) {
      ++equality_cases;
      ok = ok && inst.table.totals().at(p) == count_max_induced_matchings(inst.g);
    }
  }
  criterion("pd + 2 >= reg; equality cases count maximum induced matchings", ok,
            std::to_string(equality_cases) + " equality cases");
}

void crit_rect_nu() {
  bool ok = !pool.empty();
  for (const auto& inst : pool) ok = ok && rect(inst.d) == induced_matching_number(inst.g);
  criterion("rectangularity equals the induced matching number on every instance", ok);
}

void crit_union_convolution() {
  std::mt19937_64 rng(1048573);
  bool ok = true;
  for (int k = 0; k < 20; ++k) {
    const CellDiagram da = random_skew_diagram(rng, 3, 3);
    const CellDiagram db = random_skew_diagram(rng, 3, 3);
    const SimpleGraph ga = graph_of_diagram(da), gb = graph_of_diagram(db);
    const BettiTable ta = hochster_betti(ga, HomField::gf2);
    const BettiTable tb = hochster_betti(gb, HomField::gf2);
    const BettiTable direct = hochster_betti(labeled_union(ga, gb), HomField::gf2);
    ok = ok && direct.entries == join_convolve({ta, tb}).entries;
    ok = ok && direct.corner() == ta.corner() * tb.corner();
    ok = ok && direct.pd() == ta.pd() + tb.pd() + 1;
    ok = ok && direct.reg() == ta.reg() + tb.reg() - 1;
  }
  criterion("disjoint unions convolve; corners multiply; pd and reg shift", ok);
}

void crit_unit_mu_family() {
  bool ok = true;
  int instances = 0;
  for (int n = 4; n <= 6; ++n)
    for (int s = 1; s <= n - 3; ++s) {
      const BettiTable t =
          hochster_betti(graph_of_diagram(family_diagram(n, 1, s)), HomField::gf2);
      ok = ok && t.at(2 * n - s - 4, 2 * n - s - 1) == s;
      ++instances;
    }
  ok = ok && instances == 6;
  criterion("unit-mu lead-term families have corner slice s", ok);
}

void crit_uniform_mu_family() {
  bool ok = true;
  int instances = 0;
  for (int n = 4; n <= 7; ++n)
    for (int mu = 1; mu <= n - 3; ++mu)
      for (int s = 1; mu + s <= n - 2; ++s) {
        const BettiTable t =
            hochster_betti(graph_of_diagram(family_diagram(n, mu, s)), HomField::gf2);
        ok = ok && t.at(2 * n - mu - s - 3, 2 * n - mu - s) == static_cast<long long>(s) * mu;

        const ExtremalPrediction pred = extremal_betti_closed(family_graph(n, mu, s));
        ok = ok && pred.applicable && pred.p == 2 * n - 3 - mu - s && pred.r == 3 &&
             pred.value == static_cast<long long>(s) * mu;
        ++instances;
      }
  ok = ok && instances == 20;
  criterion("uniform-mu corner s*mu matches the closed-graph prediction on 20 instances", ok);
}

void crit_two_block() {
  const SimpleGraph g = make_graph(
      {"1", "2", "3", "4", "5", "6", "7"},
      {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"2", "4"}, {"3", "4"}, {"4", "5"}, {"4", "6"},
       {"5", "6"}, {"5", "7"}, {"6", "7"}});
  const ExtremalPrediction pred = extremal_betti_closed(g);
  bool ok = pred.applicable && pred.p == 7 && pred.r == 5 && pred.value == 1;
  const BettiTable t = initial_ideal_betti(g, HomField::gf2, 16);
  ok = ok && t.pd() == 7 && t.reg() == 5 && t.at(7, 12) == 1;
  const auto corner = unique_extremal_corner(t);
  ok = ok && corner.has_value() && *corner == std::tuple<int, int, long long>{7, 12, 1};
  criterion("two-block prediction (7, 5, 1) equals the lead-term corner", ok);
}

void crit_monotonicity_and_shift() {
  std::mt19937_64 rng(271828);
  bool ok = true;

  int mono = 0;
  while (mono < 25) {
    const CellDiagram d = random_skew_diagram(rng, 4, 4);
    const SimpleGraph g = graph_of_diagram(d);
    std::vector<std::string> keep;
    for (const auto& v : g.vertices)
      if (rng() & 1) keep.push_back(v);
    const SimpleGraph sub = induced_subgraph(g, keep);
    if (sub.edge_count() == 0) continue;
    ok = ok && hochster_betti(sub, HomField::gf2).pd() <= hochster_betti(g, HomField::gf2).pd();
    ++mono;
  }

  int shifts = 0;
  while (shifts < 25) {
    const CellDiagram d = random_skew_diagram(rng, 3, 3);
    const SimpleGraph g = graph_of_diagram(d);
    const BettiTable base = hochster_betti(g, HomField::gf2);
    const int s = 1 + static_cast<int>(rng() % 2);
    std::vector<std::string> ghosts;
    for (int k = 0; k < s; ++k) ghosts.push_back("z" + std::to_string(k));
    const BettiTable shifted =
        hochster_betti_complex(extend_vertices(independence_complex(g), ghosts), HomField::gf2);
    ok = ok && shifted.pd() == base.pd() + s;
    for (const auto& [ij, v] : shifted.entries)
      if (ij.first == base.pd() + s) ok = ok && v == base.at(ij.first - s, ij.second - s);
    for (const auto& [ij, v] : base.entries)
      if (ij.first == base.pd()) ok = ok && v == shifted.at(ij.first + s, ij.second + s);
    ++shifts;
  }

  criterion("induced subgraphs never raise pd; adjoined variables shift the top row", ok);
}

void crit_determinism() {
  bool ok = true;
  const std::vector<std::string> cmds = {
      "ferrers betti --lambda 7,6,6,5,4,3,2 --mu 4,4,2,2,2,1,0 --method all --field both --json",
      "fuzz --seed 7 --count 20 --json"};
  for (const auto& cmd : cmds) {
    int rc1 = 0, rc2 = 0;
    const std::string first = run_cli(cmd, rc1);
    const std::string second = run_cli(cmd, rc2);
    ok = ok && rc1 == 0 && rc2 == 0 && !first.empty() && first == second;
  }
  criterion("repeated seeded runs produce byte-identical output", ok);
}

}  // namespace

int main() {
  run("worked example: decomposition, empty rectangles, regularity 4", crit_worked_example);
  run("spherical counting = homology sum over GF(2) and Q on 100 random skew shapes",
      crit_oracle_equivalence);
  run("Ferrers closed form: totals, 2-linearity, pd on 57 shapes", crit_closed_form);
  run("top homological degree concentrated in the last column on every instance",
      crit_concentration);
  run("pd + 2 >= reg; equality cases count maximum induced matchings", crit_pd_reg_inequality);
  run("rectangularity equals the induced matching number on every instance", crit_rect_nu);
  run("disjoint unions convolve; corners multiply; pd and reg shift", crit_union_convolution);
  run("unit-mu lead-term families have corner slice s", crit_unit_mu_family);
  run("uniform-mu corner s*mu matches the closed-graph prediction on 20 instances",
      crit_uniform_mu_family);
  run("two-block prediction (7, 5, 1) equals the lead-term corner", crit_two_block);
  run("induced subgraphs never raise pd; adjoined variables shift the top row",
      crit_monotonicity_and_shift);
  run("repeated seeded runs produce byte-identical output", crit_determinism);
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
