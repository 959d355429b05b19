#include "skewbetti/fuzz.hpp"

#include <algorithm>
#include <sstream>

#include "skewbetti/graph.hpp"

namespace skewbetti {

namespace {

void check_bounds(int max_rows, int max_cols) {
  if (max_rows < 1 || max_cols < 1 || max_rows > 8 || max_cols > 8)
    throw ValidationError("fuzz shapes are limited to 1..8 rows and 1..8 columns");
}

int draw(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % bound); }

std::string render_vec(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

CellDiagram random_skew_diagram(std::mt19937_64& rng, int max_rows, int max_cols) {
  check_bounds(max_rows, max_cols);
  const int n = 1 + draw(rng, max_rows);
  const int m = 1 + draw(rng, max_cols);
  std::vector<int> lambda(n), mu(n);
  lambda[0] = m;
  for (int i = 1; i < n; ++i) lambda[i] = 1 + draw(rng, lambda[i - 1]);
  mu[0] = draw(rng, lambda[0]);  // keeps the first row nonempty
  for (int i = 1; i < n; ++i) mu[i] = draw(rng, std::min(mu[i - 1], lambda[i]) + 1);
  return new_skew_ferrers(lambda, mu);
}

CellDiagram random_ferrers_diagram(std::mt19937_64& rng, int max_rows, int max_cols) {
  check_bounds(max_rows, max_cols);
  const int n = 1 + draw(rng, max_rows);
  const int m = 1 + draw(rng, max_cols);
  std::vector<int> lambda(n);
  lambda[0] = m;
  for (int i = 1; i < n; ++i) lambda[i] = 1 + draw(rng, lambda[i - 1]);
  return new_skew_ferrers(lambda, std::vector<int>(n, 0));
}

std::pair<std::vector<int>, std::vector<int>> compact_to_lambda_mu(const CellDiagram& d) {
  std::vector<int> covered;
  for (std::size_t c = 0; c < d.n_cols(); ++c) {
    for (std::size_t r = 0; r < d.n_rows(); ++r) {
      const auto& iv = d.row_interval[r];
      if (iv && iv->first <= static_cast<int>(c) && static_cast<int>(c) <= iv->second) {
        covered.push_back(static_cast<int>(c));
        break;
      }
    }
  }
  if (covered.empty()) throw ValidationError("diagram has no cells");
  const int m = static_cast<int>(covered.size());
  const auto new_pos = [&](int c) {
    return static_cast<int>(std::lower_bound(covered.begin(), covered.end(), c) - covered.begin());
  };
  std::vector<int> lambda, mu;
  for (std::size_t r = 0; r < d.n_rows(); ++r) {
    const auto& iv = d.row_interval[r];
    if (!iv) continue;
    lambda.push_back(m - new_pos(iv->first));
    mu.push_back(m - new_pos(iv->second) - 1);
  }
  return {lambda, mu};
}

InstanceChecks check_instance(const CellDiagram& d, int max_vertices, int threads) {
  InstanceChecks c;
  c.nr = nagel_reiner_betti(d);
  const SimpleGraph g = graph_of_diagram(d);
  c.hochster_gf2 = hochster_betti(g, HomField::gf2, max_vertices, threads);
  c.hochster_rational = hochster_betti(g, HomField::rational, max_vertices, threads);
  c.oracle_equal = c.nr.entries == c.hochster_gf2.entries && c.nr.entries == c.hochster_rational.entries;
  c.pd = c.nr.pd();
  c.reg = c.nr.reg();
  c.rect_val = rect(d);
  c.nu = induced_matching_number(g);
  c.corner = c.nr.at(c.pd, c.pd + c.reg);
  c.concentrated = last_column_concentrated(c.nr);
  c.pd_reg_inequality = c.pd + 2 >= c.reg;
  c.equality_case_count = c.pd + 2 != c.reg ||
                          c.nr.totals().at(c.pd) == count_max_induced_matchings(g);
  c.rect_equals_nu = c.rect_val == c.nu;
  return c;
}

bool InstanceChecks::all_ok() const {
  return oracle_equal && concentrated && pd_reg_inequality && equality_case_count && rect_equals_nu;
}

std::string InstanceChecks::first_failure() const {
  if (!oracle_equal) return "spherical counting vs homology oracle";
  if (!concentrated) return "last column concentration";
  if (!pd_reg_inequality) return "pd + 2 >= reg";
  if (!equality_case_count) return "equality case counts maximum induced matchings";
  if (!rect_equals_nu) return "rect = induced matching number";
  return "";
}

namespace {

FuzzViolation minimize(const CellDiagram& d0, const std::string& check, int max_vertices,
                       int threads) {
  FuzzViolation v;
  v.check = check;
  std::tie(v.orig_lambda, v.orig_mu) = compact_to_lambda_mu(d0);

  const auto still_fails = [&](const CellDiagram& cand) {
    if (cand.cell_count() == 0) return false;
    try {
      return check_instance(cand, max_vertices, threads).first_failure() == check;
    } catch (const std::exception&) {
      return false;
    }
  };

  CellDiagram cur = d0;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t r = 0; r < cur.n_rows() && !improved; ++r) {
      if (cur.n_rows() == 1) break;
      std::vector<int> rows;
      for (std::size_t k = 0; k < cur.n_rows(); ++k)
        if (k != r) rows.push_back(cur.row_labels[k]);
      const CellDiagram cand = restrict(cur, rows, cur.col_labels);
      if (still_fails(cand)) {
        cur = cand;
        improved = true;
      }
    }
    for (std::size_t c = 0; c < cur.n_cols() && !improved; ++c) {
      if (cur.n_cols() == 1) break;
      std::vector<int> cols;
      for (std::size_t k = 0; k < cur.n_cols(); ++k)
        if (k != c) cols.push_back(cur.col_labels[k]);
      const CellDiagram cand = restrict(cur, cur.row_labels, cols);
      if (still_fails(cand)) {
        cur = cand;
        improved = true;
      }
    }
  }

  std::tie(v.lambda, v.mu) = compact_to_lambda_mu(cur);
  v.detail = "rerun with --lambda " + render_vec(v.lambda) + " --mu " + render_vec(v.mu);
  return v;
}

}  // namespace

FuzzReport run_fuzz(uint64_t seed, int count, int max_rows, int max_cols, int max_vertices,
                    int threads) {
  if (count < 0) throw ValidationError("instance count must be nonnegative");
  check_bounds(max_rows, max_cols);
  FuzzReport rep{seed, count, max_rows, max_cols, 0, std::nullopt};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const CellDiagram d = random_skew_diagram(rng, max_rows, max_cols);
    const InstanceChecks checks = check_instance(d, max_vertices, threads);
    ++rep.instances_run;
    if (!checks.all_ok()) {
      rep.violation = minimize(d, checks.first_failure(), max_vertices, threads);
      return rep;
    }
  }
  return rep;
}

}  // namespace skewbetti
