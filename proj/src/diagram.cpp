#include "skewbetti/diagram.hpp"

#include <algorithm>
#include <string>

namespace skewbetti {

namespace {

// Staircase shape: left and right interval endpoints nondecreasing down the
// nonempty rows.  Holds for every restriction of a valid diagram; checked on
// each construction anyway.
void check_staircase(const CellDiagram& d) {
  if (d.row_labels.size() != d.row_interval.size())
    throw StructuralError("row/interval size mismatch");
  int prev_lo = -1, prev_hi = -1;
  for (const auto& iv : d.row_interval) {
    if (!iv) continue;
    auto [lo, hi] = *iv;
    if (lo < 0 || hi >= static_cast<int>(d.n_cols()) || lo > hi)
      throw StructuralError("row interval out of range");
    if (lo < prev_lo || hi < prev_hi) throw StructuralError("staircase shape violated");
    prev_lo = lo;
    prev_hi = hi;
  }
}

std::vector<int> sorted_positions(const std::vector<int>& labels,
                                  const std::vector<int>& subset, const char* kind) {
  std::vector<int> pos;
  pos.reserve(subset.size());
  for (int lab : subset) {
    auto it = std::find(labels.begin(), labels.end(), lab);
    if (it == labels.end())
      throw ValidationError(std::string("unknown ") + kind + " label " + std::to_string(lab));
    pos.push_back(static_cast<int>(it - labels.begin()));
  }
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
    throw ValidationError(std::string("duplicate ") + kind + " label");
  return pos;
}

}  // namespace

long long CellDiagram::cell_count() const {
  long long total = 0;
  for (const auto& iv : row_interval)
    if (iv) total += iv->second - iv->first + 1;
  return total;
}

CellDiagram new_skew_ferrers(const std::vector<int>& lambda, const std::vector<int>& mu) {
  const int n = static_cast<int>(lambda.size());
  if (n == 0) throw ValidationError("lambda must be nonempty");
  if (lambda.size() != mu.size()) throw ValidationError("lambda and mu must have equal length");
  if (n > 32) throw ValidationError("at most 32 rows supported");
  const int m = lambda[0];
  if (m > 32) throw ValidationError("at most 32 columns supported");
  for (int i = 0; i < n; ++i) {
    if (lambda[i] < 1) throw ValidationError("lambda entries must be positive");
    if (mu[i] < 0) throw ValidationError("mu entries must be nonnegative");
    if (i > 0 && lambda[i] > lambda[i - 1]) throw ValidationError("lambda must be nonincreasing");
    if (i > 0 && mu[i] > mu[i - 1]) throw ValidationError("mu must be nonincreasing");
    if (mu[i] > lambda[i]) throw ValidationError("mu may not exceed lambda");
  }

  CellDiagram d;
  for (int i = 1; i <= n; ++i) d.row_labels.push_back(i);
  for (int j = 1; j <= m; ++j) d.col_labels.push_back(j);
  for (int i = 0; i < n; ++i) {
    if (lambda[i] == mu[i]) {
      d.row_interval.emplace_back(std::nullopt);
    } else {
      // Columns m+1-lambda_i .. m-mu_i, as 0-based positions.
      d.row_interval.emplace_back(std::pair{m - lambda[i], m - mu[i] - 1});
    }
  }
  check_staircase(d);
  return d;
}

std::vector<Cell> cells(const CellDiagram& d) {
  std::vector<Cell> out;
  for (std::size_t r = 0; r < d.n_rows(); ++r) {
    if (!d.row_interval[r]) continue;
    auto [lo, hi] = *d.row_interval[r];
    for (int p = lo; p <= hi; ++p) out.emplace_back(d.row_labels[r], d.col_labels[p]);
  }
  return out;
}

CellDiagram restrict(const CellDiagram& d, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
  const auto row_pos = sorted_positions(d.row_labels, rows, "row");
  const auto col_pos = sorted_positions(d.col_labels, cols, "column");

  CellDiagram out;
  for (int p : col_pos) out.col_labels.push_back(d.col_labels[p]);
  for (int rp : row_pos) {
    out.row_labels.push_back(d.row_labels[rp]);
    const auto& iv = d.row_interval[rp];
    if (!iv) {
      out.row_interval.emplace_back(std::nullopt);
      continue;
    }
    // New interval = kept columns falling inside [lo, hi]; contiguous in the
    // kept order because the kept columns are sorted.
    auto first = std::lower_bound(col_pos.begin(), col_pos.end(), iv->first);
    auto last = std::upper_bound(col_pos.begin(), col_pos.end(), iv->second);
    if (first == last) {
      out.row_interval.emplace_back(std::nullopt);
    } else {
      out.row_interval.emplace_back(std::pair{static_cast<int>(first - col_pos.begin()),
                                              static_cast<int>(last - col_pos.begin()) - 1});
    }
  }
  check_staircase(out);
  return out;
}

RectangularDecomposition rectangular_decomposition(const CellDiagram& d) {
  RectangularDecomposition out;
  out.degenerate = d.cell_count() == 0;

  std::vector<int> rows, cols;  // active positions
  for (std::size_t r = 0; r < d.n_rows(); ++r) rows.push_back(static_cast<int>(r));
  for (std::size_t c = 0; c < d.n_cols(); ++c) cols.push_back(static_cast<int>(c));

  auto in_row = [&](int r, int c) {
    const auto& iv = d.row_interval[r];
    return iv && iv->first <= c && c <= iv->second;
  };

  while (true) {
    // Rows with no cell among the active columns become an empty rectangle.
    std::vector<int> er, keep;
    for (int r : rows) {
      bool any = false;
      for (int c : cols)
        if (in_row(r, c)) {
          any = true;
          break;
        }
      (any ? keep : er).push_back(r);
    }
    if (!er.empty()) {
      EmptyRectangle e{true, {}};
      for (int r : er) e.labels.push_back(d.row_labels[r]);
      out.empties.push_back(std::move(e));
      rows = std::move(keep);
    }
    // Columns covered by no active row likewise.
    std::vector<int> ec, keepc;
    for (int c : cols) {
      bool any = false;
      for (int r : rows)
        if (in_row(r, c)) {
          any = true;
          break;
        }
      (any ? keepc : ec).push_back(c);
    }
    if (!ec.empty()) {
      EmptyRectangle e{false, {}};
      for (int c : ec) e.labels.push_back(d.col_labels[c]);
      out.empties.push_back(std::move(e));
      cols = std::move(keepc);
    }

    if (rows.empty() != cols.empty())
      throw StructuralError("stripping left rows and columns out of step");
    if (rows.empty()) break;

    const int tr = rows.front(), tc = cols.front();
    if (!in_row(tr, tc)) throw StructuralError("top-left position of the remainder is not a cell");

    RectPiece piece;
    piece.top_cell = {d.row_labels[tr], d.col_labels[tc]};
    std::vector<int> xp, yp;
    for (int r : rows)
      if (in_row(r, tc)) xp.push_back(r);
    for (int c : cols)
      if (in_row(tr, c)) yp.push_back(c);
    for (int r : xp) piece.rows.push_back(d.row_labels[r]);
    for (int c : yp) piece.cols.push_back(d.col_labels[c]);
    for (int r : rows) {
      const bool r_in = std::binary_search(xp.begin(), xp.end(), r);
      for (int c : cols)
        if (in_row(r, c) && (r_in || std::binary_search(yp.begin(), yp.end(), c)))
          piece.piece_cells.emplace_back(d.row_labels[r], d.col_labels[c]);
    }
    out.pieces.push_back(std::move(piece));

    std::vector<int> next_rows, next_cols;
    for (int r : rows)
      if (!std::binary_search(xp.begin(), xp.end(), r)) next_rows.push_back(r);
    for (int c : cols)
      if (!std::binary_search(yp.begin(), yp.end(), c)) next_cols.push_back(c);
    rows = std::move(next_rows);
    cols = std::move(next_cols);
  }
  return out;
}

int rect(const CellDiagram& d) { return rectangular_decomposition(d).rect(); }

bool is_spherical(const CellDiagram& d) { return rectangular_decomposition(d).spherical(); }

}  // namespace skewbetti
