#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewbetti/errors.hpp"

namespace skewbetti {

// A cell addressed by (row label, column label).
using Cell = std::pair<int, int>;

/* A staircase-shaped set of cells in a row-by-column grid.  Rows and columns
 * carry integer labels that survive restriction, so sub-diagram reports stay
 * traceable to the original diagram.  Each nonempty row holds a contiguous
 * interval of columns, stored as inclusive positions into col_labels; left and
 * right interval endpoints are nondecreasing down the rows.  Both properties
 * are preserved by restriction and re-checked on every construction. */
struct CellDiagram {
  std::vector<int> row_labels;
  std::vector<int> col_labels;
  // Per row: inclusive (first, last) column positions, or absent for an empty row.
  std::vector<std::optional<std::pair<int, int>>> row_interval;

  std::size_t n_rows() const { return row_labels.size(); }
  std::size_t n_cols() const { return col_labels.size(); }
  long long cell_count() const;
  bool row_has_cells(std::size_t row_pos) const { return row_interval[row_pos].has_value(); }
};

struct RectPiece {
  Cell top_cell;
  std::vector<int> rows;  // X', rows of the piece's rectangle
  std::vector<int> cols;  // Y'
  std::vector<Cell> piece_cells;
};

struct EmptyRectangle {
  bool row_type;  // true: rows (X''), false: columns (Y'')
  std::vector<int> labels;
};

struct RectangularDecomposition {
  std::vector<RectPiece> pieces;
  std::vector<EmptyRectangle> empties;
  bool degenerate;  // diagram had no cells at all

  int rect() const { return static_cast<int>(pieces.size()); }
  bool spherical() const { return empties.empty(); }
};

// lambda_1 = m >= ... >= lambda_n >= 1, mu_1 >= ... >= mu_n >= 0, lambda_i >= mu_i.
// Row i occupies columns m+1-lambda_i .. m-mu_i (empty when lambda_i = mu_i).
CellDiagram new_skew_ferrers(const std::vector<int>& lambda, const std::vector<int>& mu);

// Cells in (row asc, col asc) order.
std::vector<Cell> cells(const CellDiagram& d);

// Induced sub-diagram on label subsets, original labels kept.
CellDiagram restrict(const CellDiagram& d, const std::vector<int>& rows,
                     const std::vector<int>& cols);

RectangularDecomposition rectangular_decomposition(const CellDiagram& d);

int rect(const CellDiagram& d);
bool is_spherical(const CellDiagram& d);

}  // namespace skewbetti
