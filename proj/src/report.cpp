#include "skewbetti/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace skewbetti {

std::string render_betti_table_text(const BettiTable& t) {
  if (t.empty()) return "(zero table)\n";
  const int p = t.pd(), r = t.reg();
  const int rmin = [&] {
    int m = r;
    for (const auto& [ij, v] : t.entries) m = std::min(m, ij.second - ij.first);
    return m;
  }();

  std::map<int, long long> tot = t.totals();
  std::vector<std::size_t> width(p + 1);
  for (int i = 0; i <= p; ++i) {
    width[i] = std::max<std::size_t>(std::to_string(i).size(), 1);
    const auto it = tot.find(i);
    if (it != tot.end())
      width[i] = std::max(width[i], std::to_string(it->second).size());
    for (int row = rmin; row <= r; ++row) {
      const long long v = t.at(i, i + row);
      if (v) width[i] = std::max(width[i], std::to_string(v).size());
    }
  }
  std::size_t label_w = std::to_string(r).size();
  label_w = std::max({label_w, std::to_string(rmin).size(), std::string("total").size()});

  std::ostringstream os;
  const auto cell = [&](const std::string& s, std::size_t w) {
    os << ' ' << std::setw(static_cast<int>(w)) << s;
  };
  cell("", label_w);
  os << ':';
  for (int i = 0; i <= p; ++i) cell(std::to_string(i), width[i]);
  os << '\n';
  cell("total", label_w);
  os << ':';
  for (int i = 0; i <= p; ++i) {
    const auto it = tot.find(i);
    cell(it == tot.end() ? "." : std::to_string(it->second), width[i]);
  }
  os << '\n';
  for (int row = rmin; row <= r; ++row) {
    cell(std::to_string(row), label_w);
    os << ':';
    for (int i = 0; i <= p; ++i) {
      const long long v = t.at(i, i + row);
      cell(v ? std::to_string(v) : ".", width[i]);
    }
    os << '\n';
  }
  return os.str();
}

ordered_json computation_json(const std::string& method, const std::string& field,
                              const BettiTable& t) {
  ordered_json doc;
  doc["method"] = method;
  doc["field"] = field;
  ordered_json entries = ordered_json::array();
  for (const auto& [ij, v] : t.entries) entries.push_back({ij.first, ij.second, v});
  doc["betti"] = std::move(entries);
  if (t.empty()) {
    doc["pd"] = nullptr;
    doc["reg"] = nullptr;
    doc["concentrated"] = nullptr;
    doc["extremal"] = nullptr;
    return doc;
  }
  doc["pd"] = t.pd();
  doc["reg"] = t.reg();
  doc["concentrated"] = last_column_concentrated(t);
  const auto corner = unique_extremal_corner(t);
  if (corner) {
    const auto [i, j, v] = *corner;
    doc["extremal"] = ordered_json{{"i", i}, {"j", j}, {"value", v}};
  } else {
    doc["extremal"] = nullptr;
  }
  return doc;
}

ordered_json decomposition_json(const RectangularDecomposition& dec) {
  ordered_json doc;
  doc["rect"] = dec.rect();
  doc["spherical"] = dec.spherical();
  doc["degenerate"] = dec.degenerate;
  ordered_json pieces = ordered_json::array();
  for (const auto& p : dec.pieces) {
    ordered_json piece;
    piece["top_cell"] = {p.top_cell.first, p.top_cell.second};
    piece["rows"] = p.rows;
    piece["cols"] = p.cols;
    ordered_json cells = ordered_json::array();
    for (const auto& [r, c] : p.piece_cells) cells.push_back({r, c});
    piece["cells"] = std::move(cells);
    pieces.push_back(std::move(piece));
  }
  doc["pieces"] = std::move(pieces);
  ordered_json empties = ordered_json::array();
  for (const auto& e : dec.empties) {
    ordered_json emp;
    emp["kind"] = e.row_type ? "rows" : "cols";
    emp["labels"] = e.labels;
    empties.push_back(std::move(emp));
  }
  doc["empties"] = std::move(empties);
  return doc;
}

ordered_json prediction_json(const ExtremalPrediction& pred) {
  ordered_json doc;
  doc["applicable"] = pred.applicable;
  if (!pred.applicable) doc["reason"] = pred.reason;
  ordered_json blocks = ordered_json::array();
  for (const auto& b : pred.per_block)
    blocks.push_back(ordered_json{{"n", b.n}, {"mu", b.mu}, {"s", b.s}});
  doc["blocks"] = std::move(blocks);
  if (pred.applicable) {
    doc["p"] = pred.p;
    doc["r"] = pred.r;
    doc["value"] = pred.value;
  }
  return doc;
}

ordered_json fuzz_json(const FuzzReport& rep) {
  ordered_json doc;
  doc["seed"] = rep.seed;
  doc["count"] = rep.count;
  doc["max_rows"] = rep.max_rows;
  doc["max_cols"] = rep.max_cols;
  doc["instances_run"] = rep.instances_run;
  doc["ok"] = !rep.violation.has_value();
  if (rep.violation) {
    const auto& v = *rep.violation;
    ordered_json vio;
    vio["check"] = v.check;
    vio["lambda"] = v.lambda;
    vio["mu"] = v.mu;
    vio["orig_lambda"] = v.orig_lambda;
    vio["orig_mu"] = v.orig_mu;
    vio["detail"] = v.detail;
    doc["violation"] = std::move(vio);
  }
  return doc;
}

std::string field_name(HomField f) { return f == HomField::gf2 ? "gf2" : "rational"; }

}  // namespace skewbetti
