#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewbetti/betti.hpp"
#include "skewbetti/diagram.hpp"
#include "skewbetti/fuzz.hpp"
#include "skewbetti/graph.hpp"
#include "skewbetti/report.hpp"

namespace {

using namespace skewbetti;

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError(std::string("could not parse ") + what + " entry '" + tok + "'");
    }
  }
  if (out.empty()) throw ValidationError(std::string(what) + " must not be empty");
  return out;
}

std::vector<std::string> parse_labels(const std::string& s) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) out.push_back(tok);
  return out;
}

SimpleGraph parse_graph(const std::string& s) {
  std::vector<std::pair<int, int>> edges;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos)
      throw ValidationError("edge '" + tok + "' must look like 1-2");
    const auto ends = parse_ints(tok.substr(0, dash) + "," + tok.substr(dash + 1), "edge");
    if (ends.size() != 2) throw ValidationError("edge '" + tok + "' must look like 1-2");
    edges.emplace_back(ends[0], ends[1]);
  }
  if (edges.empty()) throw ValidationError("edge list must not be empty");
  std::vector<int> verts;
  for (const auto& [u, v] : edges) {
    verts.push_back(u);
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<std::string> labels;
  for (int v : verts) labels.push_back(std::to_string(v));
  std::vector<std::pair<std::string, std::string>> named;
  for (const auto& [u, v] : edges) named.emplace_back(std::to_string(u), std::to_string(v));
  return make_graph(labels, named);
}

std::string render_int_vec(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

void print_computation_text(const std::string& method, const std::string& field,
                            const BettiTable& t) {
  std::cout << "method " << method << " (field " << field << "):\n";
  if (t.empty()) {
    std::cout << "  (zero table)\n";
    return;
  }
  std::istringstream table(render_betti_table_text(t));
  for (std::string line; std::getline(table, line);) std::cout << "  " << line << "\n";
  std::cout << "  pd = " << t.pd() << "  reg = " << t.reg() << "\n";
  std::cout << "  last column concentrated: " << (last_column_concentrated(t) ? "yes" : "no")
            << "\n";
  const auto corner = unique_extremal_corner(t);
  if (corner) {
    const auto [i, j, v] = *corner;
    std::cout << "  unique extremal corner: beta(" << i << "," << j << ") = " << v << "\n";
  } else {
    std::cout << "  unique extremal corner: none\n";
  }
}

struct Computation {
  std::string method;
  std::string field;
  BettiTable table;
};

int emit_computations(ordered_json& doc, const std::vector<Computation>& comps, bool json) {
  bool agree = true;
  for (const auto& c : comps)
    if (c.table.entries != comps.front().table.entries) agree = false;
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : comps) arr.push_back(computation_json(c.method, c.field, c.table));
    doc["computations"] = std::move(arr);
    doc["agreement"] = agree;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& c : comps) print_computation_text(c.method, c.field, c.table);
    if (comps.size() > 1)
      std::cout << "agreement: " << (agree ? "yes" : "NO, tables differ") << "\n";
  }
  if (!agree) std::cerr << "check failed: requested methods disagree\n";
  return agree ? 0 : 1;
}

struct Options {
  std::string lambda_s, mu_s, edges_s, labeling_s;
  std::string action;
  std::string field = "gf2";
  std::string method = "nagel-reiner";
  bool json = false;
  bool crosscheck = false;
  int threads = 1;
  int max_vertices = 14;
  uint64_t seed = 1;
  int count = 100;
  int max_rows = 6;
  int max_cols = 6;
};

std::vector<HomField> fields_of(const std::string& name) {
  if (name == "gf2") return {HomField::gf2};
  if (name == "rational") return {HomField::rational};
  return {HomField::gf2, HomField::rational};
}

int run_ferrers(const Options& opt) {
  const std::vector<int> lambda = parse_ints(opt.lambda_s, "--lambda");
  const std::vector<int> mu =
      opt.mu_s.empty() ? std::vector<int>(lambda.size(), 0) : parse_ints(opt.mu_s, "--mu");
  const CellDiagram d = new_skew_ferrers(lambda, mu);

  ordered_json doc;
  doc["command"] = "ferrers";
  doc["action"] = opt.action;
  doc["input"] = ordered_json{{"lambda", lambda}, {"mu", mu}};

  if (opt.action == "decompose") {
    const RectangularDecomposition dec = rectangular_decomposition(d);
    if (opt.json) {
      doc["decomposition"] = decomposition_json(dec);
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "lambda = " << render_int_vec(lambda) << "  mu = " << render_int_vec(mu)
                << "\n";
      std::cout << "rect = " << dec.rect() << "  spherical: " << (dec.spherical() ? "yes" : "no")
                << (dec.degenerate ? "  (no cells)" : "") << "\n";
      for (std::size_t k = 0; k < dec.pieces.size(); ++k) {
        const auto& p = dec.pieces[k];
        std::cout << "piece " << k + 1 << ": top cell (" << p.top_cell.first << ","
                  << p.top_cell.second << "), rows {";
        for (std::size_t i = 0; i < p.rows.size(); ++i) std::cout << (i ? "," : "") << p.rows[i];
        std::cout << "}, cols {";
        for (std::size_t i = 0; i < p.cols.size(); ++i) std::cout << (i ? "," : "") << p.cols[i];
        std::cout << "}, " << p.piece_cells.size() << " cells\n";
      }
      for (const auto& e : dec.empties) {
        std::cout << "empty " << (e.row_type ? "rows" : "cols") << " {";
        for (std::size_t i = 0; i < e.labels.size(); ++i) std::cout << (i ? "," : "") << e.labels[i];
        std::cout << "}\n";
      }
    }
    return 0;
  }

  if (opt.action == "pdreg") {
    const auto [p, r] = pd_reg_spherical(d);
    if (opt.json) {
      doc["pd"] = p;
      doc["reg"] = r;
      doc["rect"] = rect(d);
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "pd = " << p << "  reg = " << r << "  (rect = " << rect(d) << ")\n";
    }
    return 0;
  }

  // action == "betti"
  const std::string method = opt.crosscheck ? "all" : opt.method;
  std::vector<Computation> comps;
  if (method == "nagel-reiner" || method == "all")
    comps.push_back({"nagel-reiner", "any", nagel_reiner_betti(d)});
  if (method == "hochster" || method == "all") {
    const SimpleGraph g = graph_of_diagram(d);
    for (const HomField f : fields_of(opt.field))
      comps.push_back({"hochster", field_name(f), hochster_betti(g, f, opt.max_vertices, opt.threads)});
  }
  if (method == "corso-nagel" || method == "all") {
    const bool ferrers_shape = std::all_of(mu.begin(), mu.end(), [](int x) { return x == 0; });
    if (!ferrers_shape && method == "corso-nagel")
      throw ValidationError("--method corso-nagel needs mu = 0");
    if (ferrers_shape)
      comps.push_back({"corso-nagel", "any", corso_nagel_betti(d).to_table()});
  }
  return emit_computations(doc, comps, opt.json);
}

int run_graph(const Options& opt) {
  const SimpleGraph g = parse_graph(opt.edges_s);
  ordered_json doc;
  doc["command"] = "graph";
  doc["action"] = opt.action;
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edge_list())
    edges.push_back({g.vertices[u], g.vertices[v]});
  doc["input"] = ordered_json{{"edges", std::move(edges)}};

  if (opt.action == "betti") {
    std::vector<Computation> comps;
    for (const HomField f : fields_of(opt.field))
      comps.push_back({"hochster", field_name(f), hochster_betti(g, f, opt.max_vertices, opt.threads)});
    return emit_computations(doc, comps, opt.json);
  }

  if (opt.action == "nu") {
    const int nu = induced_matching_number(g);
    const long long count = count_max_induced_matchings(g);
    if (opt.json) {
      doc["nu"] = nu;
      doc["max_induced_matchings"] = count;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "nu = " << nu << "  maximum induced matchings: " << count << "\n";
    }
    return 0;
  }

  // action == "blocks"
  const auto cuts = cut_vertices(g);
  const auto bl = blocks(g);
  if (opt.json) {
    doc["cut_vertices"] = cuts;
    ordered_json blist = ordered_json::array();
    for (const auto& b : bl) blist.push_back(b.vertices);
    doc["blocks"] = std::move(blist);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "cut vertices: {";
    for (std::size_t i = 0; i < cuts.size(); ++i) std::cout << (i ? "," : "") << cuts[i];
    std::cout << "}\n";
    for (std::size_t k = 0; k < bl.size(); ++k) {
      std::cout << "block " << k + 1 << ": {";
      for (std::size_t i = 0; i < bl[k].vertices.size(); ++i)
        std::cout << (i ? "," : "") << bl[k].vertices[i];
      std::cout << "}\n";
    }
  }
  return 0;
}

int run_closed(const Options& opt) {
  const SimpleGraph g = parse_graph(opt.edges_s);
  const std::optional<std::vector<std::string>> labeling =
      opt.labeling_s.empty() ? std::nullopt
                             : std::optional<std::vector<std::string>>(parse_labels(opt.labeling_s));

  ordered_json doc;
  doc["command"] = "closed";
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edge_list())
    edges.push_back({g.vertices[u], g.vertices[v]});
  doc["input"] = ordered_json{{"edges", std::move(edges)}};

  const auto analysis = analyze_closed(g, labeling);
  if (!analysis) {
    const std::string why =
        labeling ? "not closed under the given labeling" : "not closed under any labeling";
    if (opt.json) {
      doc["closed"] = false;
      doc["reason"] = why;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "closed: no (" << why << ")\n";
    }
    return 0;
  }

  const ExtremalPrediction pred = extremal_betti_closed(g, labeling);
  const int hn = 2 * (static_cast<int>(g.n()) - 1);
  const bool within = hn <= std::min(opt.max_vertices, 20);

  std::vector<Computation> comps;
  if (within)
    for (const HomField f : fields_of(opt.field))
      comps.push_back({"hochster(in)", field_name(f),
                       initial_ideal_betti(g, f, opt.max_vertices, opt.threads, labeling)});

  int corner_rc = 0;
  std::string corner_note;
  if (pred.applicable && !comps.empty() && !comps.front().table.empty()) {
    const BettiTable& t = comps.front().table;
    const bool ok = t.pd() == pred.p && t.reg() == pred.r && t.at(pred.p, pred.p + pred.r) == pred.value;
    corner_note = ok ? "verified" : "MISMATCH";
    if (!ok) {
      corner_rc = 1;
      std::cerr << "check failed: predicted corner (" << pred.p << "," << pred.p + pred.r
                << ")=" << pred.value << " does not match the computed table\n";
    }
  }

  if (opt.json) {
    doc["closed"] = true;
    doc["labeling"] = analysis->labeling;
    doc["mu"] = analysis->mu;
    doc["s"] = analysis->s;
    doc["cut_vertices"] = analysis->cut_vertices;
    ordered_json blist = ordered_json::array();
    for (const auto& b : analysis->blocks) blist.push_back(b.vertices);
    doc["blocks"] = std::move(blist);
    doc["prediction"] = prediction_json(pred);
    if (within) {
      ordered_json arr = ordered_json::array();
      for (const auto& c : comps) arr.push_back(computation_json(c.method, c.field, c.table));
      doc["computations"] = std::move(arr);
    } else {
      doc["computations"] = nullptr;
      doc["note"] = "lead-term table skipped: 2(n-1) = " + std::to_string(hn) +
                    " exceeds --max-vertices " + std::to_string(opt.max_vertices);
    }
    doc["corner"] = corner_note.empty() ? ordered_json(nullptr) : ordered_json(corner_note);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "closed: yes\nlabeling:";
    for (const auto& lab : analysis->labeling) std::cout << " " << lab;
    std::cout << "\nmu =";
    for (int x : analysis->mu) std::cout << " " << x;
    std::cout << "  s = " << analysis->s << "\ncut vertices: {";
    for (std::size_t i = 0; i < analysis->cut_vertices.size(); ++i)
      std::cout << (i ? "," : "") << analysis->cut_vertices[i];
    std::cout << "}\nblocks:";
    for (const auto& b : analysis->blocks) {
      std::cout << " {";
      for (std::size_t i = 0; i < b.vertices.size(); ++i)
        std::cout << (i ? "," : "") << b.vertices[i];
      std::cout << "}";
    }
    std::cout << "\n";
    if (pred.applicable) {
      std::cout << "predicted unique extremal corner: beta(" << pred.p << "," << pred.p + pred.r
                << ") = " << pred.value << "\n";
    } else {
      std::cout << "extremal prediction not applicable: " << pred.reason << "\n";
    }
    if (within) {
      for (const auto& c : comps) print_computation_text(c.method, c.field, c.table);
      if (!corner_note.empty()) std::cout << "predicted corner: " << corner_note << "\n";
    } else {
      std::cout << "lead-term table skipped: 2(n-1) = " << hn << " exceeds --max-vertices "
                << opt.max_vertices << "\n";
    }
  }

  bool agree = true;
  for (const auto& c : comps)
    if (c.table.entries != comps.front().table.entries) agree = false;
  if (!agree) {
    std::cerr << "check failed: fields disagree on the lead-term table\n";
    return 1;
  }
  return corner_rc;
}

int run_fuzz_cmd(const Options& opt) {
  const FuzzReport rep =
      run_fuzz(opt.seed, opt.count, opt.max_rows, opt.max_cols, opt.max_vertices, opt.threads);
  if (opt.json) {
    ordered_json doc = fuzz_json(rep);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "seed " << rep.seed << ": " << rep.instances_run << " of " << rep.count
              << " instances checked\n";
    if (rep.violation) {
      const auto& v = *rep.violation;
      std::cout << "violation: " << v.check << "\n";
      std::cout << "reproducer: lambda = " << render_int_vec(v.lambda)
                << "  mu = " << render_int_vec(v.mu) << "\n";
      std::cout << v.detail << "\n";
    } else {
      std::cout << "all checks passed\n";
    }
  }
  if (rep.violation) {
    std::cerr << "check failed: " << rep.violation->check << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact graded Betti numbers of skew Ferrers edge ideals and lead-term ideals of binomial edge ideals of closed graphs"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub, bool with_field) {
    sub->add_flag("--json", opt.json, "structured output on stdout");
    sub->add_option("--threads", opt.threads, "worker threads for the homology sum")
        ->check(CLI::Range(1, 64));
    sub->add_option("--max-vertices", opt.max_vertices,
                    "largest graph the homology sum will accept (hard cap 20)")
        ->check(CLI::Range(1, 20));
    if (with_field)
      sub->add_option("--field", opt.field, "coefficient field for homology")
          ->check(CLI::IsMember({"gf2", "rational", "both"}));
  };

  CLI::App* fer = app.add_subcommand("ferrers", "skew Ferrers diagram pipeline");
  fer->add_option("action", opt.action, "decompose | betti | pdreg")
      ->required()
      ->check(CLI::IsMember({"decompose", "betti", "pdreg"}));
  fer->add_option("--lambda", opt.lambda_s, "outer shape, e.g. 7,6,6,5,4,3,2")->required();
  fer->add_option("--mu", opt.mu_s, "inner shape (default all zeros)");
  fer->add_option("--method", opt.method, "betti method")
      ->check(CLI::IsMember({"hochster", "nagel-reiner", "corso-nagel", "all"}));
  fer->add_flag("--crosscheck", opt.crosscheck, "run every applicable method and compare");
  add_common(fer, true);

  CLI::App* gr = app.add_subcommand("graph", "simple graph pipeline");
  gr->add_option("action", opt.action, "betti | nu | blocks")
      ->required()
      ->check(CLI::IsMember({"betti", "nu", "blocks"}));
  gr->add_option("--edges", opt.edges_s, "edge list, e.g. 1-2,2-3")->required();
  add_common(gr, true);

  CLI::App* cl = app.add_subcommand("closed", "closed-graph analysis and lead-term table");
  cl->add_option("--edges", opt.edges_s, "edge list, e.g. 1-2,2-3")->required();
  cl->add_option("--labeling", opt.labeling_s, "vertex order to test for closedness");
  add_common(cl, true);

  CLI::App* fz = app.add_subcommand("fuzz", "seeded cross-check harness");
  fz->add_option("--seed", opt.seed, "RNG seed");
  fz->add_option("--count", opt.count, "number of instances");
  fz->add_option("--max-rows", opt.max_rows, "row bound (at most 8)");
  fz->add_option("--max-cols", opt.max_cols, "column bound (at most 8)");
  add_common(fz, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (fer->parsed()) rc = run_ferrers(opt);
    else if (gr->parsed()) rc = run_graph(opt);
    else if (cl->parsed()) rc = run_closed(opt);
    else rc = run_fuzz_cmd(opt);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cerr << "elapsed: " << ms << " ms\n";
  return rc;
}
