#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skewbetti/betti.hpp"
#include "skewbetti/diagram.hpp"

namespace skewbetti {

// Deterministic random skew Ferrers shape with at least one cell.  Draws use
// raw engine output with modulo so the stream is identical across platforms.
CellDiagram random_skew_diagram(std::mt19937_64& rng, int max_rows, int max_cols);

// Same, with mu = 0 (honest Ferrers shape).
CellDiagram random_ferrers_diagram(std::mt19937_64& rng, int max_rows, int max_cols);

// (lambda, mu) of the diagram after dropping empty rows/columns; every
// restriction of a staircase is representable this way.
std::pair<std::vector<int>, std::vector<int>> compact_to_lambda_mu(const CellDiagram& d);

/* One instance run through every cross-check: spherical counting vs the
 * homology sum over both fields, last-column concentration, pd+2 >= reg with
 * the equality case counting maximum induced matchings, and rect = nu. */
struct InstanceChecks {
  BettiTable nr;
  BettiTable hochster_gf2;
  BettiTable hochster_rational;
  int pd, reg, rect_val, nu;
  long long corner;
  bool oracle_equal, concentrated, pd_reg_inequality, equality_case_count, rect_equals_nu;

  bool all_ok() const;
  std::string first_failure() const;  // empty when all_ok
};

InstanceChecks check_instance(const CellDiagram& d, int max_vertices = 16, int threads = 1);

struct FuzzViolation {
  std::string check;
  std::vector<int> lambda, mu;            // minimized reproducer
  std::vector<int> orig_lambda, orig_mu;  // instance that first failed
  std::string detail;
};

struct FuzzReport {
  uint64_t seed;
  int count, max_rows, max_cols;
  int instances_run;
  std::optional<FuzzViolation> violation;
};

// Runs `count` seeded instances, stopping at the first violation with a
// greedily minimized reproducer.  max_rows/max_cols are capped at 8.
FuzzReport run_fuzz(uint64_t seed, int count, int max_rows, int max_cols,
                    int max_vertices = 16, int threads = 1);

}  // namespace skewbetti
