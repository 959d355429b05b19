#pragma once

#include <string>

#include <json.hpp>

#include "skewbetti/betti.hpp"
#include "skewbetti/diagram.hpp"
#include "skewbetti/fuzz.hpp"

namespace skewbetti {

using ordered_json = nlohmann::ordered_json;

// Betti table in the conventional text layout: columns are homological
// degrees, rows are j - i, with a leading total row; zero entries print ".".
std::string render_betti_table_text(const BettiTable& t);

// One computation document: {method, field, betti, pd, reg, concentrated,
// extremal}; betti triples are (i asc, j asc).  Field-independent methods
// pass field = "any".
ordered_json computation_json(const std::string& method, const std::string& field,
                              const BettiTable& t);

ordered_json decomposition_json(const RectangularDecomposition& dec);

ordered_json prediction_json(const ExtremalPrediction& pred);

ordered_json fuzz_json(const FuzzReport& rep);

std::string field_name(HomField f);

}  // namespace skewbetti
