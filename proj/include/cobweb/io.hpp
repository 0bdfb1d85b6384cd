#pragma once

#include <string>

#include "json.hpp"

#include "cobweb/boolmat.hpp"
#include "cobweb/diffposet.hpp"
#include "cobweb/fseq.hpp"
#include "cobweb/graded_digraph.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/rational_matrix.hpp"

namespace cobweb::io {

using nlohmann::json;

/// One row per line, entries separated by single spaces.
std::string to_text(const BoolMatrix& m);
BoolMatrix bool_matrix_from_text(const std::string& text);

/// {"rows":r,"cols":c,"data":[[...]]}
json to_json(const BoolMatrix& m);
BoolMatrix bool_matrix_from_json(const json& j);

/// Reads either format, picking JSON when the first non-blank byte is '{'.
BoolMatrix parse_bool_matrix(const std::string& text);

json to_json(const FSequence& f);
FSequence fsequence_from_json(const json& j);

/// {"sizes":[...], "blocks":[[[0/1,...],...],...]}
json to_json(const GradedDigraph& g);
GradedDigraph graded_digraph_from_json(const json& j);

/// Entries as "p/q" strings.
json to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const json& j);

// Reports: {check, holds, first_counterexample, per_level:[...]}
json to_json(const GhwReport& r);
json to_json(const PowerIdentityReport& r);
json to_json(const FominReport& r);
json to_json(const FDifferentialReport& r);
json to_json(const FerrersResult& r);

json parse_json(const std::string& text);

}  // namespace cobweb::io
