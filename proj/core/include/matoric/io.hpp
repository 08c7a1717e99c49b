#pragma once

#include <string>

#include "json.hpp"
#include "matoric/exchange.hpp"
#include "matoric/pipeline.hpp"

namespace matoric::io {

using json = nlohmann::ordered_json;

/// Canonical serialization: insertion-ordered keys, compact dump, one
/// trailing newline. Identical values always produce identical bytes.
std::string canonical_text(const json& j);

/// Matroid file: {"d": <int>, "bases": [[...], ...]}, elements 1-indexed,
/// bases sorted; readers accept any order and canonicalize.
json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const json& j);
Matroid read_matroid_file(const std::string& path);

json binomial_set_to_json(const BinomialSet& set);
BinomialSet binomial_set_from_json(const json& j);
BinomialSet read_binomial_set_file(const std::string& path);

json matrix_to_json(const IntegerMatrix& m);
json order_to_json(const MonomialOrder& order);
json witnesses_to_json(const std::vector<ExchangeWitness>& witnesses);
json map_to_json(const VarBasisMap& map);
json report_to_json(const ConstructionReport& report);

/// Graph file for `catalog graph:<path>`:
/// {"vertices": <int>, "edges": [[u, v], ...]}.
Matroid read_graph_file(const std::string& path);

/// --order specs: "degrevlex", "lex", or "weight:<path>" where the file
/// holds {"weights": {"x1_1": 3, ...}, "tie_break": "lex"|"degrevlex"}.
MonomialOrder order_from_spec(const std::string& spec, std::vector<VariableId> ambient);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace matoric::io
