#include "matoric/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "matoric/catalog.hpp"

namespace matoric::io {

std::string canonical_text(const json& j) { return j.dump() + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

namespace {

json parse_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in " + what);
  return j;
}

}  // namespace

json matroid_to_json(const Matroid& m) {
  json j;
  j["d"] = m.ground_size();
  j["bases"] = json::array();
  for (const Basis& b : m.bases()) j["bases"].push_back(b);
  return j;
}

Matroid matroid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("bases"))
    throw ParseError("matroid file needs fields \"d\" and \"bases\"");
  if (!j["d"].is_number_integer()) throw ParseError("field \"d\" must be an integer");
  if (!j["bases"].is_array()) throw ParseError("field \"bases\" must be an array");
  std::vector<Basis> bases;
  for (const auto& jb : j["bases"]) {
    if (!jb.is_array()) throw ParseError("each basis must be an array of elements");
    Basis b;
    for (const auto& e : jb) {
      if (!e.is_number_integer()) throw ParseError("basis elements must be integers");
      b.push_back(e.get<int>());
    }
    bases.push_back(std::move(b));
  }
  return Matroid::from_bases(j["d"].get<int>(), std::move(bases));
}

Matroid read_matroid_file(const std::string& path) {
  return matroid_from_json(parse_text(read_file(path), path));
}

namespace {

json monomial_to_json(const Monomial& m) {
  json j = json::object();
  for (const auto& [v, e] : m.entries()) j[v.name()] = e;
  return j;
}

Monomial monomial_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("monomial must be an object of name: exponent");
  Monomial out;
  for (const auto& [key, value] : j.items()) {
    auto v = VariableId::parse(key);
    if (!v) throw ParseError("bad variable name: " + key);
    if (!value.is_number_integer() || value.get<int>() <= 0)
      throw ParseError("exponents must be positive integers");
    out = out * Monomial::var(*v, value.get<int>());
  }
  return out;
}

}  // namespace

json binomial_set_to_json(const BinomialSet& set) {
  json j;
  j["ambient"] = json::array();
  for (VariableId v : set.ambient()) j["ambient"].push_back(v.name());
  j["elements"] = json::array();
  for (const Binomial& b : set.elements()) {
    json jb;
    jb["lead"] = monomial_to_json(b.lead());
    jb["trail"] = monomial_to_json(b.trail());
    j["elements"].push_back(std::move(jb));
  }
  return j;
}

BinomialSet binomial_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("elements"))
    throw ParseError("binomial set needs fields \"ambient\" and \"elements\"");
  std::vector<VariableId> ambient;
  for (const auto& name : j["ambient"]) {
    auto v = VariableId::parse(name.get<std::string>());
    if (!v) throw ParseError("bad ambient variable: " + name.get<std::string>());
    ambient.push_back(*v);
  }
  std::vector<Binomial> elems;
  for (const auto& jb : j["elements"]) {
    if (!jb.contains("lead") || !jb.contains("trail"))
      throw ParseError("binomial needs \"lead\" and \"trail\"");
    elems.push_back(
        Binomial::canonical(monomial_from_json(jb["lead"]), monomial_from_json(jb["trail"])));
  }
  return BinomialSet::make(std::move(ambient), std::move(elems));
}

BinomialSet read_binomial_set_file(const std::string& path) {
  return binomial_set_from_json(parse_text(read_file(path), path));
}

json matrix_to_json(const IntegerMatrix& m) {
  json j;
  j["rows"] = m.row_labels();
  j["columns"] = json::array();
  for (int c = 0; c < m.cols(); ++c) {
    json jc;
    jc["var"] = m.column_vars()[static_cast<std::size_t>(c)].name();
    jc["entries"] = m.column(c);
    j["columns"].push_back(std::move(jc));
  }
  return j;
}

json order_to_json(const MonomialOrder& order) {
  json j;
  j["name"] = order.name();
  j["layers"] = json::array();
  for (const auto& layer : order.layers()) {
    json jl;
    if (const auto* f = std::get_if<MonomialOrder::Functional>(&layer)) {
      std::vector<std::pair<VariableId, std::int64_t>> coeffs(f->coeffs.begin(), f->coeffs.end());
      std::sort(coeffs.begin(), coeffs.end());
      json jc = json::object();
      for (const auto& [v, c] : coeffs) jc[v.name()] = c;
      jl["functional"] = std::move(jc);
    } else if (const auto* gl = std::get_if<MonomialOrder::GroupedLex>(&layer)) {
      json groups = json::array();
      for (const auto& group : gl->groups) {
        json g = json::array();
        for (VariableId v : group) g.push_back(v.name());
        groups.push_back(std::move(g));
      }
      jl["grouped_lex"] = std::move(groups);
    } else {
      const auto& grl = std::get<MonomialOrder::GroupedRevLex>(layer);
      json groups = json::array();
      for (const auto& group : grl.groups) {
        json g = json::array();
        for (VariableId v : group) g.push_back(v.name());
        groups.push_back(std::move(g));
      }
      jl["grouped_revlex"] = std::move(groups);
    }
    j["layers"].push_back(std::move(jl));
  }
  return j;
}

json witnesses_to_json(const std::vector<ExchangeWitness>& witnesses) {
  json j;
  j["witnesses"] = json::array();
  for (const ExchangeWitness& w : witnesses) {
    json jw;
    jw["i"] = w.i;
    jw["j"] = w.j;
    jw["k"] = w.k;
    jw["l"] = w.l;
    jw["x"] = w.x;
    jw["y"] = w.y;
    j["witnesses"].push_back(std::move(jw));
  }
  return j;
}

json map_to_json(const VarBasisMap& map) {
  json j = json::array();
  for (const auto& [v, b] : map.entries) {
    json je;
    je["var"] = v.name();
    je["basis"] = b;
    j.push_back(std::move(je));
  }
  return j;
}

json report_to_json(const ConstructionReport& report) {
  json j;
  j["matroid"] = matroid_to_json(report.matroid);
  j["generators"] = binomial_set_to_json(report.generators);
  j["map"] = map_to_json(report.map);
  json v;
  v["generates"] = report.generates.has_value() ? json(*report.generates) : json(nullptr);
  v["groebner"] = report.groebner.has_value() ? json(*report.groebner) : json(nullptr);
  v["order"] = order_to_json(report.order);
  j["verified"] = std::move(v);
  return j;
}

Matroid read_graph_file(const std::string& path) {
  json j = parse_text(read_file(path), path);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph file needs fields \"vertices\" and \"edges\"");
  std::vector<std::pair<int, int>> edges;
  for (const auto& je : j["edges"]) {
    if (!je.is_array() || je.size() != 2) throw ParseError("each edge must be [u, v]");
    edges.emplace_back(je[0].get<int>(), je[1].get<int>());
  }
  return graphic(j["vertices"].get<int>(), edges);
}

MonomialOrder order_from_spec(const std::string& spec, std::vector<VariableId> ambient) {
  std::sort(ambient.begin(), ambient.end());
  if (spec == "degrevlex") return MonomialOrder::degrevlex(std::move(ambient));
  if (spec == "lex") return MonomialOrder::lex(std::move(ambient));
  if (spec.rfind("weight:", 0) == 0) {
    json j = parse_text(read_file(spec.substr(7)), spec);
    if (!j.contains("weights")) throw ParseError("weight file needs field \"weights\"");
    std::vector<std::pair<VariableId, std::int64_t>> weights;
    for (const auto& [key, value] : j["weights"].items()) {
      auto v = VariableId::parse(key);
      if (!v) throw ParseError("bad variable in weight file: " + key);
      weights.emplace_back(*v, value.get<std::int64_t>());
    }
    MonomialOrder::Tie tie = MonomialOrder::Tie::Degrevlex;
    if (j.contains("tie_break")) {
      const std::string t = j["tie_break"].get<std::string>();
      if (t == "lex")
        tie = MonomialOrder::Tie::Lex;
      else if (t != "degrevlex")
        throw ParseError("tie_break must be lex or degrevlex");
    }
    return MonomialOrder::weighted(weights, tie, std::move(ambient));
  }
  throw ParseError("unknown order spec: " + spec + " (use degrevlex, lex, or weight:<file>)");
}

}  // namespace matoric::io
