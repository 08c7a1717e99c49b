#include "matoric/io.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace matoric;

TEST_CASE("matroid json round trip on the catalog") {
  for (const Matroid& m : {tu::u(2, 4), tu::u(3, 5), tu::mk4(), named(NamedMatroid::Q6)}) {
    io::json j = io::matroid_to_json(m);
    CHECK(io::matroid_from_json(j) == m);
  }
}

TEST_CASE("readers canonicalize unsorted input") {
  io::json j;
  j["d"] = 4;
  j["bases"] = io::json::array({io::json::array({4, 3}), io::json::array({2, 1}),
                                io::json::array({1, 3}), io::json::array({2, 4}),
                                io::json::array({1, 4}), io::json::array({3, 2})});
  CHECK(io::matroid_from_json(j) == tu::u(2, 4));
}

TEST_CASE("mixed-size bases are rejected") {
  io::json j;
  j["d"] = 3;
  j["bases"] = io::json::array({io::json::array({1, 2}), io::json::array({3})});
  CHECK_THROWS_AS(io::matroid_from_json(j), UnequalCardinalityError);
}

TEST_CASE("canonical_text is stable") {
  io::json j = io::matroid_to_json(tu::u(2, 4));
  CHECK(io::canonical_text(j) == io::canonical_text(io::matroid_to_json(tu::u(2, 4))));
  CHECK(io::canonical_text(j).back() == '\n');
  // d comes first in the emitted object.
  CHECK(io::canonical_text(j).rfind("{\"d\":4,\"bases\":", 0) == 0);
}

TEST_CASE("binomial set round trip") {
  Monomial a = Monomial::var(VariableId::basis(1, 1)) * Monomial::var(VariableId::basis(1, 6));
  Monomial b = Monomial::var(VariableId::basis(1, 2)) * Monomial::var(VariableId::basis(1, 5));
  std::vector<VariableId> ambient;
  for (int j = 1; j <= 6; ++j) ambient.push_back(VariableId::basis(1, j));
  BinomialSet set = BinomialSet::make(ambient, {Binomial::canonical(a, b)});
  io::json j = io::binomial_set_to_json(set);
  CHECK(io::binomial_set_from_json(j) == set);
}

TEST_CASE("variable names parse back") {
  for (VariableId v : {VariableId::basis(1, 3), VariableId::basis(2, 12),
                       VariableId::pair(2, 7, 11), VariableId::elim(5)}) {
    auto parsed = VariableId::parse(v.name());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == v);
  }
  CHECK(!VariableId::parse("q1_2").has_value());
  CHECK(!VariableId::parse("x1_").has_value());
  CHECK(!VariableId::parse("x1_2_3_4").has_value());
}

TEST_CASE("matrix dump format") {
  io::json j = io::matrix_to_json(matoric::bases_matrix(tu::u(2, 3)));
  CHECK(j["rows"] == io::json::array({"1", "2", "3"}));
  CHECK(j["columns"].size() == 3);
  CHECK(j["columns"][0]["var"] == "x1_1");
  CHECK(j["columns"][0]["entries"] == io::json::array({1, 1, 0}));
}

TEST_CASE("order specs") {
  std::vector<VariableId> ambient;
  for (int j = 1; j <= 3; ++j) ambient.push_back(VariableId::basis(1, j));
  CHECK(io::order_from_spec("degrevlex", ambient).name() == "degrevlex");
  CHECK(io::order_from_spec("lex", ambient).name() == "lex");
  CHECK_THROWS_AS(io::order_from_spec("sorted", ambient), ParseError);
}

TEST_CASE("weight order files") {
  std::string path = "/tmp/matoric-test-weights.json";
  io::write_file(path, "{\"weights\":{\"x1_2\":5},\"tie_break\":\"lex\"}\n");
  std::vector<VariableId> ambient;
  for (int j = 1; j <= 3; ++j) ambient.push_back(VariableId::basis(1, j));
  MonomialOrder o = io::order_from_spec("weight:" + path, ambient);
  // x1_2 outweighs the lex-higher x1_1.
  CHECK(o.compare(Monomial::var(VariableId::basis(1, 2)), Monomial::var(VariableId::basis(1, 1))) > 0);

  io::write_file(path, "{\"weights\":{\"x1_1\":-1}}\n");
  CHECK_THROWS_AS(io::order_from_spec("weight:" + path, ambient), BadParamsError);
}

TEST_CASE("witness export format") {
  ExchangeWitness w{1, 2, 3, 4, 5, 6};
  io::json j = io::witnesses_to_json({w});
  CHECK(j["witnesses"].size() == 1);
  CHECK(j["witnesses"][0]["i"] == 1);
  CHECK(j["witnesses"][0]["y"] == 6);
}

TEST_CASE("order serialization lists layers") {
  MonomialOrder o = MonomialOrder::weighted({{VariableId::basis(1, 1), 3}},
                                            MonomialOrder::Tie::Degrevlex,
                                            {VariableId::basis(1, 1), VariableId::basis(1, 2)});
  io::json j = io::order_to_json(o);
  CHECK(j["name"] == "weight+degrevlex");
  REQUIRE(j["layers"].size() == 3);
  CHECK(j["layers"][0].contains("functional"));
  CHECK(j["layers"][1].contains("functional"));  // total degree of the tie
  CHECK(j["layers"][2].contains("grouped_revlex"));
}
