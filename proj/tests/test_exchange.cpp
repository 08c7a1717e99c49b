#include "matoric/exchange.hpp"

#include "doctest.h"
#include "matoric/oracle.hpp"
#include "test_util.hpp"

using namespace matoric;

TEST_CASE("uniform rank-1 matroids have no exchange binomials") {
  for (int n = 2; n <= 5; ++n) CHECK(symmetric_exchange_set(tu::u(1, n)).binomials.empty());
}

TEST_CASE("U_{2,4} has exactly the three matching quadrics") {
  ExchangeSet ex = symmetric_exchange_set(tu::u(2, 4));
  CHECK(ex.binomials.size() == 3);
  for (const Binomial& b : ex.binomials.elements()) {
    CHECK(b.degree() == 2);
    CHECK(in_kernel(bases_matrix(tu::u(2, 4)), b));
  }
}

TEST_CASE("every exchange binomial lies in the kernel") {
  for (const Matroid& m : {tu::u(2, 4), tu::u(2, 5), tu::u(3, 5), tu::mk4(),
                           named(NamedMatroid::W3)}) {
    IntegerMatrix d = bases_matrix(m);
    ExchangeSet ex = symmetric_exchange_set(m);
    for (const Binomial& b : ex.binomials.elements()) CHECK(in_kernel(d, b));
  }
}

TEST_CASE("witness list is swap-symmetric") {
  ExchangeSet ex = symmetric_exchange_set(tu::u(2, 4));
  auto has = [&ex](int i, int j, int k, int l, Element xx, Element yy) {
    for (const ExchangeWitness& w : ex.witnesses)
      if (w.i == i && w.j == j && w.k == k && w.l == l && w.x == xx && w.y == yy) return true;
    return false;
  };
  for (const ExchangeWitness& w : ex.witnesses) {
    CHECK(has(w.j, w.i, w.l, w.k, w.y, w.x));
    // Witness validity: B_k = (B_i u {y}) \ {x}, B_l = (B_j u {x}) \ {y}.
    const Matroid m = tu::u(2, 4);
    ElementMask bi = m.masks()[static_cast<std::size_t>(w.i - 1)];
    ElementMask bj = m.masks()[static_cast<std::size_t>(w.j - 1)];
    ElementMask bk = m.masks()[static_cast<std::size_t>(w.k - 1)];
    ElementMask bl = m.masks()[static_cast<std::size_t>(w.l - 1)];
    CHECK(((bi & ~(ElementMask{1} << (w.x - 1))) | (ElementMask{1} << (w.y - 1))) == bk);
    CHECK(((bj & ~(ElementMask{1} << (w.y - 1))) | (ElementMask{1} << (w.x - 1))) == bl);
  }
}

TEST_CASE("check_white_generation on cited instances") {
  CHECK(check_white_generation(tu::u(2, 4)));
  CHECK(check_white_generation(tu::u(2, 3)));  // zero ideal
  CHECK(check_white_generation(tu::mk4()));
}

TEST_CASE("check_white_gb finds an order for U_{2,4}") {
  Matroid m = tu::u(2, 4);
  auto orders = default_white_orders(m);
  auto found = check_white_gb(m, orders);
  REQUIRE(found.has_value());
  CHECK(found->name() == orders.front().name());
}

TEST_CASE("check_white_gb trivial cases") {
  Matroid zero_ideal = tu::u(2, 3);
  auto orders = default_white_orders(zero_ideal);
  CHECK(check_white_gb(zero_ideal, orders).has_value());
  CHECK(!check_white_gb(zero_ideal, std::span<const MonomialOrder>{}).has_value());
}

TEST_CASE("is_quadratic") {
  CHECK(is_quadratic(symmetric_exchange_set(tu::u(2, 4)).binomials));
  CHECK(is_quadratic(BinomialSet{}));
  Binomial cubic = Binomial::canonical(
      Monomial::var(VariableId::basis(1, 1), 3),
      Monomial::var(VariableId::basis(1, 2)) * Monomial::var(VariableId::basis(1, 3), 2));
  BinomialSet set = BinomialSet::make({VariableId::basis(1, 1), VariableId::basis(1, 2),
                                       VariableId::basis(1, 3)},
                                      {cubic});
  CHECK(!is_quadratic(set));
}
