#include "matoric/exchange.hpp"

#include <algorithm>
#include <bit>

#include "matoric/oracle.hpp"

namespace matoric {

ExchangeSet symmetric_exchange_set(const Matroid& m) {
  const int n = m.basis_count();
  std::vector<VariableId> ambient;
  for (int j = 1; j <= n; ++j) ambient.push_back(VariableId::basis(1, j));

  std::vector<Binomial> binomials;
  std::vector<ExchangeWitness> witnesses;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const ElementMask bi = m.masks()[static_cast<std::size_t>(i - 1)];
      const ElementMask bj = m.masks()[static_cast<std::size_t>(j - 1)];
      ElementMask xs = bi & ~bj;
      while (xs != 0) {
        const ElementMask xbit = xs & (~xs + 1);
        xs &= xs - 1;
        ElementMask ys = bj & ~bi;
        while (ys != 0) {
          const ElementMask ybit = ys & (~ys + 1);
          ys &= ys - 1;
          const ElementMask bk = (bi & ~xbit) | ybit;
          const ElementMask bl = (bj & ~ybit) | xbit;
          const int k = m.basis_index(bk);
          const int l = m.basis_index(bl);
          if (k == 0 || l == 0) continue;
          witnesses.push_back(ExchangeWitness{i, j, k, l, std::countr_zero(xbit) + 1,
                                              std::countr_zero(ybit) + 1});
          Monomial lead = Monomial::var(VariableId::basis(1, i)) * Monomial::var(VariableId::basis(1, j));
          Monomial trail = Monomial::var(VariableId::basis(1, k)) * Monomial::var(VariableId::basis(1, l));
          binomials.push_back(Binomial::canonical(std::move(lead), std::move(trail)));
        }
      }
    }
  }
  return ExchangeSet{BinomialSet::make(std::move(ambient), std::move(binomials)),
                     std::move(witnesses)};
}

bool check_white_generation(const Matroid& m) {
  ExchangeSet ex = symmetric_exchange_set(m);
  IntegerMatrix d = bases_matrix(m);
  MonomialOrder order = default_order(d.column_vars());
  return ideals_equal(ex.binomials, toric_gb(d, order), order);
}

std::vector<MonomialOrder> default_white_orders(const Matroid& m) {
  std::vector<VariableId> canonical;
  for (int j = 1; j <= m.basis_count(); ++j) canonical.push_back(VariableId::basis(1, j));
  std::vector<VariableId> reversed(canonical.rbegin(), canonical.rend());
  return {MonomialOrder::degrevlex(canonical), MonomialOrder::degrevlex(reversed),
          MonomialOrder::lex(canonical), MonomialOrder::lex(reversed)};
}

std::optional<MonomialOrder> check_white_gb(const Matroid& m,
                                            std::span<const MonomialOrder> orders) {
  if (orders.empty()) return std::nullopt;
  ExchangeSet ex = symmetric_exchange_set(m);
  IntegerMatrix d = bases_matrix(m);
  // Generation is order-independent; settle it once, then scan the list
  // for an order passing the Groebner criterion.
  if (!ideals_equal(ex.binomials, toric_gb(d, orders.front()), orders.front()))
    return std::nullopt;
  for (const MonomialOrder& order : orders)
    if (is_groebner(ex.binomials, order)) return order;
  return std::nullopt;
}

bool is_quadratic(const BinomialSet& set) {
  return std::all_of(set.elements().begin(), set.elements().end(),
                     [](const Binomial& b) { return b.lead().degree() == 2; });
}

}  // namespace matoric
