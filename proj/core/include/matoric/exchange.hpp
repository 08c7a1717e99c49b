#pragma once

#include <optional>
#include <span>

#include "matoric/gb.hpp"
#include "matoric/matroid.hpp"

namespace matoric {

/// Witness of a symmetric exchange: B_k = (B_i u {y}) \ {x} and
/// B_l = (B_j u {x}) \ {y}, with x in B_i \ B_j and y in B_j \ B_i.
struct ExchangeWitness {
  int i, j, k, l;  // 1-based basis indices in canonical numbering
  Element x, y;
};

struct ExchangeSet {
  BinomialSet binomials;  // deduplicated x_i x_j - x_k x_l, trivial ones dropped
  std::vector<ExchangeWitness> witnesses;
};

/// All symmetric-exchange binomials of m, with the witness list.
ExchangeSet symmetric_exchange_set(const Matroid& m);

/// Exact comparison of the exchange ideal with the elimination oracle's
/// J_M under the default order (instance check of White's generation
/// conjecture).
bool check_white_generation(const Matroid& m);

/// First order in `orders` under which the exchange set both generates J_M
/// and passes the Groebner criterion, or nullopt. A nullopt result is
/// inconclusive evidence only; the searched list is finite.
std::optional<MonomialOrder> check_white_gb(const Matroid& m,
                                            std::span<const MonomialOrder> orders);

/// degrevlex and lex over the canonical basis ranking and its reverse.
std::vector<MonomialOrder> default_white_orders(const Matroid& m);

/// All elements have lead degree 2.
bool is_quadratic(const BinomialSet& set);

}  // namespace matoric
