#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "matoric/variable.hpp"

namespace matoric {

/// Sparse monomial: sorted (variable, exponent) pairs, exponents > 0.
/// The empty monomial is the unit.
class Monomial {
 public:
  using Entry = std::pair<VariableId, int>;

  Monomial() = default;
  static Monomial unit() { return {}; }
  static Monomial var(VariableId v, int exp = 1);
  /// Builds from possibly unsorted, possibly repeated factors.
  static Monomial from_factors(const std::vector<VariableId>& factors);

  bool is_unit() const { return entries_.empty(); }
  int degree() const;
  int exponent(VariableId v) const;
  const std::vector<Entry>& entries() const { return entries_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Pre: other.divides(*this).
  Monomial divided_by(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;
  /// Canonical (order-free) total order used for storage and dedup:
  /// degree first, then entry vector lexicographically.
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace matoric
