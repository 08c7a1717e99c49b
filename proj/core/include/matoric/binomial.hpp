#pragma once

#include <optional>
#include <vector>

#include "matoric/order.hpp"

namespace matoric {

/// Monic binomial lead - trail over a characteristic-0 field. Lead equals
/// trail only in the zero sentinel, which is never stored in sets. All
/// engine operations preserve this shape (S-pairs and reductions of monic
/// binomials are monic binomials or zero).
class Binomial {
 public:
  Binomial() = default;  // zero sentinel
  static Binomial zero() { return {}; }

  /// Orients lead/trail by `order`; equal sides collapse to zero.
  static Binomial oriented(Monomial a, Monomial b, const MonomialOrder& order);
  /// Orientation by the canonical order-free monomial comparison.
  static Binomial canonical(Monomial a, Monomial b);

  bool is_zero() const { return lead_ == trail_; }
  const Monomial& lead() const { return lead_; }
  const Monomial& trail() const { return trail_; }
  bool is_homogeneous() const { return lead_.degree() == trail_.degree(); }
  int degree() const { return lead_.degree(); }

  /// Both sides multiplied by m.
  Binomial times(const Monomial& m) const;
  /// Variables renamed; map must cover all variables used.
  Binomial renamed(const std::vector<std::pair<VariableId, VariableId>>& map) const;

  bool operator==(const Binomial& other) const = default;
  std::strong_ordering operator<=>(const Binomial& other) const = default;

 private:
  Binomial(Monomial lead, Monomial trail) : lead_(std::move(lead)), trail_(std::move(trail)) {}
  Monomial lead_, trail_;
};

/// Finite list of monic binomials with a declared ambient variable set.
/// Elements are stored deduplicated in a deterministic order; zero
/// binomials and duplicates are dropped at ingestion (counted, not fatal).
class BinomialSet {
 public:
  BinomialSet() = default;
  explicit BinomialSet(std::vector<VariableId> ambient);
  /// Orients elements by `order` when given, else canonically; sorts and
  /// deduplicates. Throws UnknownVariableError if an element leaves the
  /// ambient set.
  static BinomialSet make(std::vector<VariableId> ambient, std::vector<Binomial> elements,
                          const MonomialOrder* order = nullptr);
  /// Like make() but keeps each element's stored lead/trail orientation.
  static BinomialSet keep_orientation(std::vector<VariableId> ambient,
                                      std::vector<Binomial> elements);

  const std::vector<VariableId>& ambient() const { return ambient_; }
  const std::vector<Binomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  int dropped_at_ingestion() const { return dropped_; }

  bool same_ambient(const BinomialSet& other) const { return ambient_ == other.ambient_; }
  bool operator==(const BinomialSet& other) const {
    return ambient_ == other.ambient_ && elements_ == other.elements_;
  }

  /// Re-orients all elements by `order` (sorted canonically after).
  BinomialSet oriented(const MonomialOrder& order) const;

 private:
  enum class Orientation { Canonical, ByOrder, Stored };
  static BinomialSet build(std::vector<VariableId> ambient, std::vector<Binomial> elements,
                           const MonomialOrder* order, Orientation mode);

  std::vector<VariableId> ambient_;
  std::vector<Binomial> elements_;
  int dropped_ = 0;
};

}  // namespace matoric
