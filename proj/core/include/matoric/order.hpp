#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "matoric/monomial.hpp"

namespace matoric {

/// Total multiplicative monomial order, represented as a list of layers
/// compared in sequence until one decides:
///
///   Functional    compare integer dot products coeff . exponents
///                 (non-negative weight vectors are the common case;
///                 negative coefficients appear only in lifted tie-breaks
///                 behind layers that already separate units)
///   GroupedLex    groups of variables from highest to lowest; compare the
///                 per-group exponent sums lexicographically
///   GroupedRevLex scan groups from lowest to highest; at the first group
///                 whose sums differ, the monomial with the LARGER sum is
///                 the smaller one
///
/// Plain lex is GroupedLex with singleton groups, degrevlex is a total
/// degree Functional followed by GroupedRevLex with singleton groups, a
/// weight order is a Functional in front of its tie-break, an elimination
/// order puts the eliminated block's layers first. Lifted orders for the
/// extension/connection constructions pull base layers back through the
/// collapse map that forgets the new block tags; this keeps every lifted
/// binomial oriented compatibly with its preimage.
///
/// Every constructed order ends with a layer sequence that separates all
/// distinct monomials over its domain, so compare() is total.
class MonomialOrder {
 public:
  struct Functional {
    std::unordered_map<VariableId, std::int64_t> coeffs;  // absent = 0
  };
  struct GroupedLex {
    std::vector<std::vector<VariableId>> groups;
  };
  struct GroupedRevLex {
    std::vector<std::vector<VariableId>> groups;
  };
  using Layer = std::variant<Functional, GroupedLex, GroupedRevLex>;

  enum class Tie { Lex, Degrevlex };

  /// ranking lists variables from highest to lowest.
  static MonomialOrder lex(std::vector<VariableId> ranking);
  static MonomialOrder degrevlex(std::vector<VariableId> ranking);
  static MonomialOrder weighted(const std::vector<std::pair<VariableId, std::int64_t>>& weight,
                                Tie tie, std::vector<VariableId> ranking);
  /// elim_vars ranked strictly above the column order's domain, compared
  /// among themselves by degrevlex.
  static MonomialOrder elimination(std::vector<VariableId> elim_vars,
                                   const MonomialOrder& column_order);
  static MonomialOrder from_layers(std::string name, std::vector<Layer> layers,
                                   std::vector<VariableId> domain);

  /// Layers of `base` with every variable reference replaced along
  /// new_to_base (pullback through a collapse map). Variables of the new
  /// domain missing from the map are dropped from the layers.
  static std::vector<Layer> pulled_back_layers(
      const MonomialOrder& base,
      const std::vector<std::pair<VariableId, VariableId>>& new_to_base);

  /// Same order over renamed variables; `renames` must cover the domain
  /// injectively.
  MonomialOrder renamed(const std::vector<std::pair<VariableId, VariableId>>& renames,
                        std::string new_name) const;

  /// Same layers over a narrowed domain (vars must lie in the domain).
  MonomialOrder restricted_to(std::vector<VariableId> vars) const;

  const std::string& name() const { return name_; }
  const std::vector<Layer>& layers() const { return layers_; }
  const std::vector<VariableId>& domain() const { return domain_; }
  bool contains(VariableId v) const { return domain_set_.count(v) != 0; }

  /// Throws UnknownVariableError if a monomial uses a variable outside the
  /// domain.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  std::string name_;
  std::vector<Layer> layers_;
  std::vector<VariableId> domain_;  // sorted
  std::unordered_set<VariableId> domain_set_;
};

/// degrevlex over the canonical ranking (ascending variable order ranks
/// highest first); the engine-wide default for ideal comparisons.
MonomialOrder default_order(std::vector<VariableId> ambient);

}  // namespace matoric
