#pragma once

#include <optional>

#include "matoric/lift.hpp"
#include "matoric/oracle.hpp"

namespace matoric {

/// End-to-end outcome of a construction: the result matroid, the claimed
/// generating set over the construction variables with its variable->basis
/// map and constructed order, the same data renamed to the canonical
/// numbering of the result, and the oracle verdicts when verification ran.
/// A false `groebner` with true `generates` is a reportable outcome (the
/// constructed order is a choice); a false `generates` is a failure.
struct ConstructionReport {
  Matroid matroid;
  VarBasisMap map;
  BinomialSet generators;
  MonomialOrder order;
  BinomialSet canonical_generators;
  MonomialOrder canonical_order;
  std::optional<bool> generates;
  std::optional<bool> groebner;
  /// On a generation failure: one witness binomial from the symmetric
  /// difference of the two ideals.
  std::optional<Binomial> mismatch;

  bool verified_ok() const { return generates.value_or(false); }
};

/// Columns in anchored numbering (a permutation of bases_matrix).
IntegerMatrix anchored_bases_matrix(const AnchoredMatroid& am);

/// degrevlex over x1_1 > ... > x1_n.
MonomialOrder canonical_base_order(int n);

/// Renames a construction's generators and order onto the canonical
/// numbering of `result` along `map` (which must hit every basis once).
std::pair<BinomialSet, MonomialOrder> canonicalize_generators(const Matroid& result,
                                                              const VarBasisMap& map,
                                                              const BinomialSet& generators,
                                                              const MonomialOrder& order);

ConstructionReport series_extension_pipeline(const Matroid& m, Element c, bool verify,
                                             const MonomialOrder* anchored_base = nullptr);
ConstructionReport parallel_extension_pipeline(const Matroid& m, Element c, bool verify);
ConstructionReport series_connection_pipeline(const Matroid& m1, Element c1, const Matroid& m2,
                                              Element c2, bool verify);
ConstructionReport parallel_connection_pipeline(const Matroid& m1, Element c1, const Matroid& m2,
                                                Element c2, bool verify);
ConstructionReport two_sum_pipeline(const Matroid& m1, Element c1, const Matroid& m2, Element c2,
                                    bool verify);
ConstructionReport direct_sum_pipeline(const Matroid& m1, const Matroid& m2, bool verify);

struct SpStep {
  enum class Kind { Series, Parallel };
  Kind kind;
  Element anchor;
};

/// Folds series/parallel extensions over `steps`, threading the generating
/// set and order (oracle GB of the input to start).
ConstructionReport sp_extension_sequence(const Matroid& m, std::span<const SpStep> steps,
                                         bool verify);

}  // namespace matoric
