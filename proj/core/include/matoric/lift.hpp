#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "matoric/gb.hpp"
#include "matoric/matroid.hpp"

namespace matoric {

/// Split of a block-1 binomial into anchored-low ([gamma]) and high
/// (above gamma) index slots, expanded with multiplicity. Low slots are
/// paired l-th smallest lead index with l-th smallest trail index; the
/// family of lifts is emitted over every block tagging of the pairs, and
/// Groebner-ness of the result is verified rather than assumed, so the
/// canonical pairing is a deterministic choice, not a correctness one.
struct SplitBinomial {
  Binomial binomial;
  std::vector<int> low_lead, low_trail;    // paired ascending, size u
  std::vector<int> high_lead, high_trail;  // ascending, size v
  int u() const { return static_cast<int>(low_lead.size()); }
  int v() const { return static_cast<int>(high_lead.size()); }
};

/// Throws UnbalancedSplitError when the low (or high) multiplicities
/// disagree between the sides, BlockMismatchError on non-block-1 input.
SplitBinomial classify_split(const Binomial& f, int gamma);

/// The lifted set F~ for a series extension: every f^I over
/// I in {1,2}^u plus the swap quadrics x1_{j2} x2_{j1} - x1_{j1} x2_{j2}
/// for j1 < j2 <= gamma. Input over x1_1..x1_n in anchored numbering.
BinomialSet lift_series_extension(const BinomialSet& F, int gamma, int n);

/// Generalized form: `full_block` is the block carrying all n bases (1
/// for a first factor, 2 for a second factor, matching the two tilde
/// matrices of a connection); the other block carries the gamma
/// anchor-free duplicates. Input is always over x1_1..x1_n.
BinomialSet lift_series_tilde(const BinomialSet& F, int gamma, int n, int full_block);

/// Order under which the lifted set is a Groebner basis whenever the input
/// was: base layers are pulled back through the collapse that forgets
/// block tags (so every f^I is oriented exactly like f, duplicating any
/// weight onto the new block), then a duplicate-block index functional
/// orients the swap quadrics, then a full lex tie. The swap orientation is
/// asserted at construction.
MonomialOrder series_ext_order(const MonomialOrder& base, int gamma, int n, int full_block = 1);

/// Convenience form: weight omega on the x1 variables (duplicated onto the
/// x2 slots by the collapse), over the base order weight+lex(x1_1 > ... >
/// x1_n).
MonomialOrder series_ext_order_weights(
    const std::vector<std::pair<VariableId, std::int64_t>>& omega, int gamma, int n);

/// Variable <-> basis bijection attached to a construction.
struct VarBasisMap {
  std::vector<std::pair<VariableId, Basis>> entries;  // sorted by variable
  const Basis* basis_for(VariableId v) const;
};

struct SeriesExtensionResult {
  Matroid matroid;  // M +_c (d+1)
  VarBasisMap map;  // x1_j -> B_j u {d+1}; x2_j -> B_j u {c}
  bool coloop;      // anchor was a coloop: J unchanged, map has x1 block only
};
SeriesExtensionResult series_extension(const AnchoredMatroid& am);

struct ParallelExtensionResult {
  Matroid matroid;  // (M* +_c (d+1))*
  VarBasisMap map;
  bool coloop;      // anchor was a loop of M: J unchanged
};
ParallelExtensionResult parallel_extension(const AnchoredMatroid& am);

/// Renames a set over x1_1..x1_n (canonical numbering of m) along the
/// basis-complement bijection onto the canonical numbering of dual(m).
BinomialSet dual_transfer(const BinomialSet& set, const Matroid& m);

/// Index bookkeeping of a series connection: alpha = (n1, gamma1),
/// beta = (gamma2, n2), kept variables K[Zhat].
struct ConnectionIndex {
  int n1, gamma1, n2, gamma2;
  std::vector<VariableId> full_vars() const;  // ambient of Ntilde
  std::vector<VariableId> kept_vars() const;  // ambient of N
};

enum class LiftMode { N, Ntilde };

/// Lift(F1~) u Lift(F2~) u Quad. Mode Ntilde builds the full set over
/// K[Z]; mode N constrains block-2 lift indices and quad columns to the
/// kept range (equivalently, Ntilde intersected with K[Zhat]).
BinomialSet lift_connection(const BinomialSet& F1t, const BinomialSet& F2t,
                            const ConnectionIndex& idx, LiftMode mode);

/// Toric-fiber-product order: left tilde order pulled back through
/// z^i_{jk} -> x^i_j, right tilde order through z^i_{jk} -> y^i_k, then a
/// functional orienting every Quad element first-written-term-initial
/// (asserted), then lex.
MonomialOrder connection_order(const MonomialOrder& left, const MonomialOrder& right,
                               const ConnectionIndex& idx, LiftMode mode);

enum class ConnectionRoute { Generic, Loop1, Coloop1, Loop2, Coloop2 };

struct ConnectionResult {
  Matroid matroid;
  VarBasisMap map;  // z-variable -> basis (generic) or z1_j_k pair map (degenerate)
  ConnectionRoute route;
  /// The two direct-sum factors when the basepoint was degenerate.
  std::optional<std::pair<Matroid, Matroid>> factors;
};

/// Series connection at the shared basepoint c = both anchors; the second
/// ground set is relabeled to d1+1.. with c identified. Loop/coloop
/// basepoints route to the direct-sum formulas.
ConnectionResult series_connection(const AnchoredMatroid& am1, const AnchoredMatroid& am2);

/// P(M1,M2) = [S(M1*,M2*)]*; in the generic case the direct basis
/// description is built too and asserted equal.
ConnectionResult parallel_connection(const AnchoredMatroid& am1, const AnchoredMatroid& am2);

struct TwoSumResult {
  Matroid matroid;          // S(M1,M2) / c
  BinomialSet generators;   // N restricted to the bases through c
  VarBasisMap map;          // surviving z-variable -> basis of the 2-sum
};

/// F1, F2 are homogeneous generating sets over the factors' anchored
/// numbering. Throws DegenerateAnchorError if the basepoint is a loop or
/// coloop on either side.
TwoSumResult two_sum_generators(const AnchoredMatroid& am1, const AnchoredMatroid& am2,
                                const BinomialSet& F1, const BinomialSet& F2);

/// Generators of the direct sum's ideal over z1_j_k (the single-block
/// toric fiber product): lifts of both factors plus the Segre quadrics.
BinomialSet direct_sum_generators(const BinomialSet& F1, int n1, const BinomialSet& F2, int n2);
MonomialOrder direct_sum_order(const MonomialOrder& o1, const MonomialOrder& o2, int n1, int n2);

/// Renaming pairs x1_{canonical j} -> x1_{anchored j} for am.
std::vector<std::pair<VariableId, VariableId>> anchored_renaming(const AnchoredMatroid& am);

}  // namespace matoric
