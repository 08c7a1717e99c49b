#pragma once

#include "matoric/binomial.hpp"

namespace matoric {

/// S-binomial of two oriented binomials: with L = lcm of the leads,
/// (L/lead_f) trail_f - (L/lead_g) trail_g, re-oriented; zero when the
/// sides coincide.
Binomial s_binomial(const Binomial& f, const Binomial& g, const MonomialOrder& order);

/// Fully reduces b modulo the (oriented) set: any side divisible by some
/// element's lead is rewritten lead-multiple -> trail-multiple until no
/// rewrite applies. Returns the reduced binomial or zero.
Binomial normal_form(const Binomial& b, const BinomialSet& set, const MonomialOrder& order);

/// Monomial variant of normal_form (a monomial is rewritten the same way).
Monomial normal_form(const Monomial& m, const BinomialSet& set, const MonomialOrder& order);

/// Reduced Groebner basis of <set> under `order`: S-binomials reduce to
/// zero, leads pairwise non-dividing, trails in normal form, deterministic
/// element order.
BinomialSet buchberger(const BinomialSet& set, const MonomialOrder& order);

/// Buchberger criterion check: every S-binomial reduces to zero modulo the
/// set itself (no completion).
bool is_groebner(const BinomialSet& set, const MonomialOrder& order);

/// Equality of ideals via reduced Groebner bases. Throws
/// AmbientMismatchError when the ambient sets differ.
bool ideals_equal(const BinomialSet& a, const BinomialSet& b, const MonomialOrder& order);

/// Elements whose variables all lie in `keep`; ambient becomes keep.
/// Throws BadParamsError if keep is not a subset of the ambient.
BinomialSet restrict_to_vars(const BinomialSet& set, std::vector<VariableId> keep);

}  // namespace matoric
