#pragma once

#include "matoric/gb.hpp"
#include "matoric/matrix.hpp"

namespace matoric {

/// Ground-truth reduced Groebner basis of the toric ideal of `matrix` (the
/// kernel of the monomial map column -> product of row variables), by the
/// classical elimination route: one elimination variable per row,
/// generators x_col - s^(column), Buchberger under an elimination order
/// ranking the s-block above the columns, then restriction to the column
/// variables. The restriction is the reduced basis of the kernel under
/// `column_order`. No saturation is needed: all entries are non-negative.
BinomialSet toric_gb(const IntegerMatrix& matrix, const MonomialOrder& column_order);

/// toric_gb under degrevlex over the canonical column ranking.
BinomialSet toric_gb(const IntegerMatrix& matrix);

/// Membership of every element's exponent difference in the integer kernel
/// of the matrix, checked by direct multiplication.
bool in_kernel(const IntegerMatrix& matrix, const Binomial& b);

/// Symbolic pi-soundness: both sides of b map to the same row-variable
/// monomial under column -> s^(column).
bool pi_sound(const IntegerMatrix& matrix, const Binomial& b);

}  // namespace matoric
