#include "matoric/oracle.hpp"

namespace matoric {

BinomialSet toric_gb(const IntegerMatrix& matrix, const MonomialOrder& column_order) {
  std::vector<VariableId> elim_vars;
  for (int r = 1; r <= matrix.rows(); ++r) elim_vars.push_back(VariableId::elim(r));

  std::vector<Binomial> gens;
  for (int c = 0; c < matrix.cols(); ++c) {
    Monomial image = Monomial::unit();
    for (int r = 0; r < matrix.rows(); ++r)
      if (matrix.entry(r, c) > 0)
        image = image * Monomial::var(VariableId::elim(r + 1), matrix.entry(r, c));
    gens.push_back(Binomial::canonical(Monomial::var(matrix.column_vars()[static_cast<std::size_t>(c)]),
                                       std::move(image)));
  }
  std::vector<VariableId> ambient = matrix.column_vars();
  ambient.insert(ambient.end(), elim_vars.begin(), elim_vars.end());

  MonomialOrder elim_order = MonomialOrder::elimination(elim_vars, column_order);
  BinomialSet big = BinomialSet::make(std::move(ambient), std::move(gens), &elim_order);
  BinomialSet gb = buchberger(big, elim_order);
  return restrict_to_vars(gb, matrix.column_vars());
}

BinomialSet toric_gb(const IntegerMatrix& matrix) {
  return toric_gb(matrix, default_order(matrix.column_vars()));
}

bool in_kernel(const IntegerMatrix& matrix, const Binomial& b) {
  if (b.is_zero()) return true;
  for (int r = 0; r < matrix.rows(); ++r) {
    long acc = 0;
    for (const auto& [v, e] : b.lead().entries()) {
      int c = matrix.column_index(v);
      if (c < 0) return false;
      acc += static_cast<long>(matrix.entry(r, c)) * e;
    }
    for (const auto& [v, e] : b.trail().entries()) {
      int c = matrix.column_index(v);
      if (c < 0) return false;
      acc -= static_cast<long>(matrix.entry(r, c)) * e;
    }
    if (acc != 0) return false;
  }
  return true;
}

bool pi_sound(const IntegerMatrix& matrix, const Binomial& b) {
  auto image = [&matrix](const Monomial& m) {
    Monomial out = Monomial::unit();
    for (const auto& [v, e] : m.entries()) {
      int c = matrix.column_index(v);
      if (c < 0) throw UnknownVariableError(v.name());
      for (int r = 0; r < matrix.rows(); ++r)
        if (matrix.entry(r, c) > 0)
          out = out * Monomial::var(VariableId::elim(r + 1), matrix.entry(r, c) * e);
    }
    return out;
  };
  return image(b.lead()) == image(b.trail());
}

}  // namespace matoric
