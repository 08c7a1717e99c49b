#include "matoric/matrix.hpp"

#include <algorithm>

#include "matoric/errors.hpp"

namespace matoric {

IntegerMatrix::IntegerMatrix(std::vector<std::string> row_labels,
                             std::vector<VariableId> column_vars,
                             std::vector<std::vector<int>> columns)
    : row_labels_(std::move(row_labels)),
      column_vars_(std::move(column_vars)),
      columns_(std::move(columns)) {
  if (column_vars_.size() != columns_.size())
    throw BadParamsError("column variable count does not match column count");
  for (const auto& col : columns_) {
    if (col.size() != row_labels_.size())
      throw BadParamsError("column length does not match row count");
    for (int v : col)
      if (v < 0) throw BadParamsError("matrix entries must be non-negative");
  }
  std::vector<VariableId> check = column_vars_;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end())
    throw BadParamsError("duplicate column variable");
}

int IntegerMatrix::column_index(VariableId v) const {
  for (std::size_t c = 0; c < column_vars_.size(); ++c)
    if (column_vars_[c] == v) return static_cast<int>(c);
  return -1;
}

IntegerMatrix bases_matrix(const Matroid& m) {
  std::vector<std::string> rows;
  for (Element e = 1; e <= m.ground_size(); ++e) rows.push_back(std::to_string(e));
  std::vector<VariableId> vars;
  std::vector<std::vector<int>> cols;
  for (int j = 1; j <= m.basis_count(); ++j) {
    vars.push_back(VariableId::basis(1, j));
    std::vector<int> col(static_cast<std::size_t>(m.ground_size()), 0);
    for (Element e : m.basis(j)) col[static_cast<std::size_t>(e - 1)] = 1;
    cols.push_back(std::move(col));
  }
  return IntegerMatrix(std::move(rows), std::move(vars), std::move(cols));
}

IntegerMatrix series_ext_matrix(const AnchoredMatroid& am) {
  if (am.anchor_is_coloop()) throw ColoopAnchorError();
  const Matroid& m = am.matroid();
  const int n = am.basis_count();
  const int gamma = am.gamma();

  std::vector<std::string> rows;
  for (Element e = 1; e <= m.ground_size(); ++e) rows.push_back(std::to_string(e));
  rows.push_back("w1");
  rows.push_back("w2");

  std::vector<VariableId> vars;
  std::vector<std::vector<int>> cols;
  auto column_for = [&](int j, int block) {
    std::vector<int> col(static_cast<std::size_t>(m.ground_size()) + 2, 0);
    for (Element e : am.basis(j)) col[static_cast<std::size_t>(e - 1)] = 1;
    col[static_cast<std::size_t>(m.ground_size()) + (block == 1 ? 0 : 1)] = 1;
    return col;
  };
  for (int j = 1; j <= n; ++j) {
    vars.push_back(VariableId::basis(1, j));
    cols.push_back(column_for(j, 1));
  }
  for (int j = 1; j <= gamma; ++j) {
    vars.push_back(VariableId::basis(2, j));
    cols.push_back(column_for(j, 2));
  }
  return IntegerMatrix(std::move(rows), std::move(vars), std::move(cols));
}

IntegerMatrix connection_matrix(const AnchoredMatroid& am1, const AnchoredMatroid& am2) {
  if (am1.anchor_is_coloop() || am1.anchor_is_loop() || am2.anchor_is_coloop() ||
      am2.anchor_is_loop())
    throw DegenerateAnchorError("connection requires non-loop, non-coloop anchors");
  const int d1 = am1.matroid().ground_size();
  const int d2 = am2.matroid().ground_size();
  const int n1 = am1.basis_count(), g1 = am1.gamma();
  const int n2 = am2.basis_count(), g2 = am2.gamma();

  std::vector<std::string> rows;
  for (Element e = 1; e <= d1; ++e) rows.push_back(std::to_string(e));
  for (Element e = 1; e <= d2; ++e) rows.push_back(std::to_string(d1 + e));

  std::vector<VariableId> vars;
  std::vector<std::vector<int>> cols;
  auto column_for = [&](int j, int k) {
    std::vector<int> col(static_cast<std::size_t>(d1 + d2), 0);
    for (Element e : am1.basis(j)) col[static_cast<std::size_t>(e - 1)] = 1;
    for (Element e : am2.basis(k)) col[static_cast<std::size_t>(d1 + e - 1)] = 1;
    return col;
  };
  for (int j = 1; j <= n1; ++j)
    for (int k = 1; k <= g2; ++k) {
      vars.push_back(VariableId::pair(1, j, k));
      cols.push_back(column_for(j, k));
    }
  for (int j = 1; j <= g1; ++j)
    for (int k = g2 + 1; k <= n2; ++k) {
      vars.push_back(VariableId::pair(2, j, k));
      cols.push_back(column_for(j, k));
    }
  return IntegerMatrix(std::move(rows), std::move(vars), std::move(cols));
}

}  // namespace matoric
