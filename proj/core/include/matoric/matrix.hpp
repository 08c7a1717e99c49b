#pragma once

#include <string>
#include <vector>

#include "matoric/matroid.hpp"
#include "matoric/variable.hpp"

namespace matoric {

/// Non-negative integer matrix with labeled rows and variable-tagged
/// columns; the combinatorial data every toric ideal here is the kernel of.
class IntegerMatrix {
 public:
  IntegerMatrix(std::vector<std::string> row_labels, std::vector<VariableId> column_vars,
                std::vector<std::vector<int>> columns);

  int rows() const { return static_cast<int>(row_labels_.size()); }
  int cols() const { return static_cast<int>(column_vars_.size()); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<VariableId>& column_vars() const { return column_vars_; }
  const std::vector<std::vector<int>>& columns() const { return columns_; }
  const std::vector<int>& column(int c) const { return columns_[static_cast<std::size_t>(c)]; }
  int entry(int r, int c) const {
    return columns_[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  }
  int column_index(VariableId v) const;  // -1 if absent

 private:
  std::vector<std::string> row_labels_;
  std::vector<VariableId> column_vars_;
  std::vector<std::vector<int>> columns_;  // columns_[c][r] >= 0
};

/// d x n 0/1 matrix of basis indicator columns, column j tagged x1_j.
IntegerMatrix bases_matrix(const Matroid& m);

/// The series-extension matrix: columns (b_j, e1) tagged x1_j for all n
/// bases, then (b_j, e2) tagged x2_j for the gamma anchor-free bases; two
/// auxiliary rows w1, w2. Throws ColoopAnchorError when gamma = 0.
IntegerMatrix series_ext_matrix(const AnchoredMatroid& am);

/// The series-connection matrix: columns z1_j_k (j in [n1], k in [gamma2])
/// and z2_j_k (j in [gamma1], k in [n2]\[gamma2]), each stacking b_j over
/// d_k. The shared basepoint contributes one row per factor; their sum is
/// the basepoint row of the connection, and row operations preserve the
/// kernel. Throws DegenerateAnchorError if an anchor is a loop or coloop.
IntegerMatrix connection_matrix(const AnchoredMatroid& am1, const AnchoredMatroid& am2);

}  // namespace matoric
