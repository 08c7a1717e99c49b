#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace matoric {

/// Identifier of a polynomial-ring variable. Three kinds:
///   Basis       x<block>_<j>       one variable per matroid basis
///   Pair        z<block>_<j>_<k>   one per basis pair in a connection
///   Elimination s<r>               auxiliary row variable in the oracle
/// The value order (kind, block, j, k) is the canonical storage order;
/// monomial orders rank variables independently of it.
struct VariableId {
  enum class Kind : std::uint8_t { Elimination = 0, Basis = 1, Pair = 2 };

  Kind kind = Kind::Basis;
  std::int32_t block = 1;  // 1 or 2; 0 for elimination vars
  std::int32_t j = 0;
  std::int32_t k = 0;      // used by Pair only

  static VariableId basis(int block, int j) { return {Kind::Basis, block, j, 0}; }
  static VariableId pair(int block, int j, int k) { return {Kind::Pair, block, j, k}; }
  static VariableId elim(int r) { return {Kind::Elimination, 0, r, 0}; }

  auto operator<=>(const VariableId&) const = default;

  std::string name() const;
  static std::optional<VariableId> parse(std::string_view text);
};

}  // namespace matoric

template <>
struct std::hash<matoric::VariableId> {
  std::size_t operator()(const matoric::VariableId& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.kind);
    h = h * 1000003u + static_cast<std::size_t>(v.block);
    h = h * 1000003u + static_cast<std::size_t>(v.j);
    h = h * 1000003u + static_cast<std::size_t>(v.k);
    return h;
  }
};
