#include "matoric/variable.hpp"

#include <charconv>

namespace matoric {

std::string VariableId::name() const {
  switch (kind) {
    case Kind::Elimination:
      return "s" + std::to_string(j);
    case Kind::Basis:
      return "x" + std::to_string(block) + "_" + std::to_string(j);
    case Kind::Pair:
      return "z" + std::to_string(block) + "_" + std::to_string(j) + "_" + std::to_string(k);
  }
  return {};
}

namespace {

std::optional<int> read_int(std::string_view& s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr == s.data()) return std::nullopt;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

bool eat(std::string_view& s, char c) {
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

}  // namespace

std::optional<VariableId> VariableId::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const char head = text.front();
  text.remove_prefix(1);
  if (head == 's') {
    auto r = read_int(text);
    if (!r || !text.empty()) return std::nullopt;
    return VariableId::elim(*r);
  }
  if (head == 'x') {
    auto block = read_int(text);
    if (!block || !eat(text, '_')) return std::nullopt;
    auto j = read_int(text);
    if (!j || !text.empty()) return std::nullopt;
    return VariableId::basis(*block, *j);
  }
  if (head == 'z') {
    auto block = read_int(text);
    if (!block || !eat(text, '_')) return std::nullopt;
    auto j = read_int(text);
    if (!j || !eat(text, '_')) return std::nullopt;
    auto k = read_int(text);
    if (!k || !text.empty()) return std::nullopt;
    return VariableId::pair(*block, *j, *k);
  }
  return std::nullopt;
}

}  // namespace matoric
