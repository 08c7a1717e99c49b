#include "matoric/monomial.hpp"

#include <algorithm>

namespace matoric {

Monomial Monomial::var(VariableId v, int exp) {
  Monomial m;
  if (exp > 0) m.entries_.emplace_back(v, exp);
  return m;
}

Monomial Monomial::from_factors(const std::vector<VariableId>& factors) {
  Monomial m;
  for (VariableId v : factors) m = m * var(v);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

int Monomial::exponent(VariableId v) const {
  for (const auto& [w, e] : entries_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first)
      out.entries_.push_back(*a++);
    else if (b->first < a->first)
      out.entries_.push_back(*b++);
    else {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.entries_.insert(out.entries_.end(), a, entries_.end());
  out.entries_.insert(out.entries_.end(), b, other.entries_.end());
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end()) {
    while (b != other.entries_.end() && b->first < a->first) ++b;
    if (b == other.entries_.end() || !(b->first == a->first) || b->second < a->second)
      return false;
    ++a;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  Monomial out;
  auto b = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    int sub = 0;
    while (b != other.entries_.end() && b->first < v) ++b;
    if (b != other.entries_.end() && b->first == v) sub = b->second;
    if (e - sub > 0) out.entries_.emplace_back(v, e - sub);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    if (i->first < j->first)
      out.entries_.push_back(*i++);
    else if (j->first < i->first)
      out.entries_.push_back(*j++);
    else {
      out.entries_.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  out.entries_.insert(out.entries_.end(), i, a.entries_.end());
  out.entries_.insert(out.entries_.end(), j, b.entries_.end());
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    if (i->first < j->first)
      ++i;
    else if (j->first < i->first)
      ++j;
    else {
      out.entries_.emplace_back(i->first, std::min(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  auto i = entries_.begin();
  auto j = other.entries_.begin();
  while (i != entries_.end() && j != other.entries_.end()) {
    if (i->first < j->first)
      ++i;
    else if (j->first < i->first)
      ++j;
    else
      return false;
  }
  return true;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  return entries_ <=> other.entries_;
}

}  // namespace matoric
