#include "matoric/binomial.hpp"

#include <algorithm>
#include <unordered_set>

#include "matoric/errors.hpp"

namespace matoric {

Binomial Binomial::oriented(Monomial a, Monomial b, const MonomialOrder& order) {
  if (a == b) return zero();
  if (order.compare(a, b) < 0) std::swap(a, b);
  return Binomial(std::move(a), std::move(b));
}

Binomial Binomial::canonical(Monomial a, Monomial b) {
  if (a == b) return zero();
  if (a < b) std::swap(a, b);
  return Binomial(std::move(a), std::move(b));
}

Binomial Binomial::times(const Monomial& m) const { return Binomial(lead_ * m, trail_ * m); }

Binomial Binomial::renamed(const std::vector<std::pair<VariableId, VariableId>>& map) const {
  auto rename = [&map](const Monomial& m) {
    Monomial out;
    for (const auto& [v, e] : m.entries()) {
      bool found = false;
      for (const auto& [from, to] : map) {
        if (from == v) {
          out = out * Monomial::var(to, e);
          found = true;
          break;
        }
      }
      if (!found) throw UnknownVariableError(v.name());
    }
    return out;
  };
  return canonical(rename(lead_), rename(trail_));
}

BinomialSet::BinomialSet(std::vector<VariableId> ambient) {
  std::sort(ambient.begin(), ambient.end());
  ambient.erase(std::unique(ambient.begin(), ambient.end()), ambient.end());
  ambient_ = std::move(ambient);
}

BinomialSet BinomialSet::make(std::vector<VariableId> ambient, std::vector<Binomial> elements,
                              const MonomialOrder* order) {
  return build(std::move(ambient), std::move(elements), order,
               order ? Orientation::ByOrder : Orientation::Canonical);
}

BinomialSet BinomialSet::keep_orientation(std::vector<VariableId> ambient,
                                          std::vector<Binomial> elements) {
  return build(std::move(ambient), std::move(elements), nullptr, Orientation::Stored);
}

BinomialSet BinomialSet::build(std::vector<VariableId> ambient, std::vector<Binomial> elements,
                               const MonomialOrder* order, Orientation mode) {
  BinomialSet set(std::move(ambient));
  std::unordered_set<VariableId> allowed(set.ambient_.begin(), set.ambient_.end());
  std::vector<Binomial> kept;
  for (Binomial& b : elements) {
    if (b.is_zero()) {
      ++set.dropped_;
      continue;
    }
    for (const auto& [v, e] : b.lead().entries())
      if (!allowed.count(v)) throw UnknownVariableError(v.name());
    for (const auto& [v, e] : b.trail().entries())
      if (!allowed.count(v)) throw UnknownVariableError(v.name());
    switch (mode) {
      case Orientation::ByOrder:
        kept.push_back(Binomial::oriented(b.lead(), b.trail(), *order));
        break;
      case Orientation::Canonical:
        kept.push_back(Binomial::canonical(b.lead(), b.trail()));
        break;
      case Orientation::Stored:
        kept.push_back(b);
        break;
    }
  }
  std::sort(kept.begin(), kept.end());
  auto last = std::unique(kept.begin(), kept.end());
  set.dropped_ += static_cast<int>(kept.end() - last);
  kept.erase(last, kept.end());
  set.elements_ = std::move(kept);
  return set;
}

BinomialSet BinomialSet::oriented(const MonomialOrder& order) const {
  std::vector<Binomial> elems;
  elems.reserve(elements_.size());
  for (const Binomial& b : elements_)
    elems.push_back(Binomial::oriented(b.lead(), b.trail(), order));
  BinomialSet out;
  out.ambient_ = ambient_;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  out.elements_ = std::move(elems);
  out.dropped_ = dropped_;
  return out;
}

}  // namespace matoric
