#include "matoric/order.hpp"

#include <algorithm>

#include "matoric/errors.hpp"

namespace matoric {

namespace {

using int128 = __int128;

int128 dot(const MonomialOrder::Functional& f, const Monomial& m) {
  int128 acc = 0;
  for (const auto& [v, e] : m.entries()) {
    auto it = f.coeffs.find(v);
    if (it != f.coeffs.end()) acc += static_cast<int128>(it->second) * e;
  }
  return acc;
}

// Per-group exponent sums, aligned with the layer's group list.
void group_sums(const std::vector<std::vector<VariableId>>& groups, const Monomial& m,
                std::vector<long>& out) {
  out.assign(groups.size(), 0);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (VariableId v : groups[g]) out[g] += m.exponent(v);
}

}  // namespace

MonomialOrder MonomialOrder::from_layers(std::string name, std::vector<Layer> layers,
                                         std::vector<VariableId> domain) {
  MonomialOrder o;
  o.name_ = std::move(name);
  o.layers_ = std::move(layers);
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  o.domain_ = std::move(domain);
  o.domain_set_.insert(o.domain_.begin(), o.domain_.end());
  return o;
}

MonomialOrder MonomialOrder::lex(std::vector<VariableId> ranking) {
  GroupedLex gl;
  for (VariableId v : ranking) gl.groups.push_back({v});
  return from_layers("lex", {Layer{std::move(gl)}}, std::move(ranking));
}

MonomialOrder MonomialOrder::degrevlex(std::vector<VariableId> ranking) {
  Functional deg;
  for (VariableId v : ranking) deg.coeffs[v] = 1;
  GroupedRevLex rl;
  for (VariableId v : ranking) rl.groups.push_back({v});
  return from_layers("degrevlex", {Layer{std::move(deg)}, Layer{std::move(rl)}},
                     std::move(ranking));
}

MonomialOrder MonomialOrder::weighted(
    const std::vector<std::pair<VariableId, std::int64_t>>& weight, Tie tie,
    std::vector<VariableId> ranking) {
  Functional w;
  for (const auto& [v, c] : weight) {
    if (c < 0) throw BadParamsError("weight vectors must be non-negative");
    w.coeffs[v] = c;
  }
  MonomialOrder base = tie == Tie::Lex ? lex(ranking) : degrevlex(ranking);
  std::vector<Layer> layers;
  layers.emplace_back(std::move(w));
  layers.insert(layers.end(), base.layers().begin(), base.layers().end());
  return from_layers(tie == Tie::Lex ? "weight+lex" : "weight+degrevlex", std::move(layers),
                     std::move(ranking));
}

MonomialOrder MonomialOrder::elimination(std::vector<VariableId> elim_vars,
                                         const MonomialOrder& column_order) {
  Functional edeg;
  for (VariableId v : elim_vars) edeg.coeffs[v] = 1;
  GroupedRevLex erl;
  for (VariableId v : elim_vars) erl.groups.push_back({v});
  std::vector<Layer> layers{Layer{std::move(edeg)}, Layer{std::move(erl)}};
  layers.insert(layers.end(), column_order.layers().begin(), column_order.layers().end());
  std::vector<VariableId> domain = column_order.domain();
  domain.insert(domain.end(), elim_vars.begin(), elim_vars.end());
  return from_layers("elim[" + column_order.name() + "]", std::move(layers), std::move(domain));
}

std::vector<MonomialOrder::Layer> MonomialOrder::pulled_back_layers(
    const MonomialOrder& base,
    const std::vector<std::pair<VariableId, VariableId>>& new_to_base) {
  std::unordered_map<VariableId, std::vector<VariableId>> preimages;
  for (const auto& [nv, bv] : new_to_base) preimages[bv].push_back(nv);
  for (auto& [bv, vars] : preimages) std::sort(vars.begin(), vars.end());

  std::vector<Layer> out;
  for (const Layer& layer : base.layers()) {
    if (const auto* f = std::get_if<Functional>(&layer)) {
      Functional nf;
      for (const auto& [nv, bv] : new_to_base) {
        auto it = f->coeffs.find(bv);
        if (it != f->coeffs.end() && it->second != 0) nf.coeffs[nv] = it->second;
      }
      out.emplace_back(std::move(nf));
    } else if (const auto* gl = std::get_if<GroupedLex>(&layer)) {
      GroupedLex ng;
      for (const auto& group : gl->groups) {
        std::vector<VariableId> ngroup;
        for (VariableId bv : group) {
          auto it = preimages.find(bv);
          if (it != preimages.end())
            ngroup.insert(ngroup.end(), it->second.begin(), it->second.end());
        }
        ng.groups.push_back(std::move(ngroup));
      }
      out.emplace_back(std::move(ng));
    } else {
      const auto& grl = std::get<GroupedRevLex>(layer);
      GroupedRevLex ng;
      for (const auto& group : grl.groups) {
        std::vector<VariableId> ngroup;
        for (VariableId bv : group) {
          auto it = preimages.find(bv);
          if (it != preimages.end())
            ngroup.insert(ngroup.end(), it->second.begin(), it->second.end());
        }
        ng.groups.push_back(std::move(ngroup));
      }
      out.emplace_back(std::move(ng));
    }
  }
  return out;
}

MonomialOrder MonomialOrder::renamed(
    const std::vector<std::pair<VariableId, VariableId>>& renames, std::string new_name) const {
  std::unordered_map<VariableId, VariableId> map;
  for (const auto& [from, to] : renames) map.emplace(from, to);
  auto image = [&map](VariableId v) {
    auto it = map.find(v);
    return it == map.end() ? v : it->second;
  };

  std::vector<Layer> layers;
  for (const Layer& layer : layers_) {
    if (const auto* f = std::get_if<Functional>(&layer)) {
      Functional nf;
      for (const auto& [v, c] : f->coeffs) nf.coeffs[image(v)] = c;
      layers.emplace_back(std::move(nf));
    } else if (const auto* gl = std::get_if<GroupedLex>(&layer)) {
      GroupedLex ng;
      for (const auto& group : gl->groups) {
        std::vector<VariableId> ngroup;
        for (VariableId v : group) ngroup.push_back(image(v));
        ng.groups.push_back(std::move(ngroup));
      }
      layers.emplace_back(std::move(ng));
    } else {
      const auto& grl = std::get<GroupedRevLex>(layer);
      GroupedRevLex ng;
      for (const auto& group : grl.groups) {
        std::vector<VariableId> ngroup;
        for (VariableId v : group) ngroup.push_back(image(v));
        ng.groups.push_back(std::move(ngroup));
      }
      layers.emplace_back(std::move(ng));
    }
  }
  std::vector<VariableId> domain;
  for (VariableId v : domain_) domain.push_back(image(v));
  return from_layers(std::move(new_name), std::move(layers), std::move(domain));
}

MonomialOrder MonomialOrder::restricted_to(std::vector<VariableId> vars) const {
  for (VariableId v : vars)
    if (!domain_set_.count(v)) throw UnknownVariableError(v.name());
  return from_layers(name_, layers_, std::move(vars));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& [v, e] : a.entries())
    if (!domain_set_.count(v)) throw UnknownVariableError(v.name());
  for (const auto& [v, e] : b.entries())
    if (!domain_set_.count(v)) throw UnknownVariableError(v.name());

  thread_local std::vector<long> sa, sb;
  for (const Layer& layer : layers_) {
    if (const auto* f = std::get_if<Functional>(&layer)) {
      int128 da = dot(*f, a), db = dot(*f, b);
      if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    } else if (const auto* gl = std::get_if<GroupedLex>(&layer)) {
      group_sums(gl->groups, a, sa);
      group_sums(gl->groups, b, sb);
      for (std::size_t g = 0; g < gl->groups.size(); ++g)
        if (sa[g] != sb[g]) return sa[g] <=> sb[g];
    } else {
      const auto& grl = std::get<GroupedRevLex>(layer);
      group_sums(grl.groups, a, sa);
      group_sums(grl.groups, b, sb);
      for (std::size_t g = grl.groups.size(); g-- > 0;)
        if (sa[g] != sb[g]) return sb[g] <=> sa[g];  // larger sum in lowest group = smaller
    }
  }
  return std::strong_ordering::equal;
}

MonomialOrder default_order(std::vector<VariableId> ambient) {
  std::sort(ambient.begin(), ambient.end());
  ambient.erase(std::unique(ambient.begin(), ambient.end()), ambient.end());
  return MonomialOrder::degrevlex(std::move(ambient));
}

}  // namespace matoric
