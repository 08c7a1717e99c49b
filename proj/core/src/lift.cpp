#include "matoric/lift.hpp"

#include <algorithm>
#include <map>

#include "matoric/errors.hpp"

namespace matoric {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw VerificationError(msg);
}

// Per-block ascending index lists of a basis-variable monomial, expanded
// with multiplicity.
std::map<int, std::vector<int>> expand_by_block(const Monomial& m) {
  std::map<int, std::vector<int>> out;
  for (const auto& [v, e] : m.entries()) {
    if (v.kind != VariableId::Kind::Basis)
      throw BlockMismatchError("expected basis variables, found " + v.name());
    for (int t = 0; t < e; ++t) out[v.block].push_back(v.j);
  }
  for (auto& [b, idx] : out) std::sort(idx.begin(), idx.end());
  return out;
}

Basis with_element(Basis b, Element e) {
  b.push_back(e);
  std::sort(b.begin(), b.end());
  return b;
}

Basis complement_basis(const Basis& b, int d) {
  ElementMask full = (ElementMask{1} << d) - 1;
  return basis_of(full & ~mask_of(b));
}

}  // namespace

SplitBinomial classify_split(const Binomial& f, int gamma) {
  if (f.is_zero()) throw BadParamsError("cannot split the zero binomial");
  auto lead = expand_by_block(f.lead());
  auto trail = expand_by_block(f.trail());
  for (const auto& [b, idx] : lead)
    if (b != 1) throw BlockMismatchError("classify_split expects block-1 variables");
  for (const auto& [b, idx] : trail)
    if (b != 1) throw BlockMismatchError("classify_split expects block-1 variables");

  SplitBinomial s;
  s.binomial = f;
  for (int idx : lead[1]) (idx <= gamma ? s.low_lead : s.high_lead).push_back(idx);
  for (int idx : trail[1]) (idx <= gamma ? s.low_trail : s.high_trail).push_back(idx);
  if (s.low_lead.size() != s.low_trail.size() || s.high_lead.size() != s.high_trail.size())
    throw UnbalancedSplitError();
  return s;
}

BinomialSet lift_series_tilde(const BinomialSet& F, int gamma, int n, int full_block) {
  if (full_block != 1 && full_block != 2) throw BadParamsError("full_block must be 1 or 2");
  const int dup_block = full_block == 1 ? 2 : 1;

  std::vector<VariableId> ambient;
  for (int j = 1; j <= n; ++j) ambient.push_back(VariableId::basis(full_block, j));
  for (int j = 1; j <= gamma; ++j) ambient.push_back(VariableId::basis(dup_block, j));

  std::vector<Binomial> elems;
  for (const Binomial& f : F.elements()) {
    SplitBinomial s = classify_split(f, gamma);
    const int u = s.u();
    for (std::uint32_t tags = 0; tags < (std::uint32_t{1} << u); ++tags) {
      Monomial lead = Monomial::unit(), trail = Monomial::unit();
      for (int l = 0; l < u; ++l) {
        const int block = (tags >> l) & 1 ? dup_block : full_block;
        lead = lead * Monomial::var(VariableId::basis(block, s.low_lead[static_cast<std::size_t>(l)]));
        trail = trail * Monomial::var(VariableId::basis(block, s.low_trail[static_cast<std::size_t>(l)]));
      }
      for (int idx : s.high_lead) lead = lead * Monomial::var(VariableId::basis(full_block, idx));
      for (int idx : s.high_trail) trail = trail * Monomial::var(VariableId::basis(full_block, idx));
      elems.push_back(Binomial::canonical(std::move(lead), std::move(trail)));
    }
  }
  for (int j1 = 1; j1 <= gamma; ++j1)
    for (int j2 = j1 + 1; j2 <= gamma; ++j2)
      elems.push_back(Binomial::canonical(
          Monomial::var(VariableId::basis(full_block, j2)) * Monomial::var(VariableId::basis(dup_block, j1)),
          Monomial::var(VariableId::basis(full_block, j1)) * Monomial::var(VariableId::basis(dup_block, j2))));
  return BinomialSet::make(std::move(ambient), std::move(elems));
}

BinomialSet lift_series_extension(const BinomialSet& F, int gamma, int n) {
  return lift_series_tilde(F, gamma, n, 1);
}

MonomialOrder series_ext_order(const MonomialOrder& base, int gamma, int n, int full_block) {
  const int dup_block = full_block == 1 ? 2 : 1;
  std::vector<std::pair<VariableId, VariableId>> collapse;
  for (int j = 1; j <= n; ++j)
    collapse.emplace_back(VariableId::basis(full_block, j), VariableId::basis(1, j));
  for (int j = 1; j <= gamma; ++j)
    collapse.emplace_back(VariableId::basis(dup_block, j), VariableId::basis(1, j));

  auto layers = MonomialOrder::pulled_back_layers(base, collapse);
  MonomialOrder::Functional dup_index;
  for (int j = 1; j <= gamma; ++j) dup_index.coeffs[VariableId::basis(dup_block, j)] = -j;
  layers.emplace_back(std::move(dup_index));

  std::vector<VariableId> ranking;
  for (int j = 1; j <= gamma; ++j) ranking.push_back(VariableId::basis(dup_block, j));
  for (int j = 1; j <= n; ++j) ranking.push_back(VariableId::basis(full_block, j));
  MonomialOrder::GroupedLex tie;
  for (VariableId v : ranking) tie.groups.push_back({v});
  layers.emplace_back(std::move(tie));

  MonomialOrder order = MonomialOrder::from_layers("series-lift[" + base.name() + "]",
                                                   std::move(layers), ranking);
  for (int j1 = 1; j1 <= gamma; ++j1)
    for (int j2 = j1 + 1; j2 <= gamma; ++j2) {
      Monomial a = Monomial::var(VariableId::basis(full_block, j2)) *
                   Monomial::var(VariableId::basis(dup_block, j1));
      Monomial b = Monomial::var(VariableId::basis(full_block, j1)) *
                   Monomial::var(VariableId::basis(dup_block, j2));
      require(order.compare(a, b) > 0, "swap quadric is not oriented by the lifted order");
    }
  return order;
}

MonomialOrder series_ext_order_weights(
    const std::vector<std::pair<VariableId, std::int64_t>>& omega, int gamma, int n) {
  std::vector<VariableId> ranking;
  for (int j = 1; j <= n; ++j) ranking.push_back(VariableId::basis(1, j));
  MonomialOrder base = MonomialOrder::weighted(omega, MonomialOrder::Tie::Lex, ranking);
  return series_ext_order(base, gamma, n, 1);
}

const Basis* VarBasisMap::basis_for(VariableId v) const {
  for (const auto& [var, basis] : entries)
    if (var == v) return &basis;
  return nullptr;
}

SeriesExtensionResult series_extension(const AnchoredMatroid& am) {
  const Matroid& m = am.matroid();
  const int d = m.ground_size();
  const int n = am.basis_count();
  const int gamma = am.gamma();
  const Element c = am.anchor();

  std::vector<Basis> bases;
  VarBasisMap map;
  for (int j = 1; j <= n; ++j) {
    Basis b = with_element(am.basis(j), d + 1);
    map.entries.emplace_back(VariableId::basis(1, j), b);
    bases.push_back(std::move(b));
  }
  for (int j = 1; j <= gamma; ++j) {
    Basis b = with_element(am.basis(j), c);
    map.entries.emplace_back(VariableId::basis(2, j), b);
    bases.push_back(std::move(b));
  }
  SeriesExtensionResult out{Matroid::from_bases(d + 1, std::move(bases)), std::move(map),
                            gamma == 0};
  require(out.matroid.basis_count() == n + gamma,
          "series extension variable-basis map is not a bijection");
  return out;
}

ParallelExtensionResult parallel_extension(const AnchoredMatroid& am) {
  const Matroid& m = am.matroid();
  const int d = m.ground_size();
  const Element c = am.anchor();

  SeriesExtensionResult ext = series_extension(anchor(dual(m), c));
  Matroid p = dual(ext.matroid);
  VarBasisMap map;
  for (const auto& [v, b] : ext.map.entries)
    map.entries.emplace_back(v, complement_basis(b, d + 1));

  // Direct description: every old basis, plus c swapped for d+1.
  std::vector<Basis> direct = m.bases();
  for (const Basis& b : m.bases()) {
    if (!std::binary_search(b.begin(), b.end(), c)) continue;
    Basis nb;
    for (Element e : b)
      if (e != c) nb.push_back(e);
    direct.push_back(with_element(std::move(nb), d + 1));
  }
  require(Matroid::from_bases(d + 1, std::move(direct)) == p,
          "parallel extension disagrees with its direct description");
  return ParallelExtensionResult{std::move(p), std::move(map), ext.coloop};
}

BinomialSet dual_transfer(const BinomialSet& set, const Matroid& m) {
  const Matroid md = dual(m);
  const ElementMask full = (ElementMask{1} << m.ground_size()) - 1;
  std::vector<std::pair<VariableId, VariableId>> renames;
  for (int j = 1; j <= m.basis_count(); ++j) {
    int image = md.basis_index(full & ~m.masks()[static_cast<std::size_t>(j - 1)]);
    require(image != 0, "complement of a basis is not a basis of the dual");
    renames.emplace_back(VariableId::basis(1, j), VariableId::basis(1, image));
  }
  std::vector<Binomial> elems;
  for (const Binomial& b : set.elements()) elems.push_back(b.renamed(renames));
  return BinomialSet::make(set.ambient(), std::move(elems));
}

std::vector<VariableId> ConnectionIndex::full_vars() const {
  std::vector<VariableId> vars;
  for (int j = 1; j <= n1; ++j)
    for (int k = 1; k <= gamma2; ++k) vars.push_back(VariableId::pair(1, j, k));
  for (int j = 1; j <= gamma1; ++j)
    for (int k = 1; k <= n2; ++k) vars.push_back(VariableId::pair(2, j, k));
  return vars;
}

std::vector<VariableId> ConnectionIndex::kept_vars() const {
  std::vector<VariableId> vars;
  for (int j = 1; j <= n1; ++j)
    for (int k = 1; k <= gamma2; ++k) vars.push_back(VariableId::pair(1, j, k));
  for (int j = 1; j <= gamma1; ++j)
    for (int k = gamma2 + 1; k <= n2; ++k) vars.push_back(VariableId::pair(2, j, k));
  return vars;
}

namespace {

struct TfpBlock {
  int alpha, beta;
  int kept_lo, kept_hi;  // kept k-range (inclusive)
};

struct TildeSlot {
  int block;
  int first, second;  // paired indices (lead/trail for the left factor)
};

std::vector<TildeSlot> tilde_split(const Binomial& f) {
  auto lead = expand_by_block(f.lead());
  auto trail = expand_by_block(f.trail());
  std::vector<TildeSlot> slots;
  for (const auto& [block, lead_idx] : lead) {
    auto it = trail.find(block);
    if (it == trail.end() || it->second.size() != lead_idx.size())
      throw BlockMismatchError("sides use block " + std::to_string(block) +
                               " with different multiplicities");
    for (std::size_t l = 0; l < lead_idx.size(); ++l)
      slots.push_back(TildeSlot{block, lead_idx[l], it->second[l]});
  }
  for (const auto& [block, idx] : trail)
    if (!lead.count(block))
      throw BlockMismatchError("sides use block " + std::to_string(block) +
                               " with different multiplicities");
  return slots;
}

// Enumerates assignment vectors over per-slot ranges in ascending
// odometer order and emits the lifted binomial for each.
void emit_lifts(const std::vector<TildeSlot>& slots, const std::vector<std::pair<int, int>>& ranges,
                bool slot_gives_j, std::vector<Binomial>& out) {
  std::vector<int> k(slots.size());
  for (std::size_t l = 0; l < slots.size(); ++l) k[l] = ranges[l].first;
  if (slots.empty()) return;
  for (;;) {
    Monomial lead = Monomial::unit(), trail = Monomial::unit();
    for (std::size_t l = 0; l < slots.size(); ++l) {
      const TildeSlot& s = slots[l];
      if (slot_gives_j) {
        lead = lead * Monomial::var(VariableId::pair(s.block, s.first, k[l]));
        trail = trail * Monomial::var(VariableId::pair(s.block, s.second, k[l]));
      } else {
        lead = lead * Monomial::var(VariableId::pair(s.block, k[l], s.first));
        trail = trail * Monomial::var(VariableId::pair(s.block, k[l], s.second));
      }
    }
    out.push_back(Binomial::canonical(std::move(lead), std::move(trail)));
    std::size_t pos = 0;
    while (pos < slots.size() && ++k[pos] > ranges[pos].second) {
      k[pos] = ranges[pos].first;
      ++pos;
    }
    if (pos == slots.size()) break;
  }
}

BinomialSet tfp_lift(const BinomialSet& left, const BinomialSet& right,
                     const std::vector<TfpBlock>& blocks, LiftMode mode,
                     std::vector<VariableId> ambient) {
  auto block_of = [&blocks](int b) -> const TfpBlock& {
    if (b < 1 || b > static_cast<int>(blocks.size()))
      throw BlockMismatchError("variable block out of range");
    return blocks[static_cast<std::size_t>(b - 1)];
  };

  std::vector<Binomial> elems;
  for (const Binomial& f : left.elements()) {
    auto slots = tilde_split(f);
    std::vector<std::pair<int, int>> ranges;
    for (const TildeSlot& s : slots) {
      const TfpBlock& blk = block_of(s.block);
      if (s.first > blk.alpha || s.second > blk.alpha)
        throw BlockMismatchError("left-factor index exceeds its block size");
      ranges.emplace_back(mode == LiftMode::N ? blk.kept_lo : 1,
                          mode == LiftMode::N ? blk.kept_hi : blk.beta);
    }
    emit_lifts(slots, ranges, /*slot_gives_j=*/true, elems);
  }
  for (const Binomial& g : right.elements()) {
    auto slots = tilde_split(g);
    bool inside = true;
    for (const TildeSlot& s : slots) {
      const TfpBlock& blk = block_of(s.block);
      if (s.first > blk.beta || s.second > blk.beta)
        throw BlockMismatchError("right-factor index exceeds its block size");
      if (mode == LiftMode::N &&
          (s.first < blk.kept_lo || s.first > blk.kept_hi || s.second < blk.kept_lo ||
           s.second > blk.kept_hi))
        inside = false;
    }
    if (!inside) continue;
    std::vector<std::pair<int, int>> ranges;
    for (const TildeSlot& s : slots) ranges.emplace_back(1, block_of(s.block).alpha);
    emit_lifts(slots, ranges, /*slot_gives_j=*/false, elems);
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const TfpBlock& blk = blocks[b];
    const int block = static_cast<int>(b) + 1;
    const int klo = mode == LiftMode::N ? blk.kept_lo : 1;
    const int khi = mode == LiftMode::N ? blk.kept_hi : blk.beta;
    for (int j1 = 1; j1 <= blk.alpha; ++j1)
      for (int j2 = j1 + 1; j2 <= blk.alpha; ++j2)
        for (int k1 = klo; k1 <= khi; ++k1)
          for (int k2 = k1 + 1; k2 <= khi; ++k2)
            elems.push_back(Binomial::canonical(
                Monomial::var(VariableId::pair(block, j1, k2)) *
                    Monomial::var(VariableId::pair(block, j2, k1)),
                Monomial::var(VariableId::pair(block, j1, k1)) *
                    Monomial::var(VariableId::pair(block, j2, k2))));
  }
  return BinomialSet::make(std::move(ambient), std::move(elems));
}

MonomialOrder tfp_order(const MonomialOrder& left, const MonomialOrder& right,
                        const std::vector<TfpBlock>& blocks, std::vector<VariableId> domain,
                        const std::string& name) {
  std::vector<std::pair<VariableId, VariableId>> collapse_left, collapse_right;
  for (VariableId z : domain) {
    collapse_left.emplace_back(z, VariableId::basis(z.block, z.j));
    collapse_right.emplace_back(z, VariableId::basis(z.block, z.k));
  }
  auto layers = MonomialOrder::pulled_back_layers(left, collapse_left);
  auto right_layers = MonomialOrder::pulled_back_layers(right, collapse_right);
  layers.insert(layers.end(), right_layers.begin(), right_layers.end());

  MonomialOrder::Functional quad_tie;
  for (VariableId z : domain)
    quad_tie.coeffs[z] = -static_cast<std::int64_t>(z.j) * z.k;
  layers.emplace_back(std::move(quad_tie));

  std::vector<VariableId> ranking = domain;
  std::sort(ranking.begin(), ranking.end());
  MonomialOrder::GroupedLex tie;
  for (VariableId v : ranking) tie.groups.push_back({v});
  layers.emplace_back(std::move(tie));

  MonomialOrder order = MonomialOrder::from_layers(name, std::move(layers), std::move(domain));
  // Every Quad element over the order's domain must have its first-written
  // term initial.
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const TfpBlock& blk = blocks[b];
    const int block = static_cast<int>(b) + 1;
    for (int j1 = 1; j1 <= blk.alpha; ++j1)
      for (int j2 = j1 + 1; j2 <= blk.alpha; ++j2)
        for (int k1 = 1; k1 <= blk.beta; ++k1)
          for (int k2 = k1 + 1; k2 <= blk.beta; ++k2) {
            if (!order.contains(VariableId::pair(block, j1, k1)) ||
                !order.contains(VariableId::pair(block, j1, k2)) ||
                !order.contains(VariableId::pair(block, j2, k1)) ||
                !order.contains(VariableId::pair(block, j2, k2)))
              continue;
            Monomial a = Monomial::var(VariableId::pair(block, j1, k2)) *
                         Monomial::var(VariableId::pair(block, j2, k1));
            Monomial c = Monomial::var(VariableId::pair(block, j1, k1)) *
                         Monomial::var(VariableId::pair(block, j2, k2));
            require(order.compare(a, c) > 0,
                    "Quad element is not oriented by the lifted order");
          }
  }
  return order;
}

}  // namespace

BinomialSet lift_connection(const BinomialSet& F1t, const BinomialSet& F2t,
                            const ConnectionIndex& idx, LiftMode mode) {
  std::vector<TfpBlock> blocks{{idx.n1, idx.gamma2, 1, idx.gamma2},
                               {idx.gamma1, idx.n2, idx.gamma2 + 1, idx.n2}};
  return tfp_lift(F1t, F2t, blocks,
                  mode, mode == LiftMode::N ? idx.kept_vars() : idx.full_vars());
}

MonomialOrder connection_order(const MonomialOrder& left, const MonomialOrder& right,
                               const ConnectionIndex& idx, LiftMode mode) {
  std::vector<TfpBlock> blocks{{idx.n1, idx.gamma2, 1, idx.gamma2},
                               {idx.gamma1, idx.n2, idx.gamma2 + 1, idx.n2}};
  return tfp_order(left, right, blocks,
                   mode == LiftMode::N ? idx.kept_vars() : idx.full_vars(),
                   "tfp-lift[" + left.name() + "," + right.name() + "]");
}

BinomialSet direct_sum_generators(const BinomialSet& F1, int n1, const BinomialSet& F2, int n2) {
  std::vector<TfpBlock> blocks{{n1, n2, 1, n2}};
  std::vector<VariableId> ambient;
  for (int j = 1; j <= n1; ++j)
    for (int k = 1; k <= n2; ++k) ambient.push_back(VariableId::pair(1, j, k));
  return tfp_lift(F1, F2, blocks, LiftMode::Ntilde, std::move(ambient));
}

MonomialOrder direct_sum_order(const MonomialOrder& o1, const MonomialOrder& o2, int n1, int n2) {
  std::vector<TfpBlock> blocks{{n1, n2, 1, n2}};
  std::vector<VariableId> domain;
  for (int j = 1; j <= n1; ++j)
    for (int k = 1; k <= n2; ++k) domain.push_back(VariableId::pair(1, j, k));
  return tfp_order(o1, o2, blocks, std::move(domain),
                   "tfp-lift[" + o1.name() + "," + o2.name() + "]");
}

namespace {

Element relabel_second(Element e, Element c1, Element c2, int d1) {
  if (e == c2) return c1;
  return e < c2 ? d1 + e : d1 + e - 1;
}

Basis relabel_basis_second(const Basis& b, Element c1, Element c2, int d1) {
  Basis out;
  for (Element e : b) out.push_back(relabel_second(e, c1, c2, d1));
  std::sort(out.begin(), out.end());
  return out;
}

// Direct-sum fallback for degenerate basepoints, with the z1_j_k pair map.
ConnectionResult degenerate_connection(const Matroid& f1, const Matroid& f2,
                                       ConnectionRoute route) {
  Matroid sum = direct_sum(f1, f2);
  VarBasisMap map;
  for (int j = 1; j <= f1.basis_count(); ++j)
    for (int k = 1; k <= f2.basis_count(); ++k) {
      Basis b = f1.basis(j);
      for (Element e : f2.basis(k)) b.push_back(e + f1.ground_size());
      std::sort(b.begin(), b.end());
      map.entries.emplace_back(VariableId::pair(1, j, k), std::move(b));
    }
  return ConnectionResult{std::move(sum), std::move(map), route, std::make_pair(f1, f2)};
}

}  // namespace

ConnectionResult series_connection(const AnchoredMatroid& am1, const AnchoredMatroid& am2) {
  const Matroid& m1 = am1.matroid();
  const Matroid& m2 = am2.matroid();
  const Element c1 = am1.anchor(), c2 = am2.anchor();
  const int d1 = m1.ground_size();

  if (am1.anchor_is_loop())
    return degenerate_connection(contract_element(m1, c1).matroid, m2, ConnectionRoute::Loop1);
  if (am1.anchor_is_coloop())
    return degenerate_connection(m1, delete_element(m2, c2).matroid, ConnectionRoute::Coloop1);
  if (am2.anchor_is_loop())
    return degenerate_connection(m1, contract_element(m2, c2).matroid, ConnectionRoute::Loop2);
  if (am2.anchor_is_coloop())
    return degenerate_connection(delete_element(m1, c1).matroid, m2, ConnectionRoute::Coloop2);

  const int n1 = am1.basis_count(), g1 = am1.gamma();
  const int n2 = am2.basis_count(), g2 = am2.gamma();
  std::vector<Basis> bases;
  VarBasisMap map;
  for (int j = 1; j <= n1; ++j)
    for (int k = 1; k <= g2; ++k) {
      Basis b = am1.basis(j);
      Basis dk = relabel_basis_second(am2.basis(k), c1, c2, d1);
      b.insert(b.end(), dk.begin(), dk.end());
      std::sort(b.begin(), b.end());
      require(static_cast<int>(b.size()) == m1.rank() + m2.rank(),
              "series connection parts are not disjoint");
      map.entries.emplace_back(VariableId::pair(1, j, k), b);
      bases.push_back(std::move(b));
    }
  for (int j = 1; j <= g1; ++j)
    for (int k = g2 + 1; k <= n2; ++k) {
      Basis b = am1.basis(j);
      Basis dk = relabel_basis_second(am2.basis(k), c1, c2, d1);
      b.insert(b.end(), dk.begin(), dk.end());
      std::sort(b.begin(), b.end());
      require(static_cast<int>(b.size()) == m1.rank() + m2.rank(),
              "series connection parts are not disjoint");
      map.entries.emplace_back(VariableId::pair(2, j, k), b);
      bases.push_back(std::move(b));
    }
  Matroid s = Matroid::from_bases(d1 + m2.ground_size() - 1, std::move(bases));
  require(s.basis_count() == n1 * g2 + g1 * (n2 - g2),
          "series connection variable-basis map is not a bijection");
  return ConnectionResult{std::move(s), std::move(map), ConnectionRoute::Generic, std::nullopt};
}

ConnectionResult parallel_connection(const AnchoredMatroid& am1, const AnchoredMatroid& am2) {
  const Matroid& m1 = am1.matroid();
  const Matroid& m2 = am2.matroid();
  const Element c1 = am1.anchor(), c2 = am2.anchor();
  const int d1 = m1.ground_size();

  ConnectionResult s = series_connection(anchor(dual(m1), c1), anchor(dual(m2), c2));

  ConnectionRoute route = ConnectionRoute::Generic;
  switch (s.route) {
    case ConnectionRoute::Generic: route = ConnectionRoute::Generic; break;
    case ConnectionRoute::Loop1: route = ConnectionRoute::Coloop1; break;
    case ConnectionRoute::Coloop1: route = ConnectionRoute::Loop1; break;
    case ConnectionRoute::Loop2: route = ConnectionRoute::Coloop2; break;
    case ConnectionRoute::Coloop2: route = ConnectionRoute::Loop2; break;
  }

  if (route != ConnectionRoute::Generic) {
    // dual(A + B) = A* + B* with the same split of the ground set, so the
    // degenerate parallel connection is the direct sum of the dual factors.
    ConnectionResult p = degenerate_connection(dual(s.factors->first), dual(s.factors->second),
                                               route);
    require(p.matroid == dual(s.matroid),
            "degenerate parallel connection disagrees with the dual route");
    return p;
  }

  Matroid p = dual(s.matroid);
  VarBasisMap map;
  for (const auto& [v, b] : s.map.entries)
    map.entries.emplace_back(v, complement_basis(b, s.matroid.ground_size()));

  std::vector<Basis> direct;
  for (const Basis& b : m1.bases()) {
    const bool cb = std::binary_search(b.begin(), b.end(), c1);
    for (const Basis& dorig : m2.bases()) {
      const bool cd = std::binary_search(dorig.begin(), dorig.end(), c2);
      Basis dk = relabel_basis_second(dorig, c1, c2, d1);
      Basis u = b;
      u.insert(u.end(), dk.begin(), dk.end());
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      if (cb && cd) {
        direct.push_back(std::move(u));
      } else if (cb != cd) {
        Basis trimmed;
        for (Element e : u)
          if (e != c1) trimmed.push_back(e);
        direct.push_back(std::move(trimmed));
      }
    }
  }
  require(Matroid::from_bases(p.ground_size(), std::move(direct)) == p,
          "parallel connection disagrees with its direct description");
  return ConnectionResult{std::move(p), std::move(map), route, std::nullopt};
}

TwoSumResult two_sum_generators(const AnchoredMatroid& am1, const AnchoredMatroid& am2,
                                const BinomialSet& F1, const BinomialSet& F2) {
  if (am1.anchor_is_loop() || am1.anchor_is_coloop() || am2.anchor_is_loop() ||
      am2.anchor_is_coloop())
    throw DegenerateAnchorError("2-sum requires a basepoint that is neither a loop nor a coloop");

  const ConnectionIndex idx{am1.basis_count(), am1.gamma(), am2.basis_count(), am2.gamma()};
  ConnectionResult s = series_connection(am1, am2);

  BinomialSet f1t = lift_series_tilde(F1, idx.gamma1, idx.n1, 1);
  BinomialSet f2t = lift_series_tilde(F2, idx.gamma2, idx.n2, 2);
  BinomialSet n = lift_connection(f1t, f2t, idx, LiftMode::N);

  // Variables whose basis contains the basepoint: block 1 with j > gamma1,
  // and all of block 2.
  std::vector<VariableId> cvars;
  for (int j = idx.gamma1 + 1; j <= idx.n1; ++j)
    for (int k = 1; k <= idx.gamma2; ++k) cvars.push_back(VariableId::pair(1, j, k));
  for (int j = 1; j <= idx.gamma1; ++j)
    for (int k = idx.gamma2 + 1; k <= idx.n2; ++k) cvars.push_back(VariableId::pair(2, j, k));
  BinomialSet restricted = restrict_to_vars(n, cvars);

  MinorResult con = contract_element(s.matroid, am1.anchor());
  VarBasisMap map;
  for (VariableId v : cvars) {
    const Basis* sb = s.map.basis_for(v);
    require(sb != nullptr, "missing basis for kept 2-sum variable");
    Basis dropped;
    for (Element e : *sb)
      if (e != am1.anchor())
        dropped.push_back(con.relabel.old_to_new[static_cast<std::size_t>(e - 1)]);
    map.entries.emplace_back(v, std::move(dropped));
  }
  require(static_cast<int>(map.entries.size()) == con.matroid.basis_count(),
          "2-sum variable-basis map is not a bijection");
  return TwoSumResult{std::move(con.matroid), std::move(restricted), std::move(map)};
}

std::vector<std::pair<VariableId, VariableId>> anchored_renaming(const AnchoredMatroid& am) {
  std::vector<std::pair<VariableId, VariableId>> renames;
  for (int pos = 1; pos <= am.basis_count(); ++pos) {
    const int canonical = am.order()[static_cast<std::size_t>(pos - 1)] + 1;
    renames.emplace_back(VariableId::basis(1, canonical), VariableId::basis(1, pos));
  }
  return renames;
}

}  // namespace matoric
