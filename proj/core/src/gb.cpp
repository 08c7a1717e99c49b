#include "matoric/gb.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>

#include "matoric/errors.hpp"

namespace matoric {

Binomial s_binomial(const Binomial& f, const Binomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) return Binomial::zero();
  Monomial l = Monomial::lcm(f.lead(), g.lead());
  Monomial u = l.divided_by(f.lead()) * f.trail();
  Monomial v = l.divided_by(g.lead()) * g.trail();
  return Binomial::oriented(std::move(u), std::move(v), order);
}

namespace {

// Dense engine: monomials as exponent vectors over the ambient (at most 64
// variables at desk scale), with support bitmasks prefiltering divisor
// scans. The compiled order replays the MonomialOrder layers over vector
// indices, so orientations agree exactly with the public compare.
struct DenseMon {
  std::vector<int> e;
  int deg = 0;
  std::uint64_t support = 0;
};

struct DenseBin {
  DenseMon lead, trail;
};

class Ctx {
 public:
  Ctx(const std::vector<VariableId>& ambient, const MonomialOrder& order) : vars_(ambient) {
    if (vars_.size() > 64) throw BadParamsError("more than 64 variables in one computation");
    for (VariableId v : vars_)
      if (!order.contains(v)) throw UnknownVariableError(v.name());
    for (std::size_t i = 0; i < vars_.size(); ++i) index_.emplace(vars_[i], static_cast<int>(i));
    for (const auto& layer : order.layers()) {
      CLayer cl;
      if (const auto* f = std::get_if<MonomialOrder::Functional>(&layer)) {
        cl.kind = CLayer::Func;
        cl.coeff.assign(vars_.size(), 0);
        bool any = false;
        for (const auto& [v, c] : f->coeffs) {
          auto it = index_.find(v);
          if (it != index_.end() && c != 0) {
            cl.coeff[static_cast<std::size_t>(it->second)] = c;
            any = true;
          }
        }
        if (!any) continue;
      } else if (const auto* gl = std::get_if<MonomialOrder::GroupedLex>(&layer)) {
        cl.kind = CLayer::GLex;
        compile_groups(gl->groups, cl);
        if (cl.groups.empty()) continue;
      } else {
        cl.kind = CLayer::GRevLex;
        compile_groups(std::get<MonomialOrder::GroupedRevLex>(layer).groups, cl);
        if (cl.groups.empty()) continue;
      }
      layers_.push_back(std::move(cl));
    }
  }

  std::size_t nvars() const { return vars_.size(); }

  DenseMon to_dense(const Monomial& m) const {
    DenseMon d;
    d.e.assign(vars_.size(), 0);
    for (const auto& [v, exp] : m.entries()) {
      auto it = index_.find(v);
      if (it == index_.end()) throw UnknownVariableError(v.name());
      d.e[static_cast<std::size_t>(it->second)] = exp;
      d.deg += exp;
      d.support |= std::uint64_t{1} << it->second;
    }
    return d;
  }

  Monomial to_sparse(const DenseMon& d) const {
    Monomial out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (d.e[i] > 0) out = out * Monomial::var(vars_[i], d.e[i]);
    return out;
  }

  static bool divides(const DenseMon& a, const DenseMon& b) {
    if ((a.support & ~b.support) != 0 || a.deg > b.deg) return false;
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] > b.e[i]) return false;
    return true;
  }

  static bool coprime(const DenseMon& a, const DenseMon& b) {
    return (a.support & b.support) == 0;
  }

  static DenseMon mul(const DenseMon& a, const DenseMon& b) {
    DenseMon out = a;
    for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] += b.e[i];
    out.deg += b.deg;
    out.support |= b.support;
    return out;
  }

  // a / b, assuming b | a.
  static DenseMon div(const DenseMon& a, const DenseMon& b) {
    DenseMon out;
    out.e.assign(a.e.size(), 0);
    for (std::size_t i = 0; i < a.e.size(); ++i) {
      out.e[i] = a.e[i] - b.e[i];
      out.deg += out.e[i];
      if (out.e[i] > 0) out.support |= std::uint64_t{1} << i;
    }
    return out;
  }

  static DenseMon lcm(const DenseMon& a, const DenseMon& b) {
    DenseMon out;
    out.e.assign(a.e.size(), 0);
    for (std::size_t i = 0; i < a.e.size(); ++i) {
      out.e[i] = std::max(a.e[i], b.e[i]);
      out.deg += out.e[i];
    }
    out.support = a.support | b.support;
    return out;
  }

  std::strong_ordering cmp(const DenseMon& a, const DenseMon& b) const {
    for (const CLayer& layer : layers_) {
      switch (layer.kind) {
        case CLayer::Func: {
          __int128 da = 0, db = 0;
          for (std::size_t i = 0; i < layer.coeff.size(); ++i) {
            if (layer.coeff[i] == 0) continue;
            da += static_cast<__int128>(layer.coeff[i]) * a.e[i];
            db += static_cast<__int128>(layer.coeff[i]) * b.e[i];
          }
          if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
          break;
        }
        case CLayer::GLex:
          for (const auto& group : layer.groups) {
            long sa = 0, sb = 0;
            for (int i : group) {
              sa += a.e[static_cast<std::size_t>(i)];
              sb += b.e[static_cast<std::size_t>(i)];
            }
            if (sa != sb) return sa <=> sb;
          }
          break;
        case CLayer::GRevLex:
          for (std::size_t g = layer.groups.size(); g-- > 0;) {
            long sa = 0, sb = 0;
            for (int i : layer.groups[g]) {
              sa += a.e[static_cast<std::size_t>(i)];
              sb += b.e[static_cast<std::size_t>(i)];
            }
            if (sa != sb) return sb <=> sa;
          }
          break;
      }
    }
    return std::strong_ordering::equal;
  }

  // Orients (possibly swapping); zero when equal.
  bool orient(DenseBin& b) const {
    auto c = cmp(b.lead, b.trail);
    if (c == 0) return false;
    if (c < 0) std::swap(b.lead, b.trail);
    return true;
  }

 private:
  struct CLayer {
    enum Kind { Func, GLex, GRevLex } kind = Func;
    std::vector<std::int64_t> coeff;
    std::vector<std::vector<int>> groups;
  };

  void compile_groups(const std::vector<std::vector<VariableId>>& groups, CLayer& cl) const {
    for (const auto& group : groups) {
      std::vector<int> g;
      for (VariableId v : group) {
        auto it = index_.find(v);
        if (it != index_.end()) g.push_back(it->second);
      }
      cl.groups.push_back(std::move(g));
    }
  }

  std::vector<VariableId> vars_;
  std::unordered_map<VariableId, int> index_;
  std::vector<CLayer> layers_;
};

// Reduction view over a basis: indices scanned in ascending lead degree so
// cheap divisors are found early.
class Reducers {
 public:
  void push(const std::vector<DenseBin>& basis, int idx) {
    const int deg = basis[static_cast<std::size_t>(idx)].lead.deg;
    auto it = std::upper_bound(by_degree_.begin(), by_degree_.end(), deg,
                               [&basis](int d, int i) {
                                 return d < basis[static_cast<std::size_t>(i)].lead.deg;
                               });
    by_degree_.insert(it, idx);
  }

  int find(const DenseMon& m, const std::vector<DenseBin>& basis) const {
    for (int i : by_degree_) {
      const DenseMon& l = basis[static_cast<std::size_t>(i)].lead;
      if (l.deg > m.deg) return -1;
      if ((l.support & ~m.support) != 0) continue;
      bool ok = true;
      for (std::size_t k = 0; k < l.e.size(); ++k)
        if (l.e[k] > m.e[k]) {
          ok = false;
          break;
        }
      if (ok) return i;
    }
    return -1;
  }

 private:
  std::vector<int> by_degree_;
};

DenseMon dense_nf(DenseMon m, const std::vector<DenseBin>& basis, const Reducers& reducers) {
  for (;;) {
    int r = reducers.find(m, basis);
    if (r < 0) return m;
    const DenseBin& g = basis[static_cast<std::size_t>(r)];
    m = Ctx::mul(Ctx::div(m, g.lead), g.trail);
  }
}

DenseMon dense_nf(DenseMon m, const std::vector<DenseBin>& basis) {
  Reducers reducers;
  for (std::size_t i = 0; i < basis.size(); ++i) reducers.push(basis, static_cast<int>(i));
  return dense_nf(std::move(m), basis, reducers);
}

// Pending S-pairs bucketed by lcm degree; within a degree, popped in (i,j)
// order. Pair pruning follows the Gebauer-Moeller update at insertion time
// (M, F and coprime criteria over the new pairs) plus the chain criterion
// at pop time; both only ever cite pairs settled earlier in this
// deterministic schedule.
class PairQueue {
 public:
  void push(int i, int j, int lcm_degree) {
    buckets_[lcm_degree].emplace(i, j);
    pending_.insert(code(i, j));
  }
  bool empty() const { return buckets_.empty(); }
  std::pair<int, int> pop() {
    auto bucket = buckets_.begin();
    std::pair<int, int> p = *bucket->second.begin();
    bucket->second.erase(bucket->second.begin());
    if (bucket->second.empty()) buckets_.erase(bucket);
    pending_.erase(code(p.first, p.second));
    return p;
  }
  bool pending(int i, int j) const {
    if (i > j) std::swap(i, j);
    return pending_.count(code(i, j)) != 0;
  }

 private:
  static std::uint64_t code(int i, int j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
  }
  std::map<int, std::set<std::pair<int, int>>> buckets_;
  std::unordered_set<std::uint64_t> pending_;
};

// Chain criterion: the pair (i,j) is redundant if some other element's
// lead divides lcm(i,j) strictly finer and both sub-pairs are already
// settled (processed or discarded earlier).
bool chain_redundant(int i, int j, const DenseMon& lij, const std::vector<DenseBin>& basis,
                     const PairQueue& queue) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const int ki = static_cast<int>(k);
    if (ki == i || ki == j) continue;
    const DenseMon& lk = basis[k].lead;
    if ((lk.support & ~lij.support) != 0) continue;
    if (!Ctx::divides(lk, lij)) continue;
    if (queue.pending(i, ki) || queue.pending(j, ki)) continue;
    DenseMon lik = Ctx::lcm(basis[static_cast<std::size_t>(i)].lead, lk);
    if (lik.e == lij.e) continue;
    DenseMon ljk = Ctx::lcm(basis[static_cast<std::size_t>(j)].lead, lk);
    if (ljk.e == lij.e) continue;
    return true;
  }
  return false;
}

// Gebauer-Moeller update for the pairs (i, added), i < added: among equal
// lcms keep the smallest i (F), drop lcms another candidate's lcm properly
// divides (M), drop coprime survivors (P).
void queue_pairs(int added, const std::vector<DenseBin>& basis, PairQueue& queue) {
  const DenseMon& lg = basis[static_cast<std::size_t>(added)].lead;
  struct Cand {
    int i;
    DenseMon lcm;
  };
  std::vector<Cand> cands;
  cands.reserve(static_cast<std::size_t>(added));
  for (int i = 0; i < added; ++i)
    cands.push_back(Cand{i, Ctx::lcm(basis[static_cast<std::size_t>(i)].lead, lg)});
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
    return a.lcm.e < b.lcm.e;  // groups equal lcms; F keeps the first (smallest i)
  });
  std::vector<const Cand*> kept;
  for (const Cand& c : cands) {
    bool drop = false;
    for (const Cand* k : kept) {
      if (k->lcm.deg > c.lcm.deg) break;
      if ((k->lcm.support & ~c.lcm.support) != 0) continue;
      if (k->lcm.e == c.lcm.e || Ctx::divides(k->lcm, c.lcm)) {
        drop = true;
        break;
      }
    }
    if (drop) continue;
    kept.push_back(&c);
    if (Ctx::coprime(basis[static_cast<std::size_t>(c.i)].lead, lg)) continue;  // P
    queue.push(c.i, added, c.lcm.deg);
  }
}

std::vector<DenseBin> densify(const BinomialSet& set, const Ctx& ctx) {
  std::vector<DenseBin> out;
  for (const Binomial& b : set.elements()) {
    DenseBin d{ctx.to_dense(b.lead()), ctx.to_dense(b.trail())};
    if (ctx.orient(d)) out.push_back(std::move(d));
  }
  // Deterministic processing order.
  std::sort(out.begin(), out.end(), [&ctx](const DenseBin& a, const DenseBin& b) {
    auto c = ctx.cmp(a.lead, b.lead);
    if (c != 0) return c < 0;
    return ctx.cmp(a.trail, b.trail) < 0;
  });
  return out;
}

std::vector<DenseBin> complete(const BinomialSet& set, const Ctx& ctx) {
  std::vector<DenseBin> basis;
  Reducers reducers;
  PairQueue queue;
  auto append = [&basis, &reducers, &queue](DenseBin h) {
    basis.push_back(std::move(h));
    const int idx = static_cast<int>(basis.size()) - 1;
    reducers.push(basis, idx);
    queue_pairs(idx, basis, queue);
  };
  for (const DenseBin& gen : densify(set, ctx)) {
    DenseBin g{dense_nf(gen.lead, basis, reducers), dense_nf(gen.trail, basis, reducers)};
    if (!ctx.orient(g)) continue;
    append(std::move(g));
  }
  while (!queue.empty()) {
    auto [pi, pj] = queue.pop();
    const DenseBin& f = basis[static_cast<std::size_t>(pi)];
    const DenseBin& g = basis[static_cast<std::size_t>(pj)];
    DenseMon lij = Ctx::lcm(f.lead, g.lead);
    if (chain_redundant(pi, pj, lij, basis, queue)) continue;
    DenseMon u = Ctx::mul(Ctx::div(lij, f.lead), f.trail);
    DenseMon v = Ctx::mul(Ctx::div(lij, g.lead), g.trail);
    DenseBin h{dense_nf(std::move(u), basis, reducers), dense_nf(std::move(v), basis, reducers)};
    if (!ctx.orient(h)) continue;
    append(std::move(h));
  }
  return basis;
}

BinomialSet reduce_basis(std::vector<DenseBin> basis, const std::vector<VariableId>& ambient,
                         const Ctx& ctx, const MonomialOrder& order) {
  std::sort(basis.begin(), basis.end(), [&ctx](const DenseBin& a, const DenseBin& b) {
    auto c = ctx.cmp(a.lead, b.lead);
    if (c != 0) return c < 0;
    return ctx.cmp(a.trail, b.trail) < 0;
  });
  std::vector<DenseBin> minimal;
  for (DenseBin& g : basis) {
    bool redundant = false;
    for (const DenseBin& h : minimal)
      if (Ctx::divides(h.lead, g.lead)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Binomial> out;
  out.reserve(minimal.size());
  for (const DenseBin& g : minimal) {
    DenseMon t = dense_nf(g.trail, minimal);
    out.push_back(Binomial::oriented(ctx.to_sparse(g.lead), ctx.to_sparse(t), order));
  }
  return BinomialSet::make(ambient, std::move(out), &order);
}

}  // namespace

Monomial normal_form(const Monomial& m, const BinomialSet& set, const MonomialOrder& order) {
  Ctx ctx(set.ambient(), order);
  std::vector<DenseBin> basis = densify(set, ctx);
  return ctx.to_sparse(dense_nf(ctx.to_dense(m), basis));
}

Binomial normal_form(const Binomial& b, const BinomialSet& set, const MonomialOrder& order) {
  if (b.is_zero()) return b;
  Ctx ctx(set.ambient(), order);
  std::vector<DenseBin> basis = densify(set, ctx);
  DenseBin d{dense_nf(ctx.to_dense(b.lead()), basis), dense_nf(ctx.to_dense(b.trail()), basis)};
  if (!ctx.orient(d)) return Binomial::zero();
  return Binomial::oriented(ctx.to_sparse(d.lead), ctx.to_sparse(d.trail), order);
}

BinomialSet buchberger(const BinomialSet& set, const MonomialOrder& order) {
  Ctx ctx(set.ambient(), order);
  return reduce_basis(complete(set, ctx), set.ambient(), ctx, order);
}

bool is_groebner(const BinomialSet& set, const MonomialOrder& order) {
  Ctx ctx(set.ambient(), order);
  std::vector<DenseBin> basis = densify(set, ctx);
  // Settle S-pairs in ascending lcm order so the chain criterion only
  // relies on pairs already checked.
  Reducers reducers;
  for (std::size_t i = 0; i < basis.size(); ++i) reducers.push(basis, static_cast<int>(i));
  PairQueue queue;
  for (std::size_t j = 1; j < basis.size(); ++j)
    queue_pairs(static_cast<int>(j), basis, queue);
  while (!queue.empty()) {
    auto [pi, pj] = queue.pop();
    const DenseBin& f = basis[static_cast<std::size_t>(pi)];
    const DenseBin& g = basis[static_cast<std::size_t>(pj)];
    DenseMon lij = Ctx::lcm(f.lead, g.lead);
    if (chain_redundant(pi, pj, lij, basis, queue)) continue;
    DenseMon u = dense_nf(Ctx::mul(Ctx::div(lij, f.lead), f.trail), basis, reducers);
    DenseMon v = dense_nf(Ctx::mul(Ctx::div(lij, g.lead), g.trail), basis, reducers);
    if (u.e != v.e) return false;
  }
  return true;
}

bool ideals_equal(const BinomialSet& a, const BinomialSet& b, const MonomialOrder& order) {
  if (!a.same_ambient(b)) throw AmbientMismatchError();
  return buchberger(a, order) == buchberger(b, order);
}

BinomialSet restrict_to_vars(const BinomialSet& set, std::vector<VariableId> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (VariableId v : keep)
    if (!std::binary_search(set.ambient().begin(), set.ambient().end(), v))
      throw BadParamsError("restriction variable not in ambient: " + v.name());
  std::unordered_set<VariableId> allowed(keep.begin(), keep.end());
  std::vector<Binomial> elems;
  for (const Binomial& g : set.elements()) {
    bool inside = true;
    for (const auto& [v, e] : g.lead().entries())
      if (!allowed.count(v)) inside = false;
    for (const auto& [v, e] : g.trail().entries())
      if (!allowed.count(v)) inside = false;
    if (inside) elems.push_back(g);
  }
  return BinomialSet::keep_orientation(std::move(keep), std::move(elems));
}

}  // namespace matoric
