#include "matoric/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace matoric {

ElementMask mask_of(const Basis& b) {
  ElementMask m = 0;
  for (Element e : b) m |= ElementMask{1} << (e - 1);
  return m;
}

Basis basis_of(ElementMask m) {
  Basis b;
  for (int e = 1; m != 0; ++e, m >>= 1)
    if (m & 1) b.push_back(e);
  return b;
}

Matroid Matroid::from_bases(int ground_size, std::vector<Basis> bases) {
  if (ground_size < 1 || ground_size > 31)
    throw BadParamsError("ground size must be in 1..31");
  if (bases.empty()) throw EmptyBasesError();
  for (auto& b : bases) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    for (Element e : b)
      if (e < 1 || e > ground_size) throw BadParamsError("basis element out of range");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  const std::size_t r = bases[0].size();
  for (const auto& b : bases)
    if (b.size() != r) throw UnequalCardinalityError(bases[0], b);

  Matroid m;
  m.d_ = ground_size;
  m.bases_ = std::move(bases);
  m.masks_.reserve(m.bases_.size());
  for (const auto& b : m.bases_) {
    ElementMask mask = mask_of(b);
    m.masks_.push_back(mask);
    m.lookup_.insert(mask);
  }

  // Exchange axiom, brute force over all (B, B', x).
  for (ElementMask b1 : m.masks_) {
    for (ElementMask b2 : m.masks_) {
      ElementMask diff = b1 & ~b2;
      while (diff != 0) {
        ElementMask xbit = diff & (~diff + 1);
        diff &= diff - 1;
        ElementMask candidates = b2 & ~b1;
        bool found = false;
        while (candidates != 0) {
          ElementMask ybit = candidates & (~candidates + 1);
          candidates &= candidates - 1;
          if (m.lookup_.count((b1 & ~xbit) | ybit)) {
            found = true;
            break;
          }
        }
        if (!found)
          throw ExchangeError(basis_of(b1), basis_of(b2), std::countr_zero(xbit) + 1);
      }
    }
  }
  return m;
}

int Matroid::basis_index(ElementMask m) const {
  for (std::size_t i = 0; i < masks_.size(); ++i)
    if (masks_[i] == m) return static_cast<int>(i) + 1;
  return 0;
}

AnchoredMatroid::AnchoredMatroid(Matroid m, Element c) : matroid_(std::move(m)), anchor_(c) {
  if (c < 1 || c > matroid_.ground_size())
    throw BadParamsError("anchor element out of range");
  const ElementMask cbit = ElementMask{1} << (c - 1);
  for (int i = 0; i < matroid_.basis_count(); ++i)
    if (!(matroid_.masks()[static_cast<std::size_t>(i)] & cbit)) order_.push_back(i);
  gamma_ = static_cast<int>(order_.size());
  for (int i = 0; i < matroid_.basis_count(); ++i)
    if (matroid_.masks()[static_cast<std::size_t>(i)] & cbit) order_.push_back(i);
}

AnchoredMatroid anchor(const Matroid& m, Element c) { return AnchoredMatroid(m, c); }

int rank_of_subset(const Matroid& m, ElementMask subset) {
  int best = 0;
  for (ElementMask b : m.masks()) best = std::max(best, std::popcount(b & subset));
  return best;
}

int rank_of_subset(const Matroid& m, const std::vector<Element>& subset) {
  return rank_of_subset(m, mask_of(subset));
}

ElementClass classify_elements(const Matroid& m) {
  ElementMask in_some = 0;
  ElementMask in_all = ~ElementMask{0};
  for (ElementMask b : m.masks()) {
    in_some |= b;
    in_all &= b;
  }
  ElementClass ec;
  for (Element e = 1; e <= m.ground_size(); ++e) {
    ElementMask bit = ElementMask{1} << (e - 1);
    if (!(in_some & bit)) ec.loops.push_back(e);
    if (in_all & bit) ec.coloops.push_back(e);
  }
  return ec;
}

Matroid dual(const Matroid& m) {
  std::vector<Basis> cobases;
  cobases.reserve(m.bases().size());
  const ElementMask full = (ElementMask{1} << m.ground_size()) - 1;
  for (ElementMask b : m.masks()) cobases.push_back(basis_of(full & ~b));
  return Matroid::from_bases(m.ground_size(), std::move(cobases));
}

namespace {

Relabeling compaction(int d, Element removed) {
  Relabeling r;
  r.old_to_new.assign(static_cast<std::size_t>(d), 0);
  for (Element e = 1; e <= d; ++e) {
    if (e == removed) continue;
    r.old_to_new[static_cast<std::size_t>(e - 1)] = e < removed ? e : e - 1;
    r.new_to_old.push_back(e);
  }
  return r;
}

}  // namespace

MinorResult delete_element(const Matroid& m, Element c) {
  if (c < 1 || c > m.ground_size()) throw BadParamsError("element out of range");
  if (m.ground_size() == 1) throw BadParamsError("cannot delete the last element");
  const ElementMask cbit = ElementMask{1} << (c - 1);
  ElementMask in_all = ~ElementMask{0};
  for (ElementMask b : m.masks()) in_all &= b;
  const bool coloop = (in_all & cbit) != 0;

  Relabeling relabel = compaction(m.ground_size(), c);
  std::vector<Basis> out;
  for (ElementMask b : m.masks()) {
    if (coloop) {
      Basis nb;
      for (Element e : basis_of(b & ~cbit))
        nb.push_back(relabel.old_to_new[static_cast<std::size_t>(e - 1)]);
      out.push_back(std::move(nb));
    } else if (!(b & cbit)) {
      Basis nb;
      for (Element e : basis_of(b))
        nb.push_back(relabel.old_to_new[static_cast<std::size_t>(e - 1)]);
      out.push_back(std::move(nb));
    }
  }
  return {Matroid::from_bases(m.ground_size() - 1, std::move(out)), std::move(relabel)};
}

MinorResult contract_element(const Matroid& m, Element c) {
  // M/c = (M* \ c)*
  MinorResult del = delete_element(dual(m), c);
  return {dual(del.matroid), std::move(del.relabel)};
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  const int d = m1.ground_size() + m2.ground_size();
  std::vector<Basis> out;
  out.reserve(m1.bases().size() * m2.bases().size());
  for (const auto& b : m1.bases()) {
    for (const auto& c : m2.bases()) {
      Basis nb = b;
      for (Element e : c) nb.push_back(e + m1.ground_size());
      out.push_back(std::move(nb));
    }
  }
  return Matroid::from_bases(d, std::move(out));
}

namespace {

struct IsoContext {
  const Matroid* m1;
  const Matroid* m2;
  std::vector<int> deg1, deg2;                 // element -> number of bases containing it
  std::vector<std::vector<int>> pair1, pair2;  // pair degree matrices
  std::vector<Element> assign;                 // assign[e-1] for m1 elements, 0 = unset
  std::vector<bool> used;
};

bool iso_extend(IsoContext& ctx, int e) {
  const int d = ctx.m1->ground_size();
  if (e > d) {
    // Full map: check bases carry over.
    for (ElementMask b : ctx.m1->masks()) {
      ElementMask image = 0;
      for (Element x = 1; x <= d; ++x)
        if (b & (ElementMask{1} << (x - 1)))
          image |= ElementMask{1} << (ctx.assign[static_cast<std::size_t>(x - 1)] - 1);
      if (!ctx.m2->has_basis(image)) return false;
    }
    return true;
  }
  for (Element t = 1; t <= d; ++t) {
    if (ctx.used[static_cast<std::size_t>(t - 1)]) continue;
    if (ctx.deg1[static_cast<std::size_t>(e - 1)] != ctx.deg2[static_cast<std::size_t>(t - 1)]) continue;
    bool ok = true;
    for (Element p = 1; p < e && ok; ++p) {
      int img = ctx.assign[static_cast<std::size_t>(p - 1)];
      if (ctx.pair1[static_cast<std::size_t>(e - 1)][static_cast<std::size_t>(p - 1)] !=
          ctx.pair2[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(img - 1)])
        ok = false;
    }
    if (!ok) continue;
    ctx.assign[static_cast<std::size_t>(e - 1)] = t;
    ctx.used[static_cast<std::size_t>(t - 1)] = true;
    if (iso_extend(ctx, e + 1)) return true;
    ctx.assign[static_cast<std::size_t>(e - 1)] = 0;
    ctx.used[static_cast<std::size_t>(t - 1)] = false;
  }
  return false;
}

std::vector<int> element_degrees(const Matroid& m) {
  std::vector<int> deg(static_cast<std::size_t>(m.ground_size()), 0);
  for (ElementMask b : m.masks())
    for (Element e = 1; e <= m.ground_size(); ++e)
      if (b & (ElementMask{1} << (e - 1))) ++deg[static_cast<std::size_t>(e - 1)];
  return deg;
}

std::vector<std::vector<int>> pair_degrees(const Matroid& m) {
  const std::size_t d = static_cast<std::size_t>(m.ground_size());
  std::vector<std::vector<int>> pd(d, std::vector<int>(d, 0));
  for (ElementMask b : m.masks())
    for (std::size_t e = 0; e < d; ++e)
      if (b & (ElementMask{1} << e))
        for (std::size_t f = 0; f < d; ++f)
          if (b & (ElementMask{1} << f)) ++pd[e][f];
  return pd;
}

}  // namespace

std::optional<std::vector<Element>> is_isomorphic(const Matroid& m1, const Matroid& m2) {
  if (m1.ground_size() != m2.ground_size() || m1.rank() != m2.rank() ||
      m1.basis_count() != m2.basis_count())
    return std::nullopt;
  IsoContext ctx;
  ctx.m1 = &m1;
  ctx.m2 = &m2;
  ctx.deg1 = element_degrees(m1);
  ctx.deg2 = element_degrees(m2);
  auto sorted1 = ctx.deg1, sorted2 = ctx.deg2;
  std::sort(sorted1.begin(), sorted1.end());
  std::sort(sorted2.begin(), sorted2.end());
  if (sorted1 != sorted2) return std::nullopt;
  ctx.pair1 = pair_degrees(m1);
  ctx.pair2 = pair_degrees(m2);
  ctx.assign.assign(static_cast<std::size_t>(m1.ground_size()), 0);
  ctx.used.assign(static_cast<std::size_t>(m1.ground_size()), false);
  if (iso_extend(ctx, 1)) return ctx.assign;
  return std::nullopt;
}

namespace {

struct MinorMemo {
  // invariant fingerprint -> representatives with known answers
  std::map<std::vector<int>, std::vector<std::pair<Matroid, bool>>> buckets;
};

std::vector<int> fingerprint(const Matroid& m) {
  std::vector<int> fp{m.ground_size(), m.rank(), m.basis_count()};
  auto deg = element_degrees(m);
  std::sort(deg.begin(), deg.end());
  fp.insert(fp.end(), deg.begin(), deg.end());
  return fp;
}

bool has_minor_rec(const Matroid& m, const Matroid& target, MinorMemo& memo) {
  if (m.ground_size() < target.ground_size()) return false;
  if (m.rank() < target.rank()) return false;
  if (m.ground_size() - m.rank() < target.ground_size() - target.rank()) return false;
  if (m.ground_size() == target.ground_size())
    return is_isomorphic(m, target).has_value();

  auto fp = fingerprint(m);
  auto& bucket = memo.buckets[fp];
  for (const auto& [rep, answer] : bucket)
    if (is_isomorphic(m, rep)) return answer;

  bool answer = false;
  for (Element e = 1; e <= m.ground_size() && !answer; ++e) {
    if (has_minor_rec(delete_element(m, e).matroid, target, memo)) answer = true;
    if (!answer && has_minor_rec(contract_element(m, e).matroid, target, memo)) answer = true;
  }
  memo.buckets[fp].emplace_back(m, answer);
  return answer;
}

}  // namespace

bool has_minor(const Matroid& m, const Matroid& target) {
  MinorMemo memo;
  return has_minor_rec(m, target, memo);
}

int connectivity_lambda(const Matroid& m, ElementMask subset) {
  const ElementMask full = (ElementMask{1} << m.ground_size()) - 1;
  return rank_of_subset(m, subset) + rank_of_subset(m, full & ~subset) - m.rank();
}

int connectivity_lambda(const Matroid& m, const std::vector<Element>& subset) {
  return connectivity_lambda(m, mask_of(subset));
}

bool is_n_connected(const Matroid& m, int n) {
  if (n < 2) throw BadParamsError("n-connectedness requires n >= 2");
  const ElementMask full = (ElementMask{1} << m.ground_size()) - 1;
  for (ElementMask x = 0; x <= full; ++x) {
    const int side = std::min(std::popcount(x), std::popcount(full & ~x));
    const int lam = connectivity_lambda(m, x);
    for (int k = 1; k < n; ++k)
      if (lam < k && side >= k) return false;
  }
  return true;
}

}  // namespace matoric
