// Acceptance suite: runs every criterion end to end against the
// elimination oracle and prints one PASS/FAIL line per criterion. All
// comparisons are exact symbolic equalities at desk scale.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "matoric/catalog.hpp"
#include "matoric/exchange.hpp"
#include "matoric/io.hpp"
#include "matoric/pipeline.hpp"

using namespace matoric;

namespace {

// Deterministic PRNG (splitmix64) so every run checks the same instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

struct Failures {
  std::vector<std::string> items;
  void add(const std::string& msg) { items.push_back(msg); }
  void expect(bool ok, const std::string& msg) {
    if (!ok) add(msg);
  }
};

std::string describe(const Matroid& m) {
  std::ostringstream ss;
  ss << "matroid(d=" << m.ground_size() << ", r=" << m.rank() << ", n=" << m.basis_count() << ")";
  return ss.str();
}

// ---------------------------------------------------------------------
// Shared suite construction
// ---------------------------------------------------------------------

std::vector<Matroid> catalog_matroids() {
  std::vector<Matroid> out;
  for (int n = 1; n <= 7; ++n)
    for (int r = 0; r <= n; ++r) out.push_back(uniform(r, n));
  out.push_back(named(NamedMatroid::MK4));
  out.push_back(named(NamedMatroid::W3));
  out.push_back(named(NamedMatroid::P6));
  out.push_back(named(NamedMatroid::Q6));
  return out;
}

bool iso_member(const Matroid& m, const std::vector<Matroid>& list) {
  for (const Matroid& other : list)
    if (is_isomorphic(m, other).has_value()) return true;
  return false;
}

// All minors of the catalog with at most `max_d` elements, up to
// isomorphism (including catalog members of that size).
std::vector<Matroid> small_catalog_minors(int max_d) {
  std::vector<Matroid> frontier = catalog_matroids();
  std::vector<Matroid> found;
  while (!frontier.empty()) {
    std::vector<Matroid> next;
    for (const Matroid& m : frontier) {
      if (m.ground_size() <= max_d && !iso_member(m, found)) found.push_back(m);
      if (m.ground_size() <= 1) continue;
      if (m.ground_size() > max_d + 1 && m.ground_size() > 6) {
        // Still far above the target size: only descend, dedup later.
      }
      for (Element c = 1; c <= m.ground_size(); ++c) {
        Matroid del = delete_element(m, c).matroid;
        if (del.ground_size() >= 1 && !iso_member(del, next) && !iso_member(del, found))
          next.push_back(del);
        Matroid con = contract_element(m, c).matroid;
        if (con.ground_size() >= 1 && !iso_member(con, next) && !iso_member(con, found))
          next.push_back(con);
      }
    }
    // Only keep descending from minors that can still reach max_d.
    std::vector<Matroid> keep;
    for (Matroid& m : next)
      if (m.ground_size() > max_d)
        keep.push_back(std::move(m));
      else if (!iso_member(m, found))
        found.push_back(std::move(m));
    frontier = std::move(keep);
  }
  return found;
}

// The White instance suite of criterion 2 (also reused by 3 and 9).
// Rank-0 minors are excluded: their toric ideal is <x - 1>, which is not
// homogeneous, has no exchange relations, and sits outside the homogeneous
// setting of every statement checked here. Criterion 2 still pins their
// degenerate behavior explicitly.
std::vector<Matroid> white_suite() {
  std::vector<Matroid> suite{uniform(2, 4), uniform(2, 5), uniform(3, 5), uniform(3, 6),
                             named(NamedMatroid::MK4)};
  for (Matroid& m : small_catalog_minors(5))
    if (m.rank() >= 1 && !iso_member(m, suite)) suite.push_back(std::move(m));
  return suite;
}

// Orders searched by criterion 2 on top of the spec defaults: two weight
// vectors found once by a seeded random search and pinned (they make the
// exchange sets of U_{3,6} and M(K4) Groebner bases), then the seeded
// random family itself as a fallback.
std::vector<MonomialOrder> extended_white_orders(const Matroid& m) {
  std::vector<MonomialOrder> orders = default_white_orders(m);
  std::vector<VariableId> ranking;
  for (int j = 1; j <= m.basis_count(); ++j) ranking.push_back(VariableId::basis(1, j));
  auto add_weights = [&orders, &ranking, &m](const std::vector<std::int64_t>& w) {
    if (static_cast<int>(w.size()) != m.basis_count()) return;
    std::vector<std::pair<VariableId, std::int64_t>> pairs;
    for (int j = 1; j <= m.basis_count(); ++j)
      pairs.emplace_back(VariableId::basis(1, j), w[static_cast<std::size_t>(j - 1)]);
    orders.push_back(MonomialOrder::weighted(pairs, MonomialOrder::Tie::Degrevlex, ranking));
  };
  // Seeded-search winners for U_{3,6} and M(K4) (seed 12345, trials 157/61).
  add_weights({356, 121, 147, 258, 386, 713, 106, 791, 179, 31, 553, 359, 657, 183, 899, 715,
               133, 467, 194, 290});
  add_weights({725, 334, 772, 369, 877, 516, 763, 441, 430, 84, 178, 569, 47, 271, 866, 262});
  Rng rng(12345);
  for (int t = 0; t < 400; ++t) {
    std::vector<std::int64_t> w;
    for (int j = 0; j < m.basis_count(); ++j) w.push_back(rng.below(1000));
    add_weights(w);
  }
  return orders;
}

// ---------------------------------------------------------------------
// Criterion 1: axiom suite
// ---------------------------------------------------------------------

bool witness_checked_rejection(int d, const std::vector<Basis>& bases, Failures& f,
                               const std::string& what) {
  try {
    Matroid::from_bases(d, bases);
    return false;  // accepted: the mutation happened to be a matroid
  } catch (const EmptyBasesError&) {
    return true;
  } catch (const UnequalCardinalityError& e) {
    f.expect(e.first.size() != e.second.size(), what + ": cardinality witness sizes agree");
    return true;
  } catch (const ExchangeError& e) {
    // Verify the witness triple directly against the mutated collection.
    std::vector<Basis> sorted = bases;
    for (Basis& b : sorted) std::sort(b.begin(), b.end());
    auto contains = [&sorted](const Basis& b) {
      for (const Basis& s : sorted)
        if (s == b) return true;
      return false;
    };
    f.expect(contains(e.first) && contains(e.second), what + ": witness bases not in collection");
    ElementMask b1 = mask_of(e.first), b2 = mask_of(e.second);
    ElementMask xbit = ElementMask{1} << (e.x - 1);
    f.expect((b1 & xbit) && !(b2 & xbit), what + ": witness x not in B1\\B2");
    ElementMask ys = b2 & ~b1;
    while (ys != 0) {
      ElementMask ybit = ys & (~ys + 1);
      ys &= ys - 1;
      ElementMask candidate = (b1 & ~xbit) | ybit;
      if (contains(basis_of(candidate))) {
        f.add(what + ": witness refuted, an exchange exists");
        return true;
      }
    }
    return true;
  } catch (const BadParamsError&) {
    return true;
  }
}

void criterion_1(Failures& f) {
  std::vector<Matroid> base = catalog_matroids();
  for (const Matroid& m : base) {
    Matroid revalidated = Matroid::from_bases(m.ground_size(), m.bases());
    f.expect(revalidated == m, describe(m) + ": revalidation changed the matroid");
    Matroid d = dual(m);
    f.expect(Matroid::from_bases(d.ground_size(), d.bases()) == d,
             describe(m) + ": dual fails validation");
    if (m.ground_size() > 1) {
      for (Element c = 1; c <= m.ground_size(); ++c) {
        Matroid del = delete_element(m, c).matroid;
        f.expect(Matroid::from_bases(del.ground_size(), del.bases()) == del,
                 describe(m) + ": deletion fails validation");
        Matroid con = contract_element(m, c).matroid;
        f.expect(Matroid::from_bases(con.ground_size(), con.bases()) == con,
                 describe(m) + ": contraction fails validation");
      }
    }
  }
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[i].ground_size() + base[j].ground_size() > 31) continue;
      Matroid s = direct_sum(base[i], base[j]);
      f.expect(Matroid::from_bases(s.ground_size(), s.bases()) == s,
               describe(base[i]) + " (+) " + describe(base[j]) + ": direct sum fails validation");
    }

  Rng rng(20260811);
  for (const Matroid& m : base) {
    int rejected = 0, attempts = 0;
    while (rejected < 100 && attempts < 5000) {
      ++attempts;
      std::vector<Basis> mutated = m.bases();
      switch (rng.below(4)) {
        case 0: {  // drop an element from one basis
          int bi = rng.below(static_cast<int>(mutated.size()));
          if (mutated[static_cast<std::size_t>(bi)].empty()) continue;
          auto& b = mutated[static_cast<std::size_t>(bi)];
          b.erase(b.begin() + rng.below(static_cast<int>(b.size())));
          break;
        }
        case 1: {  // remove a basis
          if (mutated.size() < 2) {
            mutated.clear();
          } else {
            mutated.erase(mutated.begin() + rng.below(static_cast<int>(mutated.size())));
          }
          break;
        }
        case 2: {  // add a random subset of the right size
          Basis b;
          while (static_cast<int>(b.size()) < m.rank()) {
            Element e = 1 + rng.below(m.ground_size());
            if (std::find(b.begin(), b.end(), e) == b.end()) b.push_back(e);
          }
          std::sort(b.begin(), b.end());
          mutated.push_back(std::move(b));
          break;
        }
        default: {  // swap one element of one basis
          int bi = rng.below(static_cast<int>(mutated.size()));
          auto& b = mutated[static_cast<std::size_t>(bi)];
          if (b.empty() || m.rank() == m.ground_size()) continue;
          int pos = rng.below(static_cast<int>(b.size()));
          Element e = 1 + rng.below(m.ground_size());
          if (std::find(b.begin(), b.end(), e) != b.end()) continue;
          b[static_cast<std::size_t>(pos)] = e;
          std::sort(b.begin(), b.end());
          break;
        }
      }
      if (witness_checked_rejection(m.ground_size(), mutated, f, describe(m))) ++rejected;
    }
    f.expect(rejected >= 100, describe(m) + ": only " + std::to_string(rejected) +
                                  " rejected mutations found");
  }
}

// ---------------------------------------------------------------------
// Criterion 2: White instance suite
// ---------------------------------------------------------------------

void criterion_2(Failures& f) {
  for (const Matroid& m : white_suite()) {
    f.expect(check_white_generation(m), describe(m) + ": exchange set does not generate J_M");
    auto orders = extended_white_orders(m);
    auto found = check_white_gb(m, orders);
    f.expect(found.has_value(), describe(m) + ": no searched order gives an exchange Groebner basis");
  }
  // Rank-0 minors: pinned degenerate behavior instead (J = <x - 1> is not
  // homogeneous, and the exchange set is empty).
  for (const Matroid& m : small_catalog_minors(5)) {
    if (m.rank() != 0) continue;
    f.expect(symmetric_exchange_set(m).binomials.empty(),
             describe(m) + ": rank-0 matroid has exchange relations");
    BinomialSet j = toric_gb(bases_matrix(m));
    f.expect(j.size() == 1 && j.elements()[0].lead().degree() == 1 &&
                 j.elements()[0].trail().is_unit(),
             describe(m) + ": rank-0 ideal is not <x - 1>");
  }
}

// ---------------------------------------------------------------------
// Criterion 3: lifted sets of series extensions
// ---------------------------------------------------------------------

void lift_instance_check(const Matroid& m, Element c,
                         const std::vector<std::pair<VariableId, std::int64_t>>& omega,
                         const std::string& tag, Failures& f) {
  AnchoredMatroid am = anchor(m, c);
  const int n = am.basis_count(), gamma = am.gamma();
  std::vector<VariableId> ranking;
  for (int j = 1; j <= n; ++j) ranking.push_back(VariableId::basis(1, j));
  MonomialOrder base = MonomialOrder::weighted(omega, MonomialOrder::Tie::Lex, ranking);
  BinomialSet fset = toric_gb(anchored_bases_matrix(am), base);
  BinomialSet lifted = lift_series_extension(fset, gamma, n);
  MonomialOrder order = series_ext_order(base, gamma, n);

  long long sum2u = 0;
  for (const Binomial& g : fset.elements())
    sum2u += 1LL << classify_split(g, gamma).u();
  const long long swaps = static_cast<long long>(gamma) * (gamma - 1) / 2;
  f.expect(static_cast<long long>(lift_series_extension(BinomialSet::make(ranking, {}), gamma, n)
                                      .size()) == swaps,
           tag + ": swap quadric count is not gamma(gamma-1)/2");
  f.expect(static_cast<long long>(lifted.size()) - swaps <= sum2u,
           tag + ": lifted count exceeds sum of 2^u_f");
  f.expect(is_groebner(lifted, order), tag + ": lifted set fails the Groebner criterion");
  f.expect(ideals_equal(lifted, toric_gb(series_ext_matrix(am), order), order),
           tag + ": lifted set does not generate the extension ideal");
}

void criterion_3(Failures& f) {
  Rng rng(4215);
  for (const Matroid& m : white_suite()) {
    for (Element c = 1; c <= m.ground_size(); ++c) {
      AnchoredMatroid am = anchor(m, c);
      if (am.anchor_is_coloop()) continue;
      std::ostringstream tag;
      tag << describe(m) << " at " << c;
      lift_instance_check(m, c, {}, tag.str() + " (omega=0)", f);
      std::vector<std::pair<VariableId, std::int64_t>> omega;
      for (int j = 1; j <= m.basis_count(); ++j)
        omega.emplace_back(VariableId::basis(1, j), rng.below(30));
      lift_instance_check(m, c, omega, tag.str() + " (random omega)", f);
    }
  }
  // The anchored U_{2,4} instance has exactly 7 elements.
  AnchoredMatroid am = anchor(uniform(2, 4), 4);
  MonomialOrder base = canonical_base_order(6);
  BinomialSet fset = toric_gb(anchored_bases_matrix(am), base);
  f.expect(lift_series_extension(fset, am.gamma(), am.basis_count()).size() == 7,
           "U_{2,4} at 4 lift does not have 7 elements");
}

// ---------------------------------------------------------------------
// Criterion 4: coloop anchors leave the ideal unchanged
// ---------------------------------------------------------------------

void criterion_4(Failures& f) {
  std::vector<std::pair<Matroid, Element>> instances{
      {Matroid::from_bases(3, {{1, 2}, {1, 3}}), 1},
      {uniform(2, 2), 1},
      {uniform(3, 3), 2},
      {direct_sum(uniform(1, 1), uniform(2, 3)), 1},
  };
  for (const auto& [m, c] : instances) {
    AnchoredMatroid am = anchor(m, c);
    SeriesExtensionResult ext = series_extension(am);
    f.expect(ext.coloop, describe(m) + ": anchor not detected as coloop");
    MonomialOrder order = canonical_base_order(m.basis_count());
    BinomialSet jm = toric_gb(bases_matrix(m), order);
    BinomialSet jext = toric_gb(bases_matrix(ext.matroid), order);
    f.expect(jm == jext, describe(m) + ": coloop extension changed the ideal");
  }
}

// ---------------------------------------------------------------------
// Criterion 5: series connection generating sets
// ---------------------------------------------------------------------

void criterion_5(Failures& f) {
  std::vector<std::pair<Matroid, Matroid>> pairs{
      {uniform(1, 2), uniform(1, 2)},
      {uniform(2, 3), uniform(2, 3)},
      {uniform(2, 3), uniform(2, 4)},
      {uniform(2, 4), uniform(2, 4)},
  };
  for (const auto& [m1, m2] : pairs) {
    const Element c1 = m1.ground_size(), c2 = m2.ground_size();
    AnchoredMatroid am1 = anchor(m1, c1), am2 = anchor(m2, c2);
    std::string tag = describe(m1) + " # " + describe(m2);

    MonomialOrder base1 = canonical_base_order(am1.basis_count());
    MonomialOrder base2 = canonical_base_order(am2.basis_count());
    BinomialSet f1 = toric_gb(anchored_bases_matrix(am1), base1);
    BinomialSet f2 = toric_gb(anchored_bases_matrix(am2), base2);
    BinomialSet f1t = lift_series_tilde(f1, am1.gamma(), am1.basis_count(), 1);
    BinomialSet f2t = lift_series_tilde(f2, am2.gamma(), am2.basis_count(), 2);
    ConnectionIndex idx{am1.basis_count(), am1.gamma(), am2.basis_count(), am2.gamma()};
    BinomialSet n = lift_connection(f1t, f2t, idx, LiftMode::N);
    BinomialSet ntilde = lift_connection(f1t, f2t, idx, LiftMode::Ntilde);
    f.expect(restrict_to_vars(ntilde, idx.kept_vars()) == n,
             tag + ": N differs from Ntilde restricted to K[Zhat]");

    MonomialOrder zorder =
        connection_order(series_ext_order(base1, idx.gamma1, idx.n1, 1),
                         series_ext_order(base2, idx.gamma2, idx.n2, 2), idx, LiftMode::N);
    BinomialSet oracle = toric_gb(connection_matrix(am1, am2), zorder);
    f.expect(ideals_equal(n, oracle, zorder), tag + ": N does not generate the connection ideal");
    if (!is_groebner(n, zorder))
      std::printf("  note: %s: generates=true, groebner under constructed order: open\n",
                  tag.c_str());
  }
}

// ---------------------------------------------------------------------
// Criterion 6: closure under the constructions (quadratic in -> quadratic out)
// ---------------------------------------------------------------------

void check_closure(const ConstructionReport& r, bool inputs_quadratic, const std::string& tag,
                   Failures& f) {
  f.expect(r.generates.value_or(false), tag + ": construction failed oracle verification");
  if (inputs_quadratic)
    f.expect(is_quadratic(r.generators), tag + ": quadratic inputs gave a non-quadratic set");
}

bool quadratic_ideal(const Matroid& m) {
  return is_quadratic(toric_gb(bases_matrix(m), canonical_base_order(m.basis_count())));
}

void criterion_6(Failures& f) {
  std::vector<std::pair<Matroid, Element>> extension_instances{
      {uniform(2, 4), 4}, {uniform(2, 5), 5}, {uniform(3, 5), 5}, {named(NamedMatroid::MK4), 1}};
  for (const auto& [m, c] : extension_instances) {
    bool qin = quadratic_ideal(m);
    check_closure(series_extension_pipeline(m, c, true), qin,
                  "series-ext " + describe(m), f);
    check_closure(parallel_extension_pipeline(m, c, true), qin,
                  "parallel-ext " + describe(m), f);
  }
  std::vector<std::pair<Matroid, Matroid>> pairs{
      {uniform(1, 2), uniform(1, 2)},
      {uniform(2, 3), uniform(2, 3)},
      {uniform(2, 3), uniform(2, 4)},
      {uniform(2, 4), uniform(2, 4)},
  };
  for (const auto& [m1, m2] : pairs) {
    bool qin = quadratic_ideal(m1) && quadratic_ideal(m2);
    const Element c1 = m1.ground_size(), c2 = m2.ground_size();
    std::string tag = describe(m1) + " # " + describe(m2);
    check_closure(series_connection_pipeline(m1, c1, m2, c2, true), qin, "series-conn " + tag, f);
    check_closure(parallel_connection_pipeline(m1, c1, m2, c2, true), qin,
                  "parallel-conn " + tag, f);
    check_closure(two_sum_pipeline(m1, c1, m2, c2, true), qin, "two-sum " + tag, f);
  }
  check_closure(direct_sum_pipeline(uniform(2, 4), uniform(2, 3), true),
                quadratic_ideal(uniform(2, 4)) && quadratic_ideal(uniform(2, 3)),
                "direct-sum U24 (+) U23", f);
  std::vector<SpStep> steps{{SpStep::Kind::Series, 4}, {SpStep::Kind::Parallel, 1}};
  check_closure(sp_extension_sequence(uniform(2, 4), steps, true), quadratic_ideal(uniform(2, 4)),
                "sp-sequence U24 s4 p1", f);
}

// ---------------------------------------------------------------------
// Criterion 7: 2-sums
// ---------------------------------------------------------------------

void criterion_7(Failures& f) {
  ConstructionReport r1 = two_sum_pipeline(uniform(2, 3), 3, uniform(2, 3), 3, true);
  f.expect(is_isomorphic(r1.matroid, uniform(3, 4)).has_value(),
           "U23 +2 U23 is not isomorphic to U34");
  f.expect(r1.generators.empty(), "U23 +2 U23 has a nonzero generator set");
  f.expect(toric_gb(bases_matrix(r1.matroid)).empty(), "J(U23 +2 U23) is not the zero ideal");
  f.expect(r1.generates.value_or(false), "U23 +2 U23 failed verification");

  ConstructionReport r2 = two_sum_pipeline(uniform(2, 4), 4, uniform(2, 3), 3, true);
  f.expect(r2.generates.value_or(false), "U24 +2 U23 generators are not oracle-equal to J");
}

// ---------------------------------------------------------------------
// Criterion 8: excluded-minor pipeline over random composition trees
// ---------------------------------------------------------------------

Element random_nondegenerate_anchor(const Matroid& m, Rng& rng) {
  ElementClass ec = classify_elements(m);
  for (int tries = 0; tries < 64; ++tries) {
    Element c = 1 + rng.below(m.ground_size());
    bool bad = false;
    for (Element e : ec.loops) bad |= e == c;
    for (Element e : ec.coloops) bad |= e == c;
    if (!bad) return c;
  }
  return 0;
}

void criterion_8(Failures& f) {
  Rng rng(90210);
  const std::vector<std::pair<int, int>> leaf_params{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4},
                                                     {2, 5}, {3, 5}, {4, 5}};
  int built = 0;
  while (built < 5) {
    // Two or three uniform leaves combined by direct sums / 2-sums.
    const int leaves = 2 + rng.below(2);
    std::vector<Matroid> stack;
    for (int i = 0; i < leaves; ++i) {
      auto [r, n] = leaf_params[static_cast<std::size_t>(rng.below(static_cast<int>(leaf_params.size())))];
      stack.push_back(uniform(r, n));
    }
    bool ok = true;
    std::optional<ConstructionReport> last;
    Matroid current = stack[0];
    std::ostringstream tag;
    tag << "tree " << built << ": " << describe(stack[0]);
    for (std::size_t i = 1; i < stack.size() && ok; ++i) {
      const Matroid& rhs = stack[i];
      if (current.basis_count() * rhs.basis_count() > 26) {
        ok = false;
        break;
      }
      const bool use_two_sum = rng.below(2) == 0;
      if (use_two_sum) {
        Element c1 = random_nondegenerate_anchor(current, rng);
        Element c2 = random_nondegenerate_anchor(rhs, rng);
        if (c1 == 0 || c2 == 0) {
          ok = false;
          break;
        }
        last = two_sum_pipeline(current, c1, rhs, c2, true);
        tag << " +2 " << describe(rhs);
      } else {
        last = direct_sum_pipeline(current, rhs, true);
        tag << " (+) " << describe(rhs);
      }
      current = last->matroid;
    }
    if (!ok || !last.has_value()) continue;
    ++built;
    f.expect(last->generates.value_or(false), tag.str() + ": composition failed verification");
    f.expect(is_quadratic(last->generators), tag.str() + ": composed set is not quadratic");
    if (!last->groebner.value_or(false))
      std::printf("  note: %s: generates=true, groebner under constructed order: open\n",
                  tag.str().c_str());
    f.expect(excluded_minor_free(current), tag.str() + ": composition has an excluded minor");
  }
  for (NamedMatroid which :
       {NamedMatroid::MK4, NamedMatroid::W3, NamedMatroid::P6, NamedMatroid::Q6})
    f.expect(!excluded_minor_free(named(which)), "named excluded minor reported as minor-free");
}

// ---------------------------------------------------------------------
// Criterion 9: duality
// ---------------------------------------------------------------------

void criterion_9(Failures& f) {
  for (const Matroid& m : white_suite()) {
    // The transfer identity is the homogeneous-kernel statement; it needs
    // rank >= 1 on both sides (a rank-0 side has the inhomogeneous ideal
    // <x - 1>). white_suite() already keeps rank >= 1; skip full-rank
    // matroids whose dual is rank 0 for the ideal comparison.
    if (m.rank() < m.ground_size()) {
      MonomialOrder order = canonical_base_order(m.basis_count());
      BinomialSet gb = toric_gb(bases_matrix(m), order);
      BinomialSet transferred = dual_transfer(gb, m);
      BinomialSet dual_oracle = toric_gb(bases_matrix(dual(m)), order);
      f.expect(ideals_equal(transferred, dual_oracle, order),
               describe(m) + ": dual transfer does not give J of the dual");
    }
    if (m.ground_size() <= 6) {
      Matroid md = dual(m);
      const ElementMask full = (ElementMask{1} << m.ground_size()) - 1;
      for (ElementMask x = 0; x <= full; ++x)
        if (connectivity_lambda(m, x) != connectivity_lambda(md, x)) {
          f.add(describe(m) + ": lambda differs from the dual's lambda");
          break;
        }
    }
  }
}

// ---------------------------------------------------------------------
// Criterion 10: connectivity
// ---------------------------------------------------------------------

void criterion_10(Failures& f) {
  f.expect(is_n_connected(uniform(2, 4), 3), "U_{2,4} is not reported 3-connected");
  f.expect(is_n_connected(named(NamedMatroid::MK4), 3), "M(K4) is not reported 3-connected");
  std::vector<Matroid> smalls{uniform(1, 2), uniform(1, 3), uniform(2, 3), uniform(2, 4)};
  for (const Matroid& a : smalls)
    for (const Matroid& b : smalls)
      f.expect(!is_n_connected(direct_sum(a, b), 2),
               describe(a) + " (+) " + describe(b) + ": direct sum reported 2-connected");
}

// ---------------------------------------------------------------------
// Criterion 11: CLI determinism
// ---------------------------------------------------------------------

struct RunResult {
  int code;
  std::string output;
};

RunResult run_command(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string output;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  int status = pclose(pipe);
  return {status, output};
}

void criterion_11(Failures& f) {
  const char* env = std::getenv("MATORIC_CLI");
  std::string cli = env ? env : "build/tools/matoric";
  if (run_command("test -x " + cli + " && echo ok").output.find("ok") != 0) {
    f.add("CLI binary not found (set MATORIC_CLI); looked at " + cli);
    return;
  }
  std::string dir = "/tmp/matoric-accept-XXXXXX";
  {
    std::vector<char> tmpl(dir.begin(), dir.end());
    tmpl.push_back('\0');
    if (!mkdtemp(tmpl.data())) {
      f.add("cannot create temp dir");
      return;
    }
    dir = tmpl.data();
  }
  io::write_file(dir + "/k4.graph",
                 "{\"vertices\":4,\"edges\":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}\n");

  // Fixtures.
  run_command(cli + " catalog u:2,4 --out " + dir + "/u24.json");
  run_command(cli + " catalog u:2,3 --out " + dir + "/u23.json");
  run_command(cli + " catalog u:1,3 --out " + dir + "/u13.json");
  run_command(cli + " ideal gens --method exchange " + dir + "/u24.json --out " + dir + "/ex.json");
  run_command(cli + " ideal gb " + dir + "/u24.json --out " + dir + "/gb.json");

  std::vector<std::string> commands{
      "catalog u:2,4",
      "catalog mk4",
      "catalog w3",
      "catalog p6",
      "catalog q6",
      "catalog graph:" + dir + "/k4.graph",
      "matroid validate " + dir + "/u24.json",
      "matroid info " + dir + "/u24.json",
      "matroid dual " + dir + "/u24.json",
      "matroid delete " + dir + "/u24.json --at 4",
      "matroid contract " + dir + "/u24.json --at 4",
      "matroid direct-sum " + dir + "/u24.json " + dir + "/u13.json",
      "matroid connectivity " + dir + "/u24.json --subset 1,2 --n 3",
      "ideal gens --method exchange --witnesses " + dir + "/w.json " + dir + "/u24.json",
      "ideal gens --method oracle " + dir + "/u24.json",
      "ideal gb " + dir + "/u24.json --order lex",
      "ideal equal " + dir + "/ex.json " + dir + "/gb.json",
      "white check-gen " + dir + "/u24.json",
      "white check-gb " + dir + "/u24.json",
      "construct series-ext " + dir + "/u24.json --at 4",
      "construct parallel-ext " + dir + "/u24.json --at 1",
      "construct series-conn " + dir + "/u23.json " + dir + "/u23.json --at 3",
      "construct parallel-conn " + dir + "/u23.json " + dir + "/u23.json --at 3",
      "construct two-sum " + dir + "/u23.json " + dir + "/u23.json --at 3",
      "construct sp-sequence " + dir + "/u24.json --step series:4 --step parallel:1",
      "minor has " + dir + "/u24.json " + dir + "/u23.json",
      "minor excluded-free " + dir + "/u24.json",
  };
  for (const std::string& cmd : commands) {
    RunResult a = run_command(cli + " " + cmd);
    RunResult b = run_command(cli + " " + cmd);
    f.expect(a.code == b.code, "exit codes differ for: " + cmd);
    f.expect(a.output == b.output, "outputs differ for: " + cmd);
    f.expect(!a.output.empty(), "no output from: " + cmd);
  }
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    std::function<void(Failures&)> run;
  };
  const std::vector<Entry> criteria{
      {1, "axiom suite over the catalog and its derived matroids", criterion_1},
      {2, "White instance suite (generation and Groebner orders)", criterion_2},
      {3, "series-extension lifting is a Groebner basis and generates", criterion_3},
      {4, "coloop anchors leave the ideal unchanged", criterion_4},
      {5, "series connection generating sets (N and Ntilde)", criterion_5},
      {6, "closure: quadratic inputs give quadratic verified outputs", criterion_6},
      {7, "2-sums: U34 identification and oracle equality", criterion_7},
      {8, "excluded-minor pipeline over random composition trees", criterion_8},
      {9, "duality transfer and connectivity-function duality", criterion_9},
      {10, "connectivity checks", criterion_10},
      {11, "CLI determinism (byte-identical reruns)", criterion_11},
  };

  int failed = 0;
  for (const Entry& entry : criteria) {
    Failures f;
    auto t0 = std::chrono::steady_clock::now();
    try {
      entry.run(f);
    } catch (const std::exception& e) {
      f.add(std::string("exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    double sec = std::chrono::duration<double>(t1 - t0).count();
    if (f.items.empty()) {
      std::printf("criterion %2d: PASS (%.1fs) - %s\n", entry.id, sec, entry.title);
    } else {
      ++failed;
      std::printf("criterion %2d: FAIL (%.1fs) - %s\n", entry.id, sec, entry.title);
      for (const std::string& item : f.items) std::printf("    %s\n", item.c_str());
    }
    std::fflush(stdout);
  }
  if (failed == 0)
    std::printf("all 11 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failed);
  return failed == 0 ? 0 : 1;
}
