#include "matoric/pipeline.hpp"

#include <algorithm>

#include "matoric/errors.hpp"

namespace matoric {

IntegerMatrix anchored_bases_matrix(const AnchoredMatroid& am) {
  const Matroid& m = am.matroid();
  std::vector<std::string> rows;
  for (Element e = 1; e <= m.ground_size(); ++e) rows.push_back(std::to_string(e));
  std::vector<VariableId> vars;
  std::vector<std::vector<int>> cols;
  for (int j = 1; j <= am.basis_count(); ++j) {
    vars.push_back(VariableId::basis(1, j));
    std::vector<int> col(static_cast<std::size_t>(m.ground_size()), 0);
    for (Element e : am.basis(j)) col[static_cast<std::size_t>(e - 1)] = 1;
    cols.push_back(std::move(col));
  }
  return IntegerMatrix(std::move(rows), std::move(vars), std::move(cols));
}

MonomialOrder canonical_base_order(int n) {
  std::vector<VariableId> ranking;
  for (int j = 1; j <= n; ++j) ranking.push_back(VariableId::basis(1, j));
  return MonomialOrder::degrevlex(std::move(ranking));
}

std::pair<BinomialSet, MonomialOrder> canonicalize_generators(const Matroid& result,
                                                              const VarBasisMap& map,
                                                              const BinomialSet& generators,
                                                              const MonomialOrder& order) {
  std::vector<std::pair<VariableId, VariableId>> renames;
  std::vector<bool> hit(static_cast<std::size_t>(result.basis_count()), false);
  for (const auto& [v, b] : map.entries) {
    const int idx = result.basis_index(mask_of(b));
    if (idx == 0 || hit[static_cast<std::size_t>(idx - 1)])
      throw VerificationError("variable-basis map does not biject onto the result's bases");
    hit[static_cast<std::size_t>(idx - 1)] = true;
    renames.emplace_back(v, VariableId::basis(1, idx));
  }
  if (static_cast<int>(map.entries.size()) != result.basis_count())
    throw VerificationError("variable-basis map does not cover the result's bases");

  std::vector<VariableId> ambient;
  for (int j = 1; j <= result.basis_count(); ++j) ambient.push_back(VariableId::basis(1, j));
  std::vector<Binomial> elems;
  for (const Binomial& g : generators.elements()) elems.push_back(g.renamed(renames));
  MonomialOrder corder = order.renamed(renames, order.name() + "@canonical");
  return {BinomialSet::make(std::move(ambient), std::move(elems)), std::move(corder)};
}

namespace {

void run_verification(ConstructionReport& report) {
  IntegerMatrix d = bases_matrix(report.matroid);
  BinomialSet oracle = toric_gb(d, report.canonical_order);
  report.generates = ideals_equal(report.canonical_generators, oracle, report.canonical_order);
  report.groebner = is_groebner(report.canonical_generators, report.canonical_order);
  if (!*report.generates) {
    // Pin down one element separating the ideals, for the diagnostics.
    for (const Binomial& g : oracle.elements())
      if (!normal_form(g, report.canonical_generators, report.canonical_order).is_zero()) {
        report.mismatch = g;
        break;
      }
    if (!report.mismatch)
      for (const Binomial& g : report.canonical_generators.elements())
        if (!normal_form(g, oracle, report.canonical_order).is_zero()) {
          report.mismatch = g;
          break;
        }
  }
}

ConstructionReport assemble(Matroid matroid, VarBasisMap map, BinomialSet generators,
                            MonomialOrder order, bool verify) {
  auto [cgens, corder] = canonicalize_generators(matroid, map, generators, order);
  ConstructionReport report{std::move(matroid), std::move(map),   std::move(generators),
                            std::move(order),   std::move(cgens), std::move(corder),
                            std::nullopt,       std::nullopt,     std::nullopt};
  if (verify) run_verification(report);
  return report;
}

struct TildeFactor {
  BinomialSet lifted;    // F~ over the two tilde blocks
  MonomialOrder order;   // lifted order
};

// Oracle GB of the factor over anchored numbering, lifted to its tilde set
// and order; full_block distinguishes first/second factor conventions.
TildeFactor tilde_factor(const AnchoredMatroid& am, int full_block) {
  MonomialOrder base = canonical_base_order(am.basis_count());
  BinomialSet f = toric_gb(anchored_bases_matrix(am), base);
  return TildeFactor{lift_series_tilde(f, am.gamma(), am.basis_count(), full_block),
                     series_ext_order(base, am.gamma(), am.basis_count(), full_block)};
}

// Generator set for a direct sum of two factor matroids, with the
// z1_j_k -> basis-pair map (the single-block toric fiber product).
std::pair<BinomialSet, MonomialOrder> direct_sum_ideal(const Matroid& f1, const Matroid& f2) {
  MonomialOrder o1 = canonical_base_order(f1.basis_count());
  MonomialOrder o2 = canonical_base_order(f2.basis_count());
  BinomialSet g1 = toric_gb(bases_matrix(f1), o1);
  BinomialSet g2 = toric_gb(bases_matrix(f2), o2);
  return {direct_sum_generators(g1, f1.basis_count(), g2, f2.basis_count()),
          direct_sum_order(o1, o2, f1.basis_count(), f2.basis_count())};
}

}  // namespace

ConstructionReport series_extension_pipeline(const Matroid& m, Element c, bool verify,
                                             const MonomialOrder* anchored_base) {
  AnchoredMatroid am = anchor(m, c);
  SeriesExtensionResult ext = series_extension(am);
  if (ext.coloop) {
    MonomialOrder base = anchored_base ? *anchored_base : canonical_base_order(m.basis_count());
    BinomialSet f = toric_gb(anchored_bases_matrix(am), base);
    return assemble(ext.matroid, ext.map, std::move(f), std::move(base), verify);
  }
  MonomialOrder base = anchored_base ? *anchored_base : canonical_base_order(m.basis_count());
  BinomialSet f = toric_gb(anchored_bases_matrix(am), base);
  BinomialSet lifted = lift_series_extension(f, am.gamma(), am.basis_count());
  MonomialOrder order = series_ext_order(base, am.gamma(), am.basis_count());
  return assemble(ext.matroid, ext.map, std::move(lifted), std::move(order), verify);
}

ConstructionReport parallel_extension_pipeline(const Matroid& m, Element c, bool verify) {
  AnchoredMatroid amd = anchor(dual(m), c);
  ParallelExtensionResult ext = parallel_extension(anchor(m, c));
  MonomialOrder base = canonical_base_order(m.basis_count());
  BinomialSet f = toric_gb(anchored_bases_matrix(amd), base);
  if (ext.coloop)
    return assemble(ext.matroid, ext.map, std::move(f), std::move(base), verify);
  BinomialSet lifted = lift_series_extension(f, amd.gamma(), amd.basis_count());
  MonomialOrder order = series_ext_order(base, amd.gamma(), amd.basis_count());
  return assemble(ext.matroid, ext.map, std::move(lifted), std::move(order), verify);
}

ConstructionReport series_connection_pipeline(const Matroid& m1, Element c1, const Matroid& m2,
                                              Element c2, bool verify) {
  AnchoredMatroid am1 = anchor(m1, c1), am2 = anchor(m2, c2);
  ConnectionResult conn = series_connection(am1, am2);
  if (conn.route != ConnectionRoute::Generic) {
    auto [gens, order] = direct_sum_ideal(conn.factors->first, conn.factors->second);
    return assemble(conn.matroid, conn.map, std::move(gens), std::move(order), verify);
  }
  TildeFactor t1 = tilde_factor(am1, 1);
  TildeFactor t2 = tilde_factor(am2, 2);
  ConnectionIndex idx{am1.basis_count(), am1.gamma(), am2.basis_count(), am2.gamma()};
  BinomialSet n = lift_connection(t1.lifted, t2.lifted, idx, LiftMode::N);
  MonomialOrder order = connection_order(t1.order, t2.order, idx, LiftMode::N);
  return assemble(conn.matroid, conn.map, std::move(n), std::move(order), verify);
}

ConstructionReport parallel_connection_pipeline(const Matroid& m1, Element c1, const Matroid& m2,
                                                Element c2, bool verify) {
  AnchoredMatroid am1 = anchor(m1, c1), am2 = anchor(m2, c2);
  ConnectionResult conn = parallel_connection(am1, am2);
  if (conn.route != ConnectionRoute::Generic) {
    auto [gens, order] = direct_sum_ideal(conn.factors->first, conn.factors->second);
    return assemble(conn.matroid, conn.map, std::move(gens), std::move(order), verify);
  }
  AnchoredMatroid am1d = anchor(dual(m1), c1), am2d = anchor(dual(m2), c2);
  TildeFactor t1 = tilde_factor(am1d, 1);
  TildeFactor t2 = tilde_factor(am2d, 2);
  ConnectionIndex idx{am1d.basis_count(), am1d.gamma(), am2d.basis_count(), am2d.gamma()};
  BinomialSet n = lift_connection(t1.lifted, t2.lifted, idx, LiftMode::N);
  MonomialOrder order = connection_order(t1.order, t2.order, idx, LiftMode::N);
  return assemble(conn.matroid, conn.map, std::move(n), std::move(order), verify);
}

ConstructionReport two_sum_pipeline(const Matroid& m1, Element c1, const Matroid& m2, Element c2,
                                    bool verify) {
  AnchoredMatroid am1 = anchor(m1, c1), am2 = anchor(m2, c2);
  MonomialOrder base1 = canonical_base_order(am1.basis_count());
  MonomialOrder base2 = canonical_base_order(am2.basis_count());
  BinomialSet f1 = toric_gb(anchored_bases_matrix(am1), base1);
  BinomialSet f2 = toric_gb(anchored_bases_matrix(am2), base2);
  TwoSumResult ts = two_sum_generators(am1, am2, f1, f2);

  ConnectionIndex idx{am1.basis_count(), am1.gamma(), am2.basis_count(), am2.gamma()};
  MonomialOrder zorder =
      connection_order(series_ext_order(base1, idx.gamma1, idx.n1, 1),
                       series_ext_order(base2, idx.gamma2, idx.n2, 2), idx, LiftMode::N);
  MonomialOrder order = zorder.restricted_to(ts.generators.ambient());
  return assemble(ts.matroid, ts.map, ts.generators, std::move(order), verify);
}

ConstructionReport direct_sum_pipeline(const Matroid& m1, const Matroid& m2, bool verify) {
  Matroid sum = direct_sum(m1, m2);
  VarBasisMap map;
  for (int j = 1; j <= m1.basis_count(); ++j)
    for (int k = 1; k <= m2.basis_count(); ++k) {
      Basis b = m1.basis(j);
      for (Element e : m2.basis(k)) b.push_back(e + m1.ground_size());
      std::sort(b.begin(), b.end());
      map.entries.emplace_back(VariableId::pair(1, j, k), std::move(b));
    }
  auto [gens, order] = direct_sum_ideal(m1, m2);
  return assemble(std::move(sum), std::move(map), std::move(gens), std::move(order), verify);
}

ConstructionReport sp_extension_sequence(const Matroid& m, std::span<const SpStep> steps,
                                         bool verify) {
  Matroid cur = m;
  MonomialOrder order = canonical_base_order(cur.basis_count());
  BinomialSet gens = toric_gb(bases_matrix(cur), order);

  for (const SpStep& step : steps) {
    if (step.kind == SpStep::Kind::Series) {
      AnchoredMatroid am = anchor(cur, step.anchor);
      SeriesExtensionResult ext = series_extension(am);
      if (ext.coloop) {
        // Appending d+1 to every basis keeps the canonical numbering, so
        // the generating set and order carry over verbatim.
        cur = std::move(ext.matroid);
        continue;
      }
      auto renames = anchored_renaming(am);
      std::vector<Binomial> renamed;
      for (const Binomial& g : gens.elements()) renamed.push_back(g.renamed(renames));
      std::vector<VariableId> ambient = gens.ambient();
      BinomialSet f = BinomialSet::make(std::move(ambient), std::move(renamed));
      MonomialOrder base = order.renamed(renames, order.name() + "@anchored");
      BinomialSet lifted = lift_series_extension(f, am.gamma(), am.basis_count());
      MonomialOrder lifted_order = series_ext_order(base, am.gamma(), am.basis_count());
      auto [cg, co] = canonicalize_generators(ext.matroid, ext.map, lifted, lifted_order);
      cur = std::move(ext.matroid);
      gens = std::move(cg);
      order = std::move(co);
    } else {
      Matroid md = dual(cur);
      BinomialSet fd = dual_transfer(gens, cur);
      std::vector<std::pair<VariableId, VariableId>> sigma;
      const ElementMask full = (ElementMask{1} << cur.ground_size()) - 1;
      for (int j = 1; j <= cur.basis_count(); ++j)
        sigma.emplace_back(
            VariableId::basis(1, j),
            VariableId::basis(1, md.basis_index(full & ~cur.masks()[static_cast<std::size_t>(j - 1)])));
      MonomialOrder od = order.renamed(sigma, order.name() + "@dual");

      AnchoredMatroid amd = anchor(md, step.anchor);
      ParallelExtensionResult ext = parallel_extension(anchor(cur, step.anchor));
      if (ext.coloop) {
        // The new element is a loop of the result: bases are unchanged.
        cur = std::move(ext.matroid);
        continue;
      }
      auto renames = anchored_renaming(amd);
      std::vector<Binomial> renamed;
      for (const Binomial& g : fd.elements()) renamed.push_back(g.renamed(renames));
      std::vector<VariableId> ambient = fd.ambient();
      BinomialSet f = BinomialSet::make(std::move(ambient), std::move(renamed));
      MonomialOrder base = od.renamed(renames, od.name() + "@anchored");
      BinomialSet lifted = lift_series_extension(f, amd.gamma(), amd.basis_count());
      MonomialOrder lifted_order = series_ext_order(base, amd.gamma(), amd.basis_count());
      auto [cg, co] = canonicalize_generators(ext.matroid, ext.map, lifted, lifted_order);
      cur = std::move(ext.matroid);
      gens = std::move(cg);
      order = std::move(co);
    }
  }

  VarBasisMap map;
  for (int j = 1; j <= cur.basis_count(); ++j)
    map.entries.emplace_back(VariableId::basis(1, j), cur.basis(j));
  ConstructionReport report{std::move(cur), std::move(map),  gens,
                            order,          std::move(gens), std::move(order),
                            std::nullopt,   std::nullopt,    std::nullopt};
  if (verify) run_verification(report);
  return report;
}

}  // namespace matoric
