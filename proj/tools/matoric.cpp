// matoric: toric ideals of matroids, their lifted generating sets for
// series/parallel constructions, and oracle verification, over
// deterministic file-based JSON I/O.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matoric/catalog.hpp"
#include "matoric/exchange.hpp"
#include "matoric/io.hpp"
#include "matoric/pipeline.hpp"

namespace {

using matoric::io::json;

struct Output {
  std::string path;  // empty = stdout
  void emit(const json& j) const {
    std::string text = matoric::io::canonical_text(j);
    if (path.empty())
      std::cout << text;
    else
      matoric::io::write_file(path, text);
  }
};

std::vector<matoric::VariableId> basis_vars(int n) {
  std::vector<matoric::VariableId> out;
  for (int j = 1; j <= n; ++j) out.push_back(matoric::VariableId::basis(1, j));
  return out;
}

matoric::Matroid load_matroid(const std::string& path) {
  return matoric::io::read_matroid_file(path);
}

json matroid_info(const matoric::Matroid& m) {
  matoric::ElementClass ec = matoric::classify_elements(m);
  json j;
  j["d"] = m.ground_size();
  j["rank"] = m.rank();
  j["bases"] = m.basis_count();
  j["loops"] = ec.loops;
  j["coloops"] = ec.coloops;
  return j;
}

int report_exit(const matoric::ConstructionReport& report) {
  if (report.generates.has_value() && !*report.generates) {
    std::cerr << "verification failed: constructed generators are not oracle-equal";
    if (report.mismatch) {
      std::cerr << "; separating binomial:";
      for (const auto& [v, e] : report.mismatch->lead().entries())
        std::cerr << " " << v.name() << (e > 1 ? "^" + std::to_string(e) : "");
      std::cerr << " -";
      for (const auto& [v, e] : report.mismatch->trail().entries())
        std::cerr << " " << v.name() << (e > 1 ? "^" + std::to_string(e) : "");
    }
    std::cerr << "\n";
    return 1;
  }
  return 0;
}

matoric::ConstructionReport run_construct(const std::string& kind, const matoric::Matroid& m1,
                                          matoric::Element c1, const matoric::Matroid* m2,
                                          matoric::Element c2, bool verify) {
  if (kind == "series-ext") return matoric::series_extension_pipeline(m1, c1, verify);
  if (kind == "parallel-ext") return matoric::parallel_extension_pipeline(m1, c1, verify);
  if (kind == "series-conn")
    return matoric::series_connection_pipeline(m1, c1, *m2, c2, verify);
  if (kind == "parallel-conn")
    return matoric::parallel_connection_pipeline(m1, c1, *m2, c2, verify);
  return matoric::two_sum_pipeline(m1, c1, *m2, c2, verify);
}

matoric::SpStep parse_step(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw matoric::ParseError("step must be series:<anchor> or parallel:<anchor>");
  const std::string kind = text.substr(0, colon);
  matoric::SpStep step{};
  if (kind == "series" || kind == "s")
    step.kind = matoric::SpStep::Kind::Series;
  else if (kind == "parallel" || kind == "p")
    step.kind = matoric::SpStep::Kind::Parallel;
  else
    throw matoric::ParseError("unknown step kind: " + kind);
  try {
    step.anchor = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw matoric::ParseError("bad step anchor in: " + text);
  }
  return step;
}

matoric::Matroid catalog_matroid(const std::string& spec) {
  if (spec == "mk4") return matoric::named(matoric::NamedMatroid::MK4);
  if (spec == "w3") return matoric::named(matoric::NamedMatroid::W3);
  if (spec == "p6") return matoric::named(matoric::NamedMatroid::P6);
  if (spec == "q6") return matoric::named(matoric::NamedMatroid::Q6);
  if (spec.rfind("u:", 0) == 0) {
    auto comma = spec.find(',');
    if (comma == std::string::npos) throw matoric::ParseError("uniform spec is u:<r>,<n>");
    try {
      int r = std::stoi(spec.substr(2, comma - 2));
      int n = std::stoi(spec.substr(comma + 1));
      return matoric::uniform(r, n);
    } catch (const matoric::Error&) {
      throw;
    } catch (const std::exception&) {
      throw matoric::ParseError("uniform spec is u:<r>,<n>");
    }
  }
  if (spec.rfind("graph:", 0) == 0) return matoric::io::read_graph_file(spec.substr(6));
  throw matoric::ParseError("unknown catalog spec: " + spec +
                            " (use mk4|w3|p6|q6|u:<r>,<n>|graph:<file>)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric ideals of matroid bases and their series/parallel constructions"};
  app.require_subcommand(1);
  Output out;
  int threads = 1;
  app.add_option("--out", out.path, "write the result to a file instead of stdout");
  app.add_option("--threads", threads, "worker threads (reserved; execution is deterministic)");

  // ---- matroid ----------------------------------------------------------
  auto* matroid_cmd = app.add_subcommand("matroid", "single-matroid operations");
  matroid_cmd->require_subcommand(1);
  std::string m_file, m_file2;
  matoric::Element m_at = 1;
  std::string m_subset;
  int m_n = 0;

  auto* mv = matroid_cmd->add_subcommand("validate", "check the exchange axiom, emit canonical form");
  mv->add_option("file", m_file)->required();
  auto* mi = matroid_cmd->add_subcommand("info", "ground size, rank, bases, loops, coloops");
  mi->add_option("file", m_file)->required();
  auto* md = matroid_cmd->add_subcommand("dual", "dual matroid");
  md->add_option("file", m_file)->required();
  auto* mdel = matroid_cmd->add_subcommand("delete", "delete an element (compacted labels)");
  mdel->add_option("file", m_file)->required();
  mdel->add_option("--at", m_at, "element")->required();
  auto* mcon = matroid_cmd->add_subcommand("contract", "contract an element (compacted labels)");
  mcon->add_option("file", m_file)->required();
  mcon->add_option("--at", m_at, "element")->required();
  auto* msum = matroid_cmd->add_subcommand("direct-sum", "direct sum (second ground set shifted)");
  msum->add_option("file", m_file)->required();
  msum->add_option("file2", m_file2)->required();
  auto* mconn = matroid_cmd->add_subcommand("connectivity", "connectivity function / n-connectedness");
  mconn->add_option("file", m_file)->required();
  mconn->add_option("--subset", m_subset, "comma-separated elements for lambda(X)");
  mconn->add_option("--n", m_n, "check n-connectedness");

  // ---- ideal ------------------------------------------------------------
  auto* ideal_cmd = app.add_subcommand("ideal", "generating sets and Groebner bases of J_M");
  ideal_cmd->require_subcommand(1);
  std::string i_file, i_file2, i_method = "exchange", i_order = "degrevlex", i_witnesses,
              i_matrix;
  auto* ig = ideal_cmd->add_subcommand("gens", "generating set of J_M");
  ig->add_option("file", i_file)->required();
  ig->add_option("--method", i_method, "exchange|oracle")
      ->check(CLI::IsMember({"exchange", "oracle"}));
  ig->add_option("--order", i_order, "degrevlex|lex|weight:<file>");
  ig->add_option("--witnesses", i_witnesses, "also write the exchange witness list here");
  ig->add_option("--matrix", i_matrix, "also write the bases matrix dump here");
  auto* igb = ideal_cmd->add_subcommand("gb", "reduced Groebner basis of J_M (oracle)");
  igb->add_option("file", i_file)->required();
  igb->add_option("--order", i_order, "degrevlex|lex|weight:<file>");
  igb->add_option("--matrix", i_matrix, "also write the bases matrix dump here");
  auto* ie = ideal_cmd->add_subcommand("equal", "ideal equality of two binomial-set files");
  ie->add_option("file", i_file)->required();
  ie->add_option("file2", i_file2)->required();
  ie->add_option("--order", i_order, "degrevlex|lex|weight:<file>");

  // ---- white ------------------------------------------------------------
  auto* white_cmd = app.add_subcommand("white", "instance checks of the exchange conjectures");
  white_cmd->require_subcommand(1);
  std::string w_file;
  auto* wg = white_cmd->add_subcommand("check-gen", "exchange set generates J_M (oracle equality)");
  wg->add_option("file", w_file)->required();
  auto* wb = white_cmd->add_subcommand("check-gb",
                                       "search the default orders for a quadratic Groebner basis");
  wb->add_option("file", w_file)->required();

  // ---- construct --------------------------------------------------------
  auto* construct_cmd = app.add_subcommand("construct", "lifted generating-set pipelines");
  construct_cmd->require_subcommand(1);
  std::string c_file, c_file2;
  std::vector<matoric::Element> c_at;
  std::vector<std::string> c_steps;
  bool c_verify = true;
  auto add_verify = [&c_verify](CLI::App* cmd) {
    cmd->add_flag("--verify,!--no-verify", c_verify, "oracle-verify the construction (default on)");
  };
  auto* cse = construct_cmd->add_subcommand("series-ext", "series extension at --at");
  cse->add_option("file", c_file)->required();
  cse->add_option("--at", c_at, "anchor element")->required();
  add_verify(cse);
  auto* cpe = construct_cmd->add_subcommand("parallel-ext", "parallel extension at --at");
  cpe->add_option("file", c_file)->required();
  cpe->add_option("--at", c_at, "anchor element")->required();
  add_verify(cpe);
  auto* csc = construct_cmd->add_subcommand("series-conn", "series connection at the basepoints");
  csc->add_option("file", c_file)->required();
  csc->add_option("file2", c_file2)->required();
  csc->add_option("--at", c_at, "basepoint in each factor (repeat, or once for both)")->required();
  add_verify(csc);
  auto* cpc = construct_cmd->add_subcommand("parallel-conn", "parallel connection at the basepoints");
  cpc->add_option("file", c_file)->required();
  cpc->add_option("file2", c_file2)->required();
  cpc->add_option("--at", c_at, "basepoint in each factor (repeat, or once for both)")->required();
  add_verify(cpc);
  auto* cts = construct_cmd->add_subcommand("two-sum", "2-sum at the basepoints");
  cts->add_option("file", c_file)->required();
  cts->add_option("file2", c_file2)->required();
  cts->add_option("--at", c_at, "basepoint in each factor (repeat, or once for both)")->required();
  add_verify(cts);
  auto* csq = construct_cmd->add_subcommand("sp-sequence", "fold series/parallel extension steps");
  csq->add_option("file", c_file)->required();
  csq->add_option("--step", c_steps, "series:<anchor> or parallel:<anchor> (repeatable)")
      ->required();
  add_verify(csq);

  // ---- minor ------------------------------------------------------------
  auto* minor_cmd = app.add_subcommand("minor", "minor queries");
  minor_cmd->require_subcommand(1);
  std::string n_file, n_file2;
  auto* nh = minor_cmd->add_subcommand("has", "does the first matroid have the second as a minor");
  nh->add_option("file", n_file)->required();
  nh->add_option("target", n_file2)->required();
  auto* nf = minor_cmd->add_subcommand("excluded-free",
                                       "no minor among M(K4), W3, P6, Q6");
  nf->add_option("file", n_file)->required();

  // ---- catalog ----------------------------------------------------------
  auto* catalog_cmd = app.add_subcommand("catalog", "emit a catalog matroid");
  std::string cat_spec;
  catalog_cmd->add_option("spec", cat_spec, "mk4|w3|p6|q6|u:<r>,<n>|graph:<file>")->required();

  // Let --out/--threads appear after subcommand tokens.
  for (CLI::App* group : app.get_subcommands(nullptr)) {
    group->fallthrough();
    for (CLI::App* sub : group->get_subcommands(nullptr)) sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mv) {
      out.emit(matoric::io::matroid_to_json(load_matroid(m_file)));
      return 0;
    }
    if (*mi) {
      out.emit(matroid_info(load_matroid(m_file)));
      return 0;
    }
    if (*md) {
      out.emit(matoric::io::matroid_to_json(matoric::dual(load_matroid(m_file))));
      return 0;
    }
    if (*mdel || *mcon) {
      matoric::Matroid m = load_matroid(m_file);
      matoric::MinorResult r = *mdel ? matoric::delete_element(m, m_at)
                                     : matoric::contract_element(m, m_at);
      std::cerr << "relabel: old element e maps to new label";
      for (matoric::Element e = 1; e <= m.ground_size(); ++e)
        if (e != m_at)
          std::cerr << " " << e << "->" << r.relabel.old_to_new[static_cast<std::size_t>(e - 1)];
      std::cerr << "\n";
      out.emit(matoric::io::matroid_to_json(r.matroid));
      return 0;
    }
    if (*msum) {
      out.emit(matoric::io::matroid_to_json(
          matoric::direct_sum(load_matroid(m_file), load_matroid(m_file2))));
      return 0;
    }
    if (*mconn) {
      matoric::Matroid m = load_matroid(m_file);
      json j;
      bool asked = false;
      if (!m_subset.empty()) {
        std::vector<matoric::Element> subset;
        std::stringstream ss(m_subset);
        for (std::string part; std::getline(ss, part, ',');) subset.push_back(std::stoi(part));
        j["subset"] = subset;
        j["lambda"] = matoric::connectivity_lambda(m, subset);
        asked = true;
      }
      if (mconn->count("--n")) {
        j["n"] = m_n;
        j["n_connected"] = matoric::is_n_connected(m, m_n);
        asked = true;
      }
      if (!asked) throw matoric::ParseError("connectivity needs --subset and/or --n");
      out.emit(j);
      return 0;
    }

    if (*ig || *igb) {
      matoric::Matroid m = load_matroid(i_file);
      matoric::MonomialOrder order =
          matoric::io::order_from_spec(i_order, basis_vars(m.basis_count()));
      if (!i_matrix.empty())
        matoric::io::write_file(i_matrix, matoric::io::canonical_text(matoric::io::matrix_to_json(
                                              matoric::bases_matrix(m))));
      if (*igb || i_method == "oracle") {
        out.emit(matoric::io::binomial_set_to_json(
            matoric::toric_gb(matoric::bases_matrix(m), order)));
        return 0;
      }
      matoric::ExchangeSet ex = matoric::symmetric_exchange_set(m);
      if (!i_witnesses.empty())
        matoric::io::write_file(i_witnesses, matoric::io::canonical_text(
                                                 matoric::io::witnesses_to_json(ex.witnesses)));
      out.emit(matoric::io::binomial_set_to_json(ex.binomials.oriented(order)));
      return 0;
    }
    if (*ie) {
      matoric::BinomialSet a = matoric::io::read_binomial_set_file(i_file);
      matoric::BinomialSet b = matoric::io::read_binomial_set_file(i_file2);
      matoric::MonomialOrder order = matoric::io::order_from_spec(i_order, a.ambient());
      bool equal = matoric::ideals_equal(a, b, order);
      json j;
      j["equal"] = equal;
      out.emit(j);
      return equal ? 0 : 1;
    }

    if (*wg) {
      bool ok = matoric::check_white_generation(load_matroid(w_file));
      json j;
      j["white_generation"] = ok;
      j["scope"] = "single-instance evidence; no class-level claim";
      out.emit(j);
      return ok ? 0 : 1;
    }
    if (*wb) {
      matoric::Matroid m = load_matroid(w_file);
      auto orders = matoric::default_white_orders(m);
      auto found = matoric::check_white_gb(m, orders);
      json j;
      j["white_gb_order"] = found ? matoric::io::order_to_json(*found) : json(nullptr);
      j["scope"] = found ? "single-instance evidence; no class-level claim"
                         : "inconclusive: searched orders failed, not a counterexample";
      out.emit(j);
      return found ? 0 : 1;
    }

    for (auto* cmd : {cse, cpe}) {
      if (!*cmd) continue;
      matoric::Matroid m = load_matroid(c_file);
      matoric::ConstructionReport r =
          run_construct(*cse ? "series-ext" : "parallel-ext", m, c_at.at(0), nullptr, 0, c_verify);
      out.emit(matoric::io::report_to_json(r));
      return report_exit(r);
    }
    for (auto* cmd : {csc, cpc, cts}) {
      if (!*cmd) continue;
      matoric::Matroid m1 = load_matroid(c_file);
      matoric::Matroid m2 = load_matroid(c_file2);
      matoric::Element c1 = c_at.at(0);
      matoric::Element c2 = c_at.size() > 1 ? c_at.at(1) : c_at.at(0);
      const std::string kind = *csc ? "series-conn" : (*cpc ? "parallel-conn" : "two-sum");
      matoric::ConstructionReport r = run_construct(kind, m1, c1, &m2, c2, c_verify);
      out.emit(matoric::io::report_to_json(r));
      return report_exit(r);
    }
    if (*csq) {
      matoric::Matroid m = load_matroid(c_file);
      std::vector<matoric::SpStep> steps;
      for (const std::string& s : c_steps) steps.push_back(parse_step(s));
      matoric::ConstructionReport r = matoric::sp_extension_sequence(m, steps, c_verify);
      out.emit(matoric::io::report_to_json(r));
      return report_exit(r);
    }

    if (*nh) {
      bool has = matoric::has_minor(load_matroid(n_file), load_matroid(n_file2));
      json j;
      j["has_minor"] = has;
      out.emit(j);
      return 0;
    }
    if (*nf) {
      json j;
      j["excluded_minor_free"] = matoric::excluded_minor_free(load_matroid(n_file));
      out.emit(j);
      return 0;
    }

    if (*catalog_cmd) {
      out.emit(matoric::io::matroid_to_json(catalog_matroid(cat_spec)));
      return 0;
    }
  } catch (const matoric::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.input_error() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
