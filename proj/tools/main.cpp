// akspecht command-line front end.
// Exit codes: 0 ok, 1 a verification failed, 2 usage or regime error.

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "akspecht/branching.hpp"
#include "akspecht/json_io.hpp"

using namespace ak;

namespace {

struct Options {
  std::string params = "generic";
  std::string lambda, lambda_b;
  int m = 0, r = -1;
  bool json = false;
  bool twisted = false;
  std::string flavor = "column";
  std::string convention = "above";
};

ParameterSpec resolve_params(const Options& o, int m, int r) {
  if (o.params == "generic") return generic_parameters(m, std::max(r, 1)).with_rank(r).spec();
  ParameterSpec s = o.params == "f5" ? f5_fixture_spec() : load_parameter_file(o.params);
  if (s.m != m)
    throw ContractError("parameter point has m = " + std::to_string(s.m) + " but the request needs m = " + std::to_string(m));
  s.r = r;
  return s;
}

// Calls fn(Parameters<F>) with the field chosen by the parameter point.
template <class Fn>
int with_params(const Options& o, int m, int r, Fn&& fn) {
  ParameterSpec s = resolve_params(o, m, r);
  if (s.field.kind == FieldKind::prime) return fn(make_parameters(PrimeField(s.field.p), s));
  return fn(make_parameters(RationalField{}, s));
}

Multipartition lambda_of(const Options& o) {
  if (o.lambda.empty()) throw ContractError("--lambda is required");
  return Multipartition::parse(o.lambda);
}

NodeConvention convention_of(const Options& o) {
  if (o.convention == "above") return NodeConvention::above;
  if (o.convention == "below") return NodeConvention::below;
  throw ContractError("--convention must be 'above' or 'below'");
}

std::string yes(bool b) { return b ? "yes" : "no"; }

int emit(std::ostream& out, const Options& o, const json& j, const std::string& text, bool ok) {
  if (o.json)
    out << j.dump(2) << "\n";
  else
    out << text;
  return ok ? 0 : 1;
}

int cmd_enum(std::ostream& out, const Options& o) {
  if (o.m < 1 || o.r < 0) throw ContractError("enum needs --m >= 1 and --r >= 0");
  auto all = enumerate_multipartitions(o.m, o.r);
  json j = json::array();
  std::ostringstream t;
  for (const auto& L : all) {
    j.push_back(to_json(L));
    t << L.str() << "\n";
  }
  t << all.size() << " multipartitions\n";
  return emit(out, o, j, t.str(), true);
}

int cmd_dominance(std::ostream& out, const Options& o) {
  Multipartition A = lambda_of(o);
  if (o.lambda_b.empty()) throw ContractError("--mu is required");
  Multipartition B = Multipartition::parse(o.lambda_b);
  bool le = dominance_le(A, B), ge = dominance_le(B, A);
  json j = {{"lambda", to_json(A)}, {"mu", to_json(B)}, {"lambda_le_mu", le}, {"mu_le_lambda", ge}};
  std::ostringstream t;
  t << A.str() << " <= " << B.str() << ": " << yes(le) << "\n" << B.str() << " <= " << A.str() << ": " << yes(ge) << "\n";
  return emit(out, o, j, t.str(), true);
}

int cmd_tableaux(std::ostream& out, const Options& o) {
  Multipartition L = lambda_of(o);
  TableauFlavor f;
  if (o.flavor == "column")
    f = TableauFlavor::column;
  else if (o.flavor == "dual-row")
    f = TableauFlavor::dual_row;
  else
    throw ContractError("--flavor must be 'column' or 'dual-row'");
  auto perms = standard_tableau_perms(L, f);
  json j = {{"multipartition", to_json(L)}, {"flavor", o.flavor}, {"count", perms.size()}, {"perms", json::array()}};
  std::ostringstream t;
  for (const auto& d : perms) {
    j["perms"].push_back(to_json(d));
    t << d.str() << "\n";
  }
  t << perms.size() << " permutations (tableau count " << dimension_oracle(L) << ")\n";
  return emit(out, o, j, t.str(), perms.size() == dimension_oracle(L));
}

int cmd_w_elements(std::ostream& out, const Options& o) {
  Multipartition L = lambda_of(o);
  auto [bar, a] = concatenate(L);
  Permutation w = w_of_multipartition(L);
  Permutation wa = w_of_interval(a);
  auto factors = w_component_factors(L);
  json jf = json::array();
  for (const auto& f : factors) jf.push_back(to_json(f));
  json jn = json::array();
  for (const auto& [n, jv] : j_numbers(L)) jn.push_back({{"node", to_json(n)}, {"j", jv}});
  json j = {{"multipartition", to_json(L)}, {"bar", bar.parts}, {"interval", a.bounds()}, {"w_lambda", to_json(w)},
            {"w_interval", to_json(wa)}, {"w_factors", jf}, {"j_numbers", jn}};
  std::ostringstream t;
  t << "bar       ";
  for (int p : bar.parts) t << " " << p;
  t << "\ninterval   [";
  for (std::size_t i = 0; i < a.bounds().size(); ++i) t << (i ? "," : "") << a.bounds()[i];
  t << "]\nw_lambda   " << w.str() << "\nw_interval " << wa.str() << "\n";
  for (std::size_t k = 0; k < factors.size(); ++k) t << "w_(" << k + 1 << ")      " << factors[k].str() << "\n";
  for (const auto& [n, jv] : j_numbers(L)) t << "j" << n.str() << " = " << jv << "\n";
  return emit(out, o, j, t.str(), true);
}

int cmd_selftest(std::ostream& out, const Options& o) {
  if (o.m < 1 || o.r < 0) throw ContractError("algebra-selftest needs --m >= 1 and --r >= 0");
  return with_params(o, o.m, o.r, [&](const auto& P) {
    using F = typename std::decay_t<decltype(P)>::Field;
    Algebra<F> A(P);
    auto rep = relations_selftest(A);
    std::ostringstream t;
    t << "basis size " << rep.basis_size << " (expected " << rep.expected_size << ")\n";
    for (const auto& rel : rep.relations) t << std::left << std::setw(40) << rel.name << (rel.pass ? "pass" : "FAIL") << "\n";
    return emit(out, o, to_json(rep), t.str(), rep.pass());
  });
}

int cmd_specht_dim(std::ostream& out, const Options& o) {
  Multipartition L = lambda_of(o);
  return with_params(o, L.m(), L.r(), [&](const auto& P) {
    using F = typename std::decay_t<decltype(P)>::Field;
    Algebra<F> A(P);
    auto gen = o.twisted ? twisted_z_element(A, L) : z_element(A, L);
    auto S = submodule_closure(A, {gen}, all_generators(A.r()));
    std::uint64_t oracle = dimension_oracle(L);
    json j = {{"multipartition", to_json(L)}, {"parameters", to_json(P.spec())}, {"twisted", o.twisted},
              {"dim", S.rank()}, {"oracle_dim", oracle}, {"generator", element_to_json(A, gen)}};
    std::ostringstream t;
    t << (o.twisted ? "twisted " : "") << "Specht module " << L.str() << ": dim " << S.rank() << ", tableau count " << oracle
      << "\n";
    return emit(out, o, j, t.str(), S.rank() == oracle);
  });
}

int cmd_verify_basis(std::ostream& out, const Options& o) {
  Multipartition L = lambda_of(o);
  return with_params(o, L.m(), L.r(), [&](const auto& P) {
    using F = typename std::decay_t<decltype(P)>::Field;
    Algebra<F> A(P);
    auto rep = verify_standard_basis(A, L);
    std::ostringstream t;
    t << "standard basis of " << L.str() << "\n"
      << "  dim " << rep.computed_dim << ", tableau count " << rep.oracle_dim << "\n"
      << "  column family:   " << rep.column_count << " vectors, independent " << yes(rep.column_independent)
      << ", spans " << yes(rep.column_spans) << "\n"
      << "  dual-row family: " << rep.dual_row_count << " vectors, independent " << yes(rep.dual_row_independent)
      << ", spans " << yes(rep.dual_row_spans) << "\n"
      << "  spans equal " << yes(rep.spans_equal) << ", index sets equal " << yes(rep.index_sets_equal) << "\n"
      << "  pure in x H " << yes(rep.pure) << "\n"
      << (rep.pass() ? "PASS\n" : "FAIL: " + rep.counterexample + "\n");
    return emit(out, o, to_json(rep), t.str(), rep.pass());
  });
}

int cmd_verify_rank_one(std::ostream& out, const Options& o) {
  Multipartition L = lambda_of(o);
  return with_params(o, L.m(), L.r(), [&](const auto& P) {
    using F = typename std::decay_t<decltype(P)>::Field;
    Algebra<F> A(P);
    auto rep = rank_one_report(A, L);
    json j = to_json(rep);
    j["multipartition"] = to_json(L);
    std::ostringstream t;
    t << "rank of x H y' for " << L.str() << ": " << rep.rank << ", contains z: " << yes(rep.z_in_span) << "\n"
      << (rep.pass() ? "PASS\n" : "FAIL\n");
    return emit(out, o, j, t.str(), rep.pass());
  });
}

int cmd_branch_ordinary(std::ostream& out, const Options& o) {
  Multipartition L = lambda_of(o);
  return with_params(o, L.m(), L.r(), [&](const auto& P) {
    using F = typename std::decay_t<decltype(P)>::Field;
    Algebra<F> A(P);
    auto rep = ordinary_filtration(A, L).second;
    std::ostringstream t;
    t << std::left << std::setw(10) << "node" << std::setw(5) << "j" << std::setw(16) << "section" << std::setw(9) << "dim"
      << "expected\n";
    for (const auto& r : rep.records)
      t << std::setw(10) << r.node.str() << std::setw(5) << r.j << std::setw(16) << r.removed.str() << std::setw(9)
        << r.section_dim << r.expected_dim << "\n";
    t << "j decreasing " << yes(rep.j_decreasing) << ", top equals S " << yes(rep.top_is_specht) << "\n"
      << (rep.pass ? "PASS\n" : "FAIL\n");
    return emit(out, o, to_json(rep), t.str(), rep.pass);
  });
}

int cmd_branch_semisimple(std::ostream& out, const Options& o) {
  Multipartition L = lambda_of(o);
  return with_params(o, L.m(), L.r(), [&](const auto& P) {
    using F = typename std::decay_t<decltype(P)>::Field;
    Algebra<F> A(P);
    auto rep = restriction_decomposition_check(A, L);
    std::ostringstream t;
    t << std::left << std::setw(10) << "node" << std::setw(16) << "summand" << std::setw(6) << "dim" << "multiplicity\n";
    for (const auto& s : rep.summands)
      t << std::setw(10) << s.node.str() << std::setw(16) << s.removed.str() << std::setw(6) << s.dim << s.multiplicity << "\n";
    t << "sum " << rep.summand_dim_total << " vs dim " << rep.dim << "\n" << (rep.pass ? "PASS\n" : "FAIL\n");
    return emit(out, o, to_json(rep), t.str(), rep.pass);
  });
}

int cmd_nodes_classify(std::ostream& out, const Options& o) {
  Multipartition L = lambda_of(o);
  NodeConvention c = convention_of(o);
  return with_params(o, L.m(), L.r(), [&](const auto& P) {
    auto nodes = classify_nodes(L, P, c);
    json j = {{"multipartition", to_json(L)}, {"l", to_json(quantum_characteristic(P))}, {"convention", to_string(c)},
              {"nodes", json::array()}};
    std::ostringstream t;
    t << std::left << std::setw(10) << "node" << std::setw(10) << "residue" << "status\n";
    for (const auto& n : nodes) {
      j["nodes"].push_back(to_json(n));
      t << std::setw(10) << n.node.str() << std::setw(10) << n.residue.str() << to_string(n.status) << "\n";
    }
    return emit(out, o, j, t.str(), true);
  });
}

int cmd_branch_modular(std::ostream& out, const Options& o) {
  Multipartition L = lambda_of(o);
  NodeConvention c = convention_of(o);
  return with_params(o, L.m(), L.r(), [&](const auto& P) {
    using F = typename std::decay_t<decltype(P)>::Field;
    Algebra<F> A(P);
    auto rep = modular_branching_check(A, L, c);
    std::ostringstream t;
    t << "dim D = " << rep.dim_D << ", socle of the restriction (" << to_string(c) << " convention)\n";
    t << std::left << std::setw(14) << "rho" << std::setw(6) << "h_S" << std::setw(6) << "h_D" << "expected\n";
    for (const auto& r : rep.rows) {
      if (r.h_S == 0 && r.h_D == 0 && r.expected_S == 0 && r.expected_D == 0) continue;
      t << std::setw(14) << r.rho.str() << std::setw(6) << r.h_S << std::setw(6) << r.h_D << r.expected_S << "," << r.expected_D
        << "\n";
    }
    t << (rep.pass ? "PASS\n" : "FAIL\n");
    return emit(out, o, to_json(rep), t.str(), rep.pass);
  });
}

int cmd_sum_of_squares(std::ostream& out, const Options& o) {
  if (o.m < 1 || o.r < 0) throw ContractError("sum-of-squares needs --m >= 1 and --r >= 0");
  return with_params(o, o.m, o.r, [&](const auto& P) {
    using F = typename std::decay_t<decltype(P)>::Field;
    Algebra<F> A(P);
    std::size_t total = 0;
    json rows = json::array();
    std::ostringstream t;
    for (const auto& L : enumerate_multipartitions(o.m, o.r)) {
      std::size_t d = specht_module(A, L).rank();
      total += d * d;
      rows.push_back({{"multipartition", to_json(L)}, {"dim", d}});
      t << std::left << std::setw(16) << L.str() << d << "\n";
    }
    bool ok = total == A.dimension();
    t << "sum of squares " << total << ", algebra dimension " << A.dimension() << "\n" << (ok ? "PASS\n" : "FAIL\n");
    json j = {{"dims", rows}, {"sum_of_squares", total}, {"algebra_dim", A.dimension()}, {"pass", ok}};
    return emit(out, o, j, t.str(), ok);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ariki-Koike algebras, Specht modules and branching checks"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* c) {
    c->add_option("--params", o.params, "generic, f5, or a parameter JSON file")->capture_default_str();
    c->add_flag("--json", o.json, "JSON output");
  };
  auto add_lambda = [&](CLI::App* c) {
    c->add_option("--lambda", o.lambda, "multipartition, e.g. \"3,1|2,2|1\" (0 for an empty component)")->required();
  };
  auto add_mr = [&](CLI::App* c) {
    c->add_option("--m", o.m, "number of components")->required();
    c->add_option("--r", o.r, "rank")->required();
  };

  auto* c_enum = app.add_subcommand("enum", "list all m-multipartitions of r");
  add_mr(c_enum);
  c_enum->add_flag("--json", o.json, "JSON output");
  auto* c_dom = app.add_subcommand("dominance", "compare two multipartitions in the dominance order");
  add_lambda(c_dom);
  c_dom->add_option("--mu", o.lambda_b, "second multipartition")->required();
  c_dom->add_flag("--json", o.json, "JSON output");
  auto* c_tab = app.add_subcommand("tableaux", "permutations d with t d standard");
  add_lambda(c_tab);
  c_tab->add_option("--flavor", o.flavor, "column or dual-row")->capture_default_str();
  c_tab->add_flag("--json", o.json, "JSON output");
  auto* c_w = app.add_subcommand("w-elements", "distinguished permutations and j-numbers");
  add_lambda(c_w);
  c_w->add_flag("--json", o.json, "JSON output");
  auto* c_self = app.add_subcommand("algebra-selftest", "check the defining relations on the regular representation");
  add_mr(c_self);
  add_params(c_self);
  auto* c_dim = app.add_subcommand("specht-dim", "dimension of a Specht module");
  add_lambda(c_dim);
  add_params(c_dim);
  c_dim->add_flag("--twisted", o.twisted, "use the twisted Specht module");
  auto* c_verify = app.add_subcommand("verify", "standard-basis and rank-one checks");
  c_verify->require_subcommand(1);
  auto* c_sb = c_verify->add_subcommand("standard-basis", "verify the standard basis");
  add_lambda(c_sb);
  add_params(c_sb);
  auto* c_r1 = c_verify->add_subcommand("rank-one", "verify x H y' is spanned by z");
  add_lambda(c_r1);
  add_params(c_r1);
  auto* c_branch = app.add_subcommand("branch", "restriction to rank r-1");
  c_branch->require_subcommand(1);
  auto* c_bo = c_branch->add_subcommand("ordinary", "Specht filtration of the restriction");
  add_lambda(c_bo);
  add_params(c_bo);
  auto* c_bs = c_branch->add_subcommand("semisimple", "decomposition of the restriction");
  add_lambda(c_bs);
  add_params(c_bs);
  auto* c_bm = c_branch->add_subcommand("modular", "socle of the restricted simple module");
  add_lambda(c_bm);
  add_params(c_bm);
  c_bm->add_option("--convention", o.convention, "above or below")->capture_default_str();
  auto* c_nodes = app.add_subcommand("nodes", "node classification");
  c_nodes->require_subcommand(1);
  auto* c_nc = c_nodes->add_subcommand("classify", "normal and good removable nodes");
  add_lambda(c_nc);
  add_params(c_nc);
  c_nc->add_option("--convention", o.convention, "above or below")->capture_default_str();
  auto* c_sos = app.add_subcommand("sum-of-squares", "sum of squared Specht dimensions");
  add_mr(c_sos);
  add_params(c_sos);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ostream& out = std::cout;
    if (c_enum->parsed()) return cmd_enum(out, o);
    if (c_dom->parsed()) return cmd_dominance(out, o);
    if (c_tab->parsed()) return cmd_tableaux(out, o);
    if (c_w->parsed()) return cmd_w_elements(out, o);
    if (c_self->parsed()) return cmd_selftest(out, o);
    if (c_dim->parsed()) return cmd_specht_dim(out, o);
    if (c_sb->parsed()) return cmd_verify_basis(out, o);
    if (c_r1->parsed()) return cmd_verify_rank_one(out, o);
    if (c_bo->parsed()) return cmd_branch_ordinary(out, o);
    if (c_bs->parsed()) return cmd_branch_semisimple(out, o);
    if (c_bm->parsed()) return cmd_branch_modular(out, o);
    if (c_nc->parsed()) return cmd_nodes_classify(out, o);
    if (c_sos->parsed()) return cmd_sum_of_squares(out, o);
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RegimeError& e) {
    std::cerr << "regime error: " << e.what() << "\n";
    return 2;
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
