#include "akspecht/json_io.hpp"

#include <fstream>

namespace ak {

json to_json(const Partition& p) { return p.parts(); }

json to_json(const Multipartition& L) {
  json comps = json::array();
  for (const auto& p : L.components()) comps.push_back(to_json(p));
  return {{"components", comps}};
}

Multipartition multipartition_from_json(const json& j) {
  const json& comps = j.is_object() ? j.at("components") : j;
  std::vector<Partition> parts;
  for (const auto& c : comps) parts.emplace_back(c.get<std::vector<int>>());
  return Multipartition(std::move(parts));
}

json to_json(const Node& n) { return {{"row", n.row}, {"col", n.col}, {"comp", n.comp}}; }

json to_json(const Residue& r) { return {{"comp", r.comp}, {"offset", r.offset}}; }

json to_json(const Permutation& w) { return w.images(); }

json to_json(const QuantumChar& l) { return l ? json(*l) : json("inf"); }

json to_json(const ParameterSpec& P) {
  json field = P.field.kind == FieldKind::prime ? json{{"kind", "prime"}, {"p", P.field.p}} : json{{"kind", "rationals"}};
  return {{"field", field}, {"q", P.q}, {"u", P.u}, {"m", P.m}, {"r", P.r}};
}

namespace {
std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ContractError("parameter values must be strings or integers");
}
}  // namespace

ParameterSpec parameter_spec_from_json(const json& j) {
  try {
    ParameterSpec s;
    const json& f = j.at("field");
    std::string kind = f.is_string() ? f.get<std::string>() : f.at("kind").get<std::string>();
    if (kind == "rationals" || kind == "Q")
      s.field = FieldSpec::rationals();
    else if (kind == "prime")
      s.field = FieldSpec::prime(f.at("p").get<std::uint32_t>());
    else
      throw ContractError("unknown field kind '" + kind + "'");
    s.q = scalar_text(j.at("q"));
    for (const auto& u : j.at("u")) s.u.push_back(scalar_text(u));
    s.m = j.contains("m") ? j.at("m").get<int>() : static_cast<int>(s.u.size());
    if (s.m != static_cast<int>(s.u.size())) throw ContractError("m does not match the number of u values");
    s.r = j.contains("r") ? j.at("r").get<int>() : 0;
    return s;
  } catch (const json::exception& e) {
    throw ContractError(std::string("invalid parameter JSON: ") + e.what());
  }
}

ParameterSpec load_parameter_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open parameter file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ContractError("parameter file " + path + " is not valid JSON: " + e.what());
  }
  return parameter_spec_from_json(j);
}

json to_json(const SelfTestReport& rep) {
  json rels = json::array();
  for (const auto& r : rep.relations) rels.push_back({{"relation", r.name}, {"pass", r.pass}, {"instances", r.instances}});
  return {{"m", rep.m}, {"r", rep.r}, {"basis_size", rep.basis_size}, {"expected_size", rep.expected_size},
          {"relations", rels}, {"pass", rep.pass()}};
}

json to_json(const SpechtReport& rep) {
  return {{"multipartition", to_json(rep.L)},
          {"parameters", to_json(rep.params)},
          {"computed_dim", rep.computed_dim},
          {"oracle_dim", rep.oracle_dim},
          {"basis_checked", rep.basis_checked},
          {"basis_verified", rep.basis_verified},
          {"purity_checked", rep.purity_checked},
          {"pure", rep.pure},
          {"column_count", rep.column_count},
          {"dual_row_count", rep.dual_row_count},
          {"column_independent", rep.column_independent},
          {"dual_row_independent", rep.dual_row_independent},
          {"column_spans", rep.column_spans},
          {"dual_row_spans", rep.dual_row_spans},
          {"spans_equal", rep.spans_equal},
          {"index_sets_equal", rep.index_sets_equal},
          {"counterexample", rep.counterexample},
          {"pass", rep.pass()}};
}

json to_json(const RankOneReport& rep) {
  return {{"rank", rep.rank}, {"z_in_span", rep.z_in_span}, {"pass", rep.pass()}};
}

json to_json(const BranchReport& rep) {
  json recs = json::array();
  for (const auto& r : rep.records)
    recs.push_back({{"node", to_json(r.node)},
                    {"j", r.j},
                    {"removed", to_json(r.removed)},
                    {"section_dim", r.section_dim},
                    {"expected_dim", r.expected_dim}});
  return {{"multipartition", to_json(rep.L)}, {"parameters", to_json(rep.params)}, {"records", recs},
          {"j_decreasing", rep.j_decreasing}, {"top_is_specht", rep.top_is_specht}, {"pass", rep.pass}};
}

json to_json(const RestrictionReport& rep) {
  json s = json::array();
  for (const auto& x : rep.summands)
    s.push_back({{"node", to_json(x.node)}, {"removed", to_json(x.removed)}, {"dim", x.dim}, {"multiplicity", x.multiplicity}});
  return {{"multipartition", to_json(rep.L)}, {"dim", rep.dim}, {"summand_dim_total", rep.summand_dim_total},
          {"summands", s}, {"pass", rep.pass}};
}

json to_json(const NodeClassification& nc) {
  return {{"node", to_json(nc.node)}, {"residue", to_json(nc.residue)}, {"status", to_string(nc.status)}};
}

json to_json(const ModularReport& rep) {
  json nodes = json::array();
  for (const auto& n : rep.nodes) nodes.push_back(to_json(n));
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"rho", to_json(r.rho)},
                    {"h_S", r.h_S},
                    {"h_D", r.h_D},
                    {"expected_S", r.expected_S},
                    {"expected_D", r.expected_D},
                    {"match", r.match()}});
  return {{"multipartition", to_json(rep.L)}, {"parameters", to_json(rep.params)},
          {"convention", to_string(rep.convention)}, {"dim_D", rep.dim_D}, {"nodes", nodes}, {"rows", rows},
          {"pass", rep.pass}};
}

}  // namespace ak
