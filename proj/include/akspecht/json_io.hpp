#pragma once

// JSON forms of the library's values and reports (nlohmann::json).

#include <string>

#include "json.hpp"

#include "akspecht/algebra.hpp"
#include "akspecht/branching.hpp"
#include "akspecht/specht.hpp"

namespace ak {

using json = nlohmann::json;

json to_json(const Partition& p);
json to_json(const Multipartition& L);
Multipartition multipartition_from_json(const json& j);
json to_json(const Node& n);
json to_json(const Residue& r);
json to_json(const Permutation& w);
json to_json(const QuantumChar& l);

/// {"field": {"kind": "rationals"} | {"kind": "prime", "p": 5}, "q": "4", "u": ["1","2"], "m": 2, "r": 3}
json to_json(const ParameterSpec& P);
/// "m" and "r" are optional; m defaults to the length of "u".
ParameterSpec parameter_spec_from_json(const json& j);
ParameterSpec load_parameter_file(const std::string& path);

json to_json(const SelfTestReport& rep);
json to_json(const SpechtReport& rep);
json to_json(const RankOneReport& rep);
json to_json(const BranchReport& rep);
json to_json(const RestrictionReport& rep);
json to_json(const NodeClassification& nc);
json to_json(const ModularReport& rep);

/// [{"c": [...], "w": [...], "coeff": "a/b"}, ...] sorted by basis index.
template <class F>
json element_to_json(const Algebra<F>& A, const SparseVec<typename F::Element>& e) {
  json out = json::array();
  for (const auto& [b, c] : e) {
    Monomial mono = A.monomial(b);
    out.push_back({{"c", mono.c}, {"w", mono.w.images()}, {"coeff", F::to_string(c)}});
  }
  return out;
}

template <class F>
SparseVec<typename F::Element> element_from_json(const Algebra<F>& A, const json& j) {
  std::vector<std::pair<std::uint32_t, typename F::Element>> terms;
  for (const auto& t : j) {
    Monomial mono{t.at("c").get<std::vector<int>>(), Permutation(t.at("w").get<std::vector<int>>())};
    terms.emplace_back(A.index(mono), A.field().parse(t.at("coeff").get<std::string>()));
  }
  return Algebra<F>::combine(std::move(terms));
}

}  // namespace ak
