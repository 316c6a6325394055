#pragma once

// Restriction from rank r to rank r-1: the Specht filtration indexed by
// removable nodes, the semisimple decomposition, normal and good nodes, and
// socles of restricted simple modules.

#include <string>
#include <utility>
#include <vector>

#include "akspecht/specht.hpp"

namespace ak {

struct NodeRecord {
  Node node;
  int j = 0;
  Multipartition removed;
  std::size_t section_dim = 0;
  std::uint64_t expected_dim = 0;
};

struct BranchReport {
  Multipartition L;
  ParameterSpec params;
  std::vector<NodeRecord> records;
  bool j_decreasing = false;
  bool top_is_specht = false;
  bool pass = false;
};

inline std::vector<int> subalgebra_generators(int r) { return all_generators(r - 1); }

/// M_t = M_{t-1} + z_L T_{s_{j_t, r}} H^{r-1}, t = 1..N, in removable-node order.
template <class F>
std::pair<std::vector<SubmoduleBasis<F>>, BranchReport> ordinary_filtration(const Algebra<F>& A, const Multipartition& L) {
  using Vec = SparseVec<typename F::Element>;
  if (A.r() < 1) throw ContractError("the filtration needs r >= 1");
  if (L.m() != A.m() || L.r() != A.r()) throw ContractError("multipartition does not match the algebra");
  const int r = A.r();
  const auto gens = subalgebra_generators(r);
  BranchReport rep;
  rep.L = L;
  rep.params = A.params().spec();
  const Vec z = z_element(A, L);
  auto js = j_numbers(L);
  rep.j_decreasing = true;
  for (std::size_t t = 1; t < js.size(); ++t) rep.j_decreasing = rep.j_decreasing && js[t].second < js[t - 1].second;

  std::vector<SubmoduleBasis<F>> chain;
  for (const auto& [node, j] : js) {
    std::vector<Vec> seeds;
    if (!chain.empty()) seeds = chain.back().rows();
    seeds.push_back(A.right_mul_perm(z, cycle_element(j, r, r)));
    chain.push_back(submodule_closure(A, seeds, gens));
    NodeRecord rec;
    rec.node = node;
    rec.j = j;
    rec.removed = remove_node(L, node);
    rec.expected_dim = dimension_oracle(rec.removed);
    rep.records.push_back(std::move(rec));
  }
  auto sections = section_dimensions(chain);
  for (std::size_t t = 0; t < sections.size(); ++t) rep.records[t].section_dim = sections[t];

  SubmoduleBasis<F> S = submodule_closure(A, {z}, all_generators(r));
  rep.top_is_specht = !chain.empty() && same_subspace(chain.back(), S);
  rep.pass = rep.j_decreasing && rep.top_is_specht;
  for (const auto& rec : rep.records) rep.pass = rep.pass && rec.section_dim == rec.expected_dim;
  return {std::move(chain), std::move(rep)};
}

struct RestrictionSummand {
  Node node;
  Multipartition removed;
  std::size_t dim = 0;
  std::size_t multiplicity = 0;
};

struct RestrictionReport {
  Multipartition L;
  std::size_t dim = 0;
  std::size_t summand_dim_total = 0;
  std::vector<RestrictionSummand> summands;
  bool pass = false;
};

template <class F>
RestrictionReport restriction_decomposition_check(const Algebra<F>& A, const Multipartition& L) {
  if (!is_semisimple_regime(A.params())) throw RegimeError("restriction decomposition needs the semisimple regime");
  if (A.r() < 1) throw ContractError("restriction needs r >= 1");
  const auto gens = subalgebra_generators(A.r());
  Algebra<F> B(A.params().with_rank(A.r() - 1));
  SubmoduleBasis<F> S = specht_module(A, L).restricted(gens);
  RestrictionReport rep;
  rep.L = L;
  rep.dim = S.rank();
  rep.pass = true;
  for (const auto& n : removable_nodes(L)) {
    RestrictionSummand s;
    s.node = n;
    s.removed = remove_node(L, n);
    SubmoduleBasis<F> Sn = specht_module(B, s.removed);
    s.dim = Sn.rank();
    s.multiplicity = hom_dimension(Sn, S, gens);
    rep.summand_dim_total += s.dim;
    rep.pass = rep.pass && s.multiplicity == 1;
    rep.summands.push_back(std::move(s));
  }
  rep.pass = rep.pass && rep.summand_dim_total == rep.dim;
  return rep;
}

enum class NodeConvention { above, below };
enum class NodeStatus { removable, normal, good };

std::string to_string(NodeConvention c);
std::string to_string(NodeStatus s);

struct NodeClassification {
  Node node;
  Residue residue;
  NodeStatus status = NodeStatus::removable;
};

/// Classification from canonical residues at quantum characteristic l.
std::vector<NodeClassification> classify_nodes(const Multipartition& L, QuantumChar l, NodeConvention convention);
/// The same decision by explicit bipartite matching, used as an oracle.
std::vector<NodeClassification> classify_nodes_by_matching(const Multipartition& L, QuantumChar l, NodeConvention convention);

template <class F>
std::vector<NodeClassification> classify_nodes(const Multipartition& L, const Parameters<F>& P,
                                               NodeConvention convention = NodeConvention::above) {
  if (F::is_zero(separation_product(P))) throw RegimeError("node classification needs a nonzero separation product");
  return classify_nodes(L, quantum_characteristic(P), convention);
}

struct SocleRow {
  Multipartition rho;
  std::size_t h_S = 0, h_D = 0;
  std::size_t expected_S = 0, expected_D = 0;
  bool match() const { return h_S == expected_S && h_D == expected_D; }
};

struct ModularReport {
  Multipartition L;
  ParameterSpec params;
  NodeConvention convention = NodeConvention::above;
  std::size_t dim_D = 0;
  std::vector<NodeClassification> nodes;
  std::vector<SocleRow> rows;
  bool pass = false;
};

template <class F>
ModularReport modular_branching_check(const Algebra<F>& A, const Multipartition& L,
                                      NodeConvention convention = NodeConvention::above) {
  const auto& P = A.params();
  require_simple_regime(P, L);
  if (A.r() < 1) throw ContractError("restriction needs r >= 1");
  const QuantumChar l = quantum_characteristic(P);
  const auto gens = subalgebra_generators(A.r());
  ModularReport rep;
  rep.L = L;
  rep.params = P.spec();
  rep.convention = convention;
  rep.nodes = classify_nodes(L, P, convention);
  SubmoduleBasis<F> D = simple_module(A, L).restricted(gens);
  rep.dim_D = D.rank();
  Algebra<F> B(P.with_rank(A.r() - 1));
  rep.pass = true;
  for (const auto& rho : enumerate_multipartitions(A.m(), A.r() - 1)) {
    if (!is_l_regular(rho, l)) continue;
    SocleRow row;
    row.rho = rho;
    for (const auto& nc : rep.nodes) {
      if (remove_node(L, nc.node) != rho) continue;
      if (nc.status != NodeStatus::removable) row.expected_S = 1;
      if (nc.status == NodeStatus::good) row.expected_D = 1;
    }
    row.h_S = hom_dimension(specht_module(B, rho), D, gens);
    row.h_D = hom_dimension(simple_module(B, rho), D, gens);
    rep.pass = rep.pass && row.match();
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace ak
