#include <set>

#include "doctest.h"

#include "akspecht/branching.hpp"

using namespace ak;

namespace {
using QA = Algebra<RationalField>;
Parameters<PrimeField> f5(int r) { return make_parameters(PrimeField(5), f5_fixture_spec()).with_rank(r); }

std::set<Node> with_status(const std::vector<NodeClassification>& v, NodeStatus at_least) {
  std::set<Node> out;
  for (const auto& c : v)
    if (c.status == at_least || (at_least == NodeStatus::normal && c.status == NodeStatus::good)) out.insert(c.node);
  return out;
}
}  // namespace

TEST_CASE("filtration examples") {
  QA A(generic_parameters(2, 2));
  auto [chain, rep] = ordinary_filtration(A, Multipartition({{1}, {1}}));
  REQUIRE(rep.records.size() == 2);
  CHECK(rep.records[0].removed == Multipartition({{}, {1}}));
  CHECK(rep.records[1].removed == Multipartition({{1}, {}}));
  CHECK(rep.records[0].section_dim == 1);
  CHECK(rep.records[1].section_dim == 1);
  CHECK(rep.pass);

  QA H(generic_parameters(1, 3));
  auto [chain2, hook] = ordinary_filtration(H, Multipartition({{2, 1}}));
  REQUIRE(hook.records.size() == 2);
  CHECK(hook.records[0].removed == Multipartition({{1, 1}}));
  CHECK(hook.records[1].removed == Multipartition({{2}}));
  CHECK(hook.pass);

  for (auto L : {Multipartition({{1}, {}}), Multipartition({{}, {1}})}) {
    auto [c, r1] = ordinary_filtration(QA(generic_parameters(2, 1)), L);
    REQUIRE(r1.records.size() == 1);
    CHECK(r1.records[0].section_dim == 1);
    CHECK(r1.pass);
  }
  CHECK_THROWS_AS(ordinary_filtration(A, Multipartition({{2}})), ContractError);
}

TEST_CASE("filtration in generic and modular points") {
  for (auto [m, r] : std::vector<std::pair<int, int>>{{1, 4}, {2, 2}, {3, 2}}) {
    QA A(generic_parameters(m, r));
    for (const auto& L : enumerate_multipartitions(m, r)) {
      auto [chain, rep] = ordinary_filtration(A, L);
      CHECK(rep.pass);
      CHECK(rep.j_decreasing);
      CHECK(rep.top_is_specht);
    }
  }
  Algebra<PrimeField> B(f5(2));
  for (const auto& L : enumerate_multipartitions(2, 2)) CHECK(ordinary_filtration(B, L).second.pass);
}

TEST_CASE("restriction decomposition") {
  QA A(generic_parameters(2, 2));
  auto rep = restriction_decomposition_check(A, Multipartition({{1}, {1}}));
  CHECK(rep.pass);
  CHECK(rep.summands.size() == 2);
  CHECK(rep.dim == 2);
  QA C(generic_parameters(2, 3));
  auto rep2 = restriction_decomposition_check(C, Multipartition({{2}, {1}}));
  CHECK(rep2.pass);
  CHECK(rep2.summand_dim_total == 3);
  QA H(generic_parameters(1, 3));
  auto hook = restriction_decomposition_check(H, Multipartition({{2, 1}}));
  CHECK(hook.pass);
  REQUIRE(hook.summands.size() == 2);
  CHECK(hook.summands[0].removed == Multipartition({{1, 1}}));
  CHECK(hook.summands[1].removed == Multipartition({{2}}));
  Algebra<PrimeField> B(f5(3));
  CHECK_THROWS_AS(restriction_decomposition_check(B, Multipartition({{2}, {1}})), RegimeError);
}

TEST_CASE("node classification examples") {
  auto hook = classify_nodes(Multipartition({{2, 1}}), 2, NodeConvention::above);
  CHECK(with_status(hook, NodeStatus::normal) == std::set<Node>{{1, 2, 1}, {2, 1, 1}});
  CHECK(with_status(hook, NodeStatus::good) == std::set<Node>{{2, 1, 1}});
  auto P = f5(3);
  auto two_one = classify_nodes(Multipartition({{2}, {1}}), P);
  CHECK(with_status(two_one, NodeStatus::good) == std::set<Node>{{1, 2, 1}, {1, 1, 2}});
  PrimeField K(5);
  Parameters<PrimeField> bad(K, K.from_int(2), {K.from_int(1), K.from_int(2)}, 2);
  CHECK_THROWS_AS(classify_nodes(Multipartition({{1}, {1}}), bad), RegimeError);
  // good implies normal
  for (const auto& L : enumerate_multipartitions(2, 4))
    for (const auto& c : classify_nodes(L, 2, NodeConvention::above))
      if (c.status == NodeStatus::good) CHECK(with_status(classify_nodes(L, 2, NodeConvention::above), NodeStatus::normal).count(c.node));
}

TEST_CASE("signature scan agrees with brute-force matching") {
  for (int r = 0; r <= 8; ++r)
    for (int m = 1; m <= (r <= 5 ? 3 : 1); ++m)
      for (const auto& L : enumerate_multipartitions(m, r))
        for (int l : {2, 3, 4})
          for (auto conv : {NodeConvention::above, NodeConvention::below}) {
            auto a = classify_nodes(L, l, conv);
            auto b = classify_nodes_by_matching(L, l, conv);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
              CHECK(a[i].node == b[i].node);
              CHECK(a[i].residue == b[i].residue);
              CHECK_MESSAGE(a[i].status == b[i].status, L.str() << " l=" << l << " node " << a[i].node.str());
            }
          }
}

TEST_CASE("every removable node is good in the semisimple regime") {
  for (int m = 1; m <= 3; ++m)
    for (int r = 1; r <= 5; ++r) {
      auto P = generic_parameters(m, r);
      for (const auto& L : enumerate_multipartitions(m, r))
        for (const auto& c : classify_nodes(L, P)) CHECK(c.status == NodeStatus::good);
    }
}

TEST_CASE("modular branching at the F5 point") {
  Algebra<PrimeField> B(f5(3));
  auto rep = modular_branching_check(B, Multipartition({{2}, {1}}));
  CHECK(rep.pass);
  std::set<Multipartition> socle;
  for (const auto& row : rep.rows)
    if (row.h_D == 1) socle.insert(row.rho);
  CHECK(socle == std::set<Multipartition>{Multipartition({{1}, {1}}), Multipartition({{2}, {}})});
  for (const auto& L : enumerate_multipartitions(2, 3))
    if (is_l_regular(L, 2)) CHECK(modular_branching_check(B, L).pass);
  CHECK_THROWS_AS(modular_branching_check(B, Multipartition({{1, 1, 1}, {}})), RegimeError);
}

TEST_CASE("modular branching in the semisimple regime") {
  QA A(generic_parameters(2, 3));
  for (const auto& L : enumerate_multipartitions(2, 3)) {
    auto rep = modular_branching_check(A, L);
    CHECK(rep.pass);
    std::size_t ones = 0;
    for (const auto& row : rep.rows) {
      CHECK(row.h_S == row.h_D);
      ones += row.h_D;
    }
    CHECK(ones == removable_nodes(L).size());
  }
}

TEST_CASE("the below convention fails at the F5 point") {
  Algebra<PrimeField> B(f5(3));
  CHECK_FALSE(modular_branching_check(B, Multipartition({{2}, {1}}), NodeConvention::below).pass);
  CHECK_FALSE(modular_branching_check(B, Multipartition({{1}, {2}}), NodeConvention::below).pass);
}
