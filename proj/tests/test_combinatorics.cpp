#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "akspecht/combinatorics.hpp"
#include "akspecht/error.hpp"
#include "akspecht/specht.hpp"

using namespace ak;

namespace {
Multipartition mp(std::initializer_list<std::vector<int>> c) { return Multipartition(c); }

// Dominance straight from the definition: the offset for component i+1 is
// a_1 + ... + a_i with a_j the cumulative sizes.
bool dominates_oracle(const Multipartition& A, const Multipartition& B) {
  int sa = 0, sb = 0, ca = 0, cb = 0;
  for (int i = 1; i <= A.m(); ++i) {
    const auto& a = A.component(i);
    const auto& b = B.component(i);
    int pa = sa, pb = sb;
    for (int l = 1; l <= std::max(a.length(), b.length()); ++l) {
      pa += a.row(l);
      pb += b.row(l);
      if (pa > pb) return false;
    }
    ca += a.size();
    cb += b.size();
    sa += ca;
    sb += cb;
  }
  return true;
}

std::vector<Multipartition> all_upto(int m, int r) {
  std::vector<Multipartition> out;
  for (int n = 0; n <= r; ++n)
    for (auto& L : enumerate_multipartitions(m, n)) out.push_back(L);
  return out;
}
}  // namespace

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition({3, 2})) == Partition({2, 2, 1}));
  CHECK(conjugate(Partition({4})) == Partition({1, 1, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());
  for (int n = 0; n <= 9; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      CHECK(conjugate(p).parts() == oracle::conjugate(p.parts()));
      CHECK(conjugate(conjugate(p)) == p);
    }
}

TEST_CASE("partition construction rejects bad input") {
  CHECK_THROWS_AS(Partition({1, 2}), ContractError);
  CHECK_THROWS_AS(Partition({2, -1}), ContractError);
  CHECK(Partition({2, 1, 0, 0}).parts() == std::vector<int>{2, 1});
  CHECK(Partition({2, 1, 0}).size() == 3);
}

TEST_CASE("dual multipartition") {
  CHECK(dual_multipartition(mp({{3, 1}, {2, 2}, {1}})) == mp({{1}, {2, 2}, {2, 1, 1}}));
  CHECK(dual_multipartition(mp({{1}, {1}})) == mp({{1}, {1}}));
  for (const auto& L : all_upto(3, 5)) CHECK(dual_multipartition(dual_multipartition(L)) == L);
}

TEST_CASE("concatenate") {
  auto [c, a] = concatenate(mp({{3, 1}, {2, 2}, {1}}));
  CHECK(c.parts == std::vector<int>{3, 1, 2, 2, 1});
  CHECK(a.bounds() == std::vector<int>{0, 4, 8, 9});
  auto [c2, a2] = concatenate(mp({{}, {2}}));
  CHECK(c2.parts == std::vector<int>{2});
  CHECK(a2.bounds() == std::vector<int>{0, 0, 2});
  auto [c3, a3] = concatenate(mp({{1}, {1}}));
  CHECK(c3.parts == std::vector<int>{1, 1});
  CHECK(a3.bounds() == std::vector<int>{0, 1, 2});
  CHECK(interval_vector(mp({{3, 1}, {2, 2}, {1}})).dual().bounds() == std::vector<int>{0, 1, 5, 9});
}

TEST_CASE("dominance examples") {
  CHECK(dominance_le(mp({{1, 1}, {}}), mp({{2}, {}})));
  CHECK(dominance_le(mp({{}, {2}}), mp({{2}, {}})));
  CHECK_FALSE(dominance_le(mp({{2}, {}}), mp({{}, {2}})));
  CHECK_THROWS_AS(dominance_le(mp({{1}, {}}), mp({{2}, {}})), ContractError);
  CHECK_THROWS_AS(dominance_le(mp({{2}}), mp({{2}, {}})), ContractError);
}

TEST_CASE("dominance agrees with prefix sums and is a partial order") {
  for (auto [m, r] : std::vector<std::pair<int, int>>{{1, 6}, {2, 4}, {3, 3}}) {
    auto all = enumerate_multipartitions(m, r);
    for (const auto& A : all) {
      CHECK(dominance_le(A, A));
      for (const auto& B : all) {
        bool ab = dominance_le(A, B);
        CHECK(ab == dominates_oracle(A, B));
        if (ab && dominance_le(B, A)) CHECK(A == B);
        if (!ab) continue;
        for (const auto& C : all)
          if (dominance_le(B, C)) CHECK(dominance_le(A, C));
      }
    }
  }
}

TEST_CASE("lemma 1.6: equal interval vectors reduce dominance to components") {
  for (auto [m, r] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}}) {
    auto all = enumerate_multipartitions(m, r);
    for (const auto& A : all)
      for (const auto& B : all) {
        if (!(interval_vector(A) == interval_vector(B))) continue;
        bool componentwise = true;
        for (int i = 1; i <= m; ++i)
          componentwise = componentwise && partition_dominance_le(A.component(i), B.component(i));
        CHECK(dominance_le(A, B) == componentwise);
      }
  }
}

TEST_CASE("enumeration") {
  auto two = enumerate_multipartitions(2, 2);
  REQUIRE(two.size() == 5);
  CHECK(two[0] == mp({{2}, {}}));
  CHECK(two[1] == mp({{1, 1}, {}}));
  CHECK(two[2] == mp({{1}, {1}}));
  CHECK(two[3] == mp({{}, {2}}));
  CHECK(two[4] == mp({{}, {1, 1}}));
  CHECK(enumerate_multipartitions(1, 3).size() == 3);
  auto empty = enumerate_multipartitions(4, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].m() == 4);
  CHECK(empty[0].r() == 0);
  for (int m = 1; m <= 4; ++m)
    for (int r = 0; r <= 7; ++r) {
      auto all = enumerate_multipartitions(m, r);
      CHECK(all.size() == oracle::multipartition_count(m, r));
      CHECK(std::set<Multipartition>(all.begin(), all.end()).size() == all.size());
      for (const auto& L : all) {
        CHECK(L.m() == m);
        CHECK(L.r() == r);
      }
    }
  CHECK_THROWS_AS(enumerate_multipartitions(0, 2), ContractError);
}

TEST_CASE("removable and addable nodes") {
  auto L = mp({{3, 1}, {2, 2}, {1}});
  CHECK(removable_nodes(L) == std::vector<Node>{{1, 3, 1}, {2, 1, 1}, {2, 2, 2}, {1, 1, 3}});
  CHECK(removable_nodes(mp({{1}, {1}})) == std::vector<Node>{{1, 1, 1}, {1, 1, 2}});
  CHECK(removable_nodes(mp({{}, {}})).empty());
  CHECK(addable_nodes(mp({{2, 1}})) == std::vector<Node>{{1, 3, 1}, {2, 2, 1}, {3, 1, 1}});
  CHECK(addable_nodes(mp({{}, {1}})) == std::vector<Node>{{1, 1, 1}, {1, 2, 2}, {2, 1, 2}});
  CHECK_THROWS_AS(remove_node(L, Node{1, 2, 1}), ContractError);
  CHECK_THROWS_AS(add_node(L, Node{1, 3, 1}), ContractError);

  for (const auto& M : all_upto(3, 5)) {
    std::size_t per_component = 0;
    for (int k = 1; k <= M.m(); ++k) {
      const auto& p = M.component(k);
      for (int i = 1; i <= p.length(); ++i) per_component += p.row(i) > p.row(i + 1);
    }
    CHECK(removable_nodes(M).size() == per_component);
    for (const auto& n : removable_nodes(M)) {
      auto smaller = remove_node(M, n);
      CHECK(smaller.r() == M.r() - 1);
      CHECK(add_node(smaller, n) == M);
      auto back = addable_nodes(smaller);
      CHECK(std::find(back.begin(), back.end(), n) != back.end());
    }
    for (const auto& a : addable_nodes(M)) CHECK(remove_node(add_node(M, a), a) == M);
  }
}

TEST_CASE("tau bijection onto removable nodes of the dual") {
  for (const auto& L : all_upto(3, 6)) {
    std::set<Node> image;
    for (const auto& n : removable_nodes(L)) image.insert(Node{n.col, n.row, L.m() - n.comp + 1});
    auto dual = removable_nodes(dual_multipartition(L));
    CHECK(image == std::set<Node>(dual.begin(), dual.end()));
    CHECK(image.size() == dual.size());
  }
}

TEST_CASE("j-numbers") {
  auto js = j_numbers(mp({{3, 1}, {2, 2}, {1}}));
  REQUIRE(js.size() == 4);
  CHECK(js[0].second == 9);
  CHECK(js[1].second == 7);
  CHECK(js[2].second == 5);
  CHECK(js[3].second == 1);
  auto hook = j_numbers(mp({{2, 1}}));
  REQUIRE(hook.size() == 2);
  CHECK(hook[0] == std::pair<Node, int>{Node{1, 2, 1}, 3});
  CHECK(hook[1] == std::pair<Node, int>{Node{2, 1, 1}, 2});
  for (int r = 1; r <= 6; ++r) {
    auto row = j_numbers(Multipartition({Partition({r})}));
    REQUIRE(row.size() == 1);
    CHECK(row[0].second == r);
  }
  for (const auto& L : all_upto(3, 6)) {
    auto t = column_tableau(L);
    auto j = j_numbers(L);
    for (std::size_t i = 0; i < j.size(); ++i) {
      CHECK(tableau_entry(t, j[i].first) == j[i].second);
      if (i) CHECK(j[i].second < j[i - 1].second);
    }
  }
}

TEST_CASE("tableaux") {
  auto L = mp({{3, 1}, {2, 2}, {1}});
  auto t = row_tableau(L);
  CHECK(t[0][0] == std::vector<int>{1, 2, 3});
  CHECK(t[0][1] == std::vector<int>{4});
  CHECK(t[2][0] == std::vector<int>{9});
  auto c = column_tableau(L);
  CHECK(c[0][0] == std::vector<int>{6, 8, 9});
  CHECK(c[0][1] == std::vector<int>{7});
  CHECK(c[1][0] == std::vector<int>{2, 4});
  CHECK(c[1][1] == std::vector<int>{3, 5});
  CHECK(c[2][0] == std::vector<int>{1});
  CHECK(is_standard(t));
  CHECK(is_standard(c));
  CHECK(enumerate_standard_tableaux(mp({{2, 1}})).size() == 2);
}

TEST_CASE("l-regularity") {
  CHECK_FALSE(is_l_regular(mp({{1, 1, 1}}), 2));
  CHECK(is_l_regular(mp({{2}, {1}}), 2));
  CHECK(is_l_regular(mp({{1, 1, 1}}), 4));
  CHECK_FALSE(is_l_regular(mp({{3}, {2, 2, 1}}), 2));
  for (const auto& L : all_upto(2, 6)) CHECK(is_l_regular(L, std::nullopt));
}

TEST_CASE("text form") {
  auto L = Multipartition::parse("3,1|2,2|1");
  CHECK(L == mp({{3, 1}, {2, 2}, {1}}));
  CHECK(L.str() == "3,1|2,2|1");
  CHECK(Multipartition::parse("0|2").str() == "0|2");
  CHECK(Multipartition::parse("0|2") == mp({{}, {2}}));
  CHECK_THROWS_AS(Multipartition::parse("1,2|1"), ContractError);
  CHECK_THROWS_AS(Multipartition::parse("a|1"), ContractError);
  CHECK_THROWS_AS(Multipartition::parse(""), ContractError);
  for (const auto& M : all_upto(3, 4)) CHECK(Multipartition::parse(M.str()) == M);
}

TEST_CASE("hook length count against enumeration") {
  for (int n = 0; n <= 9; ++n)
    for (const auto& p : enumerate_partitions(n))
      CHECK(hook_length_count(p) == enumerate_standard_tableaux(Multipartition({p})).size());
}

TEST_CASE("dimension oracle: both routes agree") {
  CHECK(dimension_by_hooks(mp({{3, 1}, {2, 2}, {1}})) == 3780);
  CHECK(dimension_oracle(mp({{2}, {1}})) == 3);
  CHECK(dimension_oracle(mp({{}, {}, {}})) == 1);
  for (int m = 1; m <= 3; ++m)
    for (int r = 0; r <= 6; ++r)
      for (const auto& L : enumerate_multipartitions(m, r)) CHECK(dimension_by_hooks(L) == dimension_by_enumeration(L));
}
