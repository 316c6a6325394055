#include <set>

#include "doctest.h"

#include "akspecht/json_io.hpp"
#include "akspecht/parameters.hpp"

using namespace ak;

namespace {
Parameters<PrimeField> prime_point(std::uint32_t p, long long q, std::vector<long long> u, int r) {
  PrimeField K(p);
  std::vector<ModElem> us;
  for (auto x : u) us.push_back(K.from_int(x));
  return Parameters<PrimeField>(K, K.from_int(q), us, r);
}

// l from integer arithmetic: least a with (1 + q + ... + q^{a-1}) mod p == 0.
QuantumChar order_oracle(long long p, long long q) {
  long long s = 0, t = 1;
  for (long long a = 1; a <= p; ++a) {
    s = (s + t) % p;
    if (s == 0) return static_cast<int>(a);
    t = t * q % p;
  }
  return std::nullopt;
}

// Nodes (i,j)_k that occur in some m-partition of r.
std::vector<Node> reachable_nodes(int m, int r) {
  std::vector<Node> out;
  for (int k = 1; k <= m; ++k)
    for (int i = 1; i <= r; ++i)
      for (int j = 1; i * j <= r; ++j) out.push_back({i, j, k});
  return out;
}

template <class F>
void residue_pairs_agree(const Parameters<F>& P) {
  auto nodes = reachable_nodes(P.m(), P.r());
  for (const auto& a : nodes)
    for (const auto& b : nodes) CHECK((field_residue(a, P) == field_residue(b, P)) == (residue(a, P) == residue(b, P)));
}
}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField K(7);
  CHECK(K.from_int(-1) == K.from_int(6));
  CHECK(K.parse("3/4") * K.from_int(4) == K.from_int(3));
  CHECK(K.parse("-2") == K.from_int(5));
  for (int a = 1; a < 7; ++a) CHECK(K.from_int(a) * K.from_int(a).inverse() == K.one());
  CHECK_THROWS_AS(K.zero().inverse(), ContractError);
  CHECK_THROWS_AS(PrimeField(8), ContractError);
  CHECK_THROWS_AS(K.parse("1/7"), ContractError);
  CHECK_THROWS_AS(K.parse("x"), ContractError);
}

TEST_CASE("rational field parsing") {
  RationalField Q;
  CHECK(Q.parse("6/4") == mpq_class(3, 2));
  CHECK(Q.parse("-5") == mpq_class(-5));
  CHECK(RationalField::to_string(Q.parse("6/4")) == "3/2");
  CHECK_THROWS_AS(Q.parse("1/0"), ContractError);
  CHECK_THROWS_AS(Q.parse("abc"), ContractError);
  CHECK(power(Q, Q.from_int(2), -3) == mpq_class(1, 8));
}

TEST_CASE("quantum characteristic") {
  CHECK(quantum_characteristic(prime_point(5, 1, {1}, 2)) == QuantumChar(5));
  CHECK(quantum_characteristic(generic_parameters(2, 3)) == std::nullopt);
  CHECK(quantum_characteristic(prime_point(5, 4, {1, 2}, 3)) == QuantumChar(2));
  RationalField Q;
  CHECK(quantum_characteristic(Parameters<RationalField>(Q, Q.from_int(-1), {Q.one()}, 2)) == QuantumChar(2));
  CHECK(quantum_characteristic(Parameters<RationalField>(Q, Q.one(), {Q.one()}, 2)) == std::nullopt);
  for (long long p : {2, 3, 5, 7, 11, 13})
    for (long long q = 1; q < p; ++q) CHECK(quantum_characteristic(prime_point(p, q, {1}, 2)) == order_oracle(p, q));
}

TEST_CASE("separation product") {
  CHECK(separation_product(prime_point(7, 3, {2}, 4)) == PrimeField(7).one());
  CHECK(separation_product(prime_point(5, 4, {1, 2}, 3)) == PrimeField(5).one());
  // factors u_1 q^k - u_2 for k = -2..2 are 4, 2, 4, 2, 4
  PrimeField K(5);
  auto P = prime_point(5, 4, {1, 2}, 3);
  ModElem prod = K.one();
  for (int k = -2; k <= 2; ++k) prod *= power(K, P.q(), k) * P.u(1) - P.u(2);
  CHECK(prod == K.from_int(256));
  CHECK(!RationalField::is_zero(separation_product(generic_parameters(3, 4))));
  CHECK(PrimeField::is_zero(separation_product(prime_point(5, 2, {1, 2}, 3))));
}

TEST_CASE("vanishing at r - 1 forces vanishing at r") {
  for (long long q = 1; q < 7; ++q)
    for (long long u2 = 1; u2 < 7; ++u2)
      for (int r = 2; r <= 5; ++r) {
        auto lo = prime_point(7, q, {1, u2}, r - 1);
        auto hi = lo.with_rank(r);
        if (PrimeField::is_zero(separation_product(lo))) CHECK(PrimeField::is_zero(separation_product(hi)));
      }
}

TEST_CASE("semisimple regime") {
  for (int m = 1; m <= 3; ++m)
    for (int r = 1; r <= 5; ++r) CHECK(is_semisimple_regime(generic_parameters(m, r)));
  CHECK_FALSE(is_semisimple_regime(prime_point(5, 4, {1, 2}, 3)));
  for (long long q = 1; q < 5; ++q) CHECK(is_semisimple_regime(prime_point(5, q, {3}, 1)));
}

TEST_CASE("generic parameters") {
  auto P = generic_parameters(2, 3);
  CHECK(P.q() == 2);
  CHECK(P.u(1) == 1);
  CHECK(P.u(2) == 2187);
  CHECK(generic_parameters(1, 4).m() == 1);
  CHECK_THROWS_AS(generic_parameters(0, 2), ContractError);
}

TEST_CASE("f5 fixture") {
  auto s = f5_fixture_spec();
  auto P = make_parameters(PrimeField(5), s);
  CHECK(quantum_characteristic(P) == QuantumChar(2));
  CHECK(separation_product(P) == PrimeField(5).one());
  auto file = load_parameter_file(std::string(AKSPECHT_SOURCE_DIR) + "/fixtures/f5.json");
  CHECK(file.field == s.field);
  CHECK(file.q == s.q);
  CHECK(file.u == s.u);
}

TEST_CASE("modular parameter search") {
  for (auto [m, r, l] : std::vector<std::tuple<int, int, int>>{{2, 3, 2}, {2, 4, 3}, {3, 3, 2}, {1, 4, 5}}) {
    auto s = find_modular_parameters(m, r, l);
    REQUIRE(s.field.kind == FieldKind::prime);
    auto P = make_parameters(PrimeField(s.field.p), s);
    CHECK(P.m() == m);
    CHECK(quantum_characteristic(P) == QuantumChar(l));
    CHECK(!PrimeField::is_zero(separation_product(P)));
  }
}

TEST_CASE("residues") {
  auto F5 = make_parameters(PrimeField(5), f5_fixture_spec());
  CHECK(residue(Node{1, 1, 2}, F5) == Residue{2, 0});
  CHECK(residue(Node{1, 3, 1}, F5) == Residue{1, 0});
  CHECK(field_residue(Node{1, 3, 1}, F5) == F5.u(1));
  CHECK(canonical_residue(Node{2, 1, 2}, 3) == Residue{2, 2});
  CHECK(canonical_residue(Node{2, 1, 2}, std::nullopt) == Residue{2, -1});
  CHECK_THROWS_AS(residue(Node{1, 1, 1}, prime_point(5, 2, {1, 2}, 3)), RegimeError);
}

TEST_CASE("lemma 4.6: canonical residues match field residues") {
  residue_pairs_agree(make_parameters(PrimeField(5), f5_fixture_spec()));
  for (int m = 1; m <= 3; ++m)
    for (int r = 1; r <= 5; ++r) residue_pairs_agree(generic_parameters(m, r));
  // q = 1 points carry a different residue, so only q != 1 points are compared.
  for (auto [m, r, l] : std::vector<std::tuple<int, int, int>>{{2, 4, 4}, {3, 3, 2}, {2, 5, 4}, {2, 4, 3}}) {
    auto s = find_modular_parameters(m, r, l);
    if (s.q == "1") continue;
    residue_pairs_agree(make_parameters(PrimeField(s.field.p), s));
  }
}

TEST_CASE("parameter json") {
  auto s = f5_fixture_spec();
  auto back = parameter_spec_from_json(to_json(s));
  CHECK(back.field == s.field);
  CHECK(back.q == s.q);
  CHECK(back.u == s.u);
  CHECK(back.m == s.m);
  CHECK(back.r == s.r);
  CHECK_THROWS_AS(parameter_spec_from_json(json{{"field", "reals"}, {"q", "2"}, {"u", {"1"}}}), ContractError);
  CHECK_THROWS_AS(parameter_spec_from_json(json{{"q", "2"}}), ContractError);
  CHECK_THROWS_AS(parameter_spec_from_json(json{{"field", "Q"}, {"q", "2"}, {"u", {"1", "2"}}, {"m", 3}}), ContractError);
  CHECK_THROWS_AS(load_parameter_file("/nonexistent/params.json"), ContractError);
}
