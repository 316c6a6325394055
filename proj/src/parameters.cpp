#include "akspecht/parameters.hpp"

namespace ak {

Parameters<RationalField> generic_parameters(int m, int r) {
  if (m < 1 || r < 1) throw ContractError("generic parameters need m >= 1 and r >= 1");
  RationalField Q;
  std::vector<mpq_class> u;
  for (int i = 1; i <= m; ++i) u.push_back(power(Q, Q.from_int(3), static_cast<long long>(i - 1) * (2 * r + 1)));
  return Parameters<RationalField>(Q, Q.from_int(2), std::move(u), r);
}

ParameterSpec f5_fixture_spec() {
  ParameterSpec s;
  s.field = FieldSpec::prime(5);
  s.q = "4";
  s.u = {"1", "2"};
  s.m = 2;
  s.r = 3;
  return s;
}

ParameterSpec find_modular_parameters(int m, int r, int l) {
  if (m < 1 || r < 1 || l < 2) throw ContractError("modular parameter search needs m >= 1, r >= 1, l >= 2");
  for (std::uint32_t p = 2; p < 100000; ++p) {
    if (!is_prime(p)) continue;
    PrimeField K(p);
    std::vector<ModElem> qs;
    if (p == static_cast<std::uint32_t>(l)) qs.push_back(K.one());
    if ((p - 1) % l == 0)
      for (std::uint32_t q = 2; q < p; ++q) {
        ModElem x = K.from_int(q), y = x;
        int order = 1;
        while (!(y == K.one())) {
          y *= x;
          ++order;
        }
        if (order == l) {
          qs.push_back(x);
          break;
        }
      }
    for (const ModElem& q : qs) {
      std::vector<ModElem> u;
      for (std::uint32_t cand = 1; cand < p && static_cast<int>(u.size()) < m; ++cand) {
        u.push_back(K.from_int(cand));
        Parameters<PrimeField> trial(K, q, u, r);
        if (PrimeField::is_zero(separation_product(trial))) u.pop_back();
      }
      if (static_cast<int>(u.size()) != m) continue;
      Parameters<PrimeField> found(K, q, u, r);
      if (quantum_characteristic(found) != QuantumChar(l)) continue;
      return found.spec();
    }
  }
  throw RegimeError("no prime below 100000 yields the requested parameters");
}

}  // namespace ak
