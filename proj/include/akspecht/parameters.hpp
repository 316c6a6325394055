#pragma once

// Parameter points (q, u_1..u_m) over an exact field, together with the
// invariants that decide which theorems apply there: the quantum
// characteristic l and the separation product
//   f_{m,r} = prod_{i<j} prod_{|k|<r} (u_i q^k - u_j).

#include <string>
#include <vector>

#include "akspecht/combinatorics.hpp"
#include "akspecht/field.hpp"

namespace ak {

/// Field-agnostic (textual) description of a parameter point, the shape of
/// the JSON parameter files.
struct ParameterSpec {
  FieldSpec field;
  std::string q;
  std::vector<std::string> u;
  int m = 1;
  int r = 0;
};

template <class F>
class Parameters {
 public:
  using Field = F;
  using Element = typename F::Element;

  Parameters(F field, Element q, std::vector<Element> u, int r) : field_(std::move(field)), q_(std::move(q)), u_(std::move(u)), r_(r) {
    if (F::is_zero(q_)) throw ContractError("q must be nonzero");
    if (u_.empty()) throw ContractError("need m >= 1 cyclotomic parameters");
    if (r_ < 0) throw ContractError("r must be non-negative");
  }

  const F& field() const { return field_; }
  const Element& q() const { return q_; }
  /// u_i, 1-based.
  const Element& u(int i) const { return u_.at(i - 1); }
  const std::vector<Element>& us() const { return u_; }
  int m() const { return static_cast<int>(u_.size()); }
  int r() const { return r_; }

  /// Same (q, u) for a different rank.
  Parameters with_rank(int r) const { return Parameters(field_, q_, u_, r); }
  /// (q^{-1}, u_m, ..., u_1): the target of the automorphism twisting x into y.
  Parameters twisted() const {
    std::vector<Element> rev(u_.rbegin(), u_.rend());
    return Parameters(field_, field_.one() / q_, std::move(rev), r_);
  }

  ParameterSpec spec() const;

 private:
  F field_;
  Element q_;
  std::vector<Element> u_;
  int r_;
};

template <class F>
FieldSpec field_spec(const F& field) {
  if constexpr (std::is_same_v<F, PrimeField>)
    return FieldSpec::prime(field.characteristic());
  else
    return FieldSpec::rationals();
}

template <class F>
ParameterSpec Parameters<F>::spec() const {
  ParameterSpec s;
  s.field = field_spec(field_);
  s.q = F::to_string(q_);
  for (const auto& x : u_) s.u.push_back(F::to_string(x));
  s.m = m();
  s.r = r_;
  return s;
}

template <class F>
Parameters<F> make_parameters(const F& field, const ParameterSpec& spec) {
  if (static_cast<int>(spec.u.size()) != spec.m)
    throw ContractError("parameter spec lists " + std::to_string(spec.u.size()) + " values of u but m = " + std::to_string(spec.m));
  std::vector<typename F::Element> u;
  for (const auto& s : spec.u) u.push_back(field.parse(s));
  return Parameters<F>(field, field.parse(spec.q), std::move(u), spec.r);
}

/// Rationals, q = 2, u_i = 3^{(i-1)(2r+1)}: l is infinite and f_{m,r} != 0.
Parameters<RationalField> generic_parameters(int m, int r);
/// F_5, q = 4, u = (1, 2): l = 2 and f_{2,3} = 1.
ParameterSpec f5_fixture_spec();
/// Smallest prime p with an element q of multiplicative order l, and u_i
/// chosen greedily so that f_{m,r} != 0.
ParameterSpec find_modular_parameters(int m, int r, int l);

/// Minimal a >= 1 with 1 + q + ... + q^{a-1} = 0, or infinity.
template <class F>
QuantumChar quantum_characteristic(const Parameters<F>& P) {
  const F& K = P.field();
  auto sum = K.zero();
  auto term = K.one();
  if (K.characteristic() == 0) {
    // Over Q the only root of unity other than 1 is -1.
    if (P.q() == -K.one()) return 2;
    return std::nullopt;
  }
  for (long long a = 1; a <= static_cast<long long>(K.characteristic()); ++a) {
    sum += term;
    if (F::is_zero(sum)) return static_cast<int>(a);
    term *= P.q();
  }
  return std::nullopt;
}

template <class F>
typename F::Element separation_product(const Parameters<F>& P) {
  const F& K = P.field();
  auto f = K.one();
  for (int i = 1; i <= P.m(); ++i)
    for (int j = i + 1; j <= P.m(); ++j)
      for (int k = 1 - P.r(); k <= P.r() - 1; ++k) f *= P.u(i) * power(K, P.q(), k) - P.u(j);
  return f;
}

template <class F>
bool is_semisimple_regime(const Parameters<F>& P) {
  if (F::is_zero(separation_product(P))) return false;
  QuantumChar l = quantum_characteristic(P);
  return !l || *l > P.r();
}

/// Canonical residue of a node: (component, (j - i) mod l), raw j - i when l is infinite.
struct Residue {
  int comp = 1;
  int offset = 0;
  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;
  std::string str() const { return "(" + std::to_string(comp) + "," + std::to_string(offset) + ")"; }
};

inline Residue canonical_residue(const Node& n, QuantumChar l) {
  int d = n.col - n.row;
  if (l) d = ((d % *l) + *l) % *l;
  return {n.comp, d};
}

/// Requires f_{m,r} != 0, where equal field residues force equal canonical pairs.
template <class F>
Residue residue(const Node& n, const Parameters<F>& P) {
  if (F::is_zero(separation_product(P)))
    throw RegimeError("residues are canonicalized only when the separation product is nonzero");
  return canonical_residue(n, quantum_characteristic(P));
}

/// The field value q^{j-i} u_k.
template <class F>
typename F::Element field_residue(const Node& n, const Parameters<F>& P) {
  return power(P.field(), P.q(), n.col - n.row) * P.u(n.comp);
}

}  // namespace ak
