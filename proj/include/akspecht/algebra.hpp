#pragma once

// The Ariki-Koike algebra H^r_m(q; u_1..u_m) in its normal-form basis
//   L_1^{c_1} ... L_r^{c_r} T_w,   0 <= c_k < m,  w in S_r,
// with exact right-multiplication tables for the generators T_0..T_{r-1}.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "akspecht/combinatorics.hpp"
#include "akspecht/error.hpp"
#include "akspecht/parameters.hpp"
#include "akspecht/sparse.hpp"
#include "akspecht/symmetric_group.hpp"

namespace ak {

struct Monomial {
  std::vector<int> c;
  Permutation w;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

template <class F>
class Algebra {
 public:
  using Field = F;
  using E = typename F::Element;
  using Elem = SparseVec<E>;

  explicit Algebra(Parameters<F> P, std::size_t size_guard = kDefaultSizeGuard);

  const Parameters<F>& params() const { return P_; }
  const F& field() const { return P_.field(); }
  int m() const { return P_.m(); }
  int r() const { return r_; }
  std::size_t dimension() const { return dim_; }
  const SymmetricGroupTable& group() const { return G_; }

  std::uint32_t index(const std::vector<int>& c, std::size_t w_idx) const;
  std::uint32_t index(const Monomial& mono) const;
  Monomial monomial(std::uint32_t b) const;
  /// Exponent vector of basis element b.
  std::vector<int> exponents(std::uint32_t b) const;
  std::size_t perm_index(std::uint32_t b) const { return b % G_.size(); }

  Elem one() const { return basis_element(0); }
  Elem scalar(const E& x) const;
  Elem basis_element(std::uint32_t b) const { return Elem{{b, field().one()}}; }
  /// The generator T_g, 0 <= g < r.
  Elem T(int g) const;
  Elem T(const Permutation& w) const;
  Elem jucys_murphy(int k) const;

  /// Image of basis element b under right multiplication by T_g.
  const Elem& action(int g, std::uint32_t b) const { return tables_[g][b]; }
  Elem right_mul_generator(const Elem& e, int g) const;
  Elem right_mul_word(Elem e, const std::vector<int>& word) const;
  Elem right_mul_perm(const Elem& e, const Permutation& w) const;
  Elem multiply(const Elem& a, const Elem& b) const;

  /// Generator word and scalar with basis element b = scale * T_{word[0]} T_{word[1]} ...
  const std::vector<int>& word(std::uint32_t b) const { return words_[b]; }
  const E& word_scale(std::uint32_t b) const { return word_scales_[b]; }

  Elem add(const Elem& a, const Elem& b) const { return ak::add<F>(a, b, field().one()); }
  Elem sub(const Elem& a, const Elem& b) const { return ak::add<F>(a, b, -field().one()); }
  Elem scale(const Elem& a, const E& s) const { return scaled<F>(a, s); }

  /// Sorts terms by index, merges duplicates and drops zeros.
  static Elem combine(std::vector<std::pair<std::uint32_t, E>> terms);

 private:
  class Builder;
  Parameters<F> P_;
  int r_;
  SymmetricGroupTable G_;
  std::size_t dim_ = 0;
  std::vector<std::vector<Elem>> tables_;
  std::vector<std::vector<int>> words_;
  std::vector<E> word_scales_;
};

enum class Sign { plus, minus };

/// x_comp = sum T_w (plus) or y_comp = sum (-q)^{-l(w)} T_w (minus) over the Young subgroup.
template <class F>
SparseVec<typename F::Element> xy_element(const Algebra<F>& A, const Composition& comp, Sign sign);

/// (L_1 - x)(L_2 - x)...(L_a - x).
template <class F>
SparseVec<typename F::Element> pi_element(const Algebra<F>& A, int a, const typename F::Element& x);

/// pi_a (tilde = false) or pi~_a (tilde = true) for an interval vector a.
template <class F>
SparseVec<typename F::Element> pi_element(const Algebra<F>& A, const IntervalVector& a, bool tilde);

template <class F>
SparseVec<typename F::Element> x_element(const Algebra<F>& A, const Multipartition& L);
template <class F>
SparseVec<typename F::Element> y_element(const Algebra<F>& A, const Multipartition& L);
/// x_L T_{w_L} y_{L'}.
template <class F>
SparseVec<typename F::Element> z_element(const Algebra<F>& A, const Multipartition& L);
/// y_L T_{w_L} x_{L'}.
template <class F>
SparseVec<typename F::Element> twisted_z_element(const Algebra<F>& A, const Multipartition& L);
/// y_{L'} T_{w_{L'}} z_L.
template <class F>
SparseVec<typename F::Element> simple_generator(const Algebra<F>& A, const Multipartition& L);
/// pi_a T_{w_a} pi~_{a'}.
template <class F>
SparseVec<typename F::Element> v_element(const Algebra<F>& A, const IntervalVector& a);

/// The anti-linear-in-q isomorphism H(q; u_1..u_m) -> H(q^{-1}; u_m..u_1):
/// T_0 -> T_0, T_j -> -q T_j (q of the source), hence L_k -> L_k.
template <class F>
SparseVec<typename F::Element> phi_map(const Algebra<F>& src, const Algebra<F>& dst, const SparseVec<typename F::Element>& e);

struct RelationCheck {
  std::string name;
  bool pass = true;
  std::size_t instances = 0;
};

struct SelfTestReport {
  int m = 0, r = 0;
  std::size_t basis_size = 0;
  std::size_t expected_size = 0;
  std::vector<RelationCheck> relations;
  bool pass() const;
};

template <class F>
SelfTestReport relations_selftest(const Algebra<F>& A);

}  // namespace ak
