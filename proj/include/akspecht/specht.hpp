#pragma once

// Specht, twisted Specht and simple modules as right submodules of the
// regular representation, with the standard-basis and rank-one checks.

#include <cstdint>
#include <string>
#include <vector>

#include "akspecht/algebra.hpp"
#include "akspecht/linalg.hpp"

namespace ak {

/// Standard tableau count via multinomial x hook lengths.
std::uint64_t dimension_by_hooks(const Multipartition& L);
/// Standard tableau count via explicit enumeration.
std::uint64_t dimension_by_enumeration(const Multipartition& L);
/// Both counts; throws InternalError if they disagree.
std::uint64_t dimension_oracle(const Multipartition& L);

struct SpechtReport {
  Multipartition L;
  ParameterSpec params;
  std::size_t computed_dim = 0;
  std::uint64_t oracle_dim = 0;

  bool basis_checked = false;
  bool basis_verified = false;
  bool purity_checked = false;
  bool pure = false;

  std::size_t column_count = 0, dual_row_count = 0;
  bool column_independent = false, dual_row_independent = false;
  bool column_spans = false, dual_row_spans = false;
  bool spans_equal = false;
  /// Whether the two index sets of permutations coincide (reported, not asserted).
  bool index_sets_equal = false;
  std::string counterexample;

  bool pass() const { return basis_checked && basis_verified && computed_dim == oracle_dim; }
};

template <class F>
SubmoduleBasis<F> specht_module(const Algebra<F>& A, const Multipartition& L, Exec exec = Exec::parallel) {
  return submodule_closure(A, {vectorize(A, z_element(A, L))}, all_generators(A.r()), exec);
}

template <class F>
SubmoduleBasis<F> twisted_specht_module(const Algebra<F>& A, const Multipartition& L, Exec exec = Exec::parallel) {
  return submodule_closure(A, {vectorize(A, twisted_z_element(A, L))}, all_generators(A.r()), exec);
}

template <class F>
SpechtReport verify_standard_basis(const Algebra<F>& A, const Multipartition& L) {
  using Vec = SparseVec<typename F::Element>;
  SpechtReport rep;
  rep.L = L;
  rep.params = A.params().spec();
  rep.oracle_dim = dimension_oracle(L);
  const Vec z = z_element(A, L);
  SubmoduleBasis<F> S = submodule_closure(A, {z}, all_generators(A.r()));
  rep.computed_dim = S.rank();

  auto column = standard_tableau_perms(L, TableauFlavor::column);
  auto dual_row = standard_tableau_perms(L, TableauFlavor::dual_row);
  rep.index_sets_equal = column == dual_row;
  rep.column_count = column.size();
  rep.dual_row_count = dual_row.size();

  auto family = [&](const std::vector<Permutation>& ds, bool& independent, bool& spans, const char* name) {
    SubmoduleBasis<F> B(A.dimension());
    independent = true;
    for (const auto& d : ds) {
      Vec v = A.right_mul_perm(z, d);
      if (!B.insert(v)) {
        independent = false;
        if (rep.counterexample.empty())
          rep.counterexample = std::string(name) + ": z T_d for d = " + d.str() + " depends on the earlier vectors";
      }
      if (!S.contains(v) && rep.counterexample.empty())
        rep.counterexample = std::string(name) + ": z T_d for d = " + d.str() + " lies outside z H";
    }
    spans = B.rank() == S.rank() && same_subspace(B, S);
    if (!spans && rep.counterexample.empty())
      rep.counterexample = std::string(name) + ": span has rank " + std::to_string(B.rank()) + " but z H has rank " +
                           std::to_string(S.rank());
    return B;
  };
  SubmoduleBasis<F> Bc = family(column, rep.column_independent, rep.column_spans, "column");
  SubmoduleBasis<F> Bd = family(dual_row, rep.dual_row_independent, rep.dual_row_spans, "dual-row");
  rep.spans_equal = same_subspace(Bc, Bd);
  rep.basis_checked = true;
  rep.basis_verified = rep.column_independent && rep.dual_row_independent && rep.column_spans && rep.dual_row_spans &&
                       rep.spans_equal;
  if (rep.computed_dim != rep.oracle_dim && rep.counterexample.empty())
    rep.counterexample = "dimension " + std::to_string(rep.computed_dim) + " differs from the tableau count " +
                         std::to_string(rep.oracle_dim);

  // Over a field: the basis vectors stay independent inside x_L H.
  SubmoduleBasis<F> X = submodule_closure(A, {x_element(A, L)}, all_generators(A.r()));
  rep.purity_checked = true;
  rep.pure = rep.column_independent;
  for (const auto& row : S.rows()) rep.pure = rep.pure && X.contains(row);
  return rep;
}

struct RankOneReport {
  std::size_t rank = 0;
  bool z_in_span = false;
  bool pass() const { return rank == 1 && z_in_span; }
};

/// Span of x_L b y_{L'} over all basis monomials b.
template <class F>
RankOneReport rank_one_report(const Algebra<F>& A, const Multipartition& L) {
  using Vec = SparseVec<typename F::Element>;
  const Vec x = x_element(A, L);
  const Vec y = y_element(A, dual_multipartition(L));
  std::vector<std::uint32_t> idx(A.dimension());
  for (std::uint32_t b = 0; b < A.dimension(); ++b) idx[b] = b;
  std::vector<Vec> products;
  batch_map(idx, products, [&](std::uint32_t b) {
    Vec xb = A.scale(A.right_mul_word(x, A.word(b)), A.word_scale(b));
    return A.multiply(xb, y);
  }, Exec::parallel);
  SubmoduleBasis<F> B(A.dimension());
  for (const auto& p : products) B.insert(p);
  RankOneReport rep;
  rep.rank = B.rank();
  rep.z_in_span = B.contains(z_element(A, L));
  return rep;
}

template <class F>
bool rank_one_check(const Algebra<F>& A, const Multipartition& L) {
  return rank_one_report(A, L).pass();
}

/// Throws RegimeError unless f_{m,r} != 0 and L is l-regular.
template <class F>
void require_simple_regime(const Parameters<F>& P, const Multipartition& L) {
  if (F::is_zero(separation_product(P)))
    throw RegimeError("simple modules D^L need a nonzero separation product f_{m,r}");
  QuantumChar l = quantum_characteristic(P);
  if (!is_l_regular(L, l))
    throw RegimeError(L.str() + " is not " + std::to_string(l.value_or(0)) + "-regular");
}

template <class F>
SubmoduleBasis<F> simple_module(const Algebra<F>& A, const Multipartition& L, Exec exec = Exec::parallel) {
  require_simple_regime(A.params(), L);
  return submodule_closure(A, {vectorize(A, simple_generator(A, L))}, all_generators(A.r()), exec);
}

}  // namespace ak
