#pragma once

// Exact linear algebra for right submodules of the regular representation:
// reduced row echelon bases, closure under generator action, section
// dimensions of chains, and Hom-space dimensions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "akspecht/algebra.hpp"
#include "akspecht/error.hpp"
#include "akspecht/kernels.hpp"
#include "akspecht/sparse.hpp"

namespace ak {

/// Dense row-major matrix.
template <class E>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<E> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const E& zero) : rows(r), cols(c), data(r * c, zero) {}
  E& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Fully reduced echelon basis of a subspace of K^ambient: pivot entries are 1
/// and every other row vanishes in each pivot column.
template <class F>
class SubmoduleBasis {
 public:
  using E = typename F::Element;
  using Vec = SparseVec<E>;

  SubmoduleBasis() = default;
  explicit SubmoduleBasis(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot columns; zero iff v is in the span.
  Vec residual(const Vec& v) const {
    if (rows_.empty() || v.empty()) return v;
    std::vector<std::pair<std::uint32_t, E>> acc(v.begin(), v.end());
    for (const auto& [i, c] : v) {
      auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
      if (it == pivots_.end() || *it != i) continue;
      const Vec& row = rows_[it - pivots_.begin()];
      for (const auto& [j, x] : row) acc.emplace_back(j, -(x * c));
    }
    return Algebra<F>::combine(std::move(acc));
  }

  bool contains(const Vec& v) const { return residual(v).empty(); }

  /// Coordinates of v in terms of rows(); throws unless v lies in the span.
  std::vector<E> coordinates(const Vec& v, const E& zero) const {
    std::vector<E> out(rows_.size(), zero);
    for (const auto& [i, c] : v) {
      auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
      if (it != pivots_.end() && *it == i) out[it - pivots_.begin()] = c;
    }
    if (!contains(v)) throw InternalError("vector does not lie in the subspace");
    return out;
  }

  /// Inserts v; returns false when v already lies in the span.
  bool insert(const Vec& v) { return insert_residual(residual(v)); }

  /// Inserts a vector already reduced against the current rows.
  bool insert_residual(Vec w) {
    if (w.empty()) return false;
    for (const auto& [i, c] : w)
      if (i >= ambient_) throw ContractError("vector index outside the ambient space");
    // Earlier candidates in a batch may have introduced new pivots.
    w = residual(w);
    if (w.empty()) return false;
    const std::uint32_t p = w.front().first;
    E inv = reciprocal(w.front().second);
    for (auto& t : w) t.second *= inv;
    for (auto& row : rows_) {
      const E* x = find_coeff(row, p);
      if (!x) continue;
      E s = -*x;
      row = add<F>(row, w, s);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
  }

  bool has_action(int g) const { return action_.count(g) > 0; }
  const Matrix<E>& action(int g) const {
    auto it = action_.find(g);
    if (it == action_.end()) throw ContractError("no action matrix recorded for T_" + std::to_string(g));
    return it->second;
  }
  std::vector<int> generators() const {
    std::vector<int> out;
    for (const auto& kv : action_) out.push_back(kv.first);
    return out;
  }
  void set_action(int g, Matrix<E> M) { action_[g] = std::move(M); }

  /// Same subspace with only the listed action matrices kept.
  SubmoduleBasis restricted(const std::vector<int>& gens) const {
    SubmoduleBasis out = *this;
    out.action_.clear();
    for (int g : gens) out.action_[g] = action(g);
    return out;
  }

  /// Same subspace and rows.
  friend bool same_subspace(const SubmoduleBasis& a, const SubmoduleBasis& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::uint32_t> pivots_;
  std::map<int, Matrix<E>> action_;
};

/// Coordinates of e in the monomial basis.
template <class F>
SparseVec<typename F::Element> vectorize(const Algebra<F>& A, const SparseVec<typename F::Element>& e) {
  for (const auto& [i, c] : e) {
    if (i >= A.dimension()) throw ContractError("element index outside the algebra");
    if (F::is_zero(c)) throw ContractError("element stores an explicit zero");
  }
  return e;
}

/// Smallest subspace containing gens and closed under apply(v, g) for g in
/// generator_set; apply must be linear. Action matrices are recorded for
/// every generator in the set.
template <class F, class Apply>
SubmoduleBasis<F> closure_with(const F& K, std::size_t ambient, const std::vector<SparseVec<typename F::Element>>& gens,
                               const std::vector<int>& generator_set, Apply&& apply, Exec exec = Exec::parallel) {
  using Vec = SparseVec<typename F::Element>;
  SubmoduleBasis<F> B(ambient);
  std::vector<Vec> frontier;
  {
    std::vector<Vec> res;
    batch_map(gens, res, [&](const Vec& v) { return B.residual(v); }, exec);
    for (std::size_t i = 0; i < res.size(); ++i)
      if (B.insert_residual(res[i])) frontier.push_back(gens[i]);
  }
  while (!frontier.empty()) {
    std::vector<Vec> images;
    images.reserve(frontier.size() * generator_set.size());
    for (int g : generator_set) {
      std::vector<Vec> part;
      batch_map(frontier, part, [&](const Vec& v) { return apply(v, g); }, exec);
      for (auto& p : part) images.push_back(std::move(p));
    }
    std::vector<Vec> res;
    batch_map(images, res, [&](const Vec& v) { return B.residual(v); }, exec);
    std::vector<Vec> next;
    for (std::size_t i = 0; i < res.size(); ++i)
      if (B.insert_residual(std::move(res[i]))) next.push_back(std::move(images[i]));
    frontier = std::move(next);
  }
  // Action matrices, rows: row_i * T_g = sum_j M(i, j) row_j.
  for (int g : generator_set) {
    std::vector<Vec> images;
    batch_map(B.rows(), images, [&](const Vec& v) { return apply(v, g); }, exec);
    Matrix<typename F::Element> M(B.rank(), B.rank(), K.zero());
    std::vector<std::vector<typename F::Element>> coords;
    batch_map(images, coords, [&](const Vec& v) { return B.coordinates(v, K.zero()); }, exec);
    for (std::size_t i = 0; i < B.rank(); ++i)
      for (std::size_t j = 0; j < B.rank(); ++j) M(i, j) = coords[i][j];
    B.set_action(g, std::move(M));
  }
  return B;
}

inline std::vector<int> all_generators(int r) {
  std::vector<int> g;
  for (int i = 0; i < r; ++i) g.push_back(i);
  return g;
}

/// Right submodule of the regular representation generated by gens.
template <class F>
SubmoduleBasis<F> submodule_closure(const Algebra<F>& A, const std::vector<SparseVec<typename F::Element>>& gens,
                                    const std::vector<int>& generator_set, Exec exec = Exec::parallel) {
  for (int g : generator_set)
    if (g < 0 || g >= A.r()) throw ContractError("generator T_" + std::to_string(g) + " out of range");
  return closure_with(
      A.field(), A.dimension(), gens, generator_set,
      [&](const SparseVec<typename F::Element>& v, int g) { return A.right_mul_generator(v, g); }, exec);
}

/// Successive rank differences of an ascending chain, starting from 0.
template <class F>
std::vector<std::size_t> section_dimensions(const std::vector<SubmoduleBasis<F>>& chain) {
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (std::size_t t = 0; t < chain.size(); ++t) {
    if (t > 0) {
      for (const auto& row : chain[t - 1].rows())
        if (!chain[t].contains(row))
          throw ContractError("chain is not ascending at index " + std::to_string(t));
    }
    out.push_back(chain[t].rank() - prev);
    prev = chain[t].rank();
  }
  return out;
}

/// Rank of a set of sparse vectors.
template <class F>
std::size_t sparse_rank(std::size_t ambient, const std::vector<SparseVec<typename F::Element>>& vs) {
  SubmoduleBasis<F> B(ambient);
  for (const auto& v : vs) B.insert(v);
  return B.rank();
}

/// dim { X : M_g X = X N_g for every g }, X of shape dim(M) x dim(N).
template <class F>
std::size_t hom_dimension(const SubmoduleBasis<F>& M, const SubmoduleBasis<F>& N, const std::vector<int>& generator_set) {
  using E = typename F::Element;
  const std::size_t dm = M.rank(), dn = N.rank();
  if (dm == 0 || dn == 0) return 0;
  SubmoduleBasis<F> eqs(dm * dn);
  for (int g : generator_set) {
    const Matrix<E>& A = M.action(g);
    const Matrix<E>& B = N.action(g);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j) {
        std::vector<std::pair<std::uint32_t, E>> row;
        for (std::size_t k = 0; k < dm; ++k)
          if (!F::is_zero(A(i, k))) row.emplace_back(static_cast<std::uint32_t>(k * dn + j), A(i, k));
        for (std::size_t k = 0; k < dn; ++k)
          if (!F::is_zero(B(k, j))) row.emplace_back(static_cast<std::uint32_t>(i * dn + k), -B(k, j));
        eqs.insert(Algebra<F>::combine(std::move(row)));
      }
  }
  return dm * dn - eqs.rank();
}

/// Submodule of M (in M's own coordinates) generated by the coordinate vectors gens.
template <class F>
SubmoduleBasis<F> internal_closure(const F& K, const SubmoduleBasis<F>& M, const std::vector<SparseVec<typename F::Element>>& gens,
                                   const std::vector<int>& generator_set) {
  using E = typename F::Element;
  return closure_with(
      K, M.rank(), gens, generator_set,
      [&](const SparseVec<E>& v, int g) {
        const Matrix<E>& A = M.action(g);
        std::vector<std::pair<std::uint32_t, E>> acc;
        for (const auto& [i, c] : v)
          for (std::size_t j = 0; j < A.cols; ++j)
            if (!F::is_zero(A(i, j))) acc.emplace_back(static_cast<std::uint32_t>(j), c * A(i, j));
        return Algebra<F>::combine(std::move(acc));
      },
      Exec::serial);
}

struct SimplicityProbe {
  std::size_t probes = 0;
  bool exhaustive = false;
  bool proper_submodule_found = false;
};

/// Closure probes for a proper nonzero submodule: 20 seeded random vectors,
/// plus every projective point when the field is finite and small enough.
template <class F>
SimplicityProbe probe_simplicity(const F& K, const SubmoduleBasis<F>& M, const std::vector<int>& generator_set,
                                 std::size_t random_probes = 20, std::uint64_t seed = 20240601) {
  using E = typename F::Element;
  SimplicityProbe out;
  const std::size_t d = M.rank();
  if (d == 0) return out;
  auto test = [&](const SparseVec<E>& v) {
    ++out.probes;
    if (internal_closure(K, M, {v}, generator_set).rank() != d) out.proper_submodule_found = true;
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (std::size_t t = 0; t < random_probes && !out.proper_submodule_found; ++t) {
    std::vector<std::pair<std::uint32_t, E>> v;
    for (std::size_t i = 0; i < d; ++i) v.emplace_back(static_cast<std::uint32_t>(i), K.from_int(dist(rng)));
    auto vec = Algebra<F>::combine(std::move(v));
    if (!vec.empty()) test(vec);
  }
  const std::uint64_t p = K.characteristic();
  if (p != 0) {
    // Projective points: first nonzero coordinate equal to 1.
    long double count = 0;
    for (std::size_t k = 0; k < d; ++k) count += std::pow(static_cast<long double>(p), static_cast<long double>(k));
    if (count <= 20000) {
      out.exhaustive = true;
      for (std::size_t lead = 0; lead < d && !out.proper_submodule_found; ++lead) {
        std::size_t tail = d - lead - 1;
        std::vector<std::uint64_t> digits(tail, 0);
        while (!out.proper_submodule_found) {
          std::vector<std::pair<std::uint32_t, E>> v{{static_cast<std::uint32_t>(lead), K.one()}};
          for (std::size_t t = 0; t < tail; ++t)
            if (digits[t]) v.emplace_back(static_cast<std::uint32_t>(lead + 1 + t), K.from_int(static_cast<long long>(digits[t])));
          test(Algebra<F>::combine(std::move(v)));
          std::size_t t = 0;
          while (t < tail && ++digits[t] == p) digits[t++] = 0;
          if (t == tail) break;
        }
      }
    }
  }
  return out;
}

}  // namespace ak
