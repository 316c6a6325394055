#pragma once

// Permutations of {1..r} acting on the right: (i)(xy) = ((i)x)y.
// Stored in one-line notation, images()[i-1] = (i)w.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "akspecht/combinatorics.hpp"

namespace ak {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int r);
  /// The simple transposition s_i = (i, i+1) in S_r.
  static Permutation simple(int i, int r);

  int degree() const { return static_cast<int>(images_.size()); }
  /// (i)w for 1 <= i <= degree.
  int operator()(int i) const { return images_.at(i - 1); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// Number of inversions.
  int length() const;
  /// Canonical reduced word: w = s_{i_1} s_{i_2} ... s_{i_k}, obtained by
  /// peeling off the leftmost descent position repeatedly.
  std::vector<int> reduced_word() const;
  /// Same permutation regarded as an element of S_r (r >= degree), fixing the new points.
  Permutation extended(int r) const;
  bool is_identity() const;
  std::string str() const;

  /// Right-action product: first x, then y.
  friend Permutation operator*(const Permutation& x, const Permutation& y);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// Disjoint ascending blocks [first, last] of 1..r; uncovered points are fixed.
struct YoungSubgroupSpec {
  std::vector<std::pair<int, int>> blocks;

  static YoungSubgroupSpec from_composition(const Composition& c);
  static YoungSubgroupSpec from_intervals(const IntervalVector& a);
  std::uint64_t order() const;
};

/// s_{i,j}: i -> j and k -> k-1 for i < k <= j. For i > j this is s_{j,i}^{-1}.
Permutation cycle_element(int i, int j, int r);
/// w_a with (a_{i-1}+l) w_a = r - a_i + l.
Permutation w_of_interval(const IntervalVector& a);
/// w_L with t^L w_L = t_L.
Permutation w_of_multipartition(const Multipartition& L);
/// Factors w_(1), ..., w_(m) with w_L = w_(1) ... w_(m) w_[L].
std::vector<Permutation> w_component_factors(const Multipartition& L);

/// Permutation d with t d = s for two fillings of the same shape.
Permutation tableau_transition(const Tableau& t, const Tableau& s);

enum class TableauFlavor { column, dual_row };

/// column: all d with t_L d standard; dual_row: all d with t^{L'} d standard.
/// Sorted by one-line notation.
std::vector<Permutation> standard_tableau_perms(const Multipartition& L, TableauFlavor flavor);

bool in_young_subgroup(const Permutation& w, const YoungSubgroupSpec& spec);
std::vector<Permutation> young_subgroup_elements(const YoungSubgroupSpec& spec, int r);
/// Minimal length representatives of the right cosets S_spec d: the d whose
/// one-line images increase along every block. Sorted by one-line notation.
std::vector<Permutation> distinguished_coset_reps(const YoungSubgroupSpec& spec, int r);

/// All of S_r indexed by lexicographic rank of the one-line notation, with
/// the length and simple-reflection multiplication tables precomputed.
class SymmetricGroupTable {
 public:
  explicit SymmetricGroupTable(int r);

  int r() const { return r_; }
  std::size_t size() const { return perms_.size(); }
  const Permutation& perm(std::size_t idx) const { return perms_[idx]; }
  std::size_t index(const Permutation& w) const;
  int length(std::size_t idx) const { return lengths_[idx]; }
  /// Index of w s_i, 1 <= i < r.
  std::size_t right_simple(std::size_t idx, int i) const { return right_[idx * stride() + (i - 1)]; }
  /// Index of s_i w, 1 <= i < r.
  std::size_t left_simple(std::size_t idx, int i) const { return left_[idx * stride() + (i - 1)]; }
  const std::vector<int>& reduced_word(std::size_t idx) const { return words_[idx]; }

 private:
  std::size_t stride() const { return r_ > 1 ? static_cast<std::size_t>(r_ - 1) : 1; }
  int r_;
  std::vector<Permutation> perms_;
  std::vector<int> lengths_;
  std::vector<std::size_t> right_, left_;
  std::vector<std::vector<int>> words_;
};

std::uint64_t factorial(int n);

}  // namespace ak
