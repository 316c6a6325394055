#pragma once

// Partitions, compositions, multipartitions and their Young diagrams.
//
// Conventions:
//  * rows, columns and components are 1-based, as in the usual (i,j)_k node
//    notation;
//  * empty components are ordinary values, written "0" in text form;
//  * the one global node order is (component ascending, row ascending). Node
//    enumerations use it directly; "lower" (for good nodes) is its reverse.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ak {

/// Quantum characteristic; std::nullopt stands for infinity.
using QuantumChar = std::optional<int>;

class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; parts must be weakly decreasing and non-negative.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Length of row i (1-based); 0 beyond the last row.
  int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Finite sequence of non-negative integers.
struct Composition {
  std::vector<int> parts;
  int size() const;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// [a_0, ..., a_m] with 0 = a_0 <= a_1 <= ... <= a_m = r.
class IntervalVector {
 public:
  explicit IntervalVector(std::vector<int> bounds);
  const std::vector<int>& bounds() const { return bounds_; }
  int m() const { return static_cast<int>(bounds_.size()) - 1; }
  int r() const { return bounds_.back(); }
  int operator[](int i) const { return bounds_.at(i); }
  /// a' = [r - a_m, r - a_{m-1}, ..., r - a_0].
  IntervalVector dual() const;
  friend bool operator==(const IntervalVector&, const IntervalVector&) = default;

 private:
  std::vector<int> bounds_;
};

class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  Multipartition(std::initializer_list<std::vector<int>> components);

  const std::vector<Partition>& components() const { return components_; }
  const Partition& component(int k) const { return components_.at(k - 1); }  // 1-based
  int m() const { return static_cast<int>(components_.size()); }
  int r() const { return r_; }

  /// "3,1|2,2|1"; empty components are written "0".
  static Multipartition parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  friend auto operator<=>(const Multipartition& a, const Multipartition& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<Partition> components_;
  int r_ = 0;
};

struct Node {
  int row = 1;
  int col = 1;
  int comp = 1;

  std::string str() const;
  friend bool operator==(const Node&, const Node&) = default;
  /// Canonical order: component, then row, then column.
  friend auto operator<=>(const Node& a, const Node& b) {
    if (auto c = a.comp <=> b.comp; c != 0) return c;
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
  }
};

/// True when a lies lower than b: later component, or same component and a later row.
inline bool is_lower(const Node& a, const Node& b) { return a.comp > b.comp || (a.comp == b.comp && a.row > b.row); }

/// Tableau filling: [component-1][row-1][col-1] -> entry.
using Tableau = std::vector<std::vector<std::vector<int>>>;

Partition conjugate(const Partition& p);
Multipartition dual_multipartition(const Multipartition& L);
std::pair<Composition, IntervalVector> concatenate(const Multipartition& L);
IntervalVector interval_vector(const Multipartition& L);

/// Type-A dominance of partitions of the same size.
bool partition_dominance_le(const Partition& a, const Partition& b);
/// Dominance on m-partitions of r; throws ContractError when (m, r) differ.
bool dominance_le(const Multipartition& A, const Multipartition& B);

/// Partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);
/// Every m-partition of r once, ordered reverse-lexicographically by the
/// component sizes and then by components.
std::vector<Multipartition> enumerate_multipartitions(int m, int r);

std::vector<Node> removable_nodes(const Multipartition& L);
std::vector<Node> addable_nodes(const Multipartition& L);
Multipartition remove_node(const Multipartition& L, const Node& n);
Multipartition add_node(const Multipartition& L, const Node& n);

/// t^L: 1..r left to right along rows, components in order.
Tableau row_tableau(const Multipartition& L);
/// t_L: components from last to first, each filled down successive columns.
Tableau column_tableau(const Multipartition& L);
int tableau_entry(const Tableau& t, const Node& n);
bool is_standard(const Tableau& t);
/// All standard L-tableaux, in the order produced by placing 1, 2, ..., r
/// at successive addable nodes (canonical node order).
std::vector<Tableau> enumerate_standard_tableaux(const Multipartition& L);

/// Removable nodes paired with their entries in t_L.
std::vector<std::pair<Node, int>> j_numbers(const Multipartition& L);

bool is_l_regular(const Partition& p, QuantumChar l);
bool is_l_regular(const Multipartition& L, QuantumChar l);

/// Number of standard tableaux of a partition by the hook length formula.
std::uint64_t hook_length_count(const Partition& p);

}  // namespace ak
