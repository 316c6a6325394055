#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace ak {

/// Sparse coordinates sorted by index, never holding an explicit zero.
template <class E>
using SparseVec = std::vector<std::pair<std::uint32_t, E>>;

template <class F>
bool is_zero_vec(const SparseVec<typename F::Element>& v) {
  return v.empty();
}

template <class E>
const E* find_coeff(const SparseVec<E>& v, std::uint32_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& t, std::uint32_t i) { return t.first < i; });
  return (it != v.end() && it->first == idx) ? &it->second : nullptr;
}

/// Dense scratch space for accumulating sparse linear combinations; extract()
/// returns the sorted nonzero part and resets the touched entries.
template <class F>
class DenseAccumulator {
 public:
  using E = typename F::Element;

  explicit DenseAccumulator(std::size_t dim) : values_(dim), touched_(dim, 0) {}

  std::size_t dim() const { return values_.size(); }

  void add(std::uint32_t idx, const E& c) {
    if (!touched_[idx]) {
      touched_[idx] = 1;
      list_.push_back(idx);
      values_[idx] = c;
    } else {
      values_[idx] += c;
    }
  }

  void axpy(const SparseVec<E>& v, const E& scale) {
    for (const auto& [i, c] : v) add(i, c * scale);
  }
  void add_vec(const SparseVec<E>& v) {
    for (const auto& [i, c] : v) add(i, c);
  }

  /// Current value at idx, or nullptr when untouched.
  const E* peek(std::uint32_t idx) const { return touched_[idx] ? &values_[idx] : nullptr; }

  SparseVec<E> extract() {
    std::sort(list_.begin(), list_.end());
    SparseVec<E> out;
    out.reserve(list_.size());
    for (std::uint32_t i : list_) {
      if (!F::is_zero(values_[i])) out.emplace_back(i, std::move(values_[i]));
      values_[i] = E();
      touched_[i] = 0;
    }
    list_.clear();
    return out;
  }

 private:
  std::vector<E> values_;
  std::vector<char> touched_;
  std::vector<std::uint32_t> list_;
};

template <class F>
SparseVec<typename F::Element> add(const SparseVec<typename F::Element>& a, const SparseVec<typename F::Element>& b,
                                   const typename F::Element& scale_b) {
  SparseVec<typename F::Element> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      typename F::Element c = b[j].second * scale_b;
      if (!F::is_zero(c)) out.emplace_back(b[j].first, std::move(c));
      ++j;
    } else {
      typename F::Element c = a[i].second + b[j].second * scale_b;
      if (!F::is_zero(c)) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
SparseVec<typename F::Element> scaled(SparseVec<typename F::Element> v, const typename F::Element& s) {
  if (F::is_zero(s)) return {};
  for (auto& t : v) t.second *= s;
  return v;
}

}  // namespace ak
