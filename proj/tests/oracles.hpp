#pragma once

// Small independent re-derivations used to check library output.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "akspecht/algebra.hpp"

namespace oracle {

// p(n) by Euler's recurrence on the number of parts bounded by k.
inline std::vector<std::uint64_t> partition_numbers(int n) {
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int s = k; s <= n; ++s) p[s] += p[s - k];
  return p;
}

// |Lambda_m^+(r)| as the m-fold convolution of p.
inline std::uint64_t multipartition_count(int m, int r) {
  auto p = partition_numbers(r);
  std::vector<std::uint64_t> acc(r + 1, 0);
  acc[0] = 1;
  for (int k = 0; k < m; ++k) {
    std::vector<std::uint64_t> next(r + 1, 0);
    for (int a = 0; a <= r; ++a)
      for (int b = 0; a + b <= r; ++b) next[a + b] += acc[a] * p[b];
    acc = next;
  }
  return acc[r];
}

// Conjugate by scanning the diagram column by column.
inline std::vector<int> conjugate(const std::vector<int>& parts) {
  std::vector<int> out;
  for (int c = 1;; ++c) {
    int h = 0;
    for (int x : parts)
      if (x >= c) ++h;
    if (!h) break;
    out.push_back(h);
  }
  return out;
}

inline int inversions(const std::vector<int>& w) {
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) n += w[i] > w[j];
  return n;
}

// Iwahori-Hecke algebra of S_r by a dictionary on one-line words. The
// product peels the right factor by its largest right descent.
template <class E>
struct Hecke {
  using Elt = std::map<std::vector<int>, E>;
  E q;
  E zero, one;

  // w s_i exchanges the values i and i+1 in one-line notation.
  static std::vector<int> swap_val(std::vector<int> w, int i) {
    for (int& x : w)
      if (x == i)
        x = i + 1;
      else if (x == i + 1)
        x = i;
    return w;
  }
  static int pos(const std::vector<int>& w, int v) { return static_cast<int>(std::find(w.begin(), w.end(), v) - w.begin()); }

  Elt times_s(const Elt& a, int i) const {
    Elt out;
    for (const auto& [w, c] : a) {
      auto ws = swap_val(w, i);
      if (pos(w, i) < pos(w, i + 1)) {
        out[ws] += c;
      } else {
        out[w] += c * (q - one);
        out[ws] += c * q;
      }
    }
    std::erase_if(out, [&](const auto& kv) { return kv.second == zero; });
    return out;
  }

  Elt times_T(const Elt& a, std::vector<int> v) const {
    std::vector<int> word;
    while (true) {
      int d = -1;
      for (int i = static_cast<int>(v.size()) - 1; i >= 1; --i)
        if (pos(v, i) > pos(v, i + 1)) {
          d = i;
          break;
        }
      if (d < 0) break;
      word.push_back(d);
      v = swap_val(v, d);
    }
    Elt out = a;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = times_s(out, *it);
    return out;
  }

  Elt mul(const Elt& a, const Elt& b) const {
    Elt out;
    for (const auto& [w, c] : b) {
      Elt part = times_T(a, w);
      for (const auto& [u, x] : part) out[u] += x * c;
    }
    std::erase_if(out, [&](const auto& kv) { return kv.second == zero; });
    return out;
  }
};

template <class F>
ak::SparseVec<typename F::Element> random_element(const ak::Algebra<F>& A, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(A.dimension() - 1));
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::vector<std::pair<std::uint32_t, typename F::Element>> t;
  for (int k = 0; k < terms; ++k) t.emplace_back(pick(rng), A.field().from_int(coeff(rng)));
  return ak::Algebra<F>::combine(std::move(t));
}

}  // namespace oracle
