#include "akspecht/symmetric_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "akspecht/error.hpp"

namespace ak {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[v]) throw ContractError("not a permutation in one-line notation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int r) {
  std::vector<int> im(r);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::simple(int i, int r) {
  if (i < 1 || i >= r) throw ContractError("simple transposition s_" + std::to_string(i) + " outside S_" + std::to_string(r));
  Permutation w = identity(r);
  std::swap(w.images_[i - 1], w.images_[i]);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  Permutation w;
  w.images_ = std::move(inv);
  return w;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  std::vector<int> cur = images_;
  // w = s_i w'' where w'' swaps positions i, i+1 of w, whenever w has a descent at i.
  while (true) {
    std::size_t i = 0;
    while (i + 1 < cur.size() && cur[i] < cur[i + 1]) ++i;
    if (i + 1 >= cur.size()) break;
    word.push_back(static_cast<int>(i) + 1);
    std::swap(cur[i], cur[i + 1]);
  }
  return word;
}

Permutation Permutation::extended(int r) const {
  if (r < degree()) throw ContractError("cannot shrink a permutation");
  Permutation w = *this;
  for (int i = degree() + 1; i <= r; ++i) w.images_.push_back(i);
  return w;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) out << (i ? "," : "") << images_[i];
  out << ']';
  return out.str();
}

Permutation operator*(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw ContractError("permutation degrees differ");
  std::vector<int> im(x.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = y.images_[x.images_[i] - 1];
  Permutation w;
  w.images_ = std::move(im);
  return w;
}

YoungSubgroupSpec YoungSubgroupSpec::from_composition(const Composition& c) {
  YoungSubgroupSpec spec;
  int start = 1;
  for (int part : c.parts) {
    if (part < 0) throw ContractError("negative composition part");
    if (part > 0) spec.blocks.emplace_back(start, start + part - 1);
    start += part;
  }
  return spec;
}

YoungSubgroupSpec YoungSubgroupSpec::from_intervals(const IntervalVector& a) {
  YoungSubgroupSpec spec;
  for (int i = 1; i <= a.m(); ++i)
    if (a[i] > a[i - 1]) spec.blocks.emplace_back(a[i - 1] + 1, a[i]);
  return spec;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t YoungSubgroupSpec::order() const {
  std::uint64_t o = 1;
  for (auto [lo, hi] : blocks) o *= factorial(hi - lo + 1);
  return o;
}

Permutation cycle_element(int i, int j, int r) {
  if (i < 1 || j < 1 || i > r || j > r)
    throw ContractError("s_{" + std::to_string(i) + "," + std::to_string(j) + "} out of range for r=" + std::to_string(r));
  if (i > j) return cycle_element(j, i, r).inverse();
  std::vector<int> im(r);
  std::iota(im.begin(), im.end(), 1);
  im[i - 1] = j;
  for (int k = i + 1; k <= j; ++k) im[k - 1] = k - 1;
  return Permutation(std::move(im));
}

Permutation w_of_interval(const IntervalVector& a) {
  int r = a.r();
  std::vector<int> im(r);
  for (int i = 1; i <= a.m(); ++i)
    for (int l = 1; l <= a[i] - a[i - 1]; ++l) im[a[i - 1] + l - 1] = r - a[i] + l;
  return Permutation(std::move(im));
}

Permutation tableau_transition(const Tableau& t, const Tableau& s) {
  std::vector<int> im;
  std::size_t total = 0;
  for (const auto& comp : t)
    for (const auto& row : comp) total += row.size();
  im.assign(total, 0);
  for (std::size_t k = 0; k < t.size(); ++k)
    for (std::size_t i = 0; i < t[k].size(); ++i)
      for (std::size_t j = 0; j < t[k][i].size(); ++j) im.at(t[k][i][j] - 1) = s.at(k).at(i).at(j);
  return Permutation(std::move(im));
}

Permutation w_of_multipartition(const Multipartition& L) {
  return tableau_transition(row_tableau(L), column_tableau(L));
}

std::vector<Permutation> w_component_factors(const Multipartition& L) {
  Tableau top = row_tableau(L);
  Tableau bottom = column_tableau(L);
  Permutation winv = w_of_interval(interval_vector(L)).inverse();
  std::vector<Permutation> out;
  for (int k = 1; k <= L.m(); ++k) {
    std::vector<int> im(L.r());
    std::iota(im.begin(), im.end(), 1);
    for (std::size_t i = 0; i < top[k - 1].size(); ++i)
      for (std::size_t j = 0; j < top[k - 1][i].size(); ++j) im[top[k - 1][i][j] - 1] = winv(bottom[k - 1][i][j]);
    out.emplace_back(std::move(im));
  }
  return out;
}

std::vector<Permutation> standard_tableau_perms(const Multipartition& L, TableauFlavor flavor) {
  std::vector<Permutation> out;
  if (flavor == TableauFlavor::column) {
    Tableau base = column_tableau(L);
    for (const auto& t : enumerate_standard_tableaux(L)) out.push_back(tableau_transition(base, t));
  } else {
    Multipartition dual = dual_multipartition(L);
    Tableau base = row_tableau(dual);
    for (const auto& t : enumerate_standard_tableaux(dual)) out.push_back(tableau_transition(base, t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_young_subgroup(const Permutation& w, const YoungSubgroupSpec& spec) {
  std::vector<int> block_of(w.degree() + 1, 0);
  int id = 1;
  for (auto [lo, hi] : spec.blocks) {
    for (int x = lo; x <= hi; ++x) block_of.at(x) = id;
    ++id;
  }
  for (int x = 1; x <= w.degree(); ++x) {
    if (block_of[x] == 0 ? w(x) != x : block_of[w(x)] != block_of[x]) return false;
  }
  return true;
}

std::vector<Permutation> young_subgroup_elements(const YoungSubgroupSpec& spec, int r) {
  std::vector<std::vector<int>> orders;
  for (auto [lo, hi] : spec.blocks) {
    if (lo < 1 || hi > r || lo > hi) throw ContractError("Young subgroup block outside 1..r");
    std::vector<int> v(hi - lo + 1);
    std::iota(v.begin(), v.end(), lo);
    orders.push_back(std::move(v));
  }
  std::vector<Permutation> out;
  while (true) {
    std::vector<int> im(r);
    std::iota(im.begin(), im.end(), 1);
    for (std::size_t b = 0; b < spec.blocks.size(); ++b)
      for (std::size_t t = 0; t < orders[b].size(); ++t) im[spec.blocks[b].first - 1 + t] = orders[b][t];
    out.emplace_back(std::move(im));
    std::size_t b = 0;
    while (b < orders.size() && !std::next_permutation(orders[b].begin(), orders[b].end())) ++b;
    if (b == orders.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> distinguished_coset_reps(const YoungSubgroupSpec& spec, int r) {
  // Label each point by its block (singletons get unique labels); a
  // representative is an assignment of values to labels, increasing within
  // each label. Enumerate label sequences over the values 1..r.
  std::vector<int> label(r + 1, -1);
  int next_label = 0;
  for (auto [lo, hi] : spec.blocks) {
    if (lo < 1 || hi > r || lo > hi) throw ContractError("Young subgroup block outside 1..r");
    for (int x = lo; x <= hi; ++x) label[x] = next_label;
    ++next_label;
  }
  for (int x = 1; x <= r; ++x)
    if (label[x] < 0) label[x] = next_label++;

  // value_labels[v-1] = label of the point mapped to v.
  std::vector<int> value_labels;
  for (int x = 1; x <= r; ++x) value_labels.push_back(label[x]);
  std::sort(value_labels.begin(), value_labels.end());

  std::vector<Permutation> out;
  do {
    std::vector<std::vector<int>> values_by_label(next_label);
    for (int v = 1; v <= r; ++v) values_by_label[value_labels[v - 1]].push_back(v);
    std::vector<std::size_t> used(next_label, 0);
    std::vector<int> im(r);
    for (int x = 1; x <= r; ++x) im[x - 1] = values_by_label[label[x]][used[label[x]]++];
    out.emplace_back(std::move(im));
  } while (std::next_permutation(value_labels.begin(), value_labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

SymmetricGroupTable::SymmetricGroupTable(int r) : r_(r) {
  if (r < 0 || r > 10) throw SizeGuardError("symmetric group table limited to r <= 10");
  std::vector<int> im(r);
  std::iota(im.begin(), im.end(), 1);
  do {
    perms_.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  const std::size_t n = perms_.size();
  lengths_.resize(n);
  words_.resize(n);
  right_.assign(n * stride(), 0);
  left_.assign(n * stride(), 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    lengths_[idx] = perms_[idx].length();
    words_[idx] = perms_[idx].reduced_word();
    for (int i = 1; i < r; ++i) {
      right_[idx * stride() + (i - 1)] = index(perms_[idx] * Permutation::simple(i, r));
      left_[idx * stride() + (i - 1)] = index(Permutation::simple(i, r) * perms_[idx]);
    }
  }
}

std::size_t SymmetricGroupTable::index(const Permutation& w) const {
  if (w.degree() != r_) throw ContractError("permutation degree does not match the table");
  // Lexicographic rank via the Lehmer code.
  std::size_t rank = 0;
  const auto& im = w.images();
  for (int i = 0; i < r_; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j < r_; ++j)
      if (im[j] < im[i]) ++smaller;
    rank += smaller * factorial(r_ - 1 - i);
  }
  return rank;
}

}  // namespace ak
