#include "akspecht/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <gmpxx.h>

#include "akspecht/error.hpp"

namespace ak {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ContractError("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw ContractError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

IntervalVector::IntervalVector(std::vector<int> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.size() < 2 || bounds_.front() != 0) throw ContractError("interval vector must start at 0 and have m >= 1");
  for (std::size_t i = 1; i < bounds_.size(); ++i)
    if (bounds_[i] < bounds_[i - 1]) throw ContractError("interval vector must be non-decreasing");
}

IntervalVector IntervalVector::dual() const {
  std::vector<int> b(bounds_.size());
  int r = this->r();
  for (std::size_t i = 0; i < bounds_.size(); ++i) b[i] = r - bounds_[bounds_.size() - 1 - i];
  return IntervalVector(std::move(b));
}

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw ContractError("multipartition needs m >= 1 components");
  for (const auto& p : components_) r_ += p.size();
}

Multipartition::Multipartition(std::initializer_list<std::vector<int>> components) {
  for (const auto& c : components) components_.emplace_back(c);
  if (components_.empty()) throw ContractError("multipartition needs m >= 1 components");
  for (const auto& p : components_) r_ += p.size();
}

Multipartition Multipartition::parse(std::string_view text) {
  std::vector<Partition> comps;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = text.find('|', start);
    std::string_view piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    std::vector<int> parts;
    std::size_t pos = 0;
    if (piece.empty()) throw ContractError("malformed multipartition '" + std::string(text) + "': empty component (write 0)");
    while (pos <= piece.size()) {
      std::size_t comma = piece.find(',', pos);
      std::string_view tok = piece.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ContractError("malformed multipartition '" + std::string(text) + "'");
      parts.push_back(std::stoi(std::string(tok)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (parts.size() > 1 && std::find(parts.begin(), parts.end(), 0) != parts.end())
      throw ContractError("malformed multipartition '" + std::string(text) + "': zero part");
    try {
      comps.emplace_back(std::move(parts));
    } catch (const ContractError& e) {
      throw ContractError("malformed multipartition '" + std::string(text) + "': " + e.what());
    }
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return Multipartition(std::move(comps));
}

std::string Multipartition::str() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) out << '|';
    const auto& parts = components_[k].parts();
    if (parts.empty()) out << '0';
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
  }
  return out.str();
}

std::string Node::str() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")_" + std::to_string(comp);
}

Partition conjugate(const Partition& p) {
  std::vector<int> c(p.row(1), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++c[j];
  return Partition(std::move(c));
}

Multipartition dual_multipartition(const Multipartition& L) {
  std::vector<Partition> comps;
  for (auto it = L.components().rbegin(); it != L.components().rend(); ++it) comps.push_back(conjugate(*it));
  return Multipartition(std::move(comps));
}

IntervalVector interval_vector(const Multipartition& L) {
  std::vector<int> a{0};
  for (const auto& p : L.components()) a.push_back(a.back() + p.size());
  return IntervalVector(std::move(a));
}

std::pair<Composition, IntervalVector> concatenate(const Multipartition& L) {
  Composition bar;
  for (const auto& p : L.components()) bar.parts.insert(bar.parts.end(), p.parts().begin(), p.parts().end());
  return {std::move(bar), interval_vector(L)};
}

bool partition_dominance_le(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw ContractError("dominance needs partitions of equal size");
  int sa = 0, sb = 0;
  for (int i = 1; i <= std::max(a.length(), b.length()); ++i) {
    sa += a.row(i);
    sb += b.row(i);
    if (sa > sb) return false;
  }
  return true;
}

bool dominance_le(const Multipartition& A, const Multipartition& B) {
  if (A.m() != B.m() || A.r() != B.r())
    throw ContractError("dominance needs multipartitions with equal (m, r): " + A.str() + " vs " + B.str());
  auto a = interval_vector(A), b = interval_vector(B);
  long long base_a = 0, base_b = 0;  // sum_{j<=i} a_j
  for (int i = 0; i < A.m(); ++i) {
    base_a += a[i];
    base_b += b[i];
    const Partition& lam = A.component(i + 1);
    const Partition& mu = B.component(i + 1);
    long long sa = base_a, sb = base_b;
    if (sa > sb) return false;
    for (int l = 1; l <= std::max(lam.length(), mu.length()); ++l) {
      sa += lam.row(l);
      sb += mu.row(l);
      if (sa > sb) return false;
    }
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void sizes_rec(int m, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m - 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int s = remaining; s >= 0; --s) {
    cur.push_back(s);
    sizes_rec(m, remaining - s, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw ContractError("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Multipartition> enumerate_multipartitions(int m, int r) {
  if (m < 1 || r < 0) throw ContractError("enumerate_multipartitions needs m >= 1 and r >= 0");
  std::vector<std::vector<int>> size_vectors;
  std::vector<int> cur;
  sizes_rec(m, r, cur, size_vectors);

  std::vector<Multipartition> out;
  for (const auto& sizes : size_vectors) {
    std::vector<std::vector<Partition>> choices;
    for (int s : sizes) choices.push_back(enumerate_partitions(s));
    std::vector<std::size_t> odometer(m, 0);
    while (true) {
      std::vector<Partition> comps;
      for (int k = 0; k < m; ++k) comps.push_back(choices[k][odometer[k]]);
      out.emplace_back(std::move(comps));
      int k = m - 1;
      while (k >= 0 && ++odometer[k] == choices[k].size()) odometer[k--] = 0;
      if (k < 0) break;
    }
  }
  return out;
}

std::vector<Node> removable_nodes(const Multipartition& L) {
  std::vector<Node> out;
  for (int k = 1; k <= L.m(); ++k) {
    const Partition& p = L.component(k);
    for (int i = 1; i <= p.length(); ++i)
      if (p.row(i) > p.row(i + 1)) out.push_back({i, p.row(i), k});
  }
  return out;
}

std::vector<Node> addable_nodes(const Multipartition& L) {
  std::vector<Node> out;
  for (int k = 1; k <= L.m(); ++k) {
    const Partition& p = L.component(k);
    for (int i = 1; i <= p.length() + 1; ++i)
      if (i == 1 || p.row(i - 1) > p.row(i)) out.push_back({i, p.row(i) + 1, k});
  }
  return out;
}

Multipartition remove_node(const Multipartition& L, const Node& n) {
  auto rem = removable_nodes(L);
  if (std::find(rem.begin(), rem.end(), n) == rem.end())
    throw ContractError("node " + n.str() + " is not removable from " + L.str());
  std::vector<Partition> comps = L.components();
  std::vector<int> parts = comps[n.comp - 1].parts();
  --parts[n.row - 1];
  comps[n.comp - 1] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

Multipartition add_node(const Multipartition& L, const Node& n) {
  auto add = addable_nodes(L);
  if (std::find(add.begin(), add.end(), n) == add.end())
    throw ContractError("node " + n.str() + " is not addable to " + L.str());
  std::vector<Partition> comps = L.components();
  std::vector<int> parts = comps[n.comp - 1].parts();
  if (n.row > static_cast<int>(parts.size())) parts.push_back(0);
  ++parts[n.row - 1];
  comps[n.comp - 1] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

namespace {

Tableau empty_tableau(const Multipartition& L) {
  Tableau t(L.m());
  for (int k = 1; k <= L.m(); ++k)
    for (int part : L.component(k).parts()) t[k - 1].emplace_back(part, 0);
  return t;
}

}  // namespace

Tableau row_tableau(const Multipartition& L) {
  Tableau t = empty_tableau(L);
  int next = 1;
  for (auto& comp : t)
    for (auto& row : comp)
      for (int& e : row) e = next++;
  return t;
}

Tableau column_tableau(const Multipartition& L) {
  Tableau t = empty_tableau(L);
  int next = 1;
  for (int k = L.m(); k >= 1; --k) {
    const Partition& p = L.component(k);
    Partition pc = conjugate(p);
    for (int j = 1; j <= pc.length(); ++j)
      for (int i = 1; i <= pc.row(j); ++i) t[k - 1][i - 1][j - 1] = next++;
  }
  return t;
}

int tableau_entry(const Tableau& t, const Node& n) { return t.at(n.comp - 1).at(n.row - 1).at(n.col - 1); }

bool is_standard(const Tableau& t) {
  for (const auto& comp : t)
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp[i].size(); ++j) {
        if (j + 1 < comp[i].size() && comp[i][j] >= comp[i][j + 1]) return false;
        if (i + 1 < comp.size() && j < comp[i + 1].size() && comp[i][j] >= comp[i + 1][j]) return false;
      }
  return true;
}

namespace {

void standard_rec(const Multipartition& shape, std::vector<std::vector<int>>& filled, Tableau& t, int next,
                  std::vector<Tableau>& out) {
  if (next > shape.r()) {
    out.push_back(t);
    return;
  }
  for (int k = 1; k <= shape.m(); ++k) {
    const Partition& p = shape.component(k);
    auto& rows = filled[k - 1];
    for (int i = 1; i <= p.length(); ++i) {
      int cur = rows[i - 1];
      if (cur >= p.row(i)) continue;
      if (i > 1 && rows[i - 2] <= cur) continue;
      t[k - 1][i - 1][cur] = next;
      ++rows[i - 1];
      standard_rec(shape, filled, t, next + 1, out);
      --rows[i - 1];
    }
  }
}

}  // namespace

std::vector<Tableau> enumerate_standard_tableaux(const Multipartition& L) {
  std::vector<std::vector<int>> filled(L.m());
  for (int k = 1; k <= L.m(); ++k) filled[k - 1].assign(L.component(k).length(), 0);
  Tableau t = empty_tableau(L);
  std::vector<Tableau> out;
  standard_rec(L, filled, t, 1, out);
  return out;
}

std::vector<std::pair<Node, int>> j_numbers(const Multipartition& L) {
  Tableau t = column_tableau(L);
  std::vector<std::pair<Node, int>> out;
  for (const Node& n : removable_nodes(L)) out.emplace_back(n, tableau_entry(t, n));
  return out;
}

bool is_l_regular(const Partition& p, QuantumChar l) {
  if (!l) return true;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (static_cast<int>(j - i) >= *l) return false;
    i = j;
  }
  return true;
}

bool is_l_regular(const Multipartition& L, QuantumChar l) {
  return std::all_of(L.components().begin(), L.components().end(), [&](const Partition& p) { return is_l_regular(p, l); });
}

std::uint64_t hook_length_count(const Partition& p) {
  Partition pc = conjugate(p);
  mpz_class num = 1, den = 1;
  for (int n = 2; n <= p.size(); ++n) num *= n;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.row(i); ++j) den *= (p.row(i) - j) + (pc.row(j) - i) + 1;
  mpz_class q = num / den;
  if (!q.fits_ulong_p()) throw ContractError("standard tableau count overflows 64 bits");
  return q.get_ui();
}

}  // namespace ak
