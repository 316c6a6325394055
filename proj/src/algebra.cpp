#include "akspecht/algebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace ak {

template <class F>
typename Algebra<F>::Elem Algebra<F>::combine(std::vector<std::pair<std::uint32_t, E>> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Elem out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && F::is_zero(out.back().second)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && F::is_zero(out.back().second)) out.pop_back();
  return out;
}

// Normal-form machinery used only while the T_0 table is being filled.
template <class F>
class Algebra<F>::Builder {
 public:
  using Terms = std::vector<std::pair<std::uint32_t, E>>;

  explicit Builder(Algebra& A) : A_(A), K_(A.field()), q_(A.P_.q()), qm1_(A.P_.q() - A.field().one()) {}

  void build_hecke_tables() {
    const auto& G = A_.G_;
    for (int g = 1; g < A_.r_; ++g) {
      auto& table = A_.tables_[g];
      for (std::uint32_t b = 0; b < A_.dim_; ++b) {
        std::size_t v = A_.perm_index(b), u = G.right_simple(v, g);
        std::uint32_t base = b - static_cast<std::uint32_t>(v);
        if (G.length(u) > G.length(v))
          table[b] = Elem{{base + static_cast<std::uint32_t>(u), K_.one()}};
        else
          table[b] = combine({{b, qm1_}, {base + static_cast<std::uint32_t>(u), q_}});
      }
    }
  }

  void build_t0_table() {
    const auto& G = A_.G_;
    auto& table = A_.tables_[0];
    for (std::size_t v = 0; v < G.size(); ++v) {
      auto pushed = push_L1(v);
      for (std::uint32_t cidx = 0; cidx * G.size() < A_.dim_; ++cidx) {
        std::uint32_t b = cidx * static_cast<std::uint32_t>(G.size()) + static_cast<std::uint32_t>(v);
        std::vector<int> c = A_.exponents(b);
        Terms acc;
        for (const auto& [j, H] : pushed) {
          std::vector<int> cj = c;
          ++cj[j - 1];
          for (const auto& [u, h] : H) append(acc, nf_times_perm(cj, u), h);
        }
        table[b] = combine(std::move(acc));
      }
    }
  }

 private:
  struct PassTerm {
    E coeff;
    int a, b, eps;
  };

  static void append(Terms& acc, const Elem& e, const E& s) {
    for (const auto& [i, c] : e) acc.emplace_back(i, c * s);
  }

  bool in_range(const std::vector<int>& c) const {
    for (int x : c)
      if (x >= A_.m()) return false;
    return true;
  }

  /// T_i T_v as a combination of permutation indices.
  Terms left_hecke(int i, std::size_t v) const {
    const auto& G = A_.G_;
    std::size_t u = G.left_simple(v, i);
    if (G.length(u) > G.length(v)) return {{static_cast<std::uint32_t>(u), K_.one()}};
    return {{static_cast<std::uint32_t>(v), qm1_}, {static_cast<std::uint32_t>(u), q_}};
  }

  Terms left_hecke(int i, const Terms& H) const {
    Terms acc;
    for (const auto& [v, h] : H)
      for (auto& [u, c] : left_hecke(i, v)) acc.emplace_back(u, c * h);
    return combine(std::move(acc));
  }

  /// T_w L_1 = sum_j L_j H_j, obtained by pushing L_1 left through a reduced word of w.
  std::map<int, Terms> push_L1(std::size_t w) const {
    const auto& word = A_.G_.reduced_word(w);
    std::map<int, Terms> state;
    state[1] = Terms{{static_cast<std::uint32_t>(A_.G_.index(Permutation::identity(A_.r_))), K_.one()}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      int i = *it;
      std::map<int, Terms> next;
      for (const auto& [j, H] : state) {
        Terms TH = left_hecke(i, H);
        if (i == j) {
          add_into(next[j + 1], TH, K_.one());
          add_into(next[j + 1], H, -qm1_);
        } else if (i == j - 1) {
          add_into(next[j - 1], TH, K_.one());
          add_into(next[j], H, qm1_);
        } else {
          add_into(next[j], TH, K_.one());
        }
      }
      state.clear();
      for (auto& [j, H] : next)
        if (!H.empty()) state[j] = std::move(H);
    }
    return state;
  }

  static void add_into(Terms& dst, const Terms& src, const E& s) {
    Terms acc = dst;
    for (const auto& [i, c] : src) acc.emplace_back(i, c * s);
    dst = combine(std::move(acc));
  }

  /// T_i L_i^a L_{i+1}^b = sum coeff L_i^{a'} L_{i+1}^{b'} T_i^{eps}.
  const std::vector<PassTerm>& pass(int a, int b) {
    auto key = std::make_pair(a, b);
    if (auto it = pass_memo_.find(key); it != pass_memo_.end()) return it->second;
    std::map<std::tuple<int, int, int>, E> acc;
    auto put = [&](int x, int y, int eps, const E& c) {
      auto k = std::make_tuple(x, y, eps);
      auto it = acc.find(k);
      if (it == acc.end())
        acc.emplace(k, c);
      else
        it->second += c;
    };
    if (a > 0) {
      for (const auto& t : pass(a - 1, b)) put(t.a, t.b + 1, t.eps, t.coeff);
      put(a - 1, b + 1, 0, -qm1_);
    } else if (b > 0) {
      for (const auto& t : pass(0, b - 1)) put(t.a + 1, t.b, t.eps, t.coeff);
      put(0, b, 0, qm1_);
    } else {
      put(0, 0, 1, K_.one());
    }
    std::vector<PassTerm> out;
    for (auto& [k, c] : acc)
      if (!F::is_zero(c)) out.push_back({c, std::get<0>(k), std::get<1>(k), std::get<2>(k)});
    return pass_memo_.emplace(key, std::move(out)).first->second;
  }

  Elem nf_times_perm(const std::vector<int>& c, std::size_t v) {
    if (in_range(c)) return A_.basis_element(A_.index(c, v));
    return A_.right_mul_word(nf(c), A_.G_.reduced_word(v));
  }

  /// Normal form of L_1^{c_1} ... L_r^{c_r} for arbitrary non-negative exponents.
  Elem nf(const std::vector<int>& c) {
    if (in_range(c)) return A_.basis_element(A_.index(c, 0));
    if (auto it = nf_memo_.find(c); it != nf_memo_.end()) return it->second;
    if (++depth_ > 100000) throw InternalError("normal form recursion does not terminate");
    int k = A_.r_;
    while (c[k - 1] < A_.m()) --k;
    std::vector<int> base = c;
    base[k - 1] -= A_.m();
    const Elem& N = power_nf(k);
    Terms acc;
    for (const auto& [idx, alpha] : N) {
      std::vector<int> d = A_.exponents(idx);
      for (int t = 0; t < A_.r_; ++t) d[t] += base[t];
      append(acc, nf_times_perm(d, A_.perm_index(idx)), alpha);
    }
    --depth_;
    return nf_memo_.emplace(c, combine(std::move(acc))).first->second;
  }

  /// Normal form of L_k^m.
  const Elem& power_nf(int k) {
    if (auto it = power_memo_.find(k); it != power_memo_.end()) return it->second;
    const int m = A_.m();
    Elem out;
    if (k == 1) {
      // prod (x - u_i) = x^m + sum_{j<m} poly[j] x^j
      std::vector<E> poly{K_.one()};
      for (int i = 1; i <= m; ++i) {
        std::vector<E> next(poly.size() + 1, K_.zero());
        for (std::size_t j = 0; j < poly.size(); ++j) {
          next[j + 1] += poly[j];
          next[j] -= poly[j] * A_.P_.u(i);
        }
        poly = std::move(next);
      }
      Terms acc;
      for (int j = 0; j < m; ++j) {
        std::vector<int> c(A_.r_, 0);
        c[0] = j;
        acc.emplace_back(A_.index(c, 0), -poly[j]);
      }
      out = combine(std::move(acc));
    } else {
      // L_k^m = q^{-1} T_{k-1} L_{k-1} (T_{k-1} L_k^{m-1})
      std::vector<int> c(A_.r_, 0);
      c[k - 1] = m - 1;
      Elem Y = left_mul_T(k - 1, A_.basis_element(A_.index(c, 0)));
      Terms acc;
      for (const auto& [idx, alpha] : Y) {
        std::vector<int> d = A_.exponents(idx);
        ++d[k - 2];
        append(acc, nf_times_perm(d, A_.perm_index(idx)), alpha);
      }
      out = scaled<F>(left_mul_T(k - 1, combine(std::move(acc))), K_.one() / q_);
    }
    return power_memo_.emplace(k, std::move(out)).first->second;
  }

  /// T_i * X for X in normal form.
  Elem left_mul_T(int i, const Elem& X) {
    Terms acc;
    for (const auto& [idx, alpha] : X) {
      std::vector<int> d = A_.exponents(idx);
      std::size_t v = A_.perm_index(idx);
      std::vector<PassTerm> terms = pass(d[i - 1], d[i]);
      for (const auto& t : terms) {
        std::vector<int> d2 = d;
        d2[i - 1] = t.a;
        d2[i] = t.b;
        E s = alpha * t.coeff;
        if (t.eps == 0) {
          append(acc, nf_times_perm(d2, v), s);
        } else {
          for (const auto& [u, h] : left_hecke(i, v)) append(acc, nf_times_perm(d2, u), s * h);
        }
      }
    }
    return combine(std::move(acc));
  }

  Algebra& A_;
  const F& K_;
  E q_, qm1_;
  int depth_ = 0;
  std::map<std::vector<int>, Elem> nf_memo_;
  std::map<int, Elem> power_memo_;
  std::map<std::pair<int, int>, std::vector<PassTerm>> pass_memo_;
};

template <class F>
Algebra<F>::Algebra(Parameters<F> P, std::size_t size_guard) : P_(std::move(P)), r_(P_.r()), G_(P_.r()) {
  std::size_t d = G_.size();
  for (int k = 0; k < r_; ++k) {
    d *= static_cast<std::size_t>(m());
    if (d > size_guard) break;
  }
  if (d > size_guard)
    throw SizeGuardError("algebra dimension m^r r! exceeds the size guard of " + std::to_string(size_guard));
  dim_ = d;
  tables_.assign(r_, std::vector<Elem>(dim_));
  {
    Builder B(*this);
    B.build_hecke_tables();
    if (r_ > 0) B.build_t0_table();
  }
  words_.resize(dim_);
  word_scales_.assign(dim_, field().one());
  for (std::uint32_t b = 0; b < dim_; ++b) {
    std::vector<int> c = exponents(b);
    auto& w = words_[b];
    for (int k = 1; k <= r_; ++k) {
      for (int t = 0; t < c[k - 1]; ++t) {
        for (int j = k - 1; j >= 1; --j) w.push_back(j);
        w.push_back(0);
        for (int j = 1; j <= k - 1; ++j) w.push_back(j);
      }
      word_scales_[b] *= power(field(), P_.q(), static_cast<long long>(1 - k) * c[k - 1]);
    }
    const auto& red = G_.reduced_word(perm_index(b));
    w.insert(w.end(), red.begin(), red.end());
  }
}

template <class F>
std::uint32_t Algebra<F>::index(const std::vector<int>& c, std::size_t w_idx) const {
  if (static_cast<int>(c.size()) != r_) throw ContractError("exponent vector has the wrong length");
  std::size_t cidx = 0;
  for (int k = r_; k >= 1; --k) {
    if (c[k - 1] < 0 || c[k - 1] >= m()) throw ContractError("exponent out of range");
    cidx = cidx * m() + c[k - 1];
  }
  return static_cast<std::uint32_t>(cidx * G_.size() + w_idx);
}

template <class F>
std::uint32_t Algebra<F>::index(const Monomial& mono) const {
  return index(mono.c, G_.index(mono.w));
}

template <class F>
std::vector<int> Algebra<F>::exponents(std::uint32_t b) const {
  std::size_t cidx = b / G_.size();
  std::vector<int> c(r_);
  for (int k = 0; k < r_; ++k) {
    c[k] = static_cast<int>(cidx % m());
    cidx /= m();
  }
  return c;
}

template <class F>
Monomial Algebra<F>::monomial(std::uint32_t b) const {
  return {exponents(b), G_.perm(perm_index(b))};
}

template <class F>
typename Algebra<F>::Elem Algebra<F>::scalar(const E& x) const {
  if (F::is_zero(x)) return {};
  return Elem{{0, x}};
}

template <class F>
typename Algebra<F>::Elem Algebra<F>::T(int g) const {
  if (g < 0 || g >= r_) throw ContractError("generator T_" + std::to_string(g) + " does not exist for r=" + std::to_string(r_));
  if (g == 0) {
    std::vector<int> c(r_, 0);
    c[0] = 1;
    if (m() == 1) return scalar(P_.u(1));
    return basis_element(index(c, 0));
  }
  return basis_element(index(std::vector<int>(r_, 0), G_.index(Permutation::simple(g, r_))));
}

template <class F>
typename Algebra<F>::Elem Algebra<F>::T(const Permutation& w) const {
  return basis_element(index(std::vector<int>(r_, 0), G_.index(w)));
}

template <class F>
typename Algebra<F>::Elem Algebra<F>::jucys_murphy(int k) const {
  if (k < 1 || k > r_) throw ContractError("L_" + std::to_string(k) + " does not exist for r=" + std::to_string(r_));
  if (m() == 1) {
    // L_k reduces through L_1 = u_1; go through the product form.
    Elem e = one();
    for (int j = k - 1; j >= 1; --j) e = right_mul_generator(e, j);
    e = scaled<F>(e, P_.u(1));
    for (int j = 1; j <= k - 1; ++j) e = right_mul_generator(e, j);
    return scaled<F>(e, power(field(), P_.q(), 1 - k));
  }
  std::vector<int> c(r_, 0);
  c[k - 1] = 1;
  return basis_element(index(c, 0));
}

template <class F>
typename Algebra<F>::Elem Algebra<F>::right_mul_generator(const Elem& e, int g) const {
  if (g < 0 || g >= r_) throw ContractError("generator index out of range");
  std::vector<std::pair<std::uint32_t, E>> acc;
  const auto& table = tables_[g];
  for (const auto& [b, alpha] : e)
    for (const auto& [b2, beta] : table[b]) acc.emplace_back(b2, alpha * beta);
  return combine(std::move(acc));
}

template <class F>
typename Algebra<F>::Elem Algebra<F>::right_mul_word(Elem e, const std::vector<int>& word) const {
  for (int g : word) {
    if (e.empty()) break;
    e = right_mul_generator(e, g);
  }
  return e;
}

template <class F>
typename Algebra<F>::Elem Algebra<F>::right_mul_perm(const Elem& e, const Permutation& w) const {
  return right_mul_word(e, w.reduced_word());
}

template <class F>
typename Algebra<F>::Elem Algebra<F>::multiply(const Elem& a, const Elem& b) const {
  std::vector<std::pair<std::uint32_t, E>> acc;
  for (const auto& [idx, beta] : b) {
    Elem part = right_mul_word(a, words_[idx]);
    E s = beta * word_scales_[idx];
    for (auto& [i, c] : part) acc.emplace_back(i, c * s);
  }
  return combine(std::move(acc));
}

template <class F>
SparseVec<typename F::Element> xy_element(const Algebra<F>& A, const Composition& comp, Sign sign) {
  if (comp.size() != A.r()) throw ContractError("composition size differs from r");
  const F& K = A.field();
  typename F::Element minus_q_inv = -(K.one() / A.params().q());
  std::vector<std::pair<std::uint32_t, typename F::Element>> terms;
  for (const auto& w : young_subgroup_elements(YoungSubgroupSpec::from_composition(comp), A.r())) {
    typename F::Element c = sign == Sign::plus ? K.one() : power(K, minus_q_inv, w.length());
    terms.emplace_back(A.index(std::vector<int>(A.r(), 0), A.group().index(w)), c);
  }
  return Algebra<F>::combine(std::move(terms));
}

template <class F>
SparseVec<typename F::Element> pi_element(const Algebra<F>& A, int a, const typename F::Element& x) {
  if (a < 0 || a > A.r()) throw ContractError("pi_a needs 0 <= a <= r");
  auto e = A.one();
  for (int j = 1; j <= a; ++j) e = A.multiply(e, A.sub(A.jucys_murphy(j), A.scalar(x)));
  return e;
}

template <class F>
SparseVec<typename F::Element> pi_element(const Algebra<F>& A, const IntervalVector& a, bool tilde) {
  if (a.m() != A.m() || a.r() != A.r()) throw ContractError("interval vector does not match (m, r)");
  auto e = A.one();
  const int m = A.m();
  for (int i = 1; i <= m - 1; ++i) {
    const auto& x = tilde ? A.params().u(m - i) : A.params().u(i + 1);
    e = A.multiply(e, pi_element(A, a[i], x));
  }
  return e;
}

namespace {
template <class F>
void check_shape(const Algebra<F>& A, const Multipartition& L) {
  if (L.m() != A.m() || L.r() != A.r())
    throw ContractError("multipartition " + L.str() + " does not match (m, r) = (" + std::to_string(A.m()) + ", " +
                        std::to_string(A.r()) + ")");
}
}  // namespace

template <class F>
SparseVec<typename F::Element> x_element(const Algebra<F>& A, const Multipartition& L) {
  check_shape(A, L);
  auto [bar, a] = concatenate(L);
  return A.multiply(pi_element(A, a, false), xy_element(A, bar, Sign::plus));
}

template <class F>
SparseVec<typename F::Element> y_element(const Algebra<F>& A, const Multipartition& L) {
  check_shape(A, L);
  auto [bar, a] = concatenate(L);
  return A.multiply(pi_element(A, a, true), xy_element(A, bar, Sign::minus));
}

template <class F>
SparseVec<typename F::Element> z_element(const Algebra<F>& A, const Multipartition& L) {
  auto x = A.right_mul_perm(x_element(A, L), w_of_multipartition(L));
  return A.multiply(x, y_element(A, dual_multipartition(L)));
}

template <class F>
SparseVec<typename F::Element> twisted_z_element(const Algebra<F>& A, const Multipartition& L) {
  auto y = A.right_mul_perm(y_element(A, L), w_of_multipartition(L));
  return A.multiply(y, x_element(A, dual_multipartition(L)));
}

template <class F>
SparseVec<typename F::Element> simple_generator(const Algebra<F>& A, const Multipartition& L) {
  Multipartition D = dual_multipartition(L);
  auto y = A.right_mul_perm(y_element(A, D), w_of_multipartition(D));
  return A.multiply(y, z_element(A, L));
}

template <class F>
SparseVec<typename F::Element> v_element(const Algebra<F>& A, const IntervalVector& a) {
  auto e = A.right_mul_perm(pi_element(A, a, false), w_of_interval(a));
  return A.multiply(e, pi_element(A, a.dual(), true));
}

template <class F>
SparseVec<typename F::Element> phi_map(const Algebra<F>& src, const Algebra<F>& dst,
                                       const SparseVec<typename F::Element>& e) {
  const auto& P = src.params();
  const auto& Q = dst.params();
  bool ok = P.r() == Q.r() && P.m() == Q.m() && field_spec(P.field()) == field_spec(Q.field()) &&
            Q.q() * P.q() == P.field().one();
  for (int i = 1; ok && i <= P.m(); ++i) ok = Q.u(i) == P.u(P.m() - i + 1);
  if (!ok) throw ContractError("target algebra is not the (q^{-1}, reversed u) twist of the source");
  typename F::Element minus_q = -P.q();
  SparseVec<typename F::Element> out;
  for (const auto& [b, c] : e) {
    int len = src.group().length(src.perm_index(b));
    out.emplace_back(b, c * power(P.field(), minus_q, len));
  }
  return out;
}

bool SelfTestReport::pass() const {
  if (basis_size != expected_size) return false;
  for (const auto& rel : relations)
    if (!rel.pass) return false;
  return true;
}

template <class F>
SelfTestReport relations_selftest(const Algebra<F>& A) {
  using Elem = typename Algebra<F>::Elem;
  const F& K = A.field();
  const auto& P = A.params();
  const int r = A.r();
  SelfTestReport rep;
  rep.m = A.m();
  rep.r = r;
  rep.basis_size = A.dimension();
  rep.expected_size = factorial(r);
  for (int k = 0; k < r; ++k) rep.expected_size *= static_cast<std::size_t>(A.m());

  // Each relation is checked on every basis vector of the regular representation.
  auto check = [&](const std::string& name, auto&& lhs_minus_rhs) {
    RelationCheck rc{name, true, 0};
    for (std::uint32_t b = 0; b < A.dimension(); ++b) {
      ++rc.instances;
      if (!lhs_minus_rhs(A.basis_element(b)).empty()) {
        rc.pass = false;
        break;
      }
    }
    rep.relations.push_back(rc);
  };
  auto word = [&](const Elem& e, std::vector<int> w) { return A.right_mul_word(e, w); };

  if (r >= 1) {
    check("cyclotomic (T0-u1)...(T0-um)=0", [&](const Elem& e) {
      Elem v = e;
      for (int i = 1; i <= A.m(); ++i) v = A.sub(A.right_mul_generator(v, 0), A.scale(v, P.u(i)));
      return v;
    });
  }
  if (r >= 2) {
    check("T0T1T0T1=T1T0T1T0", [&](const Elem& e) { return A.sub(word(e, {0, 1, 0, 1}), word(e, {1, 0, 1, 0})); });
  }
  for (int i = 1; i < r; ++i) {
    check("quadratic (T" + std::to_string(i) + "-q)(T" + std::to_string(i) + "+1)=0", [&](const Elem& e) {
      Elem v = A.sub(A.right_mul_generator(e, i), A.scale(e, P.q()));
      return A.add(A.right_mul_generator(v, i), v);
    });
  }
  for (int i = 1; i + 1 < r; ++i) {
    check("braid T" + std::to_string(i) + "T" + std::to_string(i + 1) + "T" + std::to_string(i), [&](const Elem& e) {
      return A.sub(word(e, {i, i + 1, i}), word(e, {i + 1, i, i + 1}));
    });
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 2; j < r; ++j)
      check("commute T" + std::to_string(i) + "T" + std::to_string(j),
            [&](const Elem& e) { return A.sub(word(e, {i, j}), word(e, {j, i})); });

  // The generator word of each basis monomial must reproduce it from 1.
  {
    RelationCheck rc{"normal-form words", true, 0};
    for (std::uint32_t b = 0; b < A.dimension(); ++b) {
      ++rc.instances;
      Elem e = A.scale(A.right_mul_word(A.one(), A.word(b)), A.word_scale(b));
      if (e != A.basis_element(b)) {
        rc.pass = false;
        break;
      }
    }
    rep.relations.push_back(rc);
  }
  (void)K;
  return rep;
}

#define AK_INSTANTIATE(F)                                                                                     \
  template class Algebra<F>;                                                                                  \
  template SparseVec<F::Element> xy_element(const Algebra<F>&, const Composition&, Sign);                     \
  template SparseVec<F::Element> pi_element(const Algebra<F>&, int, const F::Element&);                       \
  template SparseVec<F::Element> pi_element(const Algebra<F>&, const IntervalVector&, bool);                  \
  template SparseVec<F::Element> x_element(const Algebra<F>&, const Multipartition&);                         \
  template SparseVec<F::Element> y_element(const Algebra<F>&, const Multipartition&);                         \
  template SparseVec<F::Element> z_element(const Algebra<F>&, const Multipartition&);                         \
  template SparseVec<F::Element> twisted_z_element(const Algebra<F>&, const Multipartition&);                 \
  template SparseVec<F::Element> simple_generator(const Algebra<F>&, const Multipartition&);                  \
  template SparseVec<F::Element> v_element(const Algebra<F>&, const IntervalVector&);                         \
  template SparseVec<F::Element> phi_map(const Algebra<F>&, const Algebra<F>&, const SparseVec<F::Element>&); \
  template SelfTestReport relations_selftest(const Algebra<F>&);

AK_INSTANTIATE(RationalField)
AK_INSTANTIATE(PrimeField)

}  // namespace ak
