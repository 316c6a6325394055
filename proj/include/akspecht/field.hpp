#pragma once

// Exact coefficient fields. Each field type F exposes
//   using Element;  zero(), one(), from_int(), parse(), to_string(), is_zero()
// and its Element supports the usual arithmetic operators. Elements of the
// prime field carry their modulus so that generic code can use plain
// operator syntax.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "akspecht/error.hpp"

namespace ak {

class ModElem {
 public:
  ModElem() = default;
  ModElem(std::uint32_t value, std::uint32_t modulus) : v_(value % modulus), p_(modulus) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend ModElem operator+(ModElem a, ModElem b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    std::uint64_t s = std::uint64_t(a.v_) + b.v_;
    return raw(std::uint32_t(s >= p ? s - p : s), p);
  }
  friend ModElem operator-(ModElem a, ModElem b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : std::uint32_t(std::uint64_t(a.v_) + p - b.v_), p);
  }
  friend ModElem operator*(ModElem a, ModElem b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return {};
    return raw(std::uint32_t(std::uint64_t(a.v_) * b.v_ % p), p);
  }
  friend ModElem operator/(ModElem a, ModElem b) { return a * b.inverse(); }
  ModElem operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  ModElem& operator+=(ModElem b) { return *this = *this + b; }
  ModElem& operator-=(ModElem b) { return *this = *this - b; }
  ModElem& operator*=(ModElem b) { return *this = *this * b; }
  ModElem& operator/=(ModElem b) { return *this = *this / b; }
  friend bool operator==(ModElem a, ModElem b) { return a.v_ == b.v_; }

  ModElem inverse() const {
    if (v_ == 0) throw ContractError("division by zero in prime field");
    // Fermat: v^(p-2)
    std::uint64_t base = v_, result = 1, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return raw(std::uint32_t(result), p_);
  }

 private:
  static ModElem raw(std::uint32_t v, std::uint32_t p) {
    ModElem e;
    e.v_ = v;
    e.p_ = p;
    return e;
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// F_p for a prime p < 2^31.
class PrimeField {
 public:
  using Element = ModElem;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  Element zero() const { return {0, p_}; }
  Element one() const { return {1, p_}; }
  Element from_int(long long n) const;
  /// Accepts "a" or "a/b" with optional sign.
  Element parse(std::string_view text) const;
  static std::string to_string(const Element& e) { return std::to_string(e.value()); }
  static bool is_zero(const Element& e) { return e.is_zero(); }
  std::string name() const { return "F_" + std::to_string(p_); }

 private:
  std::uint32_t p_;
};

/// The rational numbers, backed by GMP.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long n) const { return mpq_class(mpz_class(std::to_string(n))); }
  Element parse(std::string_view text) const;
  static std::string to_string(const Element& e) { return e.get_str(); }
  static bool is_zero(const Element& e) { return sgn(e) == 0; }
  std::string name() const { return "Q"; }
};

template <class F>
typename F::Element power(const F& field, typename F::Element base, long long exponent) {
  if (exponent < 0) {
    if (F::is_zero(base)) throw ContractError("negative power of zero");
    base = field.one() / base;
    exponent = -exponent;
  }
  typename F::Element result = field.one();
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

inline ModElem reciprocal(const ModElem& x) { return x.inverse(); }
inline mpq_class reciprocal(const mpq_class& x) {
  if (sgn(x) == 0) throw ContractError("division by zero in Q");
  return 1 / x;
}

enum class FieldKind { rationals, prime };

/// Runtime description of a coefficient field.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Calls fn(field) with the concrete field type selected by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldKind::prime) return fn(PrimeField(spec.p));
  return fn(RationalField{});
}

}  // namespace ak
