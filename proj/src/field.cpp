#include "akspecht/field.hpp"

#include <cctype>

namespace ak {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw ContractError("field modulus must be a prime below 2^31, got " + std::to_string(p));
  return {FieldKind::prime, p};
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31)) throw ContractError("field modulus must be a prime below 2^31, got " + std::to_string(p));
}

PrimeField::Element PrimeField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r), p_};
}

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw ContractError("malformed field element '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ContractError("malformed field element '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s);
}

std::pair<mpz_class, mpz_class> parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_integer(text), 1};
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ContractError("zero denominator in '" + std::string(text) + "'");
  return {num, den};
}

}  // namespace

PrimeField::Element PrimeField::parse(std::string_view text) const {
  auto [num, den] = parse_fraction(text);
  auto reduce = [&](const mpz_class& z) {
    mpz_class r = z % p_;
    if (r < 0) r += p_;
    return Element(static_cast<std::uint32_t>(r.get_ui()), p_);
  };
  Element d = reduce(den);
  if (d.is_zero()) throw ContractError("denominator vanishes mod " + std::to_string(p_) + " in '" + std::string(text) + "'");
  return reduce(num) / d;
}

RationalField::Element RationalField::parse(std::string_view text) const {
  auto [num, den] = parse_fraction(text);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace ak
