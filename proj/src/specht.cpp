#include "akspecht/specht.hpp"

#include <gmpxx.h>

namespace ak {

std::uint64_t dimension_by_hooks(const Multipartition& L) {
  mpz_class total = 1;
  int placed = 0;
  for (const auto& p : L.components()) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(placed + p.size()), static_cast<unsigned long>(p.size()));
    total *= binom;
    total *= mpz_class(std::to_string(hook_length_count(p)));
    placed += p.size();
  }
  if (!total.fits_ulong_p()) throw SizeGuardError("tableau count exceeds 64 bits");
  return total.get_ui();
}

std::uint64_t dimension_by_enumeration(const Multipartition& L) {
  return enumerate_standard_tableaux(L).size();
}

std::uint64_t dimension_oracle(const Multipartition& L) {
  std::uint64_t a = dimension_by_hooks(L);
  std::uint64_t b = dimension_by_enumeration(L);
  if (a != b)
    throw InternalError("tableau count oracle disagrees for " + L.str() + ": hooks " + std::to_string(a) +
                        ", enumeration " + std::to_string(b));
  return a;
}

}  // namespace ak
