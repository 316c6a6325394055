#pragma once

// Batch kernels over independent sparse vectors. Each has a serial
// reference path and an OpenMP path; both produce identical output.

#include <cstddef>
#include <exception>
#include <vector>

#include "akspecht/sparse.hpp"

namespace ak {

enum class Exec { serial, parallel };

inline bool openmp_enabled() {
#ifdef AKSPECHT_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

/// out[i] = fn(in[i]) for every i.
template <class In, class Out, class Fn>
void batch_map(const std::vector<In>& in, std::vector<Out>& out, Fn&& fn, Exec exec) {
  out.resize(in.size());
  const long long n = static_cast<long long>(in.size());
  if (exec == Exec::serial || n < 2) {
    for (long long i = 0; i < n; ++i) out[i] = fn(in[i]);
    return;
  }
#ifdef AKSPECHT_HAVE_OPENMP
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      out[i] = fn(in[i]);
    } catch (...) {
#pragma omp critical(akspecht_batch_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
#else
  for (long long i = 0; i < n; ++i) out[i] = fn(in[i]);
#endif
}

/// v * T_g for every v in vs, as products in the algebra.
template <class Alg>
std::vector<typename Alg::Elem> batch_right_mul(const Alg& A, const std::vector<typename Alg::Elem>& vs, int g, Exec exec) {
  std::vector<typename Alg::Elem> out;
  batch_map(vs, out, [&](const typename Alg::Elem& v) { return A.right_mul_generator(v, g); }, exec);
  return out;
}

}  // namespace ak
