// SPDX-License-Identifier: Apache-2.0
//
// AVX2 kernels (4-wide f64). Vectorization runs across independent output
// elements and uses separate mul/add (no FMA), so every output element sees
// the exact operation sequence of the scalar reference. Ops with no safe
// lane decomposition (row sums, transcendentals, transpose) fall back to the
// scalar table.

#include "taskblock/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace taskblock::kern {
namespace {

const KernelTable& sc() { return detail::scalar_table(); }

void matmul_avx2(const double* a, const double* b, double* c, long m, long k, long n) {
  const long n4 = n - (n % 4);
  for (long i = 0; i < m; ++i) {
    double* ci = c + i * n;
    const double* ai = a + i * k;
    for (long j = 0; j < n4; j += 4) _mm256_storeu_pd(ci + j, _mm256_setzero_pd());
    for (long j = n4; j < n; ++j) ci[j] = 0.0;
    for (long kk = 0; kk < k; ++kk) {
      const __m256d av = _mm256_set1_pd(ai[kk]);
      const double* bk = b + kk * n;
      for (long j = 0; j < n4; j += 4) {
        __m256d acc = _mm256_loadu_pd(ci + j);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(av, _mm256_loadu_pd(bk + j)));
        _mm256_storeu_pd(ci + j, acc);
      }
      const double avs = ai[kk];
      for (long j = n4; j < n; ++j) ci[j] += avs * bk[j];
    }
  }
}

void add_avx2(const double* a, const double* b, double* o, long n) {
  long i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(o + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) o[i] = a[i] + b[i];
}

void sub_avx2(const double* a, const double* b, double* o, long n) {
  long i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(o + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) o[i] = a[i] - b[i];
}

void mul_avx2(const double* a, const double* b, double* o, long n) {
  long i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(o + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) o[i] = a[i] * b[i];
}

void add_rowvec_avx2(const double* a, const double* v, double* o, long r, long c) {
  const long c4 = c - (c % 4);
  for (long i = 0; i < r; ++i) {
    const double* ai = a + i * c;
    double* oi = o + i * c;
    for (long j = 0; j < c4; j += 4)
      _mm256_storeu_pd(oi + j, _mm256_add_pd(_mm256_loadu_pd(ai + j), _mm256_loadu_pd(v + j)));
    for (long j = c4; j < c; ++j) oi[j] = ai[j] + v[j];
  }
}

void scale_avx2(const double* a, double s, double* o, long n) {
  const __m256d sv = _mm256_set1_pd(s);
  long i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(o + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), sv));
  for (; i < n; ++i) o[i] = a[i] * s;
}

void add_scalar_avx2(const double* a, double s, double* o, long n) {
  const __m256d sv = _mm256_set1_pd(s);
  long i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(o + i, _mm256_add_pd(_mm256_loadu_pd(a + i), sv));
  for (; i < n; ++i) o[i] = a[i] + s;
}

void clamp_avx2(const double* a, double lo, double hi, double* o, long n) {
  const __m256d lov = _mm256_set1_pd(lo);
  const __m256d hiv = _mm256_set1_pd(hi);
  long i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(a + i);
    _mm256_storeu_pd(o + i, _mm256_min_pd(_mm256_max_pd(v, lov), hiv));
  }
  for (; i < n; ++i) {
    double v = a[i];
    o[i] = v < lo ? lo : (v > hi ? hi : v);
  }
}

void relu_avx2(const double* a, double* o, long n) {
  const __m256d z = _mm256_setzero_pd();
  long i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(o + i, _mm256_max_pd(_mm256_loadu_pd(a + i), z));
  for (; i < n; ++i) o[i] = a[i] > 0.0 ? a[i] : 0.0;
}

// _mm256_sqrt_pd and _mm256_div_pd are IEEE correctly rounded, same as the
// scalar operations.
void sqrt_avx2(const double* a, double* o, long n) {
  long i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(o + i, _mm256_sqrt_pd(_mm256_loadu_pd(a + i)));
  for (; i < n; ++i) o[i] = __builtin_sqrt(a[i]);
}

void reciprocal_avx2(const double* a, double* o, long n) {
  const __m256d one = _mm256_set1_pd(1.0);
  long i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(o + i, _mm256_div_pd(one, _mm256_loadu_pd(a + i)));
  for (; i < n; ++i) o[i] = 1.0 / a[i];
}

void sum_axis0_avx2(const double* a, double* o, long r, long c) {
  const long c4 = c - (c % 4);
  for (long j = 0; j < c4; j += 4) _mm256_storeu_pd(o + j, _mm256_setzero_pd());
  for (long j = c4; j < c; ++j) o[j] = 0.0;
  for (long i = 0; i < r; ++i) {
    const double* ai = a + i * c;
    for (long j = 0; j < c4; j += 4) {
      __m256d acc = _mm256_loadu_pd(o + j);
      _mm256_storeu_pd(o + j, _mm256_add_pd(acc, _mm256_loadu_pd(ai + j)));
    }
    for (long j = c4; j < c; ++j) o[j] += ai[j];
  }
}

}  // namespace

namespace detail {
const KernelTable& avx2_table() {
  static const KernelTable t = {
      matmul_avx2,     sc().transpose, add_avx2,        sub_avx2,
      mul_avx2,        add_rowvec_avx2, scale_avx2,     add_scalar_avx2,
      clamp_avx2,      relu_avx2,      sqrt_avx2,       reciprocal_avx2,
      sc().tanh,       sc().exp,       sc().log,        sum_axis0_avx2,
      sc().sum_axis1,  sc().sum_all,
  };
  return t;
}
}  // namespace detail

}  // namespace taskblock::kern

#else  // non-x86: AVX2 table aliases the scalar reference

namespace taskblock::kern::detail {
const KernelTable& avx2_table() { return scalar_table(); }
}  // namespace taskblock::kern::detail

#endif
