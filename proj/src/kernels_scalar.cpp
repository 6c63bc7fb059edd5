// SPDX-License-Identifier: Apache-2.0
//
// Reference kernels. These define the numerical behaviour; SIMD variants
// must match them bitwise.

#include "taskblock/kernels.hpp"

#include <cmath>

namespace taskblock::kern {
namespace {

void matmul_scalar(const double* a, const double* b, double* c, long m, long k, long n) {
  for (long i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (long j = 0; j < n; ++j) ci[j] = 0.0;
    const double* ai = a + i * k;
    for (long kk = 0; kk < k; ++kk) {
      const double av = ai[kk];
      const double* bk = b + kk * n;
      for (long j = 0; j < n; ++j) ci[j] += av * bk[j];
    }
  }
}

void transpose_scalar(const double* a, double* out, long r, long c) {
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) out[j * r + i] = a[i * c + j];
}

void add_scalar_k(const double* a, const double* b, double* o, long n) {
  for (long i = 0; i < n; ++i) o[i] = a[i] + b[i];
}

void sub_scalar_k(const double* a, const double* b, double* o, long n) {
  for (long i = 0; i < n; ++i) o[i] = a[i] - b[i];
}

void mul_scalar_k(const double* a, const double* b, double* o, long n) {
  for (long i = 0; i < n; ++i) o[i] = a[i] * b[i];
}

void add_rowvec_scalar(const double* a, const double* v, double* o, long r, long c) {
  for (long i = 0; i < r; ++i) {
    const double* ai = a + i * c;
    double* oi = o + i * c;
    for (long j = 0; j < c; ++j) oi[j] = ai[j] + v[j];
  }
}

void scale_scalar(const double* a, double s, double* o, long n) {
  for (long i = 0; i < n; ++i) o[i] = a[i] * s;
}

void add_const_scalar(const double* a, double s, double* o, long n) {
  for (long i = 0; i < n; ++i) o[i] = a[i] + s;
}

void clamp_scalar(const double* a, double lo, double hi, double* o, long n) {
  for (long i = 0; i < n; ++i) {
    double v = a[i];
    o[i] = v < lo ? lo : (v > hi ? hi : v);
  }
}

void relu_scalar(const double* a, double* o, long n) {
  for (long i = 0; i < n; ++i) o[i] = a[i] > 0.0 ? a[i] : 0.0;
}

void sqrt_scalar(const double* a, double* o, long n) {
  for (long i = 0; i < n; ++i) o[i] = std::sqrt(a[i]);
}

void reciprocal_scalar(const double* a, double* o, long n) {
  for (long i = 0; i < n; ++i) o[i] = 1.0 / a[i];
}

void tanh_scalar(const double* a, double* o, long n) {
  for (long i = 0; i < n; ++i) o[i] = std::tanh(a[i]);
}

void exp_scalar(const double* a, double* o, long n) {
  for (long i = 0; i < n; ++i) o[i] = std::exp(a[i]);
}

void log_scalar(const double* a, double* o, long n) {
  for (long i = 0; i < n; ++i) o[i] = std::log(a[i]);
}

void sum_axis0_scalar(const double* a, double* o, long r, long c) {
  for (long j = 0; j < c; ++j) o[j] = 0.0;
  for (long i = 0; i < r; ++i) {
    const double* ai = a + i * c;
    for (long j = 0; j < c; ++j) o[j] += ai[j];
  }
}

void sum_axis1_scalar(const double* a, double* o, long r, long c) {
  for (long i = 0; i < r; ++i) {
    const double* ai = a + i * c;
    double s = 0.0;
    for (long j = 0; j < c; ++j) s += ai[j];
    o[i] = s;
  }
}

double sum_all_scalar(const double* a, long n) {
  double s = 0.0;
  for (long i = 0; i < n; ++i) s += a[i];
  return s;
}

}  // namespace

namespace detail {
const KernelTable& scalar_table() {
  static const KernelTable t = {
      matmul_scalar,  transpose_scalar,  add_scalar_k,      sub_scalar_k,
      mul_scalar_k,   add_rowvec_scalar, scale_scalar,      add_const_scalar,
      clamp_scalar,   relu_scalar,       sqrt_scalar,       reciprocal_scalar,
      tanh_scalar,    exp_scalar,        log_scalar,        sum_axis0_scalar,
      sum_axis1_scalar, sum_all_scalar,
  };
  return t;
}
}  // namespace detail

}  // namespace taskblock::kern
