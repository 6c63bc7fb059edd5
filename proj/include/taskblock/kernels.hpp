// SPDX-License-Identifier: Apache-2.0
//
// Flat float64 array kernels underneath the tensor ops. Every kernel has a
// scalar reference implementation; the hot data-parallel ones also have an
// AVX2 variant selected at runtime. SIMD variants keep the per-element
// operation order of the scalar reference (vectorization is across
// independent output elements only), so both backends are bitwise identical.
// Transcendentals (tanh/exp/log) go through libm in both backends.
#pragma once

#include <cstdint>

namespace taskblock::kern {

enum class Backend { Scalar, Avx2 };

// Picks AVX2 when the CPU supports it, unless TASKBLOCK_FORCE_SCALAR is set
// in the environment.
Backend active_backend();
void set_backend(Backend b);
bool avx2_supported();

struct KernelTable {
  void (*matmul)(const double*, const double*, double*, long, long, long);
  void (*transpose)(const double*, double*, long, long);
  void (*add)(const double*, const double*, double*, long);
  void (*sub)(const double*, const double*, double*, long);
  void (*mul)(const double*, const double*, double*, long);
  void (*add_rowvec)(const double*, const double*, double*, long, long);
  void (*scale)(const double*, double, double*, long);
  void (*add_scalar)(const double*, double, double*, long);
  void (*clamp)(const double*, double, double, double*, long);
  void (*relu)(const double*, double*, long);
  void (*sqrt)(const double*, double*, long);
  void (*reciprocal)(const double*, double*, long);
  void (*tanh)(const double*, double*, long);
  void (*exp)(const double*, double*, long);
  void (*log)(const double*, double*, long);
  void (*sum_axis0)(const double*, double*, long, long);
  void (*sum_axis1)(const double*, double*, long, long);
  double (*sum_all)(const double*, long);
};

const KernelTable& table();

// c(m,n) = a(m,k) * b(k,n), all row-major.
inline void matmul(const double* a, const double* b, double* c, long m, long k, long n) {
  table().matmul(a, b, c, m, k, n);
}
inline void transpose(const double* a, double* out, long r, long c) { table().transpose(a, out, r, c); }
inline void add(const double* a, const double* b, double* o, long n) { table().add(a, b, o, n); }
inline void sub(const double* a, const double* b, double* o, long n) { table().sub(a, b, o, n); }
inline void mul(const double* a, const double* b, double* o, long n) { table().mul(a, b, o, n); }
// o(r,c) = a(r,c) + v(c) broadcast over rows.
inline void add_rowvec(const double* a, const double* v, double* o, long r, long c) {
  table().add_rowvec(a, v, o, r, c);
}
inline void scale(const double* a, double s, double* o, long n) { table().scale(a, s, o, n); }
inline void add_scalar(const double* a, double s, double* o, long n) { table().add_scalar(a, s, o, n); }
inline void clamp(const double* a, double lo, double hi, double* o, long n) {
  table().clamp(a, lo, hi, o, n);
}
inline void relu(const double* a, double* o, long n) { table().relu(a, o, n); }
inline void sqrt(const double* a, double* o, long n) { table().sqrt(a, o, n); }
inline void reciprocal(const double* a, double* o, long n) { table().reciprocal(a, o, n); }
inline void tanh(const double* a, double* o, long n) { table().tanh(a, o, n); }
inline void exp(const double* a, double* o, long n) { table().exp(a, o, n); }
inline void log(const double* a, double* o, long n) { table().log(a, o, n); }
// Column sums of a(r,c) -> o(c).
inline void sum_axis0(const double* a, double* o, long r, long c) { table().sum_axis0(a, o, r, c); }
// Row sums of a(r,c) -> o(r).
inline void sum_axis1(const double* a, double* o, long r, long c) { table().sum_axis1(a, o, r, c); }
inline double sum_all(const double* a, long n) { return table().sum_all(a, n); }

namespace detail {
const KernelTable& scalar_table();
const KernelTable& avx2_table();  // scalar fallbacks for non-SIMD entries
}  // namespace detail

}  // namespace taskblock::kern
