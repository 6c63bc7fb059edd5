// SPDX-License-Identifier: Apache-2.0

#include "taskblock/kernels.hpp"

#include <cstdlib>

namespace taskblock::kern {

namespace {

Backend detect_backend() {
  if (std::getenv("TASKBLOCK_FORCE_SCALAR") != nullptr) return Backend::Scalar;
  return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

Backend& backend_slot() {
  static Backend b = detect_backend();
  return b;
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Backend active_backend() { return backend_slot(); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_supported()) b = Backend::Scalar;
  backend_slot() = b;
}

const KernelTable& table() {
  return backend_slot() == Backend::Avx2 ? detail::avx2_table() : detail::scalar_table();
}

}  // namespace taskblock::kern
