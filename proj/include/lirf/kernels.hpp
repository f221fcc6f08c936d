// Copyright 2026 The LIRF Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

// Dense fp64 inner loops shared by the geometry and network code. Every
// kernel has a scalar reference implementation and an AVX2 variant; the
// public entry points dispatch through function pointers resolved once at
// startup (override with LIRF_SIMD=scalar|avx2|auto). Variants are allowed
// to differ from the reference only by floating-point summation order.

namespace lirf::kernels {

enum class Backend { scalar, avx2 };

// Backend currently wired into dot/squared_distance/axpy.
Backend active_backend();

// Force a backend; returns false (and leaves dispatch unchanged) if the
// requested one is not available on this CPU.
bool set_backend(Backend b);

const char* backend_name(Backend b);

double dot(const double* a, const double* b, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);
// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool available();
double dot(const double* a, const double* b, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace avx2

}  // namespace lirf::kernels
