// Copyright 2026 The LIRF Authors
// SPDX-License-Identifier: Apache-2.0

#include "lirf/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>

namespace lirf::kernels {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double squared_distance(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace scalar

namespace {

struct Dispatch {
  Backend backend;
  double (*dot)(const double*, const double*, std::size_t);
  double (*squared_distance)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
};

Dispatch make_dispatch(Backend b) {
  if (b == Backend::avx2) {
    return {Backend::avx2, &avx2::dot, &avx2::squared_distance, &avx2::axpy};
  }
  return {Backend::scalar, &scalar::dot, &scalar::squared_distance,
          &scalar::axpy};
}

Backend initial_backend() {
  const char* env = std::getenv("LIRF_SIMD");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2::available()) return Backend::avx2;
    if (std::strcmp(env, "avx2") == 0) return Backend::scalar;  // not supported
  }
  return avx2::available() ? Backend::avx2 : Backend::scalar;
}

Dispatch g_dispatch;  // initialized below
std::once_flag g_once;

const Dispatch& dispatch() {
  std::call_once(g_once, [] { g_dispatch = make_dispatch(initial_backend()); });
  return g_dispatch;
}

}  // namespace

Backend active_backend() { return dispatch().backend; }

bool set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2::available()) return false;
  dispatch();  // ensure init so call_once does not overwrite us later
  g_dispatch = make_dispatch(b);
  return true;
}

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

double dot(const double* a, const double* b, std::size_t n) {
  return dispatch().dot(a, b, n);
}

double squared_distance(const double* a, const double* b, std::size_t n) {
  return dispatch().squared_distance(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  dispatch().axpy(alpha, x, y, n);
}

}  // namespace lirf::kernels
