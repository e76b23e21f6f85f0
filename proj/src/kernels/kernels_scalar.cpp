#include "radialens/kernels.hpp"

#include <cmath>

// Reference implementations. Plain loops, one element at a time; these define
// the semantics the vector backends are tested against.

namespace radialens::kernels::scalar {

void axpby(double a, const double* x, double b, const double* y, double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void scale(const double* x, double a, double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = a * x[i];
}

void vmul(const double* x, const double* y, double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void soft_threshold(const double* x, double t, double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    const double m = std::abs(x[i]) - t;
    out[i] = m > 0.0 ? (x[i] > 0.0 ? m : -m) : 0.0;
  }
}

void clamp_min0(const double* x, double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void cmul(const cplx* a, const cplx* b, cplx* out, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    out[i] = {ar * br - ai * bi, ar * bi + ai * br};
  }
}

void cconj_mul(const cplx* a, const cplx* b, cplx* out, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = -a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    out[i] = {ar * br - ai * bi, ar * bi + ai * br};
  }
}

void cmag_eps(const cplx* a, double eps, double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    const double re = a[i].real(), im = a[i].imag();
    out[i] = std::sqrt(re * re + im * im + eps);
  }
}

double sum(const double* x, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double dot(const double* x, const double* y, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double sum_abs(const double* x, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += std::abs(x[i]);
  return s;
}

double sum_abs_diff(const double* a, const double* b, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += std::abs(a[i] - b[i]);
  return s;
}

double sum_sq_diff(const double* a, const double* b, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double max_val(const double* x, size_t n) {
  double m = n ? x[0] : 0.0;
  for (size_t i = 1; i < n; ++i)
    if (x[i] > m) m = x[i];
  return m;
}

const Backend backend = {
    .name = "scalar",
    .axpby = axpby,
    .scale = scale,
    .vmul = vmul,
    .soft_threshold = soft_threshold,
    .clamp_min0 = clamp_min0,
    .cmul = cmul,
    .cconj_mul = cconj_mul,
    .cmag_eps = cmag_eps,
    .sum = sum,
    .dot = dot,
    .sum_abs = sum_abs,
    .sum_abs_diff = sum_abs_diff,
    .sum_sq_diff = sum_sq_diff,
    .max_val = max_val,
};

}  // namespace radialens::kernels::scalar
