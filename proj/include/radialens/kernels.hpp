#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

// Data-parallel inner loops used by the optimizer, solver, and metrics.
// Every operation has a scalar reference implementation and (on x86-64 with
// AVX2) a vectorized variant; the active backend is chosen once at runtime
// from CPUID, overridable with RADIALENS_SIMD=scalar|avx2. Elementwise
// kernels are bit-identical across backends (no FMA contraction); reductions
// may differ in the last ulps because lane sums associate differently.

namespace radialens::kernels {

using cplx = std::complex<double>;

struct Backend {
  const char* name;

  // out = a*x + b*y
  void (*axpby)(double a, const double* x, double b, const double* y, double* out, size_t n);
  // out = a*x
  void (*scale)(const double* x, double a, double* out, size_t n);
  // out = x .* y
  void (*vmul)(const double* x, const double* y, double* out, size_t n);
  // out = sign(x) .* max(|x| - t, 0)
  void (*soft_threshold)(const double* x, double t, double* out, size_t n);
  // out = max(x, 0)
  void (*clamp_min0)(const double* x, double* out, size_t n);
  // out = a .* b (complex)
  void (*cmul)(const cplx* a, const cplx* b, cplx* out, size_t n);
  // out = conj(a) .* b
  void (*cconj_mul)(const cplx* a, const cplx* b, cplx* out, size_t n);
  // out = sqrt(re^2 + im^2 + eps)
  void (*cmag_eps)(const cplx* a, double eps, double* out, size_t n);

  double (*sum)(const double* x, size_t n);
  double (*dot)(const double* x, const double* y, size_t n);
  double (*sum_abs)(const double* x, size_t n);
  double (*sum_abs_diff)(const double* a, const double* b, size_t n);
  double (*sum_sq_diff)(const double* a, const double* b, size_t n);
  double (*max_val)(const double* x, size_t n);
};

// Backend currently routing the free functions below.
const Backend& active();
// All backends usable on this machine (scalar always; avx2 when supported).
std::vector<const Backend*> available();
// Force a backend by name; throws std::invalid_argument if unavailable.
void select(const std::string& name);

inline void axpby(double a, const double* x, double b, const double* y, double* out, size_t n) {
  active().axpby(a, x, b, y, out, n);
}
inline void scale(const double* x, double a, double* out, size_t n) {
  active().scale(x, a, out, n);
}
inline void vmul(const double* x, const double* y, double* out, size_t n) {
  active().vmul(x, y, out, n);
}
inline void soft_threshold(const double* x, double t, double* out, size_t n) {
  active().soft_threshold(x, t, out, n);
}
inline void clamp_min0(const double* x, double* out, size_t n) {
  active().clamp_min0(x, out, n);
}
inline void cmul(const cplx* a, const cplx* b, cplx* out, size_t n) {
  active().cmul(a, b, out, n);
}
inline void cconj_mul(const cplx* a, const cplx* b, cplx* out, size_t n) {
  active().cconj_mul(a, b, out, n);
}
inline void cmag_eps(const cplx* a, double eps, double* out, size_t n) {
  active().cmag_eps(a, eps, out, n);
}
inline double sum(const double* x, size_t n) { return active().sum(x, n); }
inline double dot(const double* x, const double* y, size_t n) { return active().dot(x, y, n); }
inline double sum_abs(const double* x, size_t n) { return active().sum_abs(x, n); }
inline double sum_abs_diff(const double* a, const double* b, size_t n) {
  return active().sum_abs_diff(a, b, n);
}
inline double sum_sq_diff(const double* a, const double* b, size_t n) {
  return active().sum_sq_diff(a, b, n);
}
inline double max_val(const double* x, size_t n) { return active().max_val(x, n); }

}  // namespace radialens::kernels
