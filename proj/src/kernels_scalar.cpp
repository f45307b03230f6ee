#include "gcs/kernels.hpp"

namespace gcs::kernels::scalar {

cplx dot(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0, im = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag(), br = b[k].real(), bi = b[k].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

double norm2(const cplx* a, std::size_t n) {
  double s = 0;
  for (std::size_t k = 0; k < n; ++k) s += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
  return s;
}

double diff_norm2(const cplx* a, const cplx* b, std::size_t n) {
  double s = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dr = a[k].real() - b[k].real(), di = a[k].imag() - b[k].imag();
    s += dr * dr + di * di;
  }
  return s;
}

}  // namespace gcs::kernels::scalar
