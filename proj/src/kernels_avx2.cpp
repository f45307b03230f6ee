// Compiled with -mavx2 -mfma. Only reached after avx2::available() says yes.
#include <immintrin.h>

#include "gcs/kernels.hpp"

namespace gcs::kernels::avx2 {

bool available() {
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
}

namespace {
inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}
}  // namespace

// Two complex numbers per register: [r0 i0 r1 i1].
cplx dot(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc_re = _mm256_setzero_pd();  // accumulates ar*br, ai*bi
  __m256d acc_im = _mm256_setzero_pd();  // accumulates ar*bi, ai*br (with signs below)
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * k);
    __m256d vb = _mm256_loadu_pd(pb + 2 * k);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    __m256d vb_sw = _mm256_permute_pd(vb, 0x5);  // [bi br ...]
    acc_im = _mm256_fmadd_pd(va, vb_sw, acc_im);  // [ar*bi, ai*br, ...]
  }
  alignas(32) double im_parts[4];
  _mm256_store_pd(im_parts, acc_im);
  double re = hsum(acc_re);
  double im = (im_parts[0] - im_parts[1]) + (im_parts[2] - im_parts[3]);
  for (; k < n; ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
  }
  return {re, im};
}

double norm2(const cplx* a, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(a);
  const std::size_t m = 2 * n;
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= m; k += 8) {
    __m256d x = _mm256_loadu_pd(p + k);
    __m256d y = _mm256_loadu_pd(p + k + 4);
    acc0 = _mm256_fmadd_pd(x, x, acc0);
    acc1 = _mm256_fmadd_pd(y, y, acc1);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < m; ++k) s += p[k] * p[k];
  return s;
}

double diff_norm2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  const std::size_t m = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= m; k += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(pa + k), _mm256_loadu_pd(pb + k));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double s = hsum(acc);
  for (; k < m; ++k) {
    const double d = pa[k] - pb[k];
    s += d * d;
  }
  return s;
}

}  // namespace gcs::kernels::avx2
