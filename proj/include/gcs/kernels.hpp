#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace gcs::kernels {

using cplx = std::complex<double>;

// Dense reductions over contiguous complex arrays. Each has a scalar reference
// implementation and, on x86-64 builds, an AVX2/FMA variant chosen at runtime.
// Setting GCS_SIMD=scalar in the environment forces the scalar path.

/// Σ conj(a[k]) b[k]
cplx dot(const cplx* a, const cplx* b, std::size_t n);
/// Σ |a[k]|²
double norm2(const cplx* a, std::size_t n);
/// Σ |a[k] - b[k]|²
double diff_norm2(const cplx* a, const cplx* b, std::size_t n);

/// Name of the active variant: "avx2" or "scalar".
std::string_view active_variant();

namespace scalar {
cplx dot(const cplx* a, const cplx* b, std::size_t n);
double norm2(const cplx* a, std::size_t n);
double diff_norm2(const cplx* a, const cplx* b, std::size_t n);
}  // namespace scalar

namespace avx2 {
/// True when the variant was compiled in and the CPU supports AVX2 and FMA.
bool available();
cplx dot(const cplx* a, const cplx* b, std::size_t n);
double norm2(const cplx* a, std::size_t n);
double diff_norm2(const cplx* a, const cplx* b, std::size_t n);
}  // namespace avx2

}  // namespace gcs::kernels
