#include <doctest.h>

#include <random>
#include <vector>

#include "gcs/kernels.hpp"

using namespace gcs::kernels;

namespace {

std::vector<cplx> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& x : v) x = cplx(d(rng), d(rng));
  return v;
}

// Plain loops kept separate from the library's scalar variant.
cplx ref_dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  long double re = 0, im = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const cplx p = std::conj(a[k]) * b[k];
    re += p.real();
    im += p.imag();
  }
  return cplx(double(re), double(im));
}

}  // namespace

TEST_CASE("scalar kernels against long-double loops") {
  std::mt19937_64 rng(51);
  for (std::size_t n : {0, 1, 2, 3, 5, 8, 17, 64, 1001}) {
    const auto a = random_vec(rng, n), b = random_vec(rng, n);
    const double scale = 1e-13 * double(n + 1);
    CHECK(std::abs(scalar::dot(a.data(), b.data(), n) - ref_dot(a, b)) <= scale);
    CHECK(std::abs(scalar::norm2(a.data(), n) - ref_dot(a, a).real()) <= scale);
    std::vector<cplx> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = a[k] - b[k];
    CHECK(std::abs(scalar::diff_norm2(a.data(), b.data(), n) - ref_dot(d, d).real()) <= scale);
  }
}

TEST_CASE("AVX2 and scalar variants agree, including tails") {
  if (!avx2::available()) {
    MESSAGE("AVX2 variant not available on this machine; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(53);
  for (std::size_t n = 0; n < 70; ++n) {
    const auto a = random_vec(rng, n), b = random_vec(rng, n);
    const double scale = 1e-13 * double(n + 1);
    CHECK(std::abs(avx2::dot(a.data(), b.data(), n) - scalar::dot(a.data(), b.data(), n)) <= scale);
    CHECK(std::abs(avx2::norm2(a.data(), n) - scalar::norm2(a.data(), n)) <= scale);
    CHECK(std::abs(avx2::diff_norm2(a.data(), b.data(), n) - scalar::diff_norm2(a.data(), b.data(), n)) <= scale);
  }
}

TEST_CASE("dispatcher reports a variant") {
  const auto v = active_variant();
  CHECK((v == "avx2" || v == "scalar"));
  std::vector<cplx> a{{1, 2}, {3, -1}};
  CHECK(norm2(a.data(), 2) == doctest::Approx(15.0));
}
