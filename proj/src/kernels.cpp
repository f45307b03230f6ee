#include "gcs/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace gcs::kernels {

#ifndef GCS_HAVE_AVX2
namespace avx2 {
bool available() { return false; }
cplx dot(const cplx* a, const cplx* b, std::size_t n) { return scalar::dot(a, b, n); }
double norm2(const cplx* a, std::size_t n) { return scalar::norm2(a, n); }
double diff_norm2(const cplx* a, const cplx* b, std::size_t n) { return scalar::diff_norm2(a, b, n); }
}  // namespace avx2
#endif

namespace {

struct Table {
  cplx (*dot)(const cplx*, const cplx*, std::size_t);
  double (*norm2)(const cplx*, std::size_t);
  double (*diff_norm2)(const cplx*, const cplx*, std::size_t);
  const char* name;
};

Table select() {
  const char* env = std::getenv("GCS_SIMD");
  const bool force_scalar = env && std::strcmp(env, "scalar") == 0;
  if (!force_scalar && avx2::available()) return {avx2::dot, avx2::norm2, avx2::diff_norm2, "avx2"};
  return {scalar::dot, scalar::norm2, scalar::diff_norm2, "scalar"};
}

const Table& table() {
  static const Table t = select();
  return t;
}

}  // namespace

cplx dot(const cplx* a, const cplx* b, std::size_t n) { return table().dot(a, b, n); }
double norm2(const cplx* a, std::size_t n) { return table().norm2(a, n); }
double diff_norm2(const cplx* a, const cplx* b, std::size_t n) { return table().diff_norm2(a, b, n); }
std::string_view active_variant() { return table().name; }

}  // namespace gcs::kernels
