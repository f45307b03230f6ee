#include "gcs/catalog.hpp"

#include <cmath>
#include <numbers>

namespace gcs {
namespace {

std::vector<Element> inverses_from_table(std::size_t n, const std::vector<Element>& mul) {
  std::vector<Element> inv(n, 0);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (mul[g * n + h] == 0) inv[g] = static_cast<Element>(h);
  return inv;
}

Matrix scalar(cplx z) {
  Matrix m(1, 1);
  m(0, 0) = z;
  return m;
}

GroupSpec cyclic(std::size_t n) {
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Element>((a + b) % n);
  auto group = std::make_shared<FiniteGroup>("Z" + std::to_string(n), n, mul, inverses_from_table(n, mul));

  std::vector<Representation> irreps;
  for (std::size_t q = 0; q < n; ++q) {
    std::vector<Matrix> mats;
    for (std::size_t k = 0; k < n; ++k) {
      // Reduce the exponent first so Z2's -1 and Z4's ±i come out exact.
      const std::size_t e = (q * k) % n;
      const double angle = 2.0 * std::numbers::pi * double(e) / double(n);
      cplx z = std::polar(1.0, angle);
      if (4 * e == n) z = {0, 1};
      if (2 * e == n) z = {-1, 0};
      if (4 * e == 3 * n) z = {0, -1};
      if (e == 0) z = {1, 0};
      mats.push_back(scalar(z));
    }
    std::string label = n == 2 ? (q == 0 ? "+" : "-") : "k" + std::to_string(q);
    irreps.emplace_back(label, 1, std::move(mats));
  }
  return {group, std::make_shared<IrrepSet>(std::move(irreps))};
}

// Dihedral group of order 2n with elements r^a s^b stored at index a + n·b.
std::shared_ptr<FiniteGroup> dihedral_group(std::size_t n, std::string name, std::vector<std::string> labels) {
  const std::size_t N = 2 * n;
  std::vector<Element> mul(N * N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      const std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
      // r^a s^b r^c s^d = r^(a ± c) s^(b+d), sign flips when s passes r^c.
      const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      mul[x * N + y] = static_cast<Element>(rot + n * ((b + d) % 2));
    }
  return std::make_shared<FiniteGroup>(std::move(name), N, mul, inverses_from_table(N, mul), std::move(labels));
}

// Irrep of the dihedral group determined by images of r and s.
Representation dihedral_rep(std::size_t n, std::string label, const Matrix& r, const Matrix& s) {
  std::vector<Matrix> mats;
  for (std::size_t x = 0; x < 2 * n; ++x) {
    Matrix m = Matrix::Identity(r.rows(), r.cols());
    for (std::size_t k = 0; k < x % n; ++k) m = m * r;
    if (x / n == 1) m = m * s;
    mats.push_back(std::move(m));
  }
  return {std::move(label), static_cast<std::size_t>(r.rows()), std::move(mats)};
}

Matrix rotation(double angle) {
  Matrix m(2, 2);
  const double c = std::cos(angle), s = std::sin(angle);
  m << c, -s, s, c;
  return m;
}

Matrix reflection() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

GroupSpec s3() {
  auto group = dihedral_group(3, "S3", {"e", "r", "r2", "s", "rs", "r2s"});
  std::vector<Representation> irreps;
  irreps.push_back(dihedral_rep(3, "trivial", scalar(1), scalar(1)));
  irreps.push_back(dihedral_rep(3, "sign", scalar(1), scalar(-1)));
  irreps.push_back(dihedral_rep(3, "std", rotation(2.0 * std::numbers::pi / 3.0), reflection()));
  return {group, std::make_shared<IrrepSet>(std::move(irreps))};
}

GroupSpec d4() {
  auto group = dihedral_group(4, "D4", {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
  Matrix r(2, 2);
  r << 0, -1, 1, 0;
  std::vector<Representation> irreps;
  irreps.push_back(dihedral_rep(4, "trivial", scalar(1), scalar(1)));
  irreps.push_back(dihedral_rep(4, "A2", scalar(1), scalar(-1)));
  irreps.push_back(dihedral_rep(4, "B1", scalar(-1), scalar(1)));
  irreps.push_back(dihedral_rep(4, "B2", scalar(-1), scalar(-1)));
  irreps.push_back(dihedral_rep(4, "E", r, reflection()));
  return {group, std::make_shared<IrrepSet>(std::move(irreps))};
}

GroupSpec q8() {
  const cplx I(0, 1);
  Matrix one = Matrix::Identity(2, 2);
  Matrix qi(2, 2), qj(2, 2);
  qi << I, 0, 0, -I;
  qj << 0, 1, -1, 0;
  Matrix qk = qi * qj;
  std::vector<Matrix> faithful = {one, -one, qi, -qi, qj, -qj, qk, -qk};

  const std::size_t n = 8;
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Matrix p = faithful[a] * faithful[b];
      for (std::size_t c = 0; c < n; ++c)
        if ((p - faithful[c]).cwiseAbs().maxCoeff() < 1e-12) mul[a * n + b] = static_cast<Element>(c);
    }
  auto group = std::make_shared<FiniteGroup>("Q8", n, mul, inverses_from_table(n, mul),
                                             std::vector<std::string>{"1", "-1", "i", "-i", "j", "-j", "k", "-k"});

  // One-dimensional irreps: ±1 on the pair {±x} for x in {i, j, k}.
  auto sign_rep = [&](std::string label, int si, int sj, int sk) {
    const int s[4] = {1, si, sj, sk};
    std::vector<Matrix> mats;
    for (std::size_t x = 0; x < n; ++x) mats.push_back(scalar(double(s[x / 2])));
    return Representation(std::move(label), 1, std::move(mats));
  };
  std::vector<Representation> irreps;
  irreps.push_back(sign_rep("trivial", 1, 1, 1));
  irreps.push_back(sign_rep("i", 1, -1, -1));
  irreps.push_back(sign_rep("j", -1, 1, -1));
  irreps.push_back(sign_rep("k", -1, -1, 1));
  irreps.emplace_back("E", 2, faithful);
  return {group, std::make_shared<IrrepSet>(std::move(irreps))};
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "S3", "D4", "Q8"};
}

GroupSpec builtin_group(std::string_view name) {
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '2' && name[1] <= '8')
    return cyclic(static_cast<std::size_t>(name[1] - '0'));
  if (name == "S3") return s3();
  if (name == "D4") return d4();
  if (name == "Q8") return q8();
  throw InputError("unknown group '" + std::string(name) + "'");
}

}  // namespace gcs
