#include "gcs/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gcs {
namespace {

struct Split {
  std::vector<std::size_t> a, b;  // site indices
};

Split split(const Register& reg, const std::vector<std::string>& side_a) {
  Split s;
  std::vector<bool> in_a(reg.size(), false);
  for (const auto& id : side_a) {
    const auto i = reg.index_of(id);
    if (in_a[i]) throw InputError("site '" + id + "' listed twice");
    in_a[i] = true;
    s.a.push_back(i);
  }
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (!in_a[i]) s.b.push_back(i);
  return s;
}

std::uint64_t flat_index(const Register& reg, Key k, const std::vector<std::size_t>& idx) {
  std::uint64_t v = 0;
  for (auto i : idx) v = v * reg.G().order() + reg.get(k, i);
  return v;
}

std::uint64_t power(std::uint64_t n, std::size_t k) {
  std::uint64_t d = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (d > UINT64_MAX / n) return UINT64_MAX;
    d *= n;
  }
  return d;
}

}  // namespace

Matrix reduced_density_matrix(const SparseState& s, const std::vector<std::string>& kept, std::uint64_t cap) {
  if (kept.empty()) throw InputError("reduced density matrix needs at least one kept site");
  const auto& reg = s.reg();
  const Split sp = split(reg, kept);
  const std::uint64_t dim = power(reg.G().order(), sp.a.size());
  if (dim > cap) throw BudgetError("reduced density matrix dimension " + std::to_string(dim) + " exceeds cap");
  const double n2 = s.norm2();
  if (!(n2 > 0)) throw std::domain_error("reduced density matrix of the zero state");

  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, cplx>>> by_rest;
  for (std::size_t x = 0; x < s.size(); ++x)
    by_rest[flat_index(reg, s.keys()[x], sp.b)].emplace_back(flat_index(reg, s.keys()[x], sp.a), s.amps()[x]);
  Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& [_, col] : by_rest)
    for (const auto& [i, ai] : col)
      for (const auto& [j, aj] : col) rho(Eigen::Index(i), Eigen::Index(j)) += ai * std::conj(aj);
  return rho / n2;
}

SchmidtData schmidt_data(const SparseState& s, const std::vector<std::string>& side_a, std::uint64_t cap) {
  const auto& reg = s.reg();
  const Split sp = split(reg, side_a);
  const double n2 = s.norm2();
  if (!(n2 > 0)) throw std::domain_error("Schmidt data of the zero state");

  std::map<std::uint64_t, Eigen::Index> rows, cols;
  for (Key k : s.keys()) {
    rows.emplace(flat_index(reg, k, sp.a), 0);
    cols.emplace(flat_index(reg, k, sp.b), 0);
  }
  if (std::min(rows.size(), cols.size()) > cap)
    throw BudgetError("Schmidt decomposition exceeds the dimension cap on both sides");
  Eigen::Index r = 0, c = 0;
  for (auto& [_, v] : rows) v = r++;
  for (auto& [_, v] : cols) v = c++;
  Matrix M = Matrix::Zero(r, c);
  for (std::size_t x = 0; x < s.size(); ++x)
    M(rows[flat_index(reg, s.keys()[x], sp.a)], cols[flat_index(reg, s.keys()[x], sp.b)]) = s.amps()[x];
  M /= std::sqrt(n2);

  Eigen::BDCSVD<Matrix> svd(M);
  SchmidtData out;
  const auto& sv = svd.singularValues();
  for (Eigen::Index k = 0; k < sv.size(); ++k) out.values.push_back(sv(k));
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  for (double v : out.values) {
    if (v <= 1e-10) continue;
    ++out.rank;
    const double p = v * v;
    out.entropy -= p * std::log2(p);
  }
  out.maximal = out.rank > 0;
  for (std::size_t k = 0; k < out.rank; ++k)
    if (std::abs(out.values[k] - out.values[0]) > 1e-8) out.maximal = false;
  const std::uint64_t full = std::min(power(reg.G().order(), sp.a.size()), power(reg.G().order(), sp.b.size()));
  out.spread = out.values.empty() ? 0.0 : out.values.front() - (out.values.size() < full ? 0.0 : out.values.back());
  return out;
}

}  // namespace gcs
