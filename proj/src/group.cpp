#include "gcs/group.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gcs {

void ValidationReport::record(std::string name, double value) {
  for (auto& [n, v] : residuals) {
    if (n == name) {
      v = std::max(v, value);
      return;
    }
  }
  residuals.emplace_back(std::move(name), value);
}

double ValidationReport::residual(std::string_view name) const {
  for (const auto& [n, v] : residuals)
    if (n == name) return v;
  return 0.0;
}

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Element> mul, std::vector<Element> inv,
                         std::vector<std::string> labels)
    : name_(std::move(name)), order_(order), mul_(std::move(mul)), inv_(std::move(inv)), labels_(std::move(labels)) {
  if (order_ == 0) throw InputError("group order must be positive");
  if (order_ > 65535) throw InputError("group order exceeds element index range");
  if (mul_.size() != order_ * order_)
    throw InputError("multiplication table has " + std::to_string(mul_.size()) + " entries, expected " +
                     std::to_string(order_ * order_));
  if (inv_.size() != order_) throw InputError("inverse table has wrong length");
  for (Element x : mul_)
    if (x >= order_) throw InputError("multiplication table entry out of range");
  for (Element x : inv_)
    if (x >= order_) throw InputError("inverse table entry out of range");
  if (labels_.empty()) {
    for (std::size_t g = 0; g < order_; ++g) labels_.push_back(std::to_string(g));
  }
  if (labels_.size() != order_) throw InputError("label list has wrong length");
}

Element FiniteGroup::multiply(std::size_t g, std::size_t h) const {
  if (g >= order_ || h >= order_) throw std::out_of_range("group element index out of range");
  return mul_[g * order_ + h];
}

std::optional<Element> FiniteGroup::find(std::string_view label) const {
  for (std::size_t g = 0; g < order_; ++g)
    if (labels_[g] == label) return static_cast<Element>(g);
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t g = 0; g < order_; ++g)
    for (std::size_t h = g + 1; h < order_; ++h)
      if (mul_[g * order_ + h] != mul_[h * order_ + g]) return false;
  return true;
}

Representation::Representation(std::string label, std::size_t dim, std::vector<Matrix> matrices)
    : label_(std::move(label)), dim_(dim), matrices_(std::move(matrices)) {
  if (dim_ == 0) throw InputError("representation '" + label_ + "' has zero dimension");
  for (const auto& m : matrices_) {
    if (static_cast<std::size_t>(m.rows()) != dim_ || static_cast<std::size_t>(m.cols()) != dim_)
      throw InputError("representation '" + label_ + "': matrix shape does not match declared dim " +
                       std::to_string(dim_));
  }
}

Representation tensor_product(const Representation& a, const Representation& b) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<Matrix> out;
  out.reserve(a.matrices().size());
  for (std::size_t g = 0; g < a.matrices().size(); ++g) {
    const Matrix& A = a.matrices()[g];
    const Matrix& B = b.matrices()[g];
    Matrix K(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) K.block(i * db, j * db, db, db) = A(i, j) * B;
    out.push_back(std::move(K));
  }
  return {a.label() + "x" + b.label(), da * db, std::move(out)};
}

Representation direct_sum(const Representation& a, const Representation& b) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<Matrix> out;
  for (std::size_t g = 0; g < a.matrices().size(); ++g) {
    Matrix S = Matrix::Zero(da + db, da + db);
    S.topLeftCorner(da, da) = a.matrices()[g];
    S.bottomRightCorner(db, db) = b.matrices()[g];
    out.push_back(std::move(S));
  }
  return {a.label() + "+" + b.label(), da + db, std::move(out)};
}

Representation conjugate(const Representation& r) {
  std::vector<Matrix> out;
  for (const auto& m : r.matrices()) out.push_back(m.conjugate());
  return {r.label() + "*", r.dim(), std::move(out)};
}

IrrepSet::IrrepSet(std::vector<Representation> irreps) : irreps_(std::move(irreps)) {}

std::optional<std::size_t> IrrepSet::find(std::string_view label) const {
  for (std::size_t k = 0; k < irreps_.size(); ++k)
    if (irreps_[k].label() == label) return k;
  return std::nullopt;
}

std::optional<std::size_t> IrrepSet::trivial_index() const {
  for (std::size_t k = 0; k < irreps_.size(); ++k) {
    const auto& r = irreps_[k];
    if (r.dim() != 1) continue;
    bool all_one = std::all_of(r.matrices().begin(), r.matrices().end(),
                               [](const Matrix& m) { return std::abs(m(0, 0) - cplx(1.0)) < 1e-12; });
    if (all_one) return k;
  }
  return std::nullopt;
}

std::size_t IrrepSet::sum_dim_squared() const {
  std::size_t s = 0;
  for (const auto& r : irreps_) s += r.dim() * r.dim();
  return s;
}

ValidationReport validate_group(const FiniteGroup& G) {
  ValidationReport report;
  const std::size_t n = G.order();
  const auto& t = G.table();
  std::size_t identity_bad = 0, inverse_bad = 0, assoc_bad = 0;

  for (std::size_t g = 0; g < n; ++g) {
    if (t[g] != g || t[g * n] != g) {
      if (identity_bad++ < 4)
        report.fail("identity: mul(0," + G.label(g) + ") or mul(" + G.label(g) + ",0) != " + G.label(g));
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t gi = G.inverse_table()[g];
    if (t[g * n + gi] != 0 || t[gi * n + g] != 0) {
      if (inverse_bad++ < 4) report.fail("inverse: " + G.label(g) + "·inv != e");
    }
  }
  for (std::size_t a = 0; a < n && assoc_bad < 4; ++a)
    for (std::size_t b = 0; b < n && assoc_bad < 4; ++b) {
      const std::size_t ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
          report.fail("associativity: (" + G.label(a) + "·" + G.label(b) + ")·" + G.label(c));
          if (++assoc_bad >= 4) break;
        }
      }
    }
  // Latin-square property follows from the above for a genuine group; check it anyway so that
  // corrupted tables with a lucky identity row are caught.
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<bool> seen(n, false);
    for (std::size_t h = 0; h < n; ++h) seen[t[g * n + h]] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      report.fail("row " + G.label(g) + " is not a permutation");
      break;
    }
  }
  report.record("identity_violations", static_cast<double>(identity_bad));
  report.record("inverse_violations", static_cast<double>(inverse_bad));
  report.record("associativity_violations", static_cast<double>(assoc_bad));
  return report;
}

ValidationReport validate_representation(const FiniteGroup& G, const Representation& r, double tol) {
  ValidationReport report;
  const std::size_t n = G.order();
  if (r.matrices().size() != n) {
    report.fail(r.label() + ": has " + std::to_string(r.matrices().size()) + " matrices, expected " +
                std::to_string(n));
    return report;
  }
  const Matrix I = Matrix::Identity(r.dim(), r.dim());
  double unit = 0, hom = 0;
  for (std::size_t g = 0; g < n; ++g) {
    const Matrix& M = r.matrices()[g];
    unit = std::max(unit, (M * M.adjoint() - I).cwiseAbs().maxCoeff());
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const Matrix d = r.matrices()[g] * r.matrices()[h] - r.matrices()[G.mul(g, h)];
      hom = std::max(hom, d.cwiseAbs().maxCoeff());
    }
  const double ident = (r.matrices()[0] - I).cwiseAbs().maxCoeff();
  report.record("unitarity", unit);
  report.record("homomorphism", hom);
  report.record("identity", ident);
  if (unit > tol) report.fail(r.label() + ": unitarity residual " + std::to_string(unit));
  if (hom > tol) report.fail(r.label() + ": homomorphism residual " + std::to_string(hom));
  if (ident > tol) report.fail(r.label() + ": Γ(e) is not the identity");
  return report;
}

ValidationReport validate_irreps(const FiniteGroup& G, const IrrepSet& S, double tol) {
  ValidationReport report;
  const std::size_t n = G.order();
  for (const auto& r : S) {
    if (r.matrices().size() != n)
      throw InputError("irrep '" + r.label() + "' has " + std::to_string(r.matrices().size()) +
                       " matrices for a group of order " + std::to_string(n));
    auto sub = validate_representation(G, r, tol);
    for (auto& v : sub.violations) report.fail(std::move(v));
    for (auto& [name, value] : sub.residuals) report.record(name, value);
  }

  // Grand orthogonality: Σ_g conj(Γλ(g)_ij) Γσ(g)_i'j' = δ δ δ |G|/dλ.
  double orth = 0;
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = a; b < S.size(); ++b) {
      const auto& A = S[a];
      const auto& B = S[b];
      for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
          for (std::size_t k = 0; k < B.dim(); ++k)
            for (std::size_t l = 0; l < B.dim(); ++l) {
              cplx sum = 0;
              for (std::size_t g = 0; g < n; ++g) sum += std::conj(A.entry(g, i, j)) * B.entry(g, k, l);
              const double expect = (a == b && i == k && j == l) ? double(n) / double(A.dim()) : 0.0;
              orth = std::max(orth, std::abs(sum - expect));
            }
    }
  report.record("orthogonality", orth);
  if (orth > tol * double(n)) report.fail("grand orthogonality residual " + std::to_string(orth));

  const std::size_t sd2 = S.sum_dim_squared();
  report.record("completeness", std::abs(double(sd2) - double(n)));
  if (sd2 != n) report.fail("completeness: sum of d^2 = " + std::to_string(sd2) + " != |G| = " + std::to_string(n));
  if (!S.trivial_index()) report.fail("no trivial irrep in set");
  return report;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& G) {
  const std::size_t n = G.order();
  ConjugacyClasses out;
  out.class_of.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    if (out.class_of[g] != n) continue;
    std::vector<Element> cls;
    for (std::size_t h = 0; h < n; ++h) {
      Element c = G.conj(static_cast<Element>(h), static_cast<Element>(g));
      if (std::find(cls.begin(), cls.end(), c) == cls.end()) cls.push_back(c);
    }
    std::sort(cls.begin(), cls.end());
    for (Element c : cls) out.class_of[c] = out.classes.size();
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace gcs
