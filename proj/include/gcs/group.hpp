#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace gcs {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Group elements are indices into the multiplication table; 0 is the identity.
using Element = std::uint16_t;

inline constexpr double kAlgebraicTol = 1e-12;

/// Malformed or invalid input (bad tables, unknown names, bad indices).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size or memory cap would be exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of a validation pass. Empty `violations` means valid; `residuals`
/// records the largest deviation observed for each named check.
struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::pair<std::string, double>> residuals;

  bool ok() const { return violations.empty(); }
  void fail(std::string message) { violations.push_back(std::move(message)); }
  void record(std::string name, double value);
  double residual(std::string_view name) const;
};

class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::size_t order, std::vector<Element> mul, std::vector<Element> inv,
              std::vector<std::string> labels = {});

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }

  /// Checked product g·h.
  Element multiply(std::size_t g, std::size_t h) const;
  /// Unchecked product for inner loops.
  Element mul(Element g, Element h) const { return mul_[static_cast<std::size_t>(g) * order_ + h]; }
  Element inv(Element g) const { return inv_[g]; }
  /// h g h⁻¹
  Element conj(Element h, Element g) const { return mul(mul(h, g), inv(h)); }

  const std::string& label(Element g) const { return labels_.at(g); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  bool is_abelian() const;

  const std::vector<Element>& table() const { return mul_; }
  const std::vector<Element>& inverse_table() const { return inv_; }

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
};

/// A unitary matrix representation of a group (not necessarily irreducible).
class Representation {
 public:
  Representation() = default;
  Representation(std::string label, std::size_t dim, std::vector<Matrix> matrices);

  const std::string& label() const { return label_; }
  std::size_t dim() const { return dim_; }
  const Matrix& operator()(Element g) const { return matrices_[g]; }
  cplx entry(Element g, std::size_t i, std::size_t j) const { return matrices_[g](i, j); }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  cplx character(Element g) const { return matrices_[g].trace(); }

 private:
  std::string label_;
  std::size_t dim_ = 0;
  std::vector<Matrix> matrices_;
};

Representation tensor_product(const Representation& a, const Representation& b);
Representation direct_sum(const Representation& a, const Representation& b);
/// Entrywise complex conjugate representation.
Representation conjugate(const Representation& r);

class IrrepSet {
 public:
  IrrepSet() = default;
  explicit IrrepSet(std::vector<Representation> irreps);

  std::size_t size() const { return irreps_.size(); }
  const Representation& operator[](std::size_t k) const { return irreps_.at(k); }
  const std::vector<Representation>& irreps() const { return irreps_; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Index of the irrep whose matrices are all [1]; nullopt if absent.
  std::optional<std::size_t> trivial_index() const;
  std::size_t sum_dim_squared() const;

  auto begin() const { return irreps_.begin(); }
  auto end() const { return irreps_.end(); }

 private:
  std::vector<Representation> irreps_;
};

struct ConjugacyClasses {
  /// classes[0] == {e}; remaining classes ordered by smallest member.
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of;
};

/// Group plus a complete irrep set, shared immutably between states and operators.
struct GroupSpec {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const IrrepSet> irreps;

  const FiniteGroup& G() const { return *group; }
  const IrrepSet& reps() const { return *irreps; }
};

ValidationReport validate_group(const FiniteGroup& g);

/// Unitarity, homomorphism and Γ(e) = 1 for a single representation.
ValidationReport validate_representation(const FiniteGroup& g, const Representation& r, double tol = kAlgebraicTol);

/// Full irrep-set check: per-irrep validity, grand orthogonality, completeness Σd² = |G|,
/// and the presence of the trivial irrep.
ValidationReport validate_irreps(const FiniteGroup& g, const IrrepSet& s, double tol = kAlgebraicTol);

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

}  // namespace gcs
