#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gcs/group.hpp"

namespace gcs {

/// Packed basis key: site i occupies `bits` bits at shift (n-1-i)·bits, so numeric order
/// equals lexicographic order of the element-index tuple.
using Key = unsigned __int128;

class Register {
 public:
  Register() = default;
  Register(GroupSpec spec, std::vector<std::string> sites);

  const GroupSpec& spec() const { return spec_; }
  const FiniteGroup& G() const { return *spec_.group; }
  std::size_t size() const { return sites_.size(); }
  const std::vector<std::string>& sites() const { return sites_; }
  const std::string& site(std::size_t i) const { return sites_[i]; }
  /// Throws InputError for unknown ids.
  std::size_t index_of(std::string_view id) const;
  bool contains(std::string_view id) const;
  unsigned bits() const { return bits_; }

  Element get(Key k, std::size_t i) const { return static_cast<Element>((k >> shift(i)) & mask_); }
  Key set(Key k, std::size_t i, Element v) const {
    const unsigned s = shift(i);
    return (k & ~(Key(mask_) << s)) | (Key(v) << s);
  }
  Key make_key(const std::vector<Element>& values) const;
  std::vector<Element> unpack(Key k) const;
  /// Key with site i deleted (remaining sites keep their relative order).
  Key drop(Key k, std::size_t i) const;

  Register without(std::size_t i) const;
  Register concat(const Register& other) const;
  /// Same group (object, or name and table) and identical site lists.
  bool same_layout(const Register& other) const;
  /// |G|^size, saturating at 2^64-1.
  std::uint64_t dimension() const;

 private:
  unsigned shift(std::size_t i) const { return static_cast<unsigned>((sites_.size() - 1 - i) * bits_); }

  GroupSpec spec_;
  std::vector<std::string> sites_;
  unsigned bits_ = 1;
  std::uint64_t mask_ = 1;
};

/// Local operators of the group algebra acting on one site.
struct LocalOp {
  enum class Kind { XLeft, XRight, T, ZRep };
  Kind kind = Kind::T;
  std::string site;
  Element g = 0;          // XLeft, XRight, T
  std::size_t irrep = 0;  // ZRep: index into the register's IrrepSet
  std::size_t i = 0, j = 0;

  static LocalOp x_left(std::string site, Element g) { return {Kind::XLeft, std::move(site), g}; }
  static LocalOp x_right(std::string site, Element g) { return {Kind::XRight, std::move(site), g}; }
  static LocalOp t(std::string site, Element g) { return {Kind::T, std::move(site), g}; }
  static LocalOp z(std::string site, std::size_t irrep, std::size_t i, std::size_t j) {
    return {Kind::ZRep, std::move(site), 0, irrep, i, j};
  }
};

/// CMULT sense: Left |g,h> -> |g,gh>, Right |g,h> -> |g,hg⁻¹>.
enum class Sense { Left, Right };

/// Sparse state: sorted unique keys with amplitudes; entries below the pruning
/// threshold are dropped on construction. Values are immutable in practice: every
/// operation returns a new state.
class SparseState {
 public:
  static constexpr double kPrune = 1e-14;

  SparseState() = default;
  explicit SparseState(Register reg) : reg_(std::move(reg)) {}
  /// Sorts, merges duplicate keys by addition and prunes.
  SparseState(Register reg, std::vector<Key> keys, std::vector<cplx> amps);

  const Register& reg() const { return reg_; }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  const std::vector<Key>& keys() const { return keys_; }
  const std::vector<cplx>& amps() const { return amps_; }
  cplx amplitude(Key k) const;
  cplx amplitude(const std::vector<Element>& values) const { return amplitude(reg_.make_key(values)); }

  double norm2() const;
  double norm() const;
  SparseState scaled(cplx s) const;
  /// Throws std::domain_error for the zero state.
  SparseState normalized() const;

 private:
  Register reg_;
  std::vector<Key> keys_;
  std::vector<cplx> amps_;
};

SparseState group_basis_state(const Register& reg, const std::vector<Element>& values);
/// Listed sites in |I> = |G|^{-1/2} Σ_g |g>, every other site in |e>.
SparseState trivial_irrep_state(const Register& reg, const std::vector<std::string>& sites);
/// |Γ^ij> = Σ_g sqrt(d/|G|) Γ(g)_ij |g> on `site`, every other site in |e>.
SparseState rep_basis_state(const Register& reg, std::string_view site, std::size_t irrep, std::size_t i, std::size_t j);

SparseState tensor(const SparseState& a, const SparseState& b);
SparseState apply_local(const SparseState& s, const LocalOp& op);
SparseState apply_cmult(const SparseState& s, std::string_view control, std::string_view target, Sense sense);
/// Apply a |G|×|G| matrix U (U(out, in) in the group basis) to one site.
SparseState apply_site_matrix(const SparseState& s, std::string_view site, const Matrix& U);
/// Apply a bijection of the group to one site's value.
SparseState permute_site(const SparseState& s, std::size_t site, const std::function<Element(Element)>& f);
/// Restrict to keys with `site` = value and drop the site (unnormalised).
SparseState select_site(const SparseState& s, std::string_view site, Element value);
/// Contract `site` with the bra <φ| (φ given in the group basis) and drop it.
SparseState project_site(const SparseState& s, std::string_view site, const std::vector<cplx>& phi);
/// Same sites in a new order.
SparseState reorder(const SparseState& s, const std::vector<std::string>& sites);

/// Sum of two states on the same register.
SparseState add(const SparseState& a, const SparseState& b, cplx ca = 1.0, cplx cb = 1.0);

/// Throws InputError if the registers differ in group or site list.
cplx inner_product(const SparseState& a, const SparseState& b);
/// |<a|b>|² / (<a|a><b|b>); throws std::domain_error on a zero-norm input.
double fidelity(const SparseState& a, const SparseState& b);
/// ‖a - b‖
double distance(const SparseState& a, const SparseState& b);

/// Random state with `entries` random keys and complex Gaussian amplitudes (normalised).
SparseState random_state(const Register& reg, std::mt19937_64& rng, std::size_t entries);
/// Dense random state over the whole register; requires dimension ≤ cap.
SparseState random_dense_state(const Register& reg, std::mt19937_64& rng, std::uint64_t cap = 1u << 20);

/// Dense vector in key order; throws BudgetError above `cap`.
Eigen::VectorXcd to_dense(const SparseState& s, std::uint64_t cap = 1u << 20);

// Representation basis.

struct RepLabel {
  std::size_t irrep, i, j;
};
/// Rep-basis labels in canonical order (irrep, i, j).
std::vector<RepLabel> rep_labels(const GroupSpec& spec);
/// W with W(r, g) = sqrt(d/|G|) conj(Γ(g)_ij) for r = (Γ,i,j): rep coefficients c = W ψ.
Matrix basis_transform(const GroupSpec& spec);

enum class Basis { Group, Representation };

/// One site's coefficients against every configuration of the other sites.
struct SiteTable {
  Register rest;               // register without the tabulated site
  std::string site;
  std::size_t position = 0;    // index of the site in the original register
  Register full;               // original register
  std::vector<Key> rest_keys;  // row labels, sorted
  Matrix coeffs;               // rows: rest_keys, cols: group elements or rep labels
  Basis basis = Basis::Group;
};

SiteTable site_table(const SparseState& s, std::string_view site);
/// Convert the coefficient table to `target` basis.
SiteTable change_basis(const SiteTable& t, Basis target);
SiteTable change_basis(const SparseState& s, std::string_view site, Basis target);
/// Rebuild a group-basis state from a table in either basis.
SparseState from_site_table(const SiteTable& t);

}  // namespace gcs
