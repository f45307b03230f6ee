#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gcs/state.hpp"

namespace gcs {

/// One factor of a group word: a summation variable (index into the monomial's
/// variable list) or a constant element, optionally inverted.
struct WordFactor {
  int var = -1;  // -1 means constant
  Element constant = 0;
  bool inverse = false;
};

/// Formal product evaluated left to right.
struct Word {
  std::vector<WordFactor> factors;

  static Word constant(Element g) { return {{WordFactor{-1, g, false}}}; }
  static Word variable(int v, bool inverse = false) { return {{WordFactor{v, 0, inverse}}}; }
  /// Reversed word of inverted factors.
  Word inverse() const;
  Word operator*(const Word& rhs) const;
  bool uses(int var) const;
  std::size_t occurrences(int var) const;
  /// Drop identities, merge adjacent constants, cancel adjacent x x⁻¹.
  void simplify(const FiniteGroup& G);
  void shift_vars(int offset);
};

enum class FactorKind { T, XLeft, XRight, ZRep };

struct Factor {
  FactorKind kind = FactorKind::T;
  Word word;                                  // T, XLeft, XRight
  std::shared_ptr<const Representation> rep;  // ZRep
  std::size_t i = 0, j = 0;

  static Factor t(Word w) { return {FactorKind::T, std::move(w), nullptr}; }
  static Factor x_left(Word w) { return {FactorKind::XLeft, std::move(w), nullptr}; }
  static Factor x_right(Word w) { return {FactorKind::XRight, std::move(w), nullptr}; }
  static Factor z(std::shared_ptr<const Representation> r, std::size_t i, std::size_t j) {
    return {FactorKind::ZRep, {}, std::move(r), i, j};
  }
};

/// Ordered factor list on one site; the leftmost factor acts last.
struct SiteTerm {
  std::string site;
  std::vector<Factor> factors;
};

/// Word must evaluate to `value` for a summand to contribute.
struct Constraint {
  Word word;
  Element value = 0;
};

/// scalar · Σ_{vars ∈ G} [constraints] ⊗_sites (factor product).
class ConditionalMonomial {
 public:
  std::vector<std::string> vars;
  std::vector<SiteTerm> terms;
  std::vector<Constraint> constraints;
  cplx scalar = 1.0;

  /// Adds a summation variable; the name is made unique with a #k suffix.
  int add_var(const std::string& hint);
  std::vector<Factor>& site(const std::string& id);
  const SiteTerm* find(std::string_view id) const;
  void erase_site(std::string_view id);
  std::vector<std::string> support() const;
  void simplify(const FiniteGroup& G);

  /// Printable form, e.g. `sum[h1,h2] T[v:h2 h1^-1] Xl[w:h1 g h1^-1]`.
  std::string to_string(const FiniteGroup& G) const;
};

/// Operator product a·b (b acts first).
ConditionalMonomial product(const ConditionalMonomial& a, const ConditionalMonomial& b);

/// Apply to a state. Sites of the operator must exist in the state's register.
SparseState apply(const ConditionalMonomial& op, const SparseState& s);

/// Replace the factors on `site` by the constraints implied by <m| · |m>; the site is removed.
ConditionalMonomial restrict_to(const ConditionalMonomial& op, std::string_view site, Element m);

/// Remove a site whose factors are all multiplications: valid under <I| · |I>,
/// since <I|X = <I|. Throws InputError if any T or Z factor sits there.
ConditionalMonomial absorb_uniform(const ConditionalMonomial& op, std::string_view site);

}  // namespace gcs
