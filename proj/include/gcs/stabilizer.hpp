#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gcs/builder.hpp"
#include "gcs/graph.hpp"
#include "gcs/monomial.hpp"

namespace gcs {

struct Stabilizer {
  std::string label;  // "Se[v]" or "So[w,g]"
  std::string site;
  std::optional<Element> element;  // odd stabilizers only
  ConditionalMonomial op;
};

using StabilizerSet = std::vector<Stabilizer>;

ConditionalMonomial single_factor(const std::string& site, Factor f);

/// T_e on each even site and X_g on each odd site for every g (left multiplication,
/// or right multiplication when `right` is set).
StabilizerSet initial_stabilizers(const ClusterGraph& g, const FiniteGroup& G, bool right = false);

/// U op U† for one CMULT. Fresh summation variables are named after `hint`.
/// Throws InputError for a Z factor on the target.
ConditionalMonomial conjugate_by_cmult(const ConditionalMonomial& op, const std::string& control,
                                       const std::string& target, Sense sense, const FiniteGroup& G,
                                       const std::string& hint = "h");

/// Conjugate each stabilizer through the whole schedule. With `enforce_support`, throws
/// BudgetError if a result reaches beyond the site's distance-2 neighbourhood.
StabilizerSet propagate(const ClusterGraph& g, const GateSchedule& sched, const StabilizerSet& init,
                        const FiniteGroup& G, bool enforce_support = true);

/// Σ T_{(Π g)(Π h)⁻¹}(v) Π T_h(n_u) Π T_g(n_w): outward-edge values g and inward-edge
/// values h, each product taken with later edges of #_v on the left.
ConditionalMonomial closed_form_even(const ClusterGraph& g, const FiniteGroup& G, const std::string& v);

/// X_g(w) times, for each even neighbour v, X_{W g W⁻¹} on v (left if the edge leaves v,
/// right if it enters v), where W is the product of the values of later same-direction
/// edges of #_v, conditioned by T factors on their odd ends.
ConditionalMonomial closed_form_odd(const ClusterGraph& g, const FiniteGroup& G, const std::string& w, Element el);

StabilizerSet closed_form_stabilizers(const ClusterGraph& g, const FiniteGroup& G);

/// Z2 only: X on each odd site times X on its neighbours, and Z on each even site times Z
/// on its neighbours (the qubit cluster state with Hadamards on the even sublattice).
StabilizerSet qubit_css_stabilizers(const ClusterGraph& g, const GroupSpec& z2);

struct VerifyResult {
  double max_residual = 0;
  std::string worst;
  std::string first_failure;  // empty when everything passed
  std::vector<std::pair<std::string, double>> residuals;
  bool pass = true;
};

/// ‖Sψ − ψ‖ / ‖ψ‖ for each stabilizer.
VerifyResult verify(const StabilizerSet& set, const SparseState& state, double tol = 1e-10);

/// max ‖aψ − bψ‖ over the full basis of the joint support when it has at most 4096
/// states, otherwise over `samples` random sparse states of `reg`. When `anchor` is given,
/// half of each random state's keys are drawn from it, so that operators containing
/// projectors are exercised on keys they do not annihilate.
double action_distance(const ConditionalMonomial& a, const ConditionalMonomial& b, const Register& reg,
                       std::mt19937_64& rng, std::size_t samples = 50, const SparseState* anchor = nullptr);

struct CrossCheck {
  double max_deviation = 0;           // propagated vs closed form, in action
  double max_propagated_residual = 0; // on the built state
  double max_closed_residual = 0;
  std::size_t stabilizers = 0;
  std::string first_failure;
  bool pass = true;
};

CrossCheck cross_check(const ClusterGraph& g, const GroupSpec& spec, const SparseState& state, std::mt19937_64& rng,
                       double tol = 1e-10, std::size_t samples = 50);

}  // namespace gcs
