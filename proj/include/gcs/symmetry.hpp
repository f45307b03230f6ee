#pragma once

#include <random>
#include <string>
#include <vector>

#include "gcs/graph.hpp"
#include "gcs/state.hpp"

namespace gcs {

/// Ring of length n with the repeating orientation of the infinite 1D chain:
/// every edge points from s_{i+1} to s_i, s0 odd.
ClusterGraph symmetry_ring(std::size_t n);

/// X→_g on every odd site. The state must live on a ring register (vertices in ring order).
SparseState apply_u_odd(const SparseState& s, const ClusterGraph& ring, Element g);

/// Diagonal: amplitude × (1/d) tr Π_k Γ(x_k) over even sites k in ring order.
SparseState apply_u_even(const SparseState& s, const ClusterGraph& ring, const Representation& rep);

struct NamedCheck {
  std::string label;
  double residual = 0;
  double tol = 0;
  bool pass = true;
  bool informational = false;  // reported, not required
};

struct SymmetryReport {
  std::vector<NamedCheck> checks;
  bool pass = true;
  std::string first_failure;
};

/// Invariance, composition, tensor-product, dimension-weighted direct-sum and commutation
/// checks on the ring cluster state of length n, in action on `samples` random states.
SymmetryReport verify_symmetry_algebra(const GroupSpec& spec, std::size_t n, std::mt19937_64& rng,
                                       double tol = 1e-10, std::size_t samples = 50);

}  // namespace gcs
