#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcs/graph.hpp"
#include "gcs/state.hpp"

namespace gcs {

struct Gate {
  std::string control;  // odd vertex
  std::string target;   // even vertex
  Sense sense;          // Left iff the edge points even -> odd
  std::string edge;
};

using GateSchedule = std::vector<Gate>;

/// Default cap on the number of sparse keys a cluster state may hold.
inline constexpr std::uint64_t kBuildBudget = std::uint64_t(1) << 24;

/// One gate per edge: even vertices in vertex-list order, gates at each in #_v order.
GateSchedule schedule(const ClusterGraph& g);

/// Number of layers when gates sharing a target must be sequential (shared controls commute).
std::size_t depth(const GateSchedule& s);

/// Register over all graph vertices in vertex-list order.
Register cluster_register(const ClusterGraph& g, const GroupSpec& spec);

/// Odd sites in |I>, even sites in |e>, then every CMULT in schedule order. Normalised.
/// Throws BudgetError when |G|^#odd exceeds `budget`.
SparseState build_cluster_state(const ClusterGraph& g, const GroupSpec& spec, std::uint64_t budget = kBuildBudget);

/// Gate-by-gate application of a schedule through apply_cmult (slow path, used as a cross-check).
SparseState apply_schedule(const SparseState& s, const GateSchedule& sched);

struct QubitReference {
  SparseState standard;  // CPHASE on every edge of |+>^n
  SparseState css;       // Hadamard on every even site of `standard`
};

/// Z2 only; throws InputError for any other group.
QubitReference build_qubit_reference(const ClusterGraph& g, const GroupSpec& spec);

}  // namespace gcs
