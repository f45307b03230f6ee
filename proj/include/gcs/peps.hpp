#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcs/graph.hpp"
#include "gcs/state.hpp"

namespace gcs {

inline constexpr std::uint64_t kPepsBudget = 100'000'000;

/// Tensor network with one bond of dimension |G| per edge. Odd sites carry the copy tensor
/// (all legs equal to the physical value); even sites carry the map whose physical output is
/// (Π outward legs)(Π inward legs)⁻¹, each product with later edges of #_v on the left.
struct PepsNetwork {
  ClusterGraph graph;
  GroupSpec spec;
  std::size_t bond_dim = 0;
  std::vector<std::string> bonds;  // edge ids, enumeration order
};

PepsNetwork build_peps(const ClusterGraph& g, const GroupSpec& spec);

/// Physical value of the odd tensor for the given legs (in incident() order), or nullopt
/// when the legs disagree (zero entry).
std::optional<Element> peps_odd_output(const PepsNetwork& net, const std::string& w, const std::vector<Element>& legs);

/// Physical value of the even tensor for leg values listed in #_v order.
Element peps_even_output(const PepsNetwork& net, const std::string& v, const std::vector<Element>& legs);

struct ContractResult {
  SparseState state;
  std::uint64_t assignments = 0;  // bond (and isolated odd site) configurations visited
};

/// Exact contraction by enumerating every bond configuration. Throws BudgetError when
/// |G|^(#bonds + #isolated odd sites) exceeds `budget`.
ContractResult contract(const PepsNetwork& net, std::uint64_t budget = kPepsBudget);

struct PepsComparison {
  double fidelity = 0;
  std::uint64_t assignments = 0;
  std::size_t circuit_terms = 0, peps_terms = 0;
};

PepsComparison compare_to_circuit(const ClusterGraph& g, const GroupSpec& spec, std::uint64_t budget = kPepsBudget);

}  // namespace gcs
