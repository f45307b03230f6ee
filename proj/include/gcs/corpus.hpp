#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcs/graph.hpp"

namespace gcs {

struct CorpusGraph {
  std::string name;
  std::string family;  // line, ring, mixed, random, qd, witness
  ClusterGraph graph;
};

struct CorpusInstance {
  const CorpusGraph* graph = nullptr;
  std::string group;
};

inline constexpr std::uint64_t kCorpusBudget = 100'000;
inline const std::vector<std::string> kCorpusGroups = {"Z2", "Z3", "Z4", "S3", "D4"};

/// Six-vertex graph with a mixed-direction degree-3 even vertex (e2) and two degree-2 even
/// vertices whose orderings disagree with edge-list order.
ClusterGraph mixed_graph();

/// Two odd sites feeding one even site through inward edges, in the given #_v order.
/// For non-abelian groups the two orderings give different states.
ClusterGraph vee_graph(bool swapped);

/// Deterministic list: lines (3–8 sites), rings (4, 6, 8), the mixed-direction graph, the ordering
/// witness, seeded random bipartite graphs (≤ 8 odd sites) and QD maps (2×2, 2×4).
std::vector<CorpusGraph> corpus_graphs(std::uint64_t seed);

/// Every (graph, group) pair whose cluster state has at most `budget` terms.
std::vector<CorpusInstance> corpus_instances(const std::vector<CorpusGraph>& graphs,
                                             const std::vector<std::string>& groups = kCorpusGroups,
                                             std::uint64_t budget = kCorpusBudget);

/// |G|^#odd, saturating.
std::uint64_t cluster_terms(const ClusterGraph& g, std::size_t group_order);

}  // namespace gcs
