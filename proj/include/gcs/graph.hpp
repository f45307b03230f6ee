#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gcs/group.hpp"

namespace gcs {

enum class Parity { Odd, Even };

struct Vertex {
  std::string id;
  Parity parity = Parity::Odd;
};

/// Directed edge tail -> head.
struct Edge {
  std::string id;
  std::string tail;
  std::string head;
};

/// Directed bipartite graph with a total order #_v of the incident edges at each even vertex.
/// Orderings are stored per edge id so parallel edges stay unambiguous.
struct ClusterGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::map<std::string, std::vector<std::string>> orderings;

  const Vertex& vertex(std::string_view id) const;
  const Edge& edge(std::string_view id) const;
  bool has_vertex(std::string_view id) const;
  Parity parity(std::string_view id) const { return vertex(id).parity; }
  std::vector<std::string> vertex_ids() const;
  std::vector<std::string> odd_ids() const;
  std::vector<std::string> even_ids() const;
  /// Edge ids incident to v, in edge-list order.
  std::vector<std::string> incident(std::string_view v) const;
  /// #_v for an even vertex.
  const std::vector<std::string>& ordering(std::string_view v) const;
  std::string other_end(const Edge& e, std::string_view v) const { return e.tail == v ? e.head : e.tail; }
  /// Edge leaves v (v is the tail).
  static bool outward(const Edge& e, std::string_view v) { return e.tail == v; }
  /// Vertices at graph distance 1 and 2 from v.
  std::vector<std::string> neighbours(std::string_view v) const;
  std::vector<std::string> ball2(std::string_view v) const;
  bool has_parallel_edges() const;
};

/// Lists every bipartiteness, endpoint, id and ordering violation.
ValidationReport validate_graph(const ClusterGraph& g);

/// Reorders each #_v so outward edges precede inward edges, keeping relative order within each class.
ClusterGraph canonical_ordering_normal_form(const ClusterGraph& g);

/// Edge directions for paths and rings built on vertices s0, s1, ...; edge l_i joins s_i and s_{i+1}.
enum class LineOrientation {
  Leftward,   // s_{i+1} -> s_i
  Rightward,  // s_i -> s_{i+1}
  EvenToOdd,
  OddToEven,
};

/// Path s0..s_{n-1} with alternating parity starting from `first`. n ≥ 2.
ClusterGraph line_graph(std::size_t n, Parity first, LineOrientation orientation);
/// Ring s0..s_{n-1} (s0 odd) with edge l_{n-1} joining s_{n-1} and s0. n even, ≥ 2.
ClusterGraph ring_graph(std::size_t n, LineOrientation orientation);

/// Three-site even-odd-even line whose state is Σ_g |g,g,g>.
ClusterGraph eoe_line();
/// Three-site odd-even-odd line whose state is Σ_{g,h} |g,gh⁻¹,h>.
ClusterGraph oeo_line();

/// JSON format: {vertices: [{id, parity}], edges: [{id, tail, head}], orderings: {even id: [edge ids]}}.
ClusterGraph parse_graph_json(std::string_view text);
ClusterGraph load_graph_file(const std::string& path);
std::string graph_to_json(const ClusterGraph& g);

}  // namespace gcs
