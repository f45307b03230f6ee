#include "gcs/corpus.hpp"

#include <algorithm>
#include <random>

#include "gcs/catalog.hpp"
#include "gcs/quantum_double.hpp"

namespace gcs {

ClusterGraph mixed_graph() {
  ClusterGraph g;
  for (const char* o : {"o1", "o2", "o3"}) g.vertices.push_back({o, Parity::Odd});
  for (const char* e : {"e1", "e2", "e3"}) g.vertices.push_back({e, Parity::Even});
  g.edges = {{"a", "o1", "e1"}, {"b", "e1", "o2"}, {"c", "e2", "o1"}, {"d", "o2", "e2"},
             {"f", "e2", "o3"}, {"k", "e3", "o2"}, {"m", "o3", "e3"}};
  g.orderings["e1"] = {"b", "a"};
  g.orderings["e2"] = {"c", "d", "f"};
  g.orderings["e3"] = {"m", "k"};
  return g;
}

ClusterGraph vee_graph(bool swapped) {
  ClusterGraph g;
  g.vertices = {{"a", Parity::Odd}, {"v", Parity::Even}, {"b", Parity::Odd}};
  g.edges = {{"x", "a", "v"}, {"y", "b", "v"}};
  g.orderings["v"] = swapped ? std::vector<std::string>{"y", "x"} : std::vector<std::string>{"x", "y"};
  return g;
}

namespace {

// Uniform integer in [0, n) from raw engine output; avoids library-specific distributions
// so the corpus is identical across standard libraries.
std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::size_t(rng() % n); }

ClusterGraph random_bipartite(std::mt19937_64& rng) {
  const std::size_t n_odd = 2 + pick(rng, 4);   // 2..5
  const std::size_t n_even = 1 + pick(rng, 4);  // 1..4
  ClusterGraph g;
  for (std::size_t i = 0; i < n_odd; ++i) g.vertices.push_back({"o" + std::to_string(i), Parity::Odd});
  for (std::size_t i = 0; i < n_even; ++i) g.vertices.push_back({"e" + std::to_string(i), Parity::Even});
  std::size_t eid = 0;
  for (std::size_t v = 0; v < n_even; ++v) {
    const std::string ev = "e" + std::to_string(v);
    std::vector<std::string> inc;
    for (std::size_t w = 0; w < n_odd; ++w) {
      // Every even site gets at least one edge.
      if (pick(rng, 2) == 0 && !(w + 1 == n_odd && inc.empty())) continue;
      const std::string od = "o" + std::to_string(w), id = "l" + std::to_string(eid++);
      if (pick(rng, 2))
        g.edges.push_back({id, od, ev});
      else
        g.edges.push_back({id, ev, od});
      inc.push_back(id);
    }
    for (std::size_t k = inc.size(); k > 1; --k) std::swap(inc[k - 1], inc[pick(rng, k)]);
    g.orderings[ev] = inc;
  }
  return g;
}

}  // namespace

std::vector<CorpusGraph> corpus_graphs(std::uint64_t seed) {
  std::vector<CorpusGraph> out;
  auto add = [&](std::string name, std::string family, ClusterGraph g) {
    out.push_back({std::move(name), std::move(family), std::move(g)});
  };
  add("eoe", "line", eoe_line());
  add("oeo", "line", oeo_line());
  for (std::size_t n = 3; n <= 8; ++n) {
    const std::string s = std::to_string(n);
    add("line" + s + "-odd-left", "line", line_graph(n, Parity::Odd, LineOrientation::Leftward));
    add("line" + s + "-even-right", "line", line_graph(n, Parity::Even, LineOrientation::Rightward));
  }
  for (std::size_t n : {4, 6, 8}) {
    add("ring" + std::to_string(n) + "-left", "ring", ring_graph(n, LineOrientation::Leftward));
    add("ring" + std::to_string(n) + "-o2e", "ring", ring_graph(n, LineOrientation::OddToEven));
  }
  add("mixed", "mixed", mixed_graph());
  add("mixed-normal-form", "mixed", canonical_ordering_normal_form(mixed_graph()));
  add("vee", "witness", vee_graph(false));
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 8; ++k) add("random" + std::to_string(k), "random", random_bipartite(rng));
  add("qd2x2", "qd", qd_cluster_graph(build_qd_lattice(2, 2)).graph);
  add("qd2x4", "qd", qd_cluster_graph(build_qd_lattice(2, 4)).graph);
  return out;
}

std::uint64_t cluster_terms(const ClusterGraph& g, std::size_t group_order) {
  std::uint64_t t = 1;
  for (std::size_t k = 0; k < g.odd_ids().size(); ++k) {
    if (t > UINT64_MAX / group_order) return UINT64_MAX;
    t *= group_order;
  }
  return t;
}

std::vector<CorpusInstance> corpus_instances(const std::vector<CorpusGraph>& graphs,
                                             const std::vector<std::string>& groups, std::uint64_t budget) {
  std::vector<CorpusInstance> out;
  for (const auto& g : graphs)
    for (const auto& name : groups)
      if (cluster_terms(g.graph, builtin_group(name).G().order()) <= budget) out.push_back({&g, name});
  return out;
}

}  // namespace gcs
