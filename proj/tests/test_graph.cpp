#include <doctest.h>

#include <random>

#include "gcs/corpus.hpp"
#include "gcs/graph.hpp"
#include "oracle.hpp"

using namespace gcs;

TEST_CASE("line and ring shapes") {
  const ClusterGraph l = line_graph(5, Parity::Odd, LineOrientation::Leftward);
  CHECK(validate_graph(l).ok());
  CHECK(l.vertices.size() == 5);
  CHECK(l.edges.size() == 4);
  CHECK(l.odd_ids() == std::vector<std::string>{"s0", "s2", "s4"});
  for (const auto& e : l.edges) CHECK(e.tail > e.head);

  const ClusterGraph r = ring_graph(6, LineOrientation::Leftward);
  CHECK(validate_graph(r).ok());
  CHECK(r.edges.size() == 6);
  for (const auto& v : r.vertex_ids()) CHECK(r.neighbours(v).size() == 2);
  CHECK_THROWS(ring_graph(5, LineOrientation::Leftward));
}

TEST_CASE("validation reports structural problems") {
  ClusterGraph g = eoe_line();
  g.edges.push_back({"bad", "s0", "s2"});  // even-even
  CHECK_FALSE(validate_graph(g).ok());

  ClusterGraph h = eoe_line();
  h.orderings.erase("s0");
  CHECK_FALSE(validate_graph(h).ok());

  ClusterGraph k = eoe_line();
  k.edges.push_back({k.edges[0].id, k.edges[0].tail, k.edges[0].head});  // duplicate id
  CHECK_FALSE(validate_graph(k).ok());

  ClusterGraph m = eoe_line();
  m.edges[0].head = "nowhere";
  CHECK_FALSE(validate_graph(m).ok());
}

TEST_CASE("normal form puts outward edges first and keeps relative order") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const ClusterGraph g = oracle::random_graph(rng, 4, 3);
    const ClusterGraph n = canonical_ordering_normal_form(g);
    CHECK(validate_graph(n).ok());
    for (const auto& v : g.even_ids()) {
      std::vector<std::string> out, in;
      for (const auto& e : g.ordering(v)) (g.edge(e).tail == v ? out : in).push_back(e);
      out.insert(out.end(), in.begin(), in.end());
      CHECK(n.ordering(v) == out);
    }
    CHECK(canonical_ordering_normal_form(n).orderings == n.orderings);
  }
}

TEST_CASE("graph JSON round trip") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const ClusterGraph g = oracle::random_graph(rng, 5, 4);
    const std::string text = graph_to_json(g);
    const ClusterGraph back = parse_graph_json(text);
    CHECK(graph_to_json(back) == text);
    CHECK(back.orderings == g.orderings);
  }
  CHECK_THROWS_AS(parse_graph_json("{\"vertices\":[{\"id\":\"a\",\"parity\":\"blue\"}],\"edges\":[]}"), InputError);
  CHECK_THROWS_AS(parse_graph_json("not json"), InputError);
}

TEST_CASE("neighbourhoods") {
  const ClusterGraph g = mixed_graph();
  CHECK(validate_graph(g).ok());
  auto n = g.neighbours("o2");
  std::sort(n.begin(), n.end());
  CHECK(n == std::vector<std::string>{"e1", "e2", "e3"});
  const auto b = g.ball2("o1");
  CHECK(std::find(b.begin(), b.end(), "o2") != b.end());
  CHECK(std::find(b.begin(), b.end(), "o3") != b.end());
}

TEST_CASE("corpus is deterministic and valid") {
  const auto a = corpus_graphs(5), b = corpus_graphs(5);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CAPTURE(a[k].name);
    CHECK(validate_graph(a[k].graph).ok());
    CHECK(graph_to_json(a[k].graph) == graph_to_json(b[k].graph));
  }
  const auto c = corpus_graphs(6);
  bool differs = false;
  for (std::size_t k = 0; k < a.size(); ++k) differs |= graph_to_json(a[k].graph) != graph_to_json(c[k].graph);
  CHECK(differs);
}
