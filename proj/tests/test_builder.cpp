#include <doctest.h>

#include <random>

#include "gcs/builder.hpp"
#include "gcs/catalog.hpp"
#include "gcs/corpus.hpp"
#include "oracle.hpp"

using namespace gcs;

TEST_CASE("three-site closed forms") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const GroupSpec spec = builtin_group(name);
    const auto& G = spec.G();
    const double n = double(G.order());

    oracle::MapState eoe;
    for (Element g = 0; g < G.order(); ++g) eoe[{g, g, g}] = 1.0 / std::sqrt(n);
    CHECK(oracle::max_diff(build_cluster_state(eoe_line(), spec), eoe) < 1e-14);

    oracle::MapState oeo;
    for (Element g = 0; g < G.order(); ++g)
      for (Element h = 0; h < G.order(); ++h) oeo[{g, G.mul(g, G.inv(h)), h}] = 1.0 / n;
    CHECK(oracle::max_diff(build_cluster_state(oeo_line(), spec), oeo) < 1e-14);
  }
}

TEST_CASE("builder agrees with direct enumeration on random graphs") {
  std::mt19937_64 rng(29);
  for (const char* name : {"Z2", "Z3", "S3", "D4", "Q8"}) {
    CAPTURE(name);
    const GroupSpec spec = builtin_group(name);
    for (int t = 0; t < 15; ++t) {
      const ClusterGraph g = oracle::random_graph(rng, 3, 3);
      const SparseState psi = build_cluster_state(g, spec);
      CHECK(oracle::max_diff(psi, oracle::cluster_state(g, spec.G())) < 1e-13);
      const SparseState slow =
          apply_schedule(trivial_irrep_state(cluster_register(g, spec), g.odd_ids()), schedule(g));
      CHECK(distance(psi, slow) < 1e-13);
    }
  }
}

TEST_CASE("ordering matters only for nonabelian groups") {
  const ClusterGraph a = vee_graph(false), b = vee_graph(true);
  const GroupSpec z4 = builtin_group("Z4"), s3 = builtin_group("S3");
  CHECK(std::abs(1.0 - fidelity(build_cluster_state(a, z4), build_cluster_state(b, z4))) < 1e-14);
  const double f = fidelity(build_cluster_state(a, s3), build_cluster_state(b, s3));
  CHECK(f < 1.0 - 1e-6);
}

TEST_CASE("schedule senses and depth") {
  const ClusterGraph g = oeo_line();
  const auto s = schedule(g);
  REQUIRE(s.size() == 2);
  for (const auto& gate : s) {
    const auto& e = g.edge(gate.edge);
    CHECK((gate.sense == Sense::Left) == (e.tail == gate.target));
  }
  CHECK(depth(s) == 2);
  CHECK(depth(schedule(ring_graph(8, LineOrientation::Leftward))) == 2);
}

TEST_CASE("Z2 cluster state equals Hadamard on even sites of the CPHASE state") {
  std::mt19937_64 rng(31);
  const GroupSpec z2 = builtin_group("Z2");
  for (int t = 0; t < 20; ++t) {
    const ClusterGraph g = oracle::random_graph(rng, 5, 4);
    const auto ref = build_qubit_reference(g, z2);
    CHECK(std::abs(1.0 - fidelity(build_cluster_state(g, z2), ref.css)) < 1e-12);
  }
  CHECK_THROWS_AS(build_qubit_reference(eoe_line(), builtin_group("Z3")), InputError);
}

TEST_CASE("budget and invalid input") {
  const ClusterGraph big = line_graph(51, Parity::Odd, LineOrientation::Leftward);
  CHECK_THROWS_AS(build_cluster_state(big, builtin_group("Z2")), BudgetError);
  CHECK_THROWS_AS(build_cluster_state(mixed_graph(), builtin_group("S3"), 100), BudgetError);
  ClusterGraph bad = eoe_line();
  bad.orderings.clear();
  CHECK_THROWS_AS(build_cluster_state(bad, builtin_group("Z2")), InputError);
}
