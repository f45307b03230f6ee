#include <doctest.h>

#include <random>

#include "gcs/builder.hpp"
#include "gcs/catalog.hpp"
#include "gcs/measurement.hpp"
#include "oracle.hpp"

using namespace gcs;

TEST_CASE("Born probabilities sum to one in both bases") {
  std::mt19937_64 rng(41);
  for (const char* name : {"Z2", "Z3", "S3", "D4", "Q8"}) {
    CAPTURE(name);
    const GroupSpec spec = builtin_group(name);
    for (int t = 0; t < 5; ++t) {
      const ClusterGraph g = oracle::random_graph(rng, 3, 3);
      const SparseState psi = build_cluster_state(g, spec);
      for (const auto& site : g.vertex_ids())
        for (Basis b : {Basis::Group, Basis::Representation}) {
          double sum = 0;
          for (const auto& o : outcome_distribution(psi, site, b)) {
            CHECK(o.probability >= 0.0);
            sum += o.probability;
          }
          CHECK(std::abs(sum - 1.0) < 1e-12);
        }
    }
  }
}

TEST_CASE("group-basis probabilities match the map oracle") {
  std::mt19937_64 rng(43);
  const GroupSpec spec = builtin_group("S3");
  const Register reg(spec, {"a", "b", "c"});
  const auto m = oracle::random_map_state(rng, 3, 6, 40);
  const auto dist = outcome_distribution(oracle::from_map(reg, m), "b", Basis::Group);
  REQUIRE(dist.size() == 6);
  for (Element g = 0; g < 6; ++g) CHECK(std::abs(dist[g].probability - std::pow(oracle::norm(oracle::t_proj(m, 1, g)), 2)) < 1e-13);
}

TEST_CASE("rep-basis probabilities match projections onto rep basis states") {
  std::mt19937_64 rng(47);
  const GroupSpec spec = builtin_group("S3");
  const Register reg(spec, {"a"});
  const SparseState s = random_dense_state(reg, rng);
  const auto dist = outcome_distribution(s, "a", Basis::Representation);
  const auto labels = rep_labels(spec);
  REQUIRE(dist.size() == labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const SparseState phi = rep_basis_state(reg, "a", labels[k].irrep, labels[k].i, labels[k].j);
    CHECK(std::abs(dist[k].probability - std::norm(inner_product(phi, s))) < 1e-13);
  }
}

TEST_CASE("group-basis measurement on the two three-site lines") {
  for (const char* name : {"Z3", "S3", "D4", "Q8"}) {
    CAPTURE(name);
    const GroupSpec spec = builtin_group(name);
    for (Element g = 0; g < spec.G().order(); ++g) {
      const auto [o1, post1] = measure_forced(build_cluster_state(eoe_line(), spec), "s1", MeasurementOutcome::group(g));
      CHECK(analyze_entanglement(post1, {"s0"}).rank == 1);
      const auto [o2, post2] = measure_forced(build_cluster_state(oeo_line(), spec), "s1", MeasurementOutcome::group(g));
      const auto e = analyze_entanglement(post2, {"s0"});
      CHECK(e.rank == spec.G().order());
      CHECK(e.maximal);
      CHECK(std::abs(e.entropy - std::log2(double(spec.G().order()))) < 1e-10);
    }
  }
}

TEST_CASE("rep-basis measurement with the two-dimensional S3 irrep") {
  const GroupSpec spec = builtin_group("S3");
  const std::size_t std2 = *spec.reps().find("std");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const auto out = MeasurementOutcome::rep(std2, i, j);
      const auto [o1, oeo] = measure_forced(build_cluster_state(oeo_line(), spec), "s1", out);
      const auto e = analyze_entanglement(oeo, {"s0"});
      CHECK(e.rank == 2);
      CHECK(std::abs(e.entropy - 1.0) < 1e-8);
      const auto [o2, eoe] = measure_forced(build_cluster_state(eoe_line(), spec), "s1", out);
      const auto f = analyze_entanglement(eoe, {"s0"});
      CHECK(f.spread > 1e-3);
    }
}

TEST_CASE("abelian rep-basis outcomes on eoe are maximally entangled") {
  for (const char* name : {"Z2", "Z3", "Z4"}) {
    const GroupSpec spec = builtin_group(name);
    for (std::size_t k = 0; k < spec.reps().size(); ++k) {
      const auto [o, post] =
          measure_forced(build_cluster_state(eoe_line(), spec), "s1", MeasurementOutcome::rep(k, 0, 0));
      const auto e = analyze_entanglement(post, {"s0"});
      CHECK(e.maximal);
      CHECK(e.rank == spec.G().order());
      CHECK(e.spread < 1e-12);
    }
  }
}

TEST_CASE("sampling is reproducible and follows the distribution") {
  const GroupSpec spec = builtin_group("Z3");
  const SparseState psi = build_cluster_state(oeo_line(), spec);
  RandomSource a(99), b(99);
  for (int t = 0; t < 20; ++t) {
    const auto [oa, pa] = measure(psi, "s1", Basis::Group, a);
    const auto [ob, pb] = measure(psi, "s1", Basis::Group, b);
    CHECK(oa.element == ob.element);
    CHECK(distance(pa, pb) == 0.0);
  }
  RandomSource src(7);
  std::vector<int> counts(3, 0);
  for (int t = 0; t < 3000; ++t) ++counts[measure(psi, "s1", Basis::Group, src).first.element];
  for (int c : counts) CHECK(std::abs(c - 1000) < 150);
}

TEST_CASE("impossible and malformed outcomes") {
  const GroupSpec spec = builtin_group("S3");
  const Register reg(spec, {"a", "b"});
  const SparseState s = group_basis_state(reg, {1, 2});
  CHECK_THROWS_AS(measure_forced(s, "a", MeasurementOutcome::group(0)), InputError);
  CHECK_THROWS_AS(parse_outcome("nope", Basis::Group, spec), InputError);
  CHECK(parse_outcome("std(1,0)", Basis::Representation, spec).i == 1);
  CHECK(parse_outcome("r2", Basis::Group, spec).label(spec) == "r2");
  CHECK_THROWS_AS(outcome_distribution(s, "zz", Basis::Group), InputError);
}

TEST_CASE("Schmidt data on known states") {
  const GroupSpec spec = builtin_group("Z4");
  const Register reg(spec, {"a", "b"});
  const SparseState prod = group_basis_state(reg, {1, 3});
  CHECK(analyze_entanglement(prod, {"a"}).rank == 1);
  CHECK(analyze_entanglement(prod, {"a"}).entropy == doctest::Approx(0.0));
  SparseState bell = add(group_basis_state(reg, {0, 0}), group_basis_state(reg, {2, 1})).normalized();
  const auto e = analyze_entanglement(bell, {"b"});
  CHECK(e.rank == 2);
  CHECK(e.entropy == doctest::Approx(1.0));
  CHECK(e.maximal);
}
