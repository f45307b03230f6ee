#include <doctest.h>

#include <random>

#include "gcs/catalog.hpp"
#include "gcs/stabilizer.hpp"
#include "oracle.hpp"

using namespace gcs;

namespace {

Register reg2(const GroupSpec& spec) { return Register(spec, {"c", "t"}); }

SparseState cmult_power(SparseState s, Sense sense, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) s = apply_cmult(s, "c", "t", sense);
  return s;
}

}  // namespace

TEST_CASE("summed monomial matches the map oracle") {
  std::mt19937_64 rng(2);
  const GroupSpec spec = builtin_group("S3");
  const auto& G = spec.G();
  ConditionalMonomial op;
  const int h = op.add_var("h");
  op.site("c").push_back(Factor::t(Word::variable(h)));
  op.site("t").push_back(Factor::x_left(Word::variable(h)));
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = oracle::random_map_state(rng, 2, 6, 10);
    oracle::MapState expect;
    for (Element g = 0; g < 6; ++g)
      for (const auto& [c, a] : oracle::x_left(oracle::t_proj(m, 0, g), 1, g, G)) expect[c] += a;
    CHECK(oracle::max_diff(apply(op, oracle::from_map(reg2(spec), m)), expect) < 1e-14);
  }
}

TEST_CASE("product applies right factor first") {
  std::mt19937_64 rng(6);
  const GroupSpec spec = builtin_group("D4");
  const auto a = single_factor("t", Factor::x_left(Word::constant(1)));
  const auto b = single_factor("t", Factor::t(Word::constant(4)));
  const SparseState s = random_dense_state(reg2(spec), rng);
  CHECK(distance(apply(product(a, b), s), apply(a, apply(b, s))) < 1e-14);
}

TEST_CASE("CMULT conjugation agrees with explicit U op U^dagger") {
  std::mt19937_64 rng(9);
  for (const char* name : {"Z3", "S3", "Q8"}) {
    CAPTURE(name);
    const GroupSpec spec = builtin_group(name);
    const std::size_t n = spec.G().order();
    const auto& rep = spec.reps()[spec.reps().size() - 1];
    std::vector<ConditionalMonomial> ops;
    for (Element g = 1; g < n; ++g) {
      ops.push_back(single_factor("c", Factor::x_left(Word::constant(g))));
      ops.push_back(single_factor("c", Factor::x_right(Word::constant(g))));
      ops.push_back(single_factor("c", Factor::t(Word::constant(g))));
      ops.push_back(single_factor("t", Factor::x_left(Word::constant(g))));
      ops.push_back(single_factor("t", Factor::x_right(Word::constant(g))));
      ops.push_back(single_factor("t", Factor::t(Word::constant(g))));
    }
    ops.push_back(single_factor("c", Factor::z(std::shared_ptr<const Representation>(spec.irreps, &rep), 0, 0)));
    for (Sense sense : {Sense::Left, Sense::Right}) {
      const SparseState s = random_dense_state(reg2(spec), rng);
      for (const auto& op : ops) {
        const auto conj = conjugate_by_cmult(op, "c", "t", sense, spec.G());
        const SparseState expect = apply_cmult(apply(op, cmult_power(s, sense, n - 1)), "c", "t", sense);
        CHECK(distance(apply(conj, s), expect) < 1e-12);
      }
    }
    const auto z = single_factor("t", Factor::z(std::shared_ptr<const Representation>(spec.irreps, &rep), 0, 0));
    CHECK_THROWS_AS(conjugate_by_cmult(z, "c", "t", Sense::Left, spec.G()), InputError);
  }
}

TEST_CASE("closed forms fix the enumerated cluster state") {
  std::mt19937_64 rng(15);
  for (const char* name : {"Z2", "Z4", "S3", "D4", "Q8"}) {
    CAPTURE(name);
    const GroupSpec spec = builtin_group(name);
    for (int t = 0; t < 8; ++t) {
      const ClusterGraph g = oracle::random_graph(rng, 3, 3);
      const SparseState psi = oracle::from_map(cluster_register(g, spec), oracle::cluster_state(g, spec.G()));
      const auto set = closed_form_stabilizers(g, spec.G());
      CHECK(set.size() == g.even_ids().size() + spec.G().order() * g.odd_ids().size());
      const auto v = verify(set, psi);
      CHECK_MESSAGE(v.max_residual < 1e-12, v.worst);
    }
  }
}

TEST_CASE("propagated stabilizers equal closed forms in action") {
  std::mt19937_64 rng(19);
  for (const char* name : {"Z3", "S3", "D4"}) {
    CAPTURE(name);
    const GroupSpec spec = builtin_group(name);
    for (int t = 0; t < 6; ++t) {
      const ClusterGraph g = oracle::random_graph(rng, 3, 3);
      const SparseState psi = build_cluster_state(g, spec);
      const CrossCheck cc = cross_check(g, spec, psi, rng);
      CHECK_MESSAGE(cc.pass, cc.first_failure);
      CHECK(cc.max_deviation < 1e-10);
    }
  }
}

TEST_CASE("right-multiplication odd stabilizers also propagate to stabilizers") {
  std::mt19937_64 rng(27);
  const GroupSpec spec = builtin_group("S3");
  for (int t = 0; t < 6; ++t) {
    const ClusterGraph g = oracle::random_graph(rng, 3, 3);
    const auto set = propagate(g, schedule(g), initial_stabilizers(g, spec.G(), true), spec.G());
    CHECK(verify(set, build_cluster_state(g, spec)).pass);
  }
}

TEST_CASE("a non-stabilizer is detected") {
  const GroupSpec spec = builtin_group("S3");
  const ClusterGraph g = oeo_line();
  StabilizerSet bogus{{"X[s0]", "s0", Element(1), single_factor("s0", Factor::x_left(Word::constant(1)))}};
  const auto v = verify(bogus, build_cluster_state(g, spec));
  CHECK_FALSE(v.pass);
  CHECK(v.max_residual > 0.1);
}

TEST_CASE("qubit CSS stabilizers") {
  std::mt19937_64 rng(33);
  const GroupSpec z2 = builtin_group("Z2");
  for (int t = 0; t < 10; ++t) {
    const ClusterGraph g = oracle::random_graph(rng, 4, 4);
    const auto set = qubit_css_stabilizers(g, z2);
    CHECK(set.size() == g.vertices.size());
    CHECK(verify(set, build_cluster_state(g, z2)).pass);
  }
}
