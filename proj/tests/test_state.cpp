#include <doctest.h>

#include <random>

#include "gcs/catalog.hpp"
#include "gcs/measurement.hpp"
#include "gcs/state_io.hpp"
#include "oracle.hpp"

using namespace gcs;

namespace {

Register reg_n(const GroupSpec& spec, std::size_t n) {
  std::vector<std::string> sites;
  for (std::size_t i = 0; i < n; ++i) sites.push_back("q" + std::to_string(i));
  return Register(spec, sites);
}

}  // namespace

TEST_CASE("key packing round trip") {
  std::mt19937_64 rng(3);
  for (const auto& name : catalog_names()) {
    const Register reg = reg_n(builtin_group(name), 7);
    std::uniform_int_distribution<int> pick(0, int(reg.G().order()) - 1);
    for (int t = 0; t < 100; ++t) {
      std::vector<Element> v(7);
      for (auto& x : v) x = Element(pick(rng));
      const Key k = reg.make_key(v);
      CHECK(reg.unpack(k) == v);
      const Key d = reg.drop(k, 3);
      std::vector<Element> w = v;
      w.erase(w.begin() + 3);
      CHECK(reg.without(3).unpack(d) == w);
    }
  }
}

TEST_CASE("local operators and CMULT agree with the map oracle") {
  std::mt19937_64 rng(5);
  for (const char* name : {"Z3", "S3", "D4", "Q8"}) {
    CAPTURE(name);
    const GroupSpec spec = builtin_group(name);
    const auto& G = spec.G();
    const Register reg = reg_n(spec, 3);
    for (int t = 0; t < 20; ++t) {
      const auto m = oracle::random_map_state(rng, 3, G.order(), 12);
      const SparseState s = oracle::from_map(reg, m);
      const Element g = Element(rng() % G.order());
      CHECK(oracle::max_diff(apply_local(s, LocalOp::x_left("q1", g)), oracle::x_left(m, 1, g, G)) < 1e-14);
      CHECK(oracle::max_diff(apply_local(s, LocalOp::x_right("q2", g)), oracle::x_right(m, 2, g, G)) < 1e-14);
      CHECK(oracle::max_diff(apply_local(s, LocalOp::t("q0", g)), oracle::t_proj(m, 0, g)) < 1e-14);
      const std::size_t irrep = rng() % spec.reps().size();
      const auto& r = spec.reps()[irrep];
      const std::size_t i = rng() % r.dim(), j = rng() % r.dim();
      CHECK(oracle::max_diff(apply_local(s, LocalOp::z("q1", irrep, i, j)), oracle::z_rep(m, 1, r, i, j)) < 1e-14);
      for (Sense sense : {Sense::Left, Sense::Right})
        CHECK(oracle::max_diff(apply_cmult(s, "q0", "q2", sense), oracle::cmult(m, 0, 2, sense, G)) < 1e-14);
    }
  }
}

TEST_CASE("CMULT has order dividing |G|") {
  std::mt19937_64 rng(8);
  const GroupSpec spec = builtin_group("D4");
  const Register reg = reg_n(spec, 2);
  const SparseState s = random_dense_state(reg, rng);
  SparseState u = s;
  for (std::size_t k = 0; k < spec.G().order(); ++k) u = apply_cmult(u, "q0", "q1", Sense::Left);
  CHECK(distance(u, s) < 1e-13);
}

TEST_CASE("group/rep round trip on single sites") {
  std::mt19937_64 rng(13);
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const GroupSpec spec = builtin_group(name);
    const Register reg = reg_n(spec, 1);
    for (int t = 0; t < 20; ++t) {
      const SparseState s = random_dense_state(reg, rng);
      const SiteTable rep = change_basis(s, "q0", Basis::Representation);
      const SparseState back = from_site_table(change_basis(rep, Basis::Group));
      CHECK(std::abs(1.0 - fidelity(s, back)) < 1e-12);
      CHECK(std::abs(rep.coeffs.squaredNorm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("rep basis states are orthonormal") {
  const GroupSpec spec = builtin_group("S3");
  const Register reg = reg_n(spec, 1);
  std::vector<SparseState> basis;
  for (const auto& l : rep_labels(spec)) basis.push_back(rep_basis_state(reg, "q0", l.irrep, l.i, l.j));
  REQUIRE(basis.size() == 6);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      CHECK(std::abs(inner_product(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)) < 1e-12);
}

TEST_CASE("fidelity, distance and normalisation") {
  std::mt19937_64 rng(21);
  const Register reg = reg_n(builtin_group("Z4"), 3);
  const SparseState a = random_state(reg, rng, 10), b = random_state(reg, rng, 10);
  CHECK(std::abs(a.norm() - 1.0) < 1e-12);
  CHECK(std::abs(fidelity(a, a.scaled(cplx(0, 2))) - 1.0) < 1e-12);
  const double f = fidelity(a, b);
  CHECK(f >= 0.0);
  CHECK(f <= 1.0 + 1e-12);
  CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) < 1e-14);
  CHECK_THROWS_AS(fidelity(a, SparseState(reg)), std::domain_error);
  const Register other = reg_n(builtin_group("Z4"), 2);
  CHECK_THROWS_AS(inner_product(a, random_state(other, rng, 3)), InputError);
}

TEST_CASE("select, project and reorder") {
  const GroupSpec spec = builtin_group("Z3");
  const Register reg = reg_n(spec, 2);
  const SparseState s = group_basis_state(reg, {1, 2});
  const SparseState sel = select_site(s, "q0", 1);
  CHECK(sel.reg().size() == 1);
  CHECK(std::abs(sel.amplitude(std::vector<Element>{2}) - 1.0) < 1e-15);
  CHECK(select_site(s, "q0", 0).empty());
  const std::vector<cplx> uniform(3, 1.0 / std::sqrt(3.0));
  CHECK(std::abs(project_site(s, "q1", uniform).norm() - 1.0 / std::sqrt(3.0)) < 1e-15);
  const SparseState r = reorder(s, {"q1", "q0"});
  CHECK(std::abs(r.amplitude(std::vector<Element>{2, 1}) - 1.0) < 1e-15);
}

TEST_CASE("state dump round trip") {
  std::mt19937_64 rng(4);
  for (const char* name : {"Z2", "S3", "Q8"}) {
    const GroupSpec spec = builtin_group(name);
    const SparseState s = random_state(reg_n(spec, 4), rng, 30);
    const std::string text = dump_state(s);
    CHECK(dump_group_name(text) == name);
    const SparseState back = parse_state(text, spec);
    CHECK(distance(s, back) < 1e-15);
    CHECK(dump_state(back) == text);
  }
  CHECK_THROWS_AS(parse_state("# gcs-state v1\ngroup Z2\nsites a\n(x) 1 0\n", builtin_group("Z2")), InputError);
  CHECK_THROWS_AS(parse_state("# gcs-state v1\ngroup Z3\nsites a\n(e) 1 0\n", builtin_group("Z2")), InputError);
}
