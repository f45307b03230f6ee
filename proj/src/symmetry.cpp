#include "gcs/symmetry.hpp"

#include <algorithm>

#include "gcs/builder.hpp"

namespace gcs {

ClusterGraph symmetry_ring(std::size_t n) { return ring_graph(n, LineOrientation::Leftward); }

namespace {

// Even-site positions in ring order; checks that consecutive vertices are adjacent.
std::vector<std::size_t> ring_even_positions(const SparseState& s, const ClusterGraph& ring) {
  const auto ids = ring.vertex_ids();
  const std::size_t n = ids.size();
  if (n < 2 || n % 2 || ring.edges.size() != n) throw InputError("symmetry operators need an even-length ring");
  for (std::size_t i = 0; i < n; ++i) {
    const auto nb = ring.neighbours(ids[i]);
    if (std::find(nb.begin(), nb.end(), ids[(i + 1) % n]) == nb.end())
      throw InputError("graph vertices are not listed in ring order");
  }
  std::vector<std::size_t> pos;
  for (const auto& id : ids)
    if (ring.parity(id) == Parity::Even) pos.push_back(s.reg().index_of(id));
  return pos;
}

}  // namespace

SparseState apply_u_odd(const SparseState& s, const ClusterGraph& ring, Element g) {
  ring_even_positions(s, ring);
  const auto& reg = s.reg();
  const Element gi = reg.G().inv(g);
  std::vector<std::size_t> odd;
  for (const auto& id : ring.odd_ids()) odd.push_back(reg.index_of(id));
  std::vector<Key> keys(s.keys());
  for (auto& k : keys)
    for (auto p : odd) k = reg.set(k, p, reg.G().mul(reg.get(k, p), gi));
  return {reg, std::move(keys), s.amps()};
}

SparseState apply_u_even(const SparseState& s, const ClusterGraph& ring, const Representation& rep) {
  const auto even = ring_even_positions(s, ring);
  const auto& reg = s.reg();
  std::vector<cplx> amps(s.amps());
  for (std::size_t x = 0; x < s.size(); ++x) {
    Matrix m = Matrix::Identity(rep.dim(), rep.dim());
    for (auto p : even) m = m * rep(reg.get(s.keys()[x], p));
    amps[x] *= m.trace() / double(rep.dim());
  }
  return {reg, s.keys(), std::move(amps)};
}

SymmetryReport verify_symmetry_algebra(const GroupSpec& spec, std::size_t n, std::mt19937_64& rng, double tol,
                                       std::size_t samples) {
  SymmetryReport rep;
  const auto& G = spec.G();
  const auto& irreps = spec.reps();
  const ClusterGraph ring = symmetry_ring(n);
  const SparseState psi = build_cluster_state(ring, spec);
  const Register& reg = psi.reg();

  auto record = [&](std::string label, double r, bool info = false) {
    NamedCheck c{std::move(label), r, tol, r <= tol, info};
    if (!info && !c.pass && rep.first_failure.empty()) rep.first_failure = c.label;
    rep.checks.push_back(std::move(c));
  };

  std::vector<SparseState> randoms;
  for (std::size_t k = 0; k < samples; ++k) randoms.push_back(random_state(reg, rng, 32));
  // Max over random states of ‖f(ψ) − g(ψ)‖.
  auto in_action = [&](auto&& f, auto&& g) {
    double worst = 0;
    for (const auto& r : randoms) worst = std::max(worst, distance(f(r), g(r)));
    return worst;
  };

  double inv_odd = 0, inv_even = 0;
  for (std::size_t g = 0; g < G.order(); ++g)
    inv_odd = std::max(inv_odd, distance(apply_u_odd(psi, ring, Element(g)), psi));
  for (const auto& r : irreps) inv_even = std::max(inv_even, distance(apply_u_even(psi, ring, r), psi));
  record("invariance U^o_g", inv_odd);
  record("invariance U^e_Γ", inv_even);

  double comp = 0;
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      comp = std::max(comp, in_action(
                                [&](const SparseState& x) {
                                  return apply_u_odd(apply_u_odd(x, ring, Element(h)), ring, Element(g));
                                },
                                [&](const SparseState& x) { return apply_u_odd(x, ring, G.mul(Element(g), Element(h))); }));
  record("U^o_g U^o_h = U^o_gh", comp);

  double tens = 0, dsum = 0, dsum_literal = 0;
  for (const auto& a : irreps)
    for (const auto& b : irreps) {
      const Representation ab = tensor_product(a, b);
      tens = std::max(tens, in_action([&](const SparseState& x) { return apply_u_even(apply_u_even(x, ring, b), ring, a); },
                                      [&](const SparseState& x) { return apply_u_even(x, ring, ab); }));
      const Representation sum = direct_sum(a, b);
      const double da = double(a.dim()), db = double(b.dim());
      dsum = std::max(dsum, in_action(
                                [&](const SparseState& x) {
                                  return gcs::add(apply_u_even(x, ring, a), apply_u_even(x, ring, b), da, db);
                                },
                                [&](const SparseState& x) { return apply_u_even(x, ring, sum).scaled(da + db); }));
      dsum_literal = std::max(dsum_literal, in_action(
                                                [&](const SparseState& x) {
                                                  return gcs::add(apply_u_even(x, ring, a), apply_u_even(x, ring, b), 1, 1);
                                                },
                                                [&](const SparseState& x) { return apply_u_even(x, ring, sum); }));
    }
  record("U^e_Γ1 U^e_Γ2 = U^e_Γ1⊗Γ2", tens);
  record("d1 U^e_Γ1 + d2 U^e_Γ2 = (d1+d2) U^e_Γ1⊕Γ2", dsum);
  record("U^e_Γ1 + U^e_Γ2 = U^e_Γ1⊕Γ2 (unweighted)", dsum_literal, true);

  double comm = 0;
  for (std::size_t g = 0; g < G.order(); ++g)
    for (const auto& r : irreps)
      comm = std::max(comm, in_action(
                                [&](const SparseState& x) { return apply_u_even(apply_u_odd(x, ring, Element(g)), ring, r); },
                                [&](const SparseState& x) { return apply_u_odd(apply_u_even(x, ring, r), ring, Element(g)); }));
  record("[U^o_g, U^e_Γ] = 0", comm);

  if (G.order() == 2) {
    // Z2 × Z2: both generators square to the identity and commute.
    const auto& minus = irreps[irreps.trivial_index().value_or(0) == 0 ? 1 : 0];
    const double sq_o = in_action([&](const SparseState& x) { return apply_u_odd(apply_u_odd(x, ring, 1), ring, 1); },
                                  [&](const SparseState& x) { return x; });
    const double sq_e = in_action(
        [&](const SparseState& x) { return apply_u_even(apply_u_even(x, ring, minus), ring, minus); },
        [&](const SparseState& x) { return x; });
    record("Z2: (U^o)^2 = I", sq_o);
    record("Z2: (U^e)^2 = I", sq_e);
  }
  rep.pass = rep.first_failure.empty();
  return rep;
}

}  // namespace gcs
