#include "gcs/quantum_double.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <cmath>

#include "gcs/builder.hpp"

namespace gcs {

namespace {

int wrap(int a, int n) { return ((a % n) + n) % n; }

std::string star_id(int x, int y) { return "s" + std::to_string(x) + "_" + std::to_string(y); }
std::string hlink(int x, int y) { return "h" + std::to_string(x) + "_" + std::to_string(y); }
std::string vlink(int x, int y) { return "v" + std::to_string(x) + "_" + std::to_string(y); }

}  // namespace

const QdLink& QdLattice::link(std::string_view id) const {
  for (const auto& l : links)
    if (l.id == id) return l;
  throw InputError("unknown link '" + std::string(id) + "'");
}

std::vector<std::string> QdLattice::link_ids() const {
  std::vector<std::string> out;
  for (const auto& l : links) out.push_back(l.id);
  return out;
}

QdLattice build_qd_lattice(int L1, int L2) {
  if (L1 < 2 || L2 < 2 || L1 % 2 || L2 % 2)
    throw InputError("torus dimensions must be even and at least 2 (got " + std::to_string(L1) + "x" +
                     std::to_string(L2) + ")");
  QdLattice l{L1, L2, {}, {}, {}};
  auto cw = [](int x, int y) { return (x + y) % 2 == 0; };
  // h(x,y) is the top edge of plaquette (x,y): rightwards when that plaquette is clockwise.
  // v(x,y) is its left edge: upwards when clockwise.
  for (int y = 0; y < L2; ++y)
    for (int x = 0; x < L1; ++x) {
      const bool c = cw(x, y);
      QdLink h{hlink(x, y), true, x, y, star_id(x, y), star_id(wrap(x + 1, L1), y)};
      if (!c) std::swap(h.tail, h.head);
      QdLink v{vlink(x, y), false, x, y, star_id(x, wrap(y + 1, L2)), star_id(x, y)};
      if (!c) std::swap(v.tail, v.head);
      l.links.push_back(std::move(h));
      l.links.push_back(std::move(v));
    }
  for (int y = 0; y < L2; ++y)
    for (int x = 0; x < L1; ++x) {
      QdPlaquette p;
      p.id = "p" + std::to_string(x) + "_" + std::to_string(y);
      p.x = x;
      p.y = y;
      p.clockwise = cw(x, y);
      p.up = hlink(x, y);
      p.down = hlink(x, wrap(y + 1, L2));
      p.left = vlink(x, y);
      p.right = vlink(wrap(x + 1, L1), y);
      p.base = p.clockwise ? star_id(x, y) : star_id(wrap(x + 1, L1), y);
      l.plaquettes.push_back(std::move(p));
    }
  for (int y = 0; y < L2; ++y)
    for (int x = 0; x < L1; ++x) {
      QdStar s;
      s.id = star_id(x, y);
      s.x = x;
      s.y = y;
      s.up = vlink(x, wrap(y - 1, L2));
      s.down = vlink(x, y);
      s.left = hlink(wrap(x - 1, L1), y);
      s.right = hlink(x, y);
      s.h_type = l.link(s.left).head == s.id;
      l.stars.push_back(std::move(s));
    }
  return l;
}

ValidationReport validate_qd_lattice(const QdLattice& l) {
  ValidationReport r;
  // Each plaquette: walking U (rightwards), R (down), D (left), L (up) is clockwise.
  for (const auto& p : l.plaquettes) {
    const auto& U = l.link(p.up);
    const auto& R = l.link(p.right);
    const auto& D = l.link(p.down);
    const auto& L = l.link(p.left);
    const std::string tl = star_id(p.x, p.y), tr = star_id(wrap(p.x + 1, l.L1), p.y);
    const std::string br = star_id(wrap(p.x + 1, l.L1), wrap(p.y + 1, l.L2)), bl = star_id(p.x, wrap(p.y + 1, l.L2));
    const bool cw = U.tail == tl && R.tail == tr && D.tail == br && L.tail == bl;
    const bool acw = U.tail == tr && R.tail == br && D.tail == bl && L.tail == tl;
    if (!cw && !acw) r.violations.push_back(p.id + ": boundary does not circulate");
    if ((cw && !p.clockwise) || (acw && p.clockwise)) r.violations.push_back(p.id + ": circulation tag mismatch");
  }
  for (const auto& s : l.stars) {
    const bool h_in = l.link(s.left).head == s.id && l.link(s.right).head == s.id;
    const bool v_in = l.link(s.up).head == s.id && l.link(s.down).head == s.id;
    if (h_in == v_in) r.violations.push_back(s.id + ": neither h nor v type");
    if (h_in != s.h_type) r.violations.push_back(s.id + ": type tag mismatch");
  }
  // Every link borders two plaquettes and two stars.
  std::map<std::string, int> pcount, scount;
  for (const auto& p : l.plaquettes)
    for (const auto* id : {&p.up, &p.left, &p.down, &p.right}) ++pcount[*id];
  for (const auto& s : l.stars)
    for (const auto* id : {&s.up, &s.left, &s.down, &s.right}) ++scount[*id];
  for (const auto& k : l.links)
    if (pcount[k.id] != 2 || scount[k.id] != 2) r.violations.push_back(k.id + ": wrong incidence");
  return r;
}

QdClusterMap qd_cluster_graph(const QdLattice& l) {
  QdClusterMap m;
  auto& g = m.graph;
  for (const auto& k : l.links) {
    g.vertices.push_back({k.id, Parity::Odd});
    m.odd.push_back(k.id);
  }
  for (const auto& p : l.plaquettes) {
    g.vertices.push_back({p.id, Parity::Even});
    m.red.push_back(p.id);
  }
  for (const auto& s : l.stars) {
    g.vertices.push_back({s.id, Parity::Even});
    m.blue.push_back(s.id);
  }
  // Grey edges run from red sites to their boundary links.
  for (const auto& p : l.plaquettes) {
    auto add = [&](const char* dir, const std::string& link) {
      g.edges.push_back({p.id + "." + dir, p.id, link});
    };
    add("U", p.up);
    add("L", p.left);
    add("D", p.down);
    add("R", p.right);
    const std::string U = p.id + ".U", L = p.id + ".L", D = p.id + ".D", R = p.id + ".R";
    g.orderings[p.id] = p.clockwise ? std::vector<std::string>{U, R, D, L} : std::vector<std::string>{U, L, D, R};
  }
  // Black edges run against the link: a link entering s gives s -> link.
  for (const auto& s : l.stars) {
    auto add = [&](const char* dir, const std::string& link) {
      const bool into = l.link(link).head == s.id;
      const std::string id = s.id + "." + dir;
      if (into)
        g.edges.push_back({id, s.id, link});
      else
        g.edges.push_back({id, link, s.id});
    };
    add("U", s.up);
    add("L", s.left);
    add("D", s.down);
    add("R", s.right);
    g.orderings[s.id] = {s.id + ".U", s.id + ".L", s.id + ".D", s.id + ".R"};
  }
  return m;
}

ConditionalMonomial qd_star(const QdStar& s, Element g) {
  ConditionalMonomial op;
  const Word w = Word::constant(g);
  // X^← multiplies on the left, X^→ on the right.
  auto fwd = [&](const std::string& l) { op.site(l).push_back(Factor::x_right(w)); };
  auto back = [&](const std::string& l) { op.site(l).push_back(Factor::x_left(w)); };
  if (s.h_type) {
    fwd(s.up), back(s.left), fwd(s.down), back(s.right);
  } else {
    back(s.up), fwd(s.left), back(s.down), fwd(s.right);
  }
  return op;
}

namespace {

// T factors on the four boundary links with variables U, L, D, R (indices 0..3).
ConditionalMonomial plaquette_frame(const QdPlaquette& p) {
  ConditionalMonomial op;
  const int U = op.add_var("g" + p.up), L = op.add_var("g" + p.left), D = op.add_var("g" + p.down),
            R = op.add_var("g" + p.right);
  op.site(p.up).push_back(Factor::t(Word::variable(U)));
  op.site(p.left).push_back(Factor::t(Word::variable(L)));
  op.site(p.down).push_back(Factor::t(Word::variable(D)));
  op.site(p.right).push_back(Factor::t(Word::variable(R)));
  return op;
}

}  // namespace

ConditionalMonomial qd_plaquette(const QdPlaquette& p) {
  ConditionalMonomial op = plaquette_frame(p);
  Word w;
  if (p.clockwise) {
    for (int v : {0, 1, 2, 3}) w = w * Word::variable(v);
  } else {
    for (int v : {0, 1, 2, 3}) w = w * Word::variable(v, true);
  }
  op.constraints.push_back({w, 0});
  return op;
}

ConditionalMonomial qd_shifted_plaquette(const QdPlaquette& p, Element m) {
  ConditionalMonomial op = plaquette_frame(p);
  // Red-site word: L D R U when clockwise, R D L U when anticlockwise.
  const std::vector<int> order = p.clockwise ? std::vector<int>{1, 2, 3, 0} : std::vector<int>{3, 2, 1, 0};
  Word w;
  for (int v : order) w = w * Word::variable(v);
  op.constraints.push_back({w * Word::constant(m).inverse(), 0});
  return op;
}

StabilizerSet qd_stabilizers(const QdLattice& l, const FiniteGroup& G) {
  StabilizerSet out;
  for (const auto& s : l.stars)
    for (std::size_t g = 0; g < G.order(); ++g)
      out.push_back({"A[" + s.id + "," + G.label(Element(g)) + "]", s.id, Element(g), qd_star(s, Element(g))});
  for (const auto& p : l.plaquettes) out.push_back({"B[" + p.id + "]", p.id, std::nullopt, qd_plaquette(p)});
  return out;
}

namespace {

std::vector<cplx> uniform_vector(std::size_t n) { return std::vector<cplx>(n, cplx(1.0 / std::sqrt(double(n)))); }

SparseState project_blues(const SparseState& s, const QdClusterMap& map) {
  SparseState out = s;
  const auto phi = uniform_vector(s.reg().G().order());
  for (const auto& b : map.blue) out = project_site(out, b, phi);
  return out;
}

}  // namespace

SparseState prepare_qd_state(const QdLattice& l, const GroupSpec& spec) {
  const QdClusterMap map = qd_cluster_graph(l);
  SparseState s = build_cluster_state(map.graph, spec);
  // Selecting reds first shrinks the state before the blue sums; the projections commute.
  for (const auto& r : map.red) s = select_site(s, r, FiniteGroup::identity());
  s = project_blues(s, map);
  if (!(s.norm2() > 0)) throw std::logic_error("quantum double projection annihilated the state");
  return s.normalized();
}

QdMeasured prepare_qd_with_measurement(const QdLattice& l, const GroupSpec& spec, RandomSource& source,
                                       const std::map<std::string, Element>& forced) {
  const auto& G = spec.G();
  const QdClusterMap map = qd_cluster_graph(l);
  for (const auto& [p, m] : forced) {
    if (std::find(map.red.begin(), map.red.end(), p) == map.red.end())
      throw InputError("forced outcome for unknown plaquette '" + p + "'");
    if (m >= G.order()) throw InputError("forced outcome out of range");
  }
  SparseState s = project_blues(build_cluster_state(map.graph, spec), map);
  QdMeasured out;
  std::map<std::string, Element> m;
  for (const auto& r : map.red) {
    auto it = forced.find(r);
    auto [o, post] = it != forced.end() ? measure_forced(s, r, MeasurementOutcome::group(it->second))
                                        : measure(s, r, Basis::Group, source);
    out.outcomes.emplace_back(r, o.element);
    m[r] = o.element;
    s = std::move(post);
  }
  out.state = s;
  for (const auto& p : l.plaquettes)
    out.stabilizers.push_back({"B[" + p.id + "=" + G.label(m[p.id]) + "]", p.id, std::nullopt,
                               qd_shifted_plaquette(p, m[p.id])});
  // A_g(s) conjugates the flux of the plaquettes based at s, so it survives exactly when
  // g commutes with each of those outcomes. For those g the propagated product of odd
  // stabilizers restricts consistently to the outcomes and is kept alongside A_g(s).
  const GateSchedule sched = schedule(map.graph);
  const StabilizerSet left = propagate(map.graph, sched, initial_stabilizers(map.graph, G, false), G);
  const StabilizerSet right = propagate(map.graph, sched, initial_stabilizers(map.graph, G, true), G);
  for (const auto& st : l.stars)
    for (std::size_t g = 0; g < G.order(); ++g) {
      bool central = true;
      for (const auto& p : l.plaquettes)
        if (p.base == st.id && G.mul(Element(g), m[p.id]) != G.mul(m[p.id], Element(g))) central = false;
      if (!central) continue;
      const std::string tag = st.id + "," + G.label(Element(g));
      out.stabilizers.push_back({"A[" + tag + "]", st.id, Element(g), qd_star(st, Element(g))});
      ConditionalMonomial op = star_from_propagation(l, map, left, right, st, Element(g), m);
      op.simplify(G);
      out.stabilizers.push_back({"Sprop[" + tag + "]", st.id, Element(g), std::move(op)});
    }
  return out;
}

ConditionalMonomial star_from_propagation(const QdLattice& l, const QdClusterMap& map, const StabilizerSet& left,
                                          const StabilizerSet& right, const QdStar& s, Element g,
                                          const std::map<std::string, Element>& outcomes) {
  auto find = [&](const StabilizerSet& set, const std::string& site) -> const ConditionalMonomial& {
    for (const auto& st : set)
      if (st.site == site && st.element && *st.element == g) return st.op;
    throw InputError("no odd stabilizer for " + site);
  };
  // Same left/right pattern as A_g(s).
  const bool up_left = !s.h_type;
  ConditionalMonomial op = find(up_left ? left : right, s.up);
  op = product(op, find(up_left ? right : left, s.left));
  op = product(op, find(up_left ? left : right, s.down));
  op = product(op, find(up_left ? right : left, s.right));
  for (const auto& b : map.blue) op = absorb_uniform(op, b);
  for (const auto& r : map.red) {
    auto it = outcomes.find(r);
    op = restrict_to(op, r, it == outcomes.end() ? FiniteGroup::identity() : it->second);
  }
  (void)l;
  return op;
}

SparseState toric_code_reference(const QdLattice& l, const GroupSpec& z2) {
  if (z2.G().order() != 2) throw InputError("the toric code reference needs Z2");
  const Register reg(z2, l.link_ids());
  std::vector<std::array<std::size_t, 4>> plaq;
  for (const auto& p : l.plaquettes)
    plaq.push_back({reg.index_of(p.up), reg.index_of(p.left), reg.index_of(p.down), reg.index_of(p.right)});
  std::vector<Key> keys;
  const std::uint64_t dim = std::uint64_t(1) << reg.size();
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    Key k = 0;
    for (std::size_t i = 0; i < reg.size(); ++i) k = reg.set(k, i, Element((idx >> (reg.size() - 1 - i)) & 1));
    bool even = true;
    for (const auto& q : plaq) even = even && ((reg.get(k, q[0]) ^ reg.get(k, q[1]) ^ reg.get(k, q[2]) ^ reg.get(k, q[3])) == 0);
    if (even) keys.push_back(k);
  }
  std::vector<cplx> amps(keys.size(), 1.0);
  return SparseState(reg, std::move(keys), std::move(amps)).normalized();
}

SectorComparison compare_toric_sectors(const QdLattice& l, const SparseState& psi, const SparseState& ref) {
  if (!psi.reg().same_layout(ref.reg())) throw InputError("states live on different registers");
  const auto& reg = psi.reg();
  std::vector<std::size_t> row, col;
  for (int x = 0; x < l.L1; ++x) row.push_back(reg.index_of(hlink(x, 0)));
  for (int y = 0; y < l.L2; ++y) col.push_back(reg.index_of(vlink(0, y)));
  auto sector = [&](Key k) {
    int a = 0, b = 0;
    for (auto i : row) a ^= reg.get(k, i) != 0;
    for (auto i : col) b ^= reg.get(k, i) != 0;
    return 2 * a + b;
  };
  auto part = [&](const SparseState& s, int sec) {
    std::vector<Key> keys;
    std::vector<cplx> amps;
    for (std::size_t x = 0; x < s.size(); ++x)
      if (sector(s.keys()[x]) == sec) {
        keys.push_back(s.keys()[x]);
        amps.push_back(s.amps()[x]);
      }
    return SparseState(reg, std::move(keys), std::move(amps));
  };
  SectorComparison out;
  const double n2 = psi.norm2();
  for (int sec = 0; sec < 4; ++sec) {
    const SparseState a = part(psi, sec), b = part(ref, sec);
    const double w = a.norm2() / n2;
    out.sector_weights.emplace_back(std::string(sec & 2 ? "-" : "+") + (sec & 1 ? "-" : "+"), w);
    if (w < 1e-12) continue;
    ++out.sectors_compared;
    const double f = b.norm2() > 0 ? fidelity(a, b) : 0.0;
    out.min_fidelity = std::min(out.min_fidelity, f);
  }
  if (out.sectors_compared == 0) out.min_fidelity = 0;
  return out;
}

namespace {

// Single removed h-type star: odd sites U, L, D, R; reds at the four corners, all edges
// leaving the reds. Red words: BL = D·L, BR = R·D, TL = U·L, TR = R·U; A^h_g conjugates
// the BR and TR words and leaves the other two unchanged.
ClusterGraph single_star_graph() {
  ClusterGraph g;
  for (const char* o : {"U", "L", "D", "R"}) g.vertices.push_back({o, Parity::Odd});
  const std::vector<std::tuple<std::string, std::string, std::string>> reds = {
      {"BL", "L", "D"}, {"BR", "D", "R"}, {"TL", "L", "U"}, {"TR", "U", "R"}};
  for (const auto& [r, a, b] : reds) {
    g.vertices.push_back({r, Parity::Even});
    g.edges.push_back({r + "-" + a, r, a});
    g.edges.push_back({r + "-" + b, r, b});
    g.orderings[r] = {r + "-" + a, r + "-" + b};
  }
  return g;
}

ConditionalMonomial single_star_h(Element g) {
  QdStar s;
  s.h_type = true;
  s.up = "U";
  s.left = "L";
  s.down = "D";
  s.right = "R";
  return qd_star(s, g);
}

}  // namespace

ClassCheck conjugacy_class_projection_check(const GroupSpec& spec, std::size_t cls, Element negative, double tol) {
  const auto& G = spec.G();
  const auto classes = conjugacy_classes(G);
  if (cls >= classes.classes.size()) throw InputError("conjugacy class index out of range");
  if (negative >= G.order()) throw InputError("negative-control element out of range");
  const ClusterGraph graph = single_star_graph();
  const SparseState cluster = build_cluster_state(graph, spec);
  const std::vector<std::string> reds = {"BL", "BR", "TL", "TR"};

  auto class_vector = [&](const std::vector<Element>& members) {
    std::vector<cplx> phi(G.order(), 0.0);
    for (auto h : members) phi[h] = 1.0 / std::sqrt(double(members.size()));
    return phi;
  };
  auto worst_star = [&](const SparseState& psi) {
    double worst = 0;
    for (std::size_t g = 0; g < G.order(); ++g)
      worst = std::max(worst, distance(apply(single_star_h(Element(g)), psi), psi));
    return worst;
  };

  ClassCheck out;
  auto record = [&](std::string label, double r, double t, bool pass) {
    out.checks.push_back({std::move(label), r, t, pass, false});
    out.pass = out.pass && pass;
  };

  // C = {e}: compare with the explicit δ-constrained superposition.
  {
    SparseState psi = cluster;
    for (const auto& r : reds) psi = select_site(psi, r, FiniteGroup::identity());
    psi = psi.normalized();
    const Register& reg = psi.reg();
    std::vector<Key> keys;
    for (std::size_t g1 = 0; g1 < G.order(); ++g1)
      for (std::size_t g2 = 0; g2 < G.order(); ++g2)
        for (std::size_t g3 = 0; g3 < G.order(); ++g3)
          for (std::size_t g4 = 0; g4 < G.order(); ++g4) {
            auto m = [&](std::size_t a, std::size_t b) { return G.mul(Element(a), Element(b)); };
            if (m(g2, g1) || m(g3, g2) || m(g3, g4) || m(g4, g1)) continue;
            // Register order U, L, D, R holds g4, g1, g2, g3.
            keys.push_back(reg.make_key({Element(g4), Element(g1), Element(g2), Element(g3)}));
          }
    std::vector<cplx> amps(keys.size(), 1.0);
    const SparseState oracle = SparseState(reg, std::move(keys), std::move(amps)).normalized();
    out.delta_state_fidelity = fidelity(psi, oracle);
    const double dev = std::abs(1.0 - out.delta_state_fidelity);
    record("C={e} matches the δ-constrained state", dev, tol, dev <= tol);
  }

  const auto phi = class_vector(classes.classes[cls]);
  {
    SparseState psi = cluster;
    for (const auto& r : reds) psi = project_site(psi, r, phi);
    if (!(psi.norm2() > 0)) throw std::logic_error("class projection annihilated the state");
    out.class_residual = worst_star(psi.normalized());
    record("class projection fixed by A^h_g", out.class_residual, tol, out.class_residual <= tol);
  }
  {
    SparseState psi = project_site(cluster, "BR", class_vector({negative}));
    for (const auto& r : {"BL", "TL", "TR"}) psi = project_site(psi, r, phi);
    if (!(psi.norm2() > 0)) throw InputError("negative control projection has zero norm");
    out.negative_residual = worst_star(psi.normalized());
    // Expected to break: the check passes when some A^h_g moves the state.
    record("single-element projection breaks A^h_g", out.negative_residual, 1e-6, out.negative_residual > 1e-6);
  }
  return out;
}

}  // namespace gcs
