#pragma once

// Test-only reference implementations. Nothing here calls the library's state kernels:
// states are maps from value tuples to amplitudes and products come from explicit models.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gcs/graph.hpp"
#include "gcs/group.hpp"
#include "gcs/state.hpp"

namespace oracle {

using gcs::Element;
using cplx = std::complex<double>;
using Config = std::vector<Element>;
using MapState = std::map<Config, cplx>;

// Group models.

/// Index a+n·b as the map i -> a + (b ? -i : i) on Z_n (r^a s^b acting on the n-gon).
inline std::vector<int> dihedral_perm(int n, int idx) {
  const int a = idx % n, b = idx / n;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = ((a + (b ? -i : i)) % n + n) % n;
  return p;
}

inline std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

using Quat = std::array<int, 4>;  // (1, i, j, k) coefficients

inline Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

/// Catalog index order 1, -1, i, -i, j, -j, k, -k.
inline Quat q8_unit(int idx) {
  Quat q{0, 0, 0, 0};
  q[idx / 2] = idx % 2 ? -1 : 1;
  return q;
}

/// Product table from the model, indexed like the catalog.
inline std::vector<int> model_table(const std::string& name) {
  std::vector<int> t;
  if (name[0] == 'Z') {
    const int n = std::stoi(name.substr(1));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t.push_back((a + b) % n);
  } else if (name == "S3" || name == "D4") {
    const int n = name == "S3" ? 3 : 4;
    std::vector<std::vector<int>> perms;
    for (int k = 0; k < 2 * n; ++k) perms.push_back(dihedral_perm(n, k));
    for (int a = 0; a < 2 * n; ++a)
      for (int b = 0; b < 2 * n; ++b) {
        const auto c = compose(perms[a], perms[b]);
        t.push_back(int(std::find(perms.begin(), perms.end(), c) - perms.begin()));
      }
  } else if (name == "Q8") {
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const Quat c = qmul(q8_unit(a), q8_unit(b));
        int idx = 0;
        while (q8_unit(idx) != c) ++idx;
        t.push_back(idx);
      }
  }
  return t;
}

// Map states.

inline MapState to_map(const gcs::SparseState& s) {
  MapState m;
  for (std::size_t k = 0; k < s.size(); ++k) {
    Config c;
    for (std::size_t i = 0; i < s.reg().size(); ++i) c.push_back(s.reg().get(s.keys()[k], i));
    m[c] += s.amps()[k];
  }
  return m;
}

inline gcs::SparseState from_map(const gcs::Register& reg, const MapState& m) {
  std::vector<gcs::Key> keys;
  std::vector<cplx> amps;
  for (const auto& [c, a] : m) {
    keys.push_back(reg.make_key(c));
    amps.push_back(a);
  }
  return gcs::SparseState(reg, keys, amps);
}

/// max |a(c) - b(c)| over the union of supports.
inline double max_diff(const MapState& a, const MapState& b) {
  double d = 0;
  for (const auto& [c, x] : a) {
    auto it = b.find(c);
    d = std::max(d, std::abs(x - (it == b.end() ? cplx(0) : it->second)));
  }
  for (const auto& [c, y] : b)
    if (!a.count(c)) d = std::max(d, std::abs(y));
  return d;
}

inline double max_diff(const gcs::SparseState& a, const MapState& b) { return max_diff(to_map(a), b); }

/// Cluster state by direct enumeration over odd values: each even value is obtained by
/// running the CMULTs at that vertex one at a time in #_v order.
inline MapState cluster_state(const gcs::ClusterGraph& g, const gcs::FiniteGroup& G) {
  std::vector<std::size_t> odd;
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    pos[g.vertices[i].id] = i;
    if (g.vertices[i].parity == gcs::Parity::Odd) odd.push_back(i);
  }
  const std::size_t n = G.order();
  std::size_t total = 1;
  for (std::size_t k = 0; k < odd.size(); ++k) total *= n;
  const double amp = std::pow(double(n), -0.5 * double(odd.size()));
  MapState out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    Config c(g.vertices.size(), 0);
    std::size_t r = idx;
    for (std::size_t k = odd.size(); k-- > 0;) {
      c[odd[k]] = Element(r % n);
      r /= n;
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (g.vertices[i].parity != gcs::Parity::Even) continue;
      Element y = 0;
      for (const auto& eid : g.orderings.at(g.vertices[i].id)) {
        const auto& e = g.edge(eid);
        const bool out_edge = e.tail == g.vertices[i].id;
        const Element x = c[pos[out_edge ? e.head : e.tail]];
        y = out_edge ? G.mul(x, y) : G.mul(y, G.inv(x));
      }
      c[i] = y;
    }
    out[c] += amp;
  }
  return out;
}

// Local operators on map states.

inline MapState x_left(const MapState& s, std::size_t site, Element g, const gcs::FiniteGroup& G) {
  MapState out;
  for (const auto& [key, a] : s) {
    Config c = key;
    c[site] = G.mul(g, c[site]);
    out[c] += a;
  }
  return out;
}

inline MapState x_right(const MapState& s, std::size_t site, Element g, const gcs::FiniteGroup& G) {
  MapState out;
  for (const auto& [key, a] : s) {
    Config c = key;
    c[site] = G.mul(c[site], G.inv(g));
    out[c] += a;
  }
  return out;
}

inline MapState t_proj(const MapState& s, std::size_t site, Element g) {
  MapState out;
  for (const auto& [c, a] : s)
    if (c[site] == g) out[c] += a;
  return out;
}

inline MapState z_rep(const MapState& s, std::size_t site, const gcs::Representation& r, std::size_t i,
                      std::size_t j) {
  MapState out;
  for (const auto& [c, a] : s) out[c] += a * r.entry(c[site], i, j);
  return out;
}

inline MapState cmult(const MapState& s, std::size_t control, std::size_t target, gcs::Sense sense,
                      const gcs::FiniteGroup& G) {
  MapState out;
  for (const auto& [key, a] : s) {
    Config c = key;
    const Element g = c[control];
    c[target] = sense == gcs::Sense::Left ? G.mul(g, c[target]) : G.mul(c[target], G.inv(g));
    out[c] += a;
  }
  return out;
}

inline double norm(const MapState& s) {
  double n = 0;
  for (const auto& [c, a] : s) n += std::norm(a);
  return std::sqrt(n);
}

// Generators.

/// Random bipartite graph with every even vertex of degree ≥ 1 and a random #_v.
/// Odd vertices may be isolated.
inline gcs::ClusterGraph random_graph(std::mt19937_64& rng, std::size_t max_odd, std::size_t max_even,
                                      double edge_prob = 0.5) {
  std::uniform_int_distribution<std::size_t> n_odd(1, max_odd), n_even(1, max_even);
  std::bernoulli_distribution coin(edge_prob), flip(0.5);
  const std::size_t no = n_odd(rng), ne = n_even(rng);
  gcs::ClusterGraph g;
  for (std::size_t i = 0; i < no; ++i) g.vertices.push_back({"w" + std::to_string(i), gcs::Parity::Odd});
  for (std::size_t i = 0; i < ne; ++i) g.vertices.push_back({"v" + std::to_string(i), gcs::Parity::Even});
  std::size_t eid = 0;
  for (std::size_t v = 0; v < ne; ++v) {
    const std::string ev = "v" + std::to_string(v);
    std::vector<std::string> inc;
    for (std::size_t w = 0; w < no; ++w) {
      if (!coin(rng)) continue;
      const std::string od = "w" + std::to_string(w), id = "e" + std::to_string(eid++);
      g.edges.push_back(flip(rng) ? gcs::Edge{id, od, ev} : gcs::Edge{id, ev, od});
      inc.push_back(id);
    }
    if (inc.empty()) {
      const std::string id = "e" + std::to_string(eid++);
      g.edges.push_back({id, "w" + std::to_string(std::uniform_int_distribution<std::size_t>(0, no - 1)(rng)), ev});
      inc.push_back(id);
    }
    std::shuffle(inc.begin(), inc.end(), rng);
    g.orderings[ev] = inc;
  }
  return g;
}

/// Random normalised map state over `sites` values with `entries` support points.
inline MapState random_map_state(std::mt19937_64& rng, std::size_t sites, std::size_t order, std::size_t entries) {
  std::uniform_int_distribution<std::size_t> val(0, order - 1);
  std::normal_distribution<double> gauss;
  MapState m;
  for (std::size_t k = 0; k < entries; ++k) {
    Config c(sites);
    for (auto& x : c) x = Element(val(rng));
    m[c] += cplx(gauss(rng), gauss(rng));
  }
  const double n = norm(m);
  for (auto& [c, a] : m) a /= n;
  return m;
}

}  // namespace oracle
