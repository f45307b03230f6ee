#include "gcs/peps.hpp"

#include <cmath>
#include <map>

#include "gcs/builder.hpp"

namespace gcs {

PepsNetwork build_peps(const ClusterGraph& g, const GroupSpec& spec) {
  auto report = validate_graph(g);
  if (!report.ok()) throw InputError("invalid cluster graph: " + report.violations.front());
  PepsNetwork net{g, spec, spec.G().order(), {}};
  for (const auto& e : g.edges) net.bonds.push_back(e.id);
  return net;
}

std::optional<Element> peps_odd_output(const PepsNetwork& net, const std::string& w, const std::vector<Element>& legs) {
  if (legs.size() != net.graph.incident(w).size()) throw InputError("wrong number of legs at " + w);
  if (legs.empty()) return std::nullopt;
  for (auto x : legs)
    if (x != legs.front()) return std::nullopt;
  return legs.front();
}

Element peps_even_output(const PepsNetwork& net, const std::string& v, const std::vector<Element>& legs) {
  const auto& order = net.graph.ordering(v);
  if (legs.size() != order.size()) throw InputError("wrong number of legs at " + v);
  const auto& G = net.spec.G();
  Element out = G.identity(), in = G.identity();
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (ClusterGraph::outward(net.graph.edge(order[k]), v))
      out = G.mul(legs[k], out);
    else
      in = G.mul(legs[k], in);
  }
  return G.mul(out, G.inv(in));
}

ContractResult contract(const PepsNetwork& net, std::uint64_t budget) {
  const auto& g = net.graph;
  const Register reg = cluster_register(g, net.spec);
  const std::size_t n = net.bond_dim;

  // Enumeration variables: bonds, then odd sites with no bonds (free physical index).
  std::map<std::string, std::size_t> bond_index;
  for (std::size_t b = 0; b < net.bonds.size(); ++b) bond_index[net.bonds[b]] = b;
  std::vector<std::string> isolated;
  for (const auto& w : g.odd_ids())
    if (g.incident(w).empty()) isolated.push_back(w);
  const std::size_t vars = net.bonds.size() + isolated.size();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < vars; ++k) {
    if (total > budget / n) throw BudgetError("contraction needs more than " + std::to_string(budget) + " assignments");
    total *= n;
  }

  struct SiteLegs {
    std::size_t pos;
    std::string id;
    std::vector<std::size_t> legs;
    std::vector<bool> outward;
  };
  std::vector<SiteLegs> odd, even;
  for (const auto& w : g.odd_ids()) {
    if (g.incident(w).empty()) continue;
    SiteLegs s{reg.index_of(w), w, {}, {}};
    for (const auto& e : g.incident(w)) s.legs.push_back(bond_index.at(e));
    odd.push_back(std::move(s));
  }
  for (const auto& v : g.even_ids()) {
    SiteLegs s{reg.index_of(v), v, {}, {}};
    for (const auto& e : g.ordering(v)) {
      s.legs.push_back(bond_index.at(e));
      s.outward.push_back(ClusterGraph::outward(g.edge(e), v));
    }
    even.push_back(std::move(s));
  }
  std::vector<std::size_t> iso_pos;
  for (const auto& w : isolated) iso_pos.push_back(reg.index_of(w));

  const auto& G = net.spec.G();
  std::vector<Element> val(vars, 0);
  std::vector<Key> keys;
  std::vector<cplx> amps;
  const cplx amp(std::pow(double(n), -0.5 * double(g.odd_ids().size())));
  for (std::uint64_t it = 0; it < total; ++it) {
    Key k = 0;
    bool zero = false;
    for (const auto& s : odd) {
      // Copy tensor: every leg must carry the same value.
      const Element x = val[s.legs.front()];
      for (auto b : s.legs) zero = zero || val[b] != x;
      if (zero) break;
      k = reg.set(k, s.pos, x);
    }
    if (!zero) {
      for (const auto& s : even) {
        Element out = G.identity(), in = G.identity();
        for (std::size_t q = 0; q < s.legs.size(); ++q) {
          if (s.outward[q])
            out = G.mul(val[s.legs[q]], out);
          else
            in = G.mul(val[s.legs[q]], in);
        }
        k = reg.set(k, s.pos, G.mul(out, G.inv(in)));
      }
      for (std::size_t q = 0; q < iso_pos.size(); ++q) k = reg.set(k, iso_pos[q], val[net.bonds.size() + q]);
      keys.push_back(k);
      amps.push_back(amp);
    }
    for (std::size_t q = vars; q-- > 0;) {
      if (++val[q] < n) break;
      val[q] = 0;
    }
  }
  return {SparseState(reg, std::move(keys), std::move(amps)), total};
}

PepsComparison compare_to_circuit(const ClusterGraph& g, const GroupSpec& spec, std::uint64_t budget) {
  const SparseState circuit = build_cluster_state(g, spec);
  const ContractResult peps = contract(build_peps(g, spec), budget);
  return {fidelity(circuit, peps.state), peps.assignments, circuit.size(), peps.state.size()};
}

}  // namespace gcs
