#include "gcs/builder.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gcs {

GateSchedule schedule(const ClusterGraph& g) {
  auto report = validate_graph(g);
  if (!report.ok()) throw InputError("invalid cluster graph: " + report.violations.front());
  GateSchedule out;
  for (const auto& v : g.even_ids()) {
    auto it = g.orderings.find(v);
    if (it == g.orderings.end()) continue;
    for (const auto& eid : it->second) {
      const Edge& e = g.edge(eid);
      const bool left = ClusterGraph::outward(e, v);
      out.push_back({g.other_end(e, v), v, left ? Sense::Left : Sense::Right, eid});
    }
  }
  return out;
}

std::size_t depth(const GateSchedule& s) {
  std::map<std::string, std::size_t> layers;
  std::size_t d = 0;
  for (const auto& gate : s) d = std::max(d, ++layers[gate.target]);
  return d;
}

Register cluster_register(const ClusterGraph& g, const GroupSpec& spec) { return {spec, g.vertex_ids()}; }

SparseState build_cluster_state(const ClusterGraph& g, const GroupSpec& spec, std::uint64_t budget) {
  const GateSchedule sched = schedule(g);
  const Register reg = cluster_register(g, spec);
  const auto& G = reg.G();
  const std::size_t n = G.order();

  const auto odd = g.odd_ids();
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < odd.size(); ++k) {
    if (count > budget / n) throw BudgetError("cluster state needs more than " + std::to_string(budget) + " keys");
    count *= n;
  }

  // Odd sites in |I>, even in |e>.
  std::vector<std::size_t> odd_pos;
  for (const auto& id : odd) odd_pos.push_back(reg.index_of(id));
  std::vector<Key> keys(count, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t r = idx;
    Key k = 0;
    for (std::size_t q = odd_pos.size(); q-- > 0;) {
      k = reg.set(k, odd_pos[q], Element(r % n));
      r /= n;
    }
    keys[idx] = k;
  }

  // Each CMULT is a bijection on keys, so keys stay distinct and need sorting only once.
  for (const auto& gate : sched) {
    const std::size_t c = reg.index_of(gate.control), t = reg.index_of(gate.target);
    if (gate.sense == Sense::Left) {
      for (auto& k : keys) k = reg.set(k, t, G.mul(reg.get(k, c), reg.get(k, t)));
    } else {
      for (auto& k : keys) k = reg.set(k, t, G.mul(reg.get(k, t), G.inv(reg.get(k, c))));
    }
  }
  std::vector<cplx> amps(count, cplx(std::pow(double(n), -0.5 * double(odd.size()))));
  return {reg, std::move(keys), std::move(amps)};
}

SparseState apply_schedule(const SparseState& s, const GateSchedule& sched) {
  SparseState out = s;
  for (const auto& gate : sched) out = apply_cmult(out, gate.control, gate.target, gate.sense);
  return out;
}

QubitReference build_qubit_reference(const ClusterGraph& g, const GroupSpec& spec) {
  if (spec.G().order() != 2)
    throw InputError("the qubit reference construction needs Z2 (no Hadamard analogue for " + spec.G().name() + ")");
  auto report = validate_graph(g);
  if (!report.ok()) throw InputError("invalid cluster graph: " + report.violations.front());
  const Register reg = cluster_register(g, spec);
  // The CPHASE state has support on every basis state.
  if (reg.dimension() > kBuildBudget)
    throw BudgetError("qubit reference needs 2^" + std::to_string(reg.size()) + " amplitudes");
  SparseState plus = trivial_irrep_state(reg, reg.sites());

  // CPHASE is diagonal: (-1)^(ab) on each edge.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : g.edges) pairs.emplace_back(reg.index_of(e.tail), reg.index_of(e.head));
  std::vector<cplx> amps(plus.amps());
  for (std::size_t x = 0; x < plus.size(); ++x) {
    int parity = 0;
    for (const auto& [a, b] : pairs) parity ^= reg.get(plus.keys()[x], a) & reg.get(plus.keys()[x], b);
    if (parity) amps[x] = -amps[x];
  }
  QubitReference out{SparseState(reg, plus.keys(), amps), SparseState(reg)};

  Matrix H(2, 2);
  H << 1, 1, 1, -1;
  H /= std::sqrt(2.0);
  SparseState css = out.standard;
  for (const auto& v : g.even_ids()) css = apply_site_matrix(css, v, H);
  out.css = css;
  return out;
}

}  // namespace gcs
