#include "gcs/graph.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "gcs/group_io.hpp"

namespace gcs {

using json = nlohmann::ordered_json;

const Vertex& ClusterGraph::vertex(std::string_view id) const {
  for (const auto& v : vertices)
    if (v.id == id) return v;
  throw InputError("unknown vertex '" + std::string(id) + "'");
}

const Edge& ClusterGraph::edge(std::string_view id) const {
  for (const auto& e : edges)
    if (e.id == id) return e;
  throw InputError("unknown edge '" + std::string(id) + "'");
}

bool ClusterGraph::has_vertex(std::string_view id) const {
  return std::any_of(vertices.begin(), vertices.end(), [&](const Vertex& v) { return v.id == id; });
}

std::vector<std::string> ClusterGraph::vertex_ids() const {
  std::vector<std::string> out;
  for (const auto& v : vertices) out.push_back(v.id);
  return out;
}

std::vector<std::string> ClusterGraph::odd_ids() const {
  std::vector<std::string> out;
  for (const auto& v : vertices)
    if (v.parity == Parity::Odd) out.push_back(v.id);
  return out;
}

std::vector<std::string> ClusterGraph::even_ids() const {
  std::vector<std::string> out;
  for (const auto& v : vertices)
    if (v.parity == Parity::Even) out.push_back(v.id);
  return out;
}

std::vector<std::string> ClusterGraph::incident(std::string_view v) const {
  std::vector<std::string> out;
  for (const auto& e : edges)
    if (e.tail == v || e.head == v) out.push_back(e.id);
  return out;
}

const std::vector<std::string>& ClusterGraph::ordering(std::string_view v) const {
  auto it = orderings.find(std::string(v));
  if (it == orderings.end()) throw InputError("no ordering for even vertex '" + std::string(v) + "'");
  return it->second;
}

std::vector<std::string> ClusterGraph::neighbours(std::string_view v) const {
  std::vector<std::string> out;
  for (const auto& e : edges) {
    if (e.tail == v && std::find(out.begin(), out.end(), e.head) == out.end()) out.push_back(e.head);
    if (e.head == v && std::find(out.begin(), out.end(), e.tail) == out.end()) out.push_back(e.tail);
  }
  return out;
}

std::vector<std::string> ClusterGraph::ball2(std::string_view v) const {
  std::vector<std::string> out{std::string(v)};
  for (const auto& n : neighbours(v)) {
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    for (const auto& m : neighbours(n))
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

bool ClusterGraph::has_parallel_edges() const {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : edges) {
    auto key = std::minmax(e.tail, e.head);
    if (!seen.insert({key.first, key.second}).second) return true;
  }
  return false;
}

ValidationReport validate_graph(const ClusterGraph& g) {
  ValidationReport r;
  std::set<std::string> ids;
  for (const auto& v : g.vertices)
    if (!ids.insert(v.id).second) r.fail("duplicate vertex id '" + v.id + "'");
  std::set<std::string> eids;
  for (const auto& e : g.edges) {
    if (!eids.insert(e.id).second) r.fail("duplicate edge id '" + e.id + "'");
    if (!g.has_vertex(e.tail) || !g.has_vertex(e.head)) {
      r.fail("edge '" + e.id + "' has an unknown endpoint");
      continue;
    }
    if (e.tail == e.head) {
      r.fail("edge '" + e.id + "' is a self-loop");
      continue;
    }
    if (g.parity(e.tail) == g.parity(e.head))
      r.fail("edge '" + e.id + "' joins two " + std::string(g.parity(e.tail) == Parity::Odd ? "odd" : "even") +
             " vertices");
  }
  for (const auto& [v, order] : g.orderings) {
    if (!g.has_vertex(v)) {
      r.fail("ordering given for unknown vertex '" + v + "'");
      continue;
    }
    if (g.parity(v) != Parity::Even) r.fail("ordering given for odd vertex '" + v + "'");
  }
  for (const auto& v : g.vertices) {
    if (v.parity != Parity::Even) continue;
    auto inc = g.incident(v.id);
    auto it = g.orderings.find(v.id);
    if (it == g.orderings.end()) {
      if (!inc.empty()) r.fail("even vertex '" + v.id + "' has no ordering");
      continue;
    }
    auto ord = it->second;
    std::sort(inc.begin(), inc.end());
    std::sort(ord.begin(), ord.end());
    if (inc != ord) r.fail("ordering at '" + v.id + "' is not a permutation of its incident edges");
  }
  r.record("parallel_edges", g.has_parallel_edges() ? 1.0 : 0.0);
  return r;
}

ClusterGraph canonical_ordering_normal_form(const ClusterGraph& g) {
  ClusterGraph out = g;
  for (auto& [v, order] : out.orderings) {
    std::stable_partition(order.begin(), order.end(),
                          [&](const std::string& e) { return ClusterGraph::outward(g.edge(e), v); });
  }
  return out;
}

namespace {

ClusterGraph chain(std::size_t n, Parity first, LineOrientation o, bool ring) {
  ClusterGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    const bool same = i % 2 == 0;
    const Parity p = same ? first : (first == Parity::Odd ? Parity::Even : Parity::Odd);
    g.vertices.push_back({"s" + std::to_string(i), p});
  }
  const std::size_t m = ring ? n : n - 1;
  for (std::size_t i = 0; i < m; ++i) {
    const std::string a = "s" + std::to_string(i), b = "s" + std::to_string((i + 1) % n);
    Edge e{"l" + std::to_string(i), a, b};
    const bool a_even = g.parity(a) == Parity::Even;
    switch (o) {
      case LineOrientation::Leftward: e.tail = b, e.head = a; break;
      case LineOrientation::Rightward: break;
      case LineOrientation::EvenToOdd:
        if (!a_even) std::swap(e.tail, e.head);
        break;
      case LineOrientation::OddToEven:
        if (a_even) std::swap(e.tail, e.head);
        break;
    }
    g.edges.push_back(e);
  }
  for (const auto& v : g.vertices)
    if (v.parity == Parity::Even) g.orderings[v.id] = g.incident(v.id);
  return g;
}

}  // namespace

ClusterGraph line_graph(std::size_t n, Parity first, LineOrientation orientation) {
  if (n < 2) throw InputError("line needs at least 2 sites");
  return chain(n, first, orientation, false);
}

ClusterGraph ring_graph(std::size_t n, LineOrientation orientation) {
  if (n < 2 || n % 2 != 0) throw InputError("ring length must be even and at least 2 (got " + std::to_string(n) + ")");
  return chain(n, Parity::Odd, orientation, true);
}

ClusterGraph eoe_line() { return line_graph(3, Parity::Even, LineOrientation::EvenToOdd); }
ClusterGraph oeo_line() { return line_graph(3, Parity::Odd, LineOrientation::Leftward); }

ClusterGraph parse_graph_json(std::string_view text) {
  ClusterGraph g;
  try {
    const json j = json::parse(text);
    for (const auto& v : j.at("vertices")) {
      const auto p = v.at("parity").get<std::string>();
      if (p != "odd" && p != "even") throw InputError("graph file: parity must be 'odd' or 'even'");
      g.vertices.push_back({v.at("id").get<std::string>(), p == "odd" ? Parity::Odd : Parity::Even});
    }
    for (const auto& e : j.at("edges"))
      g.edges.push_back({e.at("id").get<std::string>(), e.at("tail").get<std::string>(), e.at("head").get<std::string>()});
    if (j.contains("orderings"))
      for (const auto& [v, order] : j["orderings"].items()) g.orderings[v] = order.get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("graph file: ") + e.what());
  }
  return g;
}

ClusterGraph load_graph_file(const std::string& path) { return parse_graph_json(read_text_file(path)); }

std::string graph_to_json(const ClusterGraph& g) {
  json j;
  json vs = json::array();
  for (const auto& v : g.vertices) vs.push_back({{"id", v.id}, {"parity", v.parity == Parity::Odd ? "odd" : "even"}});
  json es = json::array();
  for (const auto& e : g.edges) es.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  json os = json::object();
  for (const auto& v : g.vertices)
    if (auto it = g.orderings.find(v.id); it != g.orderings.end()) os[v.id] = it->second;
  j["vertices"] = vs;
  j["edges"] = es;
  j["orderings"] = os;
  return j.dump(1);
}

}  // namespace gcs
