// Acceptance run: one PASS/FAIL line per criterion AC1..AC9. Exit status 1 if any fails.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>

#include "gcs/builder.hpp"
#include "gcs/catalog.hpp"
#include "gcs/cli.hpp"
#include "gcs/corpus.hpp"
#include "gcs/measurement.hpp"
#include "gcs/peps.hpp"
#include "gcs/quantum_double.hpp"
#include "gcs/stabilizer.hpp"
#include "gcs/symmetry.hpp"

using namespace gcs;

namespace {

using Clock = std::chrono::steady_clock;

double peak_rss_gb() {
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  return double(ru.ru_maxrss) / (1024.0 * 1024.0);  // ru_maxrss is in KiB on Linux
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Runs one criterion, adding the wall-time limit as a final check.
bool criterion(const std::string& id, double limit_s, const std::function<void(CheckList&)>& body) {
  CheckList checks;
  const auto t0 = Clock::now();
  std::string error;
  try {
    body(checks);
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  // Numerical residuals only: skips time and memory limits and passing negative controls.
  double worst = 0;
  for (const auto& k : checks.checks())
    if (k.tol < 1.0 && !(k.pass && k.residual > k.tol)) worst = std::max(worst, k.residual);
  checks.add("wall time < " + fmt(limit_s) + " s", secs, limit_s);
  const bool pass = error.empty() && checks.pass();
  std::cout << id << ' ' << (pass ? "PASS" : "FAIL") << "  checks=" << checks.checks().size()
            << " max_residual=" << fmt(worst) << " time=" << fmt(secs) << "s";
  if (!error.empty()) std::cout << "  error: " << error;
  if (!checks.pass()) std::cout << "  first failure: " << checks.first_failure();
  std::cout << std::endl;
  return pass;
}

bool ac1() {
  return criterion("AC1", 1.0, [](CheckList& c) {
    for (const auto& name : catalog_names()) {
      const GroupSpec spec = builtin_group(name);
      const auto g = validate_group(spec.G());
      const auto r = validate_irreps(spec.G(), spec.reps());
      c.add(name + " violations", double(g.violations.size() + r.violations.size()), 0);
      for (const auto& [k, v] : g.residuals) c.add(name + " " + k, v, 1e-12);
      for (const auto& [k, v] : r.residuals) c.add(name + " " + k, v, 1e-12);
    }
  });
}

bool ac2() {
  return criterion("AC2", 1.0, [](CheckList& c) {
    std::mt19937_64 rng(2);
    for (const auto& name : catalog_names()) {
      const GroupSpec spec = builtin_group(name);
      const Register reg(spec, {"q"});
      double worst = 0;
      for (int t = 0; t < 100; ++t) {
        const SparseState s = random_dense_state(reg, rng);
        const SparseState back = from_site_table(change_basis(change_basis(s, "q", Basis::Representation), Basis::Group));
        worst = std::max(worst, std::abs(1.0 - fidelity(s, back)));
      }
      c.add(name + " group->rep->group", worst, 1e-12);
    }
  });
}

bool ac3() {
  return criterion("AC3", 5.0, [](CheckList& c) {
    const GroupSpec z2 = builtin_group("Z2");
    std::size_t used = 0;
    for (const auto& cg : corpus_graphs(0)) {
      if (used == 10) break;
      if (cg.graph.vertices.size() > 20) continue;
      ++used;
      const SparseState psi = build_cluster_state(cg.graph, z2);
      const auto ref = build_qubit_reference(cg.graph, z2);
      c.add(cg.name + " CSS = H_even CPHASE", std::abs(1.0 - fidelity(psi, ref.css)), 1e-12);
      c.add(cg.name + " CSS stabilizers", verify(qubit_css_stabilizers(cg.graph, z2), psi).max_residual, 1e-12);
    }
    c.add("graphs used", double(10 - used), 0);
  });
}

bool ac4() {
  return criterion("AC4", 120.0, [](CheckList& c) {
    const auto graphs = corpus_graphs(0);
    const auto instances = corpus_instances(graphs, kCorpusGroups, kCorpusBudget);
    std::vector<CrossCheck> results(instances.size());
    parallel_for(instances.size(), [&](std::size_t i) {
      const GroupSpec spec = builtin_group(instances[i].group);
      const ClusterGraph& g = instances[i].graph->graph;
      std::mt19937_64 rng(1000 + i);
      results[i] = cross_check(g, spec, build_cluster_state(g, spec), rng, 1e-10, 50);
    });
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const std::string id = instances[i].graph->name + "/" + instances[i].group;
      c.add(id + " propagated = closed form", results[i].max_deviation, 1e-10);
      c.add(id + " propagated fix state", results[i].max_propagated_residual, 1e-10);
      c.add(id + " closed form fix state", results[i].max_closed_residual, 1e-10);
    }
    std::cout << "    (" << instances.size() << " instances over " << graphs.size() << " graphs)" << std::endl;
  });
}

bool ac5() {
  return criterion("AC5", 5.0, [](CheckList& c) {
    for (const auto& name : catalog_names()) {
      const GroupSpec spec = builtin_group(name);
      const auto& G = spec.G();
      const double n = double(G.order());
      const SparseState eoe = build_cluster_state(eoe_line(), spec);
      const SparseState oeo = build_cluster_state(oeo_line(), spec);
      const Register r3 = eoe.reg();
      std::vector<Key> ke, ko;
      std::vector<cplx> ae, ao;
      for (Element g = 0; g < G.order(); ++g) {
        ke.push_back(r3.make_key({g, g, g}));
        ae.push_back(1.0 / std::sqrt(n));
        for (Element h = 0; h < G.order(); ++h) {
          ko.push_back(oeo.reg().make_key({g, G.mul(g, G.inv(h)), h}));
          ao.push_back(1.0 / n);
        }
      }
      c.add(name + " eoe closed form", std::abs(1.0 - fidelity(eoe, SparseState(r3, ke, ae))), 1e-12);
      c.add(name + " oeo closed form", std::abs(1.0 - fidelity(oeo, SparseState(oeo.reg(), ko, ao))), 1e-12);

      for (Element g = 0; g < G.order(); ++g) {
        const auto e1 = analyze_entanglement(measure_forced(eoe, "s1", MeasurementOutcome::group(g)).second, {"s0"});
        c.add(name + " eoe group outcome " + G.label(g) + " product (rank-1)", double(e1.rank - 1), 0);
        const auto e2 = analyze_entanglement(measure_forced(oeo, "s1", MeasurementOutcome::group(g)).second, {"s0"});
        c.add(name + " oeo group outcome " + G.label(g) + " rank |G|", std::abs(double(e2.rank) - n), 0);
        c.add(name + " oeo group outcome " + G.label(g) + " maximal", e2.maximal ? 0.0 : 1.0, 0);
      }
      if (G.is_abelian())
        for (std::size_t k = 0; k < spec.reps().size(); ++k) {
          const auto e = analyze_entanglement(
              measure_forced(eoe, "s1", MeasurementOutcome::rep(k, 0, 0)).second, {"s0"});
          c.add(name + " eoe rep outcome " + spec.reps()[k].label() + " Schmidt spread", e.spread, 1e-12);
        }
    }
    const GroupSpec s3 = builtin_group("S3");
    const std::size_t std2 = *s3.reps().find("std");
    const SparseState oeo = build_cluster_state(oeo_line(), s3), eoe = build_cluster_state(eoe_line(), s3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const std::string lbl = "std(" + std::to_string(i) + "," + std::to_string(j) + ")";
        const auto o = analyze_entanglement(measure_forced(oeo, "s1", MeasurementOutcome::rep(std2, i, j)).second, {"s0"});
        c.add("S3 oeo " + lbl + " rank 2", std::abs(double(o.rank) - 2.0), 0);
        c.add("S3 oeo " + lbl + " entropy 1", std::abs(o.entropy - 1.0), 1e-8);
        const auto e = analyze_entanglement(measure_forced(eoe, "s1", MeasurementOutcome::rep(std2, i, j)).second, {"s0"});
        c.add_above("S3 eoe " + lbl + " Schmidt spread", e.spread, 1e-3);
      }
  });
}

bool ac6() {
  return criterion("AC6", 30.0, [](CheckList& c) {
    std::mt19937_64 rng(6);
    for (const char* name : {"Z2", "Z3", "S3"})
      for (std::size_t n : {4, 6, 8}) {
        const SymmetryReport r = verify_symmetry_algebra(builtin_group(name), n, rng, 1e-10, 20);
        for (const auto& k : r.checks)
          c.add(NamedCheck{std::string(name) + " ring" + std::to_string(n) + " " + k.label, k.residual, k.tol, k.pass,
                           k.informational});
      }
  });
}

bool ac7() {
  return criterion("AC7", 60.0, [](CheckList& c) {
    const auto graphs = corpus_graphs(0);
    std::size_t compared = 0;
    for (const auto& cg : graphs) {
      if (cg.graph.edges.size() > 8) continue;
      for (const char* name : {"Z2", "Z3", "S3"}) {
        const PepsComparison pc = compare_to_circuit(cg.graph, builtin_group(name));
        c.add(cg.name + "/" + name + " PEPS = circuit", std::abs(1.0 - pc.fidelity), 1e-10);
        ++compared;
      }
    }
    const GroupSpec s3 = builtin_group("S3");
    const double f = fidelity(build_cluster_state(vee_graph(false), s3), contract(build_peps(vee_graph(true), s3)).state);
    c.add_above("scrambled ordering detected (1 - fidelity)", 1.0 - f, 1e-6);
    std::cout << "    (" << compared << " comparisons; scrambled fidelity " << fmt(f) << ")" << std::endl;
  });
}

bool ac8() {
  const double rss_before = peak_rss_gb();
  bool s3_fast = true;
  const bool ok = criterion("AC8", 300.0, [&](CheckList& c) {
    const QdLattice l = build_qd_lattice(2, 2);
    for (const char* name : {"Z2", "Z3", "S3"}) {
      const GroupSpec spec = builtin_group(name);
      const auto t0 = Clock::now();
      const SparseState psi = prepare_qd_state(l, spec);
      const auto v = verify(qd_stabilizers(l, spec.G()), psi);
      c.add(std::string(name) + " A/B stabilizers", v.max_residual, 1e-10);
      if (std::string(name) == "S3") {
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        c.add("S3 preparation time < 300 s", secs, 300);
        c.add("peak RSS < 4 GB", peak_rss_gb(), 4.0);
        s3_fast = secs < 300;
      }
      if (std::string(name) == "Z2") {
        const auto cmp = compare_toric_sectors(l, psi, toric_code_reference(l, spec));
        c.add("Z2 toric reference per sector", 1.0 - cmp.min_fidelity, 1e-10);
        c.add("Z2 sectors compared", std::abs(double(cmp.sectors_compared) - 4.0), 0);
      }
      std::map<std::string, Element> all_e;
      for (const auto& p : l.plaquettes) all_e[p.id] = 0;
      RandomSource src0(0);
      const QdMeasured forced = prepare_qd_with_measurement(l, spec, src0, all_e);
      c.add(std::string(name) + " m=e reproduces projection", std::abs(1.0 - fidelity(forced.state, psi)), 1e-10);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        RandomSource src(seed);
        const QdMeasured m = prepare_qd_with_measurement(l, spec, src);
        c.add(std::string(name) + " seed " + std::to_string(seed) + " shifted stabilizers",
              verify(m.stabilizers, m.state).max_residual, 1e-10);
      }
    }
    const GroupSpec s3 = builtin_group("S3");
    const Element r = *s3.G().find("r");
    const ClassCheck cc = conjugacy_class_projection_check(s3, conjugacy_classes(s3.G()).class_of[r], r);
    for (const auto& k : cc.checks) {
      // Negative controls pass by exceeding their threshold.
      if (k.pass && k.residual > k.tol)
        c.add_above("S3 class {r,r2}: " + k.label, k.residual, k.tol);
      else
        c.add("S3 class {r,r2}: " + k.label, k.residual, k.tol);
    }
  });
  std::cout << "    (peak RSS " << fmt(std::max(rss_before, peak_rss_gb())) << " GB)" << std::endl;
  return ok && s3_fast;
}

bool ac9() {
  return criterion("AC9", 120.0, [](CheckList& c) {
    CorpusOptions opt;
    opt.seed = 9;
    const std::string a = strip_timing(corpus_report(opt)).dump();
    const std::string b = strip_timing(corpus_report(opt)).dump();
    c.add("identical reports (bytes differing)", a == b ? 0.0 : 1.0, 0);
    c.add("report non-empty", a.size() > 1000 ? 0.0 : 1.0, 0);
  });
}

}  // namespace

int main() {
  bool all = true;
  for (auto f : {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9}) all = f() && all;
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
