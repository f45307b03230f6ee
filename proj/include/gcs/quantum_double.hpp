#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcs/graph.hpp"
#include "gcs/measurement.hpp"
#include "gcs/stabilizer.hpp"
#include "gcs/symmetry.hpp"

namespace gcs {

/// Torus of L1 × L2 stars. Coordinates grow rightwards (x) and downwards (y); plaquette
/// (x,y) has star (x,y) at its top-left corner. Plaquette (x,y) circulates clockwise when
/// x+y is even, anticlockwise otherwise.
struct QdLink {
  std::string id;  // h{x}_{y} joins stars (x,y),(x+1,y); v{x}_{y} joins (x,y),(x,y+1)
  bool horizontal = true;
  int x = 0, y = 0;
  std::string tail, head;  // star ids
};

struct QdPlaquette {
  std::string id;  // p{x}_{y}
  int x = 0, y = 0;
  bool clockwise = true;
  std::string up, left, down, right;  // boundary link ids
  /// Star where the flux word starts and ends: A_g there conjugates the flux.
  std::string base;
};

struct QdStar {
  std::string id;  // s{x}_{y}
  int x = 0, y = 0;
  bool h_type = true;  // horizontal links point in
  std::string up, left, down, right;
};

struct QdLattice {
  int L1 = 0, L2 = 0;
  std::vector<QdLink> links;
  std::vector<QdPlaquette> plaquettes;
  std::vector<QdStar> stars;

  const QdLink& link(std::string_view id) const;
  std::vector<std::string> link_ids() const;
};

/// Throws InputError unless both dimensions are even and at least 2.
QdLattice build_qd_lattice(int L1, int L2);

/// Recomputes circulation and star tags from link directions; lists mismatches.
ValidationReport validate_qd_lattice(const QdLattice& l);

/// Cluster graph at half lattice spacing: one odd site per link (same id), one red even
/// site per plaquette (same id), one blue even site per star (same id).
struct QdClusterMap {
  ClusterGraph graph;
  std::vector<std::string> red, blue, odd;
};

QdClusterMap qd_cluster_graph(const QdLattice& l);

/// A_g(s) for every star and g, and B_e(p) for every plaquette, on the link register.
StabilizerSet qd_stabilizers(const QdLattice& l, const FiniteGroup& G);

ConditionalMonomial qd_star(const QdStar& s, Element g);
ConditionalMonomial qd_plaquette(const QdPlaquette& p);
/// Σ T-products over link values whose red-site word equals m (flux after measuring m).
ConditionalMonomial qd_shifted_plaquette(const QdPlaquette& p, Element m);

/// Cluster state, reds projected onto |e>, blues onto |I>, normalised; register = link ids.
SparseState prepare_qd_state(const QdLattice& l, const GroupSpec& spec);

struct QdMeasured {
  std::vector<std::pair<std::string, Element>> outcomes;  // plaquette id, m_p
  SparseState state;
  StabilizerSet stabilizers;  // shifted plaquettes and the surviving star operators
};

/// Blues projected onto |I>, reds measured in the group basis in plaquette order.
/// Outcomes listed in `forced` are imposed instead of sampled (InputError if impossible).
QdMeasured prepare_qd_with_measurement(const QdLattice& l, const GroupSpec& spec, RandomSource& source,
                                       const std::map<std::string, Element>& forced = {});

/// Star operators obtained from the cluster stabilizers: the product of the propagated odd
/// stabilizers on the legs of s, with blue sites absorbed and red sites restricted to the
/// given outcomes (e when absent).
ConditionalMonomial star_from_propagation(const QdLattice& l, const QdClusterMap& map, const StabilizerSet& left,
                                          const StabilizerSet& right, const QdStar& s, Element g,
                                          const std::map<std::string, Element>& outcomes);

/// Toric code ground state built without the cluster: ⊗|+> projected by Π(1+B_p)/2.
SparseState toric_code_reference(const QdLattice& l, const GroupSpec& z2);

struct SectorComparison {
  double min_fidelity = 1;
  std::vector<std::pair<std::string, double>> sector_weights;  // "++", "+-", ... for psi
  std::size_t sectors_compared = 0;
};

/// Compares psi and ref inside each joint eigenspace of the two noncontractible Z loops.
SectorComparison compare_toric_sectors(const QdLattice& l, const SparseState& psi, const SparseState& ref);

struct ClassCheck {
  double delta_state_fidelity = 0;  // C = {e} against the explicit δ-constrained state
  double class_residual = 0;        // max_g ‖A^h_g ψ − ψ‖ with reds in the class state
  double negative_residual = 0;     // same, one red fixed to a single element
  bool pass = true;
  std::vector<NamedCheck> checks;
};

/// Single h-type star with its four red neighbours: project the reds onto the uniform
/// superposition over class `cls` and check A^h_g. The negative control fixes the
/// bottom-right red to `negative` (not class uniform) and leaves the rest in the class state.
ClassCheck conjugacy_class_projection_check(const GroupSpec& spec, std::size_t cls, Element negative,
                                            double tol = 1e-10);

}  // namespace gcs
