#pragma once

#include <string>
#include <vector>

#include "gcs/state.hpp"

namespace gcs {

inline constexpr std::uint64_t kRdmCap = 4096;

/// ρ over `kept` sites (in the listed order) of the normalised state.
/// Throws BudgetError when |G|^|kept| exceeds `cap`.
Matrix reduced_density_matrix(const SparseState& s, const std::vector<std::string>& kept, std::uint64_t cap = kRdmCap);

struct SchmidtData {
  std::vector<double> values;  // descending, for the normalised state
  std::size_t rank = 0;        // values above 1e-10
  double entropy = 0;          // bits
  bool maximal = false;        // all nonzero values equal within 1e-8
  /// Largest minus smallest coefficient over min(|G|^|A|, |G|^|B|) coefficients, missing
  /// ones counted as zero. Zero exactly when the state is maximally entangled on the full space.
  double spread = 0;
};

/// Schmidt decomposition across (side_a, rest). The smaller side must fit the cap.
SchmidtData schmidt_data(const SparseState& s, const std::vector<std::string>& side_a, std::uint64_t cap = kRdmCap);

}  // namespace gcs
