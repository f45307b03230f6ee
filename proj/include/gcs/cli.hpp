#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "gcs/corpus.hpp"
#include "gcs/report.hpp"

namespace gcs {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitInputError = 2;

struct CorpusOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = kCorpusBudget;
  std::vector<std::string> groups = kCorpusGroups;
  double tol = 1e-10;
  std::size_t samples = 50;
  std::size_t peps_max_edges = 8;
  std::vector<std::string> peps_groups = {"Z2", "Z3", "S3"};
};

/// Builds every corpus instance and runs the engine cross-check, Born sums, the Z2 reference
/// comparison and (for small graphs) the PEPS comparison. Wall times sit under "timing".
Json corpus_report(const CorpusOptions& opt);

/// Entry point behind the `gcs` executable. args excludes the program name.
/// Returns 0 when every check passes, 1 on a failed check, 2 on invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcs
