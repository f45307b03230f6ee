#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcs/symmetry.hpp"

namespace gcs {

using Json = nlohmann::ordered_json;

/// Ordered list of numeric checks; the first failing label is kept for the report.
class CheckList {
 public:
  /// Passes when residual ≤ tol.
  bool add(const std::string& label, double residual, double tol);
  /// Passes when residual > threshold (negative controls).
  bool add_above(const std::string& label, double residual, double threshold);
  void add(const NamedCheck& c);
  void merge(const CheckList& other, const std::string& prefix = "");

  bool pass() const { return first_failure_.empty(); }
  const std::string& first_failure() const { return first_failure_; }
  const std::vector<NamedCheck>& checks() const { return checks_; }
  double max_residual() const;
  Json to_json() const;

 private:
  std::vector<NamedCheck> checks_;
  std::vector<bool> above_;
  std::string first_failure_;
};

/// Worker count: GCS_THREADS when set to a positive integer, otherwise the hardware count.
std::size_t thread_count();

/// Runs f(i) for i in [0, n) on up to thread_count() threads. Results must be written to
/// per-index slots so that output order does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

/// Removes every "timing" member, recursively.
Json strip_timing(Json j);

}  // namespace gcs
