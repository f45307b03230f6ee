#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gcs/entanglement.hpp"
#include "gcs/state.hpp"

namespace gcs {

struct MeasurementOutcome {
  Basis basis = Basis::Group;
  Element element = 0;  // group basis
  std::size_t irrep = 0, i = 0, j = 0;  // representation basis
  double probability = 0;

  static MeasurementOutcome group(Element g) { return {Basis::Group, g}; }
  static MeasurementOutcome rep(std::size_t irrep, std::size_t i, std::size_t j) {
    return {Basis::Representation, 0, irrep, i, j};
  }
  /// "r2" for group outcomes, "std(0,1)" for representation outcomes.
  std::string label(const GroupSpec& spec) const;
};

/// Parse "g" (an element label) or "Γ(i,j)" / "Γ:i:j" (irrep label and indices).
MeasurementOutcome parse_outcome(const std::string& text, Basis basis, const GroupSpec& spec);

/// Seeded stream: u = (next() >> 11) · 2⁻⁵³ with std::mt19937_64.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Born probabilities of every outcome, in canonical order (elements, or (Γ,i,j)).
/// Representation basis needs a complete irrep set.
std::vector<MeasurementOutcome> outcome_distribution(const SparseState& s, std::string_view site, Basis basis);

/// Normalised projection onto an outcome. With `remove_site` the measured site is dropped.
/// Throws InputError if the outcome has zero probability.
SparseState post_measurement_state(const SparseState& s, std::string_view site, const MeasurementOutcome& outcome,
                                   bool remove_site = true);

std::pair<MeasurementOutcome, SparseState> measure(const SparseState& s, std::string_view site, Basis basis,
                                                   RandomSource& source);
std::pair<MeasurementOutcome, SparseState> measure_forced(const SparseState& s, std::string_view site,
                                                          const MeasurementOutcome& forced);

/// Schmidt rank, entropy and maximality across (side_a, rest).
inline SchmidtData analyze_entanglement(const SparseState& s, const std::vector<std::string>& side_a,
                                        std::uint64_t cap = kRdmCap) {
  return schmidt_data(s, side_a, cap);
}

}  // namespace gcs
