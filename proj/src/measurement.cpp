#include "gcs/measurement.hpp"

#include <cmath>

namespace gcs {

std::string MeasurementOutcome::label(const GroupSpec& spec) const {
  if (basis == Basis::Group) return spec.G().label(element);
  return spec.reps()[irrep].label() + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

MeasurementOutcome parse_outcome(const std::string& text, Basis basis, const GroupSpec& spec) {
  if (basis == Basis::Group) {
    auto g = spec.G().find(text);
    if (!g) throw InputError("unknown element '" + text + "'");
    return MeasurementOutcome::group(*g);
  }
  std::string name;
  std::size_t i = 0, j = 0;
  const auto open = text.find('(');
  const auto colon = text.find(':');
  try {
    if (open != std::string::npos && text.back() == ')') {
      name = text.substr(0, open);
      const auto comma = text.find(',', open);
      if (comma == std::string::npos) throw InputError("");
      i = std::stoul(text.substr(open + 1, comma - open - 1));
      j = std::stoul(text.substr(comma + 1, text.size() - comma - 2));
    } else if (colon != std::string::npos) {
      name = text.substr(0, colon);
      const auto c2 = text.find(':', colon + 1);
      if (c2 == std::string::npos) throw InputError("");
      i = std::stoul(text.substr(colon + 1, c2 - colon - 1));
      j = std::stoul(text.substr(c2 + 1));
    } else {
      name = text;
    }
  } catch (const std::exception&) {
    throw InputError("malformed representation outcome '" + text + "' (expected label(i,j))");
  }
  auto r = spec.reps().find(name);
  if (!r) throw InputError("unknown irrep '" + name + "'");
  if (i >= spec.reps()[*r].dim() || j >= spec.reps()[*r].dim()) throw InputError("outcome indices out of range");
  return MeasurementOutcome::rep(*r, i, j);
}

std::vector<MeasurementOutcome> outcome_distribution(const SparseState& s, std::string_view site, Basis basis) {
  const double n2 = s.norm2();
  if (!(n2 > 0)) throw std::domain_error("measurement of the zero state");
  const SiteTable t = change_basis(s, site, basis);
  std::vector<MeasurementOutcome> out;
  if (basis == Basis::Group) {
    for (Eigen::Index c = 0; c < t.coeffs.cols(); ++c) {
      auto o = MeasurementOutcome::group(Element(c));
      o.probability = t.coeffs.col(c).squaredNorm() / n2;
      out.push_back(o);
    }
    return out;
  }
  const auto labels = rep_labels(s.reg().spec());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    auto o = MeasurementOutcome::rep(labels[c].irrep, labels[c].i, labels[c].j);
    o.probability = t.coeffs.col(Eigen::Index(c)).squaredNorm() / n2;
    out.push_back(o);
  }
  return out;
}

namespace {

std::vector<cplx> outcome_vector(const GroupSpec& spec, const MeasurementOutcome& o) {
  const std::size_t n = spec.G().order();
  std::vector<cplx> phi(n, 0.0);
  if (o.basis == Basis::Group) {
    phi.at(o.element) = 1.0;
    return phi;
  }
  if (rep_labels(spec).size() != n) throw InputError("representation-basis measurement needs a complete irrep set");
  const auto& r = spec.reps()[o.irrep];
  const double c = std::sqrt(double(r.dim()) / double(n));
  for (std::size_t g = 0; g < n; ++g) phi[g] = c * r.entry(Element(g), o.i, o.j);
  return phi;
}

}  // namespace

SparseState post_measurement_state(const SparseState& s, std::string_view site, const MeasurementOutcome& outcome,
                                   bool remove_site) {
  const auto phi = outcome_vector(s.reg().spec(), outcome);
  SparseState reduced = project_site(s, site, phi);
  if (!(reduced.norm2() > 1e-24 * s.norm2())) throw InputError("measurement outcome has zero probability");
  if (remove_site) return reduced.normalized();
  // Re-insert the site in state |φ>.
  const auto& reg = s.reg();
  const std::size_t pos = reg.index_of(site);
  const std::size_t n = reg.G().order();
  const unsigned bits = reg.bits();
  const unsigned low_bits = static_cast<unsigned>((reg.size() - 1 - pos) * bits);
  std::vector<Key> keys;
  std::vector<cplx> amps;
  for (std::size_t x = 0; x < reduced.size(); ++x) {
    const Key rk = reduced.keys()[x];
    const Key low = low_bits == 0 ? Key(0) : (rk & ((Key(1) << low_bits) - 1));
    const Key high = low_bits >= 128 ? Key(0) : (rk >> low_bits);
    const Key hi = low_bits + bits >= 128 ? Key(0) : (high << (low_bits + bits));
    for (std::size_t g = 0; g < n; ++g) {
      if (phi[g] == cplx(0)) continue;
      keys.push_back(hi | (Key(g) << low_bits) | low);
      amps.push_back(phi[g] * reduced.amps()[x]);
    }
  }
  return SparseState(reg, std::move(keys), std::move(amps)).normalized();
}

std::pair<MeasurementOutcome, SparseState> measure(const SparseState& s, std::string_view site, Basis basis,
                                                   RandomSource& source) {
  const auto dist = outcome_distribution(s, site, basis);
  const double u = source.uniform();
  double acc = 0;
  std::size_t chosen = dist.size();
  std::size_t last_nonzero = 0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (dist[k].probability > 0) last_nonzero = k;
    acc += dist[k].probability;
    if (u < acc && dist[k].probability > 0) {
      chosen = k;
      break;
    }
  }
  if (chosen == dist.size()) chosen = last_nonzero;  // rounding at the top end
  return {dist[chosen], post_measurement_state(s, site, dist[chosen])};
}

std::pair<MeasurementOutcome, SparseState> measure_forced(const SparseState& s, std::string_view site,
                                                          const MeasurementOutcome& forced) {
  const auto dist = outcome_distribution(s, site, forced.basis);
  MeasurementOutcome o = forced;
  for (const auto& d : dist)
    if (d.element == forced.element && d.irrep == forced.irrep && d.i == forced.i && d.j == forced.j)
      o.probability = d.probability;
  if (!(o.probability > 1e-14))
    throw InputError("forced outcome '" + forced.label(s.reg().spec()) + "' has zero probability");
  return {o, post_measurement_state(s, site, o)};
}

}  // namespace gcs
