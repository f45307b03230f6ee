#include "gcs/state_io.hpp"

#include <cstdio>
#include <sstream>

namespace gcs {

std::string dump_state(const SparseState& s) {
  const auto& reg = s.reg();
  std::string out = "# gcs-state v1\ngroup " + reg.G().name() + "\nsites";
  for (const auto& id : reg.sites()) out += " " + id;
  out += "\n";
  char buf[96];
  for (std::size_t x = 0; x < s.size(); ++x) {
    out += "(";
    for (std::size_t i = 0; i < reg.size(); ++i) {
      if (i) out += ",";
      out += reg.G().label(reg.get(s.keys()[x], i));
    }
    std::snprintf(buf, sizeof buf, ") %.17g %.17g\n", s.amps()[x].real(), s.amps()[x].imag());
    out += buf;
  }
  return out;
}

std::string dump_group_name(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("group ", 0) == 0) return line.substr(6);
  throw InputError("state dump has no group line");
}

SparseState parse_state(std::string_view text, const GroupSpec& spec) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> sites;
  bool have_sites = false;
  std::vector<Key> keys;
  std::vector<cplx> amps;
  Register reg;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("group ", 0) == 0) {
      if (line.substr(6) != spec.G().name())
        throw InputError("state dump is for group '" + line.substr(6) + "', not '" + spec.G().name() + "'");
      continue;
    }
    if (line.rfind("sites", 0) == 0) {
      std::istringstream ss(line.substr(5));
      std::string id;
      while (ss >> id) sites.push_back(id);
      reg = Register(spec, sites);
      have_sites = true;
      continue;
    }
    if (!have_sites) throw InputError("state dump line " + std::to_string(lineno) + ": amplitude before sites line");
    const auto close = line.find(')');
    if (line[0] != '(' || close == std::string::npos)
      throw InputError("state dump line " + std::to_string(lineno) + ": malformed key");
    std::vector<Element> values;
    std::string labels = line.substr(1, close - 1);
    std::size_t start = 0;
    while (!sites.empty()) {
      const auto comma = labels.find(',', start);
      const auto lab = labels.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      auto g = spec.G().find(lab);
      if (!g) throw InputError("state dump line " + std::to_string(lineno) + ": unknown element '" + lab + "'");
      values.push_back(*g);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    std::istringstream ss(line.substr(close + 1));
    double re = 0, im = 0;
    if (!(ss >> re >> im)) throw InputError("state dump line " + std::to_string(lineno) + ": malformed amplitude");
    keys.push_back(reg.make_key(values));
    amps.emplace_back(re, im);
  }
  if (!have_sites) throw InputError("state dump has no sites line");
  return {reg, std::move(keys), std::move(amps)};
}

}  // namespace gcs
