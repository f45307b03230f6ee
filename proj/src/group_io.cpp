#include "gcs/group_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gcs/catalog.hpp"

namespace gcs {

using json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

GroupSpec parse_group_json(std::string_view text, bool validate) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("group file: ") + e.what());
  }
  try {
    const std::size_t n = j.at("order").get<std::size_t>();
    std::vector<Element> mul;
    const auto& rows = j.at("mul");
    if (!rows.is_array() || rows.size() != n) throw InputError("group file: mul must have " + std::to_string(n) + " rows");
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n)
        throw InputError("group file: every mul row must have " + std::to_string(n) + " entries");
      for (const auto& x : row) {
        const auto v = x.get<long long>();
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw InputError("group file: mul entry out of range");
        mul.push_back(static_cast<Element>(v));
      }
    }
    std::vector<Element> inv;
    for (const auto& x : j.at("inv")) {
      const auto v = x.get<long long>();
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw InputError("group file: inv entry out of range");
      inv.push_back(static_cast<Element>(v));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    auto group = std::make_shared<FiniteGroup>(j.value("name", std::string("G")), n, mul, inv, labels);

    std::vector<Representation> irreps;
    for (const auto& r : j.at("irreps")) {
      const auto label = r.at("label").get<std::string>();
      const auto d = r.at("dim").get<std::size_t>();
      if (d == 0) throw InputError("group file: irrep '" + label + "' has zero dimension");
      const auto& mats = r.at("matrices");
      if (mats.size() != n)
        throw InputError("group file: irrep '" + label + "' needs one matrix per element");
      std::vector<Matrix> ms;
      for (const auto& m : mats) {
        if (m.size() != d * d)
          throw InputError("group file: irrep '" + label + "' matrix has " + std::to_string(m.size()) +
                           " entries, expected " + std::to_string(d * d));
        Matrix M(d, d);
        for (std::size_t k = 0; k < d * d; ++k) M(k / d, k % d) = cplx(m[k].at(0).get<double>(), m[k].at(1).get<double>());
        ms.push_back(std::move(M));
      }
      irreps.emplace_back(label, d, std::move(ms));
    }
    GroupSpec spec{group, std::make_shared<IrrepSet>(std::move(irreps))};
    if (validate) {
      auto rg = validate_group(*spec.group);
      if (!rg.ok()) throw InputError("group file: invalid group table: " + rg.violations.front());
      auto ri = validate_irreps(*spec.group, *spec.irreps);
      if (!ri.ok()) throw InputError("group file: invalid irreps: " + ri.violations.front());
    }
    return spec;
  } catch (const json::exception& e) {
    throw InputError(std::string("group file: ") + e.what());
  }
}

GroupSpec load_group_file(const std::string& path, bool validate) {
  return parse_group_json(read_text_file(path), validate);
}

std::string group_to_json(const GroupSpec& spec) {
  const auto& G = spec.G();
  const std::size_t n = G.order();
  json j;
  j["name"] = G.name();
  j["order"] = n;
  json rows = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(G.mul(Element(a), Element(b)));
    rows.push_back(row);
  }
  j["mul"] = rows;
  j["inv"] = G.inverse_table();
  j["labels"] = G.labels();
  json irreps = json::array();
  for (const auto& r : spec.reps()) {
    json jr;
    jr["label"] = r.label();
    jr["dim"] = r.dim();
    json mats = json::array();
    for (const auto& m : r.matrices()) {
      json flat = json::array();
      for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t k = 0; k < r.dim(); ++k) flat.push_back({m(i, k).real(), m(i, k).imag()});
      mats.push_back(flat);
    }
    jr["matrices"] = mats;
    irreps.push_back(jr);
  }
  j["irreps"] = irreps;
  return j.dump(1);
}

GroupSpec resolve_group(const std::string& name_or_path, bool validate) {
  for (const auto& n : catalog_names())
    if (n == name_or_path) return builtin_group(n);
  return load_group_file(name_or_path, validate);
}

}  // namespace gcs
