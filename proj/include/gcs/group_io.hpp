#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gcs/group.hpp"

namespace gcs {

/// Parse the JSON group format:
///   {name, order, mul: row-major table, inv, labels, irreps: [{label, dim, matrices}]}
/// where each irrep's `matrices` holds one row-major list of [re, im] pairs per element.
/// With `validate`, rejects tables or irreps failing validate_group / validate_irreps.
GroupSpec parse_group_json(std::string_view text, bool validate = true);
GroupSpec load_group_file(const std::string& path, bool validate = true);
std::string group_to_json(const GroupSpec& spec);

/// Catalog name if recognised, otherwise a path to a group file.
GroupSpec resolve_group(const std::string& name_or_path, bool validate = true);

std::string read_text_file(const std::string& path);
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace gcs
