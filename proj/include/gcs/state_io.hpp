#pragma once

#include <string>
#include <string_view>

#include "gcs/state.hpp"

namespace gcs {

/// Text dump:
///   # gcs-state v1
///   group <name>
///   sites <id> <id> ...
///   (<label>,<label>,...) <re> <im>
/// one line per stored amplitude, keys in element-index order, amplitudes with 17
/// significant digits.
std::string dump_state(const SparseState& s);

/// Parse a dump produced by dump_state. The group must match by name.
SparseState parse_state(std::string_view text, const GroupSpec& spec);
/// Group name recorded in a dump header.
std::string dump_group_name(std::string_view text);

}  // namespace gcs
