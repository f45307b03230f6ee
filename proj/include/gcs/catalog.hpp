#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gcs/group.hpp"

namespace gcs {

/// Names accepted by builtin_group: Z2..Z8, S3, D4, Q8.
std::vector<std::string> catalog_names();

/// Catalog group with its complete irrep set.
///
/// Element conventions:
///   Zn  element k is k mod n; irrep "kq" sends k to exp(2πi qk/n) (Z2 uses "+" and "-").
///   S3  index a+3b is r^a s^b with r³ = s² = e, s r s = r⁻¹; irreps trivial, sign, std.
///   D4  index a+4b is r^a s^b with r⁴ = s² = e; irreps trivial, A2, B1, B2, E.
///   Q8  indices 0..7 are 1, -1, i, -i, j, -j, k, -k; irreps trivial, i, j, k, E.
/// Throws InputError for unknown names.
GroupSpec builtin_group(std::string_view name);

}  // namespace gcs
