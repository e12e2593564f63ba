#pragma once

#include <string>
#include <vector>

#include "polyadic/narygroup.hpp"

namespace polyadic {

/// Names of the built-in example groups, in listing order.
const std::vector<std::string>& builtin_names();

/// The built-in group for `name`; ParseError for unknown names.
PolyadicGroup builtin_group(const std::string& name);

}  // namespace polyadic
