#include "polyadic/catalog.hpp"

namespace polyadic {

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "trivial", "z2", "z4", "s3", "der3_z2", "der3_b1_z2",
        "der3_s3", "der4_z3", "der3_b2_z4",
    };
    return names;
}

PolyadicGroup builtin_group(const std::string& name) {
    if (name == "trivial") return b_derived(cyclic_group(1), 0, 2, name);
    if (name == "z2") return b_derived(cyclic_group(2), 0, 2, name);
    if (name == "z4") return b_derived(cyclic_group(4), 0, 2, name);
    if (name == "s3") return b_derived(symmetric_group(3), 0, 2, name);
    if (name == "der3_z2") return b_derived(cyclic_group(2), 0, 3, name);
    if (name == "der3_b1_z2") return b_derived(cyclic_group(2), 1, 3, name);
    if (name == "der3_s3") return b_derived(symmetric_group(3), 0, 3, name);
    if (name == "der4_z3") return b_derived(cyclic_group(3), 0, 4, name);
    if (name == "der3_b2_z4") return b_derived(cyclic_group(4), 2, 3, name);
    throw Error(ErrorCode::ParseError, "unknown builtin group '" + name + "'");
}

}  // namespace polyadic
