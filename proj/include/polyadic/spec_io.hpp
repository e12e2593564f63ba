#pragma once

#include <string>

#include "polyadic/narygroup.hpp"

namespace polyadic {

/// Parses a JSON group specification and constructs the group with full
/// validation. Supported kinds:
///   {"kind":"cayley","order":m,"table":[[..]],"label":..}
///   {"kind":"b_derived","base":{..spec..},"b":i,"arity":n,"label":..}
///   {"kind":"nary_table","arity":n,"order":m,"table":[..flat..],"label":..}
///   {"kind":"builtin","name":".."}
/// Structural problems (missing fields, wrong types, indices out of range)
/// throw ParseError or another input error; mathematically invalid content
/// throws the corresponding check error.
PolyadicGroup group_from_spec_json(const std::string& text);

/// Same parse, but n-ary tables are only range-checked, so callers can run
/// the axiom checks themselves and report violations instead of throwing.
PolyadicGroup group_from_spec_json_raw(const std::string& text);

PolyadicGroup group_from_spec_file(const std::string& path);
PolyadicGroup group_from_spec_file_raw(const std::string& path);

/// The document for a 2-ary "cayley" spec of an ordinary group; inverse of
/// parsing, used by the cover dump.
std::string cayley_spec_json(const FiniteGroup& G);

}  // namespace polyadic
