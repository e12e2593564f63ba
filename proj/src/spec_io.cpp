#include "polyadic/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polyadic/catalog.hpp"

namespace polyadic {

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end())
        throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    return *it;
}

int require_int(const json& doc, const char* key) {
    const json& v = require_field(doc, key);
    if (!v.is_number_integer())
        throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::string require_string(const json& doc, const char* key) {
    const json& v = require_field(doc, key);
    if (!v.is_string())
        throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::string optional_label(const json& doc, const std::string& fallback) {
    auto it = doc.find("label");
    if (it == doc.end()) return fallback;
    if (!it->is_string()) throw Error(ErrorCode::ParseError, "field 'label' must be a string");
    return it->get<std::string>();
}

std::vector<int> int_array(const json& v, const char* what) {
    if (!v.is_array())
        throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(v.size());
    for (const json& e : v) {
        if (!e.is_number_integer())
            throw Error(ErrorCode::ParseError, std::string(what) + " must contain integers");
        out.push_back(e.get<int>());
    }
    return out;
}

PolyadicGroup build_spec(const json& doc, bool validate) {
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "spec document must be an object");
    const std::string kind = require_string(doc, "kind");

    if (kind == "builtin") return builtin_group(require_string(doc, "name"));

    if (kind == "cayley") {
        const int order = require_int(doc, "order");
        const json& rows = require_field(doc, "table");
        if (!rows.is_array() || static_cast<int>(rows.size()) != order)
            throw Error(ErrorCode::ParseError,
                        "'table' must be an array of " + std::to_string(order) + " rows");
        std::vector<std::vector<int>> table;
        table.reserve(rows.size());
        for (const json& row : rows) {
            table.push_back(int_array(row, "table row"));
            if (static_cast<int>(table.back().size()) != order)
                throw Error(ErrorCode::ParseError,
                            "each table row must have " + std::to_string(order) + " entries");
        }
        FiniteGroup base = group_from_table(table, optional_label(doc, "cayley"));
        return b_derived(base, base.identity, 2, base.label);
    }

    if (kind == "b_derived") {
        PolyadicGroup base_spec = build_spec(require_field(doc, "base"), validate);
        if (base_spec.arity != 2)
            throw Error(ErrorCode::ParseError, "'base' of a b_derived spec must be a 2-ary group");
        FiniteGroup base = as_binary_group(base_spec);
        const int b = require_int(doc, "b");
        const int arity = require_int(doc, "arity");
        if (b < 0 || b >= base.order)
            throw Error(ErrorCode::OutOfRange,
                        "b=" + std::to_string(b) + " out of range for order " +
                            std::to_string(base.order));
        if (arity < 2) throw Error(ErrorCode::ParseError, "arity must be at least 2");
        return b_derived(base, b, arity, optional_label(doc, ""));
    }

    if (kind == "nary_table") {
        const int arity = require_int(doc, "arity");
        const int order = require_int(doc, "order");
        std::vector<int> flat = int_array(require_field(doc, "table"), "table");
        const std::string label = optional_label(doc, "nary_table");
        return validate ? nary_from_table(arity, order, flat, label)
                        : nary_from_table_raw(arity, order, flat, label);
    }

    throw Error(ErrorCode::ParseError, "unknown spec kind '" + kind + "'");
}

PolyadicGroup parse_text(const std::string& text, bool validate) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return build_spec(doc, validate);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

PolyadicGroup group_from_spec_json(const std::string& text) { return parse_text(text, true); }

PolyadicGroup group_from_spec_json_raw(const std::string& text) {
    return parse_text(text, false);
}

PolyadicGroup group_from_spec_file(const std::string& path) {
    return parse_text(read_file(path), true);
}

PolyadicGroup group_from_spec_file_raw(const std::string& path) {
    return parse_text(read_file(path), false);
}

std::string cayley_spec_json(const FiniteGroup& G) {
    nlohmann::ordered_json doc;
    doc["kind"] = "cayley";
    doc["order"] = G.order;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int x = 0; x < G.order; ++x) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int y = 0; y < G.order; ++y) row.push_back(G.op(x, y));
        rows.push_back(std::move(row));
    }
    doc["table"] = std::move(rows);
    doc["label"] = G.label;
    return doc.dump(2) + "\n";
}

}  // namespace polyadic
