#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "polyadic/catalog.hpp"
#include "polyadic/spec_io.hpp"

#include "corpus.hpp"

using namespace polyadic;
using testsupport::code_of;

namespace {

const char* kNaryTableSpec = R"({
  "kind": "nary_table",
  "arity": 3,
  "order": 2,
  "table": [1, 0, 0, 1, 0, 1, 1, 0],
  "label": "affine"
})";

}  // namespace

TEST_CASE("builtin spec") {
    PolyadicGroup G = group_from_spec_json(R"({"kind":"builtin","name":"der3_z2"})");
    CHECK(G.arity == 3);
    CHECK(G.order == 2);
    CHECK(to_full_table(G).table == to_full_table(builtin_group("der3_z2")).table);

    CHECK(code_of([] { group_from_spec_json(R"({"kind":"builtin","name":"nope"})"); }) ==
          ErrorCode::ParseError);
}

TEST_CASE("cayley spec") {
    PolyadicGroup G = group_from_spec_json(
        R"({"kind":"cayley","order":2,"table":[[0,1],[1,0]],"label":"two"})");
    CHECK(G.arity == 2);
    CHECK(G.order == 2);
    CHECK(as_binary_group(G).identity == 0);

    // A Latin square without identity is a math error, not a parse error.
    CHECK(code_of([] {
              group_from_spec_json(
                  R"({"kind":"cayley","order":3,"table":[[0,2,1],[1,0,2],[2,1,0]]})");
          }) == ErrorCode::NoIdentity);
}

TEST_CASE("b_derived spec") {
    const char* text = R"({
      "kind": "b_derived",
      "base": {"kind": "builtin", "name": "z4"},
      "b": 2,
      "arity": 3
    })";
    PolyadicGroup G = group_from_spec_json(text);
    CHECK(to_full_table(G).table == to_full_table(builtin_group("der3_b2_z4")).table);

    CHECK(code_of([] {
              group_from_spec_json(
                  R"({"kind":"b_derived","base":{"kind":"builtin","name":"der3_z2"},"b":0,"arity":3})");
          }) == ErrorCode::ParseError);
    CHECK(code_of([] {
              group_from_spec_json(
                  R"({"kind":"b_derived","base":{"kind":"builtin","name":"z4"},"b":9,"arity":3})");
          }) == ErrorCode::OutOfRange);
}

TEST_CASE("nary_table spec validates unless raw") {
    PolyadicGroup G = group_from_spec_json(kNaryTableSpec);
    CHECK(G.label == "affine");
    CHECK(G.order == 2);

    std::string corrupted(kNaryTableSpec);
    corrupted.replace(corrupted.find("[1, 0"), 5, "[0, 0");
    CHECK(code_of([&] { group_from_spec_json(corrupted); }) == ErrorCode::AxiomViolation);
    CHECK_NOTHROW(group_from_spec_json_raw(corrupted));
}

TEST_CASE("structural errors are parse errors") {
    for (const char* text : {
             "not json at all",
             R"({"kind":"mystery"})",
             R"({"order":2,"table":[[0,1],[1,0]]})",
             R"({"kind":"cayley","order":2})",
             R"({"kind":"cayley","order":2,"table":[[0,1],[1,"x"]]})",
             R"({"kind":"nary_table","arity":3,"order":2,"table":"flat"})",
             R"([1,2,3])",
         }) {
        INFO(text);
        CHECK(code_of([&] { group_from_spec_json(text); }) == ErrorCode::ParseError);
    }

    CHECK(code_of([] {
              group_from_spec_json(R"({"kind":"cayley","order":2,"table":[[0,7],[1,0]]})");
          }) == ErrorCode::OutOfRange);
}

TEST_CASE("file round trip") {
    std::string path = "spec_roundtrip_test.json";
    {
        std::ofstream out(path);
        out << cayley_spec_json(symmetric_group(3));
    }
    PolyadicGroup G = group_from_spec_file(path);
    std::remove(path.c_str());
    CHECK(G.arity == 2);
    CHECK(G.order == 6);
    FiniteGroup back = as_binary_group(G);
    CHECK(back.cayley == symmetric_group(3).cayley);

    CHECK(code_of([] { group_from_spec_file("no_such_file_here.json"); }) ==
          ErrorCode::ParseError);
}

TEST_CASE("cayley_spec_json emits a parseable document") {
    for (int m : {1, 2, 4}) {
        std::string doc = cayley_spec_json(cyclic_group(m));
        PolyadicGroup G = group_from_spec_json(doc);
        CHECK(G.order == m);
        CHECK(as_binary_group(G).cayley == cyclic_group(m).cayley);
    }
}
