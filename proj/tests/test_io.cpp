#include <functional>

#include "doctest.h"
#include "gentle/io.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace gentle;
using namespace gentle::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvariantBreach;
}

std::vector<std::string> keys(const std::string& doc) {
    std::vector<std::string> out;
    const auto j = nlohmann::ordered_json::parse(doc);
    for (const auto& [k, v] : j.items()) out.push_back(k);
    return out;
}

}  // namespace

TEST_CASE("quiver spec parsing") {
    const QuiverSpec s = parse_quiver_spec(R"({"parameters": [1, 1, 1, 1]})");
    CHECK(s.parameters == Parameters{1, 1, 1, 1});
    CHECK(s.labels.vertex_labels.empty());

    CHECK(kind_of([] { parse_quiver_spec("{"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_quiver_spec(R"({"parameters": [1, 1, 1]})"); }) == ErrorKind::InvalidSpec);
    CHECK(kind_of([] { parse_quiver_spec(R"({"parameters": [1, 1, 1, 1], "colour": 3})"); }) ==
          ErrorKind::InvalidSpec);
    CHECK(kind_of([] { parse_quiver_spec(R"({"parameters": [1, "x", 1, 1]})"); }) == ErrorKind::InvalidSpec);
    CHECK(kind_of([] { build_quiver(parse_quiver_spec(R"({"parameters": [0, 0, 1, 1]})")); }) ==
          ErrorKind::InvalidSpec);
    CHECK(kind_of([] { build_quiver(parse_quiver_spec(R"({"parameters": [1, 1, 1, 1], "vertex_labels": {"Q7": "x"}})")); }) ==
          ErrorKind::UnknownEntity);
    CHECK(kind_of([] { read_quiver_spec("/nonexistent/spec.json"); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("parameter text") {
    CHECK(parse_parameters("2,3,4,2") == Parameters{2, 3, 4, 2});
    CHECK(parse_parameters(" 0, 1,0 ,1") == Parameters{0, 1, 0, 1});
    CHECK(kind_of([] { parse_parameters("1,2,3"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse_parameters("1,2,x,3"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { build_quiver({parse_parameters("1,-2,3,3"), {}}); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("build_quiver normalizes before labelling") {
    const Quiver q = build_quiver({{1, 0, 1, 1}, {}});
    CHECK(q.params().r2 > 0);
}

TEST_CASE("formats") {
    CHECK(parse_format("text") == Format::Text);
    CHECK(parse_format("structured") == Format::Structured);
    CHECK(parse_format("dot") == Format::Dot);
    CHECK(kind_of([] { parse_format("yaml"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("structured documents have a fixed key order") {
    const Walks& w = worked();
    const Quiver& q = w.quiver();
    CHECK(keys(structured_quiver(q)) ==
          std::vector<std::string>{"parameters", "vertices", "arrows", "relations", "gentle"});
    const StringComplex x = build_string_complex(q, 0, S("u- c b f"));
    CHECK(keys(structured_complex(q, x)) ==
          std::vector<std::string>{"base_degree", "string", "terms", "differentials", "d_squared_zero"});
    CHECK(keys(structured_triangle(q, ar_triangle_starting(w, 0, S("1_7")))) ==
          std::vector<std::string>{"start", "middle", "end", "connecting"});
    CHECK(keys(structured_trace(q, reduce_to_base(w, S("b f e d")))) ==
          std::vector<std::string>{"steps", "base", "base_type"});
    CHECK(keys(structured_component(q, classify(w, 0, S("1_7")))) == std::vector<std::string>{"id", "kind", "value"});
    CHECK(structured_census(q, census(w)) == structured_census(q, census(w)));
    const auto doc = nlohmann::json::parse(structured_edge(q, edge(w, parse_component_id(q, "R(0)"))));
    CHECK(doc["members"][1]["string"] == "1_5");
    CHECK(doc["members"][1]["degree"] == -1);
}

TEST_CASE("structured errors") {
    const auto doc = nlohmann::json::parse(structured_error(Error(ErrorKind::EmptyString, "x")));
    CHECK(doc["error"] == "EmptyString");
    CHECK(doc["exit_code"] == 3);
}

TEST_CASE("text renderers") {
    const Walks& w = worked();
    const Quiver& q = w.quiver();
    CHECK(render_triangle(q, ar_triangle_starting(w, 0, S("1_7"))).find("e i[-1]") != std::string::npos);
    const std::string table = quiver_table(q);
    CHECK(table.find("A3") != std::string::npos);
    CHECK(render_census(q, census(w)).find("tau^5 = [3]") != std::string::npos);
}
