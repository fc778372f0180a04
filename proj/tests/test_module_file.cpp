#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "bim/classify.hpp"
#include "bim/errors.hpp"
#include "bim/module_file.hpp"
#include "oracles.hpp"

using namespace bim;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("module_file") {

TEST_CASE("round trip of constructed modules") {
    std::mt19937 rng(101);
    for (int t = 0; t < 40; ++t) {
        Rational a = oracle::random_rational(rng, 40, 13), b = oracle::random_rational(rng, 40, 13),
                 c = oracle::random_rational(rng, 40, 13);
        BIModule m = t % 2 ? build_E(EvenParams(1 + 2 * (t % 4), a, b, c)) : build_O(OddParams(2 * (t % 3), a, b, c));
        m = twist(m, all_twists()[static_cast<std::size_t>(t) % 4]);
        std::string text = serialize_module(m);
        BIModule back = parse_module(text);
        CHECK(back == m);
        CHECK(serialize_module(back) == text);
    }
}

TEST_CASE("fixture file is byte-stable") {
    CHECK(serialize_module(example_E()) == slurp(std::string(BIM_GOLDEN_DIR) + "/exampleE.json"));
}

TEST_CASE("field order is fixed") {
    std::string s = serialize_module(example_O());
    auto pos = [&](const char* k) { return s.find(std::string("\"") + k + "\""); };
    CHECK(pos("dim") < pos("X"));
    CHECK(pos("X") < pos("Y"));
    CHECK(pos("Y") < pos("kappa"));
    CHECK(pos("kappa") < pos("lambda"));
    CHECK(pos("lambda") < pos("mu"));
    CHECK(pos("mu") < pos("meta"));
}

TEST_CASE("non-canonical and integer entries are accepted") {
    BIModule m = parse_module(R"({"dim": 1, "X": [["2/4"]], "Y": [[3]], "kappa": "-6/3"})");
    CHECK(m.X(0, 0) == Rational(1, 2));
    CHECK(m.Y(0, 0) == 3);
    CHECK(m.kappa == -2);
    CHECK_FALSE(m.lambda.has_value());
    CHECK(m.meta.empty());
}

TEST_CASE("malformed documents") {
    for (const char* bad : {
             "not json",
             "[]",
             R"({"X": [["1"]], "Y": [["1"]], "kappa": "0"})",
             R"({"dim": 0, "X": [], "Y": [], "kappa": "0"})",
             R"({"dim": 2, "X": [["1"]], "Y": [["1"]], "kappa": "0"})",
             R"({"dim": 1, "X": [["1/0"]], "Y": [["1"]], "kappa": "0"})",
             R"({"dim": 1, "X": [["x"]], "Y": [["1"]], "kappa": "0"})",
             R"({"dim": 1, "X": [[1.5]], "Y": [["1"]], "kappa": "0"})",
             R"({"dim": 1, "X": [["1"]], "Y": [["1"]], "kappa": "0", "meta": 3})",
         }) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_module(bad), ParseError);
    }
}

TEST_CASE("compact printer") {
    Json j;
    j["a"] = Json::array({"1", "2"});
    j["b"] = Json::array({Json::array({"1"}), Json::array({"2"})});
    j["c"] = Json::object();
    CHECK(pretty(j) == "{\n  \"a\": [\"1\", \"2\"],\n  \"b\": [\n    [\"1\"],\n    [\"2\"]\n  ],\n  \"c\": {}\n}\n");
}

}
