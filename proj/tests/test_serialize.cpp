#include "maxpres/serialize.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace maxpres;
using namespace maxpres::testing;

TEST_CASE("rationals travel as strings") {
    CHECK(rational_from_json(json("3/7")) == r(3, 7));
    CHECK(rational_from_json(json(4)) == 4);
    CHECK(rational_from_json(json("-2")) == -2);
    CHECK(to_json(r(6, 4)) == json("3/2"));
    CHECK(to_json(Rational(5)) == json("5"));
    CHECK_THROWS_AS(rational_from_json(json(0.5)), FormatError);
    CHECK_THROWS_AS(rational_from_json(json("1/0")), FormatError);
}

TEST_CASE("descriptor grammar") {
    const json d = json::parse(R"({"kind": "compose",
        "outer": {"kind": "power", "coef": "1", "exp": "2"},
        "inner": {"kind": "max", "of": [{"kind": "linear", "gain": "2"}, {"kind": "identity"}]}})");
    const ScalarFn f = fn_from_json(d);
    CHECK(f.kind() == FnKind::Compose);
    CHECK(evaluate(f, 3) == 36);
    CHECK(fn_from_json(to_json(f)) == f);

    CHECK_THROWS_AS(fn_from_json(json::parse(R"({"kind": "cubic"})")), FormatError);
    CHECK_THROWS_AS(fn_from_json(json::parse(R"({"kind": "linear"})")), FormatError);
    CHECK_THROWS_AS(fn_from_json(json::parse(R"({"kind": "linear", "gain": "0"})")), Error);
    CHECK_THROWS_AS(fn_from_json(json::parse(R"({"kind": "pwl", "points": [["0","0"],["1","2"],["2","1"]],
                                                 "final_slope": "1"})")),
                    InvalidFunction);
}

TEST_CASE("map files round-trip") {
    Gen g(77);
    for (int trial = 0; trial < 100; ++trial) {
        const MpMap a = random_map(g, 1 + g.below(4));
        const MpMap b = map_from_json(json::parse(to_json(a).dump()));
        CHECK(structurally_equal(a, b));
    }
    const MpMap ex = example_map();
    const json j = to_json(ex);
    CHECK(j["n"] == 3);
    CHECK(j["entries"][1][0]["gain"] == "2");
}

TEST_CASE("map errors name the entry") {
    const json bad = json::parse(R"({"n": 2, "entries": [
        [{"kind": "zero"}, {"kind": "zero"}],
        [{"kind": "pwl", "points": [["1","0"]], "final_slope": "1"}, {"kind": "zero"}]]})");
    try {
        map_from_json(bad);
        FAIL("expected an error");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("entry (2,1)") != std::string::npos);
    }
    CHECK_THROWS_AS(map_from_json(json::parse(R"({"n": 2, "entries": [[{"kind": "zero"}]]})")), FormatError);
    CHECK_THROWS_AS(map_from_json(json::parse(R"({"n": 0, "entries": []})")), FormatError);
}

TEST_CASE("report and closure encodings") {
    const StabilityReport rep = check_stability(example_map());
    const json j = to_json(rep);
    CHECK(j["verdict"] == "stable");
    CHECK(j["cycles"].size() == 5);
    CHECK_FALSE(j.contains("witness"));

    const json u = to_json(check_stability(MpMap::identity(1)));
    CHECK(u["verdict"] == "unstable");
    CHECK(u["witness"] == json::array({"1"}));

    const json c = to_json(closure(example_map()));
    CHECK(c["truncation_degree"] == 2);
    CHECK(structurally_equal(map_from_json(c), closure(example_map()).star));
}
