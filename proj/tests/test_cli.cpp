#include "maxpres/serialize.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace maxpres;

namespace {

struct Run {
    int code;
    std::string out;
};

std::string data(const char* name) { return std::string(MAXPRES_EXAMPLES_DIR) + "/" + name; }

Run run(const std::string& args) {
    const std::string cmd = std::string(MAXPRES_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Run run_err(const std::string& args) {
    const std::string cmd = std::string(MAXPRES_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("cli validate") {
    CHECK(run("validate " + data("example3.json")).code == 0);
    const Run bad = run_err("validate " + data("bad_pwl.json"));
    CHECK(bad.code == 65);
    CHECK(bad.out.find("entry (2,1)") != std::string::npos);
    CHECK(run("validate " + data("n_mismatch.json")).code == 65);
    CHECK(run("validate " + data("no_such_file.json")).code == 64);
    CHECK(run("").code == 64);
    CHECK(run("frobnicate " + data("example3.json")).code == 64);
}

TEST_CASE("cli check") {
    const Run ex = run("check " + data("example3.json"));
    CHECK(ex.code == 0);
    const json j = json::parse(ex.out);
    CHECK(j["cycles"].size() == 5);
    for (const auto& c : j["cycles"]) CHECK(c["verdict"] == "certified");

    const Run id = run("check " + data("identity1.json"));
    CHECK(id.code == 2);
    CHECK(json::parse(id.out)["witness"] == json::array({"1"}));

    const Run pw = run("check " + data("power_pair.json"));
    CHECK((pw.code == 2 || pw.code == 3));
    const json pj = json::parse(pw.out);
    CHECK(pj["cycles"][0]["weight"] == "pow(1,4)");
    if (pw.code == 2) CHECK(pj.contains("witness"));
}

TEST_CASE("cli closure") {
    const auto out = std::filesystem::temp_directory_path() / "maxpres_cli_closure.json";
    const Run c = run("closure " + data("example3.json") + " --out " + out.string());
    CHECK(c.code == 0);
    CHECK(run("validate " + out.string()).code == 0);
    std::ifstream in(out);
    const json j = json::parse(in);
    const MpMap star = map_from_json(j);
    const std::array<std::array<long, 6>, 3> expect{{{1, 1, 3, 7, 1, 7}, {2, 1, 1, 1, 2, 7}, {6, 1, 3, 1, 1, 1}}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(evaluate(star(i, k), 1) == Rational(expect[i][2 * k], expect[i][2 * k + 1]));
    // round trip: reloading and applying agrees with the applied closure
    const MpMap a = map_from_json(json::parse(std::ifstream(data("example3.json"))));
    for (const auto& x : verification_grid(3, 64)) CHECK(apply(star, x) == closure_apply(a, x));
    std::filesystem::remove(out);

    const json z = json::parse(run("closure " + data("zero2.json")).out);
    CHECK(structurally_equal(map_from_json(z), MpMap::identity(2)));

    const Run s2 = run("closure " + data("stable2.json"));
    CHECK(s2.code == 0);
    const MpMap a2 = map_from_json(json::parse(std::ifstream(data("stable2.json"))));
    const MpMap sum = oplus_maps(MpMap::identity(2), a2);
    const auto grid = verification_grid(2, 64);
    CHECK(pointwise_equal(map_from_json(json::parse(s2.out)), sum, grid));

    CHECK(run("closure " + data("identity1.json")).code == 2);
}

TEST_CASE("cli eigenvectors, solve and simulate") {
    const json l = json::parse(run("left " + data("example3.json") + " --vec 1,1,1").out);
    CHECK(l["l"] == "9");
    CHECK(l["l_after"] == "62/7");
    CHECK(l["strict"] == true);

    const json r = json::parse(run("right " + data("example3.json") + " --t 1").out);
    CHECK(r["r"] == json::array({"1", "2", "6"}));
    CHECK(r["Ar"] == json::array({"6/7", "2", "6"}));
    CHECK(r["relation"] == "strictly-less");

    const json s = json::parse(run("solve " + data("example3.json") + " --b 1,1,1").out);
    CHECK(s["x"] == json::array({"1", "2", "6"}));
    CHECK(s["residual"] == "pass");

    CHECK(run("left " + data("identity1.json") + " --vec 1").code == 2);
    CHECK(run("left " + data("example3.json") + " --vec 1,1").code == 64);
    CHECK(run("left " + data("example3.json") + " --vec 1,x,1").code == 64);

    const Run sim = run("simulate " + data("example3.json") + " --x0 1,1,1 --steps 3");
    CHECK(sim.code == 0);
    CHECK(sim.out.rfind("k,x1,x2,x3\n0,1,1,1\n1,1/2,2,3\n", 0) == 0);
    CHECK(sim.out.find("# outcome: steps-exhausted") != std::string::npos);
    const Run approx = run("simulate " + data("example3.json") + " --x0 1,1,1 --steps 3 --approx --digits 4");
    CHECK(approx.out.find("approximate") != std::string::npos);
    CHECK(approx.out.find("1,0.5,2,3") != std::string::npos);

    const Run e = run("eval " + data("example3.json") + " --vec 1,1,1");
    CHECK(json::parse(e.out)["Ax"] == json::array({"1/2", "2", "3"}));
    CHECK(e.out.find("approx") == std::string::npos);
}

TEST_CASE("cli certify is deterministic") {
    const std::string args = "certify " + data("example3.json") + " --samples 20 --seed 5";
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const json j = json::parse(a.out);
    CHECK(j["sample_count"] == 20);
    CHECK(j["all_strict"] == true);
    CHECK(run("certify " + data("example3.json") + " --mode left-max").code == 0);
    CHECK(run("certify " + data("example3.json") + " --mode bogus").code == 64);
}
