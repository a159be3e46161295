#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "../fixtures.hpp"
#include "cli.hpp"
#include "tourn/text_format.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = tourn::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "tourncli-tests";
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_fixture(const std::string& name, const tourn::Tournament& t) {
    const auto p = scratch(name);
    std::ofstream(p, std::ios::binary) << tourn::to_tourn_v1(t);
    return p;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("generate") {
    const auto file = scratch("r7.txt");
    auto r = run({"generate", "--n", "7", "--kind", "near_regular", "--k", "0", "--seed", "1", "--out", file.string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "out-degrees 3 3 3 3 3 3 3"));
    CHECK(contains(r.out, "seed 1"));
    const auto t = tourn::read_tourn_v1(file);
    for (int v = 0; v < 7; ++v) CHECK(t.out_degree(v) == 3);

    r = run({"generate", "--n", "6", "--kind", "near_regular", "--k", "0"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "InfeasibleBudget"));

    const auto a = scratch("a.txt"), b = scratch("b.txt");
    CHECK(run({"generate", "--n", "12", "--kind", "random", "--seed", "9", "--out", a.string()}).code == 0);
    CHECK(run({"generate", "--n", "12", "--kind", "random", "--seed", "9", "--out", b.string()}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).size() == 3 + 12 * 13);

    r = run({"generate", "--n", "12", "--kind", "random"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "--seed"));
    CHECK(run({"generate", "--n", "5", "--kind", "spiral", "--seed", "1"}).code == 2);
}

TEST_CASE("analyze") {
    auto r = run({"analyze", "--in", write_fixture("r7.txt", fixture::r7()).string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "kappa 3\n"));
    CHECK(contains(r.out, "irregularity 0\n"));
    CHECK(contains(r.out, "connectivity-bound 3 satisfied"));

    r = run({"analyze", "--in", write_fixture("tt4.txt", fixture::tt(4)).string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "kappa 0\n"));
    CHECK(contains(r.out, "strong-components 4\n  {0}\n  {1}\n  {2}\n  {3}\n"));

    const auto truncated = scratch("truncated.txt");
    std::ofstream(truncated) << "4\n0111\n0011\n";
    r = run({"analyze", "--in", truncated.string()});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "line 4"));

    CHECK(run({"analyze", "--in", scratch("missing.txt").string()}).code == 2);

    r = run({"analyze", "--in", write_fixture("c3.txt", fixture::c3()).string(), "--json", "--kappa-star"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kappa"] == 1);
    CHECK(j["spanning"]["kappa_w_star"]["value"] == 2);
    CHECK(j["spanning"]["kappa_w_star"]["status"] == "exact");
}

TEST_CASE("container") {
    const auto c3 = write_fixture("c3.txt", fixture::c3()).string();
    auto r = run({"container", "--in", c3, "--x", "0", "--y", "1", "--k", "2", "--mode", "weak"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "path 0 1\n"));
    CHECK(contains(r.out, "path 1 2 0\n"));
    CHECK(contains(r.out, "verification ok"));

    r = run({"container", "--in", c3, "--x", "0", "--y", "1", "--k", "2", "--mode", "strong", "--oracle"});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "proven-absent"));

    const auto r7 = write_fixture("r7.txt", fixture::r7()).string();
    r = run({"container", "--in", r7, "--x", "0", "--y", "1", "--k", "2", "--mode", "strong"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "path 0 1\n"));
    CHECK(contains(r.out, "trace base hamiltonian-path+arc"));

    r = run({"container", "--in", r7, "--x", "0", "--y", "1", "--k", "2", "--mode", "strong", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verified"] == true);
    CHECK(j["container"]["paths"].size() == 2);
    CHECK(j["container"]["spanning"] == true);

    CHECK(run({"container", "--in", r7, "--x", "0", "--y", "0", "--k", "2"}).code == 2);
    CHECK(run({"container", "--in", r7, "--x", "0", "--y", "9", "--k", "2"}).code == 2);
    CHECK(run({"container", "--in", r7, "--x", "0", "--y", "1", "--k", "0"}).code == 2);
    CHECK(run({"container", "--in", r7, "--x", "0", "--y", "1", "--k", "2", "--mode", "sideways"}).code == 2);
    CHECK(run({"container", "--in", r7, "--x", "0", "--y", "1"}).code == 2);
}

TEST_CASE("verify-theorems") {
    auto r = run({"verify-theorems", "--suite", "sec4", "--t", "2", "--k", "0", "--n", "13", "--seeds", "5"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "certified 5/5"));

    r = run({"verify-theorems", "--suite", "thm10", "--k", "1", "--n", "9..11", "--seeds", "10"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "connectivity-bound violations 0"));

    r = run({"verify-theorems", "--suite", "sec3", "--k", "2", "--n", "13..15", "--seeds", "4", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["failed"] == 0);
    CHECK(j[0]["samples"] == 12);
    CHECK(j[0]["passed"] == j[0]["hypothesis_met"]);

    const auto again = run({"verify-theorems", "--suite", "sec3", "--k", "2", "--n", "13..15", "--seeds", "4", "--json"});
    CHECK(again.out == r.out);

    CHECK(run({"verify-theorems", "--suite", "nope"}).code == 2);
    CHECK(run({"verify-theorems", "--suite", "sec4", "--n", "x..y"}).code == 2);
}

TEST_CASE("survey output is deterministic JSON") {
    const std::vector<std::string> args{"survey", "--n", "7..8", "--k", "1", "--seeds", "2", "--t", "2"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    REQUIRE(j.size() == 4);
    for (const auto& rep : j) {
        CHECK(rep.contains("meta"));
        CHECK(rep.contains("pairs"));
        CHECK(rep["kappa_s_star"]["status"] == "exact");
        CHECK(rep["section4"]["satisfied"] == true);
    }
}

TEST_CASE("oracle bound from the environment") {
    const auto r7 = write_fixture("r7.txt", fixture::r7()).string();
    setenv("TOURN_ORACLE_BOUND", "5", 1);
    auto r = run({"container", "--in", r7, "--x", "0", "--y", "1", "--k", "2", "--oracle"});
    CHECK(r.code == 2);
    unsetenv("TOURN_ORACLE_BOUND");
    r = run({"container", "--in", r7, "--x", "0", "--y", "1", "--k", "2", "--oracle"});
    CHECK(r.code == 0);
}

TEST_CASE("regen-catalog") {
    const auto a = scratch("cat-a.txt"), b = scratch("cat-b.txt");
    auto r = run({"regen-catalog", "--out", a.string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "entries "));
    CHECK(run({"regen-catalog", "--out", b.string()}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) == slurp(fs::path(TOURN_DATA_DIR) / "exceptional_catalog.txt"));
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
