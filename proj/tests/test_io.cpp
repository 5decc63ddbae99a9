#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "equispectra/io.hpp"
#include "helpers.hpp"

using namespace equispectra;
using namespace equispectra::io;
namespace fs = std::filesystem;

namespace {

RunResult go(const std::string& cmd, const std::string& file, int mmax = 6) {
    JobSpec j;
    j.command = cmd;
    j.in = (fixture_dir() / file).string();
    j.mmax = mmax;
    return run(j);
}

fs::path scratch(const std::string& name, const Json& doc) {
    const auto p = fs::temp_directory_path() / ("equispectra_test_" + name);
    std::ofstream(p) << doc.dump(1);
    return p;
}

}  // namespace

TEST_CASE("matrix entry parsing") {
    CHECK(parse_exact(Json(3)) == Cyclotomic(3L));
    CHECK(parse_exact(Json("-2/6")) == Cyclotomic(Rational(-1, 3)));
    CHECK(parse_exact(Json::parse(R"({"re": 0, "im": 1})")) == testing::I);
    CHECK(parse_exact(Json::parse(R"({"cyclo": 5, "c": [0, 1]})")) == Cyclotomic::root_of_unity(5));
    CHECK(parse_exact(Json::parse(R"({"cospi": "1/3"})")) == Cyclotomic(Rational(1, 2)));
    CHECK(parse_exact(Json::parse(R"({"sinpi": "1/2"})")) == Cyclotomic(1L));
    CHECK(parse_exact(Json::parse(R"({"sinpi": "-2/5"})")) == -testing::rotation(5)(1, 0));
    CHECK(std::abs(parse_float(Json::parse(R"({"cospi": "2/5"})")) - std::cos(0.4 * M_PI)) < 1e-14);
    CHECK(std::abs(parse_float(Json("1/4")) - 0.25) < 1e-15);
    CHECK_THROWS_AS(parse_exact(Json("1/0")), Error);
    CHECK_THROWS_AS(parse_exact(Json::parse(R"({"foo": 1})")), Error);

    const auto m = parse_matrix<Cyclotomic>(Json::parse(R"([[1, 0], [0, {"re": 0, "im": -1}]])"));
    CHECK(m(1, 1) == -testing::I);
    CHECK(parse_matrix<Cyclotomic>(Json(2)).rows() == 1);
    CHECK_THROWS_AS(parse_matrix<Cyclotomic>(Json::parse("[[1, 0], [0]]")), Error);
}

TEST_CASE("bundled fixtures validate") {
    const auto all = bundled_fixtures();
    REQUIRE(all.size() >= 9);
    for (const auto& f : all) {
        CAPTURE(f.name);
        CHECK(fs::exists(fixture_dir() / f.file));
        const auto r = go("validate", f.file);
        CHECK(r.status == 0);
        CHECK(r.report.at("schema") == kSchema);
        CHECK(r.report.at("kind") == f.kind);
    }
}

TEST_CASE("verify agrees on spectral fixtures") {
    for (const auto& f : bundled_fixtures()) {
        if (f.kind != "symbol" && f.kind != "action") continue;
        CAPTURE(f.name);
        const auto r = go("verify", f.file);
        REQUIRE(r.status == 0);
        for (const auto& row : r.report.at("degrees")) {
            CHECK(row.at("match") == true);
            CHECK(row.at("certified") == true);
        }
    }
}

TEST_CASE("reports") {
    const auto e = go("euler", "torus_z4.json");
    REQUIRE(e.status == 0);
    const long expect[] = {2, -1, 0, -1};
    int i = 0;
    for (const auto& [rho, v] : e.report.at("chi").items()) CHECK(v.get<long>() == expect[i++]);
    CHECK(e.report.at("total") == 0);

    JobSpec l;
    l.command = "lens-eta";
    l.p = 3;
    l.m = 1;
    l.n = 1;
    const auto le = run(l);
    REQUIRE(le.status == 0);
    CHECK(le.report.at("eta").at("exact") == "-4/9");

    const auto eta = go("eta", "cr_z3_twisted.json");
    REQUIRE(eta.status == 0);
    CHECK(eta.report.at("results").size() == 3);
    for (const auto& row : eta.report.at("results")) {
        const double ex = row.at("eta").at("float");
        CHECK(std::abs(ex - row.at("oracle").at("float").get<double>()) < 1e-6);
    }

    const auto b = go("beta", "beta_s3.json");
    REQUIRE(b.status == 0);
    CHECK(b.report.at("retained_blocks").size() == 1);
    CHECK(b.report.at("strata")[0].at("beta")[2].at("beta").at("exact") == "1/2");

    const auto s = go("spectrum", "pauli_z4.json");
    REQUIRE(s.status == 0);
    CHECK(s.report.at("spectra").size() == 4);
}

TEST_CASE("reports are deterministic") {
    for (const char* f : {"pauli_z4.json", "torus_z4.json", "beta_s3.json", "de_rham_3_antipodal.json"})
        for (const char* cmd : {"validate", "spectrum", "eta", "verify", "euler", "beta"}) {
            const auto a = go(cmd, f, 3), b = go(cmd, f, 3);
            CHECK(a.report.dump() == b.report.dump());
            CHECK(a.status == b.status);
        }
}

TEST_CASE("errors are structured") {
    auto check_error = [](const RunResult& r, int status, const std::string& code) {
        CHECK(r.status == status);
        REQUIRE(r.report.contains("error"));
        const auto& e = r.report.at("error");
        CHECK(e.at("code") == code);
        CHECK(e.contains("module"));
        CHECK(e.contains("message"));
        CHECK(e.at("context").is_object());
        CHECK(r.report.at("schema") == kSchema);
    };

    JobSpec j;
    j.command = "verify";
    j.in = "/nonexistent/file.json";
    check_error(run(j), 1, "validation");

    j.command = "lens-eta";
    j.p = 3;
    j.m = 1;
    j.n = 1;
    check_error(run(j), 1, "validation");

    JobSpec l;
    l.command = "lens-eta";
    l.p = 6;
    l.m = 2;
    l.n = 1;
    check_error(run(l), 1, "domain");

    const auto bad = scratch("bad_symbol.json", Json::parse(R"({"kind": "symbol", "A": [[[1]], [[1]]]})"));
    j = {};
    j.command = "validate";
    j.in = bad.string();
    const auto r = run(j);
    check_error(r, 1, "validation");
    CHECK(r.report.at("error").at("module") == "operator_core");

    j.command = "euler";
    j.in = (fixture_dir() / "torus_z4.json").string();
    j.alpha = "chi1";
    check_error(run(j), 1, "validation");

    j = {};
    j.command = "spectrum";
    j.in = (fixture_dir() / "cr_z3.json").string();
    j.alpha = "nope";
    check_error(run(j), 1, "validation");

    auto torus = read_json(fixture_dir() / "torus_z4.json");
    torus["total"] = 3;
    j = {};
    j.command = "euler";
    j.in = scratch("torus_bad.json", torus).string();
    check_error(run(j), 1, "validation");
}

#ifdef EQUISPECTRA_CLI
TEST_CASE("command-line binary") {
    const std::string cli = EQUISPECTRA_CLI;
    const auto out = fs::temp_directory_path() / "equispectra_cli_out.json";
    auto sh = [](const std::string& cmd) {
        const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    CHECK(sh(cli + " lens-eta --p 3 --m 1 --n 1 --out " + out.string()) == 0);
    const auto doc = read_json(out);
    CHECK(doc.at("eta").at("exact") == "-4/9");
    CHECK(sh(cli + " eta --in " + (fixture_dir() / "cr_z5.json").string() + " --alpha chi2 --mode float") == 0);
    CHECK(sh(cli + " frobnicate --in x") == 1);
    CHECK(sh(cli + " verify") == 1);
    CHECK(sh(cli + " lens-eta --p 4 --m 2 --n 1") == 1);
    CHECK(sh(cli + " verify --in " + (fixture_dir() / "pauli.json").string() + " --mmax 99") == 1);
}
#endif
