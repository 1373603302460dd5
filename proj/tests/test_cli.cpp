#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "coinv/cli.hpp"

using coinv::cli::RunConfig;
using coinv::cli::VerifyOptions;
using json = nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(RunConfig config, VerifyOptions verify = {}) {
    std::ostringstream out, err;
    int code = coinv::cli::run(config, verify, out, err);
    return {code, out.str(), err.str()};
}

RunConfig base(const std::string& command, int n, int k, int j) {
    RunConfig c;
    c.command = command;
    c.n = n;
    c.k = k;
    c.j = j;
    return c;
}

}  // namespace

TEST_CASE("dim command") {
    RunConfig c = base("dim", 6, 3, 0);
    Result r = run(c);
    CHECK(r.code == 0);
    CHECK(r.out == "142\n");

    c.format = "json";
    Result rj = run(c);
    CHECK(rj.code == 0);
    json parsed = json::parse(rj.out);
    CHECK(parsed["value"] == 142);
    CHECK(parsed["command"] == "dim");
}

TEST_CASE("hilb command") {
    RunConfig c = base("hilb", 3, 1, 0);
    c.group = "cyclic";
    Result r = run(c);
    CHECK(r.code == 0);
    CHECK(r.out == "1 + q + q^2\n");

    RunConfig d = base("hilb", 3, 1, 1);
    Result rd = run(d);
    CHECK(rd.code == 0);
    CHECK(rd.out ==
          "1 + 2 q + 2 u + 2 q^2 + 3 q u + u^2 + q^3 + q^2 u\n");
}

TEST_CASE("catalan command prints in q and t") {
    RunConfig c = base("catalan", 4, 2, 0);
    Result r = run(c);
    CHECK(r.code == 0);
    // Graded order: the lone q t term precedes the degree-4 staircase.
    CHECK(r.out == "q t + q^4 + q^3 t + q^2 t^2 + q t^3 + t^4\n");

    c.group = "cyclic";
    CHECK(run(c).code == 1);
}

TEST_CASE("char command") {
    RunConfig c = base("char", 3, 2, 0);
    Result r = run(c);
    CHECK(r.code == 0);
    CHECK(r.out.find("chi1") != std::string::npos);
    CHECK(r.out.find("s(1,1) chi2") != std::string::npos);
    CHECK(r.out.find("chi^1") != std::string::npos);

    c.format = "json";
    c.expand = true;
    Result rj = run(c);
    json parsed = json::parse(rj.out);
    CHECK(parsed["terms"].size() == 5);
    CHECK(parsed.contains("expansion"));
    // The zero multidegree carries exactly the trivial character.
    bool found_origin = false;
    for (const auto& entry : parsed["expansion"]) {
        if (entry["degree"] == json::array({0, 0})) {
            found_origin = true;
            CHECK(entry["labels"] == json{{"chi1", 1}});
        }
    }
    CHECK(found_origin);
}

TEST_CASE("basis command lists dimension-many monomials") {
    RunConfig c = base("basis", 3, 2, 0);
    Result r = run(c);
    CHECK(r.code == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 16);
    CHECK(r.out.substr(0, 2) == "1\n");

    c.format = "json";
    json parsed = json::parse(run(c).out);
    CHECK(parsed["count"] == 16);
    CHECK(parsed["monomials"].size() == 16);
}

TEST_CASE("json output round-trips byte-identically") {
    for (const char* command : {"dim", "hilb", "char", "basis", "catalan"}) {
        RunConfig c = base(command, 4, 2, 1);
        if (std::string(command) == "catalan") c.j = 0;
        c.format = "json";
        c.expand = true;
        Result r = run(c);
        REQUIRE(r.code == 0);
        std::string reserialized = json::parse(r.out).dump(2) + "\n";
        CHECK(reserialized == r.out);
    }
    RunConfig v;
    v.command = "verify";
    v.n = 2;
    v.format = "json";
    VerifyOptions opts;
    opts.orders = {2};
    opts.configs = {{1, 0}};
    opts.samples = 10;
    opts.span_report = true;
    Result rv = run(v, opts);
    REQUIRE(rv.code == 0);
    CHECK(json::parse(rv.out).dump(2) + "\n" == rv.out);
}

TEST_CASE("dim equals hilb at all ones through the CLI surface") {
    for (auto [group, n] : std::vector<std::pair<std::string, int>>{
             {"dihedral", 4}, {"cyclic", 5}}) {
        for (int k = 0; k <= 2; ++k)
            for (int j = 0; j <= 2; ++j) {
                RunConfig hc = base("hilb", n, k, j);
                hc.group = group;
                hc.format = "json";
                json hilb = json::parse(run(hc).out);
                long total = 0;
                for (const auto& term : hilb["polynomial"]["terms"])
                    total += term["coefficient"].get<long>();
                RunConfig dc = base("dim", n, k, j);
                dc.group = group;
                dc.format = "json";
                json dim = json::parse(run(dc).out);
                CHECK(total == dim["value"].get<long>());
            }
    }
}

TEST_CASE("verify command") {
    RunConfig c;
    c.command = "verify";
    c.n = 3;
    VerifyOptions v;
    v.orders = {3};
    v.configs = {{1, 0}, {0, 1}};
    v.samples = 25;
    Result r = run(c, v);
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    c.format = "json";
    v.traces = true;
    Result rj = run(c, v);
    CHECK(rj.code == 0);
    json parsed = json::parse(rj.out);
    CHECK(parsed["status"] == "pass");
    CHECK(parsed["cells"].size() == 2);
    for (const auto& cell : parsed["cells"]) {
        CHECK(cell["hilbert"] == "pass");
        CHECK(cell["basis"] == "pass");
        CHECK(cell["traces"] == "pass");
    }

    // Cyclic sweep including the degenerate n = 1.
    RunConfig cy;
    cy.command = "verify";
    cy.group = "cyclic";
    cy.n = 1;
    VerifyOptions vy;
    vy.orders = {1, 2, 3};
    vy.configs = {{1, 1}};
    vy.samples = 10;
    vy.traces = true;
    CHECK(run(cy, vy).code == 0);
}

TEST_CASE("parallel sweep output matches the sequential one") {
    RunConfig c;
    c.command = "verify";
    c.n = 2;
    c.format = "json";
    VerifyOptions v;
    v.orders = {2, 3};
    v.configs = {{1, 0}, {0, 1}, {1, 1}};
    v.samples = 15;
    c.threads = 1;
    Result sequential = run(c, v);
    c.threads = 4;
    Result parallel = run(c, v);
    CHECK(sequential.code == 0);
    CHECK(sequential.out == parallel.out);
}

TEST_CASE("usage errors exit with code 1") {
    RunConfig bad_group = base("dim", 3, 1, 0);
    bad_group.group = "octahedral";
    CHECK(run(bad_group).code == 1);

    RunConfig bad_n = base("dim", 1, 1, 0);
    CHECK(run(bad_n).code == 1);

    RunConfig bad_cap = base("hilb", 4, 1, 0);
    bad_cap.degree_cap = 3;
    CHECK(run(bad_cap).code == 1);

    RunConfig bad_command = base("frobenius", 3, 1, 0);
    CHECK(run(bad_command).code == 1);

    RunConfig bad_format = base("dim", 3, 1, 0);
    bad_format.format = "yaml";
    CHECK(run(bad_format).code == 1);
}

TEST_CASE("argv entry point") {
    const char* argv[] = {"coinv", "dim", "--n", "6", "--k", "3", "--j", "0"};
    CHECK(coinv::cli::main_entry(8, argv) == 0);
    const char* bad[] = {"coinv", "dim"};
    CHECK(coinv::cli::main_entry(2, bad) == 1);
    const char* nothing[] = {"coinv"};
    CHECK(coinv::cli::main_entry(1, nothing) == 1);
}
