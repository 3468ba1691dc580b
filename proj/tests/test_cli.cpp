#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hkface/cli_app.hpp"
#include "hkface/json_io.hpp"

using namespace hkface;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("hk subcommand renders the closed form") {
    auto res = run_cli({"hk", "--family", "cycle:5"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("5*q^2*C(k+1,2) - 5*q*k + 1") != std::string::npos);
    CHECK(res.out.find("expanded:") != std::string::npos);
}

TEST_CASE("audit subcommand json output") {
    auto res = run_cli({"audit", "--family", "path:4", "--format", "json"});
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["stable"] == true);
    CHECK(j["conjecture_status"] == "consistent");

    auto counter = write_temp("hkface_counter.json", R"({"vertices":4,"facets":[[1,2],[2,3],[3,4],[2,4]]})");
    auto res2 = run_cli({"audit", "--input", counter.string(), "--format", "json"});
    REQUIRE(res2.exit_code == 0);
    json j2 = json::parse(res2.out);
    CHECK(j2["stable"] == false);
    CHECK(j2["conjecture_status"] == "counterexample");
    CHECK(j2["rossi_valla_holds"] == true);
    CHECK(j2["candidate_reduction_number"] == 2);
    CHECK(j2["ghk"]["binomial"] == "4*q^2*C(k+1,2) - 4*q*k + 1");
}

TEST_CASE("verify subcommand") {
    auto res = run_cli({"verify", "--family", "complete:4", "--qmax", "3", "--kmax", "3"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("9/9 points match") != std::string::npos);
}

TEST_CASE("ehk subcommand") {
    auto res = run_cli({"ehk", "--family", "cycle:5", "--kmax", "3", "--format", "tsv"});
    REQUIRE(res.exit_code == 0);
    CHECK(res.out == "k\tehk\n1\t5\n2\t15\n3\t30\n");
}

TEST_CASE("coeffs subcommand tsv") {
    auto res = run_cli({"coeffs", "--family", "cycle:4", "--format", "tsv"});
    REQUIRE(res.exit_code == 0);
    CHECK(res.out == "i\te_i(q)\tL_i\n0\t4*q^2\t4\n1\t4*q\t0\n2\t1\t0\n");
}

TEST_CASE("family emission round-trips through parse_input") {
    auto res = run_cli({"family", "--family", "cycle:5"});
    REQUIRE(res.exit_code == 0);
    auto path = write_temp("hkface_cycle5.json", res.out);
    auto res2 = run_cli({"family", "--input", path.string()});
    REQUIRE(res2.exit_code == 0);
    CHECK(res.out == res2.out);

    // inline family grammar and JSON family objects agree
    auto res3 = run_cli({"family", "--family", "bipartite:2,2"});
    auto by_json = write_temp("hkface_k22.json", R"({"family":"bipartite","alpha":2,"beta":2})");
    auto res4 = run_cli({"family", "--input", by_json.string()});
    CHECK(res3.out == res4.out);
    json j = json::parse(res3.out);
    CHECK(j["vertices"] == 4);
    CHECK(j["facets"].size() == 2);
}

TEST_CASE("edge-ideal JSON input") {
    auto path = write_temp("hkface_c5.json",
                           R"({"vertices":5,"edges":[[1,2],[2,3],[3,4],[4,5],[5,1]],"as":"edge_ideal"})");
    auto res = run_cli({"family", "--input", path.string()});
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["vertices"] == 5);
    CHECK(j["facets"].size() == 5);  // maximal independent sets of the 5-cycle

    // same complex given directly by its facets
    auto direct = write_temp("hkface_c5_facets.json",
                             R"({"vertices":5,"facets":[[1,3],[1,4],[2,4],[2,5],[3,5]]})");
    auto res2 = run_cli({"family", "--input", direct.string()});
    CHECK(res.out == res2.out);

    auto bad = write_temp("hkface_c5_bad.json", R"({"vertices":5,"edges":[[1,2],[2]],"as":"edge_ideal"})");
    auto res3 = run_cli({"family", "--input", bad.string()});
    CHECK(res3.exit_code == 1);
    CHECK(res3.err.find("/edges/1") != std::string::npos);
}

TEST_CASE("power table schema errors carry pointer paths") {
    auto missing = write_temp("hkface_t1.json", R"({"d":2,"r":2,"ehk":{"1":"4","2":"12"}})");
    auto res = run_cli({"limits", "--input", missing.string()});
    CHECK(res.exit_code == 1);
    CHECK(res.err.find("/e0") != std::string::npos);

    auto badval = write_temp("hkface_t2.json", R"({"d":2,"r":2,"e0":"4","ehk":{"1":"4","2":"x"}})");
    auto res2 = run_cli({"limits", "--input", badval.string()});
    CHECK(res2.exit_code == 1);
    CHECK(res2.err.find("/ehk/2") != std::string::npos);

    auto negative = write_temp("hkface_t3.json", R"({"d":2,"r":2,"e0":"4","ehk":{"1":"4","2":"-12"}})");
    auto res3 = run_cli({"limits", "--input", negative.string()});
    CHECK(res3.exit_code == 1);
}

TEST_CASE("schema violations carry JSON pointer paths") {
    auto bad = write_temp("hkface_bad.json", R"({"vertices":3,"facets":[[1,2]]})");
    auto res = run_cli({"hk", "--input", bad.string()});
    CHECK(res.exit_code == 1);
    CHECK(res.err.rfind("error: ", 0) == 0);
    CHECK(res.err.find("/facets") != std::string::npos);
    CHECK(res.err.find("\n") == res.err.size() - 1);  // single line

    auto bad2 = write_temp("hkface_bad2.json", R"({"vertices":3,"facets":[[1,2],[0,3]]})");
    auto res2 = run_cli({"hk", "--input", bad2.string()});
    CHECK(res2.exit_code == 1);
    CHECK(res2.err.find("/facets/1") != std::string::npos);
}

TEST_CASE("exactly one input source") {
    auto res = run_cli({"hk"});
    CHECK(res.exit_code == 1);
    auto both = write_temp("hkface_any.json", R"({"family":"cycle","n":3})");
    auto res2 = run_cli({"hk", "--input", both.string(), "--family", "cycle:3"});
    CHECK(res2.exit_code == 1);
}

TEST_CASE("exponent vector flag") {
    auto res = run_cli({"hk", "--family", "simplex:2", "--v", "2,3"});
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("6*q^2*C(k+1,2)") != std::string::npos);
    auto res2 = run_cli({"hk", "--family", "simplex:2", "--v", "2,3,4"});
    CHECK(res2.exit_code == 1);  // length mismatch
}

TEST_CASE("limits subcommand on the counterexample power table") {
    auto table = write_temp("hkface_table.json",
                            R"({"d":2,"r":2,"e0":"4","ehk":{"1":"4","2":"12"},"assumptions":["CM","depthG>=d-1"]})");
    auto res = run_cli({"limits", "--input", table.string(), "--format", "json"});
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["L"] == json::array({"4", "0", "0"}));
    CHECK(j["dim2_closed_forms"] == json::array({"0", "0"}));
    // predicted e_HK(I^n) = 4 C(n+1,2) for n = 1..5
    REQUIRE(j["predicted_ehk"].size() == 5);
    CHECK(j["predicted_ehk"][0]["ehk"] == "4");
    CHECK(j["predicted_ehk"][1]["ehk"] == "12");
    CHECK(j["predicted_ehk"][2]["ehk"] == "24");
}

TEST_CASE("budget environment variable") {
    setenv("HKFACE_BUDGET", "10", 1);
    auto res = run_cli({"verify", "--family", "cycle:5", "--qmax", "2", "--kmax", "2"});
    unsetenv("HKFACE_BUDGET");
    CHECK(res.exit_code == 1);
    CHECK(res.err.find("budget") != std::string::npos);

    // explicit flag overrides the environment
    setenv("HKFACE_BUDGET", "10", 1);
    auto res2 = run_cli({"verify", "--family", "cycle:5", "--qmax", "2", "--kmax", "2", "--budget", "1000000"});
    unsetenv("HKFACE_BUDGET");
    CHECK(res2.exit_code == 0);
}

TEST_CASE("threads flag leaves output unchanged") {
    auto a = run_cli({"verify", "--family", "cycle:6", "--qmax", "2", "--kmax", "2", "--threads", "1"});
    auto b = run_cli({"verify", "--family", "cycle:6", "--qmax", "2", "--kmax", "2", "--threads", "4"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}
