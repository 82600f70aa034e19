#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "permderiv/cli.hpp"
#include "permderiv/error.hpp"

using namespace permderiv;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("integer lists") {
    CHECK(cli::parse_int_list("5,2,7") == std::vector<int>{5, 2, 7});
    CHECK(cli::parse_int_list(" -3, 5,-3 ") == std::vector<int>{-3, 5, -3});
    CHECK(cli::parse_int_list("").empty());
    CHECK_THROWS_AS(cli::parse_int_list("1,,2"), Error);
    CHECK_THROWS_AS(cli::parse_int_list("1,2,"), Error);
    CHECK_THROWS_AS(cli::parse_int_list("1;2"), Error);
    CHECK_THROWS_AS(cli::parse_int_list("99999999999"), Error);
    CHECK(cli::join(std::vector<int>{-1, 2}) == "-1,2");
}

TEST_CASE("derive and integrate") {
    const auto d = run({"derive", "5,2,7,4,1,6,3"});
    CHECK(d.code == cli::kExitOk);
    CHECK(d.out == "-3,5,-3,-3,5,-3\n");
    const auto i = run({"integrate", "-3,5,-3,-3,5,-3"});
    CHECK(i.code == cli::kExitOk);
    CHECK(i.out == "5,2,7,4,1,6,3\n");
    CHECK(run({"integrate", "1,-1"}).code == cli::kExitInvalid);
}

TEST_CASE("derive then integrate reproduces the input") {
    for (const std::string p : {"1", "2,1", "3,5,1,6,2,4", "1,6,11,16,3,8,13,18,5,10,15,2,7,12,17,4,9,14"}) {
        const auto d = run({"derive", p});
        REQUIRE(d.code == 0);
        const auto i = run({"integrate", d.out.substr(0, d.out.size() - 1)});
        CHECK(i.out == p + "\n");
    }
}

TEST_CASE("check exit codes") {
    CHECK(run({"check", "--property", "one-costas", "1,2,3"}).code == cli::kExitFalse);
    CHECK(run({"check", "--property", "costas", "4,3,1,2"}).code == cli::kExitOk);
    CHECK(run({"check", "--property", "k-costas=1", "1,3,4,2,5"}).code == cli::kExitOk);
    CHECK(run({"check", "--property", "lipschitz=2", "2,4,1,3"}).code == cli::kExitFalse);
    CHECK(run({"check", "--property", "dpair=5,-3", "5,2,7,4,1,6,3"}).code == cli::kExitOk);
    CHECK(run({"check", "--property", "convex", "6,4,2,1,3,5"}).code == cli::kExitOk);
    CHECK(run({"check", "--property", "mid-alternating", "4,6,2,7,3,8,1,5"}).code == cli::kExitOk);
    CHECK(run({"check", "--property", "centrosymmetric", "1,3,2"}).code == cli::kExitFalse);
    CHECK(run({"check", "--property", "costas-centrosymmetric", "2,4,3,1,8,6,5,7"}).code == cli::kExitOk);
    CHECK(run({"check", "--property", "costas-signed", "2,4,-1,-3"}).code == cli::kExitOk);
    CHECK(run({"check", "--property", "costas-half=6", "1,8,10,9,2,7"}).code == cli::kExitOk);
    CHECK(run({"check", "--property", "jedwab", "4,3,1,2"}).code == cli::kExitOk);
}

TEST_CASE("invalid input exits 2 with one diagnostic line") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"derive", "1,1"},
             {"derive", "1,x"},
             {"check", "--property", "nonsense", "1,2"},
             {"check", "--property", "k-costas=5", "1,2"},
             {"construct", "dpair", "--a", "2", "--b", "4"},
             {"enumerate", "--property", "costas", "--n", "13"},
             {"count", "--property", "all", "--n", "3"},
             {"frobnicate"},
             {},
             {"construct"},
             {"--format", "xml", "derive", "1"},
             {"--workers", "0", "derive", "1"},
         }) {
        const auto r = run(args);
        CHECK(r.code == cli::kExitInvalid);
        CHECK(r.out.empty());
        REQUIRE_FALSE(r.err.empty());
        CHECK(r.err.find('\n') == r.err.size() - 1);
    }
}

TEST_CASE("triangle rendering") {
    CHECK(run({"triangle", "4,3,1,2"}).out == "4 3 1 2\n-1 -2 1\n-3 -1\n-2\n");
    CHECK(run({"triangle", "4,3,1,2", "--render", "staggered"}).out ==
          "  4     3     1     2\n"
          "    -1    -2     1\n"
          "       -3    -1\n"
          "          -2\n");
    const auto j = nlohmann::json::parse(run({"--format", "json", "triangle", "4,3,1,2"}).out);
    CHECK(j["result"]["rows"][1] == nlohmann::json({-1, -2, 1}));
    CHECK(run({"triangle", "1,2,1"}).code == cli::kExitInvalid);
}

TEST_CASE("json envelope") {
    const auto r = run({"construct", "dpair", "--a", "4", "--b", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "construct dpair");
    CHECK(j["inputs"]["a"] == 4);
    CHECK(j["result"]["permutation"] == nlohmann::json({1, 5, 9, 4, 8, 3, 7, 2, 6}));
    CHECK(j["result"]["inverse_dpair"] == nlohmann::json({7, -2}));
    CHECK(j["metadata"].contains("runtime_ms"));
    CHECK(j["metadata"]["workers"] == 1);

    const auto odd = nlohmann::json::parse(run({"--format", "json", "construct", "max-global", "--n", "7"}).out);
    CHECK(odd["result"]["global_variation"] == 23);
    CHECK(odd["metadata"].contains("alt_odd_value"));
}

TEST_CASE("constructions") {
    CHECK(run({"construct", "pi", "--n", "5"}).out == "permutation: 3,4,2,5,1\nderivative: 1,-2,3,-4\n");
    CHECK(run({"construct", "pi-star", "--n", "6"}).out.starts_with("permutation: 6,4,2,1,3,5\n"));
    CHECK(run({"construct", "maximin", "--n", "6"}).out.starts_with("permutation: 4,1,5,2,6,3\n"));
    CHECK(run({"construct", "realize-shift", "--n", "7", "--s", "4"}).out.starts_with("permutation: 5,1,2,3,4,6,7\n"));
    CHECK(run({"construct", "min-local", "--n", "12"}).out.ends_with("derivative: 1,-2,3,-4,5,6,-5,4,-3,2,-1\n"));
    CHECK(run({"construct", "max-global", "--n", "8"}).out.starts_with("permutation: 4,6,1,7,2,8,3,5\n"));
}

TEST_CASE("tables and counts") {
    const auto csv = run({"table", "--kind", "one-costas", "--max-n", "4", "--format", "csv"});
    CHECK(csv.out == "n,total,count,fraction\n1,1,1,100.0\n2,2,2,100.0\n3,6,4,66.7\n4,24,12,50.0\n");
    const auto j = nlohmann::json::parse(run({"--format", "json", "--workers", "2", "count", "--property", "one-costas", "--n", "7"}).out);
    CHECK(j["result"]["count"] == 788);
    CHECK(j["metadata"]["workers"] == 2);
    CHECK(run({"count", "--property", "costas", "--n", "5", "--format", "csv"}).out == "n,total,count,fraction\n5,120,40,33.3\n");
    CHECK(run({"enumerate", "--property", "convex", "--n", "3"}).out == "1,2,3\n2,1,3\n3,1,2\n3,2,1\n");
    CHECK(run({"gamma", "--n", "4"}).out.starts_with("m: 4\n"));
}

TEST_CASE("verify") {
    CHECK(run({"verify", "examples"}).code == cli::kExitOk);
    const auto f = run({"verify", "figure1", "--max-n", "8"});
    CHECK(f.code == cli::kExitOk);
    CHECK(f.out.find("3936") != std::string::npos);
}
