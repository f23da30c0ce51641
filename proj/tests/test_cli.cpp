#include <doctest.h>

#include <sstream>

#include "chebgf/cli.hpp"
#include "support.hpp"

using namespace chebgf;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "chebgf");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fs") {
    auto r = run_cli({"fs", "--s", "1"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "numerator: 1 - t\ndenominator: 1 - (x+2)*t + t^2\n");

    r = run_cli({"fs", "--s", "2"});
    CHECK(r.out == "numerator: 1 - 3*t + 3*t^2 - t^3\ndenominator: 1 - (x+4)*t - (2*x-6)*t^2 - (x+4)*t^3 + t^4\n");

    r = run_cli({"fs", "--s", "1", "--format", "expanded"});
    CHECK(r.out == "numerator: -t + 1\ndenominator: t^2 - x*t - 2*t + 1\n");

    r = run_cli({"fs", "--s", "2", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["s"] == 2);
    auto [n2, d2] = tsupport::closed_form_F2();
    CHECK(cli::bipoly_from_json(j["numerator"]) == n2);
    CHECK(cli::bipoly_from_json(j["denominator"]) == d2);
    CHECK(j["denominator"]["t_coeffs"][1] == nlohmann::json::array({"-4", "-1"}));

    CHECK(run_cli({"fs", "--s", "0"}).code == cli::kExitUsage);
    CHECK(run_cli({"fs", "--s", "9"}).code == cli::kExitUsage);
    CHECK(run_cli({"--max-s", "3", "fs", "--s", "4"}).code == cli::kExitUsage);
    CHECK(run_cli({"fs", "--s", "1", "--format", "latex"}).code == cli::kExitUsage);
    CHECK(run_cli({"fs"}).code == cli::kExitUsage);
    CHECK(run_cli({}).code == cli::kExitUsage);
}

TEST_CASE("output is deterministic across runs and thread counts") {
    auto a = run_cli({"fs", "--s", "4", "--format", "json"});
    auto b = run_cli({"fs", "--s", "4", "--format", "json"});
    auto c = run_cli({"--threads", "4", "fs", "--s", "4", "--format", "json"});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("json round trip") {
    for (unsigned s = 1; s <= 3; ++s) {
        RatFun f = compute_Fs(s);
        auto j = cli::fs_to_json(s, f);
        CHECK(cli::bipoly_from_json(j["numerator"]) == f.numerator());
        CHECK(cli::bipoly_from_json(j["denominator"]) == f.denominator());
        CHECK(cli::bipoly_to_json(cli::bipoly_from_json(j["denominator"])) == j["denominator"]);
    }
    BiPoly r = cli::bipoly_from_json(nlohmann::json::parse(R"({"t_coeffs": [["1/2", "0"], [], ["-3"]]})"));
    CHECK(r == BiPoly{UniPoly{Rational(1, 2)}, UniPoly(), UniPoly(-3)});
}

TEST_CASE("hpoly, expand, verify, bench") {
    auto r = run_cli({"hpoly", "--s", "2", "--m", "3"});
    CHECK(r.out == "x^3 + 13*x^2 + 26*x + 1\n");
    CHECK(run_cli({"hpoly", "--s", "7", "--m", "0"}).out == "1\n");
    auto j = nlohmann::json::parse(run_cli({"hpoly", "--s", "3", "--m", "2", "--format", "json"}).out);
    CHECK(j["coeffs"] == nlohmann::json::array({"1", "18", "1"}));
    CHECK(run_cli({"hpoly", "--s", "0", "--m", "2"}).code == cli::kExitUsage);

    r = run_cli({"expand", "--s", "2", "--terms", "4"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "H_0 = 1\nH_1 = x + 1\nH_2 = x^2 + 7*x + 1\nH_3 = x^3 + 13*x^2 + 26*x + 1\n");

    r = run_cli({"verify", "--suite", "initial", "--suite", "degree-identity"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("PASS  initial") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    r = run_cli({"verify", "--suite", "trace", "--s-max", "2", "--m-max", "4", "--json"});
    CHECK(r.code == cli::kExitOk);
    CHECK(nlohmann::json::parse(r.out)[0]["status"] == "pass");
    CHECK(run_cli({"verify", "--suite", "bogus"}).code == cli::kExitUsage);

    r = run_cli({"bench", "--s-max", "3", "--csv"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.rfind("s,seconds,deg_t_den,deg_x_den,deg_t_num,deg_x_num\n", 0) == 0);
    CHECK(r.out.find("\n3,") != std::string::npos);

    CHECK(run_cli({"--help"}).code == cli::kExitOk);
}
