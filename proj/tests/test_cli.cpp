#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "ptau/cli.hpp"
#include "ptau/series.hpp"

using namespace ptau;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "ptau");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ptau_test_" + name);
}

}  // namespace

TEST_CASE("coeffs emits the exact series as JSON") {
    const auto r = invoke({"coeffs", "--preset", "rational-example", "--order", "12"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = json::parse(r.out);
    const auto s = coefficient_series_from_json(j);
    REQUIRE(s.coeffs.size() == 13);
    for (std::size_t m = 0; m <= 12; ++m) CHECK(s.coeffs[m] == oracle::exp_cubic_coefficient(m));
    CHECK(j["level"] == "P_II");
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"symbolic", "--order", "12"};
    const auto a = invoke(args), b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto z1 = invoke({"zeros", "--preset", "p34-symmetric", "--orders", "40,61"});
    const auto z2 = invoke({"zeros", "--preset", "p34-symmetric", "--orders", "40,61"});
    CHECK(z1.code == 0);
    CHECK(z1.out == z2.out);
    CHECK(z1.out.rfind("re,im,residual,stability,trusted,source_order", 0) == 0);
}

TEST_CASE("explicit parameters and the CSV format") {
    const auto r = invoke({"coeffs", "--kappa", "1", "--g3", "-9/16", "--order", "6", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("n,power,coeff\n", 0) == 0);
    CHECK(r.out.find("3,4,-1/24") != std::string::npos);
    const auto d = invoke({"coeffs", "--kappa", "0.5", "--order", "4"});
    CHECK(d.code == 0);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(invoke({}).code == cli::kExitUsage);
    CHECK(invoke({"nonsense"}).code == cli::kExitUsage);
    CHECK(invoke({"coeffs", "--kappa", "1/0"}).code == cli::kExitUsage);
    CHECK(invoke({"coeffs", "--kappa", "abc"}).code == cli::kExitUsage);
    CHECK(invoke({"coeffs", "--preset", "unknown"}).code == cli::kExitUsage);
    CHECK(invoke({"coeffs", "--preset", "weierstrass"}).code == cli::kExitUsage);
    CHECK(invoke({"coeffs", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(invoke({"degenerate", "--preset", "rational-example"}).code == cli::kExitUsage);
    CHECK(invoke({"verify", "--suite", "no-such-suite"}).code == cli::kExitUsage);
    const auto w = invoke({"coeffs", "--preset", "weierstrass", "--g2", "1", "--g3", "0", "--order", "8"});
    CHECK(w.code == 0);
}

TEST_CASE("verify suites succeed") {
    const auto r = invoke({"verify", "--suite", "paper-table"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["passed"] == true);
    const auto d = invoke({"verify", "--suite", "divisibility", "--order", "60"});
    CHECK(d.code == 0);
}

TEST_CASE("degenerate and shift commands") {
    const auto d = invoke({"degenerate", "--preset", "rational-example", "--at", "0.5,0.25", "--order", "80"});
    REQUIRE(d.code == 0);
    CHECK(json::parse(d.out).contains("residuals"));
    const auto s = invoke({"shift", "--preset", "p34-symmetric", "--at", "3.1093845295416895", "--order", "150"});
    CHECK(s.code == 0);
    const auto j = json::parse(s.out);
    CHECK(j["verify"]["within_bound"] == true);
}

TEST_CASE("config file values are overridden by flags") {
    const auto path = temp_file("config.ini");
    {
        std::ofstream cfg(path);
        cfg << "preset=rational-example\norder=6\n";
    }
    const auto a = invoke({"coeffs", "--config", path.string()});
    REQUIRE(a.code == 0);
    CHECK(coefficient_series_from_json(json::parse(a.out)).order == 6u);
    const auto b = invoke({"coeffs", "--config", path.string(), "--order", "9"});
    REQUIRE(b.code == 0);
    CHECK(coefficient_series_from_json(json::parse(b.out)).order == 9u);
    std::filesystem::remove(path);
}

TEST_CASE("output to a file") {
    const auto path = temp_file("out.json");
    const auto r = invoke({"coeffs", "--preset", "p34-symmetric", "--order", "9", "--output", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto j = json::parse(in);
    CHECK(coefficient_series_from_json(j).coeffs.size() == 10);
    std::filesystem::remove(path);
}

TEST_CASE("command names round trip") {
    for (auto c : {cli::Command::coeffs, cli::Command::symbolic, cli::Command::zeros, cli::Command::shift,
                   cli::Command::pole_field, cli::Command::verify, cli::Command::degenerate})
        CHECK(cli::parse_command(cli::to_string(c)) == c);
    CHECK_FALSE(cli::parse_command("bogus").has_value());
}
