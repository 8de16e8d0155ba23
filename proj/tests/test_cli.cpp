#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "grunwald/weights.hpp"

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GRUNWALD_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CmdResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("weights command prints the expected rows") {
    auto r = run_cli("weights --alpha 2 --count 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1,-2,1,0") != std::string::npos);

    r = run_cli("weights --alpha 0.8 --count 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1,-0.8,-0.08") != std::string::npos);

    r = run_cli("weights --alpha 1 --count 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1,-1") != std::string::npos);
}

TEST_CASE("weights command: json format and precondition exit code") {
    auto r = run_cli("weights --alpha 0.8 --count 2 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["alpha"].get<double>() == doctest::Approx(0.8));
    CHECK(j["weights"].size() == 3);
    CHECK(j["weights"][2].get<double>() == doctest::Approx(-0.08));

    r = run_cli("weights --alpha -1 --count 2");
    CHECK(r.exit_code == 2);
    r = run_cli("weights --alpha 0 --count 2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("stability command emits JSON reports") {
    auto r = run_cli("stability --alpha 1.8 --scheme p:1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK_FALSE(j["sign_change"].get<bool>());
    CHECK(j["c"].get<double>() == doctest::Approx(0.42).epsilon(0.05));

    r = run_cli("stability --alpha 1.8 --scheme p:0");
    j = nlohmann::json::parse(r.out);
    CHECK(j["sign_change"].get<bool>());

    r = run_cli("stability --alpha 0.8 --scheme order2");
    j = nlohmann::json::parse(r.out);
    CHECK_FALSE(j["sign_change"].get<bool>());

    // k_samples below the documented minimum
    r = run_cli("stability --alpha 1.8 --scheme p:1 --samples 128");
    CHECK(r.exit_code == 2);
}

TEST_CASE("norms command: contraction table and t = 0 column") {
    const auto r = run_cli("norms --alpha 1.8 --scheme p:1 --tgrid 0,0.1,1,10 --hgrid 1");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "t,h,norm");
    int rows = 0;
    while (std::getline(is, line)) {
        const auto last = line.rfind(',');
        const double norm = std::stod(line.substr(last + 1));
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
        ++rows;
    }
    CHECK(rows == 4);
}

TEST_CASE("table1 command produces four rows with plausible errors") {
    const auto r = run_cli("table1 --scheme order2");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "dx,error,ratio");
    std::vector<double> errors;
    while (std::getline(is, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        errors.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
    }
    REQUIRE(errors.size() == 4);
    CHECK(errors[0] > 6.825e-5 / 2.0);
    CHECK(errors[0] < 6.825e-5 * 2.0);
}

TEST_CASE("consistency command: small study emits the fitted order") {
    const auto r = run_cli("consistency --alpha 1.8 --scheme order2 --resolutions 4,5,6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("level,h,error,ratio,fitted_order", 0) == 0);
    // last column of the last row = fitted order, close to 2
    std::istringstream is(r.out);
    std::string line, last;
    while (std::getline(is, line))
        if (!line.empty()) last = line;
    const double fitted = std::stod(last.substr(last.rfind(',') + 1));
    CHECK(fitted == doctest::Approx(2.0).epsilon(0.2));
}

TEST_CASE("example1 command: tiny run with format and manifest") {
    const std::string prefix = "/tmp/grunwald_cli_test_example1";
    const auto r = run_cli("example1 --f f3 --scheme 2 --resolutions 16,32,64 --out " + prefix);
    CHECK(r.exit_code == 0);
    std::ifstream csv(prefix + ".csv");
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "nx,h,error,ratio,fitted_order");

    std::ifstream mf(prefix + ".manifest.json");
    REQUIRE(mf.good());
    nlohmann::json manifest;
    mf >> manifest;
    CHECK(manifest["command"] == "example1");
    CHECK(manifest["tool_version"] == "0.1.0");
    CHECK(manifest["outputs"].size() == 1);
}

TEST_CASE("csv output round-trips through shortest-decimal serialization") {
    const auto r = run_cli("weights --alpha 1.8 --count 6");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    // reparse and reprint: values must match the library exactly
    std::istringstream cells(row);
    std::string cell;
    std::vector<double> parsed;
    while (std::getline(cells, cell, ',')) parsed.push_back(std::stod(cell));
    REQUIRE(parsed.size() == 7);
    const auto w = grunwald::grunwald_weights(1.8L, 6);
    for (std::size_t m = 0; m < parsed.size(); ++m)
        CHECK(parsed[m] == w[m]); // exact: shortest round-trip serialization
}

TEST_CASE("unknown flags exit with code 2") {
    const auto r = run_cli("weights --alpha 1.8 --nonsense 3");
    CHECK(r.exit_code == 2);
}
