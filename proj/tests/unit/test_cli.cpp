#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "csv.hpp"
#include "ginicor/error.hpp"

using namespace ginicor;
using json = nlohmann::json;

namespace {

const std::string golden_dir = GINICOR_GOLDEN_DIR;
const std::string iris = GINICOR_DATA_DIR "/iris.csv";

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("ginicor_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("oracle report matches the golden file byte for byte") {
    const auto r = invoke({"oracle", "exp", "--p", "0.5", "--theta", "1", "--beta", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(golden_dir + "/oracle_exp.json"));
}

TEST_CASE("gcor report on a small table matches the golden result") {
    const auto r = invoke({"gcor", "--data", golden_dir + "/small.csv", "--label", "g"});
    REQUIRE(r.code == 0);
    const auto report = json::parse(r.out);
    CHECK(report["command"] == "gcor");
    CHECK(report["result"] == json::parse(slurp(golden_dir + "/gcor_small_result.json")));
    CHECK(report["meta"]["library"] == "ginicor");
}

TEST_CASE("csv and json carry identical numbers") {
    const auto j = invoke({"gcor", "--data", iris, "--label", "Species", "--kind", "U"});
    const auto c = invoke({"gcor", "--data", iris, "--label", "Species", "--kind", "U", "--format", "csv"});
    REQUIRE(j.code == 0);
    REQUIRE(c.code == 0);
    const auto report = json::parse(j.out);
    std::istringstream rows(c.out);
    std::string line;
    std::getline(rows, line);
    CHECK(line == "field,value");
    bool seen = false;
    while (std::getline(rows, line)) {
        if (line.rfind("result.estimate,", 0) == 0) {
            CHECK(std::stod(line.substr(16)) == report["result"]["estimate"].get<double>());
            seen = true;
        }
    }
    CHECK(seen);
    CHECK(report["result"]["estimate"].get<double>() == doctest::Approx(0.6239).epsilon(1e-3));
}

TEST_CASE("feature projection selects columns by name or number") {
    const auto by_name = invoke({"gcor", "--data", iris, "--label", "Species", "--features", "Petal.Width"});
    const auto by_number = invoke({"gcor", "--data", iris, "--label", "5", "--features", "4"});
    REQUIRE(by_name.code == 0);
    REQUIRE(by_number.code == 0);
    const auto a = json::parse(by_name.out), b = json::parse(by_number.out);
    CHECK(a["result"] == b["result"]);
    CHECK(a["inputs"]["features"] == json::array({"Petal.Width"}));
    CHECK(a["result"]["fast_path"] == true);
}

TEST_CASE("malformed data names the row and column") {
    const auto path = temp_file("bad.csv", "x,y,g\n1,2,a\n2,abc,b\n3,4,a\n");
    const auto r = invoke({"gcor", "--data", path, "--label", "g"});
    CHECK(r.code == 2);
    CHECK(r.err.find("'abc' at row 3, column y") != std::string::npos);
    const auto ragged = temp_file("ragged.csv", "x,g\n1,a\n2\n");
    CHECK(invoke({"gcor", "--data", ragged, "--label", "g"}).code == 2);
    CHECK(invoke({"gcor", "--data", "/nonexistent/file.csv", "--label", "g"}).code == 2);
}

TEST_CASE("exit codes distinguish usage, data and numeric errors") {
    CHECK(invoke({"gcor", "--data", iris, "--label", "nope"}).code == 1);
    CHECK(invoke({"gcor", "--data", iris}).code == 1);
    CHECK(invoke({"gcor", "--data", iris, "--label", "Species", "--alpha", "3"}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"gcor", "--bogus-flag"}).code == 1);
    const auto flat = temp_file("flat.csv", "x,g\n1,a\n1,b\n1,a\n1,b\n");
    CHECK(invoke({"gcor", "--data", flat, "--label", "g"}).code == 3);
    const auto one = temp_file("one.csv", "x,g\n1,a\n2,a\n3,a\n");
    CHECK(invoke({"gcor", "--data", one, "--label", "g"}).code == 3);
}

TEST_CASE("seeded test output is byte-identical across runs and thread counts") {
    const std::vector<std::string> base = {"test", "--data", iris, "--label", "Species", "--m", "99",
                                           "--seed", "7", "--rho0", "0.7"};
    auto with = [&](std::string threads) {
        auto args = base;
        args.insert(args.end(), {"--threads", threads});
        return invoke(args);
    };
    const auto a = with("1"), b = with("1"), c = with("4");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    const auto report = json::parse(a.out);
    CHECK(report["result"]["p_value"].get<double>() == doctest::Approx(0.01));
    CHECK(report["result"].contains("power"));
}

TEST_CASE("missing seed is generated and reported") {
    const auto r = invoke({"test", "--data", iris, "--label", "Species", "--m", "9"});
    CHECK(r.code == 0);
    CHECK(r.err.find("(generated)") != std::string::npos);
}

TEST_CASE("config file supplies defaults that flags override") {
    const auto config = temp_file("run.conf", "# defaults\nlabel = Species\nkind = U\nalpha=0.5\n");
    const auto r = invoke({"gcor", "--data", iris, "--config", config, "--alpha", "1"});
    REQUIRE(r.code == 0);
    const auto report = json::parse(r.out);
    CHECK(report["inputs"]["kind"] == "U");
    CHECK(report["inputs"]["alpha"].get<double>() == 1.0);
}

TEST_CASE("output option writes the report to a file") {
    const auto path = (std::filesystem::temp_directory_path() / "ginicor_test_out.json").string();
    const auto r = invoke({"oracle", "normal-scale", "--p", "0.5", "--r", "3", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(json::parse(slurp(path))["result"]["rho_g"].get<double>() == doctest::Approx(0.0557).epsilon(1e-3));
}

TEST_CASE("mixture grammar") {
    const auto m = cli::parse_mixture("0.3 exp(1) + 0.7 exp(4)");
    REQUIRE(m.components.size() == 2);
    CHECK(m.components[1].family == Family::exponential);
    CHECK(m.components[1].first == 4.0);
    CHECK(m.weights[0] == 0.3);
    const auto equal = cli::parse_mixture("normal(0,1) + normal(1, 2) + cauchy(0,1)");
    CHECK(equal.weights.size() == 3);
    CHECK(equal.weights[2] == doctest::Approx(1.0 / 3.0));
    CHECK(equal.components[2].family == Family::cauchy);
    CHECK(cli::parse_mixture("mvn(3)").dims() == 3);
    CHECK_THROWS_AS(cli::parse_mixture("0.5 exp(1) + exp(2)"), Error);
    CHECK_THROWS_AS(cli::parse_mixture("0.5 gamma(1) + 0.5 exp(2)"), Error);
    CHECK_THROWS_AS(cli::parse_mixture(""), Error);
}

TEST_CASE("csv parsing handles quotes and line endings") {
    const auto t = cli::parse_csv("\xEF\xBB\xBF" "a,\"b,c\"\r\n1,\"x \"\"q\"\"\"\r\n\r\n2,y\r\n");
    CHECK(t.header == std::vector<std::string>{"a", "b,c"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][1] == "x \"q\"");
    CHECK(cli::resolve_column(t.header, "B,C") == 1);
    CHECK_THROWS_AS(cli::parse_csv("a,b\n"), Error);
}

TEST_CASE("round to twelve significant digits") {
    CHECK(cli::round12(0.1 + 0.2) == 0.3);
    CHECK(cli::round12(2.0 / 3.0) == 0.666666666667);
}
