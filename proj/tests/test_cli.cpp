#include "chainrad/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = chainrad::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) result.push_back(line);
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Fresh scratch directory per test case.
struct Scratch {
    fs::path dir;
    explicit Scratch(const std::string& name) : dir(fs::temp_directory_path() / ("chainrad_cli_" + name)) {
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    fs::path write(const std::string& file, const std::string& content) const {
        std::ofstream(dir / file) << content;
        return dir / file;
    }
};

json error_line(const CliResult& r) { return json::parse(r.err); }

}  // namespace

TEST_CASE("verify reports a passing oracle check as JSON") {
    const auto r = invoke({"verify", "--n", "6", "--m", "2"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["command"] == "verify");
    CHECK(doc["status"] == "pass");
    CHECK(doc["params"]["n"] == 6);
    CHECK(doc["results"]["failures"].empty());
    CHECK(r.err.empty());
}

TEST_CASE("pattern emits one CSV row per angle") {
    const auto r = invoke({"pattern", "--n", "5", "--g", "1", "--ka", "1", "--points", "361"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 363);
    CHECK(rows[0].rfind("# n=5,g=1,ka=1,", 0) == 0);
    CHECK(rows[1] == "theta,value");
    CHECK(rows[2].rfind("0,", 0) == 0);
    // theta = pi/2 gives k.a = 0: the small-sample value for N=5, g=1
    const auto mid = rows[2 + 180];
    const double value = std::stod(mid.substr(mid.find(',') + 1));
    CHECK(value == doctest::Approx(2.0 / 6.0 / std::pow(std::tan(std::numbers::pi / 12.0), 2)).epsilon(1e-12));
}

TEST_CASE("census writes counts and the gradient") {
    Scratch scratch("census");
    const auto summary = (scratch.dir / "summary.json").string();
    const auto r = invoke({"census", "--n-max", "60", "--ka", "0", "--summary", summary});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2 + 51);
    CHECK(rows[0].find("gradient=") != std::string::npos);
    CHECK(rows[1] == "n,count");
    CHECK(rows[2] == "10,9");
    const auto doc = json::parse(slurp(summary));
    CHECK(doc["command"] == "census");
    CHECK(doc["results"]["entries"].size() == 51);
    const double gradient = doc["results"]["gradient"];
    CHECK(gradient > 0.9);
    CHECK(gradient < 1.0);
}

TEST_CASE("eigen lists a sector and expands a state") {
    SUBCASE("sector listing") {
        const auto r = invoke({"eigen", "--n", "2", "--m", "1", "--omega0", "100", "--omega", "1"});
        REQUIRE(r.code == 0);
        const auto rows = lines(r.out);
        REQUIRE(rows.size() == 4);
        CHECK(rows[1] == "label,energy,parity");
        CHECK(rows[2] == "1,101,1");
        CHECK(rows[3] == "2,99,-1");
    }
    SUBCASE("expanded state") {
        const auto r = invoke({"eigen", "--n", "2", "--g", "1,2"});
        REQUIRE(r.code == 0);
        const auto rows = lines(r.out);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0] == "# n=2,g=1 2,energy=200,parity=1");
        CHECK(rows[2].rfind("1 2,", 0) == 0);
        CHECK(std::stod(rows[2].substr(4)) == doctest::Approx(-1.0).epsilon(1e-14));
    }
    SUBCASE("json") {
        const auto r = invoke({"eigen", "--n", "3", "--m", "2", "--format", "json"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["results"].size() == 3);
    }
}

TEST_CASE("decay and scan outputs") {
    const auto d = invoke({"decay", "--n", "3", "--ka", "0"});
    REQUIRE(d.code == 0);
    const auto rows = lines(d.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[1] == "g,rate,class");
    CHECK(rows[2].ends_with(",superradiant"));
    CHECK(rows[3].rfind("2,", 0) == 0);
    CHECK(rows[3].ends_with(",subradiant"));
    CHECK(std::abs(std::stod(rows[3].substr(2))) < 1e-14);

    const auto s = invoke({"scan", "--ka-min", "0", "--ka-max", "1", "--ka-steps", "3", "--n-min", "5", "--n-max", "20"});
    REQUIRE(s.code == 0);
    const auto srows = lines(s.out);
    REQUIRE(srows.size() == 5);
    CHECK(srows[1] == "ka,fraction");
    CHECK(srows[3].rfind("0.5,", 0) == 0);
}

TEST_CASE("parse errors exit 2") {
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"pattern", "--n", "five"}).code == 2);
    CHECK(invoke({"pattern", "--bogus", "1"}).code == 2);
    CHECK(invoke({}).code == 2);
    const auto r = invoke({"--config", "/nonexistent/chainrad.json"});
    CHECK(r.code == 2);
    CHECK(error_line(r)["status"] == "error");
    CHECK(error_line(r)["exit_code"] == 2);
}

TEST_CASE("validation errors exit 3 and name the parameter") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
        {{"pattern", "--n", "5", "--g", "6", "--ka", "1"}, "g"},
        {{"pattern", "--n", "5", "--g", "0"}, "g"},
        {{"pattern", "--n", "0", "--g", "1"}, "n"},
        {{"pattern", "--n", "5", "--g", "1", "--ka", "-1"}, "ka"},
        {{"pattern", "--n", "5", "--g", "1", "--points", "0"}, "points"},
        {{"pattern-atom", "--n", "5", "--j", "9"}, "j"},
        {{"pattern-atom", "--n", "5"}, "j"},
        {{"decay", "--n", "4", "--u", "1.5"}, "u"},
        {{"decay", "--ka", "1"}, "n"},
        {{"verify", "--n", "4"}, "m"},
        {{"verify", "--n", "4", "--m", "5"}, "m"},
        {{"verify", "--n", "40", "--m", "20"}, "m"},
        {{"eigen", "--n", "4", "--g", "2,1"}, "g"},
        {{"eigen", "--n", "4", "--m", "1", "--g", "1,2"}, "m"},
        {{"census", "--n-min", "0"}, "n-min"},
        {{"census", "--n-min", "20", "--n-max", "10"}, "n-max"},
        {{"scan", "--n-max", "20"}, "ka-grid"},
        {{"scan", "--ka-grid", "1,-2"}, "ka-grid"},
        {{"decay", "--n", "3", "--format", "xml"}, "format"},
    };
    for (const auto& [args, parameter] : cases) {
        CAPTURE(args.front());
        CAPTURE(parameter);
        const auto r = invoke(args);
        CHECK(r.code == 3);
        CHECK(r.out.empty());
        const auto e = error_line(r);
        CHECK(e["exit_code"] == 3);
        CHECK(e["parameter"] == parameter);
        CHECK_FALSE(e["message"].get<std::string>().empty());
    }
}

TEST_CASE("computation failures exit 4") {
    const auto r = invoke({"decay", "--n", "3", "--out", "/nonexistent-dir/chainrad/out.csv"});
    CHECK(r.code == 4);
    CHECK(error_line(r)["exit_code"] == 4);
}

TEST_CASE("config file with flag override") {
    Scratch scratch("config");
    const auto cfg = scratch.write("run.json", R"({"command": "pattern", "n": 4, "g": 2, "ka": 0.5, "points": 7})");
    const auto base = invoke({"--config", cfg.string()});
    REQUIRE(base.code == 0);
    CHECK(lines(base.out).size() == 9);
    CHECK(lines(base.out)[0].rfind("# n=4,g=2,ka=0.5,", 0) == 0);

    const auto overridden = invoke({"--config", cfg.string(), "pattern", "--points", "3", "--ka", "2"});
    REQUIRE(overridden.code == 0);
    CHECK(lines(overridden.out).size() == 5);
    CHECK(lines(overridden.out)[0].rfind("# n=4,g=2,ka=2,", 0) == 0);

    const auto unknown = scratch.write("bad.json", R"({"command": "decay", "n": 3, "colour": "red"})");
    const auto r = invoke({"--config", unknown.string()});
    CHECK(r.code == 2);
    CHECK(error_line(r)["message"].get<std::string>().find("colour") != std::string::npos);

    CHECK(invoke({"--config", scratch.write("nested.json", R"({"command": "decay", "n": {"v": 3}})").string()}).code == 2);
    CHECK(invoke({"--config", scratch.write("type.json", R"({"command": "decay", "n": "three"})").string()}).code == 2);
    CHECK(invoke({"--config", scratch.write("array.json", "[1, 2]").string()}).code == 2);
    CHECK(invoke({"--config", scratch.write("broken.json", "{").string()}).code == 2);
    CHECK(invoke({"--config", scratch.write("range.json", R"({"command": "decay", "n": 3, "u": 2})").string()}).code == 3);
}

TEST_CASE("output files resolve against the output directory variable") {
    Scratch scratch("outdir");
    ::setenv(chainrad::cli::kOutputDirEnv, scratch.dir.c_str(), 1);
    const auto r = invoke({"decay", "--n", "4", "--ka", "1", "--out", "rates.csv"});
    ::unsetenv(chainrad::cli::kOutputDirEnv);
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const auto written = slurp(scratch.dir / "rates.csv");
    CHECK(written == invoke({"decay", "--n", "4", "--ka", "1"}).out);

    const auto absolute = scratch.dir / "abs.json";
    REQUIRE(invoke({"decay", "--n", "4", "--format", "json", "--out", absolute.string()}).code == 0);
    CHECK(json::parse(slurp(absolute))["command"] == "decay");
    CHECK(invoke({"decay", "--n", "4", "--out", "-"}).out == invoke({"decay", "--n", "4"}).out);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::vector<std::string>> commands = {
        {"eigen", "--n", "5", "--m", "2"},
        {"eigen", "--n", "5", "--g", "1,3", "--format", "json"},
        {"verify", "--n", "5", "--m", "2"},
        {"pattern", "--n", "5", "--g", "2", "--ka", "1.3", "--points", "91", "--dipole-weight"},
        {"pattern-atom", "--n", "6", "--j", "2", "--ka", "2", "--u", "0.5", "--points", "45"},
        {"decay", "--n", "12", "--ka", "2.2", "--u", "0.3"},
        {"census", "--n-min", "3", "--n-max", "30", "--ka", "1", "--format", "json"},
        {"scan", "--ka-grid", "0,0.5,4", "--n-max", "25"},
    };
    for (const auto& args : commands) {
        CAPTURE(args.front());
        const auto first = invoke(args);
        const auto second = invoke(args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
        CHECK_FALSE(first.out.empty());
    }
}

TEST_CASE("installed binary: exit codes and stable output") {
    Scratch scratch("binary");
    const std::string bin = CHAIN_RADIANCE_BIN;
    auto shell = [&](const std::string& args, const std::string& out_name) {
        const std::string command = "\"" + bin + "\" " + args + " > \"" + (scratch.dir / out_name).string() + "\" 2> \"" +
                                    (scratch.dir / (out_name + ".err")).string() + "\"";
        const int status = std::system(command.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    CHECK(shell("decay --n 7 --ka 1.5", "a.csv") == 0);
    CHECK(shell("decay --n 7 --ka 1.5", "b.csv") == 0);
    CHECK(slurp(scratch.dir / "a.csv") == slurp(scratch.dir / "b.csv"));
    CHECK(slurp(scratch.dir / "a.csv") == invoke({"decay", "--n", "7", "--ka", "1.5"}).out);
    CHECK(shell("--help", "help.txt") == 0);
    CHECK(slurp(scratch.dir / "help.txt").find("census") != std::string::npos);
    CHECK(shell("nonsense", "e.txt") == 2);
    CHECK(shell("decay --n 0", "e.txt") == 3);
    CHECK(json::parse(slurp(scratch.dir / "e.txt.err"))["parameter"] == "n");
}
