#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "json.hpp"
#include "selftest.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cycid::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "cycid_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write_file(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("cli decide") {
    const Outcome holds = cli({"decide", "-h", "4", "-d", "1", "x y^2 = x^2 y"});
    CHECK(holds.code == 0);
    CHECK(holds.out == "holds (d-balanced, uniform)\n");

    const Outcome fails = cli({"decide", "-h", "5", "-d", "1", "x y^2 = x^2 y", "--counterexample"});
    CHECK(fails.code == 1);
    CHECK(fails.out.find("uniform length bound fails") != std::string::npos);
    CHECK(fails.out.find("counterexample: x=2,y=1") != std::string::npos);

    CHECK(cli({"decide", "-h", "0", "-d", "1", "x = x"}).code == 2);
    CHECK(cli({"decide", "--index", "2", "--period", "1", "x = x"}).code == 0);
    CHECK(cli({"decide", "-h", "2", "-d", "1", "x = "}).code == 2);
    CHECK(cli({"decide", "-h", "2", "x = x"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli decide structured output carries the same facts") {
    const Outcome text = cli({"decide", "-h", "2", "-d", "2", "y^2 x^3 = y x^2"});
    const Outcome json = cli({"decide", "-h", "2", "-d", "2", "y^2 x^3 = y x^2", "--format", "json"});
    CHECK(text.code == json.code);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["holds"] == false);
    CHECK(j["classification"] == "not-d-balanced");
    CHECK(j["letter"] == "x");
    CHECK(text.out.find(j["reason"].get<std::string>()) != std::string::npos);
}

TEST_CASE("cli oracle") {
    const Outcome holds = cli({"oracle", "-h", "2", "-d", "1", "x x1 x2 = x1 x2"});
    CHECK(holds.code == 0);
    CHECK(holds.out.rfind("holds", 0) == 0);

    const Outcome fails = cli({"oracle", "-h", "5", "-d", "1", "x y^2 = x^2 y"});
    CHECK(fails.code == 1);
    CHECK(fails.out == "fails\ncounterexample: x=2,y=1 (a^4 != a^5)\n");

    const Outcome budget = cli({"oracle", "-h", "3", "-d", "3",
                                "x1 x2 x3 x4 x5 x6 x7 x8 = x8 x7 x6 x5 x4 x3 x2 x1", "--budget",
                                "1000"});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("390625") != std::string::npos);

    const auto j = nlohmann::json::parse(
        cli({"oracle", "-h", "5", "-d", "1", "x y^2 = x^2 y", "--format", "json"}).out);
    CHECK(j["counterexample"] == nlohmann::json{{"x", 2}, {"y", 1}});
    CHECK(j["values"] == nlohmann::json{4, 5});
}

TEST_CASE("cli derive then check") {
    const fs::path cert = scratch("phi21.json");
    const Outcome derived = cli({"derive", "-h", "2", "-d", "1", "x x1 x2 = x1 x2", "-o", cert.string()});
    CHECK(derived.code == 0);
    CHECK(derived.out.find("1 steps") != std::string::npos);

    CHECK(cli({"check", cert.string()}).code == 0);
    const Outcome other = cli({"check", cert.string(), "--goal", "x = y"});
    CHECK(other.code == 1);
    CHECK(other.out.find("reject at step 0") != std::string::npos);

    std::ifstream in(cert);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const fs::path truncated = scratch("truncated.json");
    write_file(truncated, text.substr(0, text.size() / 2));
    const Outcome bad = cli({"check", truncated.string()});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("byte") != std::string::npos);

    CHECK(cli({"check", scratch("missing.json").string()}).code == 4);
}

TEST_CASE("cli derive reports unsatisfied identities") {
    const Outcome fails = cli({"derive", "-h", "5", "-d", "1", "x y^2 = x^2 y"});
    CHECK(fails.code == 1);
    CHECK(fails.out.find("uniform length bound fails") != std::string::npos);
}

TEST_CASE("cli derive of the equal-power identity uses com and phi only") {
    const Outcome derived = cli({"derive", "-h", "1", "-d", "2", "x^2 = y^2"});
    REQUIRE(derived.code == 0);
    const auto doc = nlohmann::json::parse(derived.out);
    CHECK(doc["goal"] == "x^2 = y^2");
    for (const auto& step : doc["steps"]) {
        if (step["rule"] == "axiom") {
            CHECK((step["axiom"] == "com" || step["axiom"] == "phi"));
        }
    }
    CHECK(cli({"derive", "-h", "1", "-d", "2", "x^2 = y^2", "-o", "/nonexistent/dir/c.json"}).code == 4);
}

TEST_CASE("cli basis") {
    const Outcome text = cli({"basis", "-h", "8", "-d", "1"});
    CHECK(text.code == 0);
    CHECK(text.out ==
          "com: x y = y x\n"
          "phi: x x1 x2 x3 x4 x5 x6 x7 x8 = x1 x2 x3 x4 x5 x6 x7 x8\n"
          "psi[1]: x y^2 x1 x2 x3 x4 = x^2 y x1 x2 x3 x4\n"
          "psi[2]: x^2 y^3 x1 = x^3 y^2 x1\n");
    const auto j = nlohmann::json::parse(cli({"basis", "-h", "8", "-d", "1", "--format", "json"}).out);
    REQUIRE(j.size() == 4);
    CHECK(j[0]["axiom"] == "com");
    CHECK(j[3]["axiom"] == nlohmann::json{{"psi", 2}});
    CHECK(j[3]["identity"] == "x^2 y^3 x1 = x^3 y^2 x1");
}

TEST_CASE("cli eval") {
    const Outcome value = cli({"eval", "-h", "3", "-d", "2", "x^2 y", "--subst", "x=1,y=1"});
    CHECK(value.code == 0);
    CHECK(value.out == "a^3\n");
    CHECK(cli({"eval", "-h", "3", "-d", "2", "x^2 z", "--subst", "x=1"}).code == 2);
    CHECK(cli({"eval", "-h", "3", "-d", "2", "x", "--subst", "x=0"}).code == 2);
}

TEST_CASE("cli selftest") {
    const Outcome small = cli({"selftest", "--max-sum", "4", "--max-length", "3"});
    CHECK(small.code == 0);
    CHECK(small.out.find("no disagreements") != std::string::npos);

    const Outcome corrupted =
        cli({"selftest", "--max-sum", "3", "--max-length", "2", "--corrupt-decide"});
    CHECK(corrupted.code == 1);
    CHECK(corrupted.out.find("DISAGREEMENT: h=1, d=1") != std::string::npos);
}

TEST_CASE("selftest on the trivial semigroup: everything holds") {
    cycid::SelftestOptions options;
    options.max_sum = 2;
    options.max_length = 3;
    const cycid::SelftestReport report = cycid::run_selftest(options);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.ok());
    CHECK(report.rows[0].holds == report.rows[0].identities);
    CHECK(report.rows[0].identities == 14u * 14u);
}
