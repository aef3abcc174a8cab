#include <cstdlib>
#include <iterator>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "gsym/cli.hpp"
#include "golden.hpp"
#include "json.hpp"

using namespace gsym;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "gsym");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

/// Runs the installed binary through the shell and returns its exit status.
int shell(const std::string& args)
{
    const std::string cmd = std::string(GSYM_BINARY) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classes")
{
    auto r = run({"classes", "--k", "1", "--n", "3", "--marked", "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = cli::from_json(r.out);
    CHECK(doc.kind == "classes");
    CHECK(doc.cols == std::vector<std::string>{"3*", "2,1*", "2*,1", "1,1,1*"});
    CHECK(doc.orders == std::vector<BigInt>{2, 1, 2, 1});

    doc = cli::from_json(run({"classes", "--k", "2", "--n", "2", "--marked", "--format", "json"}).out);
    CHECK(doc.cols.size() == 6);
    std::multiset<BigInt> orders(doc.orders.begin(), doc.orders.end());
    CHECK(orders == std::multiset<BigInt>{1, 2, 1, 1, 1, 2});
    CHECK(doc.values.at(0).size() == 6);

    doc = cli::from_json(run({"classes", "--k", "2", "--n", "2", "--format", "json"}).out);
    CHECK(doc.cols.size() == 5);
}

TEST_CASE("chartable")
{
    const auto doc = cli::from_json(run({"chartable", "--k", "2", "--n", "3", "--format", "json"}).out);
    const auto id = std::find(doc.cols.begin(), doc.cols.end(), "1,1,1|-") - doc.cols.begin();
    BigInt sum = 0;
    for (const auto& row : doc.values) {
        const BigInt d(row.at(id));
        sum += d * d;
    }
    CHECK(sum == 48);
    const auto z3 = cli::from_json(run({"chartable", "--k", "3", "--n", "1", "--format", "json"}).out);
    CHECK(z3.values == std::vector<std::vector<std::string>>{{"1", "1", "1"}, {"1", "z", "-1 - z"}, {"1", "-1 - z", "z"}});
}

TEST_CASE("genchartable csv reproduces the transcribed tables byte for byte")
{
    CHECK(run({"genchartable", "--k", "1", "--n", "3", "--format", "csv"}).out ==
          golden::read_file(std::string(GSYM_GOLDEN_DIR) + "/s3_generalized.csv"));
    CHECK(run({"genchartable", "--k", "1", "--n", "4", "--format", "csv"}).out ==
          golden::read_file(std::string(GSYM_GOLDEN_DIR) + "/s4_generalized.csv"));
}

TEST_CASE("genchartable methods agree")
{
    const auto def = run({"genchartable", "--k", "2", "--n", "3", "--format", "json"});
    const auto mn = run({"genchartable", "--k", "2", "--n", "3", "--method", "mn", "--format", "json"});
    CHECK(def.code == 0);
    CHECK(def.out == mn.out);
}

TEST_CASE("renderings carry the same values")
{
    const std::vector<std::string> base{"genchartable", "--k", "2", "--n", "2", "--format"};
    auto with = [&](const char* f) {
        auto a = base;
        a.push_back(f);
        return run(a).out;
    };
    const auto doc = cli::from_json(with("json"));
    const auto csv = with("csv");
    const auto text = with("text");
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    const auto header = golden::split_csv(line);
    CHECK(std::vector<std::string>(header.begin() + 1, header.end()) == doc.cols);
    std::getline(lines, line);
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        std::getline(lines, line);
        auto fields = golden::split_csv(line);
        CHECK(fields.front() == doc.rows[r]);
        CHECK(std::vector<std::string>(fields.begin() + 1, fields.end()) == doc.values[r]);
        std::istringstream tl(text);
        bool found = false;
        for (std::string t; std::getline(tl, t);) {
            std::istringstream words(t);
            std::vector<std::string> w{std::istream_iterator<std::string>(words), {}};
            if (!w.empty() && w.front() == doc.rows[r])
                found = std::vector<std::string>(w.begin() + 1, w.end()) == doc.values[r];
        }
        CHECK(found);
    }
}

TEST_CASE("json round trip")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"genchartable", "--k", "2", "--n", "3", "--format", "json"},
             {"chartable", "--k", "3", "--n", "2", "--format", "json"},
             {"classes", "--k", "2", "--n", "3", "--marked", "--format", "json"},
             {"verify", "gelfand", "--k", "2", "--n", "2", "--format", "json"},
             {"verify", "gelfand", "--k", "3", "--n", "1", "--format", "json"},
             {"eval", "--k", "2", "--n", "3", "--index", "2,1*|-", "--class", "-|3*", "--format", "json"}}) {
        const auto r = run(args);
        const auto doc = cli::from_json(r.out);
        CHECK(cli::to_json(doc) == r.out);
        CHECK(cli::from_json(cli::to_json(doc)) == doc);
        const auto j = nlohmann::json::parse(r.out);
        for (const char* key : {"schema_version", "group", "kind", "rows", "cols", "orders", "values"})
            CHECK(j.contains(key));
        CHECK(j["schema_version"] == "1.0");
    }
    CHECK_THROWS_AS(cli::from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(cli::from_json("not json"), std::invalid_argument);
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args{"verify", "induced", "--k", "2", "--n", "3", "--samples", "50"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> table{"chartable", "--k", "3", "--n", "3"};
    CHECK(run(table).out == run(table).out);
}

TEST_CASE("verify suites")
{
    auto r = run({"verify", "mn-vs-def", "--k", "2", "--n", "3", "--format", "json"});
    CHECK(r.code == 0);
    auto doc = cli::from_json(r.out);
    CHECK(doc.passed);
    CHECK(doc.checks == 16 * 16);
    CHECK(doc.suite == "mn-vs-def");

    r = run({"verify", "orthogonality", "--k", "1", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    for (const char* s : {"gelfand", "induced", "zonal-eq", "corollary"})
        CHECK(run({"verify", s, "--k", "2", "--n", "2", "--samples", "5"}).code == 0);

    r = run({"verify", "gelfand", "--k", "3", "--n", "2", "--format", "json"});
    CHECK(r.code == 1);
    doc = cli::from_json(r.out);
    CHECK_FALSE(doc.passed);
    CHECK_FALSE(doc.failures.empty());
}

TEST_CASE("eval")
{
    auto r = run({"eval", "--k", "2", "--n", "3", "--index", "2,1*|-", "--class", "-|3*", "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = cli::from_json(r.out);
    CHECK(doc.values == std::vector<std::vector<std::string>>{{"-1/2"}});
    CHECK(doc.orders == std::vector<BigInt>{8});

    r = run({"eval", "--k", "2", "--n", "3", "--method", "mn", "--index", "1|2*", "--element", "0,1,0 ; (1)(2,3)",
             "--format", "json"});
    REQUIRE(r.code == 0);
    doc = cli::from_json(r.out);
    CHECK(doc.cols == std::vector<std::string>{"1|2*"});
    CHECK(doc.values == std::vector<std::vector<std::string>>{{"-1"}});
}

TEST_CASE("bad arguments exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"chartable", "--k", "2"}).code == 2);
    CHECK(run({"chartable", "--k", "0", "--n", "2"}).code == 2);
    CHECK(run({"chartable", "--k", "x", "--n", "2"}).code == 2);
    CHECK(run({"classes", "--k", "2", "--n", "2", "--format", "xml"}).code == 2);
    CHECK(run({"genchartable", "--k", "3", "--n", "2", "--method", "mn"}).code == 2);
    CHECK(run({"genchartable", "--k", "2", "--n", "2", "--method", "magic"}).code == 2);
    CHECK(run({"genchartable", "--k", "2", "--n", "6", "--cap", "10"}).code == 2);
    CHECK(run({"verify", "everything", "--k", "2", "--n", "2"}).code == 2);
    CHECK(run({"verify", "mn-vs-def", "--k", "3", "--n", "2"}).code == 2);
    CHECK(run({"eval", "--k", "2", "--n", "3", "--index", "2,1|-", "--class", "-|3*"}).code == 2);
    CHECK(run({"eval", "--k", "2", "--n", "3", "--index", "2,1*|-", "--element", "0,0 ; 1,2"}).code == 2);
    CHECK(run({"eval", "--k", "2", "--n", "3", "--index", "2,1*|-"}).code == 2);
    const auto r = run({"chartable", "--k", "-1", "--n", "2"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("help exits with 0")
{
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("genchartable") != std::string::npos);
}

TEST_CASE("end to end exit codes of the executable")
{
    CHECK(shell("genchartable --k 1 --n 3") == 0);
    CHECK(shell("verify gelfand --k 2 --n 3") == 0);
    CHECK(shell("verify gelfand --k 3 --n 2") == 1);
    CHECK(shell("genchartable --k 3 --n 2 --method mn") == 2);
    CHECK(shell("chartable --n 2") == 2);
    CHECK(shell("") == 2);
}

}  // TEST_SUITE
