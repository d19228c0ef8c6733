#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = sptforge::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli: spt table as csv")
{
    auto r = run({"spt", "--family", "B2", "--max", "4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,spt\n1,0\n2,1\n3,2\n4,5\n");
}

TEST_CASE("cli: verify and congruence examples")
{
    auto r = run({"verify", "--id", "dissect_B2_7", "--order", "250"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dissect_B2_7  order 250  verified") != std::string::npos);

    r = run({"congruence", "--family", "F3", "--p", "7", "--b", "4", "--max", "300"});
    CHECK(r.code == 0);

    // not a congruence
    r = run({"congruence", "--family", "B2", "--p", "3", "--b", "1", "--max", "50"});
    CHECK(r.code == 1);
}

TEST_CASE("cli: usage errors exit 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"--bogus"}).code == 2);
    CHECK(run({"verify", "--bogus"}).code == 2);
    CHECK(run({"spt", "--family", "B2"}).code == 2);
    CHECK(run({"spt", "--family", "nope", "--max", "3"}).code == 2);
    CHECK(run({"spt", "--family", "B2", "--max", "2001"}).code == 2);
    CHECK(run({"verify", "--order", "1201"}).code == 2);
    CHECK(run({"verify", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: order cap from the environment")
{
    setenv("SPTFORGE_MAX_ORDER", "2000", 1);
    auto r = run({"verify", "--id", "h25", "--order", "1500", "--no-timing"});
    unsetenv("SPTFORGE_MAX_ORDER");
    CHECK(r.code == 0);
    CHECK(r.out.find("order 1500") != std::string::npos);
}

TEST_CASE("cli: verify json schema and round trip")
{
    auto r = run({"verify", "--id", "gauss_*", "--format", "json", "--no-timing"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    REQUIRE(j["reports"].size() == 3);
    const auto &rep = j["reports"][0];
    std::vector<std::string> keys;
    for (auto it = rep.begin(); it != rep.end(); ++it) {
        keys.push_back(it.key());
    }
    CHECK(keys == std::vector<std::string>{"id", "order", "status", "first_mismatch", "millis"});
    CHECK(rep["millis"].is_null());

    r = run({"crank", "--family", "B2", "--t", "5", "--max", "6", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::ordered_json::parse(r.out).dump() + "\n" == r.out);
}

TEST_CASE("cli: csv quoting of cyclotomic values")
{
    auto r = run({"list", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("id,ring,default_order,citation\n", 0) == 0);
    CHECK(r.out.find("dissect_F3_3,cyclotomic(3),240,") != std::string::npos);
}

TEST_CASE("cli: oracle comparison")
{
    auto r = run({"oracle-compare", "--family", "J2", "--max", "15", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",no") == std::string::npos);
}
