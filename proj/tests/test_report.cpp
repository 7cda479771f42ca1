#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "ghz/quantum.hpp"
#include "ghz/report.hpp"

using namespace ghz;
using nlohmann::json;

TEST_CASE("rational rendering") {
    CHECK(json_rational(Rational(35, 64)) == "{\"num\":35,\"den\":64,\"float\":0.546875}");
    auto j = json::parse(json_rational(Rational(63, 128)));
    CHECK(j["num"] == 63);
    CHECK(j["den"] == 128);
    CHECK(j["float"].get<double>() == doctest::Approx(63.0 / 128));
}

TEST_CASE("float formatting round-trips") {
    for (double v : {0.1, 1.0 / 3, 5e-324, 1.2345678901234567e100}) {
        json j = json::parse(fmt_double(v));
        CHECK(j.get<double>() == v);
    }
}

TEST_CASE("distribution dump") {
    GameSpec spec{3, 2, 4};
    InputString x{1, 1, 0};
    auto probs = run_quantum_strategy(spec, x);
    std::string dump = json_distribution(spec, x, probs, kZeroThreshold);
    json j = json::parse(dump);
    CHECK(j["game"]["n"] == 3);
    CHECK(j["game"]["d"] == 2);
    CHECK(j["game"]["m"] == 4);
    CHECK(j["x"] == "110");
    REQUIRE(j["outcomes"].size() == 16);
    std::string prev = "";
    for (const auto& o : j["outcomes"]) {
        std::string y = o["y"].get<std::string>();
        CHECK(y > prev);  // lexicographically sorted
        prev = y;
        CHECK(o["p"].get<double>() == doctest::Approx(1.0 / 16).epsilon(1e-9));
        int sum = 0;
        for (char c : y) sum += c - '0';
        CHECK(sum % 4 == 1);
    }
    // byte-stable
    CHECK(dump == json_distribution(spec, x, run_quantum_strategy(spec, x), kZeroThreshold));
}

TEST_CASE("crossover csv") {
    auto table = crossover_scan(2, 7);
    std::string csv = crossover_csv(table);
    CHECK(csv.rfind("n,ell,regime,mermin_num,mermin_den,tight_num,tight_den,asymptote\n", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos);
    // row n=7: tight 35/64 below mermin 9/16
    CHECK(csv.find("7,2,true,9,16,35,64,") != std::string::npos);
    CHECK(csv == crossover_csv(crossover_scan(2, 7)));
}

TEST_CASE("crossover json re-parses") {
    auto table = crossover_scan(4, 42);
    json j = json::parse(crossover_json(table));
    CHECK(j["m_bits"] == 4);
    CHECK(j["rows"].size() == 42);
    CHECK(j["first_tight_below_quarter"] == 41);
    CHECK(j["rows"][6]["mermin"]["num"] == 9);
}

TEST_CASE("strategy json") {
    GameSpec spec{3, 2, 4};
    DeterministicStrategy strat{{{1, 2}, {1, 2}, {1, 2}}};
    json j = json::parse(json_strategy(spec, strat));
    CHECK(j["tables"][0][1] == 2);
    CHECK(j["d"] == json::array({1, 1, 1}));
    CHECK(j["b"] == 3);
    GameSpec spec3{2, 3, 2};
    DeterministicStrategy strat3{{{0, 1, 0}, {0, 1, 0}}};
    json j3 = json::parse(json_strategy(spec3, strat3));
    CHECK_FALSE(j3.contains("d"));
}
