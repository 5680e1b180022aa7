#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "balance/io.hpp"
#include "fixtures.hpp"

using namespace balance;

TEST_CASE("strategy files round-trip") {
    const auto s = fixtures::thirteen();
    CHECK(io::parse_strategy(io::format_strategy(s)) == s);
    CHECK(io::parse_strategy("# header\n\nLL\r\nLR\n\n# trailing\nRL\nRR") == fixtures::four_by_two());
}

TEST_CASE("strategy parse errors carry positions") {
    try {
        io::parse_strategy("LL\nLX\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 2);
        CHECK(std::string(e.what()).find("line 2, column 2") != std::string::npos);
    }
    try {
        io::parse_strategy("LLL\n# c\nLR\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(io::parse_strategy("# only comments\n"), ParseError);
    CHECK_THROWS_AS(io::read_strategy_file("/nonexistent/strategy.txt"), ParseError);
}

TEST_CASE("strategy file on disk") {
    const std::string path = "io_test_strategy.txt";
    {
        std::ofstream out(path);
        out << io::format_strategy(fixtures::four_by_two());
    }
    CHECK(io::read_strategy_file(path) == fixtures::four_by_two());
    std::remove(path.c_str());
}

TEST_CASE("numbers and csv") {
    CHECK(io::format_number(3.0) == "3");
    CHECK(io::format_number(2.0 / 3.0) == "0.666666667");
    CHECK(io::format_number(1e-12) == "1e-12");
    CHECK(io::format_csv({"r", "g"}, {{0.5, 2.0}, {0.25, 1.5}}) == "r,g\n0.5,2\n0.25,1.5\n");
}

TEST_CASE("report documents") {
    auto doc = io::report("certify");
    CHECK(doc.dump() == R"({"schema":"1","command":"certify"})");
    const Verdict v{VerdictKind::BalanceWins, {{2, Sign::Light}, {5, Sign::Heavy}}};
    CHECK(io::to_json(v).dump() ==
          R"({"outcome":"balance-wins","survivors":[{"coin":3,"sign":"light"},{"coin":6,"sign":"heavy"}]})");
    CHECK(io::to_json(GameSpec::make(4, 2, 0, Prior::Heavy)).dump() == R"({"n":4,"q":2,"k":0,"prior":"heavy"})");
}
