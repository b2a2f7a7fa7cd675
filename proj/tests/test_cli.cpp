#include <catch_amalgamated.hpp>

#include <atomic>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "reference_tables.hpp"

using namespace indcx::cli;

namespace {

struct Captured {
    std::ostringstream out, err;
    Context cx;
    explicit Captured(Format f = Format::Tsv) {
        cx.out = &out;
        cx.err = &err;
        cx.format = f;
        cx.budgets.jobs = 2;
    }
};

}  // namespace

TEST_CASE("range parsing", "[cli]") {
    CHECK(parse_range("1-4") == std::vector<int>{1, 2, 3, 4});
    CHECK(parse_range("2-10:4") == std::vector<int>{2, 6, 10});
    CHECK(parse_range("3,5,7") == std::vector<int>{3, 5, 7});
    CHECK(parse_range("4") == std::vector<int>{4});
    CHECK_THROWS(parse_range("4-1"));
    CHECK_THROWS(parse_range("x"));
    CHECK(parse_rows("").empty());
    CHECK(parse_rows("-").empty());
    CHECK(parse_rows("2,3") == std::vector<int>{2, 3});
}

TEST_CASE("work queue runs every index once", "[cli]") {
    std::vector<std::atomic<int>> hits(97);
    run_cells(hits.size(), 3, [&](std::size_t i) { ++hits[i]; });
    for (auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("partition command prints a grid", "[cli]") {
    Captured c;
    CHECK(cmd_partition(c.cx, "square_cyl", {1, 2, 3}, {3, 4}, "auto", true) == 0);
    std::string s = c.out.str();
    CHECK(s.find("n\\m\t1\t2\t3") != std::string::npos);
    // Z(C_{1,3}) = -2, Z(C_{3,4}) = -3
    CHECK(s.find("\n3\t-2\t") != std::string::npos);
    CHECK(s.find("\n4\t") != std::string::npos);
    CHECK(s.find("-3\n") != std::string::npos);
}

TEST_CASE("reproducing a small table succeeds", "[cli]") {
    Captured c;
    CHECK(cmd_reproduce(c.cx, 8) == 0);
    CHECK(c.out.str().find("mismatched=0") != std::string::npos);
    CHECK(c.err.str().empty());
}

TEST_CASE("json output parses", "[cli]") {
    Captured c(Format::Json);
    REQUIRE(cmd_reproduce(c.cx, 9) == 0);
    auto j = nlohmann::json::parse(c.out.str());
    CHECK(j["summary"]["mismatched"] == 0);
    const auto& t9 = indcx::ref::table9();
    std::size_t expected = 0;
    for (auto& row : t9.z) expected += row.size();
    CHECK(j["cells"].size() == expected);
}

TEST_CASE("verify suites", "[cli]") {
    Captured c;
    CHECK(cmd_verify(c.cx, "conjecture1") == 0);
    Captured d;
    CHECK(cmd_verify(d.cx, "conjecture5") == 0);
    CHECK_THROWS(cmd_verify(d.cx, "conjecture9"));
}

TEST_CASE("unknown table is an error", "[cli]") {
    Captured c;
    CHECK_THROWS(cmd_reproduce(c.cx, 4));
}
