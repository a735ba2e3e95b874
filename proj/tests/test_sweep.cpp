#include "doctest.h"

#include <sstream>

#include "polygauss/errors.hpp"
#include "polygauss/sweep.hpp"
#include "test_util.hpp"

using namespace polygauss;
using testutil::code_of;
using testutil::field;

namespace {

std::string render(const SweepOutcome& outcome, ReportFormat format) {
    std::ostringstream os;
    write_report(outcome.rows, format, os);
    return os.str();
}

}  // namespace

TEST_CASE("con1 sweep over F_3 up to degree 4") {
    SweepConfig config;
    config.ctx = field(3);
    config.max_degree = 4;
    config.theorems = {Theorem::con1};
    const SweepOutcome outcome = run_sweep(config);
    CHECK(outcome.rows.size() == 120);  // 3 + 9 + 27 + 81 monic polynomials
    CHECK(outcome.mismatches == 0);
}

TEST_CASE("extension sweep crosses f with every half-system") {
    SweepConfig config;
    config.ctx = field(3);
    config.max_degree = 2;
    config.theorems = {Theorem::extension};
    config.all_half_systems = true;
    const SweepOutcome outcome = run_sweep(config);
    CHECK(outcome.rows.size() == 24);  // 12 monic f x 2 half-systems
    CHECK(outcome.mismatches == 0);
    for (const VerdictRecord& row : outcome.rows) {
        CHECK(row.order.has_value());
        CHECK(row.clause.has_value());
    }
}

TEST_CASE("shape-restricted theorems skip inapplicable f") {
    SweepConfig config;
    config.ctx = field(3);
    config.max_degree = 2;
    config.theorems = {Theorem::gpe};
    config.all_half_systems = true;
    const SweepOutcome outcome = run_sweep(config);
    // Applicable f of degree <= 2: the three monic linears and their squares.
    CHECK(outcome.rows.size() == 12);
    CHECK(outcome.mismatches == 0);
}

TEST_CASE("wrong characteristic is a configuration error") {
    SweepConfig config;
    config.ctx = field(2);
    config.max_degree = 2;
    config.theorems = {Theorem::extension};
    config.all_half_systems = true;
    CHECK(code_of([&] { run_sweep(config); }) == errc::even_characteristic);

    config.ctx = field(3);
    config.theorems = {Theorem::con2};
    CHECK(code_of([&] { run_sweep(config); }) == errc::odd_characteristic);

    config.theorems = {Theorem::gpe};
    config.ctx = field(5);  // q = 1 (mod 4)
    CHECK(code_of([&] { run_sweep(config); }) == errc::bad_range);
}

TEST_CASE("an S-dependent theorem without S is refused") {
    SweepConfig config;
    config.ctx = field(3);
    config.max_degree = 2;
    config.theorems = {Theorem::extension};
    CHECK(code_of([&] { run_sweep(config); }) == errc::bad_range);
}

TEST_CASE("oversized sweeps are refused with a sizing message") {
    SweepConfig config;
    config.ctx = field(3);
    config.max_degree = 4;
    config.theorems = {Theorem::con1};
    config.budget = 10;
    CHECK(code_of([&] { run_sweep(config); }) == errc::too_large);
    CHECK(estimate_sweep_cost(config) > 10);
}

TEST_CASE("reports are deterministic and job-count independent") {
    SweepConfig config;
    config.ctx = field(3);
    config.max_degree = 3;
    config.theorems = {Theorem::extension, Theorem::half_value};
    config.all_half_systems = true;

    const std::string once = render(run_sweep(config), ReportFormat::json);
    const std::string twice = render(run_sweep(config), ReportFormat::json);
    CHECK(once == twice);

    config.jobs = 4;
    CHECK(render(run_sweep(config), ReportFormat::json) == once);

    config.jobs = 1;
    const std::string csv = render(run_sweep(config), ReportFormat::csv);
    config.jobs = 3;
    CHECK(render(run_sweep(config), ReportFormat::csv) == csv);
}

TEST_CASE("report row formats are pinned") {
    SweepConfig config;
    config.ctx = field(3);
    config.max_degree = 1;
    config.theorems = {Theorem::extension};
    config.explicit_half_systems = {{2}};
    const SweepOutcome outcome = run_sweep(config);
    REQUIRE(outcome.rows.size() == 3);

    CHECK(csv_header() == "field,q,f,S,theorem,brute,predicted,matches,order,clause");
    CHECK(to_csv_row(outcome.rows[0]) == "p=3,3,X,2,extension,2,2,true,2,2b");
    CHECK(to_json_row(outcome.rows[0]) ==
          R"({"field":"p=3","q":3,"f":"X","S":"2","theorem":"extension",)"
          R"("brute":"2","predicted":"2","matches":true,"order":2,"clause":"2b"})");

    SweepConfig plain;
    plain.ctx = field(3);
    plain.max_degree = 1;
    plain.theorems = {Theorem::con1};
    const SweepOutcome outcome2 = run_sweep(plain);
    REQUIRE(outcome2.rows.size() == 3);
    CHECK(to_csv_row(outcome2.rows[0]) == "p=3,3,X,,con1,2,2,true,,");
    CHECK(to_json_row(outcome2.rows[0]) ==
          R"({"field":"p=3","q":3,"f":"X","theorem":"con1","brute":"2","predicted":"2",)"
          R"("matches":true})");
}

TEST_CASE("every theorem tag parses and round-trips") {
    for (Theorem t : {Theorem::con1, Theorem::con2, Theorem::con3, Theorem::extension,
                      Theorem::half_value, Theorem::gpe, Theorem::p1p2, Theorem::p1p2p3})
        CHECK(theorem_from_name(theorem_name(t)) == t);
    CHECK(!theorem_from_name("con9").has_value());
}
