#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "qtorus/suites.hpp"

using qtorus::CheckReport;
using qtorus::EvalScalar;
using qtorus::QHalfScalar;
using qtorus::Rational;
using qtorus::SuiteBounds;

namespace {

void expect_clean_pass(const CheckReport& rep, const std::string& name) {
    INFO("suite " << name << (rep.witness ? ": " + rep.witness->check : ""));
    CHECK(rep.suite == name);
    CHECK(rep.pass);
    CHECK(!rep.witness.has_value());
    CHECK(rep.elapsed_ms >= 0);
}

}  // namespace

TEST_CASE("All suites pass on the torus algebra") {
    expect_clean_pass(qtorus::suite_dolan_grady(), "dolan-grady");
    expect_clean_pass(qtorus::suite_closed_forms(6), "closed-forms");
    expect_clean_pass(qtorus::suite_series(8), "series");
    expect_clean_pass(qtorus::suite_root_vectors(4, -2, 2), "root-vectors");
    expect_clean_pass(qtorus::suite_z_forms(4, -2, 2), "z-forms");
    expect_clean_pass(qtorus::suite_commutation(5), "commutation");
}

TEST_CASE("Suites accept edge bounds") {
    expect_clean_pass(qtorus::suite_closed_forms(0), "closed-forms");
    expect_clean_pass(qtorus::suite_root_vectors(1, 0, 0), "root-vectors");
    expect_clean_pass(qtorus::suite_z_forms(1, 0, 0), "z-forms");
    CHECK_THROWS_AS(qtorus::suite_closed_forms(-1), std::invalid_argument);
    CHECK_THROWS_AS(qtorus::suite_series(1), std::invalid_argument);
    CHECK_THROWS_AS(qtorus::suite_root_vectors(0, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(qtorus::suite_z_forms(2, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(qtorus::suite_commutation(1), std::invalid_argument);
}

TEST_CASE("Corrupting the commutation twist breaks the Dolan-Grady suite") {
    // Halving the twist exponent (x·y = q·y·x instead of q²·y·x) must be
    // detected, with the nonzero difference reported as a witness.
    const CheckReport rep = qtorus::suite_dolan_grady<QHalfScalar, 1>();
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.witness.has_value());
    CHECK(!rep.witness->check.empty());
    CHECK(!rep.witness->difference_text.empty());
    CHECK(rep.witness->difference_json.at("terms").size() > 0);

    // The same corruption is visible in the bracket suites.
    CHECK_FALSE((qtorus::suite_root_vectors<QHalfScalar, 1>(2, -1, 1).pass));
    CHECK_FALSE((qtorus::suite_z_forms<QHalfScalar, 1>(2, -1, 1).pass));
}

TEST_CASE("Reversing the twist exponent still satisfies Dolan-Grady") {
    // x·y = q⁻²·y·x is the q → q⁻¹ copy of the algebra, and the defining
    // relations hold there too; sign-reversal alone is not a detectable
    // corruption, which is why the sensitivity check above uses a magnitude
    // change instead.
    const CheckReport rep = qtorus::suite_dolan_grady<QHalfScalar, -2>();
    CHECK(rep.pass);
}

TEST_CASE("Suites run over the evaluated field") {
    EvalScalar::set_eval_point(Rational(7, 5));
    expect_clean_pass(qtorus::suite_dolan_grady<EvalScalar>(), "dolan-grady");
    expect_clean_pass(qtorus::suite_closed_forms<EvalScalar>(4), "closed-forms");
    expect_clean_pass(qtorus::suite_root_vectors<EvalScalar>(3, -1, 1), "root-vectors");
    const CheckReport broken = qtorus::suite_dolan_grady<EvalScalar, 1>();
    CHECK_FALSE(broken.pass);
}

TEST_CASE("Report serialization") {
    const CheckReport pass_rep = qtorus::suite_dolan_grady();
    const auto pj = qtorus::report_json(pass_rep);
    CHECK(pj.at("suite") == "dolan-grady");
    CHECK(pj.at("params") == "fixed identity set");
    CHECK(pj.at("status") == "pass");
    CHECK(pj.at("witness").is_null());
    CHECK(pj.at("elapsed_ms").is_number_integer());
    CHECK(qtorus::report_text(pass_rep).find("pass") != std::string::npos);

    const CheckReport fail_rep = qtorus::suite_dolan_grady<QHalfScalar, 1>();
    const auto fj = qtorus::report_json(fail_rep);
    CHECK(fj.at("status") == "fail");
    CHECK(fj.at("witness").at("check") == fail_rep.witness->check);
    CHECK(fj.at("witness").at("difference").contains("terms"));
    const auto text = qtorus::report_text(fail_rep);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("failed check") != std::string::npos);
}

TEST_CASE("Suite dispatch by name") {
    SuiteBounds small;
    small.closed_forms_max = 3;
    small.series_order = 4;
    small.bracket_max_m = 2;
    small.range_lo = -1;
    small.range_hi = 1;
    small.commutation_max = 3;
    for (const auto& name : qtorus::suite_names())
        expect_clean_pass(qtorus::run_suite(name, small), name);
    CHECK_THROWS_AS(qtorus::run_suite("no-such-suite", small), std::invalid_argument);
}
