#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <euler2/combinatorics.hpp>
#include <euler2/errors.hpp>
#include <euler2/sequences.hpp>
#include <euler2/verify.hpp>

#include <json.hpp>

using namespace euler2;

namespace {

// Residual of the second-kind recurrence at index n, with an injectable
// value source so sensitivity can be probed.
template <typename Source>
Rat recurrence_residual(int n, Source&& value) {
    Rat acc = 0;
    for (int j = 0; j <= n; ++j) {
        acc += Rat(binomial(2 * n + 1, 2 * j)) * value(2 * j);
    }
    return acc;
}

}  // namespace

TEST_CASE("plain sweeps pass with no counterexample") {
    for (const auto& report :
         {verify_recurrence_e2(30), verify_denominator(25), verify_sum1(10, 10),
          verify_duality(10, 10), verify_pb_expansion(10, 5), verify_positivity(8, 6),
          verify_products(3, 10), verify_oracle_agreement(12, 5, 3)}) {
        CAPTURE(report.theorem_id);
        CHECK(report.passed);
        CHECK(!report.expected_fail);
        CHECK(!report.counterexample.has_value());
        CHECK(report.subclaims.empty());
    }
}

TEST_CASE("recurrence check is sensitive to a perturbed value") {
    auto honest = [](int m) { return comp_euler(m); };
    CHECK(recurrence_residual(1, honest) == 0);

    auto perturbed = [](int m) { return m == 2 ? Rat(-1, 4) : comp_euler(m); };
    CHECK(recurrence_residual(1, perturbed) != 0);
}

TEST_CASE("hand-checked sum1 instances") {
    // n=1, k=0: 1 + 3*(-1/3) = 0, empty right-hand sum.
    // n=1, k=1: 27 + 3*9*(-1/3) = 24 = 2*3*4.
    auto report = verify_sum1(1, 1);
    CHECK(report.passed);
}

TEST_CASE("duality hand instance and cross-tie") {
    CHECK(verify_duality(1, 1).passed);
    // n=1, k=0: both sides reduce to B_1^(0) = 1.
    Rat lhs = Rat(2, 4) * poly_euler2(0, 0) + Rat(1, 4) * poly_euler2(1, 0);
    CHECK(lhs == 1);
    CHECK(lhs == poly_bernoulli(1, 0));
}

TEST_CASE("congruence sweep structure") {
    auto report = verify_congruences(20, 8, 13);
    CHECK(report.theorem_id == "congruences");
    CHECK(report.passed);
    CHECK(!report.counterexample.has_value());
    REQUIRE(report.subclaims.size() == 6);

    const char* ids[] = {"congruences/equiv-mod-p",   "congruences/odd-odd-divisible",
                         "congruences/value-at-p",    "congruences/value-at-3",
                         "congruences/parity",        "congruences/even-index-even"};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(report.subclaims[i].theorem_id == ids[i]);
    }
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(report.subclaims[i].passed);
        CHECK(!report.subclaims[i].expected_fail);
    }

    const auto& expected_fail = report.subclaims[5];
    CHECK(expected_fail.expected_fail);
    CHECK(!expected_fail.passed);
    REQUIRE(expected_fail.counterexample.has_value());
    CHECK(expected_fail.counterexample->lhs == "5");  // E^_2^(0)
    CHECK(expected_fail.counterexample->rhs == "0");
}

TEST_CASE("reports are deterministic across runs") {
    CHECK(same_outcome(verify_recurrence_e2(12), verify_recurrence_e2(12)));
    CHECK(same_outcome(verify_congruences(10, 4, 7), verify_congruences(10, 4, 7)));
    CHECK(same_outcome(verify_oracle_agreement(8, 3, 2), verify_oracle_agreement(8, 3, 2)));

    auto a = verify_duality(6, 6);
    auto b = verify_duality(6, 6);
    auto ja = nlohmann::json::parse(report_to_json(a));
    auto jb = nlohmann::json::parse(report_to_json(b));
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja == jb);
}

TEST_CASE("report JSON shape") {
    auto j = nlohmann::json::parse(report_to_json(verify_denominator(6)));
    for (const char* key : {"theorem_id", "range", "passed", "expected_fail",
                            "counterexample", "elapsed_ms"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["theorem_id"] == "denominator");
    CHECK(j["passed"] == true);
    CHECK(j["counterexample"].is_null());
    CHECK(j["elapsed_ms"].is_number_integer());

    auto jc = nlohmann::json::parse(report_to_json(verify_congruences(8, 3, 5)));
    REQUIRE(jc.contains("subclaims"));
    CHECK(jc["subclaims"].size() == 6);
    const auto& last = jc["subclaims"].back();
    CHECK(last["expected_fail"] == true);
    CHECK(last["counterexample"]["params"]["n"] == "2");
    CHECK(last["counterexample"]["lhs"] == "5");
}

TEST_CASE("verify_all runs the fixed checker order") {
    auto reports = verify_all(8, 3, 5, 2);
    REQUIRE(reports.size() == 9);
    const char* order[] = {"recurrence-e2", "denominator", "sum1",     "duality",
                           "pb-expansion",  "positivity",  "congruences", "products",
                           "oracle"};
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].theorem_id == order[i]);
    }
    CHECK(exit_status(reports) == 0);
}

TEST_CASE("exit_status flags unexpected failures only") {
    VerifyReport ok{.theorem_id = "a", .range = "", .passed = true};
    VerifyReport bad{.theorem_id = "b", .range = "", .passed = false};
    VerifyReport expected{.theorem_id = "c", .range = "", .passed = false,
                          .expected_fail = true};
    CHECK(exit_status({ok}) == 0);
    CHECK(exit_status({ok, expected}) == 0);
    CHECK(exit_status({ok, bad}) == 1);

    VerifyReport parent{.theorem_id = "p", .range = "", .passed = true};
    parent.subclaims.push_back(bad);
    CHECK(exit_status({parent}) == 1);
}

TEST_CASE("range validation") {
    CHECK_THROWS_AS(verify_recurrence_e2(0), ParameterOutOfRange);
    CHECK_THROWS_AS(verify_congruences(10, 4, 2), ParameterOutOfRange);
    CHECK_THROWS_AS(verify_products(-1, 5), ParameterOutOfRange);
}
