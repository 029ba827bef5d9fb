// Acceptance suite: every release criterion in one binary, one line each.
// All comparisons are exact rational equality; the only tolerances are the
// runtime budgets printed alongside.

#include <euler2/combinatorics.hpp>
#include <euler2/sequences.hpp>
#include <euler2/series.hpp>
#include <euler2/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace euler2;

namespace {

// Exact values of E^_n^(k) for n = 1..7 (rows), k = 1..5 (columns).
const char* kTable1[7][5] = {
    {"0", "-1", "-3/2", "-7/4", "-15/8"},
    {"-1/3", "5/9", "59/27", "275/81", "1004/243"},
    {"0", "1", "-11/6", "-211/36", "-985/108"},
    {"7/15", "-679/225", "-12737/3375", "245789/50625", "12383617/759375"},
    {"0", "-7/3", "527/30", "47171/2700", "-85361/9000"},
    {"-31/21", "60001/2205", "483221/231525", "-1961354909/24310125",
     "-205924986214/2552563125"},
    {"0", "31/3", "-45853/210", "-1250393/132300", "763114237/2315250"},
};

// Exact values of E^_n^(-k) for n = 1..7 (rows), k = 0..4 (columns).
const char* kTable2[7][5] = {
    {"2", "6", "14", "30", "62"},
    {"5", "37", "165", "613", "2085"},
    {"14", "234", "1826", "10770", "55154"},
    {"41", "1513", "19689", "175465", "1287657"},
    {"122", "9966", "210134", "2741670", "27930182"},
    {"365", "66637", "2236365", "41809933", "578341965"},
    {"1094", "450834", "23819306", "628464090", "11615023034"},
};

struct Criterion {
    int id;
    const char* name;
    long budget_ms;  // 0 = no stated budget
    std::function<bool(std::string&)> run;
};

bool check_table(const char* table[7][5], int k_of_col(int), std::string& detail) {
    int matched = 0;
    for (int n = 1; n <= 7; ++n) {
        for (int col = 0; col < 5; ++col) {
            if (poly_euler2(n, k_of_col(col)) == Rat(table[n - 1][col])) {
                ++matched;
            } else if (detail.empty()) {
                detail = "first mismatch at n=" + std::to_string(n) +
                         ", k=" + std::to_string(k_of_col(col));
            }
        }
    }
    std::string count = std::to_string(matched) + "/35 entries exact";
    detail = detail.empty() ? count : count + "; " + detail;
    return matched == 35;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "table-1 reproduction", 1000, [](std::string& detail) {
        return check_table(kTable1, [](int col) { return col + 1; }, detail);
    }});

    criteria.push_back({2, "table-2 reproduction", 1000, [](std::string& detail) {
        return check_table(kTable2, [](int col) { return -col; }, detail);
    }});

    criteria.push_back({3, "second-kind example values", 1000, [](std::string& detail) {
        bool ok24 = comp_euler(24) == Rat("1982765468311237/1365");
        bool ok26 = comp_euler(26) == Rat("-286994504449393/3");
        detail = "E^_24 " + std::string(ok24 ? "exact" : "WRONG") + ", E^_26 " +
                 (ok26 ? "exact" : "WRONG");
        return ok24 && ok26;
    }});

    criteria.push_back({4, "denominator theorem n<=50", 5000, [](std::string& detail) {
        auto report = verify_denominator(50);
        detail = report.passed ? "reduced denominators match the odd-prime products"
                               : report_to_json(report);
        return report.passed;
    }});

    criteria.push_back({5, "oracle equivalence", 10000, [](std::string& detail) {
        // Covers comp-euler n<=26, poly families |k|<=6 n<=16, hyper
        // families N<=4 n<=12, all swept to n<=26 here.
        auto report = verify_oracle_agreement(26, 6, 4);
        detail = report.passed ? "closed forms equal the generating-function oracle"
                               : report_to_json(report);
        return report.passed;
    }});

    criteria.push_back({6, "determinant equivalence", 0, [](std::string& detail) {
        int checked = 0;
        for (int N = 0; N <= 4; ++N) {
            for (int n = 0; n <= 8; ++n) {
                if (hyper_euler_by_det(N, n) != hyper_euler(N, n) ||
                    hyper_euler2_by_det(N, n) != hyper_euler2(N, n)) {
                    detail = "mismatch at N=" + std::to_string(N) + ", n=" + std::to_string(n);
                    return false;
                }
                checked += 2;
            }
        }
        detail = std::to_string(checked) + " determinant values equal the recurrences";
        return true;
    }});

    criteria.push_back({7, "identity sweeps", 0, [](std::string& detail) {
        std::vector<VerifyReport> reports;
        reports.push_back(verify_recurrence_e2(30));
        reports.push_back(verify_sum1(12, 12));
        reports.push_back(verify_duality(12, 12));
        reports.push_back(verify_pb_expansion(14, 6));
        reports.push_back(verify_positivity(10, 8));
        reports.push_back(verify_products(3, 10));
        for (const auto& report : reports) {
            if (!report.passed) {
                detail = report_to_json(report);
                return false;
            }
        }
        detail = "recurrence-e2, sum1, duality, pb-expansion, positivity, products all exact";
        return true;
    }});

    criteria.push_back({8, "congruence suite", 0, [](std::string& detail) {
        auto report = verify_congruences(20, 8, 13);
        if (report.subclaims.size() != 6) {
            detail = "expected 6 sub-claims";
            return false;
        }
        for (std::size_t i = 0; i < 5; ++i) {
            if (!report.subclaims[i].passed || report.subclaims[i].expected_fail) {
                detail = report_to_json(report.subclaims[i]);
                return false;
            }
        }
        const auto& flagged = report.subclaims[5];
        if (!flagged.expected_fail || flagged.passed || !flagged.counterexample) {
            detail = "discrepancy sub-claim not reported as expected-fail";
            return false;
        }
        const auto& ce = *flagged.counterexample;
        if (ce.lhs != "5") {
            detail = "expected the E^_2^(0) = 5 witness, got " + ce.lhs;
            return false;
        }
        detail = "five sub-claims exact; even-index-even expected-fail with witness "
                 "E^_2^(0) = " + ce.lhs;
        return true;
    }});

    criteria.push_back({9, "property suite", 0, [](std::string& detail) {
        // Odd-index EGF coefficients vanish for the even families.
        std::vector<SeqFamily> families = {SeqFamily::euler(), SeqFamily::comp_euler()};
        for (int N = 0; N <= 4; ++N) {
            families.push_back(SeqFamily::hyper_euler(N));
            families.push_back(SeqFamily::hyper_euler2(N));
        }
        for (const auto& family : families) {
            auto seq = sequence_by_gf(family, 15);
            for (int n = 1; n <= 15; n += 2) {
                if (seq[n] != 0) {
                    detail = "odd-index coefficient survives";
                    return false;
                }
            }
        }
        // Stirling recurrence against the alternating-binomial closed form.
        for (int n = 0; n <= 30; ++n) {
            for (int j = 0; j <= 30; ++j) {
                BigInt acc = 0;
                for (int i = 0; i <= j; ++i) {
                    BigInt term = binomial(j, i) * int_pow(BigInt(i), static_cast<unsigned>(n));
                    acc += ((j - i) % 2 == 0) ? term : -term;
                }
                if (Rat(acc, factorial(j)) != Rat(stirling2(n, j))) {
                    detail = "stirling2 mismatch at n=" + std::to_string(n) +
                             ", j=" + std::to_string(j);
                    return false;
                }
            }
        }
        // (2n+1)!! E^_2n is an integer.
        for (int n = 0; n <= 50; ++n) {
            if (denominator_of(Rat(odd_double_factorial(n)) * comp_euler(2 * n)) != 1) {
                detail = "non-integer double-factorial multiple at n=" + std::to_string(n);
                return false;
            }
        }
        // Duality sides tie back to the poly-Bernoulli closed form.
        for (int n = 0; n <= 12; ++n) {
            for (int k = 0; k <= 12; ++k) {
                Rat side = 0;
                for (int m = 0; m <= n; ++m) {
                    side += Rat(binomial(n, m)) * (Rat(2) - Rat(euler_number(n - m))) *
                            poly_euler2(m, -k, PolyEuler2Method::stirling_neg);
                }
                side /= Rat(int_pow(4, static_cast<unsigned>(n)));
                if (side != poly_bernoulli(n, -k) || side != poly_bernoulli(k, -n)) {
                    detail = "duality cross-tie fails at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k);
                    return false;
                }
            }
        }
        detail = "odd-index vanishing, stirling2 routes, integrality, duality cross-tie";
        return true;
    }});

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = criterion.run(detail);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        bool in_budget = criterion.budget_ms == 0 || elapsed < criterion.budget_ms;
        if (!in_budget) {
            detail += " [over budget]";
        }
        bool passed = ok && in_budget;
        failures += passed ? 0 : 1;
        std::printf("%s  %d %-28s %s (%lld ms%s)\n", passed ? "PASS" : "FAIL", criterion.id,
                     criterion.name, detail.c_str(), static_cast<long long>(elapsed),
                     criterion.budget_ms == 0
                         ? ""
                         : (", budget " + std::to_string(criterion.budget_ms) + " ms").c_str());
    }
    if (failures != 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
