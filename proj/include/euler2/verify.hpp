#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace euler2 {

// First failing parameter tuple of a sweep, with both sides rendered as
// canonical rational strings.
struct Counterexample {
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;

    bool operator==(const Counterexample&) const = default;
};

// Outcome of one theorem check. Sweeps run in lexicographic parameter
// order, so the recorded counterexample is the lexicographically smallest
// one. passed is true iff no counterexample was found; expected_fail marks
// checks that encode a known discrepancy and are supposed to fail.
// elapsed_ms is the only field that varies between runs.
struct VerifyReport {
    std::string theorem_id;
    std::string range;
    bool passed = true;
    bool expected_fail = false;
    std::optional<Counterexample> counterexample;
    std::int64_t elapsed_ms = 0;
    std::vector<VerifyReport> subclaims;
};

// Equality of everything except elapsed times.
bool same_outcome(const VerifyReport& a, const VerifyReport& b);

// Compact single-line JSON:
// {theorem_id, range, passed, expected_fail, counterexample|null, elapsed_ms}
// plus a "subclaims" array when sub-claims are present.
std::string report_to_json(const VerifyReport& report);

// Default sweep ranges; desk-scale runtimes well under ten seconds total.
inline constexpr int kDefaultNmax = 16;
inline constexpr int kDefaultKmax = 8;
inline constexpr int kDefaultPmax = 13;
inline constexpr int kDefaultLevelMax = 4;

// sum_{j=0}^{n} C(2n+1, 2j) E^_2j = 0 for 1 <= n <= nmax.
VerifyReport verify_recurrence_e2(int nmax = kDefaultNmax);

// reduced denominator of E^_2n equals the odd-prime product for
// 1 <= n <= nmax.
VerifyReport verify_denominator(int nmax = kDefaultNmax);

// sum_{j=0}^{n} C(2n+1, 2j) (2k+1)^(2n-2j+1) E^_2j = 2(2n+1) sum_{l=1}^{k} (2l)^2n.
VerifyReport verify_sum1(int nmax = kDefaultNmax, int kmax = kDefaultKmax);

// sum_m C(n,m) (2-E_(n-m))/4^n E^_m^(-k) is symmetric in (n, k), and both
// sides equal B_n^(-k) = B_k^(-n).
VerifyReport verify_duality(int nmax = kDefaultNmax, int kmax = kDefaultKmax);

// 4^n B_n^(k) = sum_m C(n,m) (2-E_(n-m)) E^_m^(k), and the inverse
// expansion of E^_n^(k) through poly-Bernoulli numbers; k sweeps both signs.
VerifyReport verify_pb_expansion(int nmax = kDefaultNmax, int kmax = kDefaultKmax);

// The triple Stirling sum for E^_n^(-k): every summand is nonnegative and
// the total matches the closed form.
VerifyReport verify_positivity(int nmax = kDefaultNmax, int kmax = kDefaultKmax);

// Congruence sub-claims for E^_n^(-k), reported separately:
//   equiv-mod-p        n = m (mod p-1), n,m >= 1  =>  E^_n = E^_m (mod p)
//   odd-odd-divisible  k = p-2 (mod p-1), n,k odd =>  p | E^_n^(-k)
//   value-at-p         E^_p^(-k) = 2^(k+2)-2 (mod p), p > 3
//   value-at-3         E^_3^(-k) = (-1)^k+1 (mod 3)
//   parity             E^_n^(-k) odd iff n even
//   even-index-even    E^_2^(-k) = 0 (mod 2) -- expected fail; the parity
//                      sub-claim and the tabulated values contradict it.
VerifyReport verify_congruences(int nmax = kDefaultNmax, int kmax = kDefaultKmax,
                                int pmax = kDefaultPmax);

// Sums of products of hypergeometric Euler numbers of both kinds.
VerifyReport verify_products(int Nmax = kDefaultLevelMax, int nmax = kDefaultNmax);

// Closed-form/recurrence/determinant routes equal the generating-function
// oracle for every family.
VerifyReport verify_oracle_agreement(int nmax = kDefaultNmax, int kmax = kDefaultKmax,
                                     int Nmax = kDefaultLevelMax);

// All checkers in fixed order: recurrence-e2, denominator, sum1, duality,
// pb-expansion, positivity, congruences, products, oracle.
std::vector<VerifyReport> verify_all(int nmax = kDefaultNmax, int kmax = kDefaultKmax,
                                     int pmax = kDefaultPmax, int Nmax = kDefaultLevelMax);

// 0 when every check that is not expected to fail passed, else 1.
int exit_status(const std::vector<VerifyReport>& reports);

}
