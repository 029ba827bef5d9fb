#pragma once

#include "euler2/family.hpp"
#include "euler2/rational.hpp"

#include <vector>

namespace euler2 {

// Desk-scale caps on the public API. Arguments beyond these throw
// ParameterOutOfRange.
inline constexpr int kMaxIndex = 512;     // sequence index n, level N
inline constexpr int kMaxPolyOrder = 64;  // polylog order |k|

// Stirling number of the second kind S(n, j) by the triangular recurrence
// S(n, j) = j*S(n-1, j) + S(n-1, j-1). Returns 0 when j > n or (j = 0, n > 0).
BigInt stirling2(int n, int j);

// Bernoulli number in the requested convention. The minus convention is
// computed from sum_{j=0}^{n} C(n+1, j) B_j = 0; plus differs only at n = 1.
Rat bernoulli(int n, Convention conv = Convention::minus);

// Bernoulli polynomial value B_n(x) = sum_j C(n, j) B_j x^(n-j), minus
// convention.
Rat bernoulli_polynomial_at(int n, const Rat& x);

// Euler number E_n: zero at odd n, even indices from
// sum_{j=0}^{n} C(2n, 2j) E_2j = 0 with E_0 = 1.
BigInt euler_number(int n);

enum class CompEulerMethod { recurrence, bernoulli_identity };

// Euler number of the second kind E^_n (EGF t/sinh t): zero at odd n, even
// indices either from sum_{j=0}^{n} C(2n+1, 2j) E^_2j = 0 or from the
// Bernoulli identity E^_n = (2 - 2^n) B_n.
Rat comp_euler(int n, CompEulerMethod method = CompEulerMethod::recurrence);

// Poly-Bernoulli number B_n^(k) = sum_j (-1)^(n-j) j!/(j+1)^k S(n, j); for
// k <= 0 the division is multiplication by (j+1)^|k|.
Rat poly_bernoulli(int n, int k);

enum class PolyEuler2Method { via_pb, stirling_neg, stirling_neg2 };

// Poly-Euler number of the second kind E^_n^(k). via_pb expands through
// poly-Bernoulli numbers and works for every k; the two Stirling-sum
// methods require k <= 0 and throw MethodRequiresNonpositiveK otherwise.
Rat poly_euler2(int n, int k, PolyEuler2Method method = PolyEuler2Method::via_pb);

// Hypergeometric Euler numbers E_{N,n} and their second kind E^_{N,n},
// zero at odd n, even indices by the level-N recurrences. At N = 0 they
// reduce to euler_number and comp_euler.
Rat hyper_euler(int N, int n);
Rat hyper_euler2(int N, int n);

// Determinant of the size x size lower Hessenberg matrix with unit
// superdiagonal whose column j repeats first_column shifted down, i.e.
// M[i][j] = a_(i-j+1) for j <= i, M[i][i+1] = 1, else 0. Evaluated by the
// expansion d_0 = 1, d_m = sum_{i=1}^{m} (-1)^(i-1) a_i d_(m-i).
Rat hessenberg_det(const std::vector<Rat>& first_column, int size);

// Determinant routes for the same four families:
//   E_2m    = (-1)^m (2m)! * det with column 1/(2i)!
//   E^_2m   = (-1)^m (2m)! * det with column 1/(2i+1)!
//   E_{N,2m}  uses column (2N)!/(2N+2i)!
//   E^_{N,2m} uses column (2N+1)!/(2N+2i+1)!
// Zero at odd n. Equal to the recurrence routes.
Rat euler_number_by_det(int n);
Rat comp_euler_by_det(int n);
Rat hyper_euler_by_det(int N, int n);
Rat hyper_euler2_by_det(int N, int n);

// Product of all odd primes p with (p-1) | 2n; this is exactly the reduced
// denominator of E^_2n. Requires n >= 1.
BigInt denominator_product(int n);

}
