#pragma once

#include "euler2/rational.hpp"

namespace euler2 {

// n!; values are cached across calls.
BigInt factorial(int n);

// Binomial coefficient C(n, j), built from cached Pascal rows rather than
// factorial quotients. Returns 0 for j < 0 or j > n.
BigInt binomial(int n, int j);

// (2n+1)!! = 1 * 3 * ... * (2n+1).
BigInt odd_double_factorial(int n);

// base^exp for exp >= 0.
BigInt int_pow(const BigInt& base, unsigned exp);
Rat rat_pow(const Rat& base, unsigned exp);

}
