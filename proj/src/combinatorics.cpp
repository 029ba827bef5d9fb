#include "euler2/combinatorics.hpp"

#include "euler2/errors.hpp"

#include <mutex>
#include <vector>

namespace euler2 {

namespace {

std::mutex g_factorial_mutex;
std::vector<BigInt> g_factorials = {1};

std::mutex g_pascal_mutex;
std::vector<std::vector<BigInt>> g_pascal = {{1}};

}  // namespace

BigInt factorial(int n) {
    if (n < 0) {
        throw ParameterOutOfRange("factorial: n must be nonnegative");
    }
    std::lock_guard lock(g_factorial_mutex);
    while (static_cast<int>(g_factorials.size()) <= n) {
        int m = static_cast<int>(g_factorials.size());
        g_factorials.push_back(g_factorials.back() * m);
    }
    return g_factorials[n];
}

BigInt binomial(int n, int j) {
    if (n < 0) {
        throw ParameterOutOfRange("binomial: n must be nonnegative");
    }
    if (j < 0 || j > n) {
        return 0;
    }
    std::lock_guard lock(g_pascal_mutex);
    while (static_cast<int>(g_pascal.size()) <= n) {
        const auto& prev = g_pascal.back();
        std::vector<BigInt> row(prev.size() + 1, 1);
        for (std::size_t i = 1; i + 1 < row.size(); ++i) {
            row[i] = prev[i - 1] + prev[i];
        }
        g_pascal.push_back(std::move(row));
    }
    return g_pascal[n][j];
}

BigInt odd_double_factorial(int n) {
    if (n < 0) {
        throw ParameterOutOfRange("odd_double_factorial: n must be nonnegative");
    }
    BigInt result = 1;
    for (int i = 1; i <= 2 * n + 1; i += 2) {
        result *= i;
    }
    return result;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1u) {
            result *= b;
        }
        exp >>= 1u;
        if (exp != 0) {
            b *= b;
        }
    }
    return result;
}

Rat rat_pow(const Rat& base, unsigned exp) {
    return Rat(int_pow(numerator_of(base), exp), int_pow(denominator_of(base), exp));
}

}
