#include "euler2/sequences.hpp"

#include "euler2/combinatorics.hpp"
#include "euler2/errors.hpp"

#include <map>
#include <mutex>
#include <string>

namespace euler2 {

namespace {

void check_index(int n, const char* what) {
    if (n < 0 || n > kMaxIndex) {
        throw ParameterOutOfRange(std::string(what) + " must lie in [0, " +
                                  std::to_string(kMaxIndex) + "]");
    }
}

void check_poly_order(int k) {
    if (k < -kMaxPolyOrder || k > kMaxPolyOrder) {
        throw ParameterOutOfRange("|k| must not exceed " + std::to_string(kMaxPolyOrder));
    }
}

// The verifier sweeps re-query these sequences densely, so each recurrence
// keeps its full triangle/row cached behind a mutex.
std::mutex g_stirling_mutex;
std::vector<std::vector<BigInt>> g_stirling = {{1}};

std::mutex g_bernoulli_mutex;
std::vector<Rat> g_bernoulli = {1};

std::mutex g_euler_mutex;
std::vector<BigInt> g_euler_even = {1};  // E_0, E_2, E_4, ...

std::mutex g_comp_euler_mutex;
std::vector<Rat> g_comp_euler_even = {1};  // E^_0, E^_2, ...

std::mutex g_hyper_mutex;
std::map<int, std::vector<Rat>> g_hyper_even;    // N -> E_{N,0}, E_{N,2}, ...
std::map<int, std::vector<Rat>> g_hyper2_even;   // N -> E^_{N,0}, E^_{N,2}, ...

}  // namespace

BigInt stirling2(int n, int j) {
    check_index(n, "n");
    if (j < 0) {
        throw ParameterOutOfRange("j must be nonnegative");
    }
    if (j > n) {
        return 0;
    }
    std::lock_guard lock(g_stirling_mutex);
    while (static_cast<int>(g_stirling.size()) <= n) {
        int m = static_cast<int>(g_stirling.size());
        const auto& prev = g_stirling.back();
        std::vector<BigInt> row(m + 1);
        row[0] = 0;
        row[m] = 1;
        for (int i = 1; i < m; ++i) {
            row[i] = i * prev[i] + prev[i - 1];
        }
        g_stirling.push_back(std::move(row));
    }
    return g_stirling[n][j];
}

Rat bernoulli(int n, Convention conv) {
    check_index(n, "n");
    if (n == 1) {
        return conv == Convention::minus ? Rat(-1, 2) : Rat(1, 2);
    }
    std::lock_guard lock(g_bernoulli_mutex);
    while (static_cast<int>(g_bernoulli.size()) <= n) {
        int m = static_cast<int>(g_bernoulli.size());
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rat acc = 0;
        for (int j = 0; j < m; ++j) {
            acc += Rat(binomial(m + 1, j)) * g_bernoulli[j];
        }
        g_bernoulli.push_back(-acc / Rat(m + 1));
    }
    return g_bernoulli[n];
}

Rat bernoulli_polynomial_at(int n, const Rat& x) {
    check_index(n, "n");
    Rat acc = 0;
    for (int j = 0; j <= n; ++j) {
        acc += Rat(binomial(n, j)) * bernoulli(j) * rat_pow(x, static_cast<unsigned>(n - j));
    }
    return acc;
}

BigInt euler_number(int n) {
    check_index(n, "n");
    if (n % 2 == 1) {
        return 0;
    }
    int m = n / 2;
    std::lock_guard lock(g_euler_mutex);
    while (static_cast<int>(g_euler_even.size()) <= m) {
        int i = static_cast<int>(g_euler_even.size());
        // sum_{j=0}^{i} C(2i, 2j) E_2j = 0
        BigInt acc = 0;
        for (int j = 0; j < i; ++j) {
            acc += binomial(2 * i, 2 * j) * g_euler_even[j];
        }
        g_euler_even.push_back(-acc);
    }
    return g_euler_even[m];
}

Rat comp_euler(int n, CompEulerMethod method) {
    check_index(n, "n");
    if (n % 2 == 1) {
        return 0;
    }
    if (method == CompEulerMethod::bernoulli_identity) {
        // E^_n = (2 - 2^n) B_n = 2^n B_n(1/2)
        return Rat(2 - int_pow(2, static_cast<unsigned>(n))) * bernoulli(n);
    }
    int m = n / 2;
    std::lock_guard lock(g_comp_euler_mutex);
    while (static_cast<int>(g_comp_euler_even.size()) <= m) {
        int i = static_cast<int>(g_comp_euler_even.size());
        // sum_{j=0}^{i} C(2i+1, 2j) E^_2j = 0; the j = i term carries
        // coefficient C(2i+1, 2i) = 2i+1.
        Rat acc = 0;
        for (int j = 0; j < i; ++j) {
            acc += Rat(binomial(2 * i + 1, 2 * j)) * g_comp_euler_even[j];
        }
        g_comp_euler_even.push_back(-acc / Rat(2 * i + 1));
    }
    return g_comp_euler_even[m];
}

Rat poly_bernoulli(int n, int k) {
    check_index(n, "n");
    check_poly_order(k);
    Rat acc = 0;
    for (int j = 0; j <= n; ++j) {
        BigInt core = factorial(j) * stirling2(n, j);
        Rat term = (k > 0) ? Rat(core, int_pow(BigInt(j + 1), static_cast<unsigned>(k)))
                           : Rat(core * int_pow(BigInt(j + 1), static_cast<unsigned>(-k)));
        if ((n - j) % 2 == 1) {
            term = -term;
        }
        acc += term;
    }
    return acc;
}

Rat poly_euler2(int n, int k, PolyEuler2Method method) {
    check_index(n, "n");
    check_poly_order(k);
    switch (method) {
        case PolyEuler2Method::via_pb: {
            // E^_n^(k) = 1/2 sum_m C(n,m) 4^m ((-1)^(n-m) + (-3)^(n-m)) B_m^(k)
            Rat acc = 0;
            for (int m = 0; m <= n; ++m) {
                unsigned e = static_cast<unsigned>(n - m);
                BigInt weight = binomial(n, m) * int_pow(4, static_cast<unsigned>(m)) *
                                (int_pow(BigInt(-1), e) + int_pow(BigInt(-3), e));
                acc += Rat(weight) * poly_bernoulli(m, k);
            }
            return acc / 2;
        }
        case PolyEuler2Method::stirling_neg: {
            if (k > 0) {
                throw MethodRequiresNonpositiveK("stirling_neg needs k <= 0");
            }
            // E^_n^(-K) = (-1)^K/2 sum_l (-1)^l l! S(K,l) ((4l+3)^n + (4l+1)^n)
            int K = -k;
            BigInt acc = 0;
            for (int l = 0; l <= K; ++l) {
                BigInt term = factorial(l) * stirling2(K, l) *
                              (int_pow(BigInt(4 * l + 3), static_cast<unsigned>(n)) +
                               int_pow(BigInt(4 * l + 1), static_cast<unsigned>(n)));
                acc += (l % 2 == 0) ? term : -term;
            }
            if (K % 2 == 1) {
                acc = -acc;
            }
            return Rat(acc, 2);
        }
        case PolyEuler2Method::stirling_neg2: {
            if (k > 0) {
                throw MethodRequiresNonpositiveK("stirling_neg2 needs k <= 0");
            }
            // E^_n^(-K) = (-1)^K sum_l (-1)^l l! S(K,l)
            //             sum_{m=0}^{floor(n/2)} C(n,2m) (4l+2)^(n-2m)
            int K = -k;
            BigInt acc = 0;
            for (int l = 0; l <= K; ++l) {
                BigInt inner = 0;
                for (int m = 0; 2 * m <= n; ++m) {
                    inner += binomial(n, 2 * m) *
                             int_pow(BigInt(4 * l + 2), static_cast<unsigned>(n - 2 * m));
                }
                BigInt term = factorial(l) * stirling2(K, l) * inner;
                acc += (l % 2 == 0) ? term : -term;
            }
            if (K % 2 == 1) {
                acc = -acc;
            }
            return Rat(acc);
        }
    }
    throw Error("unreachable: unknown poly_euler2 method");
}

namespace {

// Shared recurrence for both hypergeometric kinds: `shift` is 0 for the
// first kind and 1 for the second, matching denominators (2N+n-2i+shift)!.
Rat hyper_even(std::map<int, std::vector<Rat>>& cache, int N, int m, int shift) {
    std::lock_guard lock(g_hyper_mutex);
    auto& row = cache[N];
    if (row.empty()) {
        row.push_back(1);
    }
    while (static_cast<int>(row.size()) <= m) {
        int i = static_cast<int>(row.size());
        Rat acc = 0;
        for (int j = 0; j < i; ++j) {
            acc += row[j] / Rat(factorial(2 * N + 2 * i - 2 * j + shift) * factorial(2 * j));
        }
        row.push_back(-Rat(factorial(2 * i) * factorial(2 * N + shift)) * acc);
    }
    return row[m];
}

}  // namespace

Rat hyper_euler(int N, int n) {
    check_index(N, "N");
    check_index(n, "n");
    if (n % 2 == 1) {
        return 0;
    }
    return hyper_even(g_hyper_even, N, n / 2, 0);
}

Rat hyper_euler2(int N, int n) {
    check_index(N, "N");
    check_index(n, "n");
    if (n % 2 == 1) {
        return 0;
    }
    return hyper_even(g_hyper2_even, N, n / 2, 1);
}

Rat hessenberg_det(const std::vector<Rat>& first_column, int size) {
    if (size < 1) {
        throw ParameterOutOfRange("size must be at least 1");
    }
    if (static_cast<int>(first_column.size()) < size) {
        throw SizeExceedsColumn("first column has " + std::to_string(first_column.size()) +
                                " entries, need " + std::to_string(size));
    }
    // d_0 = 1, d_m = sum_{i=1}^{m} (-1)^(i-1) a_i d_(m-i)
    std::vector<Rat> d(size + 1);
    d[0] = 1;
    for (int m = 1; m <= size; ++m) {
        Rat acc = 0;
        for (int i = 1; i <= m; ++i) {
            Rat term = first_column[i - 1] * d[m - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        d[m] = acc;
    }
    return d[size];
}

namespace {

// (-1)^m (2m)! * hessenberg_det of the given factorial-ratio column.
Rat det_route(int N, int n, int shift) {
    if (n % 2 == 1) {
        return 0;
    }
    if (n == 0) {
        return 1;
    }
    int m = n / 2;
    std::vector<Rat> column(m);
    for (int i = 1; i <= m; ++i) {
        column[i - 1] = Rat(factorial(2 * N + shift), factorial(2 * N + 2 * i + shift));
    }
    Rat det = hessenberg_det(column, m);
    Rat value = Rat(factorial(2 * m)) * det;
    return (m % 2 == 0) ? value : -value;
}

}  // namespace

Rat euler_number_by_det(int n) {
    return hyper_euler_by_det(0, n);
}

Rat comp_euler_by_det(int n) {
    return hyper_euler2_by_det(0, n);
}

Rat hyper_euler_by_det(int N, int n) {
    check_index(N, "N");
    check_index(n, "n");
    return det_route(N, n, 0);
}

Rat hyper_euler2_by_det(int N, int n) {
    check_index(N, "N");
    check_index(n, "n");
    return det_route(N, n, 1);
}

BigInt denominator_product(int n) {
    if (n < 1 || n > kMaxIndex) {
        throw ParameterOutOfRange("n must lie in [1, " + std::to_string(kMaxIndex) + "]");
    }
    // (p-1) | 2n forces p <= 2n+1, so trial division up to there suffices.
    BigInt product = 1;
    for (int p = 3; p <= 2 * n + 1; p += 2) {
        bool prime = true;
        for (int d = 3; d * d <= p; d += 2) {
            if (p % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime && (2 * n) % (p - 1) == 0) {
            product *= p;
        }
    }
    return product;
}

}
