#include "euler2/series.hpp"

#include "euler2/combinatorics.hpp"
#include "euler2/sequences.hpp"

#include <algorithm>
#include <utility>

namespace euler2 {

namespace {

void check_order(int order) {
    if (order < 0) {
        throw ParameterOutOfRange("series order must be nonnegative");
    }
}

}  // namespace

TruncSeries::TruncSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw ParameterOutOfRange("a series needs at least the constant coefficient");
    }
}

TruncSeries TruncSeries::zero(int order) {
    check_order(order);
    return TruncSeries(std::vector<Rat>(order + 1));
}

TruncSeries TruncSeries::constant(const Rat& c, int order) {
    check_order(order);
    std::vector<Rat> coeffs(order + 1);
    coeffs[0] = c;
    return TruncSeries(std::move(coeffs));
}

TruncSeries TruncSeries::monomial(const Rat& c, int degree, int order) {
    check_order(order);
    if (degree < 0 || degree > order) {
        throw ParameterOutOfRange("monomial degree must lie within the order");
    }
    std::vector<Rat> coeffs(order + 1);
    coeffs[degree] = c;
    return TruncSeries(std::move(coeffs));
}

const Rat& TruncSeries::coeff(int i) const {
    if (i < 0 || i > order()) {
        throw IndexBeyondOrder("coefficient index " + std::to_string(i) +
                               " beyond order " + std::to_string(order()));
    }
    return coeffs_[i];
}

int TruncSeries::valuation() const {
    for (int i = 0; i <= order(); ++i) {
        if (coeffs_[i] != 0) {
            return i;
        }
    }
    return -1;
}

TruncSeries TruncSeries::truncated(int new_order) const {
    check_order(new_order);
    if (new_order >= order()) {
        return *this;
    }
    return TruncSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncSeries elementary_series(ElemKind kind, const Rat& scale, int order) {
    check_order(order);
    std::vector<Rat> coeffs(order + 1);
    Rat term = 1;  // scale^n / n!
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            term *= scale;
            term /= n;
        }
        switch (kind) {
            case ElemKind::exp:
                coeffs[n] = term;
                break;
            case ElemKind::sinh:
                if (n % 2 == 1) coeffs[n] = term;
                break;
            case ElemKind::cosh:
                if (n % 2 == 0) coeffs[n] = term;
                break;
        }
    }
    return TruncSeries(std::move(coeffs));
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    int ord = std::min(a.order(), b.order());
    std::vector<Rat> coeffs(ord + 1);
    for (int i = 0; i <= ord; ++i) {
        coeffs[i] = a.coeff(i) + b.coeff(i);
    }
    return TruncSeries(std::move(coeffs));
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
    int ord = std::min(a.order(), b.order());
    std::vector<Rat> coeffs(ord + 1);
    for (int i = 0; i <= ord; ++i) {
        coeffs[i] = a.coeff(i) - b.coeff(i);
    }
    return TruncSeries(std::move(coeffs));
}

TruncSeries series_scale(const Rat& c, const TruncSeries& a) {
    std::vector<Rat> coeffs(a.coeffs());
    for (auto& x : coeffs) {
        x *= c;
    }
    return TruncSeries(std::move(coeffs));
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    int ord = std::min(a.order(), b.order());
    std::vector<Rat> coeffs(ord + 1);
    for (int n = 0; n <= ord; ++n) {
        Rat acc = 0;
        for (int i = 0; i <= n; ++i) {
            acc += a.coeff(i) * b.coeff(n - i);
        }
        coeffs[n] = acc;
    }
    return TruncSeries(std::move(coeffs));
}

TruncSeries series_div(const TruncSeries& num, const TruncSeries& den) {
    int vden = den.valuation();
    if (vden < 0) {
        throw DivisionByNonUnit("denominator is zero through its order");
    }
    int vnum = num.valuation();
    if (vnum >= 0 && vnum < vden) {
        throw DivisionByNonUnit("numerator valuation " + std::to_string(vnum) +
                                " below denominator valuation " + std::to_string(vden));
    }
    int ord = std::min(num.order(), den.order()) - vden;
    if (ord < 0) {
        throw DivisionByNonUnit("operand orders too small for the valuation shift");
    }
    // Shift both down by vden, then solve q from den' * q = num' term by
    // term against the now-unit constant coefficient.
    const Rat& lead = den.coeff(vden);
    std::vector<Rat> q(ord + 1);
    for (int n = 0; n <= ord; ++n) {
        Rat acc = num.coeff(n + vden);
        for (int i = 1; i <= n; ++i) {
            acc -= den.coeff(i + vden) * q[n - i];
        }
        q[n] = acc / lead;
    }
    return TruncSeries(std::move(q));
}

TruncSeries polylog_of(int k, const TruncSeries& u, int order) {
    check_order(order);
    if (u.coeff(0) != 0) {
        throw NonzeroConstantTerm("polylog argument must have zero constant term");
    }
    int ord = std::min(order, u.order());
    TruncSeries base = u.truncated(ord);
    TruncSeries power = base;
    TruncSeries acc = TruncSeries::zero(ord);
    // u^m has valuation >= m, so terms past m = ord contribute nothing.
    for (int m = 1; m <= ord; ++m) {
        Rat weight = (k > 0) ? Rat(1, int_pow(BigInt(m), static_cast<unsigned>(k)))
                             : Rat(int_pow(BigInt(m), static_cast<unsigned>(-k)));
        acc = series_add(acc, series_scale(weight, power));
        if (m < ord) {
            power = series_mul(power, base);
        }
    }
    return acc;
}

Rat egf_extract(const TruncSeries& s, int n) {
    if (n < 0 || n > s.order()) {
        throw IndexBeyondOrder("EGF index " + std::to_string(n) + " beyond order " +
                               std::to_string(s.order()));
    }
    return s.coeff(n) * Rat(factorial(n));
}

namespace {

// cosh t (parity even) or sinh t (parity odd) with the first `level` terms
// removed: sum over n >= level of t^(2n+parity)/(2n+parity)!.
TruncSeries trig_tail(int parity, int level, int order) {
    std::vector<Rat> coeffs(order + 1);
    for (int m = level; 2 * m + parity <= order; ++m) {
        int idx = 2 * m + parity;
        coeffs[idx] = Rat(1, factorial(idx));
    }
    return TruncSeries(std::move(coeffs));
}

std::vector<Rat> extract_prefix(const TruncSeries& s, int nmax) {
    std::vector<Rat> out(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        out[n] = egf_extract(s, n);
    }
    return out;
}

}  // namespace

std::vector<Rat> sequence_by_gf(const SeqFamily& family, int nmax) {
    if (nmax < 0 || nmax > kMaxIndex) {
        throw ParameterOutOfRange("nmax must lie in [0, " + std::to_string(kMaxIndex) + "]");
    }
    if (family.k < -kMaxPolyOrder || family.k > kMaxPolyOrder) {
        throw ParameterOutOfRange("|k| must not exceed " + std::to_string(kMaxPolyOrder));
    }
    if (family.N < 0 || family.N > kMaxIndex) {
        throw ParameterOutOfRange("N must lie in [0, " + std::to_string(kMaxIndex) + "]");
    }

    switch (family.family) {
        case Family::Euler: {
            auto num = TruncSeries::constant(1, nmax);
            auto den = elementary_series(ElemKind::cosh, 1, nmax);
            return extract_prefix(series_div(num, den), nmax);
        }
        case Family::CompEuler: {
            int ord = nmax + 1;
            auto num = TruncSeries::monomial(1, 1, ord);
            auto den = elementary_series(ElemKind::sinh, 1, ord);
            return extract_prefix(series_div(num, den), nmax);
        }
        case Family::BernoulliMinus: {
            int ord = nmax + 1;
            auto num = TruncSeries::monomial(1, 1, ord);
            auto den = series_sub(elementary_series(ElemKind::exp, 1, ord),
                                  TruncSeries::constant(1, ord));
            return extract_prefix(series_div(num, den), nmax);
        }
        case Family::BernoulliPlus: {
            // t e^t/(e^t - 1) = t/(1 - e^-t)
            int ord = nmax + 1;
            auto num = TruncSeries::monomial(1, 1, ord);
            auto den = series_sub(TruncSeries::constant(1, ord),
                                  elementary_series(ElemKind::exp, -1, ord));
            return extract_prefix(series_div(num, den), nmax);
        }
        case Family::PolyBernoulli: {
            int ord = nmax + 1;
            auto u = series_sub(TruncSeries::constant(1, ord),
                                elementary_series(ElemKind::exp, -1, ord));
            auto num = polylog_of(family.k, u, ord);
            return extract_prefix(series_div(num, u), nmax);
        }
        case Family::PolyEuler: {
            int ord = nmax + 1;
            auto u = series_sub(TruncSeries::constant(1, ord),
                                elementary_series(ElemKind::exp, -4, ord));
            auto num = polylog_of(family.k, u, ord);
            auto den = series_mul(TruncSeries::monomial(4, 1, ord),
                                  elementary_series(ElemKind::cosh, 1, ord));
            return extract_prefix(series_div(num, den), nmax);
        }
        case Family::PolyEuler2: {
            int ord = nmax + 1;
            auto u = series_sub(TruncSeries::constant(1, ord),
                                elementary_series(ElemKind::exp, -4, ord));
            auto num = polylog_of(family.k, u, ord);
            auto den = series_scale(4, elementary_series(ElemKind::sinh, 1, ord));
            return extract_prefix(series_div(num, den), nmax);
        }
        case Family::HyperEuler: {
            int ord = nmax + 2 * family.N;
            auto num = TruncSeries::monomial(Rat(1, factorial(2 * family.N)),
                                             2 * family.N, ord);
            auto den = trig_tail(0, family.N, ord);
            return extract_prefix(series_div(num, den), nmax);
        }
        case Family::HyperEuler2: {
            int ord = nmax + 2 * family.N + 1;
            auto num = TruncSeries::monomial(Rat(1, factorial(2 * family.N + 1)),
                                             2 * family.N + 1, ord);
            auto den = trig_tail(1, family.N, ord);
            return extract_prefix(series_div(num, den), nmax);
        }
    }
    throw Error("unreachable: unknown family");
}

}
