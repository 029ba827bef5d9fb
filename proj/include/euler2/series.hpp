#pragma once

#include "euler2/errors.hpp"
#include "euler2/family.hpp"
#include "euler2/rational.hpp"

#include <vector>

namespace euler2 {

// Truncated formal power series over exact rationals. coeff(i) is the
// coefficient of t^i and order() = number of coefficients - 1. Every
// arithmetic result is exact for indices up to its order; indices beyond
// the order are undefined, never silently zero, and reading one throws
// IndexBeyondOrder.
class TruncSeries {
public:
    explicit TruncSeries(std::vector<Rat> coeffs);

    static TruncSeries zero(int order);
    static TruncSeries constant(const Rat& c, int order);
    // c * t^degree, degree <= order.
    static TruncSeries monomial(const Rat& c, int degree, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // Index of the first nonzero coefficient; -1 when identically zero
    // through the truncation order.
    int valuation() const;

    // Copy with order min(order(), new_order).
    TruncSeries truncated(int new_order) const;

    bool operator==(const TruncSeries&) const = default;

private:
    std::vector<Rat> coeffs_;
};

enum class ElemKind { exp, sinh, cosh };

// exp(scale*t), sinh(scale*t) or cosh(scale*t): coefficient of t^n is
// scale^n/n!, restricted to odd n for sinh and even n for cosh.
TruncSeries elementary_series(ElemKind kind, const Rat& scale, int order);

// Binary operations shrink to the smaller order, so pipelines degrade
// predictably instead of fabricating zeros.
TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_scale(const Rat& c, const TruncSeries& a);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

// Division with a valuation shift: both operands are shifted down by
// valuation(den), then divided coefficient by coefficient. Result order is
// min(num.order, den.order) - valuation(den). Requires valuation(num) >=
// valuation(den) and a denominator that is nonzero through its order.
TruncSeries series_div(const TruncSeries& num, const TruncSeries& den);

// Truncated polylogarithm: sum_{m=1}^{order} u^m / m^k, where 1/m^k means
// multiplication by m^|k| when k <= 0. u must have a zero constant term,
// which makes each coefficient a finite sum.
TruncSeries polylog_of(int k, const TruncSeries& u, int order);

// Reads a_n from s = sum a_n t^n/n!, i.e. coeff(n) * n!.
Rat egf_extract(const TruncSeries& s, int n);

// EGF coefficients a_0..a_nmax of the chosen family, computed directly
// from the defining generating function. This is the oracle the closed
// forms and recurrences are checked against.
std::vector<Rat> sequence_by_gf(const SeqFamily& family, int nmax);

}
