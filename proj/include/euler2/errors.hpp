#pragma once

#include <stdexcept>

namespace euler2 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series_div: numerator valuation below denominator valuation, or the
// denominator is zero through its truncation order.
struct DivisionByNonUnit : Error {
    using Error::Error;
};

// polylog_of: argument series has a nonzero constant term.
struct NonzeroConstantTerm : Error {
    using Error::Error;
};

// Coefficient access past the truncation order.
struct IndexBeyondOrder : Error {
    using Error::Error;
};

// hessenberg_det: matrix size exceeds the supplied first column.
struct SizeExceedsColumn : Error {
    using Error::Error;
};

// poly_euler2: the Stirling-sum methods are defined for k <= 0 only.
struct MethodRequiresNonpositiveK : Error {
    using Error::Error;
};

// Argument outside the supported desk-scale range.
struct ParameterOutOfRange : Error {
    using Error::Error;
};

}
