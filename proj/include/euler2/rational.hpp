#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace euler2 {

// Exact arbitrary-precision scalars. cpp_rational keeps every value in
// canonical form: gcd(|numerator|, denominator) = 1, denominator >= 1,
// and zero is 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rat& r) {
    return boost::multiprecision::numerator(r);
}

inline BigInt denominator_of(const Rat& r) {
    return boost::multiprecision::denominator(r);
}

// num/den in canonical form for any nonzero den: the sign moves to the
// numerator and the gcd is divided out. The cpp_rational two-argument
// constructor would reject a negative denominator instead.
Rat make_rat(const BigInt& num, const BigInt& den);

// Canonical rendering: minus sign on the numerator, denominator always
// positive, "/1" suppressed. "5", "-1/3", "0".
std::string to_string(const Rat& r);

}
