#include "euler2/rational.hpp"

#include "euler2/errors.hpp"

namespace euler2 {

Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw ParameterOutOfRange("rational with zero denominator");
    }
    return den < 0 ? Rat(-num, -den) : Rat(num, den);
}

std::string to_string(const Rat& r) {
    BigInt den = denominator_of(r);
    std::string s = numerator_of(r).str();
    if (den != 1) {
        s += "/" + den.str();
    }
    return s;
}

}
