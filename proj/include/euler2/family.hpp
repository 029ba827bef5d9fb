#pragma once

namespace euler2 {

enum class Family {
    Euler,           // 1/cosh t
    CompEuler,       // t/sinh t
    BernoulliMinus,  // t/(e^t - 1)
    BernoulliPlus,   // t e^t/(e^t - 1)
    PolyBernoulli,   // Li_k(1-e^-t)/(1-e^-t)
    PolyEuler,       // Li_k(1-e^-4t)/(4t cosh t)
    PolyEuler2,      // Li_k(1-e^-4t)/(4 sinh t)
    HyperEuler,      // reciprocal of the cosh tail starting at t^2N
    HyperEuler2,     // reciprocal of the sinh tail starting at t^(2N+1)
};

// Bernoulli sign convention: minus has B_1 = -1/2, plus has B_1 = +1/2.
// They agree at every other index.
enum class Convention { minus, plus };

// A sequence family plus the integer parameters it needs: k is the
// polylog order, N the level of the hypergeometric families. Use the
// factories so that exactly the required parameters are supplied.
struct SeqFamily {
    Family family;
    int k = 0;
    int N = 0;

    static SeqFamily euler() { return {Family::Euler}; }
    static SeqFamily comp_euler() { return {Family::CompEuler}; }
    static SeqFamily bernoulli(Convention conv) {
        return {conv == Convention::minus ? Family::BernoulliMinus
                                          : Family::BernoulliPlus};
    }
    static SeqFamily poly_bernoulli(int k) { return {Family::PolyBernoulli, k}; }
    static SeqFamily poly_euler(int k) { return {Family::PolyEuler, k}; }
    static SeqFamily poly_euler2(int k) { return {Family::PolyEuler2, k}; }
    static SeqFamily hyper_euler(int N) { return {Family::HyperEuler, 0, N}; }
    static SeqFamily hyper_euler2(int N) { return {Family::HyperEuler2, 0, N}; }
};

}
