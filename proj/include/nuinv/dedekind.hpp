#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "rational.hpp"

namespace nuinv {

// Sawtooth ((x)): 0 at integers, x - floor(x) - 1/2 otherwise. Odd, 1-periodic.
inline Rational sawtooth(const Rational& x) {
    if (x.is_integer())
        return Rational(0);
    return x - Rational(x.floor()) - Rational(1, 2);
}

// Arguments of the three-argument Dedekind sum s(alpha, beta, gamma).
// beta and gamma may be negative or exceed alpha; the sum only depends on
// them mod alpha, and the coprimality conditions keep every term finite.
struct DedekindArgs {
    Int alpha;
    Int beta;
    Int gamma;

    DedekindArgs(Int a, Int b, Int c)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
        if (alpha < 1)
            throw std::invalid_argument("DedekindArgs: alpha must be >= 1");
        if (gcd(abs(beta), alpha) != 1)
            throw std::invalid_argument("DedekindArgs: beta must be coprime to alpha");
        if (gcd(abs(gamma), alpha) != 1)
            throw std::invalid_argument("DedekindArgs: gamma must be coprime to alpha");
    }
};

// Direct summation of the sawtooth form
//   s(alpha, beta, gamma) = sum_{k=1}^{alpha-1} ((k beta/alpha)) ((k gamma/alpha)).
// Each factor is (2(k b mod alpha) - alpha) / (2 alpha) -- the residues never
// vanish under the gcd conditions -- so the sum accumulates exactly over the
// common denominator 4 alpha^2. O(alpha); test oracle for s3_fast.
inline Rational s3_bruteforce(const DedekindArgs& args) {
    const Int& a = args.alpha;
    if (a == 1)
        return Rational(0);
    const Int b = floor_mod(args.beta, a);
    const Int c = floor_mod(args.gamma, a);
    Int num = 0;
    Int rb = 0, rc = 0; // k*b mod a, k*c mod a
    for (Int k = 1; k < a; ++k) {
        rb += b;
        if (rb >= a)
            rb -= a;
        rc += c;
        if (rc >= a)
            rc -= a;
        num += (2 * rb - a) * (2 * rc - a);
    }
    return Rational(num, 4 * a * a);
}

// Classical Dedekind sum s(b, c) = sum_{k=1}^{c-1} ((k/c)) ((k b/c)) in
// O(log c) steps: apply the reciprocity law
//   s(b, c) + s(c, b) = -1/4 + (b^2 + c^2 + 1) / (12 b c)
// along the Euclidean remainder chain of (b, c). Terminates at b = 0, which
// coprimality forces to mean c = 1 and an empty sum.
inline Rational dedekind_s2(Int b, Int c) {
    if (c < 1)
        throw std::invalid_argument("dedekind_s2: modulus must be >= 1");
    b = floor_mod(b, c);
    if (gcd(b, c) != 1)
        throw std::invalid_argument("dedekind_s2: arguments must be coprime");
    Rational s(0);
    bool negate = false;
    while (b != 0) {
        Rational step = Rational(-1, 4) + Rational(b * b + c * c + 1, 12 * b * c);
        s += negate ? -step : step;
        Int r = c % b;
        c = b;
        b = r;
        negate = !negate;
    }
    return s;
}

// Logarithmic-time evaluation of s(alpha, beta, gamma): the substitution
// k -> beta^{-1} k mod alpha is a bijection of the nonzero residues and turns
// the sum into the classical s(beta^{-1} gamma mod alpha, alpha).
inline Rational s3_fast(const DedekindArgs& args) {
    const Int& a = args.alpha;
    if (a == 1)
        return Rational(0);
    const Int b = floor_mod(args.beta, a);
    const Int g = floor_mod(args.gamma, a);
    return dedekind_s2(mod_inverse(b, a) * g, a);
}

// Literal floating-point evaluation of the defining cotangent sum
//   (1 / 4 alpha) sum_{k=1}^{alpha-1} cot(k beta pi/alpha) cot(k gamma pi/alpha).
// Validates the sawtooth reading of the exact routines.
inline double s3_float_oracle(const DedekindArgs& args) {
    const long long a = args.alpha.convert_to<long long>();
    if (a == 1)
        return 0.0;
    const long long b = floor_mod(args.beta, args.alpha).convert_to<long long>();
    const long long c = floor_mod(args.gamma, args.alpha).convert_to<long long>();
    const double pi_over_a = std::acos(-1.0) / static_cast<double>(a);
    double sum = 0.0;
    long long rb = 0, rc = 0;
    for (long long k = 1; k < a; ++k) {
        rb += b;
        if (rb >= a)
            rb -= a;
        rc += c;
        if (rc >= a)
            rc -= a;
        sum += 1.0 / (std::tan(pi_over_a * static_cast<double>(rb)) *
                      std::tan(pi_over_a * static_cast<double>(rc)));
    }
    return sum / (4.0 * static_cast<double>(a));
}

inline Rational s3_bruteforce(Int alpha, Int beta, Int gamma) {
    return s3_bruteforce(DedekindArgs(std::move(alpha), std::move(beta), std::move(gamma)));
}
inline Rational s3_fast(Int alpha, Int beta, Int gamma) {
    return s3_fast(DedekindArgs(std::move(alpha), std::move(beta), std::move(gamma)));
}
inline double s3_float_oracle(Int alpha, Int beta, Int gamma) {
    return s3_float_oracle(DedekindArgs(std::move(alpha), std::move(beta), std::move(gamma)));
}

} // namespace nuinv
