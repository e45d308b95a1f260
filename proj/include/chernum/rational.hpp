#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace chernum {

// Exact scalars. Everything in the library computes over these; there is no
// floating point anywhere in the core. Expression templates are off so that
// arithmetic results are plain values and store directly into containers.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Rational rational_pow(const Rational& q, int e) {
    if (e < 0) {
        if (q == 0) throw std::domain_error("rational_pow: zero base, negative exponent");
        return 1 / rational_pow(q, -e);
    }
    Rational r = 1, b = q;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Floor of an exact rational.
inline Int rational_floor(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    Int quot = n / d;
    if (n < 0 && quot * d != n) --quot;
    return quot;
}

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace chernum
