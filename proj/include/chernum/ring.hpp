#pragma once

#include "chernum/bigraded.hpp"
#include "chernum/polyring.hpp"
#include "chernum/rational.hpp"

#include <optional>
#include <string>

namespace chernum {

// The coefficient-ring contract used by the series engine and by genus
// evaluation: an exact commutative ring with 0, 1, +, *, equality, and
// rational scaling (every ring here is a Q-algebra). `invert` returns an
// inverse when the element is a unit, otherwise nothing; division is only
// required where an operation documents it.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static Rational from_rational(const Rational& q) { return q; }
    static Rational scale(const Rational& a, const Rational& q) { return a * q; }
    static bool is_zero(const Rational& a) { return a == 0; }
    static std::optional<Rational> invert(const Rational& a) {
        if (a == 0) return std::nullopt;
        return Rational(1) / a;
    }
    static std::string str(const Rational& a) { return chernum::to_string(a); }
};

template <>
struct ring_traits<Poly> {
    static Poly zero() { return {}; }
    static Poly one() { return Poly(1); }
    static Poly from_rational(const Rational& q) { return Poly(q); }
    static Poly scale(const Poly& a, const Rational& q) { return a.scale(q); }
    static bool is_zero(const Poly& a) { return a.is_zero(); }
    static std::optional<Poly> invert(const Poly& a) {
        // units of Q[y] are the nonzero constants
        if (a.degree() != 0) return std::nullopt;
        return Poly(Rational(1) / a.coeff(0));
    }
    static std::string str(const Poly& a) { return a.to_string(); }
};

template <>
struct ring_traits<symfunc::BigradedElement> {
    using B = symfunc::BigradedElement;
    static B zero() { return {}; }
    static B one() { return B::one(); }
    static B from_rational(const Rational& q) { return B::scalar(q); }
    static B scale(const B& a, const Rational& q) { return a.scale(q); }
    static bool is_zero(const B& a) { return a.is_zero(); }
    static std::optional<B> invert(const B& a) {
        // units are the nonzero scalars
        if (a.coeffs().size() != 1) return std::nullopt;
        const auto& [k, v] = *a.coeffs().begin();
        if (!k.first.empty() || !k.second.empty()) return std::nullopt;
        return B::scalar(Rational(1) / v);
    }
    static std::string str(const B& a) { return a.to_string(); }
};

}  // namespace chernum
