#pragma once

#include "chernum/partition.hpp"
#include "chernum/rational.hpp"
#include "chernum/ring.hpp"
#include "chernum/symfunc.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace chernum::pseries {

// Univariate formal power series truncated at a fixed order, with
// coefficients in a pluggable exact commutative ring. Arithmetic is exact and
// closed at the order; mixed-order arithmetic truncates to the minimum.
template <class R>
class TruncSeries {
    using T = ring_traits<R>;

  public:
    explicit TruncSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order + 1), T::zero()) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    }
    TruncSeries(int order, std::vector<R> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
        coeffs_.resize(static_cast<std::size_t>(order + 1), T::zero());
    }

    static TruncSeries one(int order) {
        TruncSeries s(order);
        s.coeffs_[0] = T::one();
        return s;
    }
    static TruncSeries x(int order) {
        TruncSeries s(order);
        if (order >= 1) s.coeffs_[1] = T::one();
        return s;
    }

    int order() const { return order_; }
    const R& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<R>& coeffs() const { return coeffs_; }
    void set_coeff(int k, R v) { coeffs_.at(static_cast<std::size_t>(k)) = std::move(v); }

    TruncSeries truncated(int order) const {
        if (order >= order_) return *this;
        return TruncSeries(order, std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    TruncSeries operator+(const TruncSeries& o) const {
        int n = std::min(order_, o.order_);
        TruncSeries r(n);
        for (int k = 0; k <= n; ++k) r.coeffs_[static_cast<std::size_t>(k)] = coeff(k) + o.coeff(k);
        return r;
    }
    TruncSeries operator-(const TruncSeries& o) const { return *this + o.scale(-1); }
    TruncSeries operator*(const TruncSeries& o) const {
        int n = std::min(order_, o.order_);
        TruncSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (T::is_zero(coeff(i))) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (T::is_zero(o.coeff(j))) continue;
                r.coeffs_[static_cast<std::size_t>(i + j)] = r.coeffs_[static_cast<std::size_t>(i + j)] + coeff(i) * o.coeff(j);
            }
        }
        return r;
    }
    TruncSeries scale(const Rational& q) const {
        TruncSeries r(order_);
        for (int k = 0; k <= order_; ++k) r.coeffs_[static_cast<std::size_t>(k)] = T::scale(coeff(k), q);
        return r;
    }
    bool operator==(const TruncSeries& o) const {
        int n = std::min(order_, o.order_);
        for (int k = 0; k <= n; ++k)
            if (!(coeff(k) == o.coeff(k))) return false;
        return true;
    }

    TruncSeries pow(int e) const {
        TruncSeries r = one(order_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // Multiplicative inverse; requires an invertible constant term.
    TruncSeries inverse() const {
        auto c0 = T::invert(coeff(0));
        if (!c0)
            throw std::domain_error("TruncSeries::inverse: constant term not invertible: " + T::str(coeff(0)));
        TruncSeries r(order_);
        r.coeffs_[0] = *c0;
        for (int k = 1; k <= order_; ++k) {
            R acc = T::zero();
            for (int j = 1; j <= k; ++j) acc = acc + coeff(j) * r.coeffs_[static_cast<std::size_t>(k - j)];
            r.coeffs_[static_cast<std::size_t>(k)] = T::scale(acc * *c0, -1);
        }
        return r;
    }

    // Composition f(g); requires g to have zero constant term.
    TruncSeries compose(const TruncSeries& g) const {
        if (!T::is_zero(g.coeff(0)))
            throw std::domain_error("TruncSeries::compose: inner constant term must be zero: " + T::str(g.coeff(0)));
        int n = std::min(order_, g.order_);
        TruncSeries r(n);
        r.coeffs_[0] = coeff(0);
        TruncSeries gk = one(n);
        for (int k = 1; k <= n; ++k) {
            gk = gk * g.truncated(n);
            if (T::is_zero(coeff(k))) continue;
            for (int i = k; i <= n; ++i)
                r.coeffs_[static_cast<std::size_t>(i)] = r.coeffs_[static_cast<std::size_t>(i)] + coeff(k) * gk.coeff(i);
        }
        return r;
    }

    // Compositional inverse; requires zero constant term and an invertible
    // linear term.
    TruncSeries comp_inverse() const {
        if (!T::is_zero(coeff(0)))
            throw std::domain_error("TruncSeries::comp_inverse: constant term must be zero: " + T::str(coeff(0)));
        if (order_ < 1) throw std::domain_error("TruncSeries::comp_inverse: order must be >= 1");
        auto c1 = T::invert(coeff(1));
        if (!c1)
            throw std::domain_error("TruncSeries::comp_inverse: linear term not invertible: " + T::str(coeff(1)));
        TruncSeries g(order_);
        g.coeffs_[1] = *c1;
        for (int n = 2; n <= order_; ++n) {
            // with g_n still zero, the degree-n defect of f(g) is linear in g_n
            R defect = truncated(n).compose(g.truncated(n)).coeff(n);
            g.coeffs_[static_cast<std::size_t>(n)] = T::scale(defect * *c1, -1);
        }
        return g;
    }

    // exp/log in the Q-algebra structure of R.
    TruncSeries exp() const {
        if (!T::is_zero(coeff(0)))
            throw std::domain_error("TruncSeries::exp: constant term must be zero: " + T::str(coeff(0)));
        TruncSeries r = one(order_), p = one(order_);
        Rational fact = 1;
        for (int j = 1; j <= order_; ++j) {
            p = p * *this;
            fact *= j;
            r = r + p.scale(1 / fact);
        }
        return r;
    }
    TruncSeries log() const {
        if (!(coeff(0) == T::one()))
            throw std::domain_error("TruncSeries::log: constant term must be one: " + T::str(coeff(0)));
        TruncSeries u = *this - one(order_);
        TruncSeries r(order_), p = one(order_);
        for (int j = 1; j <= order_; ++j) {
            p = p * u;
            r = r + p.scale(Rational(j % 2 ? 1 : -1) / j);
        }
        return r;
    }

    // Exact division by x^m; the low coefficients must vanish.
    TruncSeries shift_down(int m) const {
        for (int k = 0; k < m; ++k)
            if (!T::is_zero(coeff(k)))
                throw std::domain_error("TruncSeries::shift_down: nonzero low coefficient: " + T::str(coeff(k)));
        TruncSeries r(order_ - m);
        for (int k = 0; k <= order_ - m; ++k) r.coeffs_[static_cast<std::size_t>(k)] = coeff(k + m);
        return r;
    }
    // Multiplication by x^m at the same order (top coefficients fall off).
    TruncSeries shift_up(int m) const {
        TruncSeries r(order_);
        for (int k = m; k <= order_; ++k) r.coeffs_[static_cast<std::size_t>(k)] = coeff(k - m);
        return r;
    }

    // Coefficients transported along x -> a*x.
    TruncSeries scale_argument(const Rational& a) const {
        TruncSeries r(order_);
        Rational ak = 1;
        for (int k = 0; k <= order_; ++k) {
            r.coeffs_[static_cast<std::size_t>(k)] = T::scale(coeff(k), ak);
            ak *= a;
        }
        return r;
    }

  private:
    int order_;
    std::vector<R> coeffs_;
};

template <class R>
TruncSeries<R> lift(const TruncSeries<Rational>& s) {
    TruncSeries<R> r(s.order());
    for (int k = 0; k <= s.order(); ++k) r.set_coeff(k, ring_traits<R>::from_rational(s.coeff(k)));
    return r;
}

// Product over the parts of lambda of the part-indexed coefficients of s.
// This is the coefficient of m_lambda in prod_i s(x_i) when s has constant
// term one, which is how a one-variable series defines a multiplicative class.
template <class R>
R coeff_profile(const TruncSeries<R>& s, const symfunc::Partition& lambda) {
    if (lambda.weight() > s.order())
        throw std::out_of_range("coeff_profile: partition weight exceeds series order");
    R out = ring_traits<R>::one();
    for (int a : lambda.parts()) out = out * s.coeff(a);
    return out;
}

// ---- named rational series, all expanded from factorials --------------------

// e^{a x}
inline TruncSeries<Rational> exp_series(const Rational& a, int N) {
    TruncSeries<Rational> s(N);
    Rational c = 1;
    for (int k = 0; k <= N; ++k) {
        s.set_coeff(k, c);
        c = c * a / (k + 1);
    }
    return s;
}

// (1 - e^{-x}) / x
inline TruncSeries<Rational> todd_reciprocal_series(int N) {
    TruncSeries<Rational> s(N);
    for (int k = 0; k <= N; ++k) s.set_coeff(k, Rational(k % 2 ? -1 : 1) / factorial(k + 1));
    return s;
}

// x / (1 - e^{-x}), built by inverting the exactly expanded reciprocal.
inline TruncSeries<Rational> todd_series(int N) { return todd_reciprocal_series(N).inverse(); }

// tanh(x)/x
inline TruncSeries<Rational> signature_series(int N) {
    auto e2 = exp_series(2, N + 1);
    auto tanh = (e2 - TruncSeries<Rational>::one(N + 1)) * (e2 + TruncSeries<Rational>::one(N + 1)).inverse();
    return tanh.shift_down(1);
}

// sinh(x/2)/(x/2): normal characteristic series of the A-hat genus.
inline TruncSeries<Rational> ahat_series(int N) {
    auto s = (exp_series(Rational(1, 2), N + 1) - exp_series(Rational(-1, 2), N + 1)).scale(Rational(1, 2));
    return s.shift_down(1).scale(2);
}

// (e^{2x} - e^{-2x})/(4x) = sinh(2x)/(2x); its genus on a class of complex
// dimension 2n equals 2^{4n} times the A-hat genus.
inline TruncSeries<Rational> ahat_scaled_series(int N) {
    auto s = (exp_series(2, N + 1) - exp_series(-2, N + 1)).scale(Rational(1, 4));
    return s.shift_down(1);
}

// 1/(1+x): normal series of the Euler characteristic (tangent series 1+x).
inline TruncSeries<Rational> euler_series(int N) {
    TruncSeries<Rational> s(N);
    s.set_coeff(0, 1);
    if (N >= 1) s.set_coeff(1, 1);
    return s.inverse();
}

// Q(x) = x (1 + y e^{-x(1+y)}) / (1 - e^{-x(1+y)}) over Q[y].
// Both numerator and denominator carry an exact factor x(1+y):
//   x (1 + y e^{-x(1+y)})  = x(1+y) * A(x),  A_k = (-1)^k y (1+y)^{k-1}/k!;
//   1 - e^{-x(1+y)}        = x(1+y) * B(x),  B_k = (-1)^k (1+y)^k/(k+1)!;
// so Q = A * B^{-1} with unit constant terms, and no division by (1+y) is
// ever needed in Q[y].
inline TruncSeries<Poly> chi_y_series(int N) {
    Poly y = Poly::variable();
    Poly onep = Poly(1) + y;
    TruncSeries<Poly> A(N), B(N);
    A.set_coeff(0, Poly(1));
    Poly pk = Poly(1);  // (1+y)^{k-1} for k>=1
    Rational fact = 1;
    for (int k = 1; k <= N; ++k) {
        fact *= k;
        A.set_coeff(k, (y * pk).scale(Rational(k % 2 ? -1 : 1) / fact));
        pk = pk * onep;
    }
    Poly qk = Poly(1);  // (1+y)^k
    for (int k = 0; k <= N; ++k) {
        B.set_coeff(k, qk.scale(Rational(k % 2 ? -1 : 1) / factorial(k + 1)));
        qk = qk * onep;
    }
    return A * B.inverse();
}

// ---- the bigraded T-series ---------------------------------------------------

using symfunc::BigradedElement;
using BSeries = TruncSeries<BigradedElement>;

// T_2(x) = sum_a h_a(y) x^a  (h_0 = 1).
inline BSeries t2_series(int N) {
    BSeries s(N);
    s.set_coeff(0, BigradedElement::one());
    for (int a = 1; a <= N; ++a) s.set_coeff(a, BigradedElement::term(symfunc::Partition({a}), {}, 1));
    return s;
}

// T_1(x) = sum_m h_m(z) w^m with w = x T_2(x): substituting w into the
// one-variable identity prod_k (1 - z_k t)^{-1} = sum_m h_m(z) t^m.
inline BSeries t1_series(int N) {
    BSeries hz(N);
    hz.set_coeff(0, BigradedElement::one());
    for (int m = 1; m <= N; ++m) hz.set_coeff(m, BigradedElement::term({}, symfunc::Partition({m}), 1));
    BSeries w = t2_series(N).shift_up(1);
    return hz.compose(w);
}

// Per-root factor of the Todd class of the transformation: T_1(x) * T_2(x).
inline BSeries t_tau_series(int N) { return t1_series(N) * t2_series(N); }

// 1 - e^{-x}, lifted.
inline TruncSeries<Rational> one_minus_exp_neg_series(int N) {
    return TruncSeries<Rational>::one(N) - exp_series(-1, N);
}

// T_A per-root factor: T_1 composed with 1 - e^{-x}.
inline BSeries ta_series(int N) {
    return t1_series(N).compose(lift<BigradedElement>(one_minus_exp_neg_series(N)));
}

// T_B per-root factor: ((1-e^{-x})/x) * T_2(1 - e^{-x}).
inline BSeries tb_series(int N) {
    auto g = lift<BigradedElement>(one_minus_exp_neg_series(N));
    auto gx = lift<BigradedElement>(todd_reciprocal_series(N));
    return gx * t2_series(N).compose(g);
}

}  // namespace chernum::pseries
