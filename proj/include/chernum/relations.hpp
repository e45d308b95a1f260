#pragma once

#include "chernum/cobord.hpp"
#include "chernum/geommodel.hpp"
#include "chernum/polyring.hpp"
#include "chernum/pseries.hpp"
#include "chernum/symfunc.hpp"

#include <bit>
#include <chrono>
#include <cstdint>
#include <string>
#include <variant>

namespace chernum::relations {

using cobord::CobordClass;
using cobord::GradedClass;
using geom::Bundle;
using geom::ProjProduct;
using pseries::TruncSeries;
using symfunc::BigradedElement;
using symfunc::Partition;

// Both sides of every relation land in one of these value spaces.
using Value = std::variant<Rational, Poly, BigradedElement>;

inline std::string value_to_string(const Value& v) {
    if (std::holds_alternative<Rational>(v)) return chernum::to_string(std::get<Rational>(v));
    if (std::holds_alternative<Poly>(v)) return std::get<Poly>(v).to_string();
    return std::get<BigradedElement>(v).to_string();
}
inline bool value_equal(const Value& a, const Value& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<Rational>(a)) return std::get<Rational>(a) == std::get<Rational>(b);
    if (std::holds_alternative<Poly>(a)) return std::get<Poly>(a) == std::get<Poly>(b);
    return std::get<BigradedElement>(a) == std::get<BigradedElement>(b);
}

// Outcome of checking one relation instance; `equal` means lhs - rhs is
// identically zero, compared exactly.
struct VerificationReport {
    std::string relation;
    std::string manifold;
    std::string bundle;
    Value lhs = Rational(0);
    Value rhs = Rational(0);
    bool equal = false;
    int degrees = 0;
    std::int64_t millis = 0;

    bool operator==(const VerificationReport& o) const {
        return relation == o.relation && manifold == o.manifold && bundle == o.bundle &&
               value_equal(lhs, o.lhs) && value_equal(rhs, o.rhs) && equal == o.equal &&
               degrees == o.degrees && millis == o.millis;
    }
};

namespace detail {

class Stopwatch {
  public:
    std::int64_t millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline BigradedElement embed_y(const symfunc::SymFn& f) {
    BigradedElement out;
    symfunc::SymFn h = f.to_basis(symfunc::Basis::h);
    for (const auto& [lam, c] : h.coeffs()) out.add_term(lam, {}, c);
    return out;
}

}  // namespace detail

// ---- the master relation -------------------------------------------------------

// <T_tau(nu(M)), [M]> computed from the class alone: the genus against the
// per-root factor T_1(x) T_2(x). Depends only on the Chern-number vector.
inline BigradedElement master_relation_lhs(const CobordClass& c) {
    return cobord::genus(c, pseries::t_tau_series(c.dim()));
}

// S*_(y)(M) + sum_{|lambda|>0} h_lambda(z) S*_(y)([m_lambda(nu(M))]), with
// every dual taken from the geometric model.
inline BigradedElement master_relation_rhs(const ProjProduct& m) {
    int n = m.total_dim();
    BigradedElement out = detail::embed_y(cobord::s_star_y(geom::normal_numbers(m)));
    for (int w = 1; w <= n; ++w)
        for (const auto& lam : symfunc::partitions_of(w)) {
            auto star = cobord::s_star_y(geom::chern_submanifold(m, lam, Bundle::nu()));
            for (const auto& [mu, c] : star.coeffs()) out.add_term(mu, lam, c);
        }
    return out;
}

inline VerificationReport master_relation(const ProjProduct& m) {
    detail::Stopwatch sw;
    VerificationReport r;
    r.relation = "thm3";
    r.manifold = m.to_string();
    r.degrees = m.total_dim();
    BigradedElement lhs = master_relation_lhs(geom::normal_numbers(m));
    BigradedElement rhs = master_relation_rhs(m);
    r.lhs = lhs;
    r.rhs = rhs;
    r.equal = lhs == rhs;
    r.millis = sw.millis();
    return r;
}

// ---- the chi_y relation ----------------------------------------------------------

// (1+y)^n T(M) = chi_y(M) + sum_k y^k chi_y([c_k(tau(M))]), in Q[y].
inline VerificationReport chi_y_relation(const ProjProduct& m) {
    detail::Stopwatch sw;
    int n = m.total_dim();
    VerificationReport r;
    r.relation = "thm4.1";
    r.manifold = m.to_string();
    r.degrees = n;
    auto cls = geom::normal_numbers(m);
    Rational todd = cobord::genus(cls, pseries::todd_reciprocal_series(n));
    Poly lhs = (Poly(1) + Poly::variable()).pow(n).scale(todd);
    auto chi_y_normal = pseries::chi_y_series(n).inverse();
    Poly rhs = cobord::genus(cls, chi_y_normal);
    Poly yk(1);
    for (int k = 1; k <= n; ++k) {
        yk = yk * Poly::variable();
        auto sub = geom::chern_submanifold(m, Partition(std::vector<int>(static_cast<std::size_t>(k), 1)),
                                           Bundle::tau());
        rhs = rhs + yk * cobord::genus(sub, chi_y_normal);
    }
    r.lhs = lhs;
    r.rhs = rhs;
    r.equal = lhs == rhs;
    r.millis = sw.millis();
    return r;
}

// ---- the signature relation -----------------------------------------------------

// 2^{4n} Ahat(M^{4n}) = sigma(M) + sum_k (-1)^k sigma([P_k(tau M)]).
inline VerificationReport signature_relation(const ProjProduct& m) {
    int n = m.total_dim();
    if (n % 2 != 0) throw std::invalid_argument("signature_relation: dimension not divisible by 4");
    detail::Stopwatch sw;
    VerificationReport r;
    r.relation = "thm4.2";
    r.manifold = m.to_string();
    r.degrees = n;
    auto cls = geom::normal_numbers(m);
    int order = std::max(n, 1);
    Rational lhs = cobord::genus(cls, pseries::ahat_scaled_series(order));
    auto sig = pseries::signature_series(order);
    Rational rhs = cobord::genus(cls, sig);
    for (int k = 1; 2 * k <= n; ++k) {
        Rational s = cobord::genus(geom::pontryagin_submanifold(m, k), sig);
        rhs += (k % 2 ? -s : s);
    }
    r.lhs = lhs;
    r.rhs = rhs;
    r.equal = lhs == rhs;
    r.millis = sw.millis();
    return r;
}

// sigma(M) + sum_k (-1)^k sigma([P_k]) vanishes mod 2^{alpha(n)}, where
// alpha(n) counts the ones in the binary expansion of n (real dimension 4n).
inline VerificationReport signature_congruence(const ProjProduct& m) {
    int nc = m.total_dim();
    if (nc % 2 != 0) throw std::invalid_argument("signature_congruence: dimension not divisible by 4");
    detail::Stopwatch sw;
    int n = nc / 2;
    int alpha = std::popcount(static_cast<unsigned>(n));
    VerificationReport r;
    r.relation = "bv";
    r.manifold = m.to_string();
    r.degrees = nc;
    auto cls = geom::normal_numbers(m);
    int order = std::max(nc, 1);
    auto sig = pseries::signature_series(order);
    Rational v = cobord::genus(cls, sig);
    for (int k = 1; 2 * k <= nc; ++k) {
        Rational s = cobord::genus(geom::pontryagin_submanifold(m, k), sig);
        v += (k % 2 ? -s : s);
    }
    bool integral = is_integer(v);
    Int residue = 0;
    if (integral && alpha > 0) {
        Int modulus = Int(1) << alpha;
        residue = numerator(v) % modulus;
        if (residue < 0) residue += modulus;
    }
    r.lhs = Rational(residue);
    r.rhs = Rational(0);
    r.equal = integral && residue == 0;
    r.millis = sw.millis();
    return r;
}

// ---- the general bundle relation --------------------------------------------------

// <T_1(eta) T_2(nu), [M]>.
inline BigradedElement chern_pairing_lhs(const ProjProduct& m, const Bundle& b) {
    int n = std::max(m.total_dim(), 1);
    auto lhs_poly = geom::multiplicative_class(m, b, pseries::t1_series(n)) *
                    geom::multiplicative_class(m, Bundle::nu(), pseries::t2_series(n));
    return geom::pair(m, lhs_poly);
}

// S*_(y)(M) + sum_lambda h_lambda(z) S*_(y)([m_lambda(eta)]).
inline BigradedElement chern_pairing_rhs(const ProjProduct& m, const Bundle& b) {
    int n = m.total_dim();
    BigradedElement out = detail::embed_y(cobord::s_star_y(geom::normal_numbers(m)));
    for (int w = 1; w <= n; ++w)
        for (const auto& lam : symfunc::partitions_of(w)) {
            auto star = cobord::s_star_y(geom::chern_submanifold(m, lam, b));
            for (const auto& [mu, c] : star.coeffs()) out.add_term(mu, lam, c);
        }
    return out;
}

inline VerificationReport general_chern_relation(const ProjProduct& m, const Bundle& b) {
    detail::Stopwatch sw;
    VerificationReport r;
    r.relation = "thm5.1";
    r.manifold = m.to_string();
    r.bundle = b.to_string();
    r.degrees = m.total_dim();
    BigradedElement lhs = chern_pairing_lhs(m, b);
    BigradedElement rhs = chern_pairing_rhs(m, b);
    r.lhs = lhs;
    r.rhs = rhs;
    r.equal = lhs == rhs;
    r.millis = sw.millis();
    return r;
}

// ---- integrality of the twisted pairing ---------------------------------------------

// <T_A(eta) T_B(nu), [M]>; every coefficient must be an integer.
inline BigradedElement twisted_todd_pairing(const ProjProduct& m, const Bundle& b) {
    int n = std::max(m.total_dim(), 1);
    auto p = geom::multiplicative_class(m, b, pseries::ta_series(n)) *
             geom::multiplicative_class(m, Bundle::nu(), pseries::tb_series(n));
    return geom::pair(m, p);
}

inline VerificationReport integrality_relation(const ProjProduct& m, const Bundle& b) {
    detail::Stopwatch sw;
    VerificationReport r;
    r.relation = "cor-as";
    r.manifold = m.to_string();
    r.bundle = b.to_string();
    r.degrees = m.total_dim();
    BigradedElement v = twisted_todd_pairing(m, b);
    // the integral projection agrees with the value exactly when every
    // coefficient is an integer
    BigradedElement proj;
    for (const auto& [k, c] : v.coeffs()) proj.add_term(k.first, k.second, Rational(rational_floor(c)));
    r.lhs = v;
    r.rhs = proj;
    r.equal = v == proj;
    r.millis = sw.millis();
    return r;
}

// ---- the line-subbundle Euler relation -----------------------------------------------

// For a model with a CP^1 factor, the tangent line subbundle pulled back from
// that factor. The pairing polynomial
//   < x/(1-e^{-x}) * prod_i [ x_i (1 - z(1-e^{-x_i})) / (1-e^{-x_i}) ], [M] >
// (x the line's first Chern class, x_i the remaining tangent roots) has
// integer coefficients; its z^{n-1} coefficient, normalized by (-1)^{n-1},
// equals chi(M)/2.
inline VerificationReport line_factor_euler_relation(const ProjProduct& m, int factor) {
    if (factor < 0 || factor >= m.factors() || m.dims[static_cast<std::size_t>(factor)] != 1)
        throw std::invalid_argument("line_factor_euler_relation: chosen factor is not a CP(1)");
    detail::Stopwatch sw;
    int n = m.total_dim();
    VerificationReport r;
    r.relation = "euler-even";
    r.manifold = m.to_string();
    r.bundle = "tau(CP(1) factor " + std::to_string(factor) + ")";
    r.degrees = n;
    auto todd_poly = pseries::lift<Poly>(pseries::todd_series(n));            // x/(1-e^{-x})
    auto g_poly = pseries::lift<Poly>(pseries::one_minus_exp_neg_series(n));  // 1-e^{-x}
    Poly z = Poly::variable();
    // line root 2 x_factor
    geom::CohoPoly<Poly> root(m.dims);
    {
        std::vector<int> e(m.dims.size(), 0);
        e[static_cast<std::size_t>(factor)] = 1;
        root.add_term(e, Poly(2));
    }
    auto p = geom::substitute(todd_poly, root);
    for (int i = 0; i < m.factors(); ++i) {
        if (i == factor) continue;
        auto xi = geom::CohoPoly<Poly>::generator(m.dims, i);
        auto f = geom::substitute(todd_poly, xi) *
                 (geom::CohoPoly<Poly>::one(m.dims) - geom::substitute(g_poly, xi).scale_ring(z));
        p = p * f.pow(m.dims[static_cast<std::size_t>(i)] + 1);
    }
    Poly paired = geom::pair(m, p);
    Rational raw = paired.coeff(n - 1);
    Rational value = (n % 2 ? raw : -raw);  // (-1)^{n-1} normalization
    Int chi = geom::euler_char(m);
    r.lhs = value;
    r.rhs = Rational(chi) / 2;
    r.equal = value == Rational(chi) / 2 && is_integer(value);
    r.millis = sw.millis();
    return r;
}

// ---- specialization of a bigraded identity --------------------------------------------

// The ring homomorphism h_a(y) -> y_images[a], h_a(z) -> z_images[a] applied
// to an identity in the h (x) h basis; the h's are free generators, so any
// assignment is a valid ring map.
template <class R>
R specialize_slots(const BigradedElement& rel, const std::vector<R>& y_images, const std::vector<R>& z_images) {
    using T = ring_traits<R>;
    R acc = T::zero();
    for (const auto& [k, c] : rel.coeffs()) {
        R term = T::one();
        for (int a : k.first.parts()) {
            if (a >= static_cast<int>(y_images.size()))
                throw std::invalid_argument("specialize_slots: insufficient y values for h_" + std::to_string(a));
            term = term * y_images[static_cast<std::size_t>(a)];
        }
        for (int a : k.second.parts()) {
            if (a >= static_cast<int>(z_images.size()))
                throw std::invalid_argument("specialize_slots: insufficient z values for h_" + std::to_string(a));
            term = term * z_images[static_cast<std::size_t>(a)];
        }
        acc = acc + T::scale(term, c);
    }
    return acc;
}

// Applies h_a(y) -> y_values[a] on the y slot and the finite-variable
// specialization z_1 = v_1, ..., z_r = v_r (rest zero) on the z slot, where
// h_a(z) becomes the t^a coefficient of prod_i (1 - v_i t)^{-1}.
template <class R>
R specialize_relation(const BigradedElement& rel, const std::vector<R>& y_values, const std::vector<R>& z_values) {
    using T = ring_traits<R>;
    int zmax = 0;
    for (const auto& [k, c] : rel.coeffs()) zmax = std::max(zmax, k.second.weight());
    TruncSeries<R> hz = TruncSeries<R>::one(zmax);
    for (const auto& v : z_values) {
        TruncSeries<R> geomseries(zmax);
        R p = T::one();
        for (int k = 0; k <= zmax; ++k) {
            geomseries.set_coeff(k, p);
            p = p * v;
        }
        hz = hz * geomseries;
    }
    return specialize_slots(rel, y_values, hz.coeffs());
}

}  // namespace chernum::relations
