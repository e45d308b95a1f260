#pragma once

#include "chernum/cobord.hpp"
#include "chernum/pseries.hpp"
#include "chernum/symfunc.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace chernum::geom {

using cobord::CobordClass;
using cobord::GradedClass;
using symfunc::Partition;

// Product of complex projective spaces CP^{n_1} x ... x CP^{n_r}. The empty
// product is the point.
struct ProjProduct {
    std::vector<int> dims;

    ProjProduct() = default;
    explicit ProjProduct(std::vector<int> d) : dims(std::move(d)) {
        for (int n : dims)
            if (n < 0) throw std::invalid_argument("ProjProduct: negative factor dimension");
    }

    int total_dim() const {
        int n = 0;
        for (int d : dims) n += d;
        return n;
    }
    int factors() const { return static_cast<int>(dims.size()); }

    std::string to_string() const {
        if (dims.empty()) return "pt";
        std::string s;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (i) s += "*";
            s += "CP(" + std::to_string(dims[i]) + ")";
        }
        return s;
    }
};

// Element of the truncated cohomology (or cobordism) ring of the model:
// polynomial in the hyperplane classes with x_i^{n_i+1} = 0, coefficients in
// an exact ring R.
template <class R>
class CohoPoly {
    using T = ring_traits<R>;

  public:
    explicit CohoPoly(std::vector<int> caps) : caps_(std::move(caps)) {}

    static CohoPoly one(const std::vector<int>& caps) {
        CohoPoly p(caps);
        p.add_term(std::vector<int>(caps.size(), 0), T::one());
        return p;
    }
    static CohoPoly generator(const std::vector<int>& caps, int i) {
        CohoPoly p(caps);
        std::vector<int> e(caps.size(), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add_term(e, T::one());
        return p;
    }

    const std::vector<int>& caps() const { return caps_; }
    const std::map<std::vector<int>, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& e, const R& c) {
        if (T::is_zero(c)) return;
        for (std::size_t i = 0; i < caps_.size(); ++i)
            if (e[i] > caps_[i]) return;  // ring relation x_i^{n_i+1} = 0
        auto [it, ins] = terms_.try_emplace(e, c);
        if (!ins) {
            it->second = it->second + c;
            if (T::is_zero(it->second)) terms_.erase(it);
        }
    }

    R coeff(const std::vector<int>& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? T::zero() : it->second;
    }

    CohoPoly operator+(const CohoPoly& o) const {
        CohoPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    CohoPoly operator-(const CohoPoly& o) const { return *this + o.scale(-1); }
    CohoPoly operator*(const CohoPoly& o) const {
        CohoPoly r(caps_);
        std::vector<int> e(caps_.size());
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                bool dead = false;
                for (std::size_t i = 0; i < caps_.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] > caps_[i]) {
                        dead = true;
                        break;
                    }
                }
                if (!dead) r.add_term(e, ca * cb);
            }
        return r;
    }
    CohoPoly scale(const Rational& q) const {
        CohoPoly r(caps_);
        if (q == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = T::scale(c, q);
        return r;
    }
    CohoPoly scale_ring(const R& c) const {
        CohoPoly r(caps_);
        for (const auto& [e, v] : terms_) r.add_term(e, v * c);
        return r;
    }
    CohoPoly pow(int k) const {
        CohoPoly r = one(caps_), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }
    bool operator==(const CohoPoly& o) const { return caps_ == o.caps_ && terms_ == o.terms_; }

    // Multiplicative inverse when the constant term is a unit; geometric
    // series in the nilpotent part.
    CohoPoly inverse() const {
        std::vector<int> z(caps_.size(), 0);
        auto c0inv = T::invert(coeff(z));
        if (!c0inv) throw std::domain_error("CohoPoly::inverse: constant term not invertible");
        CohoPoly delta = *this;
        delta.add_term(z, T::scale(coeff(z), -1));
        int n = 0;
        for (int c : caps_) n += c;
        CohoPoly r = one(caps_), term = one(caps_);
        CohoPoly step = delta.scale_ring(*c0inv).scale(-1);
        for (int k = 0; k < n; ++k) {
            term = term * step;
            if (term.is_zero()) break;
            r = r + term;
        }
        return r.scale_ring(*c0inv);
    }

  private:
    std::vector<int> caps_;
    std::map<std::vector<int>, R> terms_;
};

// Series substituted at a nilpotent argument.
template <class R>
CohoPoly<R> substitute(const pseries::TruncSeries<R>& s, const CohoPoly<R>& x) {
    CohoPoly<R> out(x.caps());
    out.add_term(std::vector<int>(x.caps().size(), 0), s.coeff(0));
    CohoPoly<R> p = CohoPoly<R>::one(x.caps());
    for (int k = 1; k <= s.order(); ++k) {
        p = p * x;
        if (p.is_zero()) break;
        out = out + p.scale_ring(s.coeff(k));
    }
    return out;
}

// Kronecker pairing: the coefficient of the top monomial; classes off top
// degree pair to zero.
template <class R>
R pair(const ProjProduct& m, const CohoPoly<R>& p) {
    return p.coeff(m.dims);
}

// ---- bundles -----------------------------------------------------------------

// Stably almost complex bundles over a model, described by line roots and the
// virtual tangent/normal summands. Cobordism-level operations only admit line
// roots pulled back from a single factor with degree +-1 (std/conj) or 0;
// cohomology-level operations accept any integer degree vector.
struct Bundle {
    struct Line {
        std::vector<int> deg;
    };
    struct Tau {
        bool conj = false;
    };
    struct Nu {
        bool conj = false;
    };
    using Part = std::variant<Line, Tau, Nu>;

    std::vector<Part> parts;

    static Bundle zero() { return {}; }
    static Bundle tau() { return Bundle{{Tau{}}}; }
    static Bundle nu() { return Bundle{{Nu{}}}; }
    static Bundle line(std::vector<int> deg) { return Bundle{{Line{std::move(deg)}}}; }

    Bundle operator+(const Bundle& o) const {
        Bundle r = *this;
        r.parts.insert(r.parts.end(), o.parts.begin(), o.parts.end());
        return r;
    }

    Bundle conjugate() const {
        Bundle r;
        for (const auto& p : parts) {
            if (std::holds_alternative<Line>(p)) {
                Line l = std::get<Line>(p);
                for (int& d : l.deg) d = -d;
                r.parts.emplace_back(std::move(l));
            } else if (std::holds_alternative<Tau>(p)) {
                Tau t = std::get<Tau>(p);
                t.conj = !t.conj;
                r.parts.emplace_back(t);
            } else {
                Nu n = std::get<Nu>(p);
                n.conj = !n.conj;
                r.parts.emplace_back(n);
            }
        }
        return r;
    }

    std::string to_string() const {
        if (parts.empty()) return "0";
        std::string s;
        for (const auto& p : parts) {
            if (!s.empty()) s += "+";
            if (std::holds_alternative<Line>(p)) {
                const auto& l = std::get<Line>(p);
                s += "O(";
                for (std::size_t i = 0; i < l.deg.size(); ++i) {
                    if (i) s += ",";
                    s += std::to_string(l.deg[i]);
                }
                s += ")";
            } else if (std::holds_alternative<Tau>(p)) {
                s += std::get<Tau>(p).conj ? "conj(tau)" : "tau";
            } else {
                s += std::get<Nu>(p).conj ? "conj(nu)" : "nu";
            }
        }
        return s;
    }
};

namespace detail {

inline void check_factor_count(const ProjProduct& m, const Bundle::Line& l) {
    if (static_cast<int>(l.deg.size()) != m.factors())
        throw std::invalid_argument("bundle degree vector does not match the number of factors");
}

// Cobordism first Chern class of a representable line bundle, or nothing for
// the trivial one.
inline std::optional<CohoPoly<GradedClass>> cobordism_line_root(const ProjProduct& m, const Bundle::Line& l) {
    check_factor_count(m, l);
    int idx = -1, deg = 0;
    for (std::size_t i = 0; i < l.deg.size(); ++i) {
        if (l.deg[i] != 0) {
            if (idx >= 0) throw std::domain_error("bundle not cobordism-representable: " + Bundle::line(l.deg).to_string());
            idx = static_cast<int>(i);
            deg = l.deg[i];
        }
    }
    if (idx < 0) return std::nullopt;
    if (deg != 1 && deg != -1)
        throw std::domain_error("bundle not cobordism-representable: " + Bundle::line(l.deg).to_string());
    auto u = CohoPoly<GradedClass>::generator(m.dims, idx);
    if (deg == 1) return u;
    int order = std::max(m.total_dim(), 1);
    return substitute(cobord::fgl_inverse(order), u);
}

inline CohoPoly<GradedClass> cobordism_total_chern_tau(const ProjProduct& m, bool conj) {
    auto total = CohoPoly<GradedClass>::one(m.dims);
    int order = std::max(m.total_dim(), 1);
    for (int i = 0; i < m.factors(); ++i) {
        auto u = CohoPoly<GradedClass>::generator(m.dims, i);
        if (conj) u = substitute(cobord::fgl_inverse(order), u);
        total = total * (CohoPoly<GradedClass>::one(m.dims) + u).pow(m.dims[static_cast<std::size_t>(i)] + 1);
    }
    return total;
}

}  // namespace detail

// Total Chern class of a bundle in the cobordism ring of the model, computed
// from the line roots (std(i) -> u_i, conj(i) -> iota(u_i)) and, for the
// virtual tangent/normal parts, from prod_i (1+u_i)^{+-(n_i+1)}.
inline CohoPoly<GradedClass> cobordism_total_chern(const ProjProduct& m, const Bundle& b) {
    auto total = CohoPoly<GradedClass>::one(m.dims);
    for (const auto& p : b.parts) {
        if (std::holds_alternative<Bundle::Line>(p)) {
            auto root = detail::cobordism_line_root(m, std::get<Bundle::Line>(p));
            if (root) total = total * (CohoPoly<GradedClass>::one(m.dims) + *root);
        } else if (std::holds_alternative<Bundle::Tau>(p)) {
            total = total * detail::cobordism_total_chern_tau(m, std::get<Bundle::Tau>(p).conj);
        } else {
            total = total * detail::cobordism_total_chern_tau(m, std::get<Bundle::Nu>(p).conj).inverse();
        }
    }
    return total;
}

// Homogeneous part of cohomological degree k: a monomial u^a with a
// coefficient of complex dimension d sits in degree |a| - d.
inline CohoPoly<GradedClass> chern_component(const CohoPoly<GradedClass>& p, int k) {
    CohoPoly<GradedClass> out(p.caps());
    for (const auto& [e, c] : p.terms()) {
        int deg = 0;
        for (int v : e) deg += v;
        GradedClass keep;
        for (const auto& [d, comp] : c.components())
            if (deg - d == k) keep = keep + GradedClass(comp);
        if (!keep.is_zero()) out.add_term(e, keep);
    }
    return out;
}

// f evaluated on the Chern classes of a bundle: convert f to the e basis and
// substitute e_k := c_k. Coefficients are graded cobordism classes.
inline CohoPoly<GradedClass> cobordism_chern_poly(const ProjProduct& m, const Bundle& b, const symfunc::SymFn& f) {
    auto total = cobordism_total_chern(m, b);
    int n = m.total_dim();
    std::vector<CohoPoly<GradedClass>> comps;
    comps.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) comps.push_back(chern_component(total, k));
    auto out = CohoPoly<GradedClass>(m.dims);
    symfunc::SymFn fe = f.to_basis(symfunc::Basis::e);
    for (const auto& [lam, c] : fe.coeffs()) {
        if (lam.weight() > n) continue;
        auto term = CohoPoly<GradedClass>::one(m.dims);
        for (int a : lam.parts()) term = term * comps[static_cast<std::size_t>(a)];
        out = out + term.scale(c);
    }
    return out;
}

// Cobordism class of the virtual submanifold dual to a polynomial in the
// u_i: the monomial prod u_i^{a_i} is dual to prod CP^{n_i - a_i}, extended
// linearly over graded-class coefficients.
inline GradedClass dual_class(const ProjProduct& m, const CohoPoly<GradedClass>& p) {
    GradedClass out;
    for (const auto& [e, c] : p.terms()) {
        GradedClass prod = GradedClass::scalar(1);
        for (std::size_t i = 0; i < e.size(); ++i)
            prod = prod * GradedClass(cobord::cp(m.dims[i] - e[i]));
        out = out + c * prod;
    }
    return out;
}

// Dual of the cobordism Chern class m_lambda(eta).
inline GradedClass chern_submanifold(const ProjProduct& m, const Partition& lam, const Bundle& b) {
    if (lam.empty()) {
        GradedClass full = GradedClass::scalar(1);
        for (int d : m.dims) full = full * GradedClass(cobord::cp(d));
        return full;
    }
    return dual_class(m, cobordism_chern_poly(m, b, symfunc::SymFn::element(symfunc::Basis::m, lam)));
}

// Dual of (-1)^k c_{2k}(tau + conj(tau)): the tangent Pontrjagin submanifold.
inline GradedClass pontryagin_submanifold(const ProjProduct& m, int k) {
    if (4 * k > 2 * m.total_dim()) throw std::invalid_argument("pontryagin_submanifold: 4k exceeds dimension");
    if (k == 0) return chern_submanifold(m, {}, Bundle::tau());
    auto total = cobordism_total_chern(m, Bundle::tau() + Bundle::tau().conjugate());
    auto c2k = chern_component(total, 2 * k);
    return dual_class(m, c2k.scale(k % 2 ? -1 : 1));
}

// ---- characteristic numbers of the model --------------------------------------

namespace detail {

inline CohoPoly<Rational> rational_total_chern_tau(const ProjProduct& m) {
    auto total = CohoPoly<Rational>::one(m.dims);
    for (int i = 0; i < m.factors(); ++i) {
        auto x = CohoPoly<Rational>::generator(m.dims, i);
        total = total * (CohoPoly<Rational>::one(m.dims) + x).pow(m.dims[static_cast<std::size_t>(i)] + 1);
    }
    return total;
}

inline std::vector<CohoPoly<Rational>> graded_parts(const CohoPoly<Rational>& p, int n) {
    std::vector<CohoPoly<Rational>> out(static_cast<std::size_t>(n) + 1, CohoPoly<Rational>(p.caps()));
    for (const auto& [e, c] : p.terms()) {
        int deg = 0;
        for (int v : e) deg += v;
        if (deg <= n) out[static_cast<std::size_t>(deg)].add_term(e, c);
    }
    return out;
}

inline std::map<Partition, Rational> numbers_from_components(const ProjProduct& m,
                                                             const std::vector<CohoPoly<Rational>>& comps) {
    int n = m.total_dim();
    std::map<Partition, Rational> out;
    for (const auto& lam : symfunc::partitions_of(n)) {
        Rational acc = 0;
        for (const auto& [mu, c] : symfunc::expand_in(symfunc::Basis::m, lam, symfunc::Basis::e)) {
            auto term = CohoPoly<Rational>::one(m.dims);
            for (int a : mu.parts()) term = term * comps[static_cast<std::size_t>(a)];
            acc += c * pair(m, term);
        }
        if (acc != 0) out[lam] = acc;
    }
    return out;
}

}  // namespace detail

// Tangent route: m_lambda evaluated on the tangent root multiset, via the
// elementary symmetric functions read off prod (1+x_i)^{n_i+1}.
inline std::map<Partition, Rational> tangent_number_map(const ProjProduct& m) {
    return detail::numbers_from_components(
        m, detail::graded_parts(detail::rational_total_chern_tau(m), m.total_dim()));
}

// Normal route: the same with e_k := c_k(nu) read off prod (1+x_i)^{-(n_i+1)}.
inline std::map<Partition, Rational> normal_number_map(const ProjProduct& m) {
    return detail::numbers_from_components(
        m, detail::graded_parts(detail::rational_total_chern_tau(m).inverse(), m.total_dim()));
}

inline CobordClass tangent_numbers(const ProjProduct& m) {
    return CobordClass::from_tangent(m.total_dim(), tangent_number_map(m));
}
inline CobordClass normal_numbers(const ProjProduct& m) {
    return CobordClass::from_normal(m.total_dim(), normal_number_map(m));
}

// <c_n(tau), [M]> = prod (n_i + 1).
inline Int euler_char(const ProjProduct& m) {
    auto comps = detail::graded_parts(detail::rational_total_chern_tau(m), m.total_dim());
    Rational v = pair(m, comps[static_cast<std::size_t>(m.total_dim())]);
    if (!is_integer(v)) throw std::logic_error("euler_char: non-integer pairing");
    return numerator(v);
}

// Multiplicative class at cohomology level: prod over roots of s(root), with
// the virtual tau/nu parts contributing prod_i s(x_i)^{+-(n_i+1)} (inverse
// series for negative summands). Line roots may carry any integer degrees.
template <class R>
CohoPoly<R> multiplicative_class(const ProjProduct& m, const Bundle& b, const pseries::TruncSeries<R>& s) {
    auto out = CohoPoly<R>::one(m.dims);
    auto sinv = s.inverse();
    for (const auto& p : b.parts) {
        if (std::holds_alternative<Bundle::Line>(p)) {
            const auto& l = std::get<Bundle::Line>(p);
            detail::check_factor_count(m, l);
            CohoPoly<R> root(m.dims);
            for (std::size_t i = 0; i < l.deg.size(); ++i) {
                std::vector<int> e(l.deg.size(), 0);
                e[i] = 1;
                root.add_term(e, ring_traits<R>::from_rational(l.deg[i]));
            }
            out = out * substitute(s, root);
        } else {
            bool is_nu = std::holds_alternative<Bundle::Nu>(p);
            bool conj = is_nu ? std::get<Bundle::Nu>(p).conj : std::get<Bundle::Tau>(p).conj;
            const auto& factor_series = is_nu ? sinv : s;
            for (int i = 0; i < m.factors(); ++i) {
                CohoPoly<R> x(m.dims);
                std::vector<int> e(m.dims.size(), 0);
                e[static_cast<std::size_t>(i)] = 1;
                x.add_term(e, ring_traits<R>::from_rational(conj ? -1 : 1));
                out = out * substitute(factor_series, x).pow(m.dims[static_cast<std::size_t>(i)] + 1);
            }
        }
    }
    return out;
}

}  // namespace chernum::geom
