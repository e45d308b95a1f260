#pragma once

#include "chernum/linalg.hpp"
#include "chernum/partition.hpp"
#include "chernum/pseries.hpp"
#include "chernum/rational.hpp"
#include "chernum/symfunc.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace chernum::cobord {

using symfunc::Partition;

namespace detail {

// m_lambda(nu)[M] = sum_mu S[lambda][mu] m_mu(tau)[M]: the antipode matrix in
// the m basis converts tangent Chern numbers to normal ones and back (it is
// an involution in every degree).
inline std::map<Partition, Rational> apply_antipode_m(const std::map<Partition, Rational>& in, int n) {
    auto parts = symfunc::partitions_of(n);
    const Matrix& S = symfunc::antipode_m_matrix(n);
    std::vector<Rational> v(parts.size(), 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto it = in.find(parts[i]);
        if (it != in.end()) v[i] = it->second;
    }
    auto w = mat_vec(S, v);
    std::map<Partition, Rational> out;
    for (std::size_t j = 0; j < parts.size(); ++j)
        if (w[j] != 0) out[parts[j]] = w[j];
    return out;
}

}  // namespace detail

inline std::map<Partition, Rational> normal_from_tangent(const std::map<Partition, Rational>& tangent, int n) {
    return detail::apply_antipode_m(tangent, n);
}
inline std::map<Partition, Rational> tangent_from_normal(const std::map<Partition, Rational>& normal, int n) {
    return detail::apply_antipode_m(normal, n);
}

// Homogeneous rational cobordism class of a point, stored as its vector of
// normal monomial Chern numbers m_lambda (the normal convention is canonical
// here; tangent conversion is always explicit).
class CobordClass {
  public:
    explicit CobordClass(int dim) : dim_(dim) {
        if (dim < 0) throw std::invalid_argument("CobordClass: negative dimension");
    }

    static CobordClass from_normal(int dim, std::map<Partition, Rational> m) {
        CobordClass c(dim);
        for (const auto& [lam, v] : m)
            if (lam.weight() != dim) throw std::invalid_argument("CobordClass: key of wrong weight");
        for (auto& [lam, v] : m)
            if (v != 0) c.normal_[lam] = v;
        return c;
    }
    static CobordClass from_tangent(int dim, const std::map<Partition, Rational>& m) {
        return from_normal(dim, normal_from_tangent(m, dim));
    }
    static CobordClass point(Rational c = 1) {
        std::map<Partition, Rational> m;
        if (c != 0) m[Partition{}] = std::move(c);
        return from_normal(0, std::move(m));
    }

    int dim() const { return dim_; }
    const std::map<Partition, Rational>& normal_numbers() const { return normal_; }
    std::map<Partition, Rational> tangent_numbers() const { return tangent_from_normal(normal_, dim_); }
    Rational normal_number(const Partition& lam) const {
        auto it = normal_.find(lam);
        return it == normal_.end() ? Rational(0) : it->second;
    }
    bool is_zero() const { return normal_.empty(); }

    CobordClass operator+(const CobordClass& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("CobordClass: dimension mismatch in sum");
        CobordClass r = *this;
        for (const auto& [lam, v] : o.normal_) {
            auto [it, ins] = r.normal_.try_emplace(lam, v);
            if (!ins) {
                it->second += v;
                if (it->second == 0) r.normal_.erase(it);
            }
        }
        return r;
    }
    CobordClass scale(const Rational& q) const {
        CobordClass r(dim_);
        if (q == 0) return r;
        for (const auto& [lam, v] : normal_) r.normal_[lam] = v * q;
        return r;
    }
    bool operator==(const CobordClass& o) const { return dim_ == o.dim_ && normal_ == o.normal_; }

    // Product of classes: dimensions add, and the numbers obey the coproduct
    // of the monomial basis, m_lambda(A x B) = sum_{mu u nu = lambda}
    // m_mu(A) m_nu(B) over multiset splittings.
    CobordClass operator*(const CobordClass& o) const {
        CobordClass r(dim_ + o.dim_);
        if (is_zero() || o.is_zero()) return r;
        for (const auto& lam : symfunc::partitions_of(dim_ + o.dim_)) {
            Rational acc = 0;
            for (const auto& [mu, nu] : symfunc::multiset_splittings(lam)) {
                if (mu.weight() != dim_ || nu.weight() != o.dim_) continue;
                auto a = normal_.find(mu);
                if (a == normal_.end()) continue;
                auto b = o.normal_.find(nu);
                if (b == o.normal_.end()) continue;
                acc += a->second * b->second;
            }
            if (acc != 0) r.normal_[lam] = acc;
        }
        return r;
    }

  private:
    int dim_;
    std::map<Partition, Rational> normal_;
};

// CP^n as a cobordism class: tangent numbers m_lambda = m_lambda at n+1 equal
// variables (the stable tangent roots), converted to the normal convention.
inline const CobordClass& cp(int n) {
    if (n < 0) throw std::invalid_argument("cp: negative n");
    static std::mutex mu;
    static std::map<int, CobordClass> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::map<Partition, Rational> tangent;
    for (const auto& lam : symfunc::partitions_of(n)) {
        Int c = symfunc::monomial_count(lam, n + 1);
        if (c != 0) tangent[lam] = Rational(c);
    }
    return cache.emplace(n, CobordClass::from_tangent(n, tangent)).first->second;
}

// The class N^{2n} with m_lambda = 0 for lambda != (n) and m_(n) = (n+1)!.
inline CobordClass n_class(int n) {
    if (n < 1) throw std::invalid_argument("n_class: n must be >= 1");
    std::map<Partition, Rational> m;
    m[Partition({n})] = Rational(factorial(n + 1));
    return CobordClass::from_normal(n, std::move(m));
}

// Finite sum of homogeneous classes; the graded ring they generate.
class GradedClass {
  public:
    GradedClass() = default;
    GradedClass(const CobordClass& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) comps_.emplace(c.dim(), c);
    }
    static GradedClass scalar(const Rational& q) { return GradedClass(CobordClass::point(q)); }

    const std::map<int, CobordClass>& components() const { return comps_; }
    CobordClass component(int n) const {
        auto it = comps_.find(n);
        return it == comps_.end() ? CobordClass(n) : it->second;
    }
    bool is_zero() const { return comps_.empty(); }
    int top_dim() const { return comps_.empty() ? 0 : comps_.rbegin()->first; }

    GradedClass operator+(const GradedClass& o) const {
        GradedClass r = *this;
        for (const auto& [n, c] : o.comps_) {
            auto it = r.comps_.find(n);
            if (it == r.comps_.end())
                r.comps_.emplace(n, c);
            else {
                it->second = it->second + c;
                if (it->second.is_zero()) r.comps_.erase(it);
            }
        }
        return r;
    }
    GradedClass operator-(const GradedClass& o) const { return *this + o.scale(-1); }
    GradedClass operator*(const GradedClass& o) const {
        GradedClass r;
        for (const auto& [n1, c1] : comps_)
            for (const auto& [n2, c2] : o.comps_) r = r + GradedClass(c1 * c2);
        return r;
    }
    GradedClass scale(const Rational& q) const {
        GradedClass r;
        if (q == 0) return r;
        for (const auto& [n, c] : comps_) r.comps_.emplace(n, c.scale(q));
        return r;
    }
    bool operator==(const GradedClass& o) const { return comps_ == o.comps_; }

  private:
    std::map<int, CobordClass> comps_;
};

}  // namespace chernum::cobord

namespace chernum {

template <>
struct ring_traits<cobord::GradedClass> {
    using G = cobord::GradedClass;
    static G zero() { return {}; }
    static G one() { return G::scalar(1); }
    static G from_rational(const Rational& q) { return G::scalar(q); }
    static G scale(const G& a, const Rational& q) { return a.scale(q); }
    static bool is_zero(const G& a) { return a.is_zero(); }
    static std::optional<G> invert(const G& a) {
        // units are the nonzero rational multiples of the point
        if (a.components().size() != 1 || a.components().begin()->first != 0) return std::nullopt;
        Rational c = a.components().begin()->second.normal_number({});
        if (c == 0) return std::nullopt;
        return G::scalar(Rational(1) / c);
    }
    static std::string str(const G& a);
};

}  // namespace chernum

namespace chernum::cobord {

// Genus of a class against a NORMAL characteristic series s (for a tangent
// series Q, pass Q^{-1}): sum over |lambda| = dim of the coefficient profile
// of s times m_lambda. The point has every genus equal to its multiplicity,
// which pins sigma(point) = +1.
template <class R>
R genus(const CobordClass& c, const pseries::TruncSeries<R>& s) {
    using T = ring_traits<R>;
    if (c.dim() > s.order()) throw std::out_of_range("genus: series order below class dimension");
    R acc = T::zero();
    for (const auto& [lam, v] : c.normal_numbers())
        acc = acc + T::scale(pseries::coeff_profile(s, lam), v);
    return acc;
}

template <class R>
R genus(const GradedClass& g, const pseries::TruncSeries<R>& s) {
    using T = ring_traits<R>;
    R acc = T::zero();
    for (const auto& [n, c] : g.components()) acc = acc + genus(c, s);
    return acc;
}

// Universal symmetric genus S*_(y): the class mapped to
// sum_lambda h_lambda(y) m_lambda, an element of Lambda[y] in the h basis.
// It is faithful: the numbers can be read back off the coefficients.
inline symfunc::SymFn s_star_y(const CobordClass& c) {
    symfunc::SymFn f(symfunc::Basis::h);
    for (const auto& [lam, v] : c.normal_numbers()) f.add_term(lam, v);
    return f;
}
inline symfunc::SymFn s_star_y(const GradedClass& g) {
    symfunc::SymFn f(symfunc::Basis::h);
    for (const auto& [n, c] : g.components())
        for (const auto& [lam, v] : c.normal_numbers()) f.add_term(lam, v);
    return f;
}

// Logarithm of the formal group of the theory:
// mog(u) = u + sum_{n>=1} [CP^n] u^{n+1}/(n+1).
inline pseries::TruncSeries<GradedClass> mishchenko_log(int N) {
    if (N < 1) throw std::invalid_argument("mishchenko_log: N must be >= 1");
    pseries::TruncSeries<GradedClass> s(N);
    s.set_coeff(1, GradedClass::scalar(1));
    for (int n = 1; n + 1 <= N; ++n) s.set_coeff(n + 1, GradedClass(cp(n)).scale(Rational(1, n + 1)));
    return s;
}

// Formal inverse iota with mog(iota(u)) = -mog(u): the first Chern class of
// the conjugate line bundle in terms of u. iota(u) = -u - [CP^1]u^2 - ...
inline const pseries::TruncSeries<GradedClass>& fgl_inverse(int N) {
    if (N < 1) throw std::invalid_argument("fgl_inverse: N must be >= 1");
    static std::mutex mu;
    static std::map<int, pseries::TruncSeries<GradedClass>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    auto m = mishchenko_log(N);
    auto iota = m.comp_inverse().compose(m.scale(-1));
    return cache.emplace(N, std::move(iota)).first->second;
}

namespace detail {

// Inverse of the Gram-style matrix m_lambda(cp_mu) at weight n; cp products
// over partitions of n form a basis of the rational cobordism group.
inline const Matrix& cp_basis_inverse(int n) {
    static std::mutex mu;
    static std::map<int, Matrix> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto parts = symfunc::partitions_of(n);
    Matrix B(parts.size(), std::vector<Rational>(parts.size(), 0));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        CobordClass prod = CobordClass::point();
        for (int p : parts[i].parts()) prod = prod * cp(p);
        for (std::size_t j = 0; j < parts.size(); ++j) B[i][j] = prod.normal_number(parts[j]);
    }
    return cache.emplace(n, matrix_inverse(B)).first->second;
}

}  // namespace detail

// Product of cp factors indexed by a partition; cp_empty is the point.
inline CobordClass cp_product(const Partition& mu) {
    CobordClass prod = CobordClass::point();
    for (int p : mu.parts()) prod = prod * cp(p);
    return prod;
}

// Coordinates of a class in the basis of products of projective spaces:
// c = sum_mu out[mu] * cp_product(mu).
inline std::map<Partition, Rational> decompose_cp(const CobordClass& c) {
    auto parts = symfunc::partitions_of(c.dim());
    std::vector<Rational> v(parts.size(), 0);
    for (std::size_t j = 0; j < parts.size(); ++j) v[j] = c.normal_number(parts[j]);
    // coefficients satisfy coeff . B = v with B[mu][lambda] = m_lambda(cp_mu)
    auto coeff = vec_mat(v, detail::cp_basis_inverse(c.dim()));
    std::map<Partition, Rational> out;
    for (std::size_t j = 0; j < parts.size(); ++j)
        if (coeff[j] != 0) out[parts[j]] = coeff[j];
    return out;
}

inline std::string to_string(const GradedClass& g) {
    if (g.is_zero()) return "0";
    std::string s;
    for (const auto& [n, c] : g.components()) {
        for (const auto& [mu, q] : decompose_cp(c)) {
            std::string mono;
            if (mu.empty())
                mono = "pt";
            else {
                for (std::size_t i = 0; i < mu.parts().size(); ++i) {
                    if (i) mono += "*";
                    mono += "CP(" + std::to_string(mu.parts()[i]) + ")";
                }
            }
            std::string cs = chernum::to_string(q);
            if (!s.empty()) {
                if (cs[0] == '-') {
                    s += " - ";
                    cs = cs.substr(1);
                } else
                    s += " + ";
            }
            if (cs == "1")
                s += mono;
            else if (cs == "-1")
                s += "-" + mono;
            else
                s += cs + "*" + mono;
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace chernum::cobord

namespace chernum {
inline std::string ring_traits<cobord::GradedClass>::str(const cobord::GradedClass& a) {
    return cobord::to_string(a);
}
}  // namespace chernum
