#pragma once

#include "chernum/bigraded.hpp"
#include "chernum/linalg.hpp"
#include "chernum/partition.hpp"
#include "chernum/rational.hpp"
#include "chernum/ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace chernum::symfunc {

// Bases of the ring of symmetric functions: monomial, complete homogeneous,
// elementary, power sum. The ring is the inverse limit (free polynomial ring
// on h_1, h_2, ...), so no variable count is ever fixed; expansions in
// max(6, degree) variables are used only to compute transition matrices,
// which is faithful degree by degree.
enum class Basis { m, h, e, p };

inline char basis_letter(Basis b) {
    switch (b) {
        case Basis::m: return 'm';
        case Basis::h: return 'h';
        case Basis::e: return 'e';
        case Basis::p: return 'p';
    }
    return '?';
}

namespace detail {

// Sparse polynomial in k variables, keyed by full exponent vectors.
using SymPoly = std::map<std::vector<int>, Rational>;

inline SymPoly sp_mul(const SymPoly& a, const SymPoly& b, int k) {
    SymPoly out;
    std::vector<int> e(static_cast<std::size_t>(k));
    for (const auto& [ea, va] : a)
        for (const auto& [eb, vb] : b) {
            for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
            auto [it, ins] = out.try_emplace(e, va * vb);
            if (!ins) {
                it->second += va * vb;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

inline SymPoly sp_one(int k) { return {{std::vector<int>(static_cast<std::size_t>(k), 0), Rational(1)}}; }

inline SymPoly m_gen(const Partition& lam, int k) {
    SymPoly out;
    if (lam.length() > k) return out;
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < lam.length(); ++i) e[static_cast<std::size_t>(i)] = lam.part(i);
    std::sort(e.begin(), e.end());
    do {
        out[e] = 1;
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

inline SymPoly h_gen(int r, int k) {
    // sum of all monomials of degree r
    SymPoly out;
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == k - 1) {
            e[static_cast<std::size_t>(pos)] = rest;
            out[e] = 1;
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            e[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (k == 0) {
        if (r == 0) out[{}] = 1;
        return out;
    }
    rec(rec, 0, r);
    return out;
}

inline SymPoly e_gen(int r, int k) { return m_gen(Partition(std::vector<int>(static_cast<std::size_t>(r), 1)), k); }

inline SymPoly p_gen(int r, int k) {
    SymPoly out;
    for (int i = 0; i < k; ++i) {
        std::vector<int> e(static_cast<std::size_t>(k), 0);
        e[static_cast<std::size_t>(i)] = r;
        out[e] = 1;
    }
    return out;
}

inline SymPoly basis_poly(Basis b, const Partition& lam, int k) {
    if (b == Basis::m) return m_gen(lam, k);
    SymPoly out = sp_one(k);
    for (int p : lam.parts()) {
        SymPoly g;
        switch (b) {
            case Basis::h: g = h_gen(p, k); break;
            case Basis::e: g = e_gen(p, k); break;
            case Basis::p: g = p_gen(p, k); break;
            default: break;
        }
        out = sp_mul(out, g, k);
    }
    return out;
}

struct TransitionCache {
    std::recursive_mutex mu;
    std::map<std::pair<int, int>, Matrix> to_m;    // (basis, n) -> expansion matrix in m
    std::map<std::pair<int, int>, Matrix> from_m;  // inverse of the above
    std::map<std::tuple<int, int, int>, Matrix> full;
    std::map<int, Matrix> antipode_m;

    static TransitionCache& instance() {
        static TransitionCache c;
        return c;
    }
};

inline const Matrix& basis_to_m_matrix(Basis b, int n) {
    auto& c = TransitionCache::instance();
    std::scoped_lock lock(c.mu);
    auto key = std::make_pair(static_cast<int>(b), n);
    auto it = c.to_m.find(key);
    if (it != c.to_m.end()) return it->second;
    int k = std::max(6, n);
    auto parts = partitions_of(n);
    std::size_t p = parts.size();
    Matrix M(p, std::vector<Rational>(p, 0));
    for (std::size_t i = 0; i < p; ++i) {
        SymPoly poly = basis_poly(b, parts[i], k);
        for (std::size_t j = 0; j < p; ++j) {
            std::vector<int> e(static_cast<std::size_t>(k), 0);
            for (int t = 0; t < parts[j].length(); ++t) e[static_cast<std::size_t>(t)] = parts[j].part(t);
            auto f = poly.find(e);
            if (f != poly.end()) M[i][j] = f->second;
        }
    }
    return c.to_m.emplace(key, std::move(M)).first->second;
}

inline const Matrix& m_to_basis_matrix(Basis b, int n) {
    auto& c = TransitionCache::instance();
    std::scoped_lock lock(c.mu);
    auto key = std::make_pair(static_cast<int>(b), n);
    auto it = c.from_m.find(key);
    if (it != c.from_m.end()) return it->second;
    Matrix inv = matrix_inverse(basis_to_m_matrix(b, n));
    return c.from_m.emplace(key, std::move(inv)).first->second;
}

}  // namespace detail

// Transition matrix M with f^A_lambda = sum_mu M[lambda][mu] f^B_mu, rows and
// columns indexed by partitions_of(n) in canonical order. Matrices for (A,B)
// and (B,A) are exact inverses; e<->m and h<->m are integral.
inline const Matrix& transition(Basis a, Basis b, int n) {
    auto& c = detail::TransitionCache::instance();
    std::scoped_lock lock(c.mu);
    auto key = std::make_tuple(static_cast<int>(a), static_cast<int>(b), n);
    auto it = c.full.find(key);
    if (it != c.full.end()) return it->second;
    Matrix M;
    if (a == b)
        M = identity_matrix(partitions_of(n).size());
    else if (b == Basis::m)
        M = detail::basis_to_m_matrix(a, n);
    else if (a == Basis::m)
        M = detail::m_to_basis_matrix(b, n);
    else
        M = matrix_mul(detail::basis_to_m_matrix(a, n), detail::m_to_basis_matrix(b, n));
    return c.full.emplace(key, std::move(M)).first->second;
}

// Matrix of the antipode on the degree-n part in the m basis:
// S(m_lambda) = sum_mu A[lambda][mu] m_mu. S(h_a) = (-1)^a e_a extended as a
// ring map, so A = (-1)^n T(m->h) E(e->m). Self-inverse in every degree.
inline const Matrix& antipode_m_matrix(int n) {
    auto& c = detail::TransitionCache::instance();
    std::scoped_lock lock(c.mu);
    auto it = c.antipode_m.find(n);
    if (it != c.antipode_m.end()) return it->second;
    Matrix M = matrix_mul(transition(Basis::m, Basis::h, n), transition(Basis::e, Basis::m, n));
    if (n % 2 != 0)
        for (auto& row : M)
            for (auto& v : row) v = -v;
    return c.antipode_m.emplace(n, std::move(M)).first->second;
}

// A single basis element expanded in another basis, as a sparse row.
inline std::map<Partition, Rational> expand_in(Basis from, const Partition& lam, Basis to) {
    int n = lam.weight();
    auto parts = partitions_of(n);
    const Matrix& M = transition(from, to, n);
    std::size_t row = 0;
    while (row < parts.size() && !(parts[row] == lam)) ++row;
    std::map<Partition, Rational> out;
    for (std::size_t j = 0; j < parts.size(); ++j)
        if (M[row][j] != 0) out[parts[j]] = M[row][j];
    return out;
}

// Finite rational combination of basis elements; possibly inhomogeneous.
class SymFn {
  public:
    SymFn() : basis_(Basis::h) {}
    explicit SymFn(Basis b) : basis_(b) {}
    static SymFn element(Basis b, Partition lam, Rational c = 1) {
        SymFn f(b);
        f.add_term(lam, c);
        return f;
    }
    static SymFn scalar(Rational c) { return element(Basis::h, {}, std::move(c)); }

    Basis basis() const { return basis_; }
    const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int max_weight() const {
        int w = 0;
        for (const auto& [k, v] : coeffs_) w = std::max(w, k.weight());
        return w;
    }
    Rational coeff(const Partition& lam) const {
        auto it = coeffs_.find(lam);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    SymFn& add_term(const Partition& lam, const Rational& c) {
        if (c == 0) return *this;
        auto [it, ins] = coeffs_.try_emplace(lam, c);
        if (!ins) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
        return *this;
    }

    SymFn to_basis(Basis target) const {
        if (target == basis_) return *this;
        SymFn out(target);
        // group by weight, apply the per-degree matrix
        std::map<int, std::vector<Rational>> rows;
        std::map<int, std::vector<Partition>> parts_by_w;
        for (const auto& [lam, c] : coeffs_) {
            int n = lam.weight();
            if (!parts_by_w.count(n)) {
                parts_by_w[n] = partitions_of(n);
                rows[n].assign(parts_by_w[n].size(), 0);
            }
            auto& parts = parts_by_w[n];
            for (std::size_t i = 0; i < parts.size(); ++i)
                if (parts[i] == lam) rows[n][i] = c;
        }
        for (auto& [n, row] : rows) {
            auto out_row = vec_mat(row, transition(basis_, target, n));
            for (std::size_t j = 0; j < out_row.size(); ++j)
                out.add_term(parts_by_w[n][j], out_row[j]);
        }
        return out;
    }

    SymFn operator+(const SymFn& o) const {
        if (basis_ != o.basis_) return *this + o.to_basis(basis_);
        SymFn r = *this;
        for (const auto& [k, v] : o.coeffs_) r.add_term(k, v);
        return r;
    }
    SymFn operator-(const SymFn& o) const { return *this + o.scale(-1); }
    SymFn scale(const Rational& q) const {
        SymFn r(basis_);
        if (q == 0) return r;
        for (const auto& [k, v] : coeffs_) r.coeffs_[k] = v * q;
        return r;
    }
    // Product, computed in the multiplicatively free h basis.
    SymFn operator*(const SymFn& o) const {
        SymFn a = to_basis(Basis::h), b = o.to_basis(Basis::h);
        SymFn r(Basis::h);
        for (const auto& [ka, va] : a.coeffs_)
            for (const auto& [kb, vb] : b.coeffs_) r.add_term(ka.union_with(kb), va * vb);
        return basis_ == Basis::h ? r : r.to_basis(basis_);
    }
    bool operator==(const SymFn& o) const {
        return (to_basis(Basis::h) - o.to_basis(Basis::h)).is_zero();
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (const auto& [k, v] : coeffs_) {
            std::string cs = chernum::to_string(v);
            std::string mono = k.empty() ? "" : std::string(1, basis_letter(basis_)) + k.to_string();
            if (!s.empty()) {
                if (cs[0] == '-') {
                    s += " - ";
                    cs = cs.substr(1);
                } else
                    s += " + ";
            }
            if (mono.empty())
                s += cs;
            else if (cs == "1")
                s += mono;
            else if (cs == "-1")
                s += "-" + mono;
            else
                s += cs + "*" + mono;
        }
        return s;
    }

  private:
    Basis basis_;
    std::map<Partition, Rational> coeffs_;
};

// Hopf antipode: S(h_a) = (-1)^a e_a extended as a ring map; an involution.
// Geometrically this passes from a stable bundle to its stable inverse.
inline SymFn antipode(const SymFn& f) {
    SymFn h = f.to_basis(Basis::h);
    SymFn out(Basis::h);
    for (const auto& [lam, c] : h.coeffs()) {
        Rational sign = (lam.weight() % 2 == 0) ? 1 : -1;
        for (const auto& [mu, d] : expand_in(Basis::e, lam, Basis::h)) out.add_term(mu, c * sign * d);
    }
    return f.basis() == Basis::h ? out : out.to_basis(f.basis());
}

// Ring homomorphism h_a -> values[a]; values[0] is the constant slot of the
// generating sequence and is ignored (h_0 = 1). When specializing to finitely
// many variables z_1..z_r, values are the coefficients of prod (1 - z_i t)^{-1}.
template <class R>
R specialize_h(const SymFn& f, const std::vector<R>& values) {
    using T = ring_traits<R>;
    SymFn h = f.to_basis(Basis::h);
    R acc = T::zero();
    for (const auto& [lam, c] : h.coeffs()) {
        R term = T::one();
        for (int a : lam.parts()) {
            if (a >= static_cast<int>(values.size()))
                throw std::invalid_argument("specialize_h: insufficient values for h_" + std::to_string(a));
            term = term * values[static_cast<std::size_t>(a)];
        }
        acc = acc + T::scale(term, c);
    }
    return acc;
}

// The three expressions of the Cauchy identity, each computed independently
// and returned in the h (x) h coordinates of Lambda (x) Lambda:
//   product   prod_{i,j} (1 - z_i y_j)^{-1}, expanded in max(6,N) variables;
//   exponential   exp(sum_k p_k(z) p_k(y) / k);
//   sum   1 + sum_lambda h_lambda(z) m_lambda(y).
struct CauchyForms {
    BigradedElement product;
    BigradedElement exponential;
    BigradedElement sum;
};

inline CauchyForms cauchy_forms(int N) {
    CauchyForms out;
    int k = std::max(6, N);

    // product form: group the factors by j and expand honestly. For fixed j,
    // prod_i sum_t (z_i y_j)^t is a polynomial in y_j whose y_j^a coefficient
    // is the sum of all z-monomials of degree a; we read that coefficient off
    // the raw expansion and convert to the p basis, where multiplication over
    // the remaining j factors is free.
    // expand prod_{i<k} (sum_t z_i^t y^t) once, keeping y-degree <= N: the
    // y^a slice is the raw degree-a sum of all z-monomials
    std::vector<detail::SymPoly> bydeg(static_cast<std::size_t>(N + 1));
    bydeg[0] = detail::sp_one(k);
    for (int i = 0; i < k; ++i) {
        std::vector<detail::SymPoly> next(static_cast<std::size_t>(N + 1));
        for (int d = 0; d <= N; ++d) {
            if (bydeg[static_cast<std::size_t>(d)].empty()) continue;
            for (int t = 0; d + t <= N; ++t)
                for (const auto& [e, v] : bydeg[static_cast<std::size_t>(d)]) {
                    auto e2 = e;
                    e2[static_cast<std::size_t>(i)] += t;
                    auto [it, ins] = next[static_cast<std::size_t>(d + t)].try_emplace(e2, v);
                    if (!ins) it->second += v;
                }
        }
        bydeg = std::move(next);
    }
    // read each slice in m-coordinates and convert m -> p
    std::vector<std::map<Partition, Rational>> h_in_p(static_cast<std::size_t>(N + 1));
    h_in_p[0][{}] = 1;
    for (int a = 1; a <= N; ++a) {
        auto parts = partitions_of(a);
        const Matrix& m2p = transition(Basis::m, Basis::p, a);
        for (std::size_t pi = 0; pi < parts.size(); ++pi) {
            std::vector<int> e(static_cast<std::size_t>(k), 0);
            for (int t = 0; t < parts[pi].length(); ++t) e[static_cast<std::size_t>(t)] = parts[pi].part(t);
            auto f = bydeg[static_cast<std::size_t>(a)].find(e);
            if (f == bydeg[static_cast<std::size_t>(a)].end() || f->second == 0) continue;
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (m2p[pi][j] != 0) h_in_p[static_cast<std::size_t>(a)][parts[j]] += f->second * m2p[pi][j];
        }
    }
    // state: y exponent vector -> z part in p coordinates
    std::map<std::vector<int>, std::map<Partition, Rational>> state;
    state[std::vector<int>(static_cast<std::size_t>(k), 0)][{}] = 1;
    for (int j = 0; j < k; ++j) {
        std::map<std::vector<int>, std::map<Partition, Rational>> next;
        for (const auto& [ye, zp] : state) {
            int deg = 0;
            for (int v : ye) deg += v;
            for (int a = 0; a + deg <= N; ++a) {
                auto ye2 = ye;
                ye2[static_cast<std::size_t>(j)] += a;
                auto& dst = next[ye2];
                for (const auto& [lz, vz] : zp)
                    for (const auto& [la, va] : h_in_p[static_cast<std::size_t>(a)]) {
                        auto key = lz.union_with(la);
                        dst[key] += vz * va;
                    }
            }
        }
        state = std::move(next);
    }
    for (int d = 0; d <= N; ++d) {
        for (const auto& lam : partitions_of(d)) {
            std::vector<int> e(static_cast<std::size_t>(k), 0);
            for (int t = 0; t < lam.length(); ++t) e[static_cast<std::size_t>(t)] = lam.part(t);
            auto it = state.find(e);
            if (it == state.end()) continue;
            // y side: m_lambda -> h ; z side: p -> h
            auto mh = expand_in(Basis::m, lam, Basis::h);
            for (const auto& [lz, vz] : it->second) {
                if (vz == 0) continue;
                auto ph = expand_in(Basis::p, lz, Basis::h);
                for (const auto& [ly, vy] : mh)
                    for (const auto& [lzh, vzh] : ph) out.product.add_term(ly, lzh, vz * vy * vzh);
            }
        }
    }

    // exponential form
    BigradedElement E;
    for (int d = 1; d <= N; ++d) {
        auto ph = expand_in(Basis::p, Partition({d}), Basis::h);
        for (const auto& [ly, vy] : ph)
            for (const auto& [lz, vz] : ph) E.add_term(ly, lz, vy * vz / d);
    }
    BigradedElement expE = BigradedElement::one(), pow = BigradedElement::one();
    for (int j = 1; j <= N; ++j) {
        pow = (pow * E).truncate(N, N);
        pow = pow.scale(Rational(1) / j);
        expE = expE + pow;
    }
    out.exponential = expE;

    // sum form
    out.sum = BigradedElement::one();
    for (int d = 1; d <= N; ++d)
        for (const auto& lam : partitions_of(d)) {
            auto mh = expand_in(Basis::m, lam, Basis::h);
            for (const auto& [ly, vy] : mh) out.sum.add_term(ly, lam, vy);
        }
    return out;
}

// True iff the product, exponential, and sum expressions agree degree by
// degree up to N.
inline bool cauchy_check(int N) {
    if (N < 1) throw std::invalid_argument("cauchy_check: N must be >= 1");
    CauchyForms f = cauchy_forms(N);
    return f.product == f.exponential && f.exponential == f.sum;
}

}  // namespace chernum::symfunc
