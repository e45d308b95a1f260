#pragma once

#include "chernum/partition.hpp"
#include "chernum/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace chernum::symfunc {

// Element of Lambda[y] (x) Lambda[z] over Q in the h (x) h basis: a finite
// rational combination of h_{ly}(y) * h_{lz}(z). The h basis is
// multiplicatively free, so products reduce to partition unions slotwise.
class BigradedElement {
  public:
    using Key = std::pair<Partition, Partition>;

    BigradedElement() = default;

    static BigradedElement one() { return term({}, {}, 1); }
    static BigradedElement term(Partition ly, Partition lz, Rational c) {
        BigradedElement e;
        if (c != 0) e.coeffs_[{std::move(ly), std::move(lz)}] = std::move(c);
        return e;
    }
    static BigradedElement scalar(Rational c) { return term({}, {}, std::move(c)); }

    const std::map<Key, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(const Partition& ly, const Partition& lz) const {
        auto it = coeffs_.find({ly, lz});
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    BigradedElement& add_term(const Partition& ly, const Partition& lz, const Rational& c) {
        if (c == 0) return *this;
        auto [it, inserted] = coeffs_.try_emplace({ly, lz}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
        return *this;
    }

    BigradedElement operator+(const BigradedElement& o) const {
        BigradedElement r = *this;
        for (const auto& [k, v] : o.coeffs_) r.add_term(k.first, k.second, v);
        return r;
    }
    BigradedElement operator-(const BigradedElement& o) const {
        BigradedElement r = *this;
        for (const auto& [k, v] : o.coeffs_) r.add_term(k.first, k.second, -v);
        return r;
    }
    BigradedElement operator*(const BigradedElement& o) const {
        BigradedElement r;
        for (const auto& [ka, va] : coeffs_)
            for (const auto& [kb, vb] : o.coeffs_)
                r.add_term(ka.first.union_with(kb.first), ka.second.union_with(kb.second), va * vb);
        return r;
    }
    BigradedElement operator-() const { return scale(-1); }
    BigradedElement scale(const Rational& q) const {
        BigradedElement r;
        if (q == 0) return r;
        for (const auto& [k, v] : coeffs_) r.coeffs_[k] = v * q;
        return r;
    }
    bool operator==(const BigradedElement& o) const { return coeffs_ == o.coeffs_; }

    // Part of total (y,z)-degree d.
    BigradedElement homogeneous_component(int d) const {
        BigradedElement r;
        for (const auto& [k, v] : coeffs_)
            if (k.first.weight() + k.second.weight() == d) r.coeffs_[k] = v;
        return r;
    }
    int max_total_degree() const {
        int d = 0;
        for (const auto& [k, v] : coeffs_)
            d = std::max(d, k.first.weight() + k.second.weight());
        return d;
    }
    bool is_homogeneous(int d) const { return *this == homogeneous_component(d); }

    // Drop terms whose y- or z-weight exceeds the given bounds.
    BigradedElement truncate(int ymax, int zmax) const {
        BigradedElement r;
        for (const auto& [k, v] : coeffs_)
            if (k.first.weight() <= ymax && k.second.weight() <= zmax) r.coeffs_[k] = v;
        return r;
    }

    bool all_integral() const {
        for (const auto& [k, v] : coeffs_)
            if (!is_integer(v)) return false;
        return true;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (const auto& [k, v] : coeffs_) {
            std::string mono;
            if (!k.first.empty()) mono += "h" + k.first.to_string() + "(y)";
            if (!k.second.empty()) mono += (mono.empty() ? "" : "*") + ("h" + k.second.to_string() + "(z)");
            std::string cs = chernum::to_string(v);
            if (!s.empty()) {
                if (!cs.empty() && cs[0] == '-') {
                    s += " - ";
                    cs = cs.substr(1);
                } else {
                    s += " + ";
                }
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
    std::map<Key, Rational> coeffs_;
};

}  // namespace chernum::symfunc
