#pragma once

#include "chernum/rational.hpp"

#include <string>
#include <vector>

namespace chernum {

// Dense univariate polynomial over exact rationals (no truncation; degrees
// grow as needed). Used as the coefficient ring Q[y] for the chi_y genus.
class Poly {
  public:
    Poly() = default;
    Poly(Rational c) {  // NOLINT(google-explicit-constructor): scalars embed
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rational>{0, 1}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(k)] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const {
        std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return Poly(std::move(c));
    }
    Poly operator-(const Poly& o) const { return *this + o.scale(-1); }
    Poly operator-() const { return scale(-1); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        return Poly(std::move(c));
    }
    Poly scale(const Rational& q) const {
        if (q == 0) return {};
        std::vector<Rational> c = coeffs_;
        for (auto& v : c) v *= q;
        return Poly(std::move(c));
    }
    Poly pow(int e) const {
        Poly r(1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    Rational eval(const Rational& at) const {
        Rational r = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * at + coeffs_[i];
        return r;
    }

    bool all_integral() const {
        for (const auto& c : coeffs_)
            if (!is_integer(c)) return false;
        return true;
    }

    std::string to_string(const std::string& var = "y") const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            std::string cs = chernum::to_string(coeffs_[i]);
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
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
        return s.empty() ? "0" : s;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

}  // namespace chernum
