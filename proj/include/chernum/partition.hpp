#pragma once

#include "chernum/rational.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace chernum::symfunc {

// Integer partition: weakly decreasing positive parts. The empty partition is
// valid and has weight 0. Partitions index every basis of the symmetric
// function ring and every Chern number in the library.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

    // Multiset merge, re-sorted; commutative.
    Partition union_with(const Partition& o) const {
        std::vector<int> v = parts_;
        v.insert(v.end(), o.parts_.begin(), o.parts_.end());
        return Partition(std::move(v));
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    // Canonical order: by weight, then reverse-lexicographic (larger leading
    // parts come first, so the order of the partitions of 4 is
    // (4), (3,1), (2,2), (2,1,1), (1,1,1,1)).
    bool operator<(const Partition& o) const {
        int wa = weight(), wb = o.weight();
        if (wa != wb) return wa < wb;
        return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                            parts_.begin(), parts_.end());
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

  private:
    void normalize() {
        for (int p : parts_)
            if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    std::vector<int> parts_;
};

// All partitions of n, each exactly once, in canonical (reverse-lexicographic)
// order. partitions_of(0) is {empty}.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int m = std::min(rest, maxpart); m >= 1; --m) {
            cur.push_back(m);
            rec(rest - m, m);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Number of distinct monomials in the expansion of m_lambda in k variables,
// i.e. m_lambda(1,...,1) with k ones; zero when lambda has more than k parts.
inline Int monomial_count(const Partition& lambda, int k) {
    int len = lambda.length();
    if (len > k) return 0;
    Int denom = factorial(k - len);
    int i = 0;
    while (i < len) {
        int j = i;
        while (j < len && lambda.part(j) == lambda.part(i)) ++j;
        denom *= factorial(j - i);
        i = j;
    }
    return factorial(k) / denom;
}

// All ordered pairs (mu, nu) of sub-multisets with mu union nu = lambda, each
// distinct pair exactly once. This is the coproduct support of the monomial
// basis and drives products of cobordism classes.
inline std::vector<std::pair<Partition, Partition>> multiset_splittings(const Partition& lambda) {
    struct Group {
        int value;
        int mult;
    };
    std::vector<Group> groups;
    for (int p : lambda.parts()) {
        if (!groups.empty() && groups.back().value == p)
            ++groups.back().mult;
        else
            groups.push_back({p, 1});
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> acc = {{{}, {}}};
    for (const auto& g : groups) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> next;
        next.reserve(acc.size() * static_cast<std::size_t>(g.mult + 1));
        for (const auto& [mu, nu] : acc) {
            for (int take = 0; take <= g.mult; ++take) {
                auto m2 = mu;
                auto n2 = nu;
                m2.insert(m2.end(), static_cast<std::size_t>(take), g.value);
                n2.insert(n2.end(), static_cast<std::size_t>(g.mult - take), g.value);
                next.emplace_back(std::move(m2), std::move(n2));
            }
        }
        acc = std::move(next);
    }
    std::vector<std::pair<Partition, Partition>> out;
    out.reserve(acc.size());
    for (auto& [mu, nu] : acc) out.emplace_back(Partition(std::move(mu)), Partition(std::move(nu)));
    return out;
}

}  // namespace chernum::symfunc
