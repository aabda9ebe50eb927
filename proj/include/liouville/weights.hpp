#pragma once

// GL(n) weights, Young diagrams, the Weyl dimension formula, duality and the
// Pieri rule. Weights are plain integer sequences; dominance is a checked
// property because Bott's algorithm needs non-dominant weights too.

#include "rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace liouville {

class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> entries) : entries_(std::move(entries)) {}
    Weight(std::initializer_list<int> entries) : entries_(entries) {}

    /// (a_1, ..., a_p, 0, ..., 0) of length n.
    static Weight padded(std::vector<int> leading, std::size_t n) {
        if (leading.size() > n)
            throw Error("weights", "weight with " + std::to_string(leading.size()) + " parts does not fit n=" +
                                       std::to_string(n));
        leading.resize(n, 0);
        return Weight(std::move(leading));
    }

    /// 1^p of length n.
    static Weight column(std::size_t p, std::size_t n) { return padded(std::vector<int>(p, 1), n); }

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    bool is_dominant() const { return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>()); }

    bool is_nonnegative() const {
        return std::all_of(entries_.begin(), entries_.end(), [](int a) { return a >= 0; });
    }

    long boxes() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
        os << ')';
        return os.str();
    }

    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    std::vector<int> entries_;
};

/// Finite sum of irreducibles: dominant weight -> multiplicity >= 1.
class IsotypicSum {
public:
    IsotypicSum() = default;

    void add(const Weight& w, long multiplicity = 1) {
        if (!w.is_dominant()) throw Error("weights", "isotypic component with non-dominant weight " + w.str());
        if (multiplicity < 1) throw Error("weights", "multiplicity must be positive");
        terms_[w] += multiplicity;
    }

    const std::map<Weight, long>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    long multiplicity(const Weight& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    friend bool operator==(const IsotypicSum&, const IsotypicSum&) = default;

private:
    std::map<Weight, long> terms_;
};

/// dim Sigma^lambda(C^n) = prod_{i<j} (l_i - l_j + j - i) / (j - i).
inline Integer weyl_dim(const Weight& lambda) {
    if (lambda.size() == 0) throw Error("weights", "weyl_dim: empty weight");
    if (!lambda.is_dominant()) throw Error("weights", "weyl_dim: non-dominant weight " + lambda.str());
    const std::size_t n = lambda.size();
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            num *= static_cast<long>(lambda[i]) - lambda[j] + static_cast<long>(j - i);
            den *= static_cast<long>(j - i);
        }
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Integer dim(const IsotypicSum& s) {
    Integer total = 0;
    for (const auto& [w, m] : s.terms()) total += weyl_dim(w) * m;
    return total;
}

/// (a_1, ..., a_n) -> (-a_n, ..., -a_1): Sigma^a(V)^* = Sigma^{dual a}(V).
inline Weight dualize(const Weight& a) {
    std::vector<int> d(a.entries().rbegin(), a.entries().rend());
    for (auto& x : d) x = -x;
    return Weight(std::move(d));
}

namespace detail {

// Horizontal strips: mu_1 >= l_1 >= mu_2 >= l_2 >= ... >= mu_n >= l_n.
inline void horizontal_strips(const Weight& lambda, std::size_t row, int remaining, std::vector<int>& mu,
                              IsotypicSum& out) {
    const std::size_t n = lambda.size();
    if (row == n) {
        if (remaining == 0) out.add(Weight(mu));
        return;
    }
    const int low = lambda[row];
    const int cap = row == 0 ? low + remaining : std::min(lambda[row - 1], low + remaining);
    for (int v = cap; v >= low; --v) {
        mu[row] = v;
        horizontal_strips(lambda, row + 1, remaining - (v - low), mu, out);
    }
}

} // namespace detail

/// Sigma^lambda (x) S^k = sum of Sigma^mu over mu = lambda + horizontal k-strip.
inline IsotypicSum pieri_sym(const Weight& lambda, int k) {
    if (lambda.size() == 0) throw Error("weights", "pieri_sym: empty weight");
    if (!lambda.is_dominant() || !lambda.is_nonnegative())
        throw Error("weights", "pieri_sym: " + lambda.str() + " is not a Young diagram");
    if (k < 1) throw Error("weights", "pieri_sym: k=" + std::to_string(k) + " must be positive");
    IsotypicSum out;
    std::vector<int> mu(lambda.size());
    detail::horizontal_strips(lambda, 0, k, mu, out);
    return out;
}

} // namespace liouville
