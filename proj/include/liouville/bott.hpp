#pragma once

// Bott's algorithm for line bundles O_F(a) on the full flag variety F of
// M = C^n, its specialization to S^d(G)(b) on P(M) (G = Omega^1(1)), and the
// long exact sequence for restricting S^d(G)(1) to the quadric Q in P(M).
//
// Weight convention: O_F(a) = (M/M_{n-1})^{a_1} (x) ... (x) M_1^{a_n}, and
// S^d(G)(b) = p_* O_F(0, ..., 0, -d, -b). Bott weights are highest weights of
// GL(M), so Sigma^{(0,...,0,-k)}(M) = S^k(M*).

#include "rational.hpp"
#include "weights.hpp"
#include "young_map.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace liouville {

struct BottClass {
    int degree = 0; ///< length of the sorting permutation
    Weight weight;  ///< dominant GL(M) weight

    friend bool operator==(const BottClass&, const BottClass&) = default;
};

/// Zero (nullopt) or the unique nonvanishing (degree, Sigma^lambda(M)).
using BottResult = std::optional<BottClass>;

inline Weight rho(std::size_t n) {
    std::vector<int> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<int>(n - i);
    return Weight(std::move(r));
}

inline BottResult bott_cohomology(const Weight& a) {
    const std::size_t n = a.size();
    if (n == 0) throw Error("bott", "bott_cohomology: empty weight");
    std::vector<long> shifted(n);
    for (std::size_t i = 0; i < n; ++i) shifted[i] = static_cast<long>(a[i]) + static_cast<long>(n - i);
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (shifted[i] == shifted[j]) return std::nullopt;
            if (shifted[i] < shifted[j]) ++inversions;
        }
    std::sort(shifted.begin(), shifted.end(), std::greater<>());
    std::vector<int> lambda(n);
    for (std::size_t i = 0; i < n; ++i) lambda[i] = static_cast<int>(shifted[i] - static_cast<long>(n - i));
    return BottClass{inversions, Weight(std::move(lambda))};
}

/// One cohomology group: its dimension and, when it is a GL(M)-module, its
/// decomposition into irreducibles (Bott weights).
struct CohomologyEntry {
    Integer dim;
    std::optional<IsotypicSum> decomposition;
    std::string source; ///< "bott", "les", "rank" or "formula"

    friend bool operator==(const CohomologyEntry&, const CohomologyEntry&) = default;
};

/// Cohomological index -> nonzero group. Absent index means zero.
class GradedCohomology {
public:
    void set(int i, CohomologyEntry entry) {
        if (i < 0) throw Error("bott", "negative cohomological index");
        if (entry.dim == 0)
            groups_.erase(i);
        else
            groups_[i] = std::move(entry);
    }

    Integer dim(int i) const {
        auto it = groups_.find(i);
        return it == groups_.end() ? Integer(0) : it->second.dim;
    }

    const CohomologyEntry* at(int i) const {
        auto it = groups_.find(i);
        return it == groups_.end() ? nullptr : &it->second;
    }

    bool is_zero() const noexcept { return groups_.empty(); }
    const std::map<int, CohomologyEntry>& groups() const noexcept { return groups_; }

    int top_degree() const { return groups_.empty() ? -1 : groups_.rbegin()->first; }

    Integer euler_characteristic() const {
        Integer chi = 0;
        for (const auto& [i, e] : groups_) chi += (i % 2 ? -1 : 1) * e.dim;
        return chi;
    }

    friend bool operator==(const GradedCohomology&, const GradedCohomology&) = default;

private:
    std::map<int, CohomologyEntry> groups_;
};

inline GradedCohomology from_bott(const BottResult& r) {
    GradedCohomology out;
    if (r) {
        IsotypicSum s;
        s.add(r->weight);
        out.set(r->degree, CohomologyEntry{weyl_dim(r->weight), s, "bott"});
    }
    return out;
}

/// O_F weight representing S^d(G)(b) on P(C^n).
inline Weight sdg_weight(int n, int d, int b) {
    if (n < 2) throw Error("bott", "S^d(G)(b) needs n >= 2, got n=" + std::to_string(n));
    if (d < 0) throw Error("bott", "S^d(G)(b) needs d >= 0, got d=" + std::to_string(d));
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    a[static_cast<std::size_t>(n - 2)] = -d;
    a[static_cast<std::size_t>(n - 1)] = -b;
    return Weight(std::move(a));
}

inline GradedCohomology sdg_cohomology_on_P(int n, int d, int b) {
    return from_bott(bott_cohomology(sdg_weight(n, d, b)));
}

/// Rank of the connecting map H^1(S^d(G)(-1)) -> H^1(S^d(G)(1)), i.e. of
/// y_{d-1,q}, for given (n, d-1).
using ConnectingRankProvider = std::function<ConnectingRank(int n, int k)>;

inline ConnectingRankProvider default_rank_provider(double work_cap = kDefaultExactWork) {
    return [work_cap](int n, int k) { return connecting_rank(n, k, work_cap); };
}

/// Cohomology of S^d(G)(1)|_Q from 0 -> S^d(G)(-1) -q-> S^d(G)(1) -> S^d(G)(1)|_Q -> 0:
/// H^i(Q) = coker(H^i(-1) -> H^i(+1)) + ker(H^{i+1}(-1) -> H^{i+1}(+1)).
inline GradedCohomology les_restriction_to_Q(int n, int d, const ConnectingRankProvider& provider) {
    if (n < 3) throw Error("bott", "les_restriction_to_Q: needs n >= 3, got n=" + std::to_string(n));
    if (d < 0) throw Error("bott", "les_restriction_to_Q: needs d >= 0, got d=" + std::to_string(d));
    const GradedCohomology minus = sdg_cohomology_on_P(n, d, -1);
    const GradedCohomology plus = sdg_cohomology_on_P(n, d, +1);
    const int top = std::max(minus.top_degree(), plus.top_degree()) + 1;

    std::map<int, ConnectingRank> ranks;
    for (int i = 0; i <= top; ++i) {
        if (minus.dim(i) == 0 || plus.dim(i) == 0) {
            ranks[i] = {0, "les"};
            continue;
        }
        // Both sides nonzero only happens in H^1 for d >= 3: the map is y_{d-1,q}.
        if (i != 1 || d < 3)
            throw IntegrityError("bott", "unexpected nonzero connecting map in H^" + std::to_string(i) +
                                             " for n=" + std::to_string(n) + ", d=" + std::to_string(d));
        ranks[i] = provider(n, d - 1);
        if (ranks[i].rank > minus.dim(i) || ranks[i].rank > plus.dim(i))
            throw IntegrityError("bott", "connecting rank exceeds source or target dimension");
    }

    GradedCohomology out;
    for (int i = 0; i < top; ++i) {
        const auto& r_here = ranks[i];
        const auto& r_next = ranks[i + 1];
        const Integer coker = plus.dim(i) - r_here.rank;
        const Integer ker = minus.dim(i + 1) - r_next.rank;
        if (coker + ker == 0) continue;
        CohomologyEntry entry{coker + ker, std::nullopt, "les"};
        if (r_here.rank == 0 && r_next.rank == 0) {
            IsotypicSum s;
            for (const auto* g : {plus.at(i), minus.at(i + 1)})
                if (g && g->decomposition)
                    for (const auto& [w, m] : g->decomposition->terms()) s.add(w, m);
            entry.decomposition = std::move(s);
        } else {
            entry.source = r_here.rank != 0 ? r_here.source : r_next.source;
        }
        out.set(i, std::move(entry));
    }
    return out;
}

inline GradedCohomology les_restriction_to_Q(int n, int d) {
    return les_restriction_to_Q(n, d, default_rank_provider());
}

} // namespace liouville
