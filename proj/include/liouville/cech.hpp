#pragma once

// Cech cohomology of A^n \ {0} with coefficients in O, cover U_i = {z_i != 0}.
// Everything is graded by the Laurent multidegree m in Z^n; the monomial z^m
// lies in O(U_I) iff supp_-(m) = {i : m_i < 0} is contained in I, so each
// cochain group of the slice is spanned by the admissible subsets I.

#include "matrix.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace liouville {

using MultiDegree = std::vector<int>;

struct CechSlice {
    int n = 0;
    MultiDegree m;
    std::vector<std::size_t> cochain_dims;    ///< level p = (p+1)-subsets, p = 0..n-1
    std::vector<std::size_t> cohomology_dims; ///< H^p, p = 0..n-1
};

namespace detail {

inline std::uint32_t negative_support(const MultiDegree& m) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] < 0) s |= 1u << i;
    return s;
}

} // namespace detail

/// Differential C^p -> C^{p+1} on the slice: (dc)_J = sum_{j in J} (-1)^{pos(j, J)} c_{J \ j},
/// pos counted from 0 in sorted J.
inline CechSlice cech_slice(int n, const MultiDegree& m) {
    if (n < 1 || n > 20) throw Error("cech", "cech_slice: n=" + std::to_string(n) + " out of range [1,20]");
    if (static_cast<int>(m.size()) != n) throw Error("cech", "cech_slice: multidegree length differs from n");
    const std::uint32_t neg = detail::negative_support(m);

    // levels[p] = admissible subsets of size p+1, as bitmasks in increasing order
    std::vector<std::vector<std::uint32_t>> levels(static_cast<std::size_t>(n));
    for (std::uint32_t s = 1; s < (1u << n); ++s)
        if ((s & neg) == neg) levels[static_cast<std::size_t>(__builtin_popcount(s) - 1)].push_back(s);

    CechSlice slice{n, m, {}, {}};
    for (const auto& lv : levels) slice.cochain_dims.push_back(lv.size());

    std::vector<std::size_t> ranks(static_cast<std::size_t>(n), 0); // ranks[p] = rank of d: C^p -> C^{p+1}
    for (int p = 0; p + 1 < n; ++p) {
        const auto& src = levels[static_cast<std::size_t>(p)];
        const auto& dst = levels[static_cast<std::size_t>(p + 1)];
        if (src.empty() || dst.empty()) continue;
        std::map<std::uint32_t, std::size_t> src_index;
        for (std::size_t k = 0; k < src.size(); ++k) src_index[src[k]] = k;
        RationalMatrix d(dst.size(), src.size());
        for (std::size_t r = 0; r < dst.size(); ++r) {
            const std::uint32_t J = dst[r];
            int pos = 0;
            for (int j = 0; j < n; ++j) {
                if (!(J & (1u << j))) continue;
                auto it = src_index.find(J & ~(1u << j));
                if (it != src_index.end()) d(r, it->second) = pos % 2 ? -1 : 1;
                ++pos;
            }
        }
        ranks[static_cast<std::size_t>(p)] = d.rank();
    }
    for (int p = 0; p < n; ++p) {
        const std::size_t out_rank = ranks[static_cast<std::size_t>(p)];
        const std::size_t in_rank = p > 0 ? ranks[static_cast<std::size_t>(p - 1)] : 0;
        slice.cohomology_dims.push_back(slice.cochain_dims[static_cast<std::size_t>(p)] - out_rank - in_rank);
    }
    return slice;
}

/// Closed form for H^i(A^n \ {0}, O) in multidegree m: H^0 iff m >= 0,
/// H^{n-1} iff m <= -1 componentwise (both coincide in H^0 when n = 1).
inline std::vector<std::size_t> cech_closed_form(int n, const MultiDegree& m) {
    std::vector<std::size_t> h(static_cast<std::size_t>(n), 0);
    const bool nonneg = std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; });
    const bool allneg = std::all_of(m.begin(), m.end(), [](int x) { return x <= -1; });
    if (nonneg) h[0] += 1;
    if (allneg) h[static_cast<std::size_t>(n - 1)] += 1;
    return h;
}

struct CechTableRow {
    MultiDegree m;
    std::vector<std::size_t> cohomology_dims;
};

struct CechTable {
    int n = 0;
    int box = 0;
    std::vector<CechTableRow> rows;                     ///< only multidegrees with nonzero cohomology
    std::map<int, std::vector<std::size_t>> by_degree;  ///< total degree -> H^i counts
    std::vector<std::size_t> totals;                    ///< H^i counts over the whole box
    std::size_t slices = 0;
};

/// Cech ranks over every m with -box <= m_i <= box, each checked against the closed form.
inline CechTable punctured_affine_table(int n, int box, const std::function<void(const CechSlice&)>& visit = {}) {
    if (n < 1 || n > 8) throw Error("cech", "punctured_affine_table: n=" + std::to_string(n) + " out of range [1,8]");
    if (box < 0) throw Error("cech", "punctured_affine_table: negative box");
    CechTable table;
    table.n = n;
    table.box = box;
    table.totals.assign(static_cast<std::size_t>(n), 0);
    MultiDegree m(static_cast<std::size_t>(n), -box);
    while (true) {
        const CechSlice slice = cech_slice(n, m);
        ++table.slices;
        if (visit) visit(slice);
        if (slice.cohomology_dims != cech_closed_form(n, m)) {
            std::string md;
            for (int x : m) md += (md.empty() ? "" : ",") + std::to_string(x);
            throw IntegrityError("cech", "Cech ranks disagree with closed form at n=" + std::to_string(n) + ", m=(" +
                                             md + ")");
        }
        const bool nonzero =
            std::any_of(slice.cohomology_dims.begin(), slice.cohomology_dims.end(), [](std::size_t x) { return x; });
        if (nonzero) {
            int degree = 0;
            for (int x : m) degree += x;
            auto& bucket = table.by_degree[degree];
            bucket.resize(static_cast<std::size_t>(n), 0);
            for (std::size_t i = 0; i < slice.cohomology_dims.size(); ++i) {
                bucket[i] += slice.cohomology_dims[i];
                table.totals[i] += slice.cohomology_dims[i];
            }
            table.rows.push_back({m, slice.cohomology_dims});
        }
        // odometer step over the box, last coordinate fastest
        int k = n - 1;
        while (k >= 0 && m[static_cast<std::size_t>(k)] == box) m[static_cast<std::size_t>(k--)] = -box;
        if (k < 0) break;
        ++m[static_cast<std::size_t>(k)];
    }
    return table;
}

} // namespace liouville
