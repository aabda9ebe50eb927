#pragma once

// Graded cohomology table of the derived conformal algebra of flat A^n,
// assembled row by row from the restriction sequence on the quadric. Rows are
// indexed by the bundle degree d of S^d(G)(1)|_Q; H^1 at row d is the cokernel
// of y_{d-1,q}.

#include "bott.hpp"
#include "killing.hpp"
#include "parallel.hpp"
#include "weights.hpp"
#include "young_map.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liouville {

struct ReconfOptions {
    double exact_work_cap = kDefaultExactWork; ///< rank computations above this use the formula
    unsigned workers = worker_count();
};

struct TableRow {
    int d = 0;
    GradedCohomology cohomology;
    std::optional<KernelCokernel> exact; ///< y_{d-1,q} by exact rank, when computed
    std::optional<Integer> formula_coker; ///< weyl_dim((d-1,2)) - dim S^{d-1}, for d >= 3

    Integer h0() const { return cohomology.dim(0); }
    Integer h1() const { return cohomology.dim(1); }
};

struct CohomologyTable {
    int n = 0;
    int dmax = 0;
    std::vector<TableRow> rows;
    Integer h0_total = 0;
    Integer h1_total = 0; ///< over the truncation d <= dmax
};

inline Integer coker_formula(int n, int k) {
    return weyl_dim(Weight::padded({k, 2}, static_cast<std::size_t>(n))) - dim_sym(n, k);
}

inline Integer expected_h0_total(int n) { return Integer((n + 2) * (n + 1) / 2); }

inline TableRow reconf_row(int n, int d, const ReconfOptions& options) {
    TableRow row;
    row.d = d;
    const ConnectingRankProvider provider = [&](int nn, int k) -> ConnectingRank {
        row.formula_coker = coker_formula(nn, k);
        if (y_rank_work(nn, k) > options.exact_work_cap) return {dim_sym(nn, k), "formula"};
        const auto kc = kernel_cokernel_dims(nn, k);
        row.exact = kc;
        if (kc.ker != 0 || kc.coker != *row.formula_coker)
            throw IntegrityError("reconf", "exact rank of y_{" + std::to_string(k) + ",q} gives coker " +
                                               kc.coker.get_str() + ", Weyl-dimension formula gives " +
                                               row.formula_coker->get_str() + " (n=" + std::to_string(nn) + ")");
        return {kc.rank, "rank"};
    };
    row.cohomology = les_restriction_to_Q(n, d, provider);
    if (row.cohomology.top_degree() >= 2)
        throw IntegrityError("reconf", "nonzero H^" + std::to_string(row.cohomology.top_degree()) + " at n=" +
                                           std::to_string(n) + ", d=" + std::to_string(d));
    return row;
}

inline CohomologyTable reconf_table(int n, int dmax, const ReconfOptions& options = {}) {
    if (n < 3) throw Error("reconf", "reconf_table: needs n >= 3, got n=" + std::to_string(n));
    if (dmax < 3) throw Error("reconf", "reconf_table: needs dmax >= 3, got dmax=" + std::to_string(dmax));
    CohomologyTable table;
    table.n = n;
    table.dmax = dmax;
    table.rows = parallel_map<TableRow>(
        static_cast<std::size_t>(dmax + 1), [&](std::size_t d) { return reconf_row(n, static_cast<int>(d), options); },
        options.workers);
    for (const auto& row : table.rows) {
        table.h0_total += row.h0();
        table.h1_total += row.h1();
        if (row.d >= 3 && row.h0() != 0)
            throw IntegrityError("reconf", "nonzero H^0 at d=" + std::to_string(row.d) + ", n=" + std::to_string(n));
    }
    if (table.h0_total != expected_h0_total(n))
        throw IntegrityError("reconf", "H^0 total " + table.h0_total.get_str() + " differs from dim so(n+2) = " +
                                           expected_h0_total(n).get_str());
    return table;
}

struct ContinuityRow {
    int n = 0;
    std::vector<Integer> h0; ///< per degree d = 0..dmax
    std::vector<Integer> h1;
    Integer h0_total = 0;
    Integer h1_total = 0;
};

/// Graded dimensions of H^0 and H^1 per n: n = 2 from the conformal Killing
/// kernel (H^1 = 0), n >= 3 from reconf_table.
inline std::vector<ContinuityRow> continuity_report(int n_lo, int n_hi, int dmax, const ReconfOptions& options = {}) {
    if (n_lo < 2 || n_hi > 6 || n_lo > n_hi)
        throw Error("reconf", "continuity_report: n range [" + std::to_string(n_lo) + "," + std::to_string(n_hi) +
                                  "] must lie in [2,6]");
    if (dmax < 3) throw Error("reconf", "continuity_report: needs dmax >= 3");
    std::vector<ContinuityRow> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        ContinuityRow r;
        r.n = n;
        if (n == 2) {
            const auto dims = parallel_map<Integer>(
                static_cast<std::size_t>(dmax + 1),
                [](std::size_t d) { return Integer(static_cast<unsigned long>(ck_kernel(2, static_cast<int>(d)).size())); },
                options.workers);
            for (const auto& x : dims) {
                r.h0.push_back(x);
                r.h1.push_back(0);
                r.h0_total += x;
            }
        } else {
            const auto table = reconf_table(n, dmax, options);
            for (const auto& row : table.rows) {
                r.h0.push_back(row.h0());
                r.h1.push_back(row.h1());
            }
            r.h0_total = table.h0_total;
            r.h1_total = table.h1_total;
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace liouville
