#pragma once

// Desk-scale oracle: Schur functors realized as images of Young symmetrizers
// c = b a in V^{(x)k}, a = sum of row permutations, b = signed sum of column
// permutations of the row-major standard filling. Independent of the
// Casimir route in young_map.hpp.

#include "matrix.hpp"
#include "poly.hpp"
#include "weights.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace liouville {

namespace detail {

using Permutation = std::vector<int>;

inline int permutation_sign(const Permutation& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

/// All permutations of {0..k-1} preserving each block (as sets).
inline std::vector<Permutation> block_permutations(int k, const std::vector<std::vector<int>>& blocks) {
    std::vector<Permutation> out{[k] {
        Permutation id(k);
        std::iota(id.begin(), id.end(), 0);
        return id;
    }()};
    for (const auto& block : blocks) {
        std::vector<int> images = block;
        std::vector<Permutation> next;
        std::sort(images.begin(), images.end());
        do {
            for (const auto& p : out) {
                Permutation q = p;
                for (std::size_t t = 0; t < block.size(); ++t) q[block[t]] = images[t];
                next.push_back(std::move(q));
            }
        } while (std::next_permutation(images.begin(), images.end()));
        out = std::move(next);
    }
    return out;
}

/// Flat index of a word (i_0, ..., i_{k-1}) in base n.
inline std::size_t word_index(const std::vector<int>& word, int n) {
    std::size_t idx = 0;
    for (int c : word) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(c);
    return idx;
}

} // namespace detail

inline constexpr int kMaxOracleBoxes = 5;
inline constexpr int kMaxOracleN = 3;

/// Young symmetrizer of shape lambda acting on (C^n)^{(x)k}.
class YoungSymmetrizer {
public:
    YoungSymmetrizer(const Weight& lambda, int n) : n_(n) {
        if (!lambda.is_dominant() || !lambda.is_nonnegative())
            throw Error("young_map", "young symmetrizer needs a Young diagram, got " + lambda.str());
        k_ = static_cast<int>(lambda.boxes());
        if (k_ > kMaxOracleBoxes || n > kMaxOracleN || n < 1)
            throw Error("young_map", "young symmetrizer size guard: |lambda|=" + std::to_string(k_) +
                                         ", n=" + std::to_string(n) + " (limits 5 boxes, n <= 3)");
        std::vector<std::vector<int>> rows, cols;
        int next = 0;
        for (std::size_t r = 0; r < lambda.size(); ++r) {
            if (lambda[r] == 0) continue;
            std::vector<int> row;
            for (int c = 0; c < lambda[r]; ++c) {
                row.push_back(next);
                if (static_cast<std::size_t>(c) >= cols.size()) cols.emplace_back();
                cols[static_cast<std::size_t>(c)].push_back(next);
                ++next;
            }
            rows.push_back(std::move(row));
        }
        row_group_ = detail::block_permutations(k_, rows);
        col_group_ = detail::block_permutations(k_, cols);
        dim_ = 1;
        for (int t = 0; t < k_; ++t) dim_ *= static_cast<std::size_t>(n_);
    }

    int boxes() const noexcept { return k_; }
    std::size_t tensor_dim() const noexcept { return dim_; }

    /// c v for a tensor v (coordinates in the word basis).
    RationalVector apply(const RationalVector& v) const {
        RationalVector a(dim_), out(dim_);
        std::vector<int> word(k_), moved(k_);
        for (std::size_t idx = 0; idx < dim_; ++idx) {
            if (sgn(v[idx]) == 0) continue;
            decode(idx, word);
            for (const auto& p : row_group_) {
                permute(p, word, moved);
                a[detail::word_index(moved, n_)] += v[idx];
            }
        }
        for (std::size_t idx = 0; idx < dim_; ++idx) {
            if (sgn(a[idx]) == 0) continue;
            decode(idx, word);
            for (const auto& p : col_group_) {
                permute(p, word, moved);
                if (detail::permutation_sign(p) > 0)
                    out[detail::word_index(moved, n_)] += a[idx];
                else
                    out[detail::word_index(moved, n_)] -= a[idx];
            }
        }
        return out;
    }

    RationalMatrix matrix() const {
        std::vector<RationalVector> cols;
        cols.reserve(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            RationalVector e(dim_);
            e[j] = 1;
            cols.push_back(apply(e));
        }
        return RationalMatrix::from_columns(dim_, cols);
    }

private:
    void decode(std::size_t idx, std::vector<int>& word) const {
        for (int t = k_ - 1; t >= 0; --t) {
            word[static_cast<std::size_t>(t)] = static_cast<int>(idx % static_cast<std::size_t>(n_));
            idx /= static_cast<std::size_t>(n_);
        }
    }

    // Factor in position t moves to position p[t].
    static void permute(const detail::Permutation& p, const std::vector<int>& word, std::vector<int>& out) {
        for (std::size_t t = 0; t < word.size(); ++t) out[static_cast<std::size_t>(p[t])] = word[t];
    }

    int n_;
    int k_ = 0;
    std::size_t dim_ = 1;
    std::vector<detail::Permutation> row_group_;
    std::vector<detail::Permutation> col_group_;
};

/// Symmetric tensor of a homogeneous polynomial: x_{i1}...x_{ik} maps to the
/// sum over all k! orderings of e_{i1} (x) ... (x) e_{ik}. GL(n)-equivariant.
inline RationalVector symmetric_tensor(const Poly& f) {
    const int n = f.n(), k = f.degree();
    std::size_t dim = 1;
    for (int t = 0; t < k; ++t) dim *= static_cast<std::size_t>(n);
    RationalVector out(dim);
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> word;
        for (int i = 0; i < n; ++i) word.insert(word.end(), static_cast<std::size_t>(e[i]), i);
        Rational stabilizer = 1;
        for (int i = 0; i < n; ++i)
            for (int t = 2; t <= e[i]; ++t) stabilizer *= t;
        // distinct orderings each appear |stabilizer| times among the k! orderings
        do {
            out[detail::word_index(word, n)] += c * stabilizer;
        } while (std::next_permutation(word.begin(), word.end()));
    }
    return out;
}

inline RationalVector tensor_product(const RationalVector& a, const RationalVector& b) {
    RationalVector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (sgn(b[j]) != 0) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

struct SymmetrizerOracleResult {
    std::size_t symmetrizer_rank = 0;
    /// Present for shapes (d,2): matrix of f |-> c (f (x) q), S^d -> V^{(x)(d+2)}.
    std::optional<RationalMatrix> vertical_map;
};

inline SymmetrizerOracleResult young_symmetrizer_oracle(const Weight& lambda, int n,
                                                        const QuadraticForm* q = nullptr) {
    const YoungSymmetrizer c(lambda, n);
    SymmetrizerOracleResult result;
    result.symmetrizer_rank = c.matrix().rank();
    const bool vertical_shape = lambda.size() >= 2 && lambda[0] >= 2 && lambda[1] == 2 &&
                                std::all_of(lambda.entries().begin() + 2, lambda.entries().end(),
                                            [](int a) { return a == 0; });
    if (vertical_shape) {
        const int d = lambda[0];
        const QuadraticForm form = q ? *q : QuadraticForm::standard(n);
        const RationalVector qt = symmetric_tensor(form.as_poly());
        const MonomialIndex domain(n, d);
        std::vector<RationalVector> cols;
        for (const auto& e : domain.basis())
            cols.push_back(c.apply(tensor_product(symmetric_tensor(Poly::monomial(e)), qt)));
        result.vertical_map = RationalMatrix::from_columns(c.tensor_dim(), cols);
    }
    return result;
}

} // namespace liouville
