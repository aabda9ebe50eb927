#pragma once

// The vertical Young multiplication y_{d,q}: S^d(M*) -> Sigma^{d,2}(M*),
// f |-> projection of f(x) q(y) onto the Sigma^{d,2}-isotypic component of
// the bidegree (d,2) polynomials.
//
// The isotypic component is cut out by a polynomial in the quadratic Casimir
// Omega = sum_{ij} E_ij E_ji, E_ij = x_i d/dx_j + y_i d/dy_j, which acts on
// Sigma^lambda by c(lambda) = sum_i lambda_i (lambda_i + n + 1 - 2i).
// S^d (x) S^2 = S^{d+2} + Sigma^{d+1,1} + Sigma^{d,2} and the three scalars
// differ by 2d+4 and 2d, so the Lagrange product
//   Pi = prod_{mu != (d,2)} (Omega - c(mu)) / (c(d,2) - c(mu))
// is the isotypic projector.

#include "matrix.hpp"
#include "poly.hpp"
#include "weights.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace liouville {

/// Bihomogeneous polynomial in two vector variables x, y in C^n.
class BiPoly {
public:
    using Key = std::pair<Exponent, Exponent>;

    BiPoly() = default;
    BiPoly(int n, int dx, int dy) : n_(n), dx_(dx), dy_(dy) {
        if (n < 1 || dx < 0 || dy < 0) throw Error("young_map", "invalid bidegree space");
    }

    /// f(x) g(y).
    static BiPoly product(const Poly& f, const Poly& g) {
        if (f.n() != g.n() || !f.homogeneous() || !g.homogeneous())
            throw Error("young_map", "BiPoly::product needs homogeneous factors in the same variables");
        BiPoly out(f.n(), f.degree(), g.degree());
        for (const auto& [ef, cf] : f.terms())
            for (const auto& [eg, cg] : g.terms()) out.add_term(ef, eg, cf * cg);
        return out;
    }

    int n() const noexcept { return n_; }
    int x_degree() const noexcept { return dx_; }
    int y_degree() const noexcept { return dy_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const noexcept { return terms_; }

    void add_term(const Exponent& ex, const Exponent& ey, const Rational& c) {
        if (static_cast<int>(ex.size()) != n_ || static_cast<int>(ey.size()) != n_ || total_degree(ex) != dx_ ||
            total_degree(ey) != dy_)
            throw Error("young_map", "term outside bidegree (" + std::to_string(dx_) + "," + std::to_string(dy_) + ")");
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(Key{ex, ey}, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    BiPoly& operator+=(const BiPoly& o) {
        check_same_space(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }

    BiPoly& operator-=(const BiPoly& o) {
        check_same_space(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }

    BiPoly& operator*=(const Rational& s) {
        if (sgn(s) == 0) terms_.clear();
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.n_ == b.n_ && a.dx_ == b.dx_ && a.dy_ == b.dy_ && a.terms_ == b.terms_;
    }

    /// E_ij = x_i d/dx_j + y_i d/dy_j (0-based indices).
    BiPoly apply_gl(int i, int j) const {
        BiPoly out(n_, dx_, dy_);
        for (const auto& [k, c] : terms_) {
            const auto& [ex, ey] = k;
            if (ex[j] > 0) {
                Exponent e = ex;
                e[j] -= 1;
                e[i] += 1;
                out.add_term(e, ey, c * ex[j]);
            }
            if (ey[j] > 0) {
                Exponent e = ey;
                e[j] -= 1;
                e[i] += 1;
                out.add_term(ex, e, c * ey[j]);
            }
        }
        return out;
    }

    /// F(L x, L y) for an n x n matrix L.
    BiPoly substitute(const RationalMatrix& L) const {
        BiPoly out(n_, dx_, dy_);
        for (const auto& [k, c] : terms_) {
            const Poly fx = substitute_linear(Poly::monomial(k.first, c), L);
            const Poly fy = substitute_linear(Poly::monomial(k.second), L);
            for (const auto& [ex, cx] : fx.terms())
                for (const auto& [ey, cy] : fy.terms()) out.add_term(ex, ey, cx * cy);
        }
        return out;
    }

private:
    void check_same_space(const BiPoly& o) const {
        if (o.n_ != n_ || o.dx_ != dx_ || o.dy_ != dy_) throw Error("young_map", "BiPoly space mismatch");
    }

    int n_ = 1;
    int dx_ = 0;
    int dy_ = 0;
    std::map<Key, Rational> terms_;
};

/// Canonical basis of bidegree (dx, dy): x-monomial major, y-monomial minor.
class BiMonomialIndex {
public:
    BiMonomialIndex(int n, int dx, int dy) : x_(n, dx), y_(n, dy) {}

    std::size_t size() const noexcept { return x_.size() * y_.size(); }
    std::size_t at(const Exponent& ex, const Exponent& ey) const { return x_.at(ex) * y_.size() + y_.at(ey); }
    std::pair<Exponent, Exponent> operator[](std::size_t k) const { return {x_[k / y_.size()], y_[k % y_.size()]}; }

private:
    MonomialIndex x_, y_;
};

inline RationalVector to_vector(const BiPoly& F, const BiMonomialIndex& index) {
    RationalVector v(index.size());
    for (const auto& [k, c] : F.terms()) v[index.at(k.first, k.second)] = c;
    return v;
}

/// Omega F = sum_{ij} E_ij E_ji F.
inline BiPoly casimir_apply(const BiPoly& F) {
    BiPoly out(F.n(), F.x_degree(), F.y_degree());
    for (int i = 0; i < F.n(); ++i)
        for (int j = 0; j < F.n(); ++j) out += F.apply_gl(j, i).apply_gl(i, j);
    return out;
}

/// Eigenvalue of Omega on Sigma^lambda(C^n): sum_i lambda_i (lambda_i + n + 1 - 2i), i 1-based.
inline Integer casimir_eigenvalue(const Weight& lambda) {
    const long n = static_cast<long>(lambda.size());
    Integer c = 0;
    for (long i = 1; i <= n; ++i) {
        const long l = lambda[static_cast<std::size_t>(i - 1)];
        c += Integer(l) * (l + n + 1 - 2 * i);
    }
    return c;
}

class IsotypicProjector {
public:
    IsotypicProjector(Weight target, std::vector<Weight> competitors)
        : target_(std::move(target)), target_scalar_(casimir_eigenvalue(target_)) {
        for (auto& mu : competitors) {
            Integer c = casimir_eigenvalue(mu);
            if (c == target_scalar_)
                throw Error("young_map", "Casimir scalar of " + mu.str() + " coincides with target " + target_.str());
            for (const auto& [other, oc] : competitors_)
                if (oc == c)
                    throw Error("young_map", "Casimir scalars of " + mu.str() + " and " + other.str() + " coincide");
            competitors_.emplace_back(std::move(mu), std::move(c));
        }
    }

    /// Projector onto Sigma^{d,2} inside S^d (x) S^2 of C^n.
    static IsotypicProjector vertical(int n, int d) {
        if (n < 2 || d < 2)
            throw Error("young_map", "Sigma^{d,2} projector needs n >= 2 and d >= 2 (n=" + std::to_string(n) +
                                         ", d=" + std::to_string(d) + ")");
        const auto N = static_cast<std::size_t>(n);
        return IsotypicProjector(Weight::padded({d, 2}, N),
                                 {Weight::padded({d + 2}, N), Weight::padded({d + 1, 1}, N)});
    }

    const Weight& target() const noexcept { return target_; }
    const Integer& target_scalar() const noexcept { return target_scalar_; }
    const std::vector<std::pair<Weight, Integer>>& competitors() const noexcept { return competitors_; }

    BiPoly apply(const BiPoly& F) const {
        BiPoly G = F;
        for (const auto& [mu, c] : competitors_) {
            BiPoly next = casimir_apply(G);
            next -= Rational(c) * G;
            next *= Rational(1) / Rational(target_scalar_ - c);
            G = std::move(next);
        }
        return G;
    }

private:
    Weight target_;
    Integer target_scalar_;
    std::vector<std::pair<Weight, Integer>> competitors_;
};

inline BiPoly project_isotypic(const BiPoly& F) {
    if (F.y_degree() != 2) throw Error("young_map", "project_isotypic: bidegree must be (d,2)");
    return IsotypicProjector::vertical(F.n(), F.x_degree()).apply(F);
}

/// Matrix of Pi on the full bidegree (d,2) space.
inline RationalMatrix projector_matrix(int n, int d) {
    const auto proj = IsotypicProjector::vertical(n, d);
    const BiMonomialIndex index(n, d, 2);
    std::vector<RationalVector> cols;
    cols.reserve(index.size());
    for (std::size_t k = 0; k < index.size(); ++k) {
        BiPoly e(n, d, 2);
        const auto [ex, ey] = index[k];
        e.add_term(ex, ey, 1);
        cols.push_back(to_vector(proj.apply(e), index));
    }
    return RationalMatrix::from_columns(index.size(), cols);
}

inline BiPoly y_dq(const Poly& f, const QuadraticForm& q) {
    if (!f.homogeneous() || f.degree() < 2)
        throw Error("young_map", "y_dq: needs a homogeneous polynomial of degree d >= 2 (got " +
                                     std::to_string(f.degree()) + ")");
    if (f.n() != q.n()) throw Error("young_map", "y_dq: dimension mismatch");
    return IsotypicProjector::vertical(f.n(), f.degree()).apply(BiPoly::product(f, q.as_poly()));
}

/// Matrix of y_{d,q}: S^d -> bidegree (d,2), canonical bases.
inline RationalMatrix y_matrix(int n, int d, const QuadraticForm& q) {
    if (q.n() != n) throw Error("young_map", "y_matrix: q is not a form on C^" + std::to_string(n));
    const auto proj = IsotypicProjector::vertical(n, d);
    const MonomialIndex domain(n, d);
    const BiMonomialIndex target(n, d, 2);
    const Poly qp = q.as_poly();
    std::vector<RationalVector> cols;
    cols.reserve(domain.size());
    for (const auto& e : domain.basis())
        cols.push_back(to_vector(proj.apply(BiPoly::product(Poly::monomial(e), qp)), target));
    return RationalMatrix::from_columns(target.size(), cols);
}

struct KernelCokernel {
    Integer ker;
    Integer coker;
    Integer rank;
};

inline KernelCokernel kernel_cokernel_dims(int n, int d, const QuadraticForm& q) {
    if (n < 2 || d < 2)
        throw Error("young_map", "kernel_cokernel_dims: needs n >= 2, d >= 2 (n=" + std::to_string(n) +
                                     ", d=" + std::to_string(d) + ")");
    const Integer rank = static_cast<unsigned long>(y_matrix(n, d, q).rank());
    const auto N = static_cast<std::size_t>(n);
    return KernelCokernel{dim_sym(n, d) - rank, weyl_dim(Weight::padded({d, 2}, N)) - rank, rank};
}

inline KernelCokernel kernel_cokernel_dims(int n, int d) {
    return kernel_cokernel_dims(n, d, QuadraticForm::standard(n));
}

/// Basis of ker y_{d,q} as polynomials.
inline std::vector<Poly> y_kernel_basis(int n, int d, const QuadraticForm& q) {
    const MonomialIndex domain(n, d);
    std::vector<Poly> out;
    for (const auto& v : y_matrix(n, d, q).kernel_basis()) out.push_back(from_vector(n, d, domain, v));
    return out;
}

/// Rank of the connecting map S^k -> Sigma^{k,2} together with how it was obtained.
struct ConnectingRank {
    Integer rank;
    std::string source; ///< "rank" (exact elimination) or "formula" (injectivity, dim S^k)
};

/// Rough elimination cost of rank(y_matrix(n, k)): rows * cols^2.
inline double y_rank_work(int n, int k) {
    const double cols = dim_sym(n, k).get_d();
    return cols * cols * cols * dim_sym(n, 2).get_d();
}

inline constexpr double kDefaultExactWork = 5.0e7;

/// Exact rank when the problem is under `work_cap`, injectivity formula otherwise.
/// When computed exactly for n >= 3 the rank is checked against the formula.
inline ConnectingRank connecting_rank(int n, int k, double work_cap = kDefaultExactWork) {
    if (y_rank_work(n, k) <= work_cap) {
        const auto kc = kernel_cokernel_dims(n, k);
        if (n >= 3 && kc.ker != 0)
            throw IntegrityError("young_map", "y_{" + std::to_string(k) + ",q} not injective for n=" +
                                                  std::to_string(n) + " (kernel " + kc.ker.get_str() + ")");
        return {kc.rank, "rank"};
    }
    return {dim_sym(n, k), "formula"};
}

/// Deterministic 64-bit generator for test probes (bit-stable for a seed).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi] by reduction modulo the range.
    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

/// Samples `trials` random rational 2-planes E and reports whether f|_E is
/// q|_E-harmonic on every one of them. q must be positive definite.
inline bool plane_harmonicity_test(const Poly& f, const QuadraticForm& q, int trials, std::uint64_t seed) {
    if (!f.homogeneous() || f.degree() < 2)
        throw Error("young_map", "plane_harmonicity_test: needs a homogeneous polynomial of degree >= 2");
    const int n = f.n();
    if (n < 2) throw Error("young_map", "plane_harmonicity_test: needs n >= 2");
    SeededRng rng(seed);
    for (int t = 0; t < trials; ++t) {
        RationalVector e1(n), e2(n);
        RationalMatrix basis;
        do {
            for (int i = 0; i < n; ++i) {
                e1[i] = rng.uniform(-5, 5);
                e2[i] = rng.uniform(-5, 5);
            }
            basis = RationalMatrix::from_columns(static_cast<std::size_t>(n), {e1, e2});
        } while (basis.rank() < 2);
        const auto restriction = restrict_to_plane(f, q, e1, e2);
        if (!laplacian_q(restriction.restricted, restriction.gram).is_zero()) return false;
    }
    return true;
}

} // namespace liouville
