#pragma once

// Homogeneous polynomials on M = C^n with exact rational coefficients, the
// quadratic form q, multiplication by q, the q-Laplacian and restriction to
// 2-planes. Monomials of one degree are ordered lexicographically with z_1
// largest (z_1^d first), which is the canonical basis used for every matrix.

#include "matrix.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace liouville {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded, then lexicographically descending: within a degree z_1^d comes first.
struct MonomialOrder {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/// All exponents of total degree d in n variables, in canonical order.
inline std::vector<Exponent> monomial_basis(int n, int d) {
    std::vector<Exponent> out;
    if (n < 1 || d < 0) return out;
    Exponent e(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int v = left; v >= 0; --v) {
            e[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, d);
    return out;
}

inline Integer dim_sym(int n, int d) { return d < 0 ? Integer(0) : binomial(n + d - 1, d); }

/// Position lookup for a monomial basis.
class MonomialIndex {
public:
    MonomialIndex(int n, int d) : basis_(monomial_basis(n, d)) {
        for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
    }

    std::size_t size() const noexcept { return basis_.size(); }
    const Exponent& operator[](std::size_t k) const { return basis_[k]; }
    const std::vector<Exponent>& basis() const noexcept { return basis_; }

    std::size_t at(const Exponent& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw Error("polyspaces", "monomial outside the basis");
        return it->second;
    }

private:
    std::vector<Exponent> basis_;
    std::map<Exponent, std::size_t> index_;
};

class Poly {
public:
    static constexpr int kInhomogeneous = -1;

    Poly() = default;
    /// Zero polynomial in n variables; degree kInhomogeneous allows mixed degrees.
    Poly(int n, int degree) : n_(n), degree_(degree) {
        if (n < 1) throw Error("polyspaces", "polynomial ring needs n >= 1, got " + std::to_string(n));
    }

    static Poly constant(int n, const Rational& c) {
        Poly p(n, 0);
        p.add_term(Exponent(n, 0), c);
        return p;
    }

    static Poly variable(int n, int i) {
        Poly p(n, 1);
        Exponent e(n, 0);
        e.at(i) = 1;
        p.add_term(e, 1);
        return p;
    }

    static Poly monomial(const Exponent& e, const Rational& c = 1) {
        Poly p(static_cast<int>(e.size()), total_degree(e));
        p.add_term(e, c);
        return p;
    }

    int n() const noexcept { return n_; }
    int degree() const noexcept { return degree_; }
    bool homogeneous() const noexcept { return degree_ != kInhomogeneous; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::map<Exponent, Rational, MonomialOrder>& terms() const noexcept { return terms_; }

    Rational coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponent& e, const Rational& c) {
        if (static_cast<int>(e.size()) != n_) throw Error("polyspaces", "exponent length does not match n");
        if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; }))
            throw Error("polyspaces", "negative exponent");
        if (degree_ != kInhomogeneous && total_degree(e) != degree_)
            throw Error("polyspaces", "term of degree " + std::to_string(total_degree(e)) +
                                          " in a polynomial of degree " + std::to_string(degree_));
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    /// Same terms, degree constraint dropped.
    Poly as_inhomogeneous() const {
        Poly p = *this;
        p.degree_ = kInhomogeneous;
        return p;
    }

    /// Homogeneous component of degree d.
    Poly component(int d) const {
        Poly p(n_, d);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == d) p.terms_.emplace(e, c);
        return p;
    }

    Poly derivative(int i) const {
        Poly p(n_, degree_ == kInhomogeneous ? kInhomogeneous : std::max(degree_ - 1, 0));
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponent f = e;
            f[i] -= 1;
            p.add_term(f, c * e[i]);
        }
        return p;
    }

    Poly& operator+=(const Poly& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    Poly& operator*=(const Rational& s) {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.n_ != b.n_) throw Error("polyspaces", "product of polynomials in different numbers of variables");
        const int deg = (a.homogeneous() && b.homogeneous()) ? a.degree_ + b.degree_ : kInhomogeneous;
        Poly p(a.n_, deg);
        Exponent e(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                p.add_term(e, ca * cb);
            }
        return p;
    }

    /// Equality of the polynomial functions (declared degrees are ignored).
    friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            os << (first ? "" : " + ") << c.get_str();
            for (int i = 0; i < n_; ++i)
                if (e[i] > 0) os << "*z" << (i + 1) << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
            first = false;
        }
        return os.str();
    }

private:
    void check_compatible(const Poly& o) {
        if (o.n_ != n_) throw Error("polyspaces", "sum of polynomials in different numbers of variables");
        if (degree_ != kInhomogeneous && o.degree_ != degree_ && !o.is_zero()) degree_ = kInhomogeneous;
    }

    int n_ = 1;
    int degree_ = 0;
    std::map<Exponent, Rational, MonomialOrder> terms_;
};

/// Coordinates of a homogeneous polynomial in the canonical basis.
inline RationalVector to_vector(const Poly& f, const MonomialIndex& index) {
    RationalVector v(index.size());
    for (const auto& [e, c] : f.terms()) v[index.at(e)] = c;
    return v;
}

inline Poly from_vector(int n, int d, const MonomialIndex& index, const RationalVector& v) {
    Poly p(n, d);
    for (std::size_t k = 0; k < v.size(); ++k) p.add_term(index[k], v[k]);
    return p;
}

/// Matrix of a linear operator S^{d_in} -> S^{d_out} in canonical bases.
inline RationalMatrix operator_matrix(int n, int d_in, int d_out, const std::function<Poly(const Poly&)>& op) {
    const MonomialIndex in(n, d_in), out(n, d_out);
    RationalMatrix m(out.size(), in.size());
    for (std::size_t j = 0; j < in.size(); ++j) {
        const Poly image = op(Poly::monomial(in[j]));
        for (const auto& [e, c] : image.terms()) m(out.at(e), j) = c;
    }
    return m;
}

/// Nondegenerate quadratic form q(z) = sum_{ij} Q_ij z_i z_j.
class QuadraticForm {
public:
    explicit QuadraticForm(RationalMatrix matrix) : matrix_(std::move(matrix)) {
        if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
            throw Error("polyspaces", "quadratic form needs a nonempty square matrix");
        for (std::size_t i = 0; i < matrix_.rows(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (matrix_(i, j) != matrix_(j, i)) throw Error("polyspaces", "quadratic form matrix is not symmetric");
        auto inv = matrix_.inverse();
        if (!inv) throw Error("polyspaces", "quadratic form is degenerate");
        inverse_ = std::move(*inv);
    }

    /// sum of squares z_1^2 + ... + z_n^2.
    static QuadraticForm standard(int n) {
        if (n < 1) throw Error("polyspaces", "standard form needs n >= 1");
        return QuadraticForm(RationalMatrix::identity(static_cast<std::size_t>(n)));
    }

    int n() const noexcept { return static_cast<int>(matrix_.rows()); }
    const RationalMatrix& matrix() const noexcept { return matrix_; }
    const RationalMatrix& inverse() const noexcept { return inverse_; }

    QuadraticForm scaled(const Rational& c) const { return QuadraticForm(c * matrix_); }

    Poly as_poly() const {
        Poly p(n(), 2);
        for (int i = 0; i < n(); ++i)
            for (int j = 0; j < n(); ++j) {
                Exponent e(n(), 0);
                e[i] += 1;
                e[j] += 1;
                p.add_term(e, matrix_(i, j));
            }
        return p;
    }

    Rational bilinear(const RationalVector& u, const RationalVector& v) const {
        Rational s = 0;
        for (int i = 0; i < n(); ++i)
            for (int j = 0; j < n(); ++j) s += u[i] * matrix_(i, j) * v[j];
        return s;
    }

private:
    RationalMatrix matrix_;
    RationalMatrix inverse_;
};

inline Poly mult_by_q(const Poly& f, const QuadraticForm& q) {
    if (f.n() != q.n()) throw Error("polyspaces", "mult_by_q: f has n=" + std::to_string(f.n()) +
                                                      ", q has n=" + std::to_string(q.n()));
    return q.as_poly() * f;
}

/// Delta_q f = sum_{ij} q^{ij} d_i d_j f, with q^{ij} the inverse matrix.
inline Poly laplacian_q(const Poly& f, const QuadraticForm& q) {
    if (f.n() != q.n()) throw Error("polyspaces", "laplacian_q: dimension mismatch");
    const int out_degree = f.homogeneous() ? std::max(f.degree() - 2, 0) : Poly::kInhomogeneous;
    Poly out(f.n(), out_degree);
    for (int i = 0; i < f.n(); ++i) {
        const Poly di = f.derivative(i);
        for (int j = 0; j < f.n(); ++j) {
            if (sgn(q.inverse()(i, j)) == 0) continue;
            const Poly dij = di.derivative(j);
            for (const auto& [e, c] : dij.terms()) out.add_term(e, c * q.inverse()(i, j));
        }
    }
    return out;
}

inline RationalMatrix laplacian_matrix(int n, int d, const QuadraticForm& q) {
    return operator_matrix(n, d, std::max(d - 2, 0), [&](const Poly& f) { return laplacian_q(f, q); });
}

/// dim ker(Delta_q : S^d -> S^{d-2}), computed as an exact rank.
inline Integer harmonic_dim(int n, int d, const QuadraticForm& q) {
    if (d < 0) throw Error("polyspaces", "harmonic_dim: negative degree");
    if (q.n() != n) throw Error("polyspaces", "harmonic_dim: q is not a form on C^" + std::to_string(n));
    const Integer total = dim_sym(n, d);
    if (d < 2) return total;
    return total - static_cast<unsigned long>(laplacian_matrix(n, d, q).rank());
}

/// Basis of the q-harmonic polynomials of degree d.
inline std::vector<Poly> harmonic_basis(int n, int d, const QuadraticForm& q) {
    const MonomialIndex index(n, d);
    std::vector<Poly> out;
    if (d < 2) {
        for (const auto& e : index.basis()) out.push_back(Poly::monomial(e));
        return out;
    }
    for (const auto& v : laplacian_matrix(n, d, q).kernel_basis()) out.push_back(from_vector(n, d, index, v));
    return out;
}

/// f(L w): substitute z_i = sum_k L(i,k) w_k, giving a polynomial in L.cols() variables.
inline Poly substitute_linear(const Poly& f, const RationalMatrix& L) {
    if (static_cast<int>(L.rows()) != f.n()) throw Error("polyspaces", "substitution matrix has wrong row count");
    const int m = static_cast<int>(L.cols());
    std::vector<Poly> image;
    for (int i = 0; i < f.n(); ++i) {
        Poly lin(m, 1);
        for (int k = 0; k < m; ++k) {
            Exponent e(m, 0);
            e[k] = 1;
            lin.add_term(e, L(i, k));
        }
        image.push_back(std::move(lin));
    }
    // powers[i][k] = image[i]^k, filled lazily
    std::vector<std::vector<Poly>> powers(f.n(), std::vector<Poly>{Poly::constant(m, 1)});
    auto power = [&](int i, int k) -> const Poly& {
        while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * image[i]);
        return powers[i][k];
    };
    Poly out(m, f.degree());
    for (const auto& [e, c] : f.terms()) {
        Poly t = Poly::constant(m, c);
        for (int i = 0; i < f.n(); ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        for (const auto& [te, tc] : t.terms()) out.add_term(te, tc);
    }
    return out;
}

struct PlaneRestriction {
    Poly restricted;   ///< f(s e1 + t e2) as a polynomial in (s, t)
    QuadraticForm gram; ///< q|_E in the basis (e1, e2)
};

inline PlaneRestriction restrict_to_plane(const Poly& f, const QuadraticForm& q, const RationalVector& e1,
                                          const RationalVector& e2) {
    const auto n = static_cast<std::size_t>(f.n());
    if (e1.size() != n || e2.size() != n || q.n() != f.n())
        throw Error("polyspaces", "restrict_to_plane: dimension mismatch");
    const RationalMatrix basis = RationalMatrix::from_columns(n, {e1, e2});
    if (basis.rank() != 2) throw Error("polyspaces", "restrict_to_plane: basis vectors are linearly dependent");
    RationalMatrix gram(2, 2);
    gram(0, 0) = q.bilinear(e1, e1);
    gram(0, 1) = gram(1, 0) = q.bilinear(e1, e2);
    gram(1, 1) = q.bilinear(e2, e2);
    // Throws if q|_E is degenerate.
    return PlaneRestriction{substitute_linear(f, basis), QuadraticForm(std::move(gram))};
}

} // namespace liouville
