#pragma once

// Conformal Killing fields of flat C^n with constant metric q:
//   (d_i xi_j + d_j xi_i) - (2/n) q_ij div(xi) = 0,  xi_j = q_jk xi^k,
// their Lie algebra, and the identification with so(n+2).
//
// so(n+2) convention: C^{n+2} = M + C e_+ + C e_- with the split form
// G = I_n (+) [[0,1],[1,0]], so so(G) = { A : G A antisymmetric }. The chart
// z |-> w = (z, 1, -q(z)/2) lands on the null cone of G; a matrix A induces
// the field xi_A(z) = u - s z where A w = (u, s, *). Translations sit in the
// (M, e_+) corner, special conformal fields in the (M, e_-) corner.

#include "matrix.hpp"
#include "poly.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liouville {

class PolyVectorField {
public:
    PolyVectorField() = default;
    /// Zero field; degree Poly::kInhomogeneous allows mixed degrees.
    PolyVectorField(int n, int degree) : components_(static_cast<std::size_t>(n), Poly(n, degree)) {}
    explicit PolyVectorField(std::vector<Poly> components) : components_(std::move(components)) {
        for (const auto& c : components_)
            if (c.n() != n()) throw Error("killing", "vector field component count differs from n");
    }

    /// sum_i c_i d_i with constant coefficients.
    static PolyVectorField constant(const RationalVector& c) {
        const int n = static_cast<int>(c.size());
        PolyVectorField f(n, 0);
        for (int i = 0; i < n; ++i) f.components_[static_cast<std::size_t>(i)] = Poly::constant(n, c[static_cast<std::size_t>(i)]);
        return f;
    }

    int n() const noexcept { return static_cast<int>(components_.size()); }
    int degree() const { return components_.empty() ? 0 : components_.front().degree(); }
    const Poly& operator[](int i) const { return components_.at(static_cast<std::size_t>(i)); }
    Poly& operator[](int i) { return components_.at(static_cast<std::size_t>(i)); }
    const std::vector<Poly>& components() const noexcept { return components_; }

    bool is_zero() const {
        for (const auto& c : components_)
            if (!c.is_zero()) return false;
        return true;
    }

    PolyVectorField as_inhomogeneous() const {
        PolyVectorField out = *this;
        for (auto& c : out.components_) c = c.as_inhomogeneous();
        return out;
    }

    PolyVectorField& operator+=(const PolyVectorField& o) {
        check(o);
        for (int i = 0; i < n(); ++i) (*this)[i] += o[i];
        return *this;
    }
    PolyVectorField& operator-=(const PolyVectorField& o) {
        check(o);
        for (int i = 0; i < n(); ++i) (*this)[i] -= o[i];
        return *this;
    }
    PolyVectorField& operator*=(const Rational& s) {
        for (auto& c : components_) c *= s;
        return *this;
    }

    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
    friend PolyVectorField operator*(const Rational& s, PolyVectorField a) { return a *= s; }
    friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) { return a.components_ == b.components_; }

    std::string str() const {
        std::string s;
        for (int i = 0; i < n(); ++i) {
            if ((*this)[i].is_zero()) continue;
            s += (s.empty() ? "" : " + ") + std::string("(") + (*this)[i].str() + ")*d" + std::to_string(i + 1);
        }
        return s.empty() ? "0" : s;
    }

private:
    void check(const PolyVectorField& o) const {
        if (o.n() != n()) throw Error("killing", "vector fields on different spaces");
    }

    std::vector<Poly> components_;
};

/// Symmetric n x n matrix of polynomials.
using SymmetricTensorField = std::vector<std::vector<Poly>>;

inline Poly divergence(const PolyVectorField& xi) {
    Poly div = xi[0].derivative(0);
    for (int k = 1; k < xi.n(); ++k) div += xi[k].derivative(k);
    return div;
}

/// Traceless symmetrized gradient; zero iff xi is conformal Killing for q.
inline SymmetricTensorField ck_operator(const PolyVectorField& xi, const QuadraticForm& q) {
    const int n = xi.n();
    if (q.n() != n) throw Error("killing", "ck_operator: q has dimension " + std::to_string(q.n()) +
                                              ", field has " + std::to_string(n));
    std::vector<Poly> lowered;
    for (int j = 0; j < n; ++j) {
        Poly l = xi[0].as_inhomogeneous() * q.matrix()(static_cast<std::size_t>(j), 0);
        for (int k = 1; k < n; ++k) l += xi[k].as_inhomogeneous() * q.matrix()(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
        lowered.push_back(std::move(l));
    }
    const Poly div = divergence(xi.as_inhomogeneous());
    const Rational trace_factor = ratio(2, n);
    SymmetricTensorField out(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Poly t = lowered[static_cast<std::size_t>(j)].derivative(i) + lowered[static_cast<std::size_t>(i)].derivative(j);
            t -= div * (trace_factor * q.matrix()(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t;
            out[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = t;
        }
    return out;
}

inline bool is_conformal_killing(const PolyVectorField& xi, const QuadraticForm& q) {
    for (const auto& row : ck_operator(xi, q))
        for (const auto& entry : row)
            if (!entry.is_zero()) return false;
    return true;
}

/// Matrix of the CK operator on degree-d fields: columns (component k, monomial),
/// rows (pair i <= j, monomial of degree d-1).
inline RationalMatrix ck_matrix(int n, int d, const QuadraticForm& q) {
    const MonomialIndex domain(n, d);
    const std::size_t m = domain.size();
    const std::size_t pairs = static_cast<std::size_t>(n * (n + 1) / 2);
    if (d == 0) return RationalMatrix(0, static_cast<std::size_t>(n) * m);
    const MonomialIndex target(n, d - 1);
    RationalMatrix mat(pairs * target.size(), static_cast<std::size_t>(n) * m);
    for (int k = 0; k < n; ++k)
        for (std::size_t e = 0; e < m; ++e) {
            PolyVectorField xi(n, d);
            xi[k] = Poly::monomial(domain[e]);
            const auto t = ck_operator(xi, q);
            std::size_t pair = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j, ++pair)
                    for (const auto& [ex, c] : t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].terms())
                        mat(pair * target.size() + target.at(ex), static_cast<std::size_t>(k) * m + e) = c;
        }
    return mat;
}

inline std::vector<PolyVectorField> ck_kernel(int n, int d, const QuadraticForm& q) {
    if (n < 2) throw Error("killing", "ck_kernel: needs n >= 2, got n=" + std::to_string(n));
    if (d < 0) throw Error("killing", "ck_kernel: negative degree");
    const MonomialIndex domain(n, d);
    const std::size_t m = domain.size();
    std::vector<RationalVector> kernel;
    if (d == 0) {
        for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
            RationalVector v(static_cast<std::size_t>(n) * m);
            v[k] = 1;
            kernel.push_back(std::move(v));
        }
    } else {
        kernel = ck_matrix(n, d, q).kernel_basis();
    }
    std::vector<PolyVectorField> out;
    for (const auto& v : kernel) {
        PolyVectorField xi(n, d);
        for (int k = 0; k < n; ++k)
            for (std::size_t e = 0; e < m; ++e) xi[k].add_term(domain[e], v[static_cast<std::size_t>(k) * m + e]);
        out.push_back(std::move(xi));
    }
    return out;
}

inline std::vector<PolyVectorField> ck_kernel(int n, int d) { return ck_kernel(n, d, QuadraticForm::standard(n)); }

/// [xi, eta]_i = sum_j (xi_j d_j eta_i - eta_j d_j xi_i).
inline PolyVectorField bracket(const PolyVectorField& xi, const PolyVectorField& eta) {
    if (xi.n() != eta.n()) throw Error("killing", "bracket of fields on different spaces");
    const int n = xi.n();
    PolyVectorField out(n, Poly::kInhomogeneous);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out[i] += xi[j].as_inhomogeneous() * eta[i].derivative(j).as_inhomogeneous();
            out[i] -= eta[j].as_inhomogeneous() * xi[i].derivative(j).as_inhomogeneous();
        }
    return out;
}

struct NamedField {
    std::string name;
    std::string kind; ///< translation, rotation, dilation, special_conformal
    PolyVectorField field;
};

/// P_i = d_i, M_ij = z_i d_j - z_j d_i (i < j), D = sum z_j d_j,
/// K_i = 2 z_i sum_j z_j d_j - q(z) d_i, for the standard form.
inline std::vector<NamedField> conformal_basis(int n) {
    if (n < 2) throw Error("killing", "conformal_basis: needs n >= 2");
    std::vector<NamedField> out;
    for (int i = 0; i < n; ++i) {
        PolyVectorField p(n, 0);
        p[i] = Poly::constant(n, 1);
        out.push_back({"P" + std::to_string(i + 1), "translation", p});
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            PolyVectorField m(n, 1);
            m[j] = Poly::variable(n, i);
            m[i] = -Poly::variable(n, j);
            out.push_back({"M" + std::to_string(i + 1) + std::to_string(j + 1), "rotation", m});
        }
    PolyVectorField dil(n, 1);
    for (int j = 0; j < n; ++j) dil[j] = Poly::variable(n, j);
    out.push_back({"D", "dilation", dil});
    const Poly q = QuadraticForm::standard(n).as_poly();
    for (int i = 0; i < n; ++i) {
        PolyVectorField k(n, 2);
        for (int j = 0; j < n; ++j) k[j] = Rational(2) * (Poly::variable(n, i) * Poly::variable(n, j));
        k[i] -= q;
        out.push_back({"K" + std::to_string(i + 1), "special_conformal", k});
    }
    return out;
}

namespace detail {

/// Flattens fields of degree <= max_degree into coordinate vectors.
class FieldCoordinates {
public:
    FieldCoordinates(int n, int max_degree) : n_(n) {
        for (int d = 0; d <= max_degree; ++d)
            for (const auto& e : monomial_basis(n, d)) monomials_.emplace(e, monomials_.size());
    }

    std::size_t size() const noexcept { return static_cast<std::size_t>(n_) * monomials_.size(); }

    RationalVector flatten(const PolyVectorField& xi) const {
        RationalVector v(size());
        for (int k = 0; k < n_; ++k)
            for (const auto& [e, c] : xi[k].terms()) {
                auto it = monomials_.find(e);
                if (it == monomials_.end()) throw Error("killing", "field degree exceeds coordinate range");
                v[static_cast<std::size_t>(k) * monomials_.size() + it->second] = c;
            }
        return v;
    }

private:
    int n_;
    std::map<Exponent, std::size_t> monomials_;
};

inline RationalVector flatten(const RationalMatrix& a) {
    RationalVector v;
    v.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
    return v;
}

} // namespace detail

/// Basis with exact structure constants c[a][b][c]: [X_a, X_b] = sum_c c[a][b][c] X_c.
struct LieAlgebraPresentation {
    std::vector<std::string> names;
    std::vector<std::vector<RationalVector>> structure_constants;

    std::size_t dim() const noexcept { return names.size(); }

    bool antisymmetric() const {
        for (std::size_t a = 0; a < dim(); ++a)
            for (std::size_t b = 0; b < dim(); ++b)
                for (std::size_t c = 0; c < dim(); ++c)
                    if (structure_constants[a][b][c] != -structure_constants[b][a][c]) return false;
        return true;
    }

    /// First basis triple violating the Jacobi identity, if any.
    std::optional<std::array<std::size_t, 3>> jacobi_violation() const {
        const std::size_t N = dim();
        const auto& C = structure_constants;
        Rational s;
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = a + 1; b < N; ++b)
                for (std::size_t c = b + 1; c < N; ++c)
                    for (std::size_t l = 0; l < N; ++l) {
                        s = 0;
                        for (std::size_t m = 0; m < N; ++m) {
                            s += C[a][b][m] * C[m][c][l];
                            s += C[b][c][m] * C[m][a][l];
                            s += C[c][a][m] * C[m][b][l];
                        }
                        if (sgn(s) != 0) return std::array<std::size_t, 3>{a, b, c};
                    }
        return std::nullopt;
    }
};

/// Structure constants of a family of elements under `br`, given a flattening
/// into coordinates. Throws IntegrityError naming the pair if a bracket leaves the span.
template <class Element, class Bracket, class Flatten>
LieAlgebraPresentation structure_constants(const std::vector<std::string>& names, const std::vector<Element>& basis,
                                           Bracket br, Flatten flat) {
    const std::size_t N = basis.size();
    std::vector<RationalVector> cols;
    for (const auto& x : basis) cols.push_back(flat(x));
    const RationalMatrix B = RationalMatrix::from_columns(cols.empty() ? 0 : cols[0].size(), cols);
    if (B.rank() != N) throw IntegrityError("killing", "basis elements are linearly dependent");
    LieAlgebraPresentation L{names, std::vector<std::vector<RationalVector>>(N, std::vector<RationalVector>(N, RationalVector(N)))};
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b) {
            const auto coords = B.solve(flat(br(basis[a], basis[b])));
            if (!coords)
                throw IntegrityError("killing", "bracket [" + names[a] + ", " + names[b] + "] leaves the span");
            for (std::size_t c = 0; c < N; ++c) {
                L.structure_constants[a][b][c] = (*coords)[c];
                L.structure_constants[b][a][c] = -(*coords)[c];
            }
        }
    return L;
}

inline LieAlgebraPresentation conformal_presentation(int n) {
    const auto named = conformal_basis(n);
    std::vector<std::string> names;
    std::vector<PolyVectorField> fields;
    for (const auto& f : named) {
        names.push_back(f.name);
        fields.push_back(f.field);
    }
    const detail::FieldCoordinates coords(n, 3);
    return structure_constants(names, fields, bracket, [&](const PolyVectorField& x) { return coords.flatten(x); });
}

/// Split form G = I_n (+) [[0,1],[1,0]] on C^{n+2}; index n is e_+, n+1 is e_-.
inline RationalMatrix split_form(int n) {
    const auto N = static_cast<std::size_t>(n + 2);
    RationalMatrix g(N, N);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) g(i, i) = 1;
    g(N - 2, N - 1) = g(N - 1, N - 2) = 1;
    return g;
}

/// Basis of so(G): G (E_ab - E_ba), a < b.
inline std::vector<RationalMatrix> so_basis(int n) {
    const auto N = static_cast<std::size_t>(n + 2);
    const RationalMatrix g = split_form(n);
    std::vector<RationalMatrix> out;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b) {
            RationalMatrix e(N, N);
            e(a, b) = 1;
            e(b, a) = -1;
            out.push_back(g * e);
        }
    return out;
}

inline bool in_so(const RationalMatrix& a, const RationalMatrix& g) {
    const RationalMatrix ga = g * a;
    return (ga + ga.transpose()).is_zero();
}

/// Field induced on the chart z |-> (z, 1, -q(z)/2) by A in so(G).
inline PolyVectorField induced_field(const RationalMatrix& A, int n) {
    const auto plus = static_cast<std::size_t>(n), minus = static_cast<std::size_t>(n + 1);
    const Poly half_q = ratio(-1, 2) * QuadraticForm::standard(n).as_poly().as_inhomogeneous();
    auto row_image = [&](std::size_t r) {
        Poly p(n, Poly::kInhomogeneous);
        for (int j = 0; j < n; ++j) p += A(r, static_cast<std::size_t>(j)) * Poly::variable(n, j).as_inhomogeneous();
        p += Poly::constant(n, A(r, plus)).as_inhomogeneous();
        p += A(r, minus) * half_q;
        return p;
    };
    const Poly s = row_image(plus);
    PolyVectorField xi(n, Poly::kInhomogeneous);
    for (int i = 0; i < n; ++i)
        xi[i] = row_image(static_cast<std::size_t>(i)) - s * Poly::variable(n, i).as_inhomogeneous();
    return xi;
}

inline RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

struct SoIsomorphismReport {
    int n = 0;
    std::vector<NamedField> basis;
    std::vector<RationalMatrix> images; ///< phi(X_a) in so(G)
    LieAlgebraPresentation conformal;   ///< structure constants of the field basis
    LieAlgebraPresentation matrices;    ///< structure constants of the images
    bool images_in_so = false;
    bool fields_conformal = false;
    bool bijective = false;
    bool homomorphism = false;
    bool structure_constants_equal = false;
    bool jacobi = false;
    bool nilpotent_duality = false;
    Rational duality_scalar; ///< phi(K_i) = c * phi(P_i)^T
    std::optional<std::pair<std::string, std::string>> offending_pair;

    bool ok() const {
        return images_in_so && fields_conformal && bijective && homomorphism && structure_constants_equal && jacobi &&
               nilpotent_duality;
    }
};

/// Builds phi: conf(C^n) -> so(G) as phi = -psi^{-1}, psi(A) = induced_field(A)
/// (fundamental fields of a left action bracket with the opposite sign), and
/// verifies it is a Lie algebra isomorphism by exact comparison.
inline SoIsomorphismReport so_np2_isomorphism(int n) {
    if (n < 3) throw Error("killing", "so_np2_isomorphism: needs n >= 3, got n=" + std::to_string(n));
    SoIsomorphismReport rep;
    rep.n = n;
    rep.basis = conformal_basis(n);
    const std::size_t N = rep.basis.size();
    const QuadraticForm q = QuadraticForm::standard(n);
    const RationalMatrix g = split_form(n);
    const auto so = so_basis(n);
    const detail::FieldCoordinates coords(n, 3);

    std::vector<RationalVector> basis_cols;
    for (const auto& f : rep.basis) basis_cols.push_back(coords.flatten(f.field));
    const RationalMatrix B = RationalMatrix::from_columns(coords.size(), basis_cols);

    // psi in the named basis: column k = coordinates of induced_field(so[k])
    rep.fields_conformal = true;
    RationalMatrix psi(N, so.size());
    for (std::size_t k = 0; k < so.size(); ++k) {
        const PolyVectorField xi = induced_field(so[k], n);
        if (!is_conformal_killing(xi, q)) rep.fields_conformal = false;
        const auto c = B.solve(coords.flatten(xi));
        if (!c) throw IntegrityError("killing", "induced field of so basis element " + std::to_string(k) +
                                                    " is not in the span of the conformal basis");
        for (std::size_t a = 0; a < N; ++a) psi(a, k) = (*c)[a];
    }
    const auto psi_inv = psi.inverse();
    rep.bijective = psi.rows() == psi.cols() && psi_inv.has_value();
    if (!rep.bijective) return rep;

    const auto M = static_cast<std::size_t>(n + 2);
    rep.images_in_so = true;
    for (std::size_t a = 0; a < N; ++a) {
        RationalMatrix img(M, M);
        for (std::size_t k = 0; k < so.size(); ++k)
            if (sgn((*psi_inv)(k, a)) != 0) img = img + (-(*psi_inv)(k, a)) * so[k];
        if (!in_so(img, g)) rep.images_in_so = false;
        rep.images.push_back(std::move(img));
    }

    rep.conformal = conformal_presentation(n);
    std::vector<std::string> names;
    for (const auto& f : rep.basis) names.push_back(f.name);
    rep.matrices = structure_constants(names, rep.images, commutator, detail::flatten);

    rep.homomorphism = true;
    for (std::size_t a = 0; a < N && rep.homomorphism; ++a)
        for (std::size_t b = a + 1; b < N; ++b) {
            RationalMatrix lhs(M, M);
            for (std::size_t c = 0; c < N; ++c)
                if (sgn(rep.conformal.structure_constants[a][b][c]) != 0)
                    lhs = lhs + rep.conformal.structure_constants[a][b][c] * rep.images[c];
            if (!(lhs == commutator(rep.images[a], rep.images[b]))) {
                rep.homomorphism = false;
                rep.offending_pair = std::make_pair(names[a], names[b]);
                break;
            }
        }
    rep.structure_constants_equal = rep.conformal.structure_constants == rep.matrices.structure_constants;
    if (!rep.structure_constants_equal && !rep.offending_pair)
        for (std::size_t a = 0; a < N && !rep.offending_pair; ++a)
            for (std::size_t b = 0; b < N; ++b)
                if (rep.conformal.structure_constants[a][b] != rep.matrices.structure_constants[a][b]) {
                    rep.offending_pair = std::make_pair(names[a], names[b]);
                    break;
                }
    rep.jacobi = rep.conformal.antisymmetric() && !rep.conformal.jacobi_violation() && rep.matrices.antisymmetric() &&
                 !rep.matrices.jacobi_violation();

    // Translations P_i (indices 0..n-1) and special conformal K_i (last n).
    rep.nilpotent_duality = true;
    std::optional<Rational> scalar;
    for (int i = 0; i < n; ++i) {
        const RationalMatrix& P = rep.images[static_cast<std::size_t>(i)];
        const RationalMatrix& K = rep.images[N - static_cast<std::size_t>(n) + static_cast<std::size_t>(i)];
        if (!(P * P * P).is_zero() || !(K * K * K).is_zero()) rep.nilpotent_duality = false;
        const RationalMatrix Pt = P.transpose();
        // find c with K = c * P^T
        std::optional<Rational> c;
        for (std::size_t r = 0; r < M && !c; ++r)
            for (std::size_t s = 0; s < M; ++s)
                if (sgn(Pt(r, s)) != 0) {
                    c = K(r, s) / Pt(r, s);
                    break;
                }
        if (!c || sgn(*c) == 0 || !(K == *c * Pt) || (scalar && *scalar != *c)) {
            rep.nilpotent_duality = false;
            continue;
        }
        scalar = c;
    }
    if (scalar) rep.duality_scalar = *scalar;
    return rep;
}

} // namespace liouville
