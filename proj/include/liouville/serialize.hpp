#pragma once

// JSON and text encodings shared by the CLI and the tests.
//   Weight          -> [a_1, ..., a_n]
//   IsotypicSum     -> [{"weight": [...], "multiplicity": m}, ...]
//   Poly            -> [{"exponents": [...], "coeff": "p/q"}, ...]
//   QuadraticForm   -> [["p/q", ...], ...]
//   GradedCohomology-> {"<i>": [{weight, multiplicity, dual}], "dims": {"<i>": dim}}

#include "bott.hpp"
#include "cech.hpp"
#include "killing.hpp"
#include "poly.hpp"
#include "reconf.hpp"
#include "weights.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace liouville {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Integers as JSON numbers when they fit in 64 bits, strings otherwise.
inline json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

inline json to_json(const Weight& w) { return w.entries(); }

inline Weight weight_from_json(const json& j) {
    if (!j.is_array()) throw Error("weights", "weight JSON must be an integer array");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error("weights", "weight JSON must be an integer array");
        v.push_back(x.get<int>());
    }
    return Weight(std::move(v));
}

inline json to_json(const IsotypicSum& s) {
    json arr = json::array();
    for (const auto& [w, m] : s.terms()) arr.push_back({{"weight", to_json(w)}, {"multiplicity", m}});
    return arr;
}

inline IsotypicSum isotypic_from_json(const json& j) {
    IsotypicSum s;
    for (const auto& rec : j) s.add(weight_from_json(rec.at("weight")), rec.at("multiplicity").get<long>());
    return s;
}

inline json to_json(const Poly& f) {
    json arr = json::array();
    for (const auto& [e, c] : f.terms()) arr.push_back({{"exponents", e}, {"coeff", c.get_str()}});
    return arr;
}

inline Poly poly_from_json(const json& j, int n) {
    Poly p(n, Poly::kInhomogeneous);
    for (const auto& rec : j) p.add_term(rec.at("exponents").get<Exponent>(), parse_rational(rec.at("coeff").get<std::string>()));
    return p;
}

inline json to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
        rows.push_back(std::move(r));
    }
    return rows;
}

inline json to_json(const QuadraticForm& q) { return to_json(q.matrix()); }

inline QuadraticForm quadratic_form_from_json(const json& j) {
    const std::size_t n = j.size();
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (j[i].size() != n) throw Error("polyspaces", "quadratic form JSON must be square");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = parse_rational(j[i][k].get<std::string>());
    }
    return QuadraticForm(std::move(m));
}

inline json to_json(const BottResult& r) {
    if (!r) return {{"zero", true}};
    return {{"zero", false}, {"degree", r->degree}, {"weight", to_json(r->weight)}, {"dual", to_json(dualize(r->weight))}};
}

inline json to_json(const GradedCohomology& g) {
    json out = json::object();
    json dims = json::object();
    for (const auto& [i, e] : g.groups()) {
        json group = json::array();
        if (e.decomposition)
            for (const auto& [w, m] : e.decomposition->terms())
                group.push_back({{"weight", to_json(w)}, {"multiplicity", m}, {"dual", to_json(dualize(w))}});
        out[std::to_string(i)] = std::move(group);
        dims[std::to_string(i)] = integer_json(e.dim);
    }
    out["dims"] = std::move(dims);
    return out;
}

inline json to_json(const CechSlice& s) {
    return {{"n", s.n}, {"m", s.m}, {"cochain_dims", s.cochain_dims}, {"cohomology_dims", s.cohomology_dims}};
}

inline json to_json(const CechTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back({{"m", r.m}, {"cohomology_dims", r.cohomology_dims}});
    json by_degree = json::object();
    for (const auto& [deg, dims] : t.by_degree) by_degree[std::to_string(deg)] = dims;
    return {{"schema_version", kSchemaVersion}, {"n", t.n}, {"box", t.box}, {"slices", t.slices},
            {"totals", t.totals}, {"by_total_degree", by_degree}, {"rows", rows}};
}

inline json to_json(const PolyVectorField& xi) {
    json comps = json::array();
    for (const auto& c : xi.components()) comps.push_back(to_json(c));
    return comps;
}

inline json to_json(const LieAlgebraPresentation& L) {
    json sc = json::array();
    for (std::size_t a = 0; a < L.dim(); ++a)
        for (std::size_t b = a + 1; b < L.dim(); ++b)
            for (std::size_t c = 0; c < L.dim(); ++c)
                if (sgn(L.structure_constants[a][b][c]) != 0)
                    sc.push_back({{"a", L.names[a]}, {"b", L.names[b]}, {"c", L.names[c]},
                                  {"coeff", L.structure_constants[a][b][c].get_str()}});
    return {{"basis", L.names}, {"structure_constants", sc}};
}

/// How table degrees are labeled on output.
enum class Indexing {
    bundle,  ///< row d: H^0 and H^1 of S^d(G)(1)|_Q
    theorem, ///< H^0 by vector-field degree, H^1 by k where the summand is Coker y_{k,q}
};

struct TableEntry {
    int degree;
    int i;
    Integer dim;
    std::string source;
};

inline std::vector<TableEntry> table_entries(const CohomologyTable& t, Indexing indexing) {
    std::vector<TableEntry> out;
    for (const auto& row : t.rows)
        for (int i = 0; i <= 1; ++i) {
            const auto* e = row.cohomology.at(i);
            const int degree = (indexing == Indexing::theorem && i == 1) ? row.d - 1 : row.d;
            if (degree < 0) continue;
            out.push_back({degree, i, e ? e->dim : Integer(0), e ? e->source : std::string("les")});
        }
    std::stable_sort(out.begin(), out.end(),
                     [](const TableEntry& a, const TableEntry& b) { return a.degree != b.degree ? a.degree < b.degree : a.i < b.i; });
    return out;
}

inline json to_json(const CohomologyTable& t, Indexing indexing) {
    json entries = json::array();
    for (const auto& e : table_entries(t, indexing))
        entries.push_back({{"degree", e.degree}, {"i", e.i}, {"dim", integer_json(e.dim)}, {"source", e.source}});
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row = {{"d", r.d}, {"cohomology", to_json(r.cohomology)}};
        if (r.exact)
            row["exact_y"] = {{"k", r.d - 1}, {"rank", integer_json(r.exact->rank)}, {"ker", integer_json(r.exact->ker)},
                              {"coker", integer_json(r.exact->coker)}};
        if (r.formula_coker) row["formula_coker"] = integer_json(*r.formula_coker);
        rows.push_back(std::move(row));
    }
    return {{"schema_version", kSchemaVersion},
            {"n", t.n},
            {"dmax", t.dmax},
            {"indexing", indexing == Indexing::theorem ? "theorem" : "bundle"},
            {"h0_total", integer_json(t.h0_total)},
            {"h1_total_truncated", integer_json(t.h1_total)},
            {"entries", entries},
            {"rows", rows}};
}

} // namespace liouville
