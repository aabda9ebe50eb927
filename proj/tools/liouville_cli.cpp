// liouville: command-line front end.
// Exit codes: 0 ok, 1 usage error, 2 integrity failure.

#include <liouville/bott.hpp>
#include <liouville/cech.hpp>
#include <liouville/killing.hpp>
#include <liouville/reconf.hpp>
#include <liouville/selftest.hpp>
#include <liouville/serialize.hpp>
#include <liouville/young_map.hpp>
#include <liouville/young_symmetrizer.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace liouville;

namespace {

using Row = std::vector<std::string>;

// One result in all three formats. Pretty output is the TSV table aligned.
struct Output {
    json doc;
    std::string title;
    Row header;
    std::vector<Row> rows;
};

std::string str(const Integer& z) { return z.get_str(); }
std::string str(long v) { return std::to_string(v); }

void emit(const Output& out, const std::string& format) {
    if (format == "json") {
        std::cout << out.doc.dump(2) << '\n';
    } else if (format == "tsv") {
        auto line = [](const Row& r) {
            for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "\t" : "") << r[i];
            std::cout << '\n';
        };
        line(out.header);
        for (const auto& r : out.rows) line(r);
    } else {
        std::vector<std::size_t> width(out.header.size(), 0);
        for (const auto* r : {&out.header})
            for (std::size_t i = 0; i < r->size(); ++i) width[i] = std::max(width[i], (*r)[i].size());
        for (const auto& r : out.rows)
            for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
        std::cout << out.title << '\n';
        auto line = [&](const Row& r) {
            std::string s;
            for (std::size_t i = 0; i < r.size(); ++i) {
                s += r[i];
                if (i + 1 < r.size()) s += std::string(width[i] - r[i].size() + 2, ' ');
            }
            std::cout << "  " << s << '\n';
        };
        line(out.header);
        for (const auto& r : out.rows) line(r);
    }
}

json envelope(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

Weight parse_weight(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            v.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error("cli", "cannot parse weight entry '" + item + "'");
        }
    }
    if (v.empty()) throw Error("cli", "empty weight");
    return Weight(std::move(v));
}

void oracle_line(bool ok, const std::string& what) {
    std::cerr << "oracle " << (ok ? "ok" : "MISMATCH") << ": " << what << '\n';
    if (!ok) throw IntegrityError("cli", "oracle mismatch: " + what);
}

// Brute force over S_n: the w with w(a + rho) - rho dominant, degree = length(w).
BottResult bott_brute_force(const Weight& a) {
    const std::size_t n = a.size();
    std::vector<long> shifted(n);
    for (std::size_t i = 0; i < n; ++i) shifted[i] = a[i] + static_cast<long>(n - i);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BottResult found;
    int hits = 0;
    do {
        bool strict = true;
        for (std::size_t i = 0; i + 1 < n; ++i) strict = strict && shifted[perm[i]] > shifted[perm[i + 1]];
        if (!strict) continue;
        ++hits;
        int length = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) length += perm[i] > perm[j];
        std::vector<int> lambda(n);
        for (std::size_t i = 0; i < n; ++i) lambda[i] = static_cast<int>(shifted[perm[i]] - static_cast<long>(n - i));
        found = BottClass{length, Weight(lambda)};
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (hits > 1) throw IntegrityError("cli", "several sorting permutations");
    return found;
}

Output cohomology_output(const std::string& command, const GradedCohomology& g, json doc, const std::string& title) {
    Output out;
    doc["cohomology"] = to_json(g);
    doc["euler_characteristic"] = integer_json(g.euler_characteristic());
    out.doc = std::move(doc);
    out.title = title;
    out.header = {"i", "dim", "source", "weight", "multiplicity", "dual"};
    for (const auto& [i, e] : g.groups()) {
        if (e.decomposition && !e.decomposition->empty()) {
            for (const auto& [w, m] : e.decomposition->terms())
                out.rows.push_back({str(i), str(e.dim), e.source, w.str(), str(m), dualize(w).str()});
        } else {
            out.rows.push_back({str(i), str(e.dim), e.source, "-", "-", "-"});
        }
    }
    (void)command;
    return out;
}

struct Common {
    std::string format = "pretty";
    bool oracle = false;
    std::uint64_t seed = 1;
};

Output cmd_bott(const std::string& text, const Common& c) {
    const Weight a = parse_weight(text);
    const BottResult r = bott_cohomology(a);
    if (c.oracle) {
        if (a.size() > 9) throw Error("cli", "--oracle for bott enumerates S_n and needs n <= 9");
        oracle_line(bott_brute_force(a) == r, "S_n enumeration for " + a.str());
    }
    Output out;
    out.doc = envelope("bott");
    out.doc["weight"] = to_json(a);
    out.doc["result"] = to_json(r);
    out.title = "Bott: H^*(P, O(" + a.str() + "))";
    out.header = {"weight", "zero", "degree", "lambda", "dual", "dim"};
    if (r)
        out.rows.push_back({a.str(), "false", str(r->degree), r->weight.str(), dualize(r->weight).str(),
                            str(weyl_dim(r->weight))});
    else
        out.rows.push_back({a.str(), "true", "-", "-", "-", "0"});
    return out;
}

Output cmd_sheaf(int n, int d, int b, bool quadric, const Common& c) {
    json doc = envelope("sheaf");
    doc["n"] = n;
    doc["d"] = d;
    doc["b"] = b;
    doc["space"] = quadric ? "Q" : "P";
    if (!quadric) {
        const auto g = sdg_cohomology_on_P(n, d, b);
        doc["bott_weight"] = to_json(sdg_weight(n, d, b));
        if (c.oracle) {
            for (const auto& [i, e] : g.groups()) oracle_line(e.dim == dim(*e.decomposition), "Weyl dimension of H^" + str(i));
        }
        return cohomology_output("sheaf", g, std::move(doc),
                                 "H^*(P, S^" + str(d) + "(G)(" + str(b) + ")), n=" + str(n));
    }
    if (b != 1) throw Error("cli", "--quadric restricts S^d(G)(1); use --b 1");
    const auto g = les_restriction_to_Q(n, d);
    if (c.oracle) {
        const Integer chi = sdg_cohomology_on_P(n, d, 1).euler_characteristic() -
                            sdg_cohomology_on_P(n, d, -1).euler_characteristic();
        oracle_line(chi == g.euler_characteristic(), "Euler characteristic of the restriction sequence");
        if (d >= 3 && n <= 5) {
            const auto kc = kernel_cokernel_dims(n, d - 1);
            oracle_line(kc.coker == g.dim(1), "H^1 equals exact coker y_{" + str(d - 1) + ",q}");
        }
    }
    return cohomology_output("sheaf", g, std::move(doc), "H^*(Q, S^" + str(d) + "(G)(1)|_Q), n=" + str(n));
}

Output cmd_cech(int n, int box, const Common& c) {
    const CechTable t = punctured_affine_table(n, box, [&](const CechSlice& s) {
        if (!c.oracle) return;
        long chi_c = 0, chi_h = 0;
        for (std::size_t p = 0; p < s.cochain_dims.size(); ++p) {
            const long sign = p % 2 ? -1 : 1;
            chi_c += sign * static_cast<long>(s.cochain_dims[p]);
            chi_h += sign * static_cast<long>(s.cohomology_dims[p]);
        }
        if (chi_c != chi_h) oracle_line(false, "Euler characteristic of a Cech slice");
    });
    if (c.oracle) oracle_line(true, "Euler characteristic of " + str(static_cast<long>(t.slices)) + " Cech slices");
    Output out;
    out.doc = envelope("cech");
    out.doc.update(to_json(t));
    out.title = "Cech cohomology of A^" + str(n) + " minus 0, |m_i| <= " + str(box);
    out.header = {"m"};
    for (int p = 0; p < n; ++p) out.header.push_back("H" + str(p));
    for (const auto& r : t.rows) {
        Row row{Weight(r.m).str()};
        for (auto x : r.cohomology_dims) row.push_back(str(static_cast<long>(x)));
        out.rows.push_back(std::move(row));
    }
    Row total{"total"};
    for (auto x : t.totals) total.push_back(str(static_cast<long>(x)));
    out.rows.push_back(std::move(total));
    return out;
}

Output cmd_ydq(int n, int d, const std::string& triplets, const Common& c) {
    const auto q = QuadraticForm::standard(n);
    const auto kc = kernel_cokernel_dims(n, d, q);
    const auto N = static_cast<std::size_t>(n);
    const Integer target = weyl_dim(Weight::padded({d, 2}, N));
    if (!triplets.empty()) {
        std::ofstream f(triplets);
        if (!f) throw Error("cli", "cannot write " + triplets);
        y_matrix(n, d, q).write_triplets(f);
    }
    if (c.oracle) {
        const auto P = projector_matrix(n, d);
        oracle_line(P * P == P, "Casimir projector is idempotent");
        oracle_line(Integer(static_cast<unsigned long>(P.rank())) == target, "projector rank equals Weyl dimension");
        if (d + 2 <= kMaxOracleBoxes && n <= kMaxOracleN) {
            const auto res = young_symmetrizer_oracle(Weight::padded({d, 2}, N), n, &q);
            oracle_line(Integer(static_cast<unsigned long>(res.vertical_map->rank())) == kc.rank,
                        "Young symmetrizer rank of f (x) q");
        } else {
            std::cerr << "oracle skipped: Young symmetrizer needs d+2 <= " << kMaxOracleBoxes << " and n <= "
                      << kMaxOracleN << '\n';
        }
        const auto kernel = y_kernel_basis(n, d, q);
        for (std::size_t i = 0; i < kernel.size(); ++i)
            oracle_line(plane_harmonicity_test(kernel[i], q, 20, c.seed + i), "kernel element " + str(long(i)) +
                                                                                 " is harmonic on isotropic planes");
    }
    Output out;
    out.doc = envelope("ydq");
    out.doc["n"] = n;
    out.doc["d"] = d;
    out.doc["domain_dim"] = integer_json(dim_sym(n, d));
    out.doc["target_dim"] = integer_json(target);
    out.doc["rank"] = integer_json(kc.rank);
    out.doc["ker"] = integer_json(kc.ker);
    out.doc["coker"] = integer_json(kc.coker);
    out.title = "y_{" + str(d) + ",q}: S^" + str(d) + " -> Sigma^(" + str(d) + ",2), n=" + str(n);
    out.header = {"n", "d", "domain_dim", "target_dim", "rank", "ker", "coker"};
    out.rows.push_back({str(n), str(d), str(dim_sym(n, d)), str(target), str(kc.rank), str(kc.ker), str(kc.coker)});
    return out;
}

Output cmd_killing(int n, int d, const Common& c) {
    Output out;
    out.doc = envelope("killing");
    out.doc["n"] = n;
    if (d >= 0) {
        const auto basis = ck_kernel(n, d);
        out.doc["d"] = d;
        out.doc["dim"] = basis.size();
        json fields = json::array();
        for (const auto& xi : basis) fields.push_back(to_json(xi));
        out.doc["basis"] = std::move(fields);
        out.title = "conformal Killing fields of degree " + str(d) + ", n=" + str(n);
        out.header = {"index", "field"};
        for (std::size_t i = 0; i < basis.size(); ++i) out.rows.push_back({str(long(i)), basis[i].str()});
        if (c.oracle && n >= 3) {
            const std::size_t expect = d == 0 ? n : d == 1 ? n * (n - 1) / 2 + 1 : d == 2 ? n : 0;
            oracle_line(basis.size() == expect, "kernel dimension matches the so(n+2) grading");
        }
        return out;
    }
    const auto rep = so_np2_isomorphism(n);
    json checks = {{"images_in_so", rep.images_in_so},       {"fields_conformal", rep.fields_conformal},
                   {"bijective", rep.bijective},             {"homomorphism", rep.homomorphism},
                   {"structure_constants_equal", rep.structure_constants_equal},
                   {"jacobi", rep.jacobi},                   {"nilpotent_duality", rep.nilpotent_duality}};
    out.doc["dim"] = rep.basis.size();
    out.doc["checks"] = checks;
    out.doc["duality_scalar"] = rep.duality_scalar.get_str();
    json basis = json::array();
    for (const auto& b : rep.basis) basis.push_back({{"name", b.name}, {"kind", b.kind}, {"field", to_json(b.field)}});
    out.doc["basis"] = std::move(basis);
    out.doc["presentation"] = to_json(rep.conformal);
    out.title = "conformal algebra of A^" + str(n) + " vs so(" + str(n + 2) + ")";
    out.header = {"name", "kind", "field"};
    for (const auto& b : rep.basis) out.rows.push_back({b.name, b.kind, b.field.str()});
    for (const auto& [k, v] : checks.items()) out.rows.push_back({k, "check", v.get<bool>() ? "ok" : "FAILED"});
    if (c.oracle) {
        for (int deg = 0; deg <= 3; ++deg) {
            const auto count = std::count_if(rep.basis.begin(), rep.basis.end(),
                                             [&](const NamedField& f) { return f.field.degree() == deg; });
            oracle_line(static_cast<std::size_t>(count) == ck_kernel(n, deg).size(),
                        "degree " + str(deg) + " basis spans the conformal Killing kernel");
        }
    }
    if (!rep.ok()) {
        emit(out, c.format);
        std::string why = rep.offending_pair ? " at [" + rep.offending_pair->first + "," + rep.offending_pair->second + "]" : "";
        throw IntegrityError("killing", "so(n+2) isomorphism check failed" + why);
    }
    return out;
}

Output cmd_reconf(int n, int dmax, const std::string& indexing_name, const Common& c) {
    const Indexing indexing = indexing_name == "bundle" ? Indexing::bundle : Indexing::theorem;
    const auto t = reconf_table(n, dmax);
    if (c.oracle) {
        for (const auto& row : t.rows) {
            const Integer chi = sdg_cohomology_on_P(n, row.d, 1).euler_characteristic() -
                                sdg_cohomology_on_P(n, row.d, -1).euler_characteristic();
            if (chi != row.cohomology.euler_characteristic()) oracle_line(false, "Euler characteristic at d=" + str(row.d));
            if (n <= 5 && row.d <= 4)
                if (Integer(static_cast<unsigned long>(ck_kernel(n, row.d).size())) != row.h0())
                    oracle_line(false, "H^0 equals conformal Killing kernel at d=" + str(row.d));
        }
        oracle_line(true, "Euler characteristics and H^0 against conformal Killing kernels");
    }
    Output out;
    out.doc = envelope("reconf");
    out.doc.update(to_json(t, indexing));
    out.title = "cohomology of the derived conformal algebra, n=" + str(n) + ", dmax=" + str(dmax) + " (" +
                indexing_name + " indexing)";
    out.header = {"degree", "i", "dim", "source"};
    for (const auto& e : table_entries(t, indexing)) out.rows.push_back({str(e.degree), str(e.i), str(e.dim), e.source});
    out.rows.push_back({"total", "0", str(t.h0_total), "sum"});
    out.rows.push_back({"total", "1", str(t.h1_total), "sum"});
    return out;
}

Output cmd_continuity(int n_lo, int n_hi, int dmax) {
    const auto report = continuity_report(n_lo, n_hi, dmax);
    Output out;
    out.doc = envelope("continuity");
    out.doc["dmax"] = dmax;
    json rows = json::array();
    out.title = "graded H^0 / H^1 by dimension, d <= " + str(dmax);
    out.header = {"n", "i"};
    for (int d = 0; d <= dmax; ++d) out.header.push_back("d" + str(d));
    out.header.push_back("total");
    for (const auto& r : report) {
        json h0 = json::array(), h1 = json::array();
        Row r0{str(r.n), "0"}, r1{str(r.n), "1"};
        for (const auto& x : r.h0) {
            h0.push_back(integer_json(x));
            r0.push_back(str(x));
        }
        for (const auto& x : r.h1) {
            h1.push_back(integer_json(x));
            r1.push_back(str(x));
        }
        r0.push_back(str(r.h0_total));
        r1.push_back(str(r.h1_total));
        rows.push_back({{"n", r.n}, {"h0", h0}, {"h1", h1}, {"h0_total", integer_json(r.h0_total)},
                        {"h1_total", integer_json(r.h1_total)}});
        out.rows.push_back(std::move(r0));
        out.rows.push_back(std::move(r1));
    }
    out.doc["rows"] = std::move(rows);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for conformal vector fields and their derived deformations"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}))
        ->capture_default_str();
    app.add_flag("--oracle", common.oracle, "cross-check against an independent computation (report on stderr)");
    app.add_option("--seed", common.seed, "seed for randomized checks")->capture_default_str();

    int n = 3, d = 0, dmax = 8, b = 1, box = 2, n_min = 2, n_max = 5, kd = -1;
    std::string weight, triplets, indexing = "theorem";
    bool quadric = false;

    auto* bott = app.add_subcommand("bott", "cohomology of a line bundle on the flag variety");
    bott->add_option("--weight", weight, "comma-separated weight a_1,...,a_n")->required();

    auto* sheaf = app.add_subcommand("sheaf", "cohomology of S^d(G)(b) on P(C^n), or its restriction to Q");
    sheaf->add_option("--n", n)->required()->check(CLI::Range(2, 64));
    sheaf->add_option("--d", d)->required()->check(CLI::Range(0, 1000));
    sheaf->add_option("--b", b)->capture_default_str();
    sheaf->add_flag("--quadric", quadric, "restrict to the quadric q = 0 (b = 1)");

    auto* cech = app.add_subcommand("cech", "Cech cohomology of A^n minus the origin on a box of multidegrees");
    cech->add_option("--n", n)->required()->check(CLI::Range(1, 8));
    cech->add_option("--box", box)->capture_default_str()->check(CLI::Range(0, 64));

    auto* ydq = app.add_subcommand("ydq", "kernel and cokernel of y_{d,q}");
    ydq->add_option("--n", n)->required()->check(CLI::Range(2, 16));
    ydq->add_option("--d", d)->required()->check(CLI::Range(2, 64));
    ydq->add_option("--triplets", triplets, "write the matrix as 'row col value' triplets to this file");

    auto* killing = app.add_subcommand("killing", "conformal Killing fields and the so(n+2) isomorphism");
    killing->add_option("--n", n)->required()->check(CLI::Range(2, 12));
    killing->add_option("--d", kd, "list the kernel in this degree instead")->check(CLI::Range(0, 16));

    auto* reconf = app.add_subcommand("reconf", "graded H^0 and H^1 of the derived conformal algebra");
    reconf->add_option("--n", n)->required()->check(CLI::Range(3, 64));
    reconf->add_option("--dmax", dmax)->capture_default_str()->check(CLI::Range(3, 1000));
    reconf->add_option("--indexing", indexing, "degree labels for H^1")
        ->check(CLI::IsMember({"theorem", "bundle"}))
        ->capture_default_str();

    auto* continuity = app.add_subcommand("continuity", "graded dimensions across n");
    continuity->add_option("--n-min", n_min)->capture_default_str()->check(CLI::Range(2, 6));
    continuity->add_option("--n-max", n_max)->capture_default_str()->check(CLI::Range(2, 6));
    continuity->add_option("--dmax", dmax)->capture_default_str()->check(CLI::Range(3, 1000));

    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*selftest) return run_selftest(std::cout) ? 0 : 2;
        Output out;
        if (*bott) out = cmd_bott(weight, common);
        else if (*sheaf) out = cmd_sheaf(n, d, b, quadric, common);
        else if (*cech) out = cmd_cech(n, box, common);
        else if (*ydq) out = cmd_ydq(n, d, triplets, common);
        else if (*killing) out = cmd_killing(n, kd, common);
        else if (*reconf) out = cmd_reconf(n, dmax, indexing, common);
        else if (*continuity) out = cmd_continuity(n_min, n_max, dmax);
        emit(out, common.format);
    } catch (const IntegrityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
