#include "parametrix/analysis.hpp"

#include <algorithm>
#include <chrono>

#include "parametrix/linalg.hpp"

namespace parametrix {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> numbered(const std::string& stem, int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

}  // namespace

std::string render_linear_combination(const ModuleVector& v, const std::vector<std::string>& names,
                                      const MonomialOrder& ord) {
    struct Piece {
        int comp;
        Monomial mon;
        Rational c;
    };
    std::vector<Piece> pieces;
    for (int i = 0; i < v.rank(); ++i)
        for (const auto& [m, c] : v.comps[static_cast<size_t>(i)].terms())
            pieces.push_back({i, m, c});
    if (pieces.empty()) return "0";
    std::sort(pieces.begin(), pieces.end(), [&](const Piece& a, const Piece& b) {
        return module_term_cmp(a.comp, a.mon, b.comp, b.mon, ord) > 0;
    });
    std::string out;
    bool first = true;
    for (const auto& p : pieces) {
        bool neg = p.c.sign() < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        Rational a = neg ? -p.c : p.c;
        if (!a.is_one()) {
            out += a.str();
            out += '*';
        }
        if (!p.mon.is_one()) {
            out += p.mon.str();
            out += '*';
        }
        out += names[static_cast<size_t>(p.comp)];
    }
    return out;
}

OperatorMatrix compatibility_conditions(const OperatorMatrix& a, const MonomialOrder& ord) {
    int r = a.rows(), m = a.cols(), n = a.nvars();
    if (r == 0) return OperatorMatrix(0, 0, n);
    SyzygyMatrix syz = syzygies(a.row_vectors(), ord, m, n);
    std::vector<ModuleVector> rows = minimize_generators(syz.rows, ord, r, n);
    OperatorMatrix out = OperatorMatrix::from_rows(rows, r, n);
    out.set_unknown_names(a.equation_names());
    out.set_equation_names(numbered("cc", static_cast<int>(rows.size())));
    return out;
}

AnnihilatorResult find_annihilator(const ModuleVector& e, const GroebnerBasis& gb, int bound) {
    const int n = gb.nvars();
    const int m = gb.rank();
    // dense coordinates for normal forms up to the reachable degree
    int nf_degree = bound + std::max(0, e.max_total_degree());
    std::map<Monomial, size_t, MonomialStructuralLess> mono_index;
    {
        size_t next = 0;
        for (int d = 0; d <= nf_degree; ++d)
            for (const auto& mon : monomials_of_degree(n, d)) mono_index.emplace(mon, next++);
    }
    const size_t dim = mono_index.size() * static_cast<size_t>(m);
    RationalEchelon ech;
    std::vector<Monomial> fed;
    for (int d = 0; d <= bound; ++d) {
        for (const auto& mon : monomials_of_degree(n, d)) {
            ModuleVector nf = normal_form(e.mul_term(mon, Rational(1)), gb);
            if (nf.is_zero()) {
                AnnihilatorResult res;
                res.poly = Polynomial::term(mon, Rational(1));
                return res;
            }
            std::vector<Rational> coords(dim, Rational(0));
            for (int k = 0; k < m; ++k)
                for (const auto& [mm, cc] : nf.comps[static_cast<size_t>(k)].terms())
                    coords[static_cast<size_t>(k) * mono_index.size() + mono_index.at(mm)] = cc;
            auto dep = ech.feed(coords);
            if (dep) {
                Polynomial p(n);
                for (size_t i = 0; i < dep->size() - 1; ++i)
                    p.add_term(fed[i], (*dep)[i]);
                p.add_term(mon, dep->back());
                AnnihilatorResult res;
                res.poly = std::move(p);
                return res;
            }
            fed.push_back(mon);
        }
    }
    AnnihilatorResult res;
    res.exhausted = true;
    return res;
}

TestReport torsion_free_test(const OperatorMatrix& a, const MonomialOrder& ord) {
    TestReport rep;
    auto t0 = std::chrono::steady_clock::now();
    rep.input = a;

    rep.adjoint_of_input = adjoint(a);
    rep.timing_ms["adjoint"] = ms_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    rep.cc_of_adjoint = compatibility_conditions(rep.adjoint_of_input, ord);
    rep.timing_ms["cc_of_adjoint"] = ms_since(t1);

    auto t2 = std::chrono::steady_clock::now();
    int s = rep.cc_of_adjoint.rows();
    rep.candidate_parametrization = adjoint(rep.cc_of_adjoint);
    rep.candidate_parametrization.set_unknown_names(numbered("phi", s));
    rep.candidate_parametrization.set_equation_names(a.unknown_names());
    rep.timing_ms["candidate"] = ms_since(t2);

    auto t3 = std::chrono::steady_clock::now();
    rep.cc_of_candidate = compatibility_conditions(rep.candidate_parametrization, ord);
    rep.timing_ms["cc_of_candidate"] = ms_since(t3);

    auto t4 = std::chrono::steady_clock::now();
    // invariants of the construction (Remark 4.3): D o D_{-1} = 0 and D <= D'
    if (!compose(a, rep.candidate_parametrization).is_zero())
        throw std::logic_error("torsion test: D o D_{-1} != 0");
    const int m = a.cols(), n = a.nvars();
    if (a.rows() > 0) {
        GroebnerBasis gb_dprime =
            buchberger(rep.cc_of_candidate.row_vectors(), ord, m, n);
        for (int i = 0; i < a.rows(); ++i)
            if (!membership(a.row(i), gb_dprime))
                throw std::logic_error("torsion test: D <= D' violated");
    }

    GroebnerBasis gb_d = buchberger(a.row_vectors(), ord, m, n);
    std::vector<ModuleVector> extended = a.row_vectors();
    GroebnerBasis gb_ext = gb_d;
    int bound = std::max(a.max_order(), rep.cc_of_candidate.max_order()) + 3;
    for (const auto& v : rep.cc_of_candidate.row_vectors()) {
        if (membership(v, gb_ext)) continue;
        TorsionCertificate cert;
        cert.element = v;
        cert.element_label = render_linear_combination(v, a.unknown_names(), ord);
        AnnihilatorResult ann = find_annihilator(v, gb_d, bound);
        cert.annihilator = ann.poly;
        cert.exhausted = ann.exhausted;
        rep.torsion.push_back(std::move(cert));
        extended.push_back(v);
        gb_ext = buchberger(extended, ord, m, n);
    }
    rep.torsion_free = rep.torsion.empty();
    rep.timing_ms["verdict"] = ms_since(t4);

    rep.orders["input"] = a.max_order();
    rep.orders["adjoint_of_input"] = rep.adjoint_of_input.max_order();
    rep.orders["cc_of_adjoint"] = rep.cc_of_adjoint.max_order();
    rep.orders["candidate_parametrization"] = rep.candidate_parametrization.max_order();
    rep.orders["cc_of_candidate"] = rep.cc_of_candidate.max_order();
    rep.timing_ms["total"] = ms_since(t0);
    return rep;
}

Parametrization parametrize(const OperatorMatrix& a, const MonomialOrder& ord) {
    TestReport rep = torsion_free_test(a, ord);
    Parametrization p;
    p.op = rep.candidate_parametrization;
    p.potential_names = p.op.unknown_names();
    p.order = p.op.max_order();
    return p;
}

std::vector<TorsionCertificate> extract_torsion(const OperatorMatrix& a, const MonomialOrder& ord) {
    return torsion_free_test(a, ord).torsion;
}

bool presentation_independence_check(const OperatorMatrix& a1, const OperatorMatrix& a2,
                                     const MonomialOrder& ord) {
    return extract_torsion(a1, ord).empty() == extract_torsion(a2, ord).empty();
}

int generic_rank(const OperatorMatrix& a, const MonomialOrder& ord) {
    PolyMatrix m(static_cast<size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) m[static_cast<size_t>(i)].push_back(a.at(i, k));
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return poly_matrix_rank(m, ord);
}

Parametrization localize_corank1(const OperatorMatrix& a, const MonomialOrder& ord) {
    const int m = a.cols(), n = a.nvars();
    PolyMatrix mat(static_cast<size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < m; ++k) mat[static_cast<size_t>(i)].push_back(a.at(i, k));
    PolyEchelonInfo info = poly_matrix_echelon(mat, ord);
    int corank = m - info.rank;
    if (corank != 1) throw UnsupportedCorankError(corank);

    // kernel of the pivot-row submatrix by signed maximal minors
    ModuleVector kernel(m, n);
    for (int k = 0; k < m; ++k) {
        PolyMatrix minor;
        for (int pr : info.pivot_rows) {
            std::vector<Polynomial> row;
            for (int c = 0; c < m; ++c)
                if (c != k) row.push_back(a.at(pr, c));
            minor.push_back(std::move(row));
        }
        Polynomial det = minor.empty() ? Polynomial::constant(n, Rational(1))
                                       : poly_matrix_det(minor, ord);
        kernel.comps[static_cast<size_t>(k)] = (k % 2 == 0) ? det : -det;
    }
    kernel = normalize_primitive(kernel, ord);

    OperatorMatrix col(m, 1, n);
    for (int k = 0; k < m; ++k) col.set(k, 0, kernel.comps[static_cast<size_t>(k)]);
    col.set_unknown_names({"phi1"});
    col.set_equation_names(a.unknown_names());
    if (!compose(a, col).is_zero())
        throw std::logic_error("localize: kernel column does not annihilate");
    Parametrization p;
    p.op = col;
    p.potential_names = {"phi1"};
    p.order = col.max_order();
    return p;
}

}  // namespace parametrix
