#include "parametrix/janet.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

namespace parametrix {

namespace {

struct Jet {
    int comp;
    Monomial mon;
};

std::optional<Jet> leading_jet(const ModuleVector& v) {
    std::optional<Jet> best;
    for (int k = 0; k < v.rank(); ++k)
        for (const auto& [m, c] : v.comps[static_cast<size_t>(k)].terms()) {
            if (!best || jet_cmp(k, m, best->comp, best->mon) > 0) best = Jet{k, m};
        }
    return best;
}

// Full Gauss-Jordan elimination on the jet coordinates; rows come back
// monic, mutually reduced, sorted descending by leading jet.
std::vector<ModuleVector> echelonize(const std::vector<ModuleVector>& rows) {
    std::vector<ModuleVector> ech;
    std::vector<Jet> pivots;
    auto reduce = [&](ModuleVector v) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t p = 0; p < ech.size(); ++p) {
                Rational c = v.comps[static_cast<size_t>(pivots[p].comp)].coeff(pivots[p].mon);
                if (!c.is_zero()) {
                    v = v - ech[p].scaled(c);
                    changed = true;
                }
            }
        }
        return v;
    };
    for (const auto& r : rows) {
        ModuleVector v = reduce(r);
        if (v.is_zero()) continue;
        Jet lead = *leading_jet(v);
        Rational lc = v.comps[static_cast<size_t>(lead.comp)].coeff(lead.mon);
        v = v.scaled(Rational(1) / lc);
        for (size_t p = 0; p < ech.size(); ++p) {
            Rational c = ech[p].comps[static_cast<size_t>(lead.comp)].coeff(lead.mon);
            if (!c.is_zero()) ech[p] = ech[p] - v.scaled(c);
        }
        ech.push_back(std::move(v));
        pivots.push_back(lead);
    }
    std::vector<size_t> idx(ech.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return jet_cmp(pivots[a].comp, pivots[a].mon, pivots[b].comp, pivots[b].mon) > 0;
    });
    std::vector<ModuleVector> out;
    for (size_t i : idx) out.push_back(ech[i]);
    return out;
}

std::vector<int> class_multiplicative(int klass) {
    std::vector<int> out;
    for (int i = 1; i <= klass; ++i) out.push_back(i);
    return out;
}

std::vector<ClassifiedEquation> classify(const std::vector<ModuleVector>& ech, int nvars) {
    int q = 0;
    std::vector<Jet> leads;
    for (const auto& v : ech) {
        Jet j = *leading_jet(v);
        q = std::max(q, j.mon.total_degree());
        leads.push_back(j);
    }
    std::vector<ClassifiedEquation> out;
    for (size_t i = 0; i < ech.size(); ++i) {
        ClassifiedEquation eq;
        eq.row = ech[i];
        eq.order = leads[i].mon.total_degree();
        eq.klass = eq.order == 0 ? nvars : leads[i].mon.klass();
        // the class rule applies to top-order equations; all derivations are
        // nonmultiplicative for the remaining equations of order <= q-1
        eq.multiplicative = (eq.order == q) ? class_multiplicative(eq.klass) : std::vector<int>{};
        out.push_back(std::move(eq));
    }
    return out;
}

// Involutive (multiplicative-quotient) normal form of v.
ModuleVector janet_nf(ModuleVector v, const std::vector<ClassifiedEquation>& eqs) {
    ModuleVector rem(v.rank(), v.nvars());
    while (!v.is_zero()) {
        Jet t = *leading_jet(v);
        Rational c = v.comps[static_cast<size_t>(t.comp)].coeff(t.mon);
        bool reduced = false;
        for (const auto& eq : eqs) {
            Jet l = *leading_jet(eq.row);
            if (l.comp != t.comp || !l.mon.divides(t.mon)) continue;
            Monomial quot = t.mon / l.mon;
            if (!quot.is_one()) {
                bool ok = true;
                for (int i = 0; i < quot.nvars(); ++i)
                    if (quot.exp(i) > 0 &&
                        std::find(eq.multiplicative.begin(), eq.multiplicative.end(), i + 1) ==
                            eq.multiplicative.end()) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
            }
            v = v - eq.row.mul_term(quot, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.comps[static_cast<size_t>(t.comp)].add_term(t.mon, c);
            v.comps[static_cast<size_t>(t.comp)].add_term(t.mon, -c);
        }
    }
    return rem;
}

ModuleVector prolong(const ModuleVector& v, int var) {
    ModuleVector out(v.rank(), v.nvars());
    for (int k = 0; k < v.rank(); ++k)
        for (const auto& [m, c] : v.comps[static_cast<size_t>(k)].terms())
            out.comps[static_cast<size_t>(k)].add_term(m.raised(var), c);
    return out;
}

struct OffendingProlongation {
    int row_index;
    int derivation;
    ModuleVector remainder;
};

std::vector<OffendingProlongation> offending_prolongations(
    const std::vector<ClassifiedEquation>& eqs, int nvars) {
    std::vector<OffendingProlongation> out;
    for (size_t i = 0; i < eqs.size(); ++i) {
        for (int j = nvars; j >= 1; --j) {
            if (std::find(eqs[i].multiplicative.begin(), eqs[i].multiplicative.end(), j) !=
                eqs[i].multiplicative.end())
                continue;
            ModuleVector rem = janet_nf(prolong(eqs[i].row, j - 1), eqs);
            if (!rem.is_zero())
                out.push_back({static_cast<int>(i), j, std::move(rem)});
        }
    }
    return out;
}

std::vector<std::vector<Rational>> identity_change(int n) {
    std::vector<std::vector<Rational>> c(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
    return c;
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    Rational det(1);
    for (size_t r = 0; r < n; ++r) {
        size_t p = r;
        while (p < n && m[p][r].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != r) {
            std::swap(m[p], m[r]);
            det = -det;
        }
        det *= m[r][r];
        for (size_t i = r + 1; i < n; ++i) {
            Rational f = m[i][r] / m[r][r];
            for (size_t j = r; j < n; ++j) m[i][j] -= f * m[r][j];
        }
    }
    return det;
}

std::vector<ModuleVector> apply_change(const std::vector<ModuleVector>& rows,
                                       const std::vector<std::vector<Rational>>& change) {
    std::vector<ModuleVector> out;
    for (const auto& r : rows) {
        ModuleVector v = r;
        for (auto& p : v.comps) p = p.linear_substitute(change);
        out.push_back(std::move(v));
    }
    return out;
}

struct CompletionResult {
    std::vector<ClassifiedEquation> equations;
    int order;
};

// One completion run in fixed coordinates; adds the minimal-order
// offending remainder each round.
std::optional<CompletionResult> complete_in_coords(const std::vector<ModuleVector>& rows,
                                                   int nvars, int degree_cap) {
    std::vector<ModuleVector> current = rows;
    for (int round = 0; round < 1000; ++round) {
        std::vector<ModuleVector> ech = echelonize(current);
        if (ech.empty()) {
            return CompletionResult{{}, 0};
        }
        std::vector<ClassifiedEquation> eqs = classify(ech, nvars);
        int q = 0;
        for (const auto& e : eqs) q = std::max(q, e.order);
        if (q > degree_cap) return std::nullopt;
        std::vector<OffendingProlongation> off = offending_prolongations(eqs, nvars);
        if (off.empty()) return CompletionResult{std::move(eqs), q};
        size_t best = 0;
        for (size_t i = 1; i < off.size(); ++i) {
            int oa = off[i].remainder.max_total_degree();
            int ob = off[best].remainder.max_total_degree();
            if (oa < ob) best = i;
        }
        current.clear();
        for (const auto& e : eqs) current.push_back(e.row);
        current.push_back(off[best].remainder);
    }
    return std::nullopt;
}

}  // namespace

int InvolutiveSystem::order() const {
    int q = 0;
    for (const auto& e : equations) q = std::max(q, e.order);
    return q;
}

std::vector<std::vector<int>> janet_multiplicative(const std::vector<Monomial>& leads) {
    std::vector<std::vector<int>> out;
    for (const auto& m : leads) {
        int k = m.total_degree() == 0 ? m.nvars() : m.klass();
        out.push_back(class_multiplicative(k));
    }
    return out;
}

InvolutionWitness is_involutive(const std::vector<ModuleVector>& rows, int nvars) {
    std::vector<ModuleVector> ech = echelonize(rows);
    InvolutionWitness w;
    if (ech.empty()) return w;
    std::vector<ClassifiedEquation> eqs = classify(ech, nvars);
    std::vector<OffendingProlongation> off = offending_prolongations(eqs, nvars);
    if (off.empty()) return w;
    w.involutive = false;
    w.row_index = off.front().row_index;
    w.derivation = off.front().derivation;
    w.remainder = off.front().remainder;
    return w;
}

InvolutiveSystem involutive_completion(const std::vector<ModuleVector>& rows, int nvars,
                                       const CompletionOptions& opts) {
    int m = rows.empty() ? 0 : rows.front().rank();
    auto build = [&](CompletionResult res, std::vector<std::vector<Rational>> change) {
        InvolutiveSystem sys;
        sys.equations = std::move(res.equations);
        sys.nvars = nvars;
        sys.unknowns = m;
        sys.involutive = true;
        sys.coordinate_change = std::move(change);
        return sys;
    };

    // all coordinate permutations, identity first
    std::vector<int> perm(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i) perm[static_cast<size_t>(i)] = i;
    struct Candidate {
        CompletionResult res;
        std::vector<std::vector<Rational>> change;
        int index;
    };
    std::optional<Candidate> best;
    int index = 0;
    do {
        std::vector<std::vector<Rational>> change(
            static_cast<size_t>(nvars), std::vector<Rational>(static_cast<size_t>(nvars), Rational(0)));
        for (int i = 0; i < nvars; ++i)
            change[static_cast<size_t>(i)][static_cast<size_t>(perm[static_cast<size_t>(i)])] = Rational(1);
        auto res = complete_in_coords(apply_change(rows, change), nvars, opts.degree_cap);
        if (res) {
            Candidate cand{std::move(*res), std::move(change), index};
            if (!best || cand.res.order < best->res.order ||
                (cand.res.order == best->res.order &&
                 cand.res.equations.size() < best->res.equations.size()))
                best = std::move(cand);
        }
        ++index;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best) return build(std::move(best->res), std::move(best->change));

    // random unimodular fallback
    std::mt19937 rng(opts.seed);
    std::uniform_int_distribution<int> dist(-2, 2);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::vector<Rational>> change(
            static_cast<size_t>(nvars), std::vector<Rational>(static_cast<size_t>(nvars), Rational(0)));
        for (int i = 0; i < nvars; ++i)
            for (int j = 0; j < nvars; ++j)
                change[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(dist(rng));
        Rational det = rational_det(change);
        if (!(det == Rational(1) || det == Rational(-1))) continue;
        auto res = complete_in_coords(apply_change(rows, change), nvars, opts.degree_cap);
        if (res) return build(std::move(*res), std::move(change));
    }
    throw CompletionError("involutive completion: degree cap " + std::to_string(opts.degree_cap) +
                          " exceeded under every coordinate change tried");
}

bool full_torsion_check(const InvolutiveSystem& sys) {
    if (!sys.involutive)
        throw std::invalid_argument("full_torsion_check: system is not involutive");
    int q = sys.order();
    int count = 0;
    for (const auto& e : sys.equations)
        if (e.order == q && e.klass == sys.nvars) ++count;
    return count == sys.unknowns;
}

SpencerForm spencer_form(const InvolutiveSystem& sys, const std::vector<std::string>& base_names) {
    if (!sys.involutive) throw std::invalid_argument("spencer_form: system is not involutive");
    const int n = sys.nvars;
    const int m = sys.unknowns;
    const int q = sys.order();
    if (q == 0) throw std::invalid_argument("spencer_form: zero-order system");

    std::vector<std::string> names = base_names;
    if (names.empty())
        for (int k = 1; k <= m; ++k) names.push_back("y" + std::to_string(k));

    struct JetKeyLess {
        bool operator()(const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) const {
            int da = a.second.total_degree(), db = b.second.total_degree();
            if (da != db) return da < db;
            if (a.first != b.first) return a.first < b.first;
            return MonomialStructuralLess{}(a.second, b.second);
        }
    };
    using JetKey = std::pair<int, Monomial>;

    std::map<JetKey, ModuleVector, JetKeyLess> solved;  // pivot jet -> -tail
    for (const auto& e : sys.equations) {
        Jet lead = *leading_jet(e.row);
        ModuleVector tail = e.row;
        tail.comps[static_cast<size_t>(lead.comp)].add_term(lead.mon, Rational(-1));
        solved.emplace(JetKey{lead.comp, lead.mon}, tail.scaled(Rational(-1)));
    }

    std::map<JetKey, int, JetKeyLess> pindex;  // parametric jets of order < q
    std::vector<JetKey> pjets;
    for (int d = 0; d < q; ++d)
        for (int k = 0; k < m; ++k)
            for (const auto& mon : monomials_of_degree(n, d)) {
                JetKey key{k, mon};
                if (solved.count(key)) continue;
                pindex.emplace(key, static_cast<int>(pjets.size()));
                pjets.push_back(key);
            }
    // re-sort by (degree, comp, monomial) for stable labels
    std::sort(pjets.begin(), pjets.end(), JetKeyLess{});
    pindex.clear();
    for (size_t i = 0; i < pjets.size(); ++i) pindex[pjets[i]] = static_cast<int>(i);
    const int np = static_cast<int>(pjets.size());

    // first-order expression of an order-q parametric jet: chi_j * parent
    auto order_q_parent = [&](const JetKey& jet) -> std::pair<int, JetKey> {
        for (int j = 0; j < n; ++j) {
            if (jet.second.exp(j) == 0) continue;
            JetKey parent{jet.first, jet.second.lowered(j)};
            if (pindex.count(parent)) return {j, parent};
        }
        throw std::logic_error("spencer_form: no parametric parent for an order-q jet");
    };

    // rewrite a vector of jets (order <= q, parametric except where solved
    // already substituted) into the promoted unknowns
    auto rewrite = [&](const ModuleVector& jets) {
        ModuleVector out(np, n);
        for (int k = 0; k < m; ++k)
            for (const auto& [mon, c] : jets.comps[static_cast<size_t>(k)].terms()) {
                JetKey key{k, mon};
                auto it = pindex.find(key);
                if (it != pindex.end()) {
                    out.comps[static_cast<size_t>(it->second)].add_term(Monomial(n), c);
                    continue;
                }
                auto [j, parent] = order_q_parent(key);
                out.comps[static_cast<size_t>(pindex.at(parent))].add_term(Monomial::unit(n, j), c);
            }
        return out;
    };

    std::vector<ModuleVector> relations;
    for (int pi = 0; pi < np; ++pi) {
        const JetKey& jet = pjets[static_cast<size_t>(pi)];
        for (int i = 0; i < n; ++i) {
            JetKey up{jet.first, jet.second.raised(i)};
            auto sv = solved.find(up);
            ModuleVector rel(np, n);
            rel.comps[static_cast<size_t>(pi)].add_term(Monomial::unit(n, i), Rational(1));
            if (sv != solved.end()) {
                rel = rel - rewrite(sv->second);
            } else if (up.second.total_degree() <= q - 1) {
                rel.comps[static_cast<size_t>(pindex.at(up))].add_term(Monomial(n), Rational(-1));
            } else {
                // order-q parametric jet: keep only the canonical derivative
                auto [j, parent] = order_q_parent(up);
                if (j == i && parent == jet) continue;
                rel.comps[static_cast<size_t>(pindex.at(parent))].add_term(Monomial::unit(n, j),
                                                                           Rational(-1));
            }
            if (rel.max_total_degree() != 1)
                throw std::logic_error("spencer_form: relation is not first order");
            relations.push_back(std::move(rel));
        }
    }

    SpencerForm out;
    out.op = OperatorMatrix::from_rows(relations, np, n);
    for (const auto& [k, mon] : pjets) {
        std::string label = names[static_cast<size_t>(k)];
        if (!mon.is_one()) label += "_" + mon.index_suffix();
        out.new_unknowns.push_back(label);
    }
    out.op.set_unknown_names(out.new_unknowns);
    out.op.set_equation_names([&] {
        std::vector<std::string> eq;
        for (int i = 1; i <= out.op.rows(); ++i) eq.push_back("sp" + std::to_string(i));
        return eq;
    }());
    return out;
}

}  // namespace parametrix
