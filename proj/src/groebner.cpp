#include "parametrix/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace parametrix {

namespace {

struct FTerm {
    int comp;
    Monomial mon;
    mpz_class c;
};

using Flat = std::vector<FTerm>;  // sorted descending by the block module order

// Buchberger engine over integer-scaled vectors. When primary < total the
// trailing components carry Schreyer traces: reductions never use elements
// whose leading term lies in the trace block, so any element reduced to
// zero in the primary block exposes a syzygy of the original generators.
class GBEngine {
public:
    GBEngine(const MonomialOrder& ord, int primary, int total, int nvars)
        : ord_(ord), primary_(primary), total_(total), nvars_(nvars) {}

    int term_cmp(const FTerm& a, const FTerm& b) const {
        bool pa = a.comp < primary_, pb = b.comp < primary_;
        if (pa != pb) return pa ? 1 : -1;
        return module_term_cmp(a.comp, a.mon, b.comp, b.mon, ord_);
    }

    Flat flatten(const ModuleVector& v) const {
        mpz_class den_lcm(1);
        for (const auto& p : v.comps)
            for (const auto& [m, c] : p.terms()) {
                mpz_class d = c.den();
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
            }
        Flat out;
        for (int i = 0; i < v.rank(); ++i)
            for (const auto& [m, c] : v.comps[static_cast<size_t>(i)].terms())
                out.push_back({i, m, mpz_class(c.num() * (den_lcm / c.den()))});
        std::sort(out.begin(), out.end(),
                  [this](const FTerm& a, const FTerm& b) { return term_cmp(a, b) > 0; });
        return out;
    }

    ModuleVector unflatten(const Flat& f, const Rational& scale) const {
        ModuleVector v(total_, nvars_);
        for (const auto& t : f)
            v.comps[static_cast<size_t>(t.comp)].add_term(t.mon, Rational(mpq_class(t.c)) * scale);
        return v;
    }

    static void normalize_content(Flat& f) {
        if (f.empty()) return;
        mpz_class g(0);
        for (const auto& t : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g != 1)
            for (auto& t : f) t.c /= g;
        if (f.front().c < 0)
            for (auto& t : f) t.c = -t.c;
    }

    // a - b * x^shift * g, leading terms cancelling when aligned.
    Flat sub_mul(const Flat& a, size_t a_from, const Flat& g, const mpz_class& b,
                 const Monomial& shift) const {
        Flat out;
        out.reserve(a.size() - a_from + g.size());
        size_t i = a_from, j = 0;
        while (i < a.size() || j < g.size()) {
            if (j >= g.size()) {
                out.push_back(a[i++]);
                continue;
            }
            FTerm gt{g[j].comp, g[j].mon * shift, -b * g[j].c};
            if (i >= a.size()) {
                if (gt.c != 0) out.push_back(std::move(gt));
                ++j;
                continue;
            }
            int c = term_cmp(a[i], gt);
            if (c > 0) {
                out.push_back(a[i++]);
            } else if (c < 0) {
                if (gt.c != 0) out.push_back(std::move(gt));
                ++j;
            } else {
                mpz_class s = a[i].c + gt.c;
                if (s != 0) out.push_back({a[i].comp, a[i].mon, std::move(s)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    int find_reducer(const FTerm& t) const {
        if (t.comp >= primary_) return -1;
        for (size_t k = 0; k < basis_.size(); ++k) {
            const Flat& g = basis_[k];
            if (g.front().comp == t.comp && g.front().mon.divides(t.mon)) return static_cast<int>(k);
        }
        return -1;
    }

    // Full reduction against the basis. The result equals scale * NF(input)
    // with scale a positive integer.
    Flat reduce_full(Flat v, mpz_class* scale_out = nullptr) const {
        mpz_class acc(1);
        Flat out;
        size_t pos = 0;
        while (pos < v.size()) {
            int gi = find_reducer(v[pos]);
            if (gi < 0) {
                out.push_back(v[pos]);
                ++pos;
                continue;
            }
            const Flat& g = basis_[static_cast<size_t>(gi)];
            mpz_class d;
            mpz_gcd(d.get_mpz_t(), g.front().c.get_mpz_t(), v[pos].c.get_mpz_t());
            mpz_class a = g.front().c / d;  // positive (basis leads normalized)
            mpz_class b = v[pos].c / d;
            if (a != 1) {
                for (auto& t : out) t.c *= a;
                for (size_t k = pos; k < v.size(); ++k) v[k].c *= a;
                acc *= a;
            }
            Monomial shift = v[pos].mon / g.front().mon;
            v = sub_mul(v, pos, g, b, shift);
            pos = 0;
        }
        if (scale_out) *scale_out = acc;
        return out;
    }

    void dispatch(Flat f) {
        if (f.empty()) return;
        normalize_content(f);
        if (f.front().comp >= primary_) {
            syz_.push_back(std::move(f));
            return;
        }
        int idx = static_cast<int>(basis_.size());
        for (int i = 0; i < idx; ++i)
            if (basis_[static_cast<size_t>(i)].front().comp == f.front().comp) {
                Monomial l = Monomial::lcm(basis_[static_cast<size_t>(i)].front().mon, f.front().mon);
                queue_.insert({l.total_degree(), i, idx});
            }
        basis_.push_back(std::move(f));
    }

    void add_generator(const ModuleVector& v) { dispatch(reduce_full(flatten(v))); }

    // Install a reducer without mutual reduction or pair bookkeeping; for
    // normal-form contexts where the basis is already a Groebner basis (or
    // plain interreduction is wanted).
    void add_reducer(const ModuleVector& v) {
        Flat f = flatten(v);
        if (f.empty()) return;
        normalize_content(f);
        basis_.push_back(std::move(f));
    }

    void complete() {
        while (!queue_.empty()) {
            auto [deg, i, j] = *queue_.begin();
            queue_.erase(queue_.begin());
            const Flat& fi = basis_[static_cast<size_t>(i)];
            const Flat& fj = basis_[static_cast<size_t>(j)];
            Monomial l = Monomial::lcm(fi.front().mon, fj.front().mon);
            if (chain_criterion(i, j, l)) {
                done_.insert({i, j});
                continue;
            }
            done_.insert({i, j});
            mpz_class d;
            mpz_gcd(d.get_mpz_t(), fi.front().c.get_mpz_t(), fj.front().c.get_mpz_t());
            mpz_class a = fj.front().c / d;
            mpz_class b = fi.front().c / d;
            Flat s;
            for (const auto& t : fi) s.push_back({t.comp, t.mon * (l / fi.front().mon), a * t.c});
            s = sub_mul(s, 0, fj, b, l / fj.front().mon);
            dispatch(reduce_full(std::move(s)));
        }
    }

    bool chain_criterion(int i, int j, const Monomial& l) const {
        for (size_t k = 0; k < basis_.size(); ++k) {
            int ki = static_cast<int>(k);
            if (ki == i || ki == j) continue;
            const Flat& fk = basis_[k];
            if (fk.front().comp != basis_[static_cast<size_t>(i)].front().comp) continue;
            if (!fk.front().mon.divides(l)) continue;
            auto key = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
            if (done_.count(key(i, ki)) && done_.count(key(j, ki))) return true;
        }
        return false;
    }

    ModuleVector normal_form(const ModuleVector& v) const {
        mpz_class den_lcm(1);
        for (const auto& p : v.comps)
            for (const auto& [m, c] : p.terms()) {
                mpz_class d = c.den();
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
            }
        mpz_class scale(1);
        Flat r = reduce_full(flatten(v), &scale);
        return unflatten(r, Rational(mpq_class(1) / mpq_class(scale * den_lcm)));
    }

    bool nf_is_zero(const ModuleVector& v) const { return reduce_full(flatten(v)).empty(); }

    // Minimal, fully tail-reduced, monic basis (primary block == total).
    std::vector<ModuleVector> reduced_basis() {
        std::vector<char> removed(basis_.size(), 0);
        for (size_t i = 0; i < basis_.size(); ++i) {
            for (size_t j = 0; j < basis_.size(); ++j) {
                if (i == j || removed[j] || removed[i]) continue;
                const FTerm& li = basis_[i].front();
                const FTerm& lj = basis_[j].front();
                if (lj.comp == li.comp && lj.mon.divides(li.mon) && (lj.mon != li.mon || j < i)) {
                    removed[i] = 1;
                    break;
                }
            }
        }
        std::vector<Flat> kept;
        for (size_t i = 0; i < basis_.size(); ++i)
            if (!removed[i]) kept.push_back(basis_[i]);
        std::vector<ModuleVector> out;
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<Flat> others;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            GBEngine sub(ord_, primary_, total_, nvars_);
            sub.basis_ = std::move(others);
            Flat r = sub.reduce_full(kept[i]);
            normalize_content(r);
            Rational lead_c(mpq_class(r.front().c));
            out.push_back(unflatten(r, Rational(1) / lead_c));
        }
        std::sort(out.begin(), out.end(), [this](const ModuleVector& a, const ModuleVector& b) {
            return !canonical_vector_less(a, b, ord_);
        });
        return out;
    }

    std::vector<ModuleVector> syzygy_rows(int gen_count) const {
        std::vector<ModuleVector> rows;
        for (const auto& f : syz_) {
            ModuleVector s(gen_count, nvars_);
            for (const auto& t : f)
                s.comps[static_cast<size_t>(t.comp - primary_)].add_term(t.mon, Rational(mpq_class(t.c)));
            rows.push_back(std::move(s));
        }
        return rows;
    }

    size_t basis_size() const { return basis_.size(); }

private:
    MonomialOrder ord_;
    int primary_;
    int total_;
    int nvars_;
    std::vector<Flat> basis_;
    std::vector<Flat> syz_;
    std::set<std::tuple<int, int, int>> queue_;
    std::set<std::pair<int, int>> done_;
};

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<ModuleVector> gens, MonomialOrder ord, int rank, int nvars)
    : gens_(std::move(gens)), ord_(ord), rank_(rank), nvars_(nvars) {}

GroebnerBasis buchberger(const std::vector<ModuleVector>& gens, const MonomialOrder& ord,
                         int rank, int nvars) {
    GBEngine eng(ord, rank, rank, nvars);
    for (const auto& g : gens) {
        if (g.rank() != rank) throw std::invalid_argument("buchberger: rank mismatch");
        if (!g.is_zero()) eng.add_generator(g);
    }
    eng.complete();
    return GroebnerBasis(eng.reduced_basis(), ord, rank, nvars);
}

ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb) {
    if (v.rank() != gb.rank()) throw std::invalid_argument("normal_form: rank mismatch");
    GBEngine eng(gb.order(), gb.rank(), gb.rank(), gb.nvars());
    for (const auto& g : gb.generators()) eng.add_reducer(g);
    return eng.normal_form(v);
}

bool membership(const ModuleVector& v, const GroebnerBasis& gb) {
    return normal_form(v, gb).is_zero();
}

bool module_equal(const std::vector<ModuleVector>& gens_a, const std::vector<ModuleVector>& gens_b,
                  const MonomialOrder& ord, int rank, int nvars) {
    return buchberger(gens_a, ord, rank, nvars) == buchberger(gens_b, ord, rank, nvars);
}

SyzygyMatrix syzygies(const std::vector<ModuleVector>& gens, const MonomialOrder& ord,
                      int rank, int nvars) {
    int r = static_cast<int>(gens.size());
    GBEngine eng(ord, rank, rank + r, nvars);
    for (int i = 0; i < r; ++i) {
        if (gens[static_cast<size_t>(i)].rank() != rank)
            throw std::invalid_argument("syzygies: rank mismatch");
        ModuleVector aug(rank + r, nvars);
        for (int k = 0; k < rank; ++k)
            aug.comps[static_cast<size_t>(k)] = gens[static_cast<size_t>(i)].comps[static_cast<size_t>(k)];
        aug.comps[static_cast<size_t>(rank + i)] = Polynomial::constant(nvars, Rational(1));
        eng.add_generator(aug);
    }
    eng.complete();
    SyzygyMatrix out{eng.syzygy_rows(r)};
    for (const auto& s : out.rows) {
        ModuleVector acc(rank, nvars);
        for (int i = 0; i < r; ++i)
            acc = acc + gens[static_cast<size_t>(i)].mul_poly(s.comps[static_cast<size_t>(i)]);
        if (!acc.is_zero()) throw std::logic_error("syzygies: exactness check failed");
    }
    return out;
}

namespace {

bool vector_homogeneous(const ModuleVector& v) {
    int d = -1;
    for (const auto& p : v.comps)
        for (const auto& [m, c] : p.terms()) {
            if (d < 0) d = m.total_degree();
            if (m.total_degree() != d) return false;
        }
    return true;
}

// Classical interreduction: no term of one generator divisible by the
// leading term of another. Operates in place until stable.
void interreduce_set(std::vector<ModuleVector>& gens, const MonomialOrder& ord, int rank,
                     int nvars) {
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 200) {
        changed = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            std::vector<ModuleVector> others;
            for (size_t j = 0; j < gens.size(); ++j)
                if (j != i && !gens[j].is_zero()) others.push_back(gens[j]);
            if (others.empty()) break;
            GBEngine eng(ord, rank, rank, nvars);
            // reducers used verbatim, no completion: classical interreduction
            for (const auto& g : others) eng.add_reducer(g);
            ModuleVector r = eng.normal_form(gens[i]);
            if (r != gens[i]) {
                gens[i] = normalize_primitive(r, ord);
                changed = true;
            }
        }
        gens.erase(std::remove_if(gens.begin(), gens.end(),
                                  [](const ModuleVector& v) { return v.is_zero(); }),
                   gens.end());
    }
}

}  // namespace

std::vector<ModuleVector> minimize_generators(std::vector<ModuleVector> gens,
                                              const MonomialOrder& ord, int rank, int nvars) {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const ModuleVector& v) { return v.is_zero(); }),
               gens.end());
    for (auto& g : gens) g = normalize_primitive(g, ord);
    std::sort(gens.begin(), gens.end(), [&](const ModuleVector& a, const ModuleVector& b) {
        return canonical_vector_less(a, b, ord);
    });
    GBEngine eng(ord, rank, rank, nvars);
    std::vector<ModuleVector> kept;
    for (const auto& g : gens) {
        if (!kept.empty() && eng.nf_is_zero(g)) continue;
        kept.push_back(g);
        eng.add_generator(g);
        eng.complete();
    }
    bool all_homogeneous = std::all_of(kept.begin(), kept.end(), vector_homogeneous);
    if (!all_homogeneous || kept.size() <= 12) {
        bool dropped = true;
        int guard = 0;
        while (dropped && guard++ < 50) {
            dropped = false;
            for (size_t i = 0; i < kept.size(); ++i) {
                std::vector<ModuleVector> others;
                for (size_t j = 0; j < kept.size(); ++j)
                    if (j != i) others.push_back(kept[j]);
                if (others.empty()) continue;
                GroebnerBasis gb = buchberger(others, ord, rank, nvars);
                if (membership(kept[i], gb)) {
                    kept.erase(kept.begin() + static_cast<long>(i));
                    dropped = true;
                    break;
                }
            }
        }
    }
    interreduce_set(kept, ord, rank, nvars);
    for (auto& g : kept) g = normalize_primitive(g, ord);
    std::sort(kept.begin(), kept.end(), [&](const ModuleVector& a, const ModuleVector& b) {
        return canonical_vector_less(a, b, ord);
    });
    return kept;
}

}  // namespace parametrix
