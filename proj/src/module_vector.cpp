#include "parametrix/module_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace parametrix {

bool ModuleVector::is_zero() const {
    for (const auto& p : comps)
        if (!p.is_zero()) return false;
    return true;
}

int ModuleVector::max_total_degree() const {
    int d = -1;
    for (const auto& p : comps) d = std::max(d, p.total_degree());
    return d;
}

ModuleVector ModuleVector::unit(int rank, int nvars, int comp) {
    ModuleVector v(rank, nvars);
    v.comps[static_cast<size_t>(comp)] = Polynomial::constant(nvars, Rational(1));
    return v;
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("module vector: rank mismatch");
    ModuleVector out = *this;
    for (int i = 0; i < rank(); ++i)
        out.comps[static_cast<size_t>(i)] = out.comps[static_cast<size_t>(i)] + o.comps[static_cast<size_t>(i)];
    return out;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("module vector: rank mismatch");
    ModuleVector out = *this;
    for (int i = 0; i < rank(); ++i)
        out.comps[static_cast<size_t>(i)] = out.comps[static_cast<size_t>(i)] - o.comps[static_cast<size_t>(i)];
    return out;
}

ModuleVector ModuleVector::scaled(const Rational& c) const {
    ModuleVector out = *this;
    for (auto& p : out.comps) p = p.scaled(c);
    return out;
}

ModuleVector ModuleVector::mul_poly(const Polynomial& p) const {
    ModuleVector out = *this;
    for (auto& q : out.comps) q = q * p;
    return out;
}

ModuleVector ModuleVector::mul_term(const Monomial& m, const Rational& c) const {
    ModuleVector out(rank(), nvars());
    for (int i = 0; i < rank(); ++i)
        for (const auto& [mm, cc] : comps[static_cast<size_t>(i)].terms())
            out.comps[static_cast<size_t>(i)].add_term(mm * m, cc * c);
    return out;
}

ModuleVector ModuleVector::negate_vars() const {
    ModuleVector out = *this;
    for (auto& p : out.comps) p = p.negate_vars();
    return out;
}

std::string ModuleVector::str(const MonomialOrder& ord) const {
    std::string out = "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) out += ", ";
        out += comps[static_cast<size_t>(i)].str(ord);
    }
    return out + ")";
}

namespace {

struct FlatTerm {
    int comp;
    Monomial mon;
    Rational c;
};

std::vector<FlatTerm> flatten_sorted(const ModuleVector& v, const MonomialOrder& ord) {
    std::vector<FlatTerm> out;
    for (int i = 0; i < v.rank(); ++i)
        for (const auto& [m, c] : v.comps[static_cast<size_t>(i)].terms())
            out.push_back({i, m, c});
    std::sort(out.begin(), out.end(), [&](const FlatTerm& a, const FlatTerm& b) {
        return module_term_cmp(a.comp, a.mon, b.comp, b.mon, ord) > 0;
    });
    return out;
}

}  // namespace

bool canonical_vector_less(const ModuleVector& a, const ModuleVector& b, const MonomialOrder& ord) {
    int da = a.max_total_degree(), db = b.max_total_degree();
    if (da != db) return da < db;
    auto fa = flatten_sorted(a, ord);
    auto fb = flatten_sorted(b, ord);
    size_t n = std::min(fa.size(), fb.size());
    for (size_t i = 0; i < n; ++i) {
        int c = module_term_cmp(fa[i].comp, fa[i].mon, fb[i].comp, fb[i].mon, ord);
        if (c != 0) return c < 0;
        if (fa[i].c != fb[i].c) return fa[i].c < fb[i].c;
    }
    return fa.size() < fb.size();
}

ModuleVector normalize_primitive(const ModuleVector& v, const MonomialOrder& ord) {
    if (v.is_zero()) return v;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& p : v.comps)
        for (const auto& [m, c] : p.terms()) {
            mpz_class d = c.den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
    for (const auto& p : v.comps)
        for (const auto& [m, c] : p.terms()) {
            mpz_class scaled_num = c.num() * (den_lcm / c.den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
        }
    Rational scale(mpq_class(den_lcm) / mpq_class(num_gcd));
    ModuleVector out = v.scaled(scale);
    auto flat = flatten_sorted(out, ord);
    if (!flat.empty() && flat[0].c.sign() < 0) out = out.scaled(Rational(-1));
    return out;
}

}  // namespace parametrix
