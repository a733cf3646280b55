#include "parametrix/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace parametrix {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
    Polynomial p(nvars);
    p.add_term(Monomial::unit(nvars, var), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.nvars() != nvars_) throw std::invalid_argument("polynomial: nvars mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_same(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial: nvars mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same(o);
    Polynomial out(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Polynomial Polynomial::negate_vars() const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, (m.total_degree() % 2 == 0) ? c : -c);
    return out;
}

Polynomial Polynomial::substitute(int var, const Rational& value) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m.exp(var);
        Monomial reduced = m;
        for (int k = 0; k < e; ++k) reduced = reduced.lowered(var);
        out.add_term(reduced, c * value.pow(static_cast<unsigned>(e)));
    }
    return out;
}

Polynomial Polynomial::shrink_vars(int new_nvars) const {
    Polynomial out(new_nvars);
    for (const auto& [m, c] : terms_) {
        std::vector<int> exps(static_cast<size_t>(new_nvars));
        for (int i = 0; i < nvars_; ++i) {
            if (i < new_nvars)
                exps[static_cast<size_t>(i)] = m.exp(i);
            else if (m.exp(i) != 0)
                throw std::invalid_argument("polynomial: variable still occurs while shrinking");
        }
        out.add_term(Monomial(new_nvars, exps), c);
    }
    return out;
}

Polynomial Polynomial::linear_substitute(const std::vector<std::vector<Rational>>& coeffs) const {
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
        Polynomial img(nvars_);
        for (int j = 0; j < nvars_; ++j)
            img.add_term(Monomial::unit(nvars_, j), coeffs[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        images.push_back(img);
    }
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        Polynomial prod = Polynomial::constant(nvars_, c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < m.exp(i); ++k) prod = prod * images[static_cast<size_t>(i)];
        out = out + prod;
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("polynomial: evaluation point size mismatch");
    Rational out(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            t *= point[static_cast<size_t>(i)].pow(static_cast<unsigned>(m.exp(i)));
        out += t;
    }
    return out;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("polynomial: leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (monomial_cmp(it->first, best->first, ord) > 0) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor, const MonomialOrder& ord) const {
    check_same(divisor);
    if (divisor.is_zero()) throw std::domain_error("polynomial: division by zero polynomial");
    Polynomial quotient(nvars_);
    Polynomial rem = *this;
    auto [dm, dc] = divisor.leading_term(ord);
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term(ord);
        if (!dm.divides(rm)) throw std::domain_error("polynomial: inexact division");
        Monomial q = rm / dm;
        Rational qc = rc / dc;
        quotient.add_term(q, qc);
        rem = rem - divisor * Polynomial::term(q, qc);
    }
    return quotient;
}

std::string Polynomial::str(const MonomialOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [&](const auto* a, const auto* b) {
        return monomial_cmp(a->first, b->first, ord) > 0;
    });
    std::string out;
    bool first = true;
    for (const auto* t : sorted) {
        const Monomial& m = t->first;
        Rational c = t->second;
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        Rational a = neg ? -c : c;
        if (m.is_one()) {
            out += a.str();
        } else {
            if (!a.is_one()) {
                out += a.str();
                out += '*';
            }
            out += m.str();
        }
    }
    return out;
}

// --- parsing ------------------------------------------------------------

namespace {

struct PolyLexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int nvars) {
    PolyLexer lx{text};
    Polynomial out(nvars);
    int sign = 1;
    if (lx.peek() == '+' || lx.peek() == '-') {
        if (lx.s[lx.pos] == '-') sign = -1;
        ++lx.pos;
    }
    while (true) {
        // one term: factors separated by '*'
        Rational coeff(1);
        Monomial mon(nvars);
        bool any_factor = false;
        while (true) {
            if (lx.eof()) break;
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = lx.pos;
                while (lx.pos < lx.s.size() &&
                       (std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '/'))
                    ++lx.pos;
                coeff *= Rational::parse(lx.s.substr(start, lx.pos - start));
                any_factor = true;
            } else if (c == 'd') {
                ++lx.pos;
                size_t start = lx.pos;
                while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
                    ++lx.pos;
                if (start == lx.pos) throw std::invalid_argument("polynomial: bad symbol in '" + text + "'");
                int idx = std::stoi(lx.s.substr(start, lx.pos - start));
                if (idx < 1 || idx > nvars)
                    throw std::invalid_argument("polynomial: derivative index out of range in '" + text + "'");
                int exp = 1;
                if (lx.pos < lx.s.size() && lx.s[lx.pos] == '^') {
                    ++lx.pos;
                    size_t es = lx.pos;
                    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
                        ++lx.pos;
                    if (es == lx.pos) throw std::invalid_argument("polynomial: bad exponent in '" + text + "'");
                    exp = std::stoi(lx.s.substr(es, lx.pos - es));
                }
                for (int k = 0; k < exp; ++k) mon = mon.raised(idx - 1);
                any_factor = true;
            } else {
                throw std::invalid_argument("polynomial: unexpected character in '" + text + "'");
            }
            if (lx.peek() == '*') {
                ++lx.pos;
                continue;
            }
            break;
        }
        if (!any_factor) throw std::invalid_argument("polynomial: empty term in '" + text + "'");
        out.add_term(mon, sign > 0 ? coeff : -coeff);
        if (lx.eof()) break;
        char c = lx.peek();
        if (c == '+')
            sign = 1;
        else if (c == '-')
            sign = -1;
        else
            throw std::invalid_argument("polynomial: expected '+' or '-' in '" + text + "'");
        ++lx.pos;
    }
    return out;
}

}  // namespace parametrix
