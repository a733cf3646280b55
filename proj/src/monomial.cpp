#include "parametrix/monomial.hpp"

#include <stdexcept>

namespace parametrix {

Monomial::Monomial(int nvars) {
    if (nvars < 0 || nvars > kMaxVars)
        throw std::invalid_argument("monomial: nvars out of range (0..8)");
    n_ = static_cast<uint8_t>(nvars);
    e_.fill(0);
}

Monomial::Monomial(int nvars, const std::vector<int>& exps) : Monomial(nvars) {
    if (static_cast<int>(exps.size()) != nvars)
        throw std::invalid_argument("monomial: exponent count mismatch");
    for (int i = 0; i < nvars; ++i) {
        if (exps[static_cast<size_t>(i)] < 0 || exps[static_cast<size_t>(i)] > 255)
            throw std::invalid_argument("monomial: exponent out of range");
        e_[static_cast<size_t>(i)] = static_cast<uint8_t>(exps[static_cast<size_t>(i)]);
    }
}

Monomial Monomial::unit(int nvars, int var) {
    Monomial m(nvars);
    m.e_[static_cast<size_t>(var)] = 1;
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (int i = 0; i < n_; ++i) d += e_[static_cast<size_t>(i)];
    return d;
}

int Monomial::klass() const {
    for (int i = 0; i < n_; ++i)
        if (e_[static_cast<size_t>(i)] != 0) return i + 1;
    return 0;
}

bool Monomial::divides(const Monomial& other) const {
    for (int i = 0; i < n_; ++i)
        if (e_[static_cast<size_t>(i)] > other.e_[static_cast<size_t>(i)]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out(n_);
    for (int i = 0; i < n_; ++i) {
        int s = e_[static_cast<size_t>(i)] + o.e_[static_cast<size_t>(i)];
        if (s > 255) throw std::overflow_error("monomial: degree overflow");
        out.e_[static_cast<size_t>(i)] = static_cast<uint8_t>(s);
    }
    return out;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial out(n_);
    for (int i = 0; i < n_; ++i)
        out.e_[static_cast<size_t>(i)] =
            static_cast<uint8_t>(e_[static_cast<size_t>(i)] - o.e_[static_cast<size_t>(i)]);
    return out;
}

Monomial Monomial::raised(int var) const {
    Monomial out = *this;
    if (out.e_[static_cast<size_t>(var)] == 255) throw std::overflow_error("monomial: degree overflow");
    ++out.e_[static_cast<size_t>(var)];
    return out;
}

Monomial Monomial::lowered(int var) const {
    Monomial out = *this;
    --out.e_[static_cast<size_t>(var)];
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a.n_);
    for (int i = 0; i < a.n_; ++i)
        out.e_[static_cast<size_t>(i)] = std::max(a.e_[static_cast<size_t>(i)], b.e_[static_cast<size_t>(i)]);
    return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial out(a.n_);
    for (int i = 0; i < a.n_; ++i)
        out.e_[static_cast<size_t>(i)] = std::min(a.e_[static_cast<size_t>(i)], b.e_[static_cast<size_t>(i)]);
    return out;
}

std::string Monomial::str() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        int e = e_[static_cast<size_t>(i)];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'd';
        out += std::to_string(i + 1);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

std::string Monomial::index_suffix() const {
    std::string out;
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e_[static_cast<size_t>(i)]; ++k) out += std::to_string(i + 1);
    return out;
}

static void collect_monomials(int nvars, int var, int remaining, std::vector<int>& cur,
                              std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur[static_cast<size_t>(var)] = remaining;
        out.emplace_back(nvars, cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<size_t>(var)] = e;
        collect_monomials(nvars, var + 1, remaining - e, cur, out);
    }
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(nvars), 0);
    collect_monomials(nvars, 0, d, cur, out);
    return out;
}

}  // namespace parametrix
