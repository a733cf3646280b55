#ifndef PARAMETRIX_MONOMIAL_HPP
#define PARAMETRIX_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace parametrix {

inline constexpr int kMaxVars = 8;

// Multi-index mu over at most kMaxVars variables; exponents are dense.
class Monomial {
public:
    Monomial() : n_(0) { e_.fill(0); }
    explicit Monomial(int nvars);
    Monomial(int nvars, const std::vector<int>& exps);

    static Monomial unit(int nvars, int var);  // d_{var+1}

    int nvars() const { return n_; }
    int exp(int i) const { return e_[static_cast<size_t>(i)]; }
    int total_degree() const;

    // class of the multi-index: smallest i (1-based) with mu_i != 0; 0 for mu = 0.
    int klass() const;

    bool is_one() const { return total_degree() == 0; }
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // exact; caller checks divides()
    Monomial raised(int var) const;               // multiply by d_{var+1}
    Monomial lowered(int var) const;              // divide by d_{var+1}; exponent must be > 0

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    // Structural (lex-on-exponents) compare for canonical containers.
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // "d1^2*d2", "1" for the empty index
    std::string str() const;
    // "112" style index multiset, "" for mu = 0 (used for jet labels)
    std::string index_suffix() const;

private:
    uint8_t n_;
    std::array<uint8_t, kMaxVars> e_;
};

struct MonomialStructuralLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
        for (int i = 0; i < a.nvars(); ++i)
            if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
        return false;
    }
};

// All monomials in nvars variables of total degree exactly d, deterministic order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace parametrix

#endif
