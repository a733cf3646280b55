#ifndef PARAMETRIX_POLYNOMIAL_HPP
#define PARAMETRIX_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "parametrix/monomial.hpp"
#include "parametrix/ordering.hpp"
#include "parametrix/rational.hpp"

namespace parametrix {

// Exact multivariate polynomial over the rationals in the operator symbols
// d1..dn. Canonical form: no zero coefficients stored, so operator== is
// structural equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialStructuralLess>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int var);  // d_{var+1}
    static Polynomial term(const Monomial& m, const Rational& c);

    // Parses the rendering syntax, e.g. "3/2*d1^2*d2 - d2 + 1".
    static Polynomial parse(const std::string& text, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // d_i -> -d_i on every variable; realizes the adjoint sign (-1)^|mu|.
    Polynomial negate_vars() const;

    // Substitute a rational constant for one variable; result keeps nvars.
    Polynomial substitute(int var, const Rational& value) const;

    // Drop the trailing `count` variables; they must not occur.
    Polynomial shrink_vars(int new_nvars) const;

    // d_i -> sum_j coeffs[i][j] * d_j (invertible linear change of symbols).
    Polynomial linear_substitute(const std::vector<std::vector<Rational>>& coeffs) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // Exact division; throws std::domain_error when not divisible.
    Polynomial divide_exact(const Polynomial& divisor, const MonomialOrder& ord) const;

    std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const;

    // Terms sorted descending by ord: "3/2*d1^2*d2 - d2", "0" when zero.
    std::string str(const MonomialOrder& ord = MonomialOrder{}) const;

private:
    void check_same(const Polynomial& o) const;

    int nvars_;
    TermMap terms_;
};

}  // namespace parametrix

#endif
