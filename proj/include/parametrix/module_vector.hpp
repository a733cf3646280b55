#ifndef PARAMETRIX_MODULE_VECTOR_HPP
#define PARAMETRIX_MODULE_VECTOR_HPP

#include <string>
#include <vector>

#include "parametrix/polynomial.hpp"

namespace parametrix {

// Element of the free module A^m over the polynomial ring.
struct ModuleVector {
    std::vector<Polynomial> comps;

    ModuleVector() = default;
    ModuleVector(int rank, int nvars)
        : comps(static_cast<size_t>(rank), Polynomial(nvars)) {}

    int rank() const { return static_cast<int>(comps.size()); }
    int nvars() const { return comps.empty() ? 0 : comps[0].nvars(); }
    bool is_zero() const;
    int max_total_degree() const;  // -1 when zero

    static ModuleVector unit(int rank, int nvars, int comp);

    ModuleVector operator+(const ModuleVector& o) const;
    ModuleVector operator-(const ModuleVector& o) const;
    ModuleVector scaled(const Rational& c) const;
    ModuleVector mul_poly(const Polynomial& p) const;
    ModuleVector mul_term(const Monomial& m, const Rational& c) const;
    ModuleVector negate_vars() const;

    friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
        return a.comps == b.comps;
    }
    friend bool operator!=(const ModuleVector& a, const ModuleVector& b) { return !(a == b); }

    // "(d2^2, -d1*d2, d1^2)"
    std::string str(const MonomialOrder& ord = MonomialOrder{}) const;
};

// Deterministic total order used to sort generator lists canonically:
// by max total degree, then by leading module term ascending, then by the
// remaining term lists.
bool canonical_vector_less(const ModuleVector& a, const ModuleVector& b, const MonomialOrder& ord);

// Scale to integer coefficients with content 1 and positive leading
// coefficient; zero stays zero.
ModuleVector normalize_primitive(const ModuleVector& v, const MonomialOrder& ord);

}  // namespace parametrix

#endif
