#ifndef PARAMETRIX_LINALG_HPP
#define PARAMETRIX_LINALG_HPP

#include <optional>
#include <vector>

#include "parametrix/polynomial.hpp"
#include "parametrix/rational.hpp"

namespace parametrix {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

struct PolyEchelonInfo {
    int rank = 0;
    std::vector<int> pivot_rows;  // original row indices used as pivots, in order
};

// Fraction-free (Bareiss) elimination over the rational-function field;
// exact polynomial arithmetic throughout.
PolyEchelonInfo poly_matrix_echelon(PolyMatrix m, const MonomialOrder& ord);

int poly_matrix_rank(const PolyMatrix& m, const MonomialOrder& ord);

// Bareiss determinant of a square polynomial matrix.
Polynomial poly_matrix_det(PolyMatrix m, const MonomialOrder& ord);

// Incremental exact Gaussian elimination over Q with dependence tracking.
// feed() returns nothing while the fed vector is independent; once a fed
// vector is dependent it returns coefficients alpha over all vectors fed so
// far (last entry 1) with sum alpha_i * fed_i = 0.
class RationalEchelon {
public:
    std::optional<std::vector<Rational>> feed(const std::vector<Rational>& v);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    struct Row {
        std::vector<Rational> vec;    // pivot normalized to 1
        std::vector<Rational> combo;  // expression over fed vectors
        size_t pivot;
    };
    std::vector<Row> rows_;
    size_t fed_ = 0;
};

}  // namespace parametrix

#endif
