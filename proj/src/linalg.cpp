#include "parametrix/linalg.hpp"

#include <stdexcept>

namespace parametrix {

PolyEchelonInfo poly_matrix_echelon(PolyMatrix m, const MonomialOrder& ord) {
    PolyEchelonInfo info;
    if (m.empty()) return info;
    size_t rows = m.size(), cols = m[0].size();
    std::vector<int> row_ids(rows);
    for (size_t i = 0; i < rows; ++i) row_ids[i] = static_cast<int>(i);
    Polynomial prev;  // previous pivot; empty marker means 1
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(row_ids[p], row_ids[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Polynomial num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                m[i][j] = prev.is_zero() ? num : num.divide_exact(prev, ord);
            }
            m[i][c] = Polynomial::zero(m[i][c].nvars());
        }
        prev = m[r][c];
        info.pivot_rows.push_back(row_ids[r]);
        ++r;
    }
    info.rank = static_cast<int>(r);
    return info;
}

int poly_matrix_rank(const PolyMatrix& m, const MonomialOrder& ord) {
    return poly_matrix_echelon(m, ord).rank;
}

Polynomial poly_matrix_det(PolyMatrix m, const MonomialOrder& ord) {
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("det: empty matrix");
    int nvars = m[0][0].nvars();
    int sign = 1;
    Polynomial prev;
    for (size_t r = 0; r < n; ++r) {
        size_t p = r;
        while (p < n && m[p][r].is_zero()) ++p;
        if (p == n) return Polynomial::zero(nvars);
        if (p != r) {
            std::swap(m[p], m[r]);
            sign = -sign;
        }
        for (size_t i = r + 1; i < n; ++i) {
            for (size_t j = r + 1; j < n; ++j) {
                Polynomial num = m[r][r] * m[i][j] - m[i][r] * m[r][j];
                m[i][j] = prev.is_zero() ? num : num.divide_exact(prev, ord);
            }
            m[i][r] = Polynomial::zero(nvars);
        }
        prev = m[r][r];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

std::optional<std::vector<Rational>> RationalEchelon::feed(const std::vector<Rational>& v) {
    size_t id = fed_++;
    std::vector<Rational> vec = v;
    std::vector<Rational> combo(id + 1, Rational(0));
    combo[id] = Rational(1);
    for (const Row& row : rows_) {
        if (row.pivot >= vec.size()) continue;
        const Rational& c = vec[row.pivot];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < vec.size(); ++j)
            if (!row.vec[j].is_zero()) vec[j] -= c * row.vec[j];
        for (size_t j = 0; j < row.combo.size(); ++j)
            if (!row.combo[j].is_zero()) combo[j] -= c * row.combo[j];
        // vec[row.pivot] is now exactly zero
    }
    size_t pivot = vec.size();
    for (size_t j = 0; j < vec.size(); ++j)
        if (!vec[j].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot == vec.size()) return combo;  // dependent; combo[last] == 1
    Rational inv = Rational(1) / vec[pivot];
    for (auto& x : vec) x *= inv;
    for (auto& x : combo) x *= inv;
    combo.resize(fed_, Rational(0));
    rows_.push_back(Row{std::move(vec), std::move(combo), pivot});
    return std::nullopt;
}

}  // namespace parametrix
