#include "parametrix/diffop.hpp"

#include <stdexcept>

namespace parametrix {

OperatorMatrix::OperatorMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Polynomial(nvars)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("operator matrix: negative shape");
    for (int i = 0; i < rows; ++i) equation_names_.push_back("eq" + std::to_string(i + 1));
    for (int k = 0; k < cols; ++k) unknown_names_.push_back("y" + std::to_string(k + 1));
}

OperatorMatrix OperatorMatrix::identity(int m, int nvars) {
    OperatorMatrix out(m, m, nvars);
    for (int i = 0; i < m; ++i) out.set(i, i, Polynomial::constant(nvars, Rational(1)));
    return out;
}

OperatorMatrix OperatorMatrix::from_rows(const std::vector<ModuleVector>& rows, int cols, int nvars) {
    OperatorMatrix out(static_cast<int>(rows.size()), cols, nvars);
    for (int i = 0; i < out.rows_; ++i) {
        if (rows[static_cast<size_t>(i)].rank() != cols)
            throw std::invalid_argument("operator matrix: row rank mismatch");
        for (int k = 0; k < cols; ++k)
            out.set(i, k, rows[static_cast<size_t>(i)].comps[static_cast<size_t>(k)]);
    }
    return out;
}

const Polynomial& OperatorMatrix::at(int i, int k) const {
    return entries_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(k)];
}

void OperatorMatrix::set(int i, int k, Polynomial p) {
    if (p.nvars() != nvars_) throw std::invalid_argument("operator matrix: entry nvars mismatch");
    entries_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(k)] = std::move(p);
}

ModuleVector OperatorMatrix::row(int i) const {
    ModuleVector v(cols_, nvars_);
    for (int k = 0; k < cols_; ++k) v.comps[static_cast<size_t>(k)] = at(i, k);
    return v;
}

std::vector<ModuleVector> OperatorMatrix::row_vectors() const {
    std::vector<ModuleVector> out;
    out.reserve(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

ModuleVector OperatorMatrix::col(int k) const {
    ModuleVector v(rows_, nvars_);
    for (int i = 0; i < rows_; ++i) v.comps[static_cast<size_t>(i)] = at(i, k);
    return v;
}

int OperatorMatrix::max_order() const {
    int q = 0;
    for (const auto& p : entries_) q = std::max(q, p.total_degree());
    return q;
}

bool OperatorMatrix::is_zero() const {
    for (const auto& p : entries_)
        if (!p.is_zero()) return false;
    return true;
}

OperatorMatrix OperatorMatrix::transpose() const {
    OperatorMatrix out(cols_, rows_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) out.set(k, i, at(i, k));
    out.unknown_names_ = equation_names_;
    out.equation_names_ = unknown_names_;
    return out;
}

void OperatorMatrix::set_unknown_names(std::vector<std::string> names) {
    if (static_cast<int>(names.size()) != cols_)
        throw std::invalid_argument("operator matrix: unknown name count mismatch");
    unknown_names_ = std::move(names);
}

void OperatorMatrix::set_equation_names(std::vector<std::string> names) {
    if (static_cast<int>(names.size()) != rows_)
        throw std::invalid_argument("operator matrix: equation name count mismatch");
    equation_names_ = std::move(names);
}

OperatorMatrix adjoint(const OperatorMatrix& a) {
    OperatorMatrix out = a.transpose();
    for (int i = 0; i < out.rows(); ++i)
        for (int k = 0; k < out.cols(); ++k) out.set(i, k, out.at(i, k).negate_vars());
    return out;
}

OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("compose: shape mismatch");
    if (a.nvars() != b.nvars()) throw std::invalid_argument("compose: nvars mismatch");
    OperatorMatrix out(a.rows(), b.cols(), a.nvars());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < b.cols(); ++k) {
            Polynomial acc(a.nvars());
            for (int j = 0; j < a.cols(); ++j) acc = acc + a.at(i, j) * b.at(j, k);
            out.set(i, k, std::move(acc));
        }
    out.set_equation_names(a.equation_names());
    out.set_unknown_names(b.unknown_names());
    return out;
}

bool adjoint_contravariance_check(const OperatorMatrix& a, const OperatorMatrix& b) {
    return adjoint(compose(a, b)) == compose(adjoint(b), adjoint(a));
}

OperatorMatrix substitute_params(const OperatorTemplate& tmpl,
                                 const std::map<std::string, Rational>& bindings) {
    const OperatorMatrix& raw = tmpl.raw;
    int p = static_cast<int>(tmpl.params.size());
    if (raw.nvars() != tmpl.base_nvars + p)
        throw std::invalid_argument("substitute_params: malformed template");
    std::vector<Rational> values;
    for (const auto& name : tmpl.params) {
        auto it = bindings.find(name);
        if (it != bindings.end()) {
            values.push_back(it->second);
            continue;
        }
        auto dt = tmpl.defaults.find(name);
        if (dt == tmpl.defaults.end())
            throw std::invalid_argument("substitute_params: unbound parameter '" + name + "'");
        values.push_back(dt->second);
    }
    OperatorMatrix out(raw.rows(), raw.cols(), tmpl.base_nvars);
    for (int i = 0; i < raw.rows(); ++i)
        for (int k = 0; k < raw.cols(); ++k) {
            Polynomial q = raw.at(i, k);
            for (int j = 0; j < p; ++j)
                q = q.substitute(tmpl.base_nvars + j, values[static_cast<size_t>(j)]);
            out.set(i, k, q.shrink_vars(tmpl.base_nvars));
        }
    out.set_unknown_names(raw.unknown_names());
    out.set_equation_names(raw.equation_names());
    return out;
}

}  // namespace parametrix
