#ifndef PARAMETRIX_DIFFOP_HPP
#define PARAMETRIX_DIFFOP_HPP

#include <map>
#include <string>
#include <vector>

#include "parametrix/module_vector.hpp"

namespace parametrix {

// Linear constant-coefficient differential operator as an r x m polynomial
// matrix: equation i reads sum_k entries[i][k](d) y^k = 0. Unknown and
// equation labels ride along so reports can print the source names.
class OperatorMatrix {
public:
    OperatorMatrix() : rows_(0), cols_(0), nvars_(0) {}
    OperatorMatrix(int rows, int cols, int nvars);

    static OperatorMatrix identity(int m, int nvars);
    static OperatorMatrix from_rows(const std::vector<ModuleVector>& rows, int cols, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    const Polynomial& at(int i, int k) const;
    void set(int i, int k, Polynomial p);

    ModuleVector row(int i) const;
    std::vector<ModuleVector> row_vectors() const;
    ModuleVector col(int k) const;

    // Max total degree among entries; 0 for a zero or empty matrix.
    int max_order() const;
    bool is_zero() const;

    OperatorMatrix transpose() const;

    const std::vector<std::string>& unknown_names() const { return unknown_names_; }
    const std::vector<std::string>& equation_names() const { return equation_names_; }
    void set_unknown_names(std::vector<std::string> names);
    void set_equation_names(std::vector<std::string> names);

    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const OperatorMatrix& a, const OperatorMatrix& b) { return !(a == b); }

private:
    int rows_, cols_, nvars_;
    std::vector<Polynomial> entries_;  // row-major
    std::vector<std::string> unknown_names_, equation_names_;
};

// Formal adjoint: transpose with d_i -> -d_i in every entry. An involution.
OperatorMatrix adjoint(const OperatorMatrix& a);

// Exact polynomial matrix product A*B (composition A after B).
OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b);

// ad(AB) == ad(B) ad(A); holds identically, exposed as a self-test.
bool adjoint_contravariance_check(const OperatorMatrix& a, const OperatorMatrix& b);

// Operator whose entries may mention named rational parameters. Parameters
// are modelled as extra trailing symbols of the underlying matrix.
struct OperatorTemplate {
    OperatorMatrix raw;                    // nvars = base_nvars + params.size()
    int base_nvars = 0;
    std::vector<std::string> params;
    std::map<std::string, Rational> defaults;
};

// Replace every parameter by its binding (or in-template default); the
// result is fully numeric over the base symbols.
OperatorMatrix substitute_params(const OperatorTemplate& tmpl,
                                 const std::map<std::string, Rational>& bindings);

}  // namespace parametrix

#endif
