#ifndef PARAMETRIX_JANET_HPP
#define PARAMETRIX_JANET_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "parametrix/diffop.hpp"
#include "parametrix/module_vector.hpp"

namespace parametrix {

// One solved equation of an involutive presentation: leading jet, class,
// and the multiplicative derivations the class rule assigns to it.
struct ClassifiedEquation {
    ModuleVector row;               // monic at the leading jet
    int order = 0;                  // total degree of the leading jet
    int klass = 0;                  // class of the leading multi-index
    std::vector<int> multiplicative;  // 1-based derivation indices
};

struct InvolutiveSystem {
    std::vector<ClassifiedEquation> equations;
    int nvars = 0;
    int unknowns = 0;
    bool involutive = false;
    // chi_i -> sum_j coordinate_change[i][j] * chi'_j applied to reach
    // delta-regularity; identity when none was needed.
    std::vector<std::vector<Rational>> coordinate_change;

    int order() const;
};

struct InvolutionWitness {
    bool involutive = true;
    int row_index = -1;    // offending equation (echelon order)
    int derivation = 0;    // 1-based nonmultiplicative derivation
    ModuleVector remainder;  // irreducible part of the prolongation
};

struct CompletionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompletionOptions {
    int degree_cap = 10;
    unsigned seed = 0;
};

// Multiplicative variables by the class rule, one subset per monomial
// (all monomials treated as top-order leads).
std::vector<std::vector<int>> janet_multiplicative(const std::vector<Monomial>& leads);

// Definition check: every nonmultiplicative prolongation must reduce to
// zero against multiplicative-monomial multiples of the system.
InvolutionWitness is_involutive(const std::vector<ModuleVector>& rows, int nvars);

// Complete to involution, trying coordinate permutations first and then
// seeded random unimodular changes; fails when the degree cap is exceeded
// under every candidate change.
InvolutiveSystem involutive_completion(const std::vector<ModuleVector>& rows, int nvars,
                                       const CompletionOptions& opts = CompletionOptions{});

// Application of the class count: t(M) = M iff the involutive system has
// exactly m equations of order q and class n.
bool full_torsion_check(const InvolutiveSystem& sys);

struct SpencerForm {
    OperatorMatrix op;  // first order, no zero-order equations
    std::vector<std::string> new_unknowns;
};

// Reduce an involutive order-q system to the equivalent first-order system
// on the parametric jets of order < q.
SpencerForm spencer_form(const InvolutiveSystem& sys,
                         const std::vector<std::string>& base_names = {});

}  // namespace parametrix

#endif
