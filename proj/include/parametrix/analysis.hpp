#ifndef PARAMETRIX_ANALYSIS_HPP
#define PARAMETRIX_ANALYSIS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parametrix/diffop.hpp"
#include "parametrix/groebner.hpp"

namespace parametrix {

// A row of D' outside the row module of D, read as a linear combination of
// the unknowns and their derivatives, together with a nonzero annihilator
// when the bounded search finds one.
struct TorsionCertificate {
    ModuleVector element;
    std::string element_label;
    std::optional<Polynomial> annihilator;
    bool exhausted = false;  // no annihilator within the degree bound
};

// Full trace of the five-step torsion-free test.
struct TestReport {
    OperatorMatrix input;                     // D
    OperatorMatrix adjoint_of_input;          // ad(D)
    OperatorMatrix cc_of_adjoint;             // ad(D_{-1})
    OperatorMatrix candidate_parametrization; // D_{-1}
    OperatorMatrix cc_of_candidate;           // D'
    bool torsion_free = false;
    std::vector<TorsionCertificate> torsion;
    std::map<std::string, int> orders;        // per-operator max orders
    std::map<std::string, double> timing_ms;
};

struct Parametrization {
    OperatorMatrix op;  // D_{-1}: unknowns = potentials
    std::vector<std::string> potential_names;
    int order = 0;
};

struct UnsupportedCorankError : std::runtime_error {
    explicit UnsupportedCorankError(int corank_)
        : std::runtime_error("unsupported corank " + std::to_string(corank_) + " (expected 1)"),
          corank(corank_) {}
    int corank;
};

// Generating set (minimized, interreduced) of left-multipliers C with
// C * A = 0; zero-row matrix when the left kernel is trivial.
OperatorMatrix compatibility_conditions(const OperatorMatrix& a,
                                        const MonomialOrder& ord = MonomialOrder{});

TestReport torsion_free_test(const OperatorMatrix& a, const MonomialOrder& ord = MonomialOrder{});

Parametrization parametrize(const OperatorMatrix& a, const MonomialOrder& ord = MonomialOrder{});

std::vector<TorsionCertificate> extract_torsion(const OperatorMatrix& a,
                                                const MonomialOrder& ord = MonomialOrder{});

// Both presentations show torsion, or neither does.
bool presentation_independence_check(const OperatorMatrix& a1, const OperatorMatrix& a2,
                                     const MonomialOrder& ord = MonomialOrder{});

// Rank over the field of rational functions (fraction-free elimination).
int generic_rank(const OperatorMatrix& a, const MonomialOrder& ord = MonomialOrder{});

// Single-potential parametrization by solving over the fraction field and
// clearing denominators; requires generic corank exactly 1.
Parametrization localize_corank1(const OperatorMatrix& a, const MonomialOrder& ord = MonomialOrder{});

// Bounded annihilator search for e modulo the row module of D held in gb:
// monomial multiples first, then lowest-degree rational combinations, up to
// total degree `bound`.
struct AnnihilatorResult {
    std::optional<Polynomial> poly;
    bool exhausted = false;
};
AnnihilatorResult find_annihilator(const ModuleVector& e, const GroebnerBasis& gb, int bound);

// "y1 - d1*y3" style rendering of a module vector over component names.
std::string render_linear_combination(const ModuleVector& v, const std::vector<std::string>& names,
                                      const MonomialOrder& ord = MonomialOrder{});

}  // namespace parametrix

#endif
