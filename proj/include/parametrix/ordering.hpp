#ifndef PARAMETRIX_ORDERING_HPP
#define PARAMETRIX_ORDERING_HPP

#include <string>

#include "parametrix/monomial.hpp"

namespace parametrix {

enum class OrderKind { degrevlex, deglex, lex };

enum class ModuleExtension { position_over_term, term_over_position };

// Total monomial order for the operator symbols, with d1 > d2 > ... > dn.
// The module extension breaks ties between free-module components; the
// lower component index always wins.
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;
    ModuleExtension ext = ModuleExtension::position_over_term;

    static MonomialOrder parse(const std::string& name);  // "lex" | "deglex" | "degrevlex"
    std::string name() const;
};

// -1 if a < b, 0 if equal, +1 if a > b. 1 is the minimum.
int monomial_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

// Compare module terms (component, monomial).
int module_term_cmp(int comp_a, const Monomial& a, int comp_b, const Monomial& b,
                    const MonomialOrder& ord);

// Compare jets y^k_mu the way the class decomposition wants: higher total
// degree first, then within a degree the monomial whose class is larger,
// then the lower unknown index. Returns -1/0/+1 with "bigger jet" = +1.
int jet_cmp(int comp_a, const Monomial& a, int comp_b, const Monomial& b);

}  // namespace parametrix

#endif
