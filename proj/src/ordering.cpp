#include "parametrix/ordering.hpp"

#include <stdexcept>

namespace parametrix {

MonomialOrder MonomialOrder::parse(const std::string& name) {
    MonomialOrder ord;
    if (name == "degrevlex")
        ord.kind = OrderKind::degrevlex;
    else if (name == "deglex")
        ord.kind = OrderKind::deglex;
    else if (name == "lex")
        ord.kind = OrderKind::lex;
    else
        throw std::invalid_argument("unknown monomial order '" + name + "'");
    return ord;
}

std::string MonomialOrder::name() const {
    switch (kind) {
        case OrderKind::degrevlex: return "degrevlex";
        case OrderKind::deglex: return "deglex";
        case OrderKind::lex: return "lex";
    }
    return "?";
}

static int lex_scan(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    }
    return 0;
}

int monomial_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    if (ord.kind == OrderKind::lex) return lex_scan(a, b);
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    if (ord.kind == OrderKind::deglex) return lex_scan(a, b);
    // degrevlex: last differing exponent, smaller wins
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

int module_term_cmp(int comp_a, const Monomial& a, int comp_b, const Monomial& b,
                    const MonomialOrder& ord) {
    if (ord.ext == ModuleExtension::position_over_term) {
        if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
        return monomial_cmp(a, b, ord);
    }
    int c = monomial_cmp(a, b, ord);
    if (c != 0) return c;
    if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
    return 0;
}

int jet_cmp(int comp_a, const Monomial& a, int comp_b, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    // class-respecting tie break: first differing exponent, smaller wins
    // (puts class-n jets on top within a degree)
    for (int i = 0; i < a.nvars(); ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
    return 0;
}

}  // namespace parametrix
