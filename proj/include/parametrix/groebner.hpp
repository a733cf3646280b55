#ifndef PARAMETRIX_GROEBNER_HPP
#define PARAMETRIX_GROEBNER_HPP

#include <optional>
#include <vector>

#include "parametrix/module_vector.hpp"

namespace parametrix {

// Reduced Groebner basis of a submodule of A^m. Generators are monic and
// sorted descending by leading term, so equal modules have equal bases.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<ModuleVector> gens, MonomialOrder ord, int rank, int nvars);

    const std::vector<ModuleVector>& generators() const { return gens_; }
    const MonomialOrder& order() const { return ord_; }
    int rank() const { return rank_; }
    int nvars() const { return nvars_; }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.rank_ == b.rank_ && a.gens_ == b.gens_;
    }

private:
    std::vector<ModuleVector> gens_;
    MonomialOrder ord_;
    int rank_;
    int nvars_;
};

// Buchberger's algorithm; returns the reduced basis. Deterministic for a
// fixed order and input sequence; the reduced basis itself only depends on
// the module and the order.
GroebnerBasis buchberger(const std::vector<ModuleVector>& gens, const MonomialOrder& ord,
                         int rank, int nvars);

// Fully reduced remainder of v modulo gb; zero iff v lies in the module.
ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb);

bool membership(const ModuleVector& v, const GroebnerBasis& gb);

bool module_equal(const std::vector<ModuleVector>& gens_a, const std::vector<ModuleVector>& gens_b,
                  const MonomialOrder& ord, int rank, int nvars);

// Rows s satisfy sum_i s_i * gens_i = 0 exactly and generate the full
// syzygy module (Schreyer-style traces of the Buchberger run). Exactness
// is re-checked by exact multiplication before returning.
struct SyzygyMatrix {
    std::vector<ModuleVector> rows;  // rank = number of input generators
};

SyzygyMatrix syzygies(const std::vector<ModuleVector>& gens, const MonomialOrder& ord,
                      int rank, int nvars);

// Prune a generating set to one with no member lying in the module of the
// others (candidates processed by ascending degree), then tail-reduce each
// survivor against the others. Canonically sorted, primitive-integer rows.
std::vector<ModuleVector> minimize_generators(std::vector<ModuleVector> gens,
                                              const MonomialOrder& ord, int rank, int nvars);

}  // namespace parametrix

#endif
