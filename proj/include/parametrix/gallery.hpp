#ifndef PARAMETRIX_GALLERY_HPP
#define PARAMETRIX_GALLERY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parametrix/diffop.hpp"

namespace parametrix {

struct ExpectedResults {
    std::optional<bool> torsion_free;
    std::optional<int> parametrization_order;
    std::optional<int> potentials;
    std::optional<int> cc_rows;
    std::string note;  // provenance / caveats
};

struct GalleryEntry {
    std::string name;
    OperatorMatrix op;
    ExpectedResults expected;
};

struct GalleryInfo {
    std::string name;
    std::string supported_n;
    std::string params;
    std::string expected;  // verdict summary with provenance note
    bool known_torsion_config = false;
};

// name in {stress, killing, cosserat-d1, cosserat-adjoint, kalman,
// maxwell-first, einstein}; kalman requires parameter a and n = 1.
GalleryEntry gallery_build(const std::string& name, int n,
                           const std::map<std::string, Rational>& params);

std::vector<GalleryInfo> gallery_catalog();

}  // namespace parametrix

#endif
