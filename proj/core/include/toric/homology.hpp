#pragma once

#include <cstdint>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

// The simplicial complex of all fan cones whose rays carry a non-negative
// coefficient. Faces are ray-index bitmasks; the empty face (the zero cone)
// is always present.
struct SupportComplex {
    std::size_t vertex_universe = 0;     // ray count of the fan
    std::uint32_t vertices = 0;          // rays present in the complex
    std::vector<std::uint32_t> facets;   // maximal faces; empty for the empty complex
    int max_dim = -1;                    // -1 when only the empty face remains
};

SupportComplex support_complex(const Fan& fan, std::uint32_t nonneg_rays);

// Reduced homology dimensions over the rationals. dims[k] stores the
// dimension in degree k-1, so the empty complex has dims = {1}.
struct HomologyProfile {
    std::vector<std::int64_t> dims;

    std::int64_t dim(int degree) const {
        const int k = degree + 1;
        return (k >= 0 && static_cast<std::size_t>(k) < dims.size()) ? dims[static_cast<std::size_t>(k)] : 0;
    }
    bool zero() const;
    std::int64_t total() const;
    bool operator==(const HomologyProfile& o) const;
};

// Ranks of the boundary maps by fraction-free integer elimination, with the
// augmentation map to the empty face included.
HomologyProfile reduced_homology(const SupportComplex& c);

}  // namespace toric
