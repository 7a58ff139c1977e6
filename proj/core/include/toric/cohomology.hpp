#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "toric/fan.hpp"
#include "toric/fibration.hpp"
#include "toric/homology.hpp"

namespace toric {

// Homology profiles of every sign pattern of a fan. Patterns are
// divisor-independent, so the table is computed once per fan and shared by
// every cohomology call; population is safe from concurrent threads because
// all writers compute identical values.
class PatternTable {
  public:
    struct Entry {
        std::uint32_t pattern;
        HomologyProfile homology;
    };

    static std::shared_ptr<const PatternTable> for_fan(const FanPtr& fan);

    // Patterns whose support complex has nonzero reduced homology; every
    // other pattern contributes nothing regardless of the divisor.
    const std::vector<Entry>& nonzero() const { return nonzero_; }

    HomologyProfile profile(std::uint32_t pattern) const;

  private:
    explicit PatternTable(FanPtr fan);
    FanPtr fan_;  // pins the fan so registry keys cannot be reused
    std::vector<Entry> nonzero_;
};

struct PatternContribution {
    std::uint32_t pattern;      // rays with non-negative coefficient
    Int points;                 // lattice points of the pattern's character region
    HomologyProfile homology;   // of the pattern's support complex
};

struct CohomologyTable {
    std::vector<Int> h;                        // h^0 .. h^n
    std::vector<PatternContribution> ledger;   // nonzero contributions only

    Int euler() const;  // alternating sum of h
};

// Full line-bundle cohomology by sign-pattern enumeration: h^p collects,
// over every pattern with nonzero homology, (#lattice points of the
// pattern's region) x (homology dimension in degree n-1-p). Throws
// CohomologyError when a contributing region is unbounded, which cannot
// happen on a valid complete fan.
CohomologyTable cohomology(const Divisor& l);

// h^i = 0 for every i >= 1.
bool is_acyclic(const Divisor& l);

// chi(O(a), O(b)) = sum_k (-1)^k dim Ext^k = sum_k (-1)^k h^k(b - a).
Int euler_pairing(const Divisor& a, const Divisor& b);

struct DecomposedRepresentation {
    Vec fiber_part;            // coefficients on the fiber rays
    Vec base_part;             // coefficients on the base rays
    Divisor twist_correction;  // the divisor D with coefficient
                               // sum_k fiber_part[basis ray k] * twist(k, j)
                               // on base free ray j
};

// Splits a representation r of a bundle on a fibration total space into a
// fiber representation, a base representation, and the twist-correction
// divisor: fiber_part represents the fiber restriction, and base_part
// represents the base class shifted by the correction. Throws
// PreconditionError when r does not represent the given bundle.
DecomposedRepresentation decompose_representation(const FibrationBundle& b,
                                                  const Divisor& bundle_on_total, const Vec& r);

// Reduced homology of the total support complex equals the join convolution
// of the fiber and base support homologies.
bool kunneth_check(const FibrationBundle& b, const Vec& r);

// For a non-effective acyclic bundle on the fiber, its lift tensored with
// any pullback from the base stays acyclic on the total space. The
// preconditions on the fiber bundle are enforced.
bool acyclic_pullback_check(const FibrationBundle& b, const Divisor& fiber_bundle,
                            const Divisor& base_bundle);

}  // namespace toric
