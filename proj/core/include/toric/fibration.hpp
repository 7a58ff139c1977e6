#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

// A toric fiber bundle: fiber fan, base fan, twist matrix, and the
// assembled (or recognized) total fan with the ray correspondence.
//
// Total rays follow the normal form: fiber rays lift flat, base rays of the
// chosen basis cone lift flat, and the remaining base rays pick up the
// twist: ray j lifts to (sum_k twist(k, j) * fiber_basis_ray_k, e_j). Twist
// rows are indexed by the fiber basis cone's rays in ascending order,
// columns by the base free rays in ascending order.
struct FibrationBundle {
    FanPtr fiber;
    FanPtr base;
    FanPtr total;
    PicBasis fiber_pic;
    PicBasis base_pic;
    PicBasis total_pic;
    Mat twist;                        // fiber rank x (#base rays - base rank)
    std::vector<int> fiber_to_total;  // fiber ray index -> total ray index
    std::vector<int> base_to_total;   // base ray index -> total ray index
};

// Assembles the total fan from fiber, base and twist data, validates it,
// and fixes the Picard bases. Throws ConstructionError when the assembled
// fan fails validation (naming the offending cone pair) and
// PreconditionError on malformed inputs.
FibrationBundle build_fibration(FanPtr fiber, FanPtr base, Mat twist,
                                int fiber_basis_cone = 0, int base_basis_cone = 0,
                                std::string name = "");

struct FibrationVerification {
    std::optional<FibrationBundle> bundle;
    std::string reason;  // first failing condition when bundle is empty

    explicit operator bool() const { return bundle.has_value(); }
};

// Checks that `total` carries a fiber-bundle structure with the given rays
// spanning the fiber subspace: the cones inside the subspace form a smooth
// complete fan, the projections form a smooth complete fan, and every
// maximal cone splits. On success reconstructs the twist matrix.
FibrationVerification verify_fibration(FanPtr total, std::vector<int> fiber_rays);

// phi^* H: base-ray coefficients copied through the ray map, fiber rays zero.
Divisor pullback_from_base(const FibrationBundle& b, const Divisor& h);

// L|_F: fiber free-ray coefficients of the canonical form, base part dropped.
Divisor restrict_to_fiber(const FibrationBundle& b, const Divisor& l);

// The bundle on the total space restricting to l on every fiber: canonical
// fiber coefficients placed on the lifted fiber rays.
Divisor lift_from_fiber(const FibrationBundle& b, const Divisor& l);

// rank K_0(total) = rank K_0(fiber) * rank K_0(base), checked on the cone
// count and on the full Poincare polynomial product.
bool rank_k0_check(const FibrationBundle& b);

}  // namespace toric
