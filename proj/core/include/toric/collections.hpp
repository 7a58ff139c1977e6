#pragma once

#include <string>
#include <vector>

#include "toric/cohomology.hpp"
#include "toric/fan.hpp"
#include "toric/fibration.hpp"

namespace toric {

// An ordered list of distinct line-bundle classes on one fan, stored as
// canonical representations.
struct OrderedCollection {
    FanPtr fan;
    std::vector<Vec> classes;

    std::size_t size() const { return classes.size(); }
};

// Canonicalizes the given coefficient vectors and checks distinctness.
OrderedCollection make_collection(FanPtr fan, std::vector<Vec> raw);

struct CollectionReport {
    bool is_exceptional = false;
    bool is_strongly_exceptional = false;
    bool length_equals_k0_rank = false;
    bool gram_unitriangular = false;

    std::size_t length = 0;
    std::size_t k0_rank = 0;

    // ext[j][k][i] = dim Ext^i(E_j, E_k) = h^i(E_k - E_j)
    std::vector<std::vector<std::vector<Int>>> ext;
    // gram[j][k] = chi(E_j, E_k)
    std::vector<std::vector<Int>> gram;

    int verdicts_true() const;
};

// Evaluates every Ext group of the collection through the cohomology
// engine and fills in the four verdicts and the Gram matrix.
CollectionReport check_collection(const OrderedCollection& c);

// Tensor every class by the given one; order preserved, verdicts invariant.
OrderedCollection global_twist(const OrderedCollection& c, const Vec& cls);

struct FibrationCollectionResult {
    int t = 0;                    // first twist scale that verifies
    OrderedCollection collection;
    CollectionReport report;
    std::string fullness;         // certification trail, not a computation
};

// The twist-scale search was exhausted; carries the best attempt.
struct SearchExhausted : Error {
    SearchExhausted(int cap, int best_t, CollectionReport best);
    int cap;
    int best_t;
    CollectionReport best;
};

// Interleaves a strongly exceptional fiber collection with a strongly
// exceptional base collection, block k twisted by k*t*step, and returns the
// first t <= t_cap for which the assembled collection verifies strongly
// exceptional on the total space. Fullness of the output is certified by
// the inputs' asserted fullness together with the verified length
// accounting, not recomputed.
FibrationCollectionResult synthesize_fibration_collection(const FibrationBundle& b,
                                                          const OrderedCollection& fiber_coll,
                                                          const OrderedCollection& base_coll,
                                                          const Divisor& step, int t_cap = 8);

}  // namespace toric
