#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/collections.hpp"
#include "toric/fan.hpp"
#include "toric/fibration.hpp"

namespace toric::catalog {

// Fan of P^n: rays e_1..e_n and -(e_1+...+e_n), maximal cones all proper
// n-subsets; the cone on the first n rays comes first so the last ray is
// the free one.
FanPtr projective_space(int n);

// (O, O(1), ..., O(n)) on a projective_space fan.
OrderedCollection beilinson_collection(const FanPtr& pn);

// Trivial fibration f1 x f2 (twist zero).
FibrationBundle product(FanPtr f1, FanPtr f2);

// The box product of two factor collections, second factor outermost.
OrderedCollection box_collection(const FibrationBundle& prod, const OrderedCollection& c1,
                                 const OrderedCollection& c2);

// P^1 over P^1 with twist a: rays (1,0), (-1,0), (0,1), (a,-1).
FibrationBundle hirzebruch(int a);

// (O, O(f), O(s), O(s+f)) with f the pullback of a base point and s the
// positive section; strongly exceptional for every a >= 0.
OrderedCollection hirzebruch_collection(const FibrationBundle& f);

// P^1 over P^2 with the given twist on the single base free ray.
FibrationBundle p1_bundle_over_p2(int twist);

// Strongly exceptional six-term collection on p1_bundle_over_p2.
OrderedCollection p1_bundle_over_p2_collection(const FibrationBundle& b);

// Named construction for the command line: "pn N", "product N M",
// "hirzebruch A", "p1-over-p2 G".
struct Entry {
    std::optional<FanPtr> fan;
    std::optional<FibrationBundle> bundle;
    std::optional<OrderedCollection> reference;

    FanPtr main_fan() const { return fan ? *fan : bundle->total; }
};
std::optional<Entry> make(const std::string& name, const std::vector<int>& params);
std::vector<std::string> names();

}  // namespace toric::catalog
