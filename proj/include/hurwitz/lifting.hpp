// The lifting invariant: the product of the unique order-2 lifts of a
// tuple's entries, landing in the order-3 central kernel of the Valentiner
// cover.  Constant on braid orbits and inner classes; its order is constant
// on absolute classes.
#pragma once

#include <set>

#include "hurwitz/nielsen.hpp"

namespace hurwitz {

struct LiftValue {
    Perm18 element;   // sigma^exponent
    int exponent;     // 0, 1 or 2
    int order() const { return exponent == 0 ? 1 : 3; }
};

// requires: every entry in the class (structural) and product of entries
// equal to the identity; transitivity is NOT required
LiftValue lifting_invariant(const Tuple& t);
int lift_order(const Tuple& t);

// exponents attained over all full-monodromy tuples of length k, read off
// the orbit classification (k = 7 allowed when opted in)
std::set<int> spectrum(int k, int workers, bool allow_k7 = false);

}  // namespace hurwitz
