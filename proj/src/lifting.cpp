#include "hurwitz/lifting.hpp"

#include <stdexcept>

#include "hurwitz/classify.hpp"

namespace hurwitz {

LiftValue lifting_invariant(const Tuple& t) {
    const Universe& u = Universe::get();
    if (tuple_product(t) != u.identity_id())
        throw std::invalid_argument("lifting_invariant: product of entries is not the identity");
    Perm18 prod = Perm18::identity();
    for (int i = 0; i < t.k; ++i) prod = prod * u.order2_lift_of_class(t.e[i]);
    int e = u.covering().kernel_exponent(prod);  // throws if outside the kernel
    return LiftValue{prod, e};
}

int lift_order(const Tuple& t) { return lifting_invariant(t).order(); }

std::set<int> spectrum(int k, int workers, bool allow_k7) {
    OrbitReport rep = classify(k, Canon::inner, GroupSel::a6(), ClassifyOptions{workers, allow_k7});
    std::set<int> out;
    for (const auto& o : rep.orbits) out.insert(o.lift_exponent);
    return out;
}

}  // namespace hurwitz
