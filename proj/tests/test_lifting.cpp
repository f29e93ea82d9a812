#include <random>

#include "doctest.h"
#include "hurwitz/lifting.hpp"

using namespace hurwitz;

namespace {
Tuple T(const char* s) { return parse_tuple(s); }
}

TEST_CASE("repeated pairs lift to the identity") {
    for (int c = 0; c < 45; c += 5) {
        Tuple t;
        t.k = 2;
        t.e[0] = t.e[1] = uint8_t(c);
        LiftValue lv = lifting_invariant(t);
        CHECK(lv.exponent == 0);
        CHECK(lv.order() == 1);
        CHECK(lv.element == Perm18::identity());
        CHECK(lift_order(t) == 1);
    }
}

TEST_CASE("the two example 5-tuples lift to the two nontrivial kernel elements") {
    Tuple a = T("(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5)");
    Tuple b = T("(1,2)(3,4) (1,3)(2,4) (1,4)(2,6) (1,5)(2,3) (1,5)(3,6)");
    LiftValue la = lifting_invariant(a), lb = lifting_invariant(b);
    CHECK(la.order() == 3);
    CHECK(lb.order() == 3);
    CHECK(((la.exponent == 1 && lb.exponent == 2) || (la.exponent == 2 && lb.exponent == 1)));
    // conjugation by the odd transposition (5,6) exchanges the two tuples
    uint16_t s56 = Universe::get().s6_index(parse_perm<6>("(5,6)"));
    CHECK(conjugate_tuple(a, s56) == b);
}

TEST_CASE("the two six-point example tuples separate the components") {
    Tuple t0 = T("(1,2)(3,4) (1,2)(3,4) (1,2)(3,6) (1,2)(3,6) (1,3)(2,5) (1,3)(2,5)");
    Tuple t1 = T("(1,2)(3,4) (1,2)(3,4) (1,2)(3,6) (1,2)(5,6) (1,4)(3,5) (1,4)(5,6)");
    CHECK(lifting_invariant(t0).exponent == 0);
    CHECK(lifting_invariant(t1).exponent != 0);
}

TEST_CASE("lifting requires a product-one class tuple") {
    Tuple bad = T("(1,2)(3,4) (1,3)(2,4)");
    CHECK_THROWS_AS(lifting_invariant(bad), std::invalid_argument);
}

TEST_CASE("gamma is invariant under braid moves (sample)") {
    std::mt19937_64 rng(29);
    int checked = 0;
    while (checked < 50) {
        Tuple t;
        t.k = 5;
        uint16_t prod = Universe::get().identity_id();
        for (int i = 0; i < 4; ++i) {
            t.e[i] = uint8_t(rng() % 45);
            prod = Universe::get().mul(prod, Universe::get().class_elem(t.e[i]));
        }
        int last = Universe::get().class_of_a6(Universe::get().inv(prod));
        if (last < 0) continue;
        t.e[4] = uint8_t(last);
        ++checked;
        int e = lifting_invariant(t).exponent;
        Tuple s = t;
        for (int m = 0; m < 20; ++m)
            s = braid_move(s, int(rng() % 4), (rng() & 1) ? Dir::forward : Dir::backward);
        CHECK(lifting_invariant(s).exponent == e);
    }
}

TEST_CASE("spectrum at five and six points") {
    std::set<int> s5 = spectrum(5, 2);
    CHECK(s5 == std::set<int>{1, 2});
    std::set<int> s6 = spectrum(6, 2);
    CHECK(s6 == std::set<int>{0, 1, 2});
}
