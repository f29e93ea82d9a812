#include <random>

#include "doctest.h"
#include "hurwitz/lifting.hpp"
#include "hurwitz/reduce.hpp"

using namespace hurwitz;

namespace {

Tuple T(const char* s) { return parse_tuple(s); }

Tuple random_nielsen6(std::mt19937_64& rng) {
    const Universe& u = Universe::get();
    const SubgroupLattice& lat = u.lattice();
    while (true) {
        Tuple t;
        t.k = 6;
        uint16_t prod = u.identity_id();
        for (int i = 0; i < 5; ++i) {
            t.e[i] = uint8_t(rng() % 45);
            prod = u.mul(prod, u.class_elem(t.e[i]));
        }
        int last = u.class_of_a6(u.inv(prod));
        if (last < 0) continue;
        t.e[5] = uint8_t(last);
        if (lat.order_of(tuple_subgroup(t)) != 360) continue;
        return t;
    }
}

}  // namespace

TEST_CASE("product law on equal-fixed-point pairs") {
    const Universe& u = Universe::get();
    CHECK(product_law(parse_perm<6>("(1,2)(3,4)"), parse_perm<6>("(1,2)(3,4)")) ==
          ProductLaw::identity);
    CHECK(product_law(parse_perm<6>("(1,2)(3,4)"), parse_perm<6>("(1,3)(2,4)")) ==
          ProductLaw::in_class);
    // exhaustive: same fixed points never gives 'neither'
    int identity_cases = 0, class_cases = 0, neither_cases = 0;
    for (int a = 0; a < 45; ++a)
        for (int b = 0; b < 45; ++b) {
            if (u.fix_mask(uint8_t(a)) != u.fix_mask(uint8_t(b))) continue;
            switch (product_law(uint8_t(a), uint8_t(b))) {
                case ProductLaw::identity: ++identity_cases; break;
                case ProductLaw::in_class: ++class_cases; break;
                case ProductLaw::neither: ++neither_cases; break;
            }
        }
    CHECK(identity_cases == 45);
    CHECK(class_cases == 90);
    CHECK(neither_cases == 0);
    // the in-class product from the proof
    const Universe& uu = Universe::get();
    uint16_t p = uu.mul(uu.a6_index(parse_perm<6>("(1,3)(2,4)")), uu.a6_index(parse_perm<6>("(1,4)(2,3)")));
    CHECK(uu.a6_at(p) == parse_perm<6>("(1,2)(3,4)"));
}

TEST_CASE("find_reduction basics") {
    // repeated entry anywhere (and no distinct same-fixed-points pair):
    // a two-reduction at depth 0
    Tuple t = T("(1,2)(3,4) (1,3)(2,5) (1,2)(3,4) (1,4)(2,6) (2,3)(4,5)");
    auto r = find_reduction(t, 0);
    REQUIRE(r.has_value());
    CHECK(r->kind == Reduction::Kind::two);
    Tuple s = apply_word(t, r->braid_prefix);
    CHECK(s.e[r->pos] == s.e[r->pos + 1]);

    // a one-reduction pair beats a two-reduction pair at the same depth
    Tuple both = T("(1,2)(3,4) (1,2)(3,4) (1,3)(2,4) (1,4)(2,6) (2,3)(4,5)");
    auto rb = find_reduction(both, 0);
    REQUIRE(rb.has_value());
    CHECK(rb->kind == Reduction::Kind::one);

    // the exceptional quadruple is irreducible at any searched depth
    Tuple quad = T("(1,2)(3,4) (1,2)(3,5) (1,6)(3,4) (1,6)(4,5)");
    CHECK_FALSE(find_reduction(quad, 10).has_value());
}

TEST_CASE("apply_reduction") {
    Tuple t = T("(1,2)(3,4) (1,2)(3,4) (1,3)(2,5) (1,3)(4,6) (2,5)(4,6)");
    Reduction two;
    two.kind = Reduction::Kind::two;
    two.pos = 0;
    Tuple s = apply_reduction(t, two);
    CHECK(tuple_string(s) == "(1,3)(2,5) (1,3)(4,6) (2,5)(4,6)");

    Tuple o = T("(1,3)(2,4) (1,4)(2,3) (1,2)(3,6) (1,2)(3,6) (1,2)(3,4)");
    Reduction one;
    one.kind = Reduction::Kind::one;
    one.pos = 0;
    Tuple so = apply_reduction(o, one);
    CHECK(tuple_string(so) == "(1,2)(3,4) (1,2)(3,6) (1,2)(3,6) (1,2)(3,4)");
    CHECK_THROWS_AS(apply_reduction(o, two), std::invalid_argument);
}

TEST_CASE("reductions preserve the lifting invariant (sample)") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 100) {
        Tuple t = random_nielsen6(rng);
        auto r = find_reduction(t, 3);
        if (!r) continue;
        ++done;
        Tuple s = apply_reduction(t, *r);
        CHECK(lifting_invariant(s).exponent == lifting_invariant(t).exponent);
    }
}

TEST_CASE("force_one_reduction converts a repeated pair via the tail block") {
    std::mt19937_64 rng(37);
    int done = 0;
    while (done < 20) {
        Tuple t = random_nielsen6(rng);
        auto r = find_reduction(t, 2);
        if (!r || r->kind != Reduction::Kind::two) continue;
        auto one = force_one_reduction(t, *r);
        if (!one) continue;
        ++done;
        CHECK(one->kind == Reduction::Kind::one);
        Tuple s = apply_reduction(t, *one);
        CHECK(s.k == t.k - 1);
        CHECK(lifting_invariant(s).exponent == lifting_invariant(t).exponent);
    }
}

TEST_CASE("generator pruning") {
    // a generating class triple is its own witness
    std::vector<Perm6> triple = {parse_perm<6>("(1,2)(3,4)"), parse_perm<6>("(1,3)(2,5)"),
                                 parse_perm<6>("(1,4)(5,6)")};
    REQUIRE(GroupTable<6>::close(triple).order() == 360);
    auto pr3 = prune_generators(triple, 3, 2);
    REQUIRE(pr3.has_value());
    CHECK(pr3->braid_word.empty());
    CHECK(GroupTable<6>::close(pr3->witness).order() == 360);

    // the published quadruple with no generating 3-subset: the braid search
    // must still find a generating triple
    std::vector<Perm6> quad = {parse_perm<6>("(1,2)(3,4)"), parse_perm<6>("(1,2)(3,5)"),
                               parse_perm<6>("(1,2)(4,6)"), parse_perm<6>("(1,3)(2,4)")};
    REQUIRE(GroupTable<6>::close(quad).order() == 360);
    bool any_triple = false;
    for (int a = 0; a < 4 && !any_triple; ++a)
        for (int b = a + 1; b < 4 && !any_triple; ++b)
            for (int c = b + 1; c < 4 && !any_triple; ++c)
                if (GroupTable<6>::close({quad[a], quad[b], quad[c]}).order() == 360)
                    any_triple = true;
    CHECK_FALSE(any_triple);
    auto pr = prune_generators(quad, 3, 4);
    REQUIRE(pr.has_value());
    CHECK_FALSE(pr->braid_word.empty());
    CHECK(GroupTable<6>::close(pr->witness).order() == 360);

    // 4-subsets of generating 5-sets (sample; the exhaustive scan is b3)
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 25) {
        std::vector<Perm6> s;
        for (int i = 0; i < 5; ++i)
            s.push_back(Universe::get().class_perm(uint8_t(rng() % 45)));
        if (GroupTable<6>::close(s).order() != 360) continue;
        ++done;
        auto w = prune_generators(s, 4, 0);
        REQUIRE(w.has_value());
        CHECK(GroupTable<6>::close(w->witness).order() == 360);
    }
}

TEST_CASE("five-entry prefixes of long tuples always reduce within depth 10") {
    // the induction step works on the first five entries of a length >= 8
    // tuple; spot-check that those prefixes always admit a reduction
    std::mt19937_64 rng(47);
    for (int i = 0; i < 200; ++i) {
        Tuple prefix;
        prefix.k = 5;
        for (int p = 0; p < 5; ++p) prefix.e[p] = uint8_t(rng() % 45);
        CHECK(find_reduction(prefix, 10).has_value());
    }
}

TEST_CASE("lifting a braid equivalence of reductions") {
    std::mt19937_64 rng(43);
    const SubgroupLattice& lat = Universe::get().lattice();

    // trivial instance: identical tuples, empty word
    Tuple t;
    while (true) {
        t = random_nielsen6(rng);
        auto r = find_reduction(t, 3);
        if (r && r->kind == Reduction::Kind::one &&
            lat.order_of(tuple_subgroup(r->result)) == 360) {
            std::vector<Move> w = lift_braid_equivalence(t, t, *r, *r, {});
            CHECK(apply_word(t, w) == t);
            break;
        }
    }

    // random same-orbit pairs, ground truth via BFS between the reductions
    int done = 0;
    while (done < 10) {
        Tuple t1 = random_nielsen6(rng);
        auto r1 = find_reduction(t1, 3);
        if (!r1 || r1->kind != Reduction::Kind::one) continue;
        if (lat.order_of(tuple_subgroup(r1->result)) != 360) continue;
        Tuple t2 = t1;
        for (int m = 0; m < 20; ++m)
            t2 = braid_move(t2, int(rng() % 5), (rng() & 1) ? Dir::forward : Dir::backward);
        auto r2 = find_reduction(t2, 3);
        if (!r2 || r2->kind != Reduction::Kind::one) continue;
        if (lat.order_of(tuple_subgroup(r2->result)) != 360) continue;
        auto w = braid_word_between(apply_reduction(t1, *r1), apply_reduction(t2, *r2));
        if (!w) continue;
        ++done;
        std::vector<Move> word = lift_braid_equivalence(t1, t2, *r1, *r2, *w);
        CHECK(apply_word(t1, word) == t2);
    }
}
