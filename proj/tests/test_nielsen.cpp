#include <random>

#include "doctest.h"
#include "hurwitz/nielsen.hpp"

using namespace hurwitz;

namespace {

Tuple T(const char* s) { return parse_tuple(s); }

Tuple random_class_tuple(int k, std::mt19937_64& rng) {
    Tuple t;
    t.k = uint8_t(k);
    for (int i = 0; i < k; ++i) t.e[i] = uint8_t(rng() % 45);
    return t;
}

// the six five-point case-analysis tuples
const char* kCase1 = "(1,2)(3,4) (1,2)(3,4) (1,3)(2,5) (1,3)(4,6) (2,5)(4,6)";
const char* kCase2 = "(1,2)(3,4) (1,3)(2,4) (1,4)(2,3) (1,5)(2,6) (1,5)(2,6)";
const char* kCase31 = "(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5)";
const char* kCase32 = "(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (2,3)(4,6) (3,5)(4,6)";
const char* kCase4 = "(1,2)(3,4) (1,3)(2,4) (1,4)(5,6) (2,5)(3,6) (2,6)(3,5)";
const char* kCase5 = "(1,2)(3,4) (1,3)(2,4) (1,5)(4,6) (1,6)(4,5) (2,3)(5,6)";

}  // namespace

TEST_CASE("tuple text round trip") {
    Tuple t = T("(1,2)(3,4) (1,3)(2,4) (1,4)(2,3) (1,5)(2,6) (1,5)(2,6)");
    CHECK(t.k == 5);
    CHECK(tuple_string(t) == "(1,2)(3,4) (1,3)(2,4) (1,4)(2,3) (1,5)(2,6) (1,5)(2,6)");
    CHECK(Tuple::from_key(t.key(), 5) == t);
    CHECK_THROWS_AS(parse_tuple("(1,2,3) (4,5,6)"), std::invalid_argument);  // wrong cycle type
}

TEST_CASE("braid moves: inverses, product, commuting swap") {
    const Universe& u = Universe::get();
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        Tuple t = random_class_tuple(5, rng);
        int pos = int(rng() % 4);
        CHECK(braid_move(braid_move(t, pos, Dir::forward), pos, Dir::backward) == t);
        CHECK(braid_move(braid_move(t, pos, Dir::backward), pos, Dir::forward) == t);
        CHECK(tuple_product(braid_move(t, pos, Dir::forward)) == tuple_product(t));
        CHECK(tuple_subgroup(braid_move(t, pos, Dir::backward)) == tuple_subgroup(t));
    }
    // commuting adjacent entries swap under the forward move
    Tuple c = T("(1,2)(3,4) (1,3)(2,4)");
    Tuple m = braid_move(c, 0, Dir::forward);
    CHECK(tuple_string(m) == "(1,3)(2,4) (1,2)(3,4)");
    (void)u;
}

TEST_CASE("is_nielsen distinguishes the designated group") {
    GroupTable<6> a6 = Universe::get().a6_table();
    Tuple pair = T("(1,2)(3,4) (1,2)(3,4)");
    GroupTable<6> c2 = GroupTable<6>::close({parse_perm<6>("(1,2)(3,4)")});
    CHECK(is_nielsen(pair, c2));
    CHECK_FALSE(is_nielsen(pair, a6));
    CHECK(is_nielsen(T(kCase31), a6));
    GroupTable<6> g24 = GroupTable<6>::close(tuple_perms(T(kCase2)));
    CHECK(g24.order() == 24);
    CHECK_FALSE(is_nielsen(T(kCase2), a6));
    CHECK(is_nielsen(T(kCase2), g24));
}

TEST_CASE("canonical keys are constant on conjugation orbits") {
    const Universe& u = Universe::get();
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        Tuple t = random_class_tuple(5, rng);
        uint64_t ki = canonical_key(t, Canon::inner);
        uint64_t ka = canonical_key(t, Canon::abs);
        uint16_t s = uint16_t(rng() % Universe::kS6Order);
        Tuple c = conjugate_tuple(t, s);
        CHECK(canonical_key(c, Canon::abs) == ka);
        if (u.s6_is_even(s)) CHECK(canonical_key(c, Canon::inner) == ki);
        // a canonical representative canonicalizes to itself
        Tuple rep = Tuple::from_key(ki, 5);
        CHECK(canonical_key(rep, Canon::inner) == ki);
    }
}

TEST_CASE("the two example 5-tuples: distinct inner keys, equal absolute keys") {
    Tuple a = T(kCase31);
    Tuple b = T("(1,2)(3,4) (1,3)(2,4) (1,4)(2,6) (1,5)(2,3) (1,5)(3,6)");
    // they differ by conjugation with the odd transposition (5,6)
    CHECK(conjugate_tuple(a, Universe::get().s6_index(parse_perm<6>("(5,6)"))) == b);
    CHECK(canonical_key(a, Canon::inner) != canonical_key(b, Canon::inner));
    CHECK(canonical_key(a, Canon::abs) == canonical_key(b, Canon::abs));
}

TEST_CASE("enumeration counts, with the quadratic scan as oracle at k=3") {
    const Universe& u = Universe::get();
    // independent oracle: scan all 45x45 pairs, the third entry is forced
    uint64_t scan = 0;
    for (int a = 0; a < 45; ++a)
        for (int b = 0; b < 45; ++b) {
            uint16_t p = u.mul(u.class_elem(uint8_t(a)), u.class_elem(uint8_t(b)));
            if (u.class_of_a6(u.inv(p)) >= 0) ++scan;
        }
    CHECK(scan == 180);
    CHECK(enumerate_class_tuples(3, nullptr) == scan);

    uint64_t pairs = 0;
    enumerate_class_tuples(2, [&](const Tuple& t) {
        CHECK(t.e[0] == t.e[1]);
        ++pairs;
    });
    CHECK(pairs == 45);
    CHECK(enumerate_class_tuples(4, nullptr) == 14265);
    CHECK(enumerate_class_tuples(5, nullptr) == 505080);
}

TEST_CASE("three independent routes to the five-point full-monodromy count") {
    const SubgroupLattice& lat = Universe::get().lattice();
    GroupFilter f = GroupFilter::exact(lat.full_id());
    uint64_t by_enum = enumerate_tuples(5, f, nullptr);
    uint64_t by_parallel = count_tuples(5, f, 2);
    uint64_t by_lattice = lat.nielsen_count(5);
    CHECK(by_enum == 311040);
    CHECK(by_parallel == by_enum);
    CHECK(by_lattice == by_enum);
}

TEST_CASE("braid orbits of the five-point cases match the case analysis") {
    // commuting repeated pair: a single state
    Tuple xx = T("(1,2)(3,4) (1,2)(3,4)");
    CHECK(braid_orbit(xx, Canon::none, 1).size() == 1);

    auto o2 = braid_orbit(T(kCase2), Canon::abs, 2);
    CHECK(braid_orbit(T(kCase4), Canon::abs, 2) == o2);
    CHECK(braid_orbit(T(kCase5), Canon::abs, 2) == o2);
    auto o31 = braid_orbit(T(kCase31), Canon::abs, 2);
    CHECK(braid_orbit(T(kCase32), Canon::abs, 2) == o31);
    CHECK(o31 != o2);
    auto o1 = braid_orbit(T(kCase1), Canon::abs, 2);
    CHECK(o1 != o2);
    CHECK(o1 != o31);
}

TEST_CASE("canonicalized orbits are the canonical image of raw orbits") {
    Tuple seed = T(kCase31);
    std::vector<uint64_t> raw = braid_orbit(seed, Canon::none, 2);
    CHECK(raw.size() == 155520);
    std::vector<uint64_t> canon_of_raw;
    canon_of_raw.reserve(raw.size());
    for (uint64_t key : raw)
        canon_of_raw.push_back(canonical_key(Tuple::from_key(key, 5), Canon::inner));
    std::sort(canon_of_raw.begin(), canon_of_raw.end());
    canon_of_raw.erase(std::unique(canon_of_raw.begin(), canon_of_raw.end()), canon_of_raw.end());
    CHECK(canon_of_raw == braid_orbit(seed, Canon::inner, 2));
}

TEST_CASE("braid orbit is deterministic across worker counts") {
    auto s1 = braid_orbit(T(kCase31), Canon::inner, 1);
    auto s2 = braid_orbit(T(kCase31), Canon::inner, 2);
    CHECK(s1 == s2);
    CHECK(s1.size() == 432);
    GroupFilter f = GroupFilter::exact(Universe::get().lattice().full_id());
    CHECK(collect_states(5, f, Canon::inner, 1) == collect_states(5, f, Canon::inner, 2));
}

TEST_CASE("block conjugation") {
    Tuple t = T(kCase2);
    CHECK(block_conjugate(t, 0, 4, Perm6::identity()) == t);
    // repeated pair block, conjugating by the entry itself changes nothing
    Tuple s = T("(1,5)(2,6) (1,5)(2,6) (1,2)(3,4) (1,3)(2,4) (1,4)(2,3)");
    CHECK(block_conjugate(s, 0, 1, parse_perm<6>("(1,5)(2,6)")) == s);
    CHECK_THROWS_AS(block_conjugate(t, 0, 1, Perm6::identity()), std::invalid_argument);
    CHECK_THROWS_AS(block_conjugate(s, 0, 1, parse_perm<6>("(1,2)(3,4)")), std::invalid_argument);

    // a six-point instance: conjugate the product-one head block by its first
    // entry; the braid word realization must reproduce the conjugated tuple
    Tuple h = T("(1,2)(3,4) (1,3)(2,4) (1,4)(2,3) (1,5)(2,6) (1,2)(3,6) (1,2)(3,6)");
    Perm6 gamma = parse_perm<6>("(1,2)(3,4)");
    Tuple want = block_conjugate(h, 0, 2, gamma);
    std::vector<Move> w = block_conjugate_word(h, 0, 2, gamma);
    CHECK(apply_word(h, w) == want);
    // and for a gamma needing a product of entries
    Perm6 gamma2 = parse_perm<6>("(1,2)(3,4)") * parse_perm<6>("(1,3)(2,4)");
    Tuple want2 = block_conjugate(h, 0, 2, gamma2);
    std::vector<Move> w2 = block_conjugate_word(h, 0, 2, gamma2);
    CHECK(apply_word(h, w2) == want2);

    // a full-length product-one block on a genuine full-monodromy tuple
    Tuple g0 = T("(1,2)(3,4) (1,3)(2,4) (1,2)(3,6) (1,2)(4,5) (1,5)(2,6) (3,6)(4,5)");
    REQUIRE(tuple_product(g0) == Universe::get().identity_id());
    Perm6 gamma3 = parse_perm<6>("(1,2)(3,5)");
    Tuple want3 = block_conjugate(g0, 0, 5, gamma3);
    std::vector<Move> w3 = block_conjugate_word(g0, 0, 5, gamma3);
    CHECK(apply_word(g0, w3) == want3);
}

TEST_CASE("sorting by braid moves") {
    Tuple ordered = T(kCase31);
    SortResult r = sort_to_ordered(ordered);
    CHECK(r.tuple == ordered);
    CHECK(r.word.empty());

    // the published ordering example: X is ordered, yet one backward move at
    // the front produces the ordered, lexicographically smaller Y
    Tuple x = T("(1,2)(3,5) (1,2)(4,5) (1,3)(2,6) (1,3)(4,5) (2,6)(3,5)");
    Tuple y = T("(1,2)(3,4) (1,2)(3,5) (1,3)(2,6) (1,3)(4,5) (2,6)(3,5)");
    CHECK(braid_move(x, 0, Dir::backward) == y);
    CHECK(y.key() < x.key());

    // ... and an odd conjugation can also lower an ordered tuple
    Tuple x2 = T("(1,2)(3,4) (1,2)(3,6) (1,3)(4,5) (1,4)(3,5) (1,5)(4,6)");
    Tuple y2 = T("(1,2)(3,4) (1,2)(3,5) (1,3)(4,6) (1,4)(3,6) (1,6)(4,5)");
    CHECK(conjugate_tuple(x2, Universe::get().s6_index(parse_perm<6>("(5,6)"))) == y2);
    CHECK(y2.key() < x2.key());
    SortResult rx = sort_to_ordered(x);
    for (int i = 0; i + 1 < rx.tuple.k; ++i) CHECK(rx.tuple.e[i] <= rx.tuple.e[i + 1]);
    CHECK(apply_word(x, rx.word) == rx.tuple);

    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        Tuple t = random_class_tuple(6, rng);
        SortResult s = sort_to_ordered(t);
        for (int p = 0; p + 1 < s.tuple.k; ++p) CHECK(s.tuple.e[p] <= s.tuple.e[p + 1]);
        CHECK(apply_word(t, s.word) == s.tuple);
    }
}
