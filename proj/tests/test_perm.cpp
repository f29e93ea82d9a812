#include <random>

#include "doctest.h"
#include "hurwitz/perm.hpp"

using namespace hurwitz;

namespace {

Perm6 p6(const char* s) { return parse_perm<6>(s); }

Perm6 random_perm6(std::mt19937_64& rng) {
    Perm6 p = Perm6::identity();
    for (int i = 5; i > 0; --i) {
        int j = int(rng() % uint64_t(i + 1));
        std::swap(p.img[i], p.img[j]);
    }
    return p;
}

}  // namespace

TEST_CASE("composition basics") {
    Perm6 id = Perm6::identity();
    Perm6 a = p6("(1,2)(3,4)");
    CHECK(id * a == a);
    CHECK(a * id == a);
    CHECK(a * a.inverse() == id);
    // left-to-right: apply (1,2)(3,4) first, then (1,3)(2,4)
    CHECK(p6("(1,2)(3,4)") * p6("(1,3)(2,4)") == p6("(1,4)(2,3)"));
}

TEST_CASE("composition properties hold on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Perm6 a = random_perm6(rng), b = random_perm6(rng), c = random_perm6(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).inverse() == b.inverse() * a.inverse());
        bool pa = parity(a) == Parity::odd, pb = parity(b) == Parity::odd;
        CHECK((parity(a * b) == Parity::odd) == (pa != pb));
    }
}

TEST_CASE("conjugation") {
    Perm6 x = p6("(1,2)(3,4)");
    CHECK(conjugate(x, Perm6::identity()) == x);
    CHECK(conjugate(x, p6("(5,6)")) == x);           // disjoint support
    CHECK(conjugate(x, p6("(1,3)(2,4)")) == x);      // commuting element
    CHECK(conjugate(x, p6("(1,5)")) == p6("(2,5)(3,4)"));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Perm6 a = random_perm6(rng), s = random_perm6(rng);
        CHECK(conjugate(a, s) == s.inverse() * a * s);
        CHECK(order(conjugate(a, s)) == order(a));
    }
}

TEST_CASE("order, parity, fixed points") {
    CHECK(order(p6("(1,2)(3,4)")) == 2);
    CHECK(order(p6("(1,2,4,5)(3,6)")) == 4);
    CHECK(parity(p6("(1,2,4,5)(3,6)")) == Parity::even);  // 3 + 1 transpositions
    CHECK(parity(p6("(1,2)")) == Parity::odd);
    CHECK(fixed_points(p6("(1,2)(3,4)")) == ((1u << 4) | (1u << 5)));
    CHECK(fixed_points(Perm6::identity()) == 0x3fu);
}

TEST_CASE("cycle notation round trip and canonical form") {
    CHECK(cycle_string(Perm6::identity()) == "()");
    CHECK(cycle_string(p6("(3,4)(1,2)")) == "(1,2)(3,4)");
    CHECK(cycle_string(p6("(2,1)")) == "(1,2)");
    CHECK(p6("( 1 , 2 ) ( 3 , 4 )") == p6("(1,2)(3,4)"));
    CHECK(p6("()") == Perm6::identity());
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        Perm6 a = random_perm6(rng);
        CHECK(parse_perm<6>(cycle_string(a)) == a);
    }
    Perm18 big = parse_perm<18>("(1,3,5)(2,8,9)(4,10,12)(6,13,7)(11,14,16)(15,17,18)");
    CHECK(parse_perm<18>(cycle_string(big)) == big);
    CHECK(order(big) == 3);
}

TEST_CASE("cycle notation rejects malformed input") {
    CHECK_THROWS_AS(parse_perm<6>(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm<6>("(1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm<6>("(1,7)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm<6>("(1,2)(2,3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm<6>("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm<6>("(0,1)"), std::invalid_argument);
}

TEST_CASE("tuple parsing") {
    auto v = parse_perm_list<6>("(1,2)(3,4) (1,3)(2,4)  (1,4)(2,3)");
    REQUIRE(v.size() == 3);
    CHECK(v[0] == p6("(1,2)(3,4)"));
    CHECK(v[2] == p6("(1,4)(2,3)"));
    CHECK_THROWS_AS(parse_perm_list<6>("   "), std::invalid_argument);
}
