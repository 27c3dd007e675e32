#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ordspec/errors.hpp"
#include "ordspec/perm.hpp"

using namespace ordspec;

TEST_CASE("composition reads left to right") {
    Permutation a = parse_perm("(1,2,3)", 3);
    Permutation b = parse_perm("(1,2)", 3);
    // (a*b)(x) = b(a(x)): 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
    Permutation ab = a * b;
    CHECK(ab.apply0(0) == 0);
    CHECK(ab.apply0(1) == 2);
    CHECK(ab.apply0(2) == 1);
    Permutation ba = b * a;
    CHECK(ba.apply0(0) == 2);
    CHECK(ab != ba);
}

TEST_CASE("identity, inverse, powers, order") {
    Permutation id = Permutation::identity(6);
    CHECK(id.is_identity());
    CHECK(id.order() == 1);

    Permutation p = parse_perm("(1,2)(3,4,5)", 6);
    CHECK(p.order() == 6);
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.pow(6).is_identity());
    CHECK(p.pow(-1) == p.inverse());
    CHECK(p.pow(7) == p);
    CHECK(p.pow(0) == Permutation::identity(6));

    // order is the lcm of the cycle lengths
    CHECK(parse_perm("(1,2,3,4)(5,6,7,8,9,10)").order() == 12);
}

TEST_CASE("conjugation is rhs^-1 * lhs * rhs") {
    Permutation p = parse_perm("(1,2,3)", 5);
    Permutation c = parse_perm("(3,4,5)", 5);
    CHECK(p.conjugated_by(c) == c.inverse() * p * c);
    // conjugate of a 3-cycle relabels its points
    CHECK(p.conjugated_by(c) == parse_perm("(1,2,4)", 5));
    CHECK(p.conjugated_by(c).order() == p.order());
}

TEST_CASE("cycle and image notation parse to the same permutation") {
    CHECK(parse_perm("(1,2,3)") == parse_perm("[2,3,1]"));
    CHECK(parse_perm("(2,3)", 4) == parse_perm("[1,3,2,4]"));
    CHECK(parse_perm("()") == Permutation::identity(0));
    CHECK(parse_perm("()", 5) == Permutation::identity(5));
    CHECK(parse_perm("(1,2)", 4).degree() == 4);
    // degree inferred from the largest point
    CHECK(parse_perm("(2,7)").degree() == 7);
    CHECK(parse_perm(" ( 1 , 2 ) ( 4 , 5 ) ") == parse_perm("(1,2)(4,5)"));
}

TEST_CASE("malformed permutation text is rejected") {
    CHECK_THROWS_AS(parse_perm("(1,2"), value_error);
    CHECK_THROWS_AS(parse_perm("(1,1)"), value_error);
    CHECK_THROWS_AS(parse_perm("(1,2)(2,3)"), value_error);
    CHECK_THROWS_AS(parse_perm("[2,2]"), value_error);
    CHECK_THROWS_AS(parse_perm("[2,3]"), value_error);
    CHECK_THROWS_AS(parse_perm("(0,1)"), value_error);
    CHECK_THROWS_AS(parse_perm("(1,5)", 3), value_error);
    CHECK_THROWS_AS(parse_perm("1,2,3"), value_error);
    CHECK_THROWS_AS(parse_perm(""), value_error);
    CHECK_THROWS_AS(parse_perm("(1,2))"), value_error);
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 0}), value_error);
    CHECK_THROWS_AS(parse_perm("(1,2)") * parse_perm("(1,2,3)"), value_error);
}

TEST_CASE("cycle strings are canonical") {
    CHECK(to_cycle_string(parse_perm("(2,3,1)")) == "(1,2,3)");
    CHECK(to_cycle_string(parse_perm("(4,5)(1,2)", 6)) == "(1,2)(4,5)");
    CHECK(to_cycle_string(Permutation::identity(9)) == "()");
    // fixed points are dropped
    CHECK(to_cycle_string(parse_perm("[1,3,2,4]")) == "(2,3)");
}

TEST_CASE("parse inverts to_cycle_string on random permutations") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned degree = 1 + rng() % 40;
        std::vector<std::uint16_t> im(degree);
        for (unsigned i = 0; i < degree; ++i)
            im[i] = static_cast<std::uint16_t>(i);
        std::shuffle(im.begin(), im.end(), rng);
        Permutation p = Permutation::from_images(im);
        CHECK(parse_perm(to_cycle_string(p), degree) == p);
    }
}
