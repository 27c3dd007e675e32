#include <doctest.h>

#include <algorithm>

#include "ordspec/errors.hpp"
#include "ordspec/families.hpp"
#include "ordspec/group_ops.hpp"

using namespace ordspec;

namespace {

ElementSet make_group(std::initializer_list<const char*> gens, unsigned degree) {
    std::vector<Permutation> ps;
    for (const char* t : gens)
        ps.push_back(parse_perm(t, degree));
    return ElementSet::generate(ps);
}

} // namespace

TEST_CASE("threaded spectrum equals the serial one") {
    ElementSet s7 = family_group(FamilySpec::make(Family::Sym, 7));
    REQUIRE(s7.size() == 5040); // over the threading threshold
    OrderSpectrum serial = spectrum_of(s7, 1);
    CHECK(serial == sn_spectrum(7));
    CHECK(spectrum_of(s7, 4) == serial);
    CHECK(spectrum_of(s7, 7) == serial);
    CHECK(spectrum_of(s7, 0) == serial);
}

TEST_CASE("center") {
    CHECK(center(make_group({"(1,2,3)", "(1,2)"}, 3)).size() == 1);
    CHECK(center(make_group({"(1,2,3,4)", "(1,2)"}, 4)).size() == 1);
    CHECK(center(make_group({"(1,2,3,4,5,6)"}, 6)).size() == 6);
    ElementSet d8 = ElementSet::generate(
        {parse_perm("(1,2,3,4)", 4), parse_perm("(1,3)", 4)}, default_element_cap, "D8");
    ElementSet z = center(d8);
    REQUIRE(z.size() == 2);
    CHECK(z.contains(parse_perm("(1,3)(2,4)")));
    CHECK(z.label() == "Z(D8)");
    // C2 x S3 on split points: the center is the C2 factor
    ElementSet prod = make_group({"(1,2)", "(3,4,5)", "(3,4)"}, 5);
    REQUIRE(prod.size() == 12);
    ElementSet zp = center(prod);
    CHECK(zp.size() == 2);
    CHECK(zp.contains(parse_perm("(1,2)", 5)));
}

TEST_CASE("quotient spectra") {
    ElementSet s4 = make_group({"(1,2,3,4)", "(1,2)"}, 4);
    ElementSet v4 = make_group({"(1,2)(3,4)", "(1,3)(2,4)"}, 4);
    CHECK(quotient_spectrum(s4, v4) == sn_spectrum(3));

    ElementSet a4 = make_group({"(1,2,3)", "(2,3,4)"}, 4);
    CHECK(quotient_spectrum(s4, a4) == cyclic_spectrum(2));
    CHECK(quotient_spectrum(s4, s4) == cyclic_spectrum(1));
    CHECK(quotient_spectrum(s4, ElementSet::generate({Permutation::identity(4)})) ==
          sn_spectrum(4));

    ElementSet d8 = make_group({"(1,2,3,4)", "(1,3)"}, 4);
    CHECK(quotient_spectrum(d8, center(d8)) ==
          OrderSpectrum::make(OrderSpectrum::Map{{1, 1}, {2, 3}}));

    // even permutations do not normalize a transposition
    CHECK_THROWS_AS(quotient_spectrum(s4, make_group({"(1,2)"}, 4)), value_error);
}

TEST_CASE("coset order histograms") {
    // <r^2> inside C6: the nontrivial coset holds r, r^3, r^5
    ElementSet n = make_group({"(1,3,5)(2,4,6)"}, 6);
    REQUIRE(n.size() == 3);
    OrderSpectrum h = coset_spectrum(n, parse_perm("(1,2,3,4,5,6)"));
    CHECK(h == OrderSpectrum::unchecked({{2, 1}, {6, 2}}));
    CHECK(rho(h, 6) == 1);
    CHECK(rho(h, 2) == Rational(1, 3));

    // the odd coset of S4: six transpositions, six 4-cycles
    ElementSet a4 = make_group({"(1,2,3)", "(2,3,4)"}, 4);
    CHECK(coset_spectrum(a4, parse_perm("(1,2)", 4)) ==
          OrderSpectrum::unchecked({{2, 6}, {4, 6}}));

    // identity representative reproduces the subgroup's own spectrum
    CHECK(coset_spectrum(a4, Permutation::identity(4)).counts() == spectrum_of(a4).counts());

    CHECK_THROWS_AS(coset_spectrum(a4, parse_perm("(1,2)", 5)), value_error);
}

TEST_CASE("normalizers") {
    ElementSet s4 = make_group({"(1,2,3,4)", "(1,2)"}, 4);
    CHECK(normalizer(s4, make_group({"(1,2,3)"}, 4)).size() == 6);
    CHECK(normalizer(s4, make_group({"(1,2)(3,4)"}, 4)).size() == 8);
    ElementSet v4 = make_group({"(1,2)(3,4)", "(1,3)(2,4)"}, 4);
    CHECK(normalizer(s4, v4).size() == 24);
    CHECK(normalizer(s4, s4).size() == 24);
    CHECK_THROWS_AS(normalizer(make_group({"(1,2,3)"}, 3), make_group({"(1,2)"}, 3)),
                    value_error);
}

TEST_CASE("sylow subgroups") {
    ElementSet s4 = make_group({"(1,2,3,4)", "(1,2)"}, 4);
    ElementSet p2 = sylow_subgroup(s4, 2);
    CHECK(p2.size() == 8);
    CHECK(spectrum_of(p2) == OrderSpectrum::make(OrderSpectrum::Map{{1, 1}, {2, 5}, {4, 2}}));
    CHECK(is_subgroup(s4, p2));
    CHECK(sylow_subgroup(s4, 3).size() == 3);

    ElementSet a5 = make_group({"(1,2,3,4,5)", "(1,2,3)"}, 5);
    ElementSet q2 = sylow_subgroup(a5, 2);
    CHECK(spectrum_of(q2) == OrderSpectrum::make(OrderSpectrum::Map{{1, 1}, {2, 3}}));
    CHECK(sylow_subgroup(a5, 5).size() == 5);

    ElementSet c12 = make_group({"(1,2,3,4,5,6,7,8,9,10,11,12)"}, 12);
    CHECK(spectrum_of(sylow_subgroup(c12, 2)) == cyclic_spectrum(4));

    CHECK_THROWS_AS(sylow_subgroup(s4, 4), value_error);
    CHECK_THROWS_AS(sylow_subgroup(s4, 1), value_error);
    CHECK_THROWS_AS(sylow_subgroup(s4, 5), value_error); // does not divide 24
}

TEST_CASE("point stabilizers and orbits") {
    ElementSet s4 = make_group({"(1,2,3,4)", "(1,2)"}, 4);
    ElementSet st = stabilizer(s4, 0);
    CHECK(st.size() == 6);
    CHECK(spectrum_of(st) == sn_spectrum(3));
    CHECK(stabilizer(s4, 3).size() == 6);
    CHECK_THROWS_AS(stabilizer(s4, 4), value_error);

    std::vector<Permutation> gens{parse_perm("(1,2,3)(4,5)")};
    CHECK(orbit(gens, 0) == std::vector<std::uint16_t>{0, 1, 2});
    CHECK(orbit(gens, 3) == std::vector<std::uint16_t>{3, 4});
    CHECK(!is_transitive(gens, 5));
    CHECK(is_transitive(s4.generators(), 4));
    CHECK(is_transitive({}, 1));
    CHECK(!is_transitive({}, 0));
    CHECK_THROWS_AS(orbit(gens, 9), value_error);
}

TEST_CASE("index-2 subgroups") {
    ElementSet s4 = make_group({"(1,2,3,4)", "(1,2)"}, 4);
    auto subs = index2_subgroups(s4);
    REQUIRE(subs.size() == 1);
    CHECK(spectrum_of(subs[0]) == an_spectrum(4));

    CHECK(index2_subgroups(make_group({"(1,2,3,4,5)", "(1,2,3)"}, 5)).empty()); // A5 is simple
    CHECK(index2_subgroups(make_group({"(1,2,3,4,5,6)"}, 6)).size() == 1);
    CHECK(index2_subgroups(make_group({"(1,2)", "(3,4)"}, 4)).size() == 3);
    CHECK(index2_subgroups(make_group({"(1,2,3,4)", "(1,3)"}, 4)).size() == 3);
    // S3 x C2 has three as well: A3 x C2, S3, and the diagonal mix
    ElementSet prod = make_group({"(1,2)", "(3,4,5)", "(3,4)"}, 5);
    auto psubs = index2_subgroups(prod);
    REQUIRE(psubs.size() == 3);
    for (const auto& h : psubs) {
        CHECK(is_subgroup(prod, h));
        CHECK(is_normal(prod, h));
        CHECK(subgroup_index(prod, h) == 2);
    }
}

TEST_CASE("subgroup predicates") {
    ElementSet s4 = make_group({"(1,2,3,4)", "(1,2)"}, 4);
    ElementSet a4 = make_group({"(1,2,3)", "(2,3,4)"}, 4);
    ElementSet s3in4 = make_group({"(1,2,3)", "(1,2)"}, 4);
    CHECK(is_subgroup(s4, a4));
    CHECK(is_subgroup(s4, s3in4));
    CHECK(!is_subgroup(a4, s3in4));
    CHECK(!is_subgroup(s4, make_group({"(1,2,3)", "(1,2)"}, 3))); // degree mismatch
    CHECK(is_normal(s4, a4));
    CHECK(!is_normal(s4, s3in4));
    CHECK(subgroup_index(s4, s3in4) == 4);
    CHECK(subgroup_index(s4, a4) == 2);
    CHECK(subgroup_index(s4, s4) == 1);
    CHECK_THROWS_AS(subgroup_index(a4, s3in4), value_error);
}
