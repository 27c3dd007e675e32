#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "ordspec/errors.hpp"
#include "ordspec/families.hpp"
#include "ordspec/group_ops.hpp"
#include "ordspec/permset.hpp"
#include "ordspec/spectrum.hpp"

using namespace ordspec;

namespace {

/* Hand-rolled permutation arithmetic on plain image vectors, kept
 * deliberately independent of the Permutation class so the library can
 * be checked against it. compose(f, g) applies f first. */
using Images = std::vector<int>;

Images compose(const Images& f, const Images& g) {
    Images r(f.size());
    for (std::size_t x = 0; x < f.size(); ++x)
        r[x] = g[static_cast<std::size_t>(f[x])];
    return r;
}

bool is_id(const Images& f) {
    for (std::size_t x = 0; x < f.size(); ++x)
        if (f[x] != static_cast<int>(x))
            return false;
    return true;
}

int order_by_iteration(const Images& f) {
    Images q = f;
    int n = 1;
    while (!is_id(q)) {
        q = compose(q, f);
        ++n;
    }
    return n;
}

int inversion_parity(const Images& f) {
    int inv = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (f[i] > f[j])
                ++inv;
    return inv % 2;
}

OrderSpectrum histogram_of(const std::vector<Images>& elements) {
    OrderSpectrum::Map acc;
    for (const auto& f : elements)
        acc[order_by_iteration(f)] += 1;
    return OrderSpectrum::make(acc);
}

} // namespace

TEST_CASE("alternating group on five points, three ways") {
    // oracle: filter Sym(5) by inversion parity, orders by brute iteration
    std::vector<Images> evens;
    Images f(5);
    std::iota(f.begin(), f.end(), 0);
    do {
        if (inversion_parity(f) == 0)
            evens.push_back(f);
    } while (std::next_permutation(f.begin(), f.end()));
    REQUIRE(evens.size() == 60);
    OrderSpectrum oracle = histogram_of(evens);
    CHECK(oracle.counts() == OrderSpectrum::Map{{1, 1}, {2, 15}, {3, 20}, {5, 24}});

    CHECK(an_spectrum(5) == oracle);

    ElementSet a5 = ElementSet::generate({parse_perm("(1,2,3,4,5)"), parse_perm("(1,2,3)", 5)});
    CHECK(spectrum_of(a5) == oracle);

    CHECK(rho(oracle, 6) == Rational(3, 5));
    CHECK(rho(oracle, 10) == Rational(2, 3));
    CHECK(rho(oracle, 15) == Rational(3, 4));
    CHECK(rho_star(oracle, 5) == Rational(2, 5));
    CHECK(exponent(oracle) == 30);
}

TEST_CASE("wreath square of Sym(3), three ways") {
    // oracle: all 72 elements (a, b) tau^t written out on six points
    std::vector<Images> s3;
    Images f(3);
    std::iota(f.begin(), f.end(), 0);
    do {
        s3.push_back(f);
    } while (std::next_permutation(f.begin(), f.end()));

    std::vector<Images> big;
    for (const auto& a : s3)
        for (const auto& b : s3)
            for (int t : {0, 1}) {
                Images g(6);
                for (int x = 0; x < 3; ++x) {
                    g[x] = t ? a[x] + 3 : a[x];
                    g[x + 3] = t ? b[x] : b[x] + 3;
                }
                big.push_back(g);
            }
    REQUIRE(big.size() == 72);
    OrderSpectrum oracle = histogram_of(big);

    CHECK(wreath_c2(sn_spectrum(3)) == oracle);

    ElementSet w = ElementSet::generate(
        {parse_perm("(1,2,3)", 6), parse_perm("(1,2)", 6), parse_perm("(1,4)(2,5)(3,6)")});
    REQUIRE(w.size() == 72);
    CHECK(spectrum_of(w) == oracle);
}

TEST_CASE("dihedral group of order eight") {
    ElementSet d8 = ElementSet::generate({parse_perm("(1,2,3,4)"), parse_perm("(1,3)", 4)});
    REQUIRE(d8.size() == 8);
    OrderSpectrum expected = OrderSpectrum::make(OrderSpectrum::Map{{1, 1}, {2, 5}, {4, 2}});
    CHECK(spectrum_of(d8) == expected);
    // C2 wr C2 is the same group
    CHECK(wreath_c2(cyclic_spectrum(2)) == expected);
}

TEST_CASE("quaternion group via its regular action") {
    // elements s * axis with axis in {e, i, j, k}, index = 2 * axis + (s < 0)
    struct Q {
        int s, a;
    };
    auto mul = [](Q p, Q q) -> Q {
        if (p.a == 0)
            return {p.s * q.s, q.a};
        if (q.a == 0)
            return {p.s * q.s, p.a};
        if (p.a == q.a)
            return {-p.s * q.s, 0};
        bool fwd = (p.a == 1 && q.a == 2) || (p.a == 2 && q.a == 3) || (p.a == 3 && q.a == 1);
        return {(fwd ? 1 : -1) * p.s * q.s, 6 - p.a - q.a};
    };
    auto at = [](int idx) -> Q { return {idx % 2 ? -1 : 1, idx / 2}; };
    auto index = [](Q q) { return 2 * q.a + (q.s < 0 ? 1 : 0); };

    std::vector<Permutation> rows;
    for (int g = 0; g < 8; ++g) {
        std::vector<std::uint16_t> im(8);
        for (int x = 0; x < 8; ++x)
            im[x] = static_cast<std::uint16_t>(index(mul(at(x), at(g))));
        rows.push_back(Permutation::from_images(im));
    }
    ElementSet q8 = ElementSet::from_elements(8, rows, "Q8");
    CHECK(spectrum_of(q8) == OrderSpectrum::make(OrderSpectrum::Map{{1, 1}, {2, 1}, {4, 6}}));
}

TEST_CASE("direct powers of C6 against inclusion-exclusion") {
    OrderSpectrum c6 = cyclic_spectrum(6);
    CHECK(c6.counts() == OrderSpectrum::Map{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
    for (int n = 0; n <= 4; ++n) {
        Nat two = 1, three = 1, six = 1;
        for (int i = 0; i < n; ++i) {
            two *= 2;
            three *= 3;
            six *= 6;
        }
        OrderSpectrum::Map expect{{1, 1}};
        if (n >= 1) {
            expect[2] = two - 1;
            expect[3] = three - 1;
            expect[6] = six - three - two + 1;
        }
        CHECK(power(c6, n).counts() == expect);
    }
}

TEST_CASE("product and power identities") {
    OrderSpectrum a5 = an_spectrum(5);
    CHECK(direct_product(cyclic_spectrum(2), cyclic_spectrum(3)) == cyclic_spectrum(6));
    CHECK(direct_product(a5, cyclic_spectrum(1)) == a5);
    CHECK(direct_product(a5, cyclic_spectrum(2)) == direct_product(cyclic_spectrum(2), a5));
    CHECK(power(a5, 0) == cyclic_spectrum(1));
    CHECK(power(a5, 1) == a5);
    CHECK(power(a5, 2) == direct_product(a5, a5));
    CHECK(power(a5, 3) == direct_product(a5, direct_product(a5, a5)));
    CHECK(power(a5, 3).group_order() == 216000);
    CHECK_THROWS_AS(power(a5, Nat(-1)), value_error);
    // the lone wreath base case: C1 wr C2 = C2
    CHECK(wreath_c2(cyclic_spectrum(1)) == cyclic_spectrum(2));
}

TEST_CASE("exact-order counts sum back to divisor counts") {
    for (const OrderSpectrum& s :
         {an_spectrum(6), sn_spectrum(5), cyclic_spectrum(360), wreath_c2(an_spectrum(4))}) {
        Nat exp = exponent(s);
        for (Nat k = 1; k <= 40; k += 1) {
            Rational total = 0;
            for (Nat d = 1; d <= k; d += 1)
                if (divides(d, k))
                    total += rho_star(s, d);
            CHECK(total == rho(s, k));
        }
        CHECK(rho(s, exp) == 1);
    }
}

TEST_CASE("spectrum validation") {
    using M = OrderSpectrum::Map;
    CHECK_THROWS_AS(OrderSpectrum::make(M{{2, 1}}), value_error);     // no identity
    CHECK_THROWS_AS(OrderSpectrum::make(M{{1, 2}}), value_error);     // two identities
    CHECK_THROWS_AS(OrderSpectrum::make(M{{1, 1}, {4, 2}}), value_error); // 4 over group order 3
    CHECK_THROWS_AS(OrderSpectrum::make(M{{1, 1}, {3, 1}}), value_error); // phi(3) = 2 over count 1
    CHECK_THROWS_AS(OrderSpectrum::make(M{{0, 1}}), value_error);
    CHECK_THROWS_AS(OrderSpectrum::make(M{{1, 1}, {2, -1}}), value_error);
    CHECK_THROWS_AS(OrderSpectrum::make(std::vector<std::pair<Nat, Nat>>{{1, 1}, {1, 0}}),
                    value_error); // duplicate entry

    // coset histograms bypass the group laws but not basic sanity
    OrderSpectrum h = OrderSpectrum::unchecked({{2, 3}, {4, 1}, {6, 0}});
    CHECK(h.group_order() == 4);
    CHECK(h.count_of(6) == 0);
    CHECK(h.count_of(1) == 0);
    CHECK(rho(h, 4) == 1);
    CHECK(rho(h, 2) == Rational(3, 4));
    CHECK_THROWS_AS(OrderSpectrum::unchecked({{-1, 1}}), value_error);

    OrderSpectrum empty = OrderSpectrum::unchecked({});
    CHECK(empty.group_order() == 0);
    CHECK_THROWS_AS(rho(empty, 1), value_error);
    CHECK_THROWS_AS(rho(an_spectrum(5), 0), value_error);
    CHECK_THROWS_AS(rho_star(an_spectrum(5), 0), value_error);
}

TEST_CASE("cyclic factor padding thresholds") {
    // smallest n making the exact-order-k share pass eps, by appending C_k factors
    CHECK(construction2_n(cyclic_spectrum(2), 2, Rational(1, 2)) == 1);
    CHECK(construction2_n(an_spectrum(5), 6, Rational(1, 2)) == 3);
    CHECK(construction2_n(sn_spectrum(4), 4, Rational(1, 2)) == 2);
    CHECK_THROWS_AS(construction2_n(an_spectrum(5), 1, Rational(0)), value_error);
    CHECK_THROWS_AS(construction2_n(an_spectrum(5), 7, Rational(1, 2)), value_error);
}

TEST_CASE("spectrum text round trips") {
    for (const OrderSpectrum& s :
         {cyclic_spectrum(1), an_spectrum(5), wreath_c2(sn_spectrum(3)), sn_spectrum(12)}) {
        CHECK(parse_spectrum(to_string(s)) == s);
    }
    std::string text = to_string(an_spectrum(5));
    CHECK(text.substr(0, 9) == "order 60\n");
    CHECK(text.find("5 24\n") != std::string::npos);

    OrderSpectrum c6 = parse_spectrum("# cyclic\norder 6\n1 1  # identity\n2 1\n3 2\n6 2\n");
    CHECK(c6 == cyclic_spectrum(6));

    CHECK_THROWS_AS(parse_spectrum(""), io_error);
    CHECK_THROWS_AS(parse_spectrum("1 1\n"), io_error);
    CHECK_THROWS_AS(parse_spectrum("order x\n"), io_error);
    CHECK_THROWS_AS(parse_spectrum("order 5\n1 1\n"), io_error);   // declared total wrong
    CHECK_THROWS_AS(parse_spectrum("order 2\n1 1\n1 1\n"), io_error); // duplicate order
    CHECK_THROWS_AS(parse_spectrum("order 2\n1\n"), io_error);
    CHECK_THROWS_AS(parse_spectrum("order 3\n1 1\n2 two\n"), io_error);
    CHECK_THROWS_AS(parse_spectrum("order 4\n1 1\n4 3\n"), value_error); // phi check fires
}
