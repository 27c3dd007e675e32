#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "ordspec/errors.hpp"
#include "ordspec/expr.hpp"
#include "ordspec/families.hpp"
#include "ordspec/fixtures.hpp"
#include "ordspec/gf.hpp"
#include "ordspec/group_ops.hpp"

using namespace ordspec;

namespace {

struct Subject {
    std::string name;
    ElementSet group;
    OrderSpectrum spectrum;
};

ElementSet quaternion_group() {
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
    return ElementSet::from_elements(8, rows, "Q8");
}

/* Small groups given as expressions, enumerated concretely. */
const std::vector<Subject>& corpus() {
    static const std::vector<Subject> subjects = [] {
        std::vector<Subject> out;
        EvalConfig cfg;
        for (const char* text : {
                 "C(1)", "C(2)", "C(4)", "C(6)", "C(8)", "C(12)", "C(30)",
                 "C(2)^2", "C(2)^3", "C(6) * C(2)", "C(3) * C(9)",
                 "S(3)", "S(4)", "S(5)", "A(4)", "A(5)",
                 "S(3) * C(4)", "A(4) * C(2)",
                 "wr2(C(2))", "wr2(C(3))", "wr2(C(4))", "wr2(C(6))", "wr2(S(3))",
                 "PGL(2,5)", "PSL(2,7)",
             }) {
            ElementSet g = evaluate_concrete(parse_expr(text), cfg);
            OrderSpectrum s = spectrum_of(g);
            out.push_back({text, std::move(g), std::move(s)});
        }
        ElementSet q8 = quaternion_group();
        OrderSpectrum qs = spectrum_of(q8);
        out.push_back({"Q8", std::move(q8), std::move(qs)});
        return out;
    }();
    return subjects;
}

/* Every shipped fixture, fully enumerated. */
const std::vector<Subject>& fixture_corpus() {
    static const std::vector<Subject> subjects = [] {
        FixtureSet fixtures(std::string(ORDSPEC_REPO_DIR) + "/fixtures");
        std::vector<Subject> out;
        for (const auto& e : fixtures.entries()) {
            if (e.path == "-")
                continue;
            ElementSet g = fixtures.load(e.label);
            OrderSpectrum s = spectrum_of(g);
            out.push_back({e.label, std::move(g), std::move(s)});
        }
        return out;
    }();
    return subjects;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d)
            continue;
        small.push_back(d);
        if (d != n / d)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        out.push_back(p);
        while (n % p == 0)
            n /= p;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

Rational p_power_ratio(std::uint64_t p, unsigned e) {
    Nat d = 1;
    for (unsigned i = 0; i < e; ++i)
        d *= static_cast<unsigned long>(p);
    return make_ratio(1, d);
}

void check_spectrum_laws(const Subject& subj) {
    const OrderSpectrum& s = subj.spectrum;
    const Nat n = s.group_order();
    CHECK(n == subj.group.size());
    CHECK(s.count_of(1) == 1);
    Nat total = 0;
    for (const auto& [order, count] : s.counts()) {
        total += count;
        CHECK(divides(order, n));
        CHECK(divides(euler_phi(order), count));
    }
    CHECK(total == n);
}

void check_rho_shape(const Subject& subj) {
    const OrderSpectrum& s = subj.spectrum;
    const auto divisors = divisors_of(to_u64(exponent(s)));
    for (std::uint64_t k : divisors) {
        // exact-order parts add up to the divisor count
        Rational sum = 0;
        for (std::uint64_t d : divisors_of(k))
            sum += rho_star(s, d);
        CHECK(sum == rho(s, k));
        if (k >= 2)
            CHECK(rho_star(s, k) < rho(s, k)); // the identity always rides along
        for (std::uint64_t d : divisors_of(k))
            CHECK(rho(s, d) <= rho(s, k));
    }
    CHECK(rho(s, exponent(s)) == 1);
    // k beyond the exponent changes nothing
    CHECK(rho(s, exponent(s) * 7) == 1);
}

/* rho_k(G) <= rho_k(G/N): orders only shrink in a quotient. */
void check_quotient_bound(const Subject& subj, const ElementSet& normal_sub) {
    OrderSpectrum q = quotient_spectrum(subj.group, normal_sub);
    for (std::uint64_t k : divisors_of(to_u64(exponent(subj.spectrum)))) {
        CAPTURE(k);
        CHECK(rho(subj.spectrum, k) <= rho(q, k));
    }
}

void check_central_product_bound(const Subject& subj) {
    ElementSet z = center(subj.group);
    if (z.size() == 1 || z.size() == subj.group.size())
        return;
    OrderSpectrum zs = spectrum_of(z);
    OrderSpectrum qs = quotient_spectrum(subj.group, z);
    for (std::uint64_t k : divisors_of(to_u64(exponent(subj.spectrum)))) {
        CAPTURE(k);
        CHECK(rho(subj.spectrum, k) <= rho(zs, k) * rho(qs, k));
    }
}

/* Sylow-based bounds: the normalizer bound for prime power k, and the
 * p-power ceiling from the exponent of the Sylow center. */
void check_sylow_bounds(const Subject& subj) {
    for (std::uint64_t p : prime_factors(to_u64(Nat(subj.spectrum.group_order())))) {
        CAPTURE(p);
        ElementSet syl = sylow_subgroup(subj.group, p);
        OrderSpectrum syl_s = spectrum_of(syl);
        ElementSet norm = normalizer(subj.group, syl);
        Rational idx_inv(Nat(syl.size()), Nat(norm.size()));
        idx_inv.canonicalize();
        const Rational one_over_n = make_ratio(1, Nat(norm.size()));
        const Rational one_over_g = make_ratio(1, subj.spectrum.group_order());

        const std::uint64_t pexp = to_u64(exponent(syl_s));
        unsigned a = 0;
        for (std::uint64_t v = pexp; v > 1; v /= p)
            ++a;
        ElementSet zp = center(syl);
        const std::uint64_t zexp = to_u64(exponent(spectrum_of(zp)));
        unsigned za = 0;
        for (std::uint64_t v = zexp; v > 1; v /= p)
            ++za;

        std::uint64_t k = 1;
        for (unsigned b = 1; b <= a; ++b) {
            k *= p;
            CAPTURE(k);
            // elements of order dividing p^b live in conjugates of syl
            Rational lhs = rho(subj.spectrum, k);
            CHECK(lhs <= rho(syl_s, k) * idx_inv - one_over_n + one_over_g);
            if (b <= za)
                CHECK(lhs <= p_power_ratio(p, za - b));
        }
    }
}

struct WreathSubject {
    std::string name;
    OrderSpectrum base;  // enumerated
    OrderSpectrum wreath; // enumerated independently on doubled points
};

const std::vector<WreathSubject>& wreath_corpus() {
    static const std::vector<WreathSubject> subjects = [] {
        std::vector<WreathSubject> out;
        EvalConfig cfg;
        for (const char* text : {"C(1)", "C(2)", "C(3)", "C(4)", "C(6)", "C(10)", "S(3)", "A(4)",
                                 "S(4)", "C(2)^2"}) {
            ExprPtr base = parse_expr(text);
            ExprPtr wr = parse_expr("wr2(" + std::string(text) + ")");
            out.push_back({text, spectrum_of(evaluate_concrete(base, cfg)),
                           spectrum_of(evaluate_concrete(wr, cfg))});
        }
        return out;
    }();
    return subjects;
}

} // namespace

TEST_CASE("group laws hold for every enumerated spectrum") {
    for (const auto& subj : corpus()) {
        CAPTURE(subj.name);
        check_spectrum_laws(subj);
    }
    for (const auto& subj : fixture_corpus()) {
        CAPTURE(subj.name);
        check_spectrum_laws(subj);
    }
}

TEST_CASE("rho is monotone and splits over exact orders") {
    for (const auto& subj : corpus()) {
        CAPTURE(subj.name);
        check_rho_shape(subj);
    }
    for (const auto& subj : fixture_corpus()) {
        CAPTURE(subj.name);
        check_rho_shape(subj);
    }
}

TEST_CASE("quotients cannot lower rho") {
    auto run = [](const Subject& subj) {
        CAPTURE(subj.name);
        ElementSet z = center(subj.group);
        if (z.size() > 1 && z.size() < subj.group.size())
            check_quotient_bound(subj, z);
        for (const ElementSet& h : index2_subgroups(subj.group))
            check_quotient_bound(subj, h);
        for (std::uint64_t p : prime_factors(to_u64(Nat(subj.spectrum.group_order())))) {
            ElementSet syl = sylow_subgroup(subj.group, p);
            if (syl.size() > 1 && syl.size() < subj.group.size() &&
                is_normal(subj.group, syl))
                check_quotient_bound(subj, syl);
        }
    };
    for (const auto& subj : corpus())
        run(subj);
    for (const auto& subj : fixture_corpus())
        run(subj);
}

TEST_CASE("central subgroups bound rho multiplicatively") {
    for (const auto& subj : corpus()) {
        CAPTURE(subj.name);
        check_central_product_bound(subj);
    }
    for (const auto& subj : fixture_corpus()) {
        CAPTURE(subj.name);
        check_central_product_bound(subj);
    }
}

TEST_CASE("sylow normalizer and center bounds") {
    for (const auto& subj : corpus()) {
        CAPTURE(subj.name);
        check_sylow_bounds(subj);
    }
    for (const auto& subj : fixture_corpus()) {
        CAPTURE(subj.name);
        check_sylow_bounds(subj);
    }
}

TEST_CASE("wreath squares against independent enumeration") {
    for (const auto& w : wreath_corpus()) {
        CAPTURE(w.name);
        const Rational half(1, 2);
        CHECK(w.wreath.group_order() ==
              w.base.group_order() * w.base.group_order() * 2);
        const std::uint64_t we = to_u64(exponent(w.wreath));
        for (std::uint64_t k = 1; k <= we; ++k) {
            CAPTURE(k);
            Rational rk = rho(w.base, k);
            Rational wk = rho(w.wreath, k);
            if (k % 2) {
                CHECK(wk == rk * rk * half);
                CHECK(wk <= rk * half);
                CHECK((wk == rk * half) == (rk == 1));
            } else {
                Rational rhalf = rho(w.base, k / 2);
                CHECK(wk == rk * rk * half + rhalf * half);
                Rational bound1 = rk * (rk + 1) * half;
                CHECK(wk <= bound1);
                CHECK((wk == bound1) == (rk == rhalf));
                CHECK(bound1 <= rk);
                CHECK((bound1 == rk) == divides(exponent(w.base), Nat(k)));
            }
        }
        // the spectrum-level combinator reproduces the enumeration
        CHECK(wreath_c2(w.base) == w.wreath);
    }
}

/* For G = N<sigma> with sigma a field automorphism of prime order m,
 * the nontrivial cosets N sigma^i carry the order statistics of
 * H = C_N(sigma): an element g outside N has o(g) = m * o(g^m), and
 * the multiset of o(g^m) over one coset is |N|/|H| copies of the order
 * multiset of H. Hence
 *
 *   rho_k(G) = (1/m) rho_k(N) + ((m-1)/m) rho_{k/m}(H)   when m | k,
 *   rho_k(G) = (1/m) rho_k(N)                            when m and k
 *                                                        are coprime. */
TEST_CASE("coset order transfer for the twisted extensions") {
    struct Instance {
        Family big_family;
        unsigned q;
        std::uint64_t centralizer_order;
        OrderSpectrum small; // what C_N(sigma) must look like
    };
    for (const Instance& inst :
         {Instance{Family::PSigmaL2, 27, 12, an_spectrum(4)},
          Instance{Family::PGammaL2, 32, 6, sn_spectrum(3)}}) {
        CAPTURE(inst.q);
        ElementSet g = family_group(FamilySpec::make(inst.big_family, inst.q));
        ElementSet n = family_group(FamilySpec::make(Family::PSL2, inst.q));
        REQUIRE(is_normal(g, n));
        const std::uint64_t m = to_u64(subgroup_index(g, n)); // automorphism order

        Field f = Field::make(inst.q);
        Permutation frob = frobenius_point_action(f, projective_line(f));
        REQUIRE(g.contains(frob));
        REQUIRE(!n.contains(frob));

        // H = centralizer of the Frobenius inside the simple normal part
        std::vector<Permutation> members;
        for (std::uint64_t i = 0; i < n.size(); ++i) {
            Permutation x = n.element(i);
            if (x * frob == frob * x)
                members.push_back(std::move(x));
        }
        ElementSet h = ElementSet::from_elements(n.degree(), members, "H");
        REQUIRE(h.size() == inst.centralizer_order);

        OrderSpectrum gs = spectrum_of(g);
        OrderSpectrum ns = spectrum_of(n);
        OrderSpectrum hs = spectrum_of(h);
        CHECK(hs == inst.small);
        const Rational minv = make_ratio(1, m);
        const Rational rest = make_ratio(m - 1, m);
        for (std::uint64_t k : divisors_of(to_u64(exponent(gs)))) {
            CAPTURE(k);
            if (k % m == 0)
                CHECK(rho(gs, k) == minv * rho(ns, k) + rest * rho(hs, k / m));
            else
                CHECK(rho(gs, k) == minv * rho(ns, k));
        }
    }
}
