#include "ordspec/families.hpp"

#include <algorithm>
#include <functional>

#include "ordspec/errors.hpp"
#include "ordspec/gf.hpp"

namespace ordspec {

namespace {

bool is_prime_ul(unsigned long n) {
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/* q = p^m, p prime; false if q is not a prime power. */
bool split_prime_power_ul(unsigned long q, unsigned long& p, unsigned& m) {
    if (q < 2)
        return false;
    unsigned long f = q;
    unsigned long d = 2;
    while (d * d <= f && f % d != 0)
        ++d;
    p = (d * d <= f) ? d : f;
    m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    return q == 1;
}

std::vector<unsigned long> divisors_ul(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

void add_cyclic_classes(OrderSpectrum::Map& cnt, unsigned long torus, const Nat& subgroups) {
    for (unsigned long e : divisors_ul(torus)) {
        if (e == 1)
            continue;
        cnt[Nat(e)] += euler_phi(Nat(e)) * subgroups;
    }
}

Permutation swap01(unsigned n) {
    std::vector<std::uint16_t> img(n);
    for (unsigned i = 0; i < n; ++i)
        img[i] = static_cast<std::uint16_t>(i);
    img[0] = 1;
    img[1] = 0;
    return Permutation::from_images(std::move(img));
}

/* cycle on the points lo..n-1, fixing everything below lo */
Permutation tail_cycle(unsigned n, unsigned lo) {
    std::vector<std::uint16_t> img(n);
    for (unsigned i = 0; i < n; ++i)
        img[i] = static_cast<std::uint16_t>(i);
    for (unsigned i = lo; i < n; ++i)
        img[i] = static_cast<std::uint16_t>(i + 1 == n ? lo : i + 1);
    return Permutation::from_images(std::move(img));
}

Permutation cycle3(unsigned n) {
    std::vector<std::uint16_t> img(n);
    for (unsigned i = 0; i < n; ++i)
        img[i] = static_cast<std::uint16_t>(i);
    img[0] = 1;
    img[1] = 2;
    img[2] = 0;
    return Permutation::from_images(std::move(img));
}

/* Walk all partitions of n (parts descending); visit(parts) for each. */
void for_partitions(unsigned n, unsigned max_part, std::vector<unsigned>& parts,
                    const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (n == 0) {
        visit(parts);
        return;
    }
    for (unsigned part = std::min(n, max_part); part >= 1; --part) {
        parts.push_back(part);
        for_partitions(n - part, part, parts, visit);
        parts.pop_back();
    }
}

OrderSpectrum cycle_type_spectrum(unsigned n, bool even_only) {
    if (n < 1)
        throw value_error("n must be at least 1");
    if (n > 64)
        throw value_error("cycle type enumeration is limited to n <= 64");
    const Nat nfact = factorial(n);
    OrderSpectrum::Map cnt;
    std::vector<unsigned> parts;
    for_partitions(n, n, parts, [&](const std::vector<unsigned>& type) {
        Nat centralizer = 1;
        Nat order = 1;
        unsigned transpositions = 0;
        for (std::size_t i = 0; i < type.size();) {
            std::size_t j = i;
            while (j < type.size() && type[j] == type[i])
                ++j;
            const unsigned part = type[i];
            const auto mult = static_cast<unsigned>(j - i);
            Nat pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), part, mult);
            centralizer *= pw * factorial(mult);
            order = nat_lcm(order, Nat(part));
            transpositions += (part - 1) * mult;
            i = j;
        }
        if (even_only && transpositions % 2 != 0)
            return;
        cnt[order] += nfact / centralizer;
    });
    return OrderSpectrum::make(cnt);
}

void require_prime(unsigned p, const char* what) {
    if (!is_prime_ul(p))
        throw value_error(std::string(what) + " must be prime");
}

} // namespace

FamilySpec FamilySpec::make(Family family, unsigned parameter) {
    FamilySpec s;
    s.family = family;
    s.parameter = parameter;
    switch (family) {
    case Family::Sym:
    case Family::Alt:
    case Family::Cyclic:
        if (parameter < 1 || parameter > 65535)
            throw value_error("n must be between 1 and 65535");
        return s;
    case Family::PSL2:
    case Family::PGL2:
    case Family::PSigmaL2:
    case Family::PGammaL2: {
        unsigned p = 0, m = 0;
        if (parameter < 2 || parameter > 1024 || !split_prime_power(parameter, p, m))
            throw value_error("q must be a prime power between 2 and 1024");
        s.p = p;
        s.m = m;
        return s;
    }
    case Family::Sz: {
        unsigned p = 0, m = 0;
        if (parameter < 8 || parameter > 1024 || !split_prime_power(parameter, p, m) ||
            p != 2 || m % 2 == 0)
            throw value_error("Sz needs q = 2^(2a+1) with a >= 1 and q <= 1024");
        s.p = 2;
        s.m = m;
        s.r = 1u << (m / 2); // 2^a
        return s;
    }
    }
    throw value_error("unknown family");
}

const char* family_atom_name(Family family) {
    switch (family) {
    case Family::Sym: return "S";
    case Family::Alt: return "A";
    case Family::Cyclic: return "C";
    case Family::PSL2: return "PSL";
    case Family::PGL2: return "PGL";
    case Family::PSigmaL2: return "PSigmaL";
    case Family::PGammaL2: return "PGammaL";
    case Family::Sz: return "Sz";
    }
    return "?";
}

bool family_from_atom(const std::string& name, Family& out) {
    static const std::pair<const char*, Family> table[] = {
        {"S", Family::Sym},           {"A", Family::Alt},
        {"C", Family::Cyclic},        {"PSL", Family::PSL2},
        {"PGL", Family::PGL2},        {"PSigmaL", Family::PSigmaL2},
        {"PGammaL", Family::PGammaL2}, {"Sz", Family::Sz},
    };
    for (const auto& [n, f] : table) {
        if (name == n) {
            out = f;
            return true;
        }
    }
    return false;
}

std::string family_display(const FamilySpec& spec) {
    std::string name = family_atom_name(spec.family);
    switch (spec.family) {
    case Family::PSL2:
    case Family::PGL2:
    case Family::PSigmaL2:
    case Family::PGammaL2:
        return name + "(2," + std::to_string(spec.parameter) + ")";
    default:
        return name + "(" + std::to_string(spec.parameter) + ")";
    }
}

Nat family_order(const FamilySpec& spec) {
    const Nat n(spec.parameter);
    switch (spec.family) {
    case Family::Sym:
        return factorial(spec.parameter);
    case Family::Alt:
        return spec.parameter < 2 ? Nat(1) : factorial(spec.parameter) / 2;
    case Family::Cyclic:
        return n;
    case Family::PSL2:
        return n * (n * n - 1) / (spec.parameter % 2 ? 2 : 1);
    case Family::PGL2:
        return n * (n * n - 1);
    case Family::PSigmaL2:
        return n * (n * n - 1) / (spec.parameter % 2 ? 2 : 1) * spec.m;
    case Family::PGammaL2:
        return n * (n * n - 1) * spec.m;
    case Family::Sz:
        return n * n * (n - 1) * (n * n + 1);
    }
    throw value_error("unknown family");
}

GeneratorSet family_generators(const FamilySpec& spec) {
    GeneratorSet out;
    out.label = family_display(spec);
    out.order = family_order(spec);
    const unsigned n = spec.parameter;

    switch (spec.family) {
    case Family::Cyclic:
        out.degree = n;
        out.generators.push_back(n == 1 ? Permutation::identity(1) : tail_cycle(n, 0));
        return out;
    case Family::Sym:
        out.degree = n;
        if (n == 1) {
            out.generators.push_back(Permutation::identity(1));
        } else {
            out.generators.push_back(swap01(n));
            if (n >= 3)
                out.generators.push_back(tail_cycle(n, 0));
        }
        return out;
    case Family::Alt:
        out.degree = n;
        if (n <= 2) {
            out.generators.push_back(Permutation::identity(n));
        } else {
            out.generators.push_back(cycle3(n));
            if (n >= 4)
                out.generators.push_back(n % 2 ? tail_cycle(n, 0) : tail_cycle(n, 1));
        }
        return out;
    case Family::PSL2:
    case Family::PGL2:
    case Family::PSigmaL2:
    case Family::PGammaL2: {
        Field f = Field::make(n);
        const auto pts = projective_line(f);
        out.degree = n + 1;
        const unsigned nu = f.primitive_element();
        out.generators.push_back(matrix_point_action(f, {1, 1, 0, 1}, pts));
        if (spec.m >= 2)
            out.generators.push_back(matrix_point_action(f, {1, nu, 0, 1}, pts));
        out.generators.push_back(matrix_point_action(f, {0, f.neg(1), 1, 0}, pts));
        if (spec.family == Family::PGL2 || spec.family == Family::PGammaL2)
            out.generators.push_back(matrix_point_action(f, {nu, 0, 0, 1}, pts));
        if (spec.family == Family::PSigmaL2 || spec.family == Family::PGammaL2)
            out.generators.push_back(frobenius_point_action(f, pts));
        return out;
    }
    case Family::Sz: {
        Field f = Field::make(n);
        const auto pts = suzuki_ovoid(f);
        out.degree = n * n + 1;
        const unsigned a = spec.m / 2;
        auto theta = [&](unsigned x) { return f.frobenius(x, a + 1); };
        /* lower unitriangular two-parameter family */
        auto unipotent = [&](unsigned u, unsigned v) {
            const unsigned ut = theta(u);
            std::vector<unsigned> mat = {
                1, 0, 0, 0,
                u, 1, 0, 0,
                v, ut, 1, 0,
                f.add(f.add(f.mul(u, v), f.mul(ut, f.mul(u, u))), theta(v)),
                f.add(v, f.mul(u, ut)), u, 1};
            return matrix_point_action(f, mat, pts);
        };
        out.generators.push_back(unipotent(1, 0));
        out.generators.push_back(unipotent(0, 1));
        const unsigned nu = f.primitive_element();
        const unsigned nut = theta(nu);
        out.generators.push_back(matrix_point_action(
            f, {1, 0, 0, 0, 0, nu, 0, 0, 0, 0, f.mul(nu, nut), 0, 0, 0, 0, f.mul(f.mul(nu, nu), nut)},
            pts));
        out.generators.push_back(matrix_point_action(
            f, {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0}, pts));
        return out;
    }
    }
    throw value_error("unknown family");
}

ElementSet family_group(const FamilySpec& spec, std::uint64_t cap) {
    GeneratorSet gs = family_generators(spec);
    ElementSet g = ElementSet::generate(gs.generators, cap, gs.label);
    if (Nat(static_cast<unsigned long>(g.size())) != gs.order)
        throw error("constructed " + gs.label + " has order " + std::to_string(g.size()) +
                    ", expected " + gs.order.get_str());
    return g;
}

OrderSpectrum psl2_spectrum(unsigned long q) {
    unsigned long p = 0;
    unsigned m = 0;
    if (q < 3 || q % 2 == 0 || !split_prime_power_ul(q, p, m))
        throw value_error("q must be an odd prime power >= 3");
    const Nat Q(q);
    OrderSpectrum::Map cnt;
    cnt[Nat(1)] = 1;
    cnt[Nat(p)] += Q * Q - 1;
    add_cyclic_classes(cnt, (q - 1) / 2, Q * (Q + 1) / 2);
    add_cyclic_classes(cnt, (q + 1) / 2, Q * (Q - 1) / 2);
    return OrderSpectrum::make(cnt);
}

OrderSpectrum psl2_even_spectrum(unsigned long q) {
    if (q < 2 || (q & (q - 1)) != 0)
        throw value_error("q must be a power of 2, at least 2");
    const Nat Q(q);
    OrderSpectrum::Map cnt;
    cnt[Nat(1)] = 1;
    cnt[Nat(2)] += Q * Q - 1;
    add_cyclic_classes(cnt, q - 1, Q * (Q + 1) / 2);
    add_cyclic_classes(cnt, q + 1, Q * (Q - 1) / 2);
    return OrderSpectrum::make(cnt);
}

OrderSpectrum pgl2_spectrum(unsigned long q) {
    unsigned long p = 0;
    unsigned m = 0;
    if (q < 3 || q % 2 == 0 || !split_prime_power_ul(q, p, m))
        throw value_error("q must be an odd prime power >= 3");
    const Nat Q(q);
    OrderSpectrum::Map cnt;
    cnt[Nat(1)] = 1;
    cnt[Nat(p)] += Q * Q - 1;
    add_cyclic_classes(cnt, q - 1, Q * (Q + 1) / 2);
    add_cyclic_classes(cnt, q + 1, Q * (Q - 1) / 2);
    return OrderSpectrum::make(cnt);
}

static void require_suzuki_q(unsigned long q, unsigned long& r) {
    unsigned long p = 0;
    unsigned m = 0;
    if (q < 8 || !split_prime_power_ul(q, p, m) || p != 2 || m % 2 == 0)
        throw value_error("q must be 2^(2a+1) with a >= 1");
    r = 1ul << (m / 2);
}

SzTwoPart sz_two_part(unsigned long q) {
    const Nat Q(q);
    return {(Q - 1) * (Q * Q + 1), Q * (Q - 1) * (Q * Q + 1)};
}

SzTwoPart sz_two_part_alt(unsigned long q) {
    const Nat Q(q);
    return {Q * (Q * Q + 1), (Q * Q - Q - 1) * (Q * Q + 1)};
}

OrderSpectrum sz_spectrum(unsigned long q) {
    unsigned long r = 0;
    require_suzuki_q(q, r);
    const Nat Q(q), R(r);
    OrderSpectrum::Map cnt;
    cnt[Nat(1)] = 1;
    const SzTwoPart two = sz_two_part(q);
    cnt[Nat(2)] = two.order2;
    cnt[Nat(4)] = two.order4;
    add_cyclic_classes(cnt, q - 1, Q * Q * (Q * Q + 1) / 2);
    add_cyclic_classes(cnt, q + 2 * r + 1, (Q - 2 * R + 1) * (Q - 1) * Q * Q / 4);
    add_cyclic_classes(cnt, q - 2 * r + 1, (Q + 2 * R + 1) * (Q - 1) * Q * Q / 4);
    return OrderSpectrum::make(cnt);
}

Rational psl2_rho(unsigned long q, const Nat& k) {
    unsigned long p = 0;
    unsigned m = 0;
    if (q < 5 || q % 2 == 0 || !split_prime_power_ul(q, p, m))
        throw value_error("q must be an odd prime power >= 5");
    return rho(psl2_spectrum(q), k);
}

Rational psl2_even_rho(unsigned long q, const Nat& k) {
    if (q < 4 || (q & (q - 1)) != 0)
        throw value_error("q must be a power of 2, at least 4");
    return rho(psl2_even_spectrum(q), k);
}

Rational pgl2_rho(unsigned long q, const Nat& k) {
    return rho(pgl2_spectrum(q), k);
}

Rational suzuki_rho(unsigned long q, const Nat& k) {
    return rho(sz_spectrum(q), k);
}

OrderSpectrum sn_spectrum(unsigned n) {
    return cycle_type_spectrum(n, false);
}

OrderSpectrum an_spectrum(unsigned n) {
    return cycle_type_spectrum(n, true);
}

Rational sym_rho_star_p(unsigned n, unsigned p) {
    require_prime(p, "p");
    if (n < 1)
        throw value_error("n must be at least 1");
    Rational acc(0);
    for (unsigned m = 1; m * p <= n; ++m) {
        Nat pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, m);
        acc += make_ratio(1, pw * factorial(m) * factorial(n - m * p));
    }
    return acc;
}

Rational alt_rho_star_p(unsigned n, unsigned p) {
    require_prime(p, "p");
    if (n < 1)
        throw value_error("n must be at least 1");
    Rational acc(0);
    for (unsigned m = 1; m * p <= n; ++m) {
        if (p == 2 && m % 2 != 0)
            continue; // a product of m transpositions is even only for even m
        Nat pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, m);
        acc += make_ratio(1, pw * factorial(m) * factorial(n - m * p));
    }
    return acc * 2;
}

Rational spq_rho_star(unsigned p, unsigned q) {
    require_prime(p, "p");
    require_prime(q, "q");
    if (p <= q)
        throw value_error("p must exceed q");
    const unsigned n = p * q;
    if (n > 10000)
        throw value_error("pq too large");
    Rational acc = make_ratio(1, Nat(p) * q); // the pq-cycles
    for (unsigned x = 1; x <= q - 1; ++x) {
        for (unsigned y = 1; x * p + y * q <= n; ++y) {
            Nat px, qy;
            mpz_ui_pow_ui(px.get_mpz_t(), p, x);
            mpz_ui_pow_ui(qy.get_mpz_t(), q, y);
            acc += make_ratio(1, px * factorial(x) * qy * factorial(y) *
                                     factorial(n - x * p - y * q));
        }
    }
    return acc;
}

Rational psigmal2_coset_rho(unsigned p, unsigned qdeg, unsigned d, TwistVariant variant,
                            bool star) {
    require_prime(p, "p");
    require_prime(qdeg, "q");
    const unsigned long pl = p;
    if ((pl - 1) * pl * (pl + 1) % qdeg == 0)
        throw value_error("q must not divide (p-1)p(p+1)");
    if (d < 1 || ((p - 1) % d != 0 && p % d != 0 && (p + 1) % d != 0))
        throw value_error("d must divide p-1, p, or p+1");

    unsigned long big_q = 1;
    for (unsigned i = 0; i < qdeg; ++i) {
        if (big_q > (1ul << 40) / p)
            throw value_error("p^q too large");
        big_q *= p;
    }
    const bool gamma = variant == TwistVariant::Gamma;
    const OrderSpectrum big = (p == 2)   ? psl2_even_spectrum(big_q)
                              : (gamma) ? pgl2_spectrum(big_q)
                                         : psl2_spectrum(big_q);
    const OrderSpectrum small = (p == 2)   ? psl2_even_spectrum(2)
                                : (gamma) ? pgl2_spectrum(p)
                                           : psl2_spectrum(p);
    const Nat kd(d);
    const Nat kbig = kd * qdeg;
    const Rational big_v = star ? rho_star(big, kbig) : rho(big, kbig);
    const Rational small_v = star ? rho_star(small, kd) : rho(small, kd);
    return big_v / qdeg + small_v * (qdeg - 1) / qdeg;
}

} // namespace ordspec
