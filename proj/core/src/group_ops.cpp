#include "ordspec/group_ops.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "ordspec/errors.hpp"

namespace ordspec {

namespace {

std::uint16_t decode_point(const std::uint8_t* data, unsigned width, unsigned i) {
    if (width == 1)
        return data[i];
    return static_cast<std::uint16_t>(data[2 * i] | (data[2 * i + 1] << 8));
}

unsigned long long lcm_checked(unsigned long long a, unsigned long long b) {
    unsigned long long g = std::gcd(a, b);
    unsigned long long q = a / g;
    if (q > std::numeric_limits<unsigned long long>::max() / b)
        throw value_error("element order exceeds 64 bits");
    return q * b;
}

/* Order of a packed permutation: lcm of its cycle lengths. */
unsigned long long packed_order(const std::uint8_t* data, unsigned degree, unsigned width,
                                std::vector<std::uint8_t>& seen) {
    seen.assign(degree, 0);
    unsigned long long l = 1;
    for (unsigned i = 0; i < degree; ++i) {
        if (seen[i])
            continue;
        unsigned long long len = 0;
        unsigned j = i;
        while (!seen[j]) {
            seen[j] = 1;
            ++len;
            j = decode_point(data, width, j);
        }
        l = lcm_checked(l, len);
    }
    return l;
}

/* out = a followed by b, i.e. out(x) = b(a(x)), all packed with the
 * same degree and width. */
void compose_packed(const std::uint8_t* a, const std::vector<std::uint16_t>& b_images,
                    std::uint8_t* out, unsigned degree, unsigned width) {
    if (width == 1) {
        for (unsigned i = 0; i < degree; ++i)
            out[i] = static_cast<std::uint8_t>(b_images[a[i]]);
    } else {
        for (unsigned i = 0; i < degree; ++i) {
            std::uint16_t y = b_images[decode_point(a, 2, i)];
            out[2 * i] = static_cast<std::uint8_t>(y & 0xff);
            out[2 * i + 1] = static_cast<std::uint8_t>(y >> 8);
        }
    }
}

using Histogram = std::map<unsigned long long, unsigned long long>;

OrderSpectrum::Map to_nat_map(const Histogram& h) {
    OrderSpectrum::Map m;
    for (const auto& [o, c] : h)
        m[Nat(static_cast<unsigned long>(o))] = Nat(static_cast<unsigned long>(c));
    return m;
}

bool normalizes(const std::vector<Permutation>& sub_gens, const ElementSet& sub,
                const Permutation& x) {
    for (const auto& sg : sub_gens)
        if (!sub.contains(sg.conjugated_by(x)))
            return false;
    return true;
}

} // namespace

OrderSpectrum spectrum_of(const ElementSet& g, unsigned threads) {
    if (threads == 0)
        threads = 1;
    const std::uint64_t n = g.size();
    const unsigned degree = g.degree();
    const unsigned width = g.width();

    auto count_range = [&](std::uint64_t lo, std::uint64_t hi, Histogram& out) {
        std::vector<std::uint8_t> seen;
        for (std::uint64_t i = lo; i < hi; ++i)
            ++out[packed_order(g.encoded(i).data(), degree, width, seen)];
    };

    Histogram total;
    if (threads == 1 || n < 4096) {
        count_range(0, n, total);
    } else {
        std::vector<Histogram> parts(threads);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::uint64_t lo = std::min<std::uint64_t>(n, t * chunk);
            std::uint64_t hi = std::min<std::uint64_t>(n, lo + chunk);
            pool.emplace_back(count_range, lo, hi, std::ref(parts[t]));
        }
        for (auto& th : pool)
            th.join();
        for (const auto& part : parts)
            for (const auto& [o, c] : part)
                total[o] += c;
    }
    return OrderSpectrum::make(to_nat_map(total));
}

OrderSpectrum coset_spectrum(const ElementSet& n, const Permutation& rep) {
    if (rep.degree() != n.degree())
        throw value_error("coset representative degree mismatch");
    const unsigned degree = n.degree();
    const unsigned width = n.width();
    const auto& rep_images = rep.images0();
    std::vector<std::uint8_t> buf(n.entry_bytes());
    std::vector<std::uint8_t> seen;
    Histogram h;
    for (std::uint64_t i = 0; i < n.size(); ++i) {
        /* element rep * g of the coset rep N: t -> g(rep(t)) */
        const std::uint8_t* g = n.encoded(i).data();
        if (width == 1) {
            for (unsigned t = 0; t < degree; ++t)
                buf[t] = g[rep_images[t]];
        } else {
            for (unsigned t = 0; t < degree; ++t) {
                std::uint16_t y = decode_point(g, 2, rep_images[t]);
                buf[2 * t] = static_cast<std::uint8_t>(y & 0xff);
                buf[2 * t + 1] = static_cast<std::uint8_t>(y >> 8);
            }
        }
        ++h[packed_order(buf.data(), degree, width, seen)];
    }
    return OrderSpectrum::unchecked(to_nat_map(h));
}

OrderSpectrum quotient_spectrum(const ElementSet& g, const ElementSet& n) {
    if (!is_normal(g, n))
        throw value_error("quotient requires a normal subgroup");
    if (g.size() >= std::numeric_limits<std::uint32_t>::max())
        throw value_error("group too large for quotient labeling");

    const unsigned degree = g.degree();
    const unsigned width = g.width();
    constexpr std::uint32_t unlabeled = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> label(g.size(), unlabeled);
    std::vector<std::uint8_t> buf(g.entry_bytes());
    std::vector<std::uint8_t> seen;

    Histogram h;
    std::uint32_t next = 0;
    for (std::uint64_t i = 0; i < g.size(); ++i) {
        if (label[i] != unlabeled)
            continue;
        const std::uint32_t c = next++;
        Permutation x = g.element(i);
        const auto& xi = x.images0();
        std::uint64_t rep = i;
        for (std::uint64_t j = 0; j < n.size(); ++j) {
            compose_packed(n.encoded(j).data(), xi, buf.data(), degree, width);
            std::int64_t idx = g.index_of_packed(buf.data());
            if (idx < 0)
                throw value_error("coset element escapes the group");
            label[static_cast<std::uint64_t>(idx)] = c;
            if (std::memcmp(buf.data(), g.encoded(rep).data(), g.entry_bytes()) < 0)
                rep = static_cast<std::uint64_t>(idx);
        }
        /* coset order, computed on the minimal-encoding representative */
        Permutation r = g.element(rep);
        unsigned long long t = 1;
        Permutation y = r;
        while (!n.contains(y)) {
            y = y * r;
            ++t;
        }
        ++h[t];
    }
    return OrderSpectrum::make(to_nat_map(h));
}

ElementSet center(const ElementSet& g) {
    std::vector<Permutation> members;
    for (std::uint64_t i = 0; i < g.size(); ++i) {
        Permutation p = g.element(i);
        bool central = true;
        for (const auto& gen : g.generators()) {
            if (!(p * gen == gen * p)) {
                central = false;
                break;
            }
        }
        if (central)
            members.push_back(std::move(p));
    }
    return ElementSet::from_elements(g.degree(), members,
                                     g.label().empty() ? "center" : "Z(" + g.label() + ")");
}

ElementSet normalizer(const ElementSet& g, const ElementSet& h) {
    if (!is_subgroup(g, h))
        throw value_error("normalizer requires a subgroup of the ambient group");
    std::vector<Permutation> members;
    for (std::uint64_t i = 0; i < g.size(); ++i) {
        Permutation p = g.element(i);
        if (normalizes(h.generators(), h, p))
            members.push_back(std::move(p));
    }
    return ElementSet::from_elements(g.degree(), members, "normalizer");
}

ElementSet sylow_subgroup(const ElementSet& g, std::uint64_t p) {
    if (p < 2)
        throw value_error("p must be a prime");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw value_error("p must be a prime");
    if (g.size() % p != 0)
        throw value_error("p does not divide the group order");

    const unsigned degree = g.degree();
    const unsigned width = g.width();
    std::vector<Permutation> pgens;
    ElementSet sub = ElementSet::generate({Permutation::identity(degree)});
    std::vector<std::uint8_t> seen;

    /* Grow by adjoining the p-element of N_G(P) \ P with the smallest
     * canonical encoding, until P carries the full p-part. */
    bool grew = true;
    while (grew) {
        grew = false;
        std::int64_t best = -1;
        for (std::uint64_t i = 0; i < g.size(); ++i) {
            unsigned long long o = packed_order(g.encoded(i).data(), degree, width, seen);
            if (o == 1)
                continue;
            while (o % p == 0)
                o /= p;
            if (o != 1)
                continue;
            Permutation x = g.element(i);
            if (sub.contains(x) || !normalizes(pgens, sub, x))
                continue;
            if (best < 0 || std::memcmp(g.encoded(i).data(), g.encoded(best).data(),
                                        g.entry_bytes()) < 0)
                best = static_cast<std::int64_t>(i);
        }
        if (best >= 0) {
            pgens.push_back(g.element(static_cast<std::uint64_t>(best)));
            sub = ElementSet::generate(pgens);
            grew = true;
        }
    }

    Nat ppart = 1;
    Nat rest = Nat(static_cast<unsigned long>(g.size()));
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= static_cast<unsigned long>(p);
        ppart *= static_cast<unsigned long>(p);
    }
    if (Nat(static_cast<unsigned long>(sub.size())) != ppart)
        throw error("sylow construction stalled below the full p-part");
    sub.set_label(g.label().empty() ? "sylow" : "Syl_" + std::to_string(p) + "(" + g.label() + ")");
    return sub;
}

ElementSet stabilizer(const ElementSet& g, std::uint16_t point) {
    if (point >= g.degree())
        throw value_error("stabilized point outside the degree");
    std::vector<Permutation> members;
    for (std::uint64_t i = 0; i < g.size(); ++i) {
        if (decode_point(g.encoded(i).data(), g.width(), point) == point)
            members.push_back(g.element(i));
    }
    return ElementSet::from_elements(g.degree(), members, "stabilizer");
}

std::vector<ElementSet> index2_subgroups(const ElementSet& g) {
    const unsigned degree = g.degree();

    /* K = subgroup generated by all squares; G/K is elementary abelian
     * of exponent 2, and index-2 subgroups of G are exactly the
     * preimages of its hyperplanes. */
    std::vector<Permutation> kgens;
    ElementSet k = ElementSet::generate({Permutation::identity(degree)});
    for (std::uint64_t i = 0; i < g.size(); ++i) {
        Permutation p = g.element(i);
        Permutation sq = p * p;
        if (!k.contains(sq)) {
            kgens.push_back(std::move(sq));
            k = ElementSet::generate(kgens);
        }
    }
    if (k.size() == g.size())
        return {};

    if (g.size() >= std::numeric_limits<std::uint32_t>::max())
        throw value_error("group too large for quotient labeling");
    constexpr std::uint32_t unlabeled = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> label(g.size(), unlabeled);
    std::vector<Permutation> reps;
    std::vector<std::uint8_t> buf(g.entry_bytes());
    for (std::uint64_t i = 0; i < g.size(); ++i) {
        if (label[i] != unlabeled)
            continue;
        const std::uint32_t c = static_cast<std::uint32_t>(reps.size());
        Permutation x = g.element(i);
        const auto& xi = x.images0();
        for (std::uint64_t j = 0; j < k.size(); ++j) {
            compose_packed(k.encoded(j).data(), xi, buf.data(), degree, g.width());
            std::int64_t idx = g.index_of_packed(buf.data());
            if (idx < 0)
                throw value_error("coset element escapes the group");
            label[static_cast<std::uint64_t>(idx)] = c;
        }
        reps.push_back(std::move(x));
    }

    /* Coordinatize the quotient over GF(2): pick unassigned labels as
     * new basis vectors in ascending order, then close under the
     * known part. */
    const std::size_t m = reps.size();
    auto mul_label = [&](std::uint32_t a, std::uint32_t b) {
        std::int64_t idx = g.index_of(reps[a] * reps[b]);
        return label[static_cast<std::uint64_t>(idx)];
    };
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> coord(m, unset);
    coord[label[0]] = 0; // identity's coset
    unsigned rank = 0;
    for (std::uint32_t l = 0; l < m; ++l) {
        if (coord[l] != unset)
            continue;
        std::vector<std::uint32_t> known;
        for (std::uint32_t a = 0; a < m; ++a)
            if (coord[a] != unset)
                known.push_back(a);
        for (std::uint32_t a : known)
            coord[mul_label(a, l)] = coord[a] | (1u << rank);
        ++rank;
    }
    if (m != (std::size_t{1} << rank))
        throw error("square quotient is not elementary abelian");

    std::vector<ElementSet> out;
    for (std::uint32_t f = 1; f < (1u << rank); ++f) {
        std::vector<Permutation> members;
        members.reserve(g.size() / 2);
        for (std::uint64_t i = 0; i < g.size(); ++i)
            if (std::popcount(coord[label[i]] & f) % 2 == 0)
                members.push_back(g.element(i));
        ElementSet h = ElementSet::from_elements(degree, members, "index2-" + std::to_string(f));
        if (h.size() * 2 != g.size())
            throw error("index-2 candidate has the wrong order");
        out.push_back(std::move(h));
    }
    return out;
}

bool is_subgroup(const ElementSet& g, const ElementSet& h) {
    return h.degree() == g.degree() && g.contains_generators_of(h);
}

bool is_normal(const ElementSet& g, const ElementSet& n) {
    if (!is_subgroup(g, n))
        return false;
    for (const auto& ngen : n.generators())
        for (const auto& ggen : g.generators())
            if (!n.contains(ngen.conjugated_by(ggen)))
                return false;
    return true;
}

Nat subgroup_index(const ElementSet& g, const ElementSet& h) {
    if (!is_subgroup(g, h))
        throw value_error("not a subgroup");
    Nat go(static_cast<unsigned long>(g.size()));
    Nat ho(static_cast<unsigned long>(h.size()));
    if (!divides(ho, go))
        throw error("subgroup order fails Lagrange");
    return go / ho;
}

std::vector<std::uint16_t> orbit(const std::vector<Permutation>& gens, std::uint16_t point) {
    std::vector<std::uint16_t> out{point};
    std::vector<bool> seen;
    unsigned degree = gens.empty() ? point + 1u : gens.front().degree();
    if (point >= degree)
        throw value_error("orbit point outside the degree");
    seen.assign(degree, false);
    seen[point] = true;
    for (std::size_t q = 0; q < out.size(); ++q) {
        for (const auto& gen : gens) {
            std::uint16_t y = gen.apply0(out[q]);
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    }
    return out;
}

bool is_transitive(const std::vector<Permutation>& gens, unsigned degree) {
    if (degree == 0)
        return false;
    return orbit(gens, 0).size() == degree;
}

} // namespace ordspec
