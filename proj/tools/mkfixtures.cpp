/* Regenerates the fixture corpus from scratch.
 *
 * Twelve groups ship as generator files plus a manifest that also
 * records the orders of larger groups with no shipped file. Nothing
 * here is copied from tables: every group is constructed (Steiner
 * systems and their automorphisms for the Mathieu chain, the rank-3
 * graph on 100 vertices for the Hall-Janko pair, a 7-dimensional
 * GF(11) matrix group for J1) and every step is gated by structural
 * checks, closure orders and spot rho values, so a silent drift in the
 * construction fails the run instead of shipping a wrong fixture.
 *
 * Usage: mkfixtures [output-dir] [stage...]
 *   stages: trio m12 m22 j2 j1 manifest check (default: all)
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ordspec/errors.hpp"
#include "ordspec/families.hpp"
#include "ordspec/fixtures.hpp"
#include "ordspec/gf.hpp"
#include "ordspec/group_ops.hpp"
#include "ordspec/numbers.hpp"
#include "ordspec/perm.hpp"
#include "ordspec/permset.hpp"
#include "ordspec/spectrum.hpp"

namespace fs = std::filesystem;
using namespace ordspec;

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("mkfixtures: " + msg);
}

void require(bool ok, const std::string& msg) {
    if (!ok)
        fail(msg);
}

using Mask = std::uint32_t;

int bits(Mask m) { return std::popcount(m); }

std::uint64_t binom(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

/* Gosper: next mask with the same popcount, below 2^n. */
bool next_subset(Mask& m, unsigned n) {
    Mask c = m & (~m + 1), r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
    return m < (Mask(1) << n);
}

Mask first_subset(unsigned k) { return k ? (Mask(1) << k) - 1 : 0; }

Mask apply_mask(const Permutation& g, Mask m) {
    Mask r = 0;
    while (m) {
        int x = std::countr_zero(m);
        m &= m - 1;
        r |= Mask(1) << g.apply0(static_cast<std::uint16_t>(x));
    }
    return r;
}

/* Orbit of a point-set mask under a permutation list, BFS order. */
std::vector<Mask> mask_orbit(Mask seed, const std::vector<Permutation>& gens, std::size_t cap) {
    std::vector<Mask> out{seed};
    std::unordered_set<Mask> seen{seed};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens) {
            Mask m = apply_mask(g, out[i]);
            if (seen.insert(m).second) {
                out.push_back(m);
                if (out.size() > cap)
                    return out;
            }
        }
    return out;
}

/* Small deterministic generating set read off a closed element set:
 * walk the arena and keep whatever the kept elements do not yet
 * generate. Two or three generators in practice. */
std::vector<Permutation> greedy_gens(const ElementSet& s) {
    std::vector<Permutation> gens;
    ElementSet closure = ElementSet::generate({Permutation::identity(s.degree())}, s.size() + 1);
    for (std::uint64_t i = 0; i < s.size() && closure.size() < s.size(); ++i) {
        Permutation p = s.element(i);
        if (!closure.contains(p)) {
            gens.push_back(p);
            closure = ElementSet::generate(gens, s.size() + 1);
        }
    }
    require(closure.size() == s.size(), "greedy generating set failed to close");
    return gens;
}

void write_fixture(const fs::path& dir, const std::string& label, const ElementSet& set) {
    std::vector<Permutation> gens = greedy_gens(set);
    fs::path p = dir / (label + ".gens");
    std::ofstream out(p);
    require(static_cast<bool>(out), "cannot write " + p.string());
    out << "# " << label << ": degree " << set.degree() << ", order " << set.size() << "\n";
    out << "degree " << set.degree() << "\n";
    for (const auto& g : gens)
        out << "gen " << to_cycle_string(g) << "\n";
    require(static_cast<bool>(out), "write failed for " + p.string());
    std::printf("[fixture] %-8s degree %3u order %10llu gens %zu\n", label.c_str(), set.degree(),
                static_cast<unsigned long long>(set.size()), gens.size());
}

void gate_rho(const ElementSet& s, unsigned long long k, unsigned long long num,
              unsigned long long den, const std::string& what) {
    OrderSpectrum spec = spectrum_of(s);
    Rational got = rho(spec, Nat(static_cast<unsigned long>(k)));
    Rational want = make_ratio(Nat(static_cast<unsigned long>(num)), Nat(static_cast<unsigned long>(den)));
    if (got != want)
        fail(what + ": rho_" + std::to_string(k) + " is " + got.get_str() + ", expected " +
             want.get_str());
}

void gate_orders(const ElementSet& s, std::vector<unsigned long> orders, const std::string& what) {
    OrderSpectrum spec = spectrum_of(s);
    std::vector<unsigned long> got;
    for (const auto& [d, c] : spec.counts())
        got.push_back(d.get_ui());
    std::sort(orders.begin(), orders.end());
    if (got != orders)
        fail(what + ": unexpected element order support");
}

/* ---------- block designs ---------- */

/* Point-set design on n points where every `part`-subset lies in
 * exactly one block (gated at build time). */
struct Design {
    unsigned n = 0;
    unsigned part = 0;
    std::vector<Mask> blocks;
    std::unordered_map<Mask, Mask> part_block; // part-subset -> its block
    std::vector<std::vector<int>> through;     // point -> block indices
};

Design make_design(unsigned n, unsigned part, std::vector<Mask> blocks, const std::string& what) {
    Design d;
    d.n = n;
    d.part = part;
    d.blocks = std::move(blocks);
    d.through.resize(n);
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        Mask b = d.blocks[bi];
        std::vector<int> pos;
        for (Mask m = b; m;) {
            int x = std::countr_zero(m);
            m &= m - 1;
            require(static_cast<unsigned>(x) < n, what + ": block point out of range");
            d.through[x].push_back(static_cast<int>(bi));
            pos.push_back(x);
        }
        Mask sub = first_subset(part);
        do {
            Mask key = 0;
            for (Mask s = sub; s;) {
                int i = std::countr_zero(s);
                s &= s - 1;
                key |= Mask(1) << pos[i];
            }
            if (!d.part_block.emplace(key, b).second)
                fail(what + ": some " + std::to_string(part) + "-subset lies in two blocks");
        } while (next_subset(sub, static_cast<unsigned>(pos.size())));
    }
    require(d.part_block.size() == binom(n, part),
            what + ": not every " + std::to_string(part) + "-subset is covered");
    return d;
}

using Allow = std::function<bool(int, int)>;
using Accept = std::function<bool(const std::vector<int>&)>;

/* Backtracking search for a point bijection mapping blocks of `dom`
 * onto blocks of `img`. Points are assigned in the given order; the
 * first map passing `accept` is returned. `allow` can veto individual
 * candidate images (used to force a map that moves a chosen point). */
struct DesignSearch {
    const Design& dom;
    const Design& img;
    const std::vector<int>& order;
    const Allow& allow;
    const Accept& accept;
    std::vector<int> sigma;
    Mask used = 0, assigned = 0;
    std::optional<Permutation> result;

    DesignSearch(const Design& d, const Design& i, const std::vector<int>& o, const Allow& al,
                 const Accept& ac)
        : dom(d), img(i), order(o), allow(al), accept(ac), sigma(d.n, -1) {}

    bool feasible(int v, int w) const {
        Mask av = assigned | (Mask(1) << v);
        for (int bi : dom.through[v]) {
            Mask s = dom.blocks[bi] & av;
            if (static_cast<unsigned>(bits(s)) < dom.part)
                continue;
            Mask image = 0;
            for (Mask m = s; m;) {
                int x = std::countr_zero(m);
                m &= m - 1;
                image |= Mask(1) << (x == v ? w : sigma[x]);
            }
            Mask key = 0;
            Mask m = image;
            for (unsigned i = 0; i < img.part; ++i) {
                key |= m & (~m + 1);
                m &= m - 1;
            }
            auto it = img.part_block.find(key);
            if (it == img.part_block.end() || (image & ~it->second))
                return false;
        }
        return true;
    }

    bool go(std::size_t pos) {
        if (pos == dom.n) {
            if (!accept(sigma))
                return false;
            std::vector<std::uint16_t> im(dom.n);
            for (unsigned i = 0; i < dom.n; ++i)
                im[i] = static_cast<std::uint16_t>(sigma[i]);
            result = Permutation::from_images(im);
            return true;
        }
        int v = order[pos];
        for (int w = 0; w < static_cast<int>(dom.n); ++w) {
            if (used & (Mask(1) << w))
                continue;
            if (!allow(v, w) || !feasible(v, w))
                continue;
            sigma[v] = w;
            used |= Mask(1) << w;
            assigned |= Mask(1) << v;
            if (go(pos + 1))
                return true;
            sigma[v] = -1;
            used &= ~(Mask(1) << w);
            assigned &= ~(Mask(1) << v);
        }
        return false;
    }
};

std::optional<Permutation> design_map(const Design& dom, const Design& img,
                                      const std::vector<int>& order, const Allow& allow,
                                      const Accept& accept) {
    DesignSearch s(dom, img, order, allow, accept);
    s.go(0);
    return s.result;
}

/* Assignment order that completes whole blocks early, which is what
 * makes the search prune. */
std::vector<int> block_order(const Design& d, int start) {
    std::vector<int> order;
    Mask seen = 0;
    auto add = [&](int x) {
        if (!(seen & (Mask(1) << x))) {
            seen |= Mask(1) << x;
            order.push_back(x);
        }
    };
    if (start >= 0)
        add(start);
    for (Mask b : d.blocks)
        for (Mask m = b; m;) {
            add(std::countr_zero(m));
            m &= m - 1;
        }
    for (unsigned x = 0; x < d.n; ++x)
        add(static_cast<int>(x));
    return order;
}

Allow allow_all() {
    return [](int, int) { return true; };
}

Accept accept_all() {
    return [](const std::vector<int>&) { return true; };
}

/* ---------- coset actions ---------- */

std::vector<Permutation> coset_reps(const ElementSet& h, const std::vector<Permutation>& gens,
                                    unsigned expected) {
    std::vector<Permutation> reps{Permutation::identity(h.degree())};
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (const auto& s : gens) {
            Permutation t = reps[i] * s;
            bool known = false;
            for (const auto& r : reps)
                if (h.contains(t * r.inverse())) {
                    known = true;
                    break;
                }
            if (!known)
                reps.push_back(t);
        }
    require(reps.size() == expected, "coset count is " + std::to_string(reps.size()) +
                                         ", expected " + std::to_string(expected));
    return reps;
}

Permutation coset_image(const ElementSet& h, const std::vector<Permutation>& reps,
                        const Permutation& g) {
    std::vector<std::uint16_t> im(reps.size(), 0xffff);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        Permutation t = reps[i] * g;
        for (std::size_t j = 0; j < reps.size(); ++j)
            if (h.contains(t * reps[j].inverse())) {
                im[i] = static_cast<std::uint16_t>(j);
                break;
            }
        require(im[i] != 0xffff, "coset image not found");
    }
    return Permutation::from_images(im);
}

/* ---------- PGammaL2(9): A6, M10, Aut(A6) ---------- */

void build_trio(const fs::path& dir) {
    ElementSet a6 = family_group(FamilySpec::make(Family::PSL2, 9));
    ElementSet gamma = family_group(FamilySpec::make(Family::PGammaL2, 9));
    require(gamma.size() == 1440, "PGammaL2(9) order");

    /* The three index-2 subgroups are told apart by which of the two
     * extra generators (diagonal scaling, Frobenius) they contain;
     * M10 is the one containing neither. */
    Permutation diag = family_generators(FamilySpec::make(Family::PGL2, 9)).generators.back();
    Permutation frob = family_generators(FamilySpec::make(Family::PSigmaL2, 9)).generators.back();
    require(gamma.contains(diag) && gamma.contains(frob), "extra generators not in PGammaL2(9)");

    auto subs = index2_subgroups(gamma);
    require(subs.size() == 3, "PGammaL2(9) should have three index-2 subgroups");
    const ElementSet *pgl = nullptr, *sigma = nullptr, *m10 = nullptr;
    for (const auto& s : subs) {
        bool hd = s.contains(diag), hf = s.contains(frob);
        require(s.size() == 720, "index-2 subgroup order");
        if (hd && !hf)
            pgl = &s;
        else if (hf && !hd)
            sigma = &s;
        else if (!hd && !hf)
            m10 = &s;
        else
            fail("an index-2 subgroup contains both extra generators");
    }
    require(pgl && sigma && m10, "could not identify the three index-2 subgroups");

    write_fixture(dir, "A6", a6);
    write_fixture(dir, "M10", *m10);
    write_fixture(dir, "AutA6", gamma);
}

/* ---------- S(5,6,12): M12, M11, Aut(M12) ---------- */

void build_m12_chain(const fs::path& dir) {
    auto pslgens = family_generators(FamilySpec::make(Family::PSL2, 11));
    ElementSet psl = family_group(FamilySpec::make(Family::PSL2, 11));
    require(psl.size() == 660 && psl.degree() == 12, "PSL2(11) on 12 points");

    /* Blocks: orbit of the quadratic-residue hexad on the projective
     * line; 132 blocks forming S(5,6,12). */
    Mask hexad = 0;
    for (int x : {0, 1, 3, 4, 5, 9})
        hexad |= Mask(1) << x;
    auto blocks = mask_orbit(hexad, pslgens.generators, 200);
    require(blocks.size() == 132, "hexad orbit size");
    Design s12 = make_design(12, 5, blocks, "S(5,6,12)");

    auto order = block_order(s12, -1);
    auto outside = design_map(s12, s12, order, allow_all(), [&](const std::vector<int>& sig) {
        std::vector<std::uint16_t> im(sig.begin(), sig.end());
        return !psl.contains(Permutation::from_images(im));
    });
    require(outside.has_value(), "no design automorphism outside PSL2(11)");

    auto m12gens = pslgens.generators;
    m12gens.push_back(*outside);
    ElementSet m12 = ElementSet::generate(m12gens, 100000, "M12");
    require(m12.size() == 95040, "M12 order");
    gate_rho(m12, 4, 6832, 95040, "M12");
    write_fixture(dir, "M12", m12);

    /* M11: stabilizer of the last projective point, degree cut to 11. */
    ElementSet stab = stabilizer(m12, 11);
    require(stab.size() == 7920, "M11 order");
    std::vector<Permutation> g11;
    for (const auto& g : greedy_gens(stab)) {
        require(g.apply0(11) == 11, "stabilizer moves its point");
        std::vector<std::uint16_t> im(g.images0().begin(), g.images0().begin() + 11);
        g11.push_back(Permutation::from_images(im));
    }
    ElementSet m11 = ElementSet::generate(g11, 10000, "M11");
    require(m11.size() == 7920, "M11 order after relabel");
    gate_rho(m11, 4, 1156, 7920, "M11");
    write_fixture(dir, "M11", m11);

    /* Aut(M12) = M12:2 on 12+12 points. The outer half swaps the
     * natural action with the action on the cosets of a transitive
     * (point-moving) M11, twisted back into M12 through a design
     * isomorphism. */
    Permutation eleven;
    bool found11 = false;
    for (std::uint64_t i = 0; i < m12.size() && !found11; ++i) {
        Permutation c = m12.element(i);
        if (c.order() == 11) {
            eleven = c;
            found11 = true;
        }
    }
    require(found11, "no element of order 11 in M12");

    std::optional<ElementSet> exotic;
    for (std::uint64_t i = 0; i < m12.size() && !exotic; ++i) {
        Permutation d = m12.element(i);
        if (d.is_identity())
            continue;
        try {
            ElementSet h = ElementSet::generate({eleven, d}, 7920);
            if (h.size() == 7920 && is_transitive({eleven, d}, 12))
                exotic = std::move(h);
        } catch (const cap_exceeded&) {
        }
    }
    require(exotic.has_value(), "no transitive M11 found");

    auto reps = coset_reps(*exotic, m12.generators(), 12);
    auto pi = [&](const Permutation& g) { return coset_image(*exotic, reps, g); };

    std::vector<Permutation> pigens;
    for (const auto& g : m12.generators())
        pigens.push_back(pi(g));

    /* The block system of the coset action: some 6-subset has a
     * 132-element orbit, and it carries a second S(5,6,12). */
    std::optional<Design> s12b;
    Mask six = first_subset(6);
    do {
        auto orb = mask_orbit(six, pigens, 150);
        if (orb.size() == 132) {
            s12b = make_design(12, 5, orb, "coset S(5,6,12)");
            break;
        }
    } while (next_subset(six, 12));
    require(s12b.has_value(), "no 132-orbit of 6-subsets in the coset action");

    auto h = design_map(*s12b, s12, block_order(*s12b, -1), allow_all(), accept_all());
    require(h.has_value(), "no isomorphism between the two S(5,6,12)");

    /* Conjugating the coset action through h lands inside M12; that
     * containment is the correctness gate for the outer map. */
    auto pi2 = [&](const Permutation& g) { return pi(g).conjugated_by(*h); };
    std::vector<Permutation> outer;
    for (const auto& g : m12.generators()) {
        Permutation o = pi2(g);
        require(m12.contains(o), "twisted coset action leaves M12");
        outer.push_back(o);
    }

    /* pi2 squared is inner; find the conjugating element. */
    std::vector<Permutation> twice;
    for (const auto& o : outer)
        twice.push_back(pi2(o));
    Permutation conj;
    bool foundc = false;
    for (std::uint64_t i = 0; i < m12.size() && !foundc; ++i) {
        Permutation cnd = m12.element(i);
        bool ok = true;
        for (std::size_t j = 0; j < twice.size() && ok; ++j)
            ok = twice[j] == m12.generators()[j].conjugated_by(cnd);
        if (ok) {
            conj = cnd;
            foundc = true;
        }
    }
    require(foundc, "pi2 squared is not inner");

    auto glue = [](const Permutation& a, const Permutation& b) {
        std::vector<std::uint16_t> im(24);
        for (int x = 0; x < 12; ++x) {
            im[x] = a.apply0(static_cast<std::uint16_t>(x));
            im[12 + x] = static_cast<std::uint16_t>(12 + b.apply0(static_cast<std::uint16_t>(x)));
        }
        return Permutation::from_images(im);
    };
    auto cross = [](const Permutation& up, const Permutation& down) {
        std::vector<std::uint16_t> im(24);
        for (int x = 0; x < 12; ++x) {
            im[x] = static_cast<std::uint16_t>(12 + up.apply0(static_cast<std::uint16_t>(x)));
            im[12 + x] = down.apply0(static_cast<std::uint16_t>(x));
        }
        return Permutation::from_images(im);
    };

    std::vector<Permutation> base24;
    for (std::size_t i = 0; i < m12.generators().size(); ++i)
        base24.push_back(glue(m12.generators()[i], outer[i]));

    Permutation id12 = Permutation::identity(12);
    std::vector<std::pair<Permutation, Permutation>> variants = {
        {id12, id12},          {conj, id12},           {id12, conj},
        {conj.inverse(), id12}, {id12, conj.inverse()}, {conj, conj.inverse()},
        {conj.inverse(), conj}};
    std::optional<ElementSet> aut;
    for (const auto& [up, down] : variants) {
        auto gens = base24;
        gens.push_back(cross(up, down));
        try {
            ElementSet cand = ElementSet::generate(gens, 190080, "AutM12");
            if (cand.size() == 190080 && center(cand).size() == 1) {
                aut = std::move(cand);
                break;
            }
        } catch (const cap_exceeded&) {
        }
    }
    require(aut.has_value(), "no swap variant yields M12:2");
    gate_rho(*aut, 4, 19504, 190080, "AutM12");
    write_fixture(dir, "AutM12", *aut);
}

/* ---------- S(3,6,22): PSL3(4), M22, Aut(M22) ---------- */

void build_m22_chain(const fs::path& dir) {
    Field f = Field::make(4);
    const unsigned zeta = f.primitive_element();

    /* The 21 points of PG(2,4), lex order of normalized coordinates. */
    std::set<std::vector<unsigned>> ptset;
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b)
            for (unsigned c = 0; c < 4; ++c) {
                std::vector<unsigned> v{a, b, c};
                if (a || b || c) {
                    normalize_projective(f, v);
                    ptset.insert(v);
                }
            }
    std::vector<std::vector<unsigned>> pts(ptset.begin(), ptset.end());
    require(pts.size() == 21, "PG(2,4) point count");
    std::map<std::vector<unsigned>, int> index;
    for (std::size_t i = 0; i < pts.size(); ++i)
        index[pts[i]] = static_cast<int>(i);

    auto line_through = [&](int i, int j) {
        Mask line = (Mask(1) << i) | (Mask(1) << j);
        for (unsigned lam = 1; lam < 4; ++lam) {
            std::vector<unsigned> w(3);
            for (int t = 0; t < 3; ++t)
                w[t] = f.add(pts[i][t], f.mul(lam, pts[j][t]));
            normalize_projective(f, w);
            line |= Mask(1) << index.at(w);
        }
        return line;
    };
    std::set<Mask> lineset;
    for (int i = 0; i < 21; ++i)
        for (int j = i + 1; j < 21; ++j)
            lineset.insert(line_through(i, j));
    require(lineset.size() == 21, "PG(2,4) line count");
    std::vector<Mask> lines(lineset.begin(), lineset.end());
    for (Mask l : lines)
        require(bits(l) == 5, "line size");

    /* SL3(4) transvections acting on the 21 points. */
    std::vector<Permutation> sl;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j)
                continue;
            for (unsigned alpha : {1u, zeta}) {
                std::vector<unsigned> m(9, 0);
                m[0] = m[4] = m[8] = 1;
                m[static_cast<std::size_t>(3 * i + j)] = alpha;
                sl.push_back(matrix_point_action(f, m, pts));
            }
        }
    ElementSet psl34 = ElementSet::generate(sl, 30000, "PSL3_4");
    require(psl34.size() == 20160, "PSL3(4) order");
    gate_rho(psl34, 35, 395, 576, "PSL3_4");
    write_fixture(dir, "PSL3_4", psl34);

    /* Hyperovals: 6-point sets with no three collinear. */
    std::unordered_set<Mask> collinear;
    for (Mask l : lines) {
        std::vector<int> pos;
        for (Mask m = l; m;) {
            pos.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        Mask tri = first_subset(3);
        do {
            Mask key = 0;
            for (Mask s = tri; s;) {
                int idx = std::countr_zero(s);
                s &= s - 1;
                key |= Mask(1) << pos[idx];
            }
            collinear.insert(key);
        } while (next_subset(tri, 5));
    }
    std::vector<Mask> ovals;
    Mask six = first_subset(6);
    do {
        std::vector<int> pos;
        for (Mask m = six; m;) {
            pos.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        bool good = true;
        Mask tri = first_subset(3);
        do {
            Mask key = 0;
            for (Mask s = tri; s;) {
                int idx = std::countr_zero(s);
                s &= s - 1;
                key |= Mask(1) << pos[idx];
            }
            if (collinear.count(key)) {
                good = false;
                break;
            }
        } while (next_subset(tri, 6));
        if (good)
            ovals.push_back(six);
    } while (next_subset(six, 21));
    require(ovals.size() == 168, "hyperoval count");

    /* PSL3(4) splits them into three orbits of 56; keep a
     * Frobenius-invariant orbit. */
    std::unordered_map<Mask, int> oval_orbit;
    std::vector<std::vector<Mask>> orbits;
    for (Mask o : ovals) {
        if (oval_orbit.count(o))
            continue;
        auto orb = mask_orbit(o, sl, 200);
        int id = static_cast<int>(orbits.size());
        for (Mask m : orb)
            oval_orbit[m] = id;
        orbits.push_back(orb);
    }
    require(orbits.size() == 3, "hyperoval orbit count");
    for (const auto& orb : orbits)
        require(orb.size() == 56, "hyperoval orbit size");

    Permutation frob = frobenius_point_action(f, pts);
    int chosen = -1;
    for (int i = 0; i < 3; ++i)
        if (oval_orbit.at(apply_mask(frob, orbits[i][0])) == i) {
            chosen = i;
            break;
        }
    require(chosen >= 0, "no Frobenius-invariant hyperoval orbit");

    /* S(3,6,22): 21 lines extended by the new point, plus the 56
     * hyperovals of the chosen orbit. */
    std::vector<Mask> blocks;
    for (Mask l : lines)
        blocks.push_back(l | (Mask(1) << 21));
    std::vector<Mask> sorted_orbit = orbits[chosen];
    std::sort(sorted_orbit.begin(), sorted_orbit.end());
    for (Mask o : sorted_orbit)
        blocks.push_back(o);
    Design s22 = make_design(22, 3, blocks, "S(3,6,22)");

    auto extend = [](const Permutation& p) {
        std::vector<std::uint16_t> im(p.images0());
        im.push_back(21);
        return Permutation::from_images(im);
    };
    std::vector<Permutation> gens22;
    for (const auto& g : sl)
        gens22.push_back(extend(g));
    gens22.push_back(extend(frob));
    ElementSet psigma = ElementSet::generate(gens22, 50000, "PSigmaL3_4");
    require(psigma.size() == 40320, "point stabilizer order in Aut(M22)");

    /* A design automorphism moving the new point completes Aut(M22). */
    auto moving = design_map(s22, s22, block_order(s22, 21),
                             [](int v, int w) { return v != 21 || w != 21; }, accept_all());
    require(moving.has_value(), "no design automorphism moves the new point");

    auto autgens = gens22;
    autgens.push_back(*moving);
    ElementSet aut22 = ElementSet::generate(autgens, 1000000, "AutM22");
    require(aut22.size() == 887040, "Aut(M22) order");
    gate_rho(aut22, 4, 67552, 887040, "AutM22");
    write_fixture(dir, "AutM22", aut22);

    auto subs = index2_subgroups(aut22);
    require(subs.size() == 1, "Aut(M22) should have a unique index-2 subgroup");
    require(subs[0].size() == 443520, "M22 order");
    gate_rho(subs[0], 4, 42736, 443520, "M22");
    write_fixture(dir, "M22", subs[0]);
}

/* ---------- the 100-vertex rank-3 graph: J2, Aut(J2) ---------- */

struct Graph100 {
    int n = 100;
    std::array<std::array<std::uint64_t, 2>, 100> adj{};

    bool edge(int u, int v) const { return (adj[u][v >> 6] >> (v & 63)) & 1; }
    void add_edge(int u, int v) {
        adj[u][v >> 6] |= std::uint64_t(1) << (v & 63);
        adj[v][u >> 6] |= std::uint64_t(1) << (u & 63);
    }
    int degree(int u) const {
        return std::popcount(adj[u][0]) + std::popcount(adj[u][1]);
    }
};

bool is_srg_100_36_14_12(const Graph100& g) {
    for (int u = 0; u < 100; ++u)
        if (g.degree(u) != 36)
            return false;
    for (int u = 0; u < 100; ++u)
        for (int v = u + 1; v < 100; ++v) {
            int common = std::popcount(g.adj[u][0] & g.adj[v][0]) +
                         std::popcount(g.adj[u][1] & g.adj[v][1]);
            if (common != (g.edge(u, v) ? 14 : 12))
                return false;
        }
    return true;
}

struct GraphSearch {
    const Graph100& g;
    const std::vector<int>& order;
    const Allow& allow;
    const Accept& accept;
    std::vector<int> sigma;
    std::array<std::uint64_t, 2> used{};
    std::uint64_t nodes = 0, node_cap;
    std::optional<Permutation> result;

    GraphSearch(const Graph100& gr, const std::vector<int>& o, const Allow& al, const Accept& ac,
                std::uint64_t cap)
        : g(gr), order(o), allow(al), accept(ac), sigma(100, -1), node_cap(cap) {}

    bool go(std::size_t pos) {
        if (pos == 100) {
            if (!accept(sigma))
                return false;
            std::vector<std::uint16_t> im(sigma.begin(), sigma.end());
            result = Permutation::from_images(im);
            return true;
        }
        int v = order[pos];
        /* Required adjacency of the image among already placed images. */
        std::array<std::uint64_t, 2> req{};
        for (std::size_t j = 0; j < pos; ++j) {
            int u = order[j];
            if (g.edge(v, u)) {
                int w = sigma[u];
                req[w >> 6] |= std::uint64_t(1) << (w & 63);
            }
        }
        for (int w = 0; w < 100; ++w) {
            if ((used[w >> 6] >> (w & 63)) & 1)
                continue;
            if (!allow(v, w))
                continue;
            if (++nodes > node_cap)
                fail("graph automorphism search exceeded its node budget");
            if ((g.adj[w][0] & used[0]) != req[0] || (g.adj[w][1] & used[1]) != req[1])
                continue;
            sigma[v] = w;
            used[w >> 6] |= std::uint64_t(1) << (w & 63);
            if (go(pos + 1))
                return true;
            sigma[v] = -1;
            used[w >> 6] &= ~(std::uint64_t(1) << (w & 63));
        }
        return false;
    }
};

std::optional<Permutation> graph_aut(const Graph100& g, const std::vector<int>& order,
                                     const Allow& allow, const Accept& accept) {
    GraphSearch s(g, order, allow, accept, 5000000000ull);
    s.go(0);
    return s.result;
}

std::vector<int> graph_order(const Graph100& g) {
    std::vector<int> order{0};
    std::array<std::uint64_t, 2> placed{1, 0};
    while (order.size() < 100) {
        int best = -1, bestdeg = -1;
        for (int v = 0; v < 100; ++v) {
            if ((placed[v >> 6] >> (v & 63)) & 1)
                continue;
            int d = std::popcount(g.adj[v][0] & placed[0]) + std::popcount(g.adj[v][1] & placed[1]);
            if (d > bestdeg) {
                bestdeg = d;
                best = v;
            }
        }
        order.push_back(best);
        placed[best >> 6] |= std::uint64_t(1) << (best & 63);
    }
    return order;
}

void build_j2(const fs::path& dir) {
    Field f = Field::make(9);
    auto theta = [&](unsigned x) { return f.frobenius(x, 1); };

    /* Hermitian form x0 y2^t + x1 y1^t + x2 y0^t on PG(2,9). */
    auto herm = [&](const std::vector<unsigned>& x, const std::vector<unsigned>& y) {
        unsigned s = f.mul(x[0], theta(y[2]));
        s = f.add(s, f.mul(x[1], theta(y[1])));
        return f.add(s, f.mul(x[2], theta(y[0])));
    };

    std::set<std::vector<unsigned>> ptset;
    for (unsigned a = 0; a < 9; ++a)
        for (unsigned b = 0; b < 9; ++b)
            for (unsigned c = 0; c < 9; ++c) {
                std::vector<unsigned> v{a, b, c};
                if (a || b || c) {
                    normalize_projective(f, v);
                    ptset.insert(v);
                }
            }
    std::vector<std::vector<unsigned>> iso, noniso;
    for (const auto& v : ptset)
        (herm(v, v) == 0 ? iso : noniso).push_back(v);
    require(iso.size() == 28 && noniso.size() == 63, "isotropic point split");

    /* SU3(3) generators: two unitriangular root elements, a central
     * root element and the Weyl reflection. */
    auto root = [&](unsigned a) {
        unsigned target = f.neg(f.mul(a, theta(a)));
        for (unsigned b = 0; b < 9; ++b)
            if (f.add(b, theta(b)) == target && (a != 0 || b != 0))
                return std::vector<unsigned>{1, a, b, 0, 1, f.neg(theta(a)), 0, 0, 1};
        fail("no root element for the given parameter");
    };
    std::vector<std::vector<unsigned>> mats{root(1), root(f.primitive_element()), root(0)};
    mats.push_back({0, 0, 1, 0, f.neg(1), 0, 1, 0, 0});

    auto isometric = [&](const std::vector<unsigned>& m) {
        /* m J theta(m)^T == J with J the antidiagonal. */
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                unsigned s = 0;
                for (int k = 0; k < 3; ++k)
                    s = f.add(s, f.mul(m[static_cast<std::size_t>(3 * i + (2 - k))],
                                       theta(m[static_cast<std::size_t>(3 * j + k)])));
                if (s != (i + j == 2 ? 1u : 0u))
                    return false;
            }
        return true;
    };
    for (const auto& m : mats)
        require(isometric(m), "generator is not an isometry of the hermitian form");

    std::vector<Permutation> g28, g63;
    for (const auto& m : mats) {
        g28.push_back(matrix_point_action(f, m, iso));
        g63.push_back(matrix_point_action(f, m, noniso));
    }
    ElementSet u3 = ElementSet::generate(g28, 7000, "U3_3");
    require(u3.size() == 6048, "U3(3) order");

    /* L2(7) subgroups arise from (2,3,7) generator pairs. U3(3) has
     * two conjugacy classes of them and only one gives the rank-3
     * degree-36 coset action whose orbitals assemble into the
     * Hall-Janko graph, so distinct subgroups are tried in turn.
     * Within one attempt, orbitals pair up under transposition; each
     * pair (or a self-paired orbital alone) is one symmetric edge-set
     * unit, and unions of units are screened against the strongly
     * regular parameters (100, 36, 14, 12). */
    std::vector<std::uint64_t> invs, trips;
    for (std::uint64_t i = 0; i < u3.size(); ++i) {
        Nat o = u3.element(i).order();
        if (o == 2)
            invs.push_back(i);
        else if (o == 3)
            trips.push_back(i);
    }

    struct Unit {
        std::vector<int> ids;
        std::uint64_t size;
    };
    std::vector<ElementSet> tried;
    std::optional<Graph100> graph;
    std::vector<Permutation> g100;

    for (std::size_t a = 0; a < invs.size() && !graph; ++a)
        for (std::size_t b = 0; b < trips.size() && !graph; ++b) {
            Permutation x = u3.element(invs[a]), y = u3.element(trips[b]);
            if ((x * y).order() != 7)
                continue;
            std::optional<ElementSet> l27;
            try {
                ElementSet h = ElementSet::generate({x, y}, 200);
                if (h.size() == 168)
                    l27 = std::move(h);
            } catch (const cap_exceeded&) {
            }
            if (!l27)
                continue;
            bool dup = false;
            for (const auto& s : tried)
                if (s.contains(x) && s.contains(y)) {
                    dup = true;
                    break;
                }
            if (dup)
                continue;
            tried.push_back(std::move(*l27));
            const ElementSet& sub = tried.back();

            auto reps = coset_reps(sub, u3.generators(), 36);
            std::vector<Permutation> cand;
            for (std::size_t i = 0; i < g28.size(); ++i) {
                Permutation pc = coset_image(sub, reps, g28[i]);
                std::vector<std::uint16_t> im(100);
                im[0] = 0;
                for (int t = 0; t < 36; ++t)
                    im[1 + t] =
                        static_cast<std::uint16_t>(1 + pc.apply0(static_cast<std::uint16_t>(t)));
                for (int t = 0; t < 63; ++t)
                    im[37 + t] = static_cast<std::uint16_t>(
                        37 + g63[i].apply0(static_cast<std::uint16_t>(t)));
                cand.push_back(Permutation::from_images(im));
            }

            /* Orbitals of the intransitive action on 100 = 1+36+63. */
            std::vector<int> comp(10000, -1);
            std::vector<std::uint64_t> csize;
            std::vector<int> cfirst;
            for (int p = 0; p < 10000; ++p) {
                if (p / 100 == p % 100 || comp[p] >= 0)
                    continue;
                int id = static_cast<int>(csize.size());
                std::vector<int> stack{p};
                comp[p] = id;
                std::uint64_t size = 0;
                while (!stack.empty()) {
                    int q = stack.back();
                    stack.pop_back();
                    ++size;
                    int qu = q / 100, qv = q % 100;
                    for (const auto& g : cand) {
                        int r = g.apply0(static_cast<std::uint16_t>(qu)) * 100 +
                                g.apply0(static_cast<std::uint16_t>(qv));
                        if (comp[r] < 0) {
                            comp[r] = id;
                            stack.push_back(r);
                        }
                    }
                }
                csize.push_back(size);
                cfirst.push_back(p);
            }

            auto zone = [](int v) { return v == 0 ? 0 : (v <= 36 ? 1 : 2); };
            std::vector<Unit> u11, u12, u22;
            for (std::size_t id = 0; id < csize.size(); ++id) {
                int p = cfirst[id];
                int zu = zone(p / 100), zv = zone(p % 100);
                int partner = comp[(p % 100) * 100 + p / 100];
                int iid = static_cast<int>(id);
                if (zu == 1 && zv == 2) {
                    u12.push_back({{iid}, csize[id]});
                } else if ((zu == 1 && zv == 1) || (zu == 2 && zv == 2)) {
                    auto& units = zu == 1 ? u11 : u22;
                    if (partner == iid)
                        units.push_back({{iid}, csize[id]});
                    else if (iid < partner)
                        units.push_back({{iid, partner}, csize[id] * 2});
                }
            }
            require(u11.size() <= 12 && u12.size() <= 12 && u22.size() <= 12,
                    "orbital count too large");

            auto unions_summing = [](const std::vector<Unit>& units, std::uint64_t target) {
                std::vector<std::vector<int>> out;
                for (Mask m = 0; m < (Mask(1) << units.size()); ++m) {
                    std::uint64_t s = 0;
                    std::vector<int> chosen;
                    for (std::size_t i = 0; i < units.size(); ++i)
                        if (m & (Mask(1) << i)) {
                            s += units[i].size;
                            chosen.insert(chosen.end(), units[i].ids.begin(),
                                          units[i].ids.end());
                        }
                    if (s == target)
                        out.push_back(chosen);
                }
                return out;
            };
            auto c11 = unions_summing(u11, 36 * 14);
            auto c12 = unions_summing(u12, 36 * 21);
            auto c22 = unions_summing(u22, 63 * 24);

            for (const auto& ca : c11) {
                for (const auto& cb : c12) {
                    for (const auto& cc : c22) {
                        Graph100 g;
                        for (int v = 1; v <= 36; ++v)
                            g.add_edge(0, v);
                        std::set<int> chosen(ca.begin(), ca.end());
                        chosen.insert(cb.begin(), cb.end());
                        chosen.insert(cc.begin(), cc.end());
                        for (int p = 0; p < 10000; ++p)
                            if (comp[p] >= 0 && chosen.count(comp[p]) && p / 100 < p % 100)
                                g.add_edge(p / 100, p % 100);
                        if (is_srg_100_36_14_12(g)) {
                            graph = g;
                            break;
                        }
                    }
                    if (graph)
                        break;
                }
                if (graph)
                    break;
            }
            if (graph)
                g100 = std::move(cand);
        }
    require(graph.has_value(), "no L2(7) coset action yields the Hall-Janko graph");
    std::printf("[j2] Hall-Janko graph found after trying %zu L2(7) subgroups\n", tried.size());

    /* A graph automorphism moving the fixed vertex extends U3(3) to
     * J2 or straight to J2:2. */
    auto order = graph_order(*graph);
    auto mover = graph_aut(*graph, order, [](int v, int w) { return v != 0 || w != 0; },
                           accept_all());
    require(mover.has_value(), "no graph automorphism moves vertex 0");

    auto jgens = g100;
    jgens.push_back(*mover);
    ElementSet first = ElementSet::generate(jgens, 1300000, "J2");
    require(first.size() == 604800 || first.size() == 1209600, "closure order on 100 vertices");

    std::optional<ElementSet> j2, aut;
    if (first.size() == 604800) {
        j2 = std::move(first);
        auto outerouter =
            graph_aut(*graph, order, allow_all(), [&](const std::vector<int>& sig) {
                std::vector<std::uint16_t> im(sig.begin(), sig.end());
                return !j2->contains(Permutation::from_images(im));
            });
        require(outerouter.has_value(), "no graph automorphism outside J2");
        auto ag = jgens;
        ag.push_back(*outerouter);
        aut = ElementSet::generate(ag, 1300000, "AutJ2");
        require(aut->size() == 1209600, "Aut(J2) order");
    } else {
        aut = std::move(first);
        auto subs = index2_subgroups(*aut);
        require(subs.size() == 1, "Aut(J2) should have a unique index-2 subgroup");
        require(subs[0].size() == 604800, "J2 order");
        j2 = std::move(subs[0]);
    }
    gate_rho(*j2, 4, 9136, 604800, "J2");
    gate_rho(*aut, 4, 73936, 1209600, "AutJ2");
    write_fixture(dir, "J2", *j2);
    write_fixture(dir, "AutJ2", *aut);
}

/* ---------- GF(11) matrices: J1 ---------- */

constexpr unsigned P11 = 11;
using M7 = std::array<std::uint8_t, 49>;

std::uint8_t addm(std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>((a + b) % P11); }
std::uint8_t subm(std::uint8_t a, std::uint8_t b) {
    return static_cast<std::uint8_t>((a + P11 - b) % P11);
}
std::uint8_t mulm(std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>(a * b % P11); }
std::uint8_t powm(std::uint8_t a, unsigned e) {
    std::uint8_t r = 1;
    while (e--)
        r = mulm(r, a);
    return r;
}
constexpr std::array<std::uint8_t, 11> INV11{0, 1, 6, 4, 3, 9, 2, 8, 7, 5, 10};

M7 m7id() {
    M7 m{};
    for (int i = 0; i < 7; ++i)
        m[static_cast<std::size_t>(8 * i)] = 1;
    return m;
}

M7 m7mul(const M7& a, const M7& b) {
    M7 r{};
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k) {
            std::uint8_t aik = a[static_cast<std::size_t>(7 * i + k)];
            if (!aik)
                continue;
            for (int j = 0; j < 7; ++j)
                r[static_cast<std::size_t>(7 * i + j)] =
                    addm(r[static_cast<std::size_t>(7 * i + j)],
                         mulm(aik, b[static_cast<std::size_t>(7 * k + j)]));
        }
    return r;
}

M7 m7transpose(const M7& a) {
    M7 r{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            r[static_cast<std::size_t>(7 * j + i)] = a[static_cast<std::size_t>(7 * i + j)];
    return r;
}

struct M7Hash {
    std::size_t operator()(const M7& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint8_t b : m) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using M7Set = std::unordered_set<M7, M7Hash>;

/* Closure under products; nullopt once the cap is exceeded. */
std::optional<std::vector<M7>> m7_closure(const std::vector<M7>& gens, std::size_t cap) {
    std::vector<M7> arena{m7id()};
    M7Set seen{arena[0]};
    for (std::size_t i = 0; i < arena.size(); ++i)
        for (const auto& g : gens) {
            M7 m = m7mul(arena[i], g);
            if (seen.insert(m).second) {
                arena.push_back(m);
                if (arena.size() > cap)
                    return std::nullopt;
            }
        }
    return arena;
}

/* Row reduction over GF(11); returns the rank. */
int rref11(std::vector<std::uint8_t>& a, int rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[static_cast<std::size_t>(r * cols + c)]) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        for (int j = 0; j < cols; ++j)
            std::swap(a[static_cast<std::size_t>(rank * cols + j)],
                      a[static_cast<std::size_t>(pivot * cols + j)]);
        std::uint8_t inv = INV11[a[static_cast<std::size_t>(rank * cols + c)]];
        for (int j = 0; j < cols; ++j)
            a[static_cast<std::size_t>(rank * cols + j)] =
                mulm(a[static_cast<std::size_t>(rank * cols + j)], inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank)
                continue;
            std::uint8_t f = a[static_cast<std::size_t>(r * cols + c)];
            if (!f)
                continue;
            for (int j = 0; j < cols; ++j)
                a[static_cast<std::size_t>(r * cols + j)] =
                    subm(a[static_cast<std::size_t>(r * cols + j)],
                         mulm(f, a[static_cast<std::size_t>(rank * cols + j)]));
        }
        ++rank;
    }
    return rank;
}

M7 m7inv(const M7& m) {
    std::vector<std::uint8_t> a(7 * 14, 0);
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j)
            a[static_cast<std::size_t>(i * 14 + j)] = m[static_cast<std::size_t>(7 * i + j)];
        a[static_cast<std::size_t>(i * 14 + 7 + i)] = 1;
    }
    require(rref11(a, 7, 14) == 7, "singular matrix");
    M7 r{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            r[static_cast<std::size_t>(7 * i + j)] = a[static_cast<std::size_t>(i * 14 + 7 + j)];
    return r;
}

/* Order capped at `cap`; 0 when it exceeds the cap. */
unsigned m7order(const M7& m, unsigned cap) {
    M7 x = m;
    M7 id = m7id();
    for (unsigned e = 1; e <= cap; ++e) {
        if (x == id)
            return e;
        x = m7mul(x, m);
    }
    return 0;
}

void build_j1(const fs::path& dir) {
    /* The 7-dimensional module: degree-6 forms in x, y as a module for
     * SL2(11), basis x^6, x^5 y, ..., y^6. */
    std::array<std::array<std::uint8_t, 7>, 7> binom7{};
    for (int n = 0; n < 7; ++n) {
        binom7[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            binom7[n][k] = addm(binom7[n - 1][k - 1], k <= n - 1 ? binom7[n - 1][k] : 0);
    }
    auto sym6 = [&](std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t d) {
        M7 m{};
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; j <= 6; ++j) {
                std::uint8_t s = 0;
                for (int t = std::max(0, j - i); t <= std::min(j, 6 - i); ++t) {
                    std::uint8_t term = mulm(binom7[6 - i][t], binom7[i][j - t]);
                    term = mulm(term, powm(a, static_cast<unsigned>(6 - i - t)));
                    term = mulm(term, powm(c, static_cast<unsigned>(t)));
                    term = mulm(term, powm(b, static_cast<unsigned>(i - j + t)));
                    term = mulm(term, powm(d, static_cast<unsigned>(j - t)));
                    s = addm(s, term);
                }
                m[static_cast<std::size_t>(7 * i + j)] = s;
            }
        return m;
    };
    M7 la = sym6(1, 1, 0, 1);
    M7 lb = sym6(0, 10, 1, 0);

    auto closure = m7_closure({la, lb}, 700);
    require(closure.has_value() && closure->size() == 660, "PSL2(11) image order");
    std::vector<M7> lset = *closure;

    /* The invariant symmetric bilinear form, unique up to scalar. */
    auto sym_index = [](int k, int l) { // k <= l
        return k * 7 + l - k * (k + 1) / 2;
    };
    std::vector<std::uint8_t> sys;
    int rows = 0;
    for (const M7* mp : {&la, &lb}) {
        const M7& m = *mp;
        for (int i = 0; i < 7; ++i)
            for (int j = i; j < 7; ++j) {
                std::vector<std::uint8_t> row(28, 0);
                for (int k = 0; k < 7; ++k)
                    for (int l = k; l < 7; ++l) {
                        std::uint8_t c = mulm(m[static_cast<std::size_t>(7 * i + k)],
                                              m[static_cast<std::size_t>(7 * j + l)]);
                        if (k < l)
                            c = addm(c, mulm(m[static_cast<std::size_t>(7 * i + l)],
                                             m[static_cast<std::size_t>(7 * j + k)]));
                        if (k == i && l == j)
                            c = subm(c, 1);
                        row[static_cast<std::size_t>(sym_index(k, l))] = c;
                    }
                sys.insert(sys.end(), row.begin(), row.end());
                ++rows;
            }
    }
    int rank = rref11(sys, rows, 28);
    require(rank == 27, "invariant form space is not one-dimensional");
    /* Kernel vector: free column gets 1, pivots solve backwards. */
    std::vector<std::uint8_t> bvec(28, 0);
    {
        std::vector<int> pivot_col(static_cast<std::size_t>(rank));
        std::vector<bool> is_pivot(28, false);
        int r = 0;
        for (int c = 0; c < 28 && r < rank; ++c)
            if (sys[static_cast<std::size_t>(r * 28 + c)] == 1) {
                bool clean = true;
                for (int rr = 0; rr < rows && clean; ++rr)
                    if (rr != r && sys[static_cast<std::size_t>(rr * 28 + c)])
                        clean = false;
                if (clean) {
                    pivot_col[static_cast<std::size_t>(r)] = c;
                    is_pivot[static_cast<std::size_t>(c)] = true;
                    ++r;
                }
            }
        int free_col = -1;
        for (int c = 0; c < 28; ++c)
            if (!is_pivot[static_cast<std::size_t>(c)])
                free_col = c;
        require(free_col >= 0, "no free column in the form system");
        bvec[static_cast<std::size_t>(free_col)] = 1;
        for (int rr = 0; rr < rank; ++rr)
            bvec[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(rr)])] =
                subm(0, sys[static_cast<std::size_t>(rr * 28 + free_col)]);
    }
    M7 bform{};
    for (int k = 0; k < 7; ++k)
        for (int l = k; l < 7; ++l) {
            std::uint8_t v = bvec[static_cast<std::size_t>(sym_index(k, l))];
            bform[static_cast<std::size_t>(7 * k + l)] = v;
            bform[static_cast<std::size_t>(7 * l + k)] = v;
        }
    for (const M7* mp : {&la, &lb})
        require(m7mul(m7mul(*mp, bform), m7transpose(*mp)) == bform, "form is not invariant");

    /* A Klein four group inside the image and its weight spaces. */
    M7 id = m7id();
    M7 u{}, v{};
    bool found_u = false, found_v = false;
    for (const auto& m : lset) {
        if (m == id || m7mul(m, m) != id)
            continue;
        if (!found_u) {
            u = m;
            found_u = true;
            continue;
        }
        if (m != u && m7mul(u, m) == m7mul(m, u)) {
            v = m;
            found_v = true;
            break;
        }
    }
    require(found_u && found_v, "no Klein four group in the image");

    std::vector<std::vector<std::uint8_t>> basis_rows;
    std::vector<int> block_dim;
    for (std::uint8_t s : {std::uint8_t(1), std::uint8_t(10)})
        for (std::uint8_t t : {std::uint8_t(1), std::uint8_t(10)}) {
            M7 pu{}, pv{};
            for (int i = 0; i < 49; ++i) {
                pu[static_cast<std::size_t>(i)] = mulm(s, u[static_cast<std::size_t>(i)]);
                pv[static_cast<std::size_t>(i)] = mulm(t, v[static_cast<std::size_t>(i)]);
            }
            for (int i = 0; i < 7; ++i) {
                pu[static_cast<std::size_t>(8 * i)] = addm(pu[static_cast<std::size_t>(8 * i)], 1);
                pv[static_cast<std::size_t>(8 * i)] = addm(pv[static_cast<std::size_t>(8 * i)], 1);
            }
            M7 proj = m7mul(pu, pv);
            std::vector<std::uint8_t> rowsp(proj.begin(), proj.end());
            int dim = rref11(rowsp, 7, 7);
            block_dim.push_back(dim);
            for (int r = 0; r < dim; ++r)
                basis_rows.emplace_back(rowsp.begin() + r * 7, rowsp.begin() + (r + 1) * 7);
        }
    require(basis_rows.size() == 7, "weight spaces do not fill the module");
    {
        auto dims = block_dim;
        std::sort(dims.begin(), dims.end());
        require(dims == std::vector<int>{1, 2, 2, 2}, "unexpected weight space dimensions");
    }

    M7 tmat{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            tmat[static_cast<std::size_t>(7 * i + j)] = basis_rows[static_cast<std::size_t>(i)]
                                                                  [static_cast<std::size_t>(j)];
    M7 tinv = m7inv(tmat);
    auto conj = [&](const M7& m) { return m7mul(m7mul(tmat, m), tinv); };
    M7 la2 = conj(la), lb2 = conj(lb), u2 = conj(u), v2 = conj(v);
    M7 b2 = m7mul(m7mul(tmat, bform), m7transpose(tmat));

    std::array<int, 5> offset{};
    for (int b = 0; b < 4; ++b)
        offset[static_cast<std::size_t>(b + 1)] =
            offset[static_cast<std::size_t>(b)] + block_dim[static_cast<std::size_t>(b)];
    auto block_of = [&](int i) {
        for (int b = 0; b < 4; ++b)
            if (i < offset[static_cast<std::size_t>(b + 1)])
                return b;
        return 3;
    };
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            std::uint8_t uv = u2[static_cast<std::size_t>(7 * i + j)];
            std::uint8_t vv = v2[static_cast<std::size_t>(7 * i + j)];
            if (i == j)
                require((uv == 1 || uv == 10) && (vv == 1 || vv == 10),
                        "four group is not diagonal in the weight basis");
            else
                require(uv == 0 && vv == 0, "four group is not diagonal in the weight basis");
            if (block_of(i) != block_of(j))
                require(b2[static_cast<std::size_t>(7 * i + j)] == 0,
                        "form is not block diagonal in the weight basis");
        }

    std::vector<M7> l2arena;
    M7Set l2set;
    for (const auto& m : lset) {
        M7 c = conj(m);
        l2arena.push_back(c);
        l2set.insert(c);
    }

    /* Candidate new involutions: block-diagonal isometries of the form
     * that square to the identity, filtered by determinant, by the
     * trace of the known involution class and by element orders of a
     * few words. The first candidate whose closure with the image has
     * order 175560 is kept. */
    struct Cand {
        std::array<std::uint8_t, 4> m;
        std::uint8_t det, tr;
    };
    std::vector<std::vector<Cand>> cands(4);
    for (int b = 0; b < 4; ++b) {
        int d = block_dim[static_cast<std::size_t>(b)];
        int o = offset[static_cast<std::size_t>(b)];
        if (d == 1) {
            for (std::uint8_t x : {std::uint8_t(1), std::uint8_t(10)})
                cands[static_cast<std::size_t>(b)].push_back({{x, 0, 0, 0}, x, x});
        } else {
            std::array<std::uint8_t, 4> bb{
                b2[static_cast<std::size_t>(7 * o + o)], b2[static_cast<std::size_t>(7 * o + o + 1)],
                b2[static_cast<std::size_t>(7 * (o + 1) + o)],
                b2[static_cast<std::size_t>(7 * (o + 1) + o + 1)]};
            for (unsigned code = 0; code < 11 * 11 * 11 * 11; ++code) {
                std::array<std::uint8_t, 4> m{
                    static_cast<std::uint8_t>(code % 11), static_cast<std::uint8_t>(code / 11 % 11),
                    static_cast<std::uint8_t>(code / 121 % 11),
                    static_cast<std::uint8_t>(code / 1331 % 11)};
                /* m^2 == I */
                if (addm(mulm(m[0], m[0]), mulm(m[1], m[2])) != 1 ||
                    addm(mulm(m[3], m[3]), mulm(m[1], m[2])) != 1)
                    continue;
                if (mulm(m[1], addm(m[0], m[3])) != 0 || mulm(m[2], addm(m[0], m[3])) != 0)
                    continue;
                /* m bb m^T == bb */
                std::array<std::uint8_t, 4> mb{
                    addm(mulm(m[0], bb[0]), mulm(m[1], bb[2])),
                    addm(mulm(m[0], bb[1]), mulm(m[1], bb[3])),
                    addm(mulm(m[2], bb[0]), mulm(m[3], bb[2])),
                    addm(mulm(m[2], bb[1]), mulm(m[3], bb[3]))};
                std::array<std::uint8_t, 4> mbmt{
                    addm(mulm(mb[0], m[0]), mulm(mb[1], m[1])),
                    addm(mulm(mb[0], m[2]), mulm(mb[1], m[3])),
                    addm(mulm(mb[2], m[0]), mulm(mb[3], m[1])),
                    addm(mulm(mb[2], m[2]), mulm(mb[3], m[3]))};
                if (mbmt != bb)
                    continue;
                std::uint8_t det = subm(mulm(m[0], m[3]), mulm(m[1], m[2]));
                cands[static_cast<std::size_t>(b)].push_back({m, det, addm(m[0], m[3])});
            }
        }
    }

    std::uint8_t target_trace = 0;
    for (int i = 0; i < 7; ++i)
        target_trace = addm(target_trace, u2[static_cast<std::size_t>(8 * i)]);

    std::array<bool, 20> j1_order{};
    for (int o : {1, 2, 3, 5, 6, 7, 10, 11, 15, 19})
        j1_order[static_cast<std::size_t>(o)] = true;
    auto order_ok = [&](const M7& m) {
        unsigned o = m7order(m, 19);
        return o != 0 && j1_order[o];
    };

    std::optional<std::vector<M7>> j1arena;
    M7 tfound{};
    std::uint64_t tried = 0;
    std::array<std::size_t, 4> pick{};
    std::function<void(int, std::uint8_t, std::uint8_t)> scan = [&](int b, std::uint8_t det,
                                                                    std::uint8_t tr) {
        if (j1arena)
            return;
        if (b == 4) {
            if (det != 1 || tr != target_trace)
                return;
            M7 t{};
            for (int blk = 0; blk < 4; ++blk) {
                int d = block_dim[static_cast<std::size_t>(blk)];
                int o = offset[static_cast<std::size_t>(blk)];
                const auto& m = cands[static_cast<std::size_t>(blk)][pick[static_cast<std::size_t>(blk)]].m;
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        t[static_cast<std::size_t>(7 * (o + i) + o + j)] =
                            m[static_cast<std::size_t>(2 * i + j)];
            }
            if (l2set.count(t))
                return;
            if (!order_ok(m7mul(t, la2)) || !order_ok(m7mul(t, lb2)) ||
                !order_ok(m7mul(m7mul(t, la2), lb2)) || !order_ok(m7mul(la2, t)))
                return;
            ++tried;
            auto cl = m7_closure({la2, lb2, t}, 176000);
            if (cl && cl->size() == 175560) {
                tfound = t;
                j1arena = std::move(cl);
            }
            return;
        }
        for (std::size_t i = 0; i < cands[static_cast<std::size_t>(b)].size(); ++i) {
            pick[static_cast<std::size_t>(b)] = i;
            const auto& c = cands[static_cast<std::size_t>(b)][i];
            scan(b + 1, mulm(det, c.det), addm(tr, c.tr));
            if (j1arena)
                return;
        }
    };
    scan(0, 1, 0);
    require(j1arena.has_value(), "no block-diagonal involution closes to order 175560");
    std::printf("[j1] matrix group closed at 175560 after %llu full closures\n",
                static_cast<unsigned long long>(tried));

    /* Permutation action on the 266 cosets of the PSL2(11) image. */
    M7Set jset(j1arena->begin(), j1arena->end());
    std::vector<M7> jgens{la2, lb2, tfound};
    std::vector<M7> reps{id}, repinv{id};
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (const auto& g : jgens) {
            M7 m = m7mul(reps[i], g);
            bool known = false;
            for (const auto& ri : repinv)
                if (l2set.count(m7mul(m, ri))) {
                    known = true;
                    break;
                }
            if (!known) {
                reps.push_back(m);
                repinv.push_back(m7inv(m));
            }
        }
    require(reps.size() == 266, "coset count of the point stabilizer");

    std::vector<Permutation> p266;
    for (const auto& g : jgens) {
        std::vector<std::uint16_t> im(266, 0xffff);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            M7 m = m7mul(reps[i], g);
            for (std::size_t j = 0; j < reps.size(); ++j)
                if (l2set.count(m7mul(m, repinv[j]))) {
                    im[i] = static_cast<std::uint16_t>(j);
                    break;
                }
            require(im[i] != 0xffff, "coset image not found");
        }
        p266.push_back(Permutation::from_images(im));
    }
    ElementSet j1 = ElementSet::generate(p266, 200000, "J1");
    require(j1.size() == 175560, "J1 order on 266 points");
    gate_orders(j1, {1, 2, 3, 5, 6, 7, 10, 11, 15, 19}, "J1");
    gate_rho(j1, 4, 1464, 175560, "J1");
    write_fixture(dir, "J1", j1);
}

/* ---------- manifest ---------- */

struct ManifestRow {
    const char* label;
    bool shipped;
    const char* order;
};

constexpr ManifestRow manifest_rows[] = {
    {"A6", true, "360"},
    {"M10", true, "720"},
    {"AutA6", true, "1440"},
    {"M11", true, "7920"},
    {"M12", true, "95040"},
    {"AutM12", true, "190080"},
    {"PSL3_4", true, "20160"},
    {"M22", true, "443520"},
    {"AutM22", true, "887040"},
    {"J1", true, "175560"},
    {"J2", true, "604800"},
    {"AutJ2", true, "1209600"},
    {"M23", false, "10200960"},
    {"M24", false, "244823040"},
    {"HS", false, "44352000"},
    {"AutHS", false, "88704000"},
    {"J3", false, "50232960"},
    {"AutJ3", false, "100465920"},
    {"McL", false, "898128000"},
    {"AutMcL", false, "1796256000"},
    {"He", false, "4030387200"},
    {"AutHe", false, "8060774400"},
    {"Ru", false, "145926144000"},
    {"Suz", false, "448345497600"},
    {"AutSuz", false, "896690995200"},
    {"ON", false, "460815505920"},
    {"AutON", false, "921631011840"},
    {"Co3", false, "495766656000"},
    {"Co2", false, "42305421312000"},
    {"Co1", false, "4157776806543360000"},
    {"Fi22", false, "64561751654400"},
    {"AutFi22", false, "129123503308800"},
    {"Fi23", false, "4089470473293004800"},
    {"Fi24", false, "1255205709190661721292800"},
    {"HN", false, "273030912000000"},
    {"Ly", false, "51765179004000000"},
    {"Th", false, "90745943887872000"},
    {"J4", false, "86775571046077562880"},
    {"B", false, "4154781481226426191177580544000000"},
    {"M", false, "808017424794512875886459904961710757005754368000000000"},
};

void write_manifest(const fs::path& dir) {
    fs::path p = dir / "manifest";
    std::ofstream out(p);
    require(static_cast<bool>(out), "cannot write " + p.string());
    out << "# fixture manifest: label, path, expected order (- = not shipped)\n";
    for (const auto& row : manifest_rows) {
        out << row.label << ", " << (row.shipped ? std::string(row.label) + ".gens" : "-") << ", "
            << row.order << "\n";
    }
    require(static_cast<bool>(out), "write failed for " + p.string());
    std::printf("[manifest] %zu entries\n", std::size(manifest_rows));
}

void final_check(const fs::path& dir) {
    FixtureSet fx(dir.string());
    for (const auto& row : manifest_rows) {
        if (!row.shipped)
            continue;
        ElementSet s = fx.load(row.label, 1500000);
        std::printf("[check] %-8s order %llu ok\n", row.label,
                    static_cast<unsigned long long>(s.size()));
    }
}

} // namespace

int main(int argc, char** argv) {
    fs::path dir = "fixtures";
    std::set<std::string> stages;
    if (argc > 1)
        dir = argv[1];
    for (int i = 2; i < argc; ++i)
        stages.insert(argv[i]);
    auto on = [&](const char* s) { return stages.empty() || stages.count(s) > 0; };

    try {
        fs::create_directories(dir);
        if (on("trio"))
            build_trio(dir);
        if (on("m12"))
            build_m12_chain(dir);
        if (on("m22"))
            build_m22_chain(dir);
        if (on("j2"))
            build_j2(dir);
        if (on("j1"))
            build_j1(dir);
        if (on("manifest"))
            write_manifest(dir);
        if (on("check"))
            final_check(dir);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 1;
    }
    return 0;
}
