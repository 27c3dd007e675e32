#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordspec/numbers.hpp"
#include "ordspec/perm.hpp"
#include "ordspec/permset.hpp"
#include "ordspec/spectrum.hpp"

namespace ordspec {

enum class Family { Sym, Alt, Cyclic, PSL2, PGL2, PSigmaL2, PGammaL2, Sz };

/* One member of a named family: S(n), A(n), C(n), PSL(2,q), PGL(2,q),
 * PSigmaL(2,q), PGammaL(2,q), Sz(q). make() validates the parameter
 * and fills in the derived attributes. */
struct FamilySpec {
    Family family = Family::Cyclic;
    unsigned parameter = 0; // n for S/A/C, q for the rest
    unsigned p = 0;         // field characteristic (matrix families only)
    unsigned m = 0;         // field degree over GF(p)
    unsigned r = 0;         // 2^a when q = 2^(2a+1) (Sz only)

    static FamilySpec make(Family family, unsigned parameter);
};

/* "S", "A", "C", "PSL", "PGL", "PSigmaL", "PGammaL", "Sz" */
const char* family_atom_name(Family family);
bool family_from_atom(const std::string& name, Family& out);

/* Expression-syntax name, e.g. "PSL(2,9)" or "S(5)". */
std::string family_display(const FamilySpec& spec);

/* Classical order formula for the member. */
Nat family_order(const FamilySpec& spec);

struct GeneratorSet {
    unsigned degree = 0;
    std::vector<Permutation> generators;
    std::string label;
    Nat order; // classical order, used to gate the closure
};

/* Generators: natural action for S/A, one n-cycle for C, the projective
 * line for the PSL(2) series (with the Frobenius permutation adjoined
 * for PSigmaL/PGammaL), the ovoid on q^2+1 points for Sz. */
GeneratorSet family_generators(const FamilySpec& spec);

/* Closure of family_generators; throws if the generated order differs
 * from the classical formula. */
ElementSet family_group(const FamilySpec& spec, std::uint64_t cap = default_element_cap);

/* Closed-form spectra assembled from the class partitions, no
 * enumeration involved. Valid beyond the constructor range (the only
 * limit is divisor enumeration of numbers near q). */
OrderSpectrum psl2_spectrum(unsigned long q);      // odd prime power q >= 3
OrderSpectrum psl2_even_spectrum(unsigned long q); // q = 2^a, a >= 1
OrderSpectrum pgl2_spectrum(unsigned long q);      // odd prime power q >= 3
OrderSpectrum sz_spectrum(unsigned long q);        // q = 2^(2a+1), a >= 1

/* The 2-part of Sz(q): (order-2 count, order-4 count). Two candidate
 * splits of the q^2-1 nonidentity elements per Sylow 2-subgroup are in
 * circulation; both total (q^2-1)(q^2+1) across the q^2+1 Sylows, and
 * enumeration of Sz(8) decides which is real. sz_spectrum uses the
 * first (one Suzuki 2-group carries q-1 involutions). */
struct SzTwoPart {
    Nat order2;
    Nat order4;
};
SzTwoPart sz_two_part(unsigned long q);     // ((q-1)(q^2+1), q(q-1)(q^2+1))
SzTwoPart sz_two_part_alt(unsigned long q); // (q(q^2+1), (q^2-q-1)(q^2+1))

/* rho_k by formula, with the documented parameter ranges. */
Rational psl2_rho(unsigned long q, const Nat& k);      // q >= 5 odd prime power
Rational psl2_even_rho(unsigned long q, const Nat& k); // q = 2^a, a >= 2
Rational pgl2_rho(unsigned long q, const Nat& k);      // q >= 3 odd prime power
Rational suzuki_rho(unsigned long q, const Nat& k);    // q = 2^(2a+1), a >= 1

/* Spectra of S_n and A_n from cycle types (partition enumeration;
 * n <= 64 keeps that feasible). */
OrderSpectrum sn_spectrum(unsigned n);
OrderSpectrum an_spectrum(unsigned n);

/* rho*_p of S_n resp. A_n as closed sums over products of p-cycles:
 *   S_n: sum_{m=1..floor(n/p)} 1/(p^m m! (n-mp)!)
 *   A_n: twice the sum, restricted to even permutations (all m for odd
 *        p, even m only for p = 2). */
Rational sym_rho_star_p(unsigned n, unsigned p);
Rational alt_rho_star_p(unsigned n, unsigned p);

/* rho*_{pq}(S_{pq}) for primes p > q: 1/(pq) plus the double sum over
 * cycle types with x p-cycles and y q-cycles. */
Rational spq_rho_star(unsigned p, unsigned q);

enum class TwistVariant { Gamma, Sigma };

/* rho*_{d*qdeg} of PGammaL_2(p^qdeg) (Gamma) resp. PSigmaL_2(p^qdeg)
 * (Sigma) as the convex combination
 *
 *   (1/qdeg) rho*_{d*qdeg}(big) + ((qdeg-1)/qdeg) rho*_d(small)
 *
 * with big = PGL_2(p^qdeg), small = PGL_2(p) for Gamma and the PSL_2
 * counterparts for Sigma. Requires p and qdeg prime, qdeg not dividing
 * (p-1)p(p+1), and d dividing p-1, p, or p+1. star=false evaluates the
 * order-dividing variant of the same combination. */
Rational psigmal2_coset_rho(unsigned p, unsigned qdeg, unsigned d, TwistVariant variant,
                            bool star = true);

} // namespace ordspec
