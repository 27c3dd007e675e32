#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ordspec/families.hpp"
#include "ordspec/fixtures.hpp"
#include "ordspec/permset.hpp"
#include "ordspec/spectrum.hpp"

namespace ordspec {

/* Group expressions:
 *
 *   expr := term (`*` term)*
 *   term := atom (`^` INT)?
 *   atom := NAME `(` args `)` | `wr2` `(` expr `)` | `load` `(` STRING `)` | `(` expr `)`
 *
 * `*` is direct product, `^` direct power (binding tighter than `*`),
 * wr2 the wreath product with C2. Atoms: S(n), A(n), C(n), PSL(2,q),
 * PGL(2,q), PSigmaL(2,q), PGammaL(2,q), Sz(q), load("name"). */
struct GroupExpr;
using ExprPtr = std::shared_ptr<const GroupExpr>;

struct GroupExpr {
    enum class Kind { FamilyAtom, Load, Product, Power, Wreath };
    Kind kind = Kind::FamilyAtom;
    FamilySpec family;            // FamilyAtom
    std::string load_name;        // Load
    std::vector<ExprPtr> factors; // Product (two or more)
    ExprPtr child;                // Power, Wreath
    unsigned long exponent = 0;   // Power
};

/* Errors carry the 1-based position in the input. */
ExprPtr parse_expr(const std::string& text);

std::string print_expr(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

struct EvalConfig {
    std::uint64_t cap = default_element_cap;
    unsigned threads = 1;
    const FixtureSet* fixtures = nullptr; // required by load() atoms
};

/* Spectrum-level evaluation: closed forms for S/A/C/PSL/PGL/Sz atoms,
 * lcm-convolution for `*` and `^`, the wreath combinator for wr2.
 * PSigmaL/PGammaL/load atoms have no closed form and fall back to
 * concrete enumeration. */
OrderSpectrum evaluate_spectrum(const ExprPtr& e, const EvalConfig& config);

/* Concrete permutation realization: factors act on disjoint points,
 * wr2 doubles the points and adjoins the swap. */
ElementSet evaluate_concrete(const ExprPtr& e, const EvalConfig& config);

} // namespace ordspec
