#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ordspec/numbers.hpp"

namespace ordspec {

/* Multiset of element orders of a finite group, stored sparsely as
 * order -> count. The group order is the sum of all counts.
 *
 * A validated spectrum satisfies:
 *   - counts[1] == 1,
 *   - every order divides the group order (Lagrange),
 *   - phi(d) divides counts[d] for every order d (elements of order d
 *     split into generating sets of cyclic subgroups).
 *
 * Histograms of non-group origin (coset order statistics) share the
 * representation but skip validation; rho/rho_star still apply.
 */
class OrderSpectrum {
  public:
    using Map = std::map<Nat, Nat>;

    static OrderSpectrum make(const Map& counts);
    static OrderSpectrum make(const std::vector<std::pair<Nat, Nat>>& entries);
    /* No invariant checks; zero-count entries are dropped. */
    static OrderSpectrum unchecked(const Map& counts);

    const Map& counts() const { return counts_; }
    const Nat& group_order() const { return group_order_; }
    Nat count_of(const Nat& order) const;

    bool operator==(const OrderSpectrum& other) const = default;

  private:
    Map counts_;
    Nat group_order_;
};

/* Fraction of elements whose order divides k / equals k exactly. */
Rational rho(const OrderSpectrum& s, const Nat& k);
Rational rho_star(const OrderSpectrum& s, const Nat& k);

/* lcm of all element orders. */
Nat exponent(const OrderSpectrum& s);

/* Spectrum of A x B via lcm-convolution:
 * counts[m] = sum over lcm(d,e) == m of a[d]*b[e]. */
OrderSpectrum direct_product(const OrderSpectrum& a, const OrderSpectrum& b);

/* n-fold direct power (n >= 0; n == 0 is the trivial group). */
OrderSpectrum power(const OrderSpectrum& s, const Nat& n);

/* Spectrum of G wr C2 for G with spectrum s: the point-preserving half
 * is G x G; each pair in the swapped half squares into the diagonal and
 * contributes |G| * counts[m] elements of order 2m. */
OrderSpectrum wreath_c2(const OrderSpectrum& s);

/* Smallest n >= 0 with rho_star(h x C_k^n, k) > eps. Requires k >= 2
 * and rho(h, k) > eps, otherwise no such n exists. */
Nat construction2_n(const OrderSpectrum& h, const Nat& k, const Rational& eps);

/* Cyclic group spectrum: counts[d] = phi(d) for every divisor d of n. */
OrderSpectrum cyclic_spectrum(const Nat& n);

/* Text form:
 *   order <group_order>
 *   <order> <count>     (one line per order, ascending)
 */
void write_spectrum(std::ostream& out, const OrderSpectrum& s);
std::string to_string(const OrderSpectrum& s);
OrderSpectrum read_spectrum(std::istream& in);
OrderSpectrum parse_spectrum(const std::string& text);

} // namespace ordspec
