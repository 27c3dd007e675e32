#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordspec/numbers.hpp"

namespace ordspec {

/* Permutation of {1..degree}, stored as the 0-based image vector.
 * Composition is left-to-right: (a * b) maps x to b(a(x)). */
class Permutation {
  public:
    Permutation() = default;
    static Permutation identity(unsigned degree);
    static Permutation from_images(std::vector<std::uint16_t> images0);

    unsigned degree() const { return static_cast<unsigned>(images_.size()); }
    std::uint16_t apply0(std::uint16_t x) const { return images_[x]; }
    const std::vector<std::uint16_t>& images0() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    Permutation pow(long long e) const;
    Nat order() const;

    Permutation operator*(const Permutation& rhs) const;
    /* rhs^{-1} * this * rhs */
    Permutation conjugated_by(const Permutation& rhs) const;

    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<std::uint16_t> images_;
};

/* Accepts cycle notation "(1,2,3)(4,5)" (also "()" for the identity)
 * and image-list notation "[2,3,1]" (1-based). In cycle notation the
 * degree is inferred unless a larger one is supplied. */
Permutation parse_perm(const std::string& text, unsigned degree = 0);

/* Canonical cycle notation: each cycle rotated to start at its smallest
 * point, cycles sorted by first point, fixed points omitted, "()" for
 * the identity. */
std::string to_cycle_string(const Permutation& p);

} // namespace ordspec
