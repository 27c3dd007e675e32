#pragma once

#include <cstdint>
#include <vector>

#include "ordspec/perm.hpp"

namespace ordspec {

bool is_prime_u(unsigned n);

/* q = p^m with p prime, m >= 1; false when q is not a prime power. */
bool split_prime_power(unsigned q, unsigned& p, unsigned& m);

/* GF(p^m) with table-backed arithmetic, for q up to 1024.
 *
 * Elements are the indices 0..q-1; index sum(c_i p^i) stands for the
 * polynomial sum(c_i x^i) over GF(p). The modulus is the unique
 * lexicographically smallest monic irreducible of degree m, comparing
 * coefficient tuples (c_0, c_1, ..., c_{m-1}) with c_0 most
 * significant. Identical (p, m) therefore always give identical
 * element labels.
 */
class Field {
public:
    static Field make(unsigned q);

    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    /* c_0..c_m with c_m == 1 */
    const std::vector<unsigned>& modulus() const { return modulus_; }

    unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    unsigned sub(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
    unsigned inv(unsigned a) const;
    unsigned pow(unsigned a, unsigned long long e) const;
    /* x -> x^(p^i) */
    unsigned frobenius(unsigned a, unsigned i = 1) const;
    /* smallest element index generating the multiplicative group */
    unsigned primitive_element() const { return primitive_; }

private:
    Field() = default;

    unsigned q_ = 0, p_ = 0, m_ = 0, primitive_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<std::uint16_t> add_, mul_;
    std::vector<std::uint16_t> neg_, inv_;
};

/* Scale so the first nonzero coordinate becomes 1. */
void normalize_projective(const Field& f, std::vector<unsigned>& v);

/* The q+1 points of the projective line: position x < q holds the
 * class of [x:1], position q holds [1:0]. Stored coordinates are
 * normalized per normalize_projective. */
std::vector<std::vector<unsigned>> projective_line(const Field& f);

/* The q^2+1 Suzuki ovoid points over GF(q), q = 2^(2a+1), a >= 1:
 * [1 : b : c : bc + b^(theta+2) + c^theta] with theta: x -> x^(2^(a+1)),
 * ordered by (b, c) ascending, then [0:0:0:1] last. */
std::vector<std::vector<unsigned>> suzuki_ovoid(const Field& f);

/* Permutation induced on `points` by v -> v M (row vectors times the
 * dim x dim row-major matrix), with projective normalization. Throws
 * if the matrix does not map the point set onto itself. */
Permutation matrix_point_action(const Field& f, const std::vector<unsigned>& mat,
                                const std::vector<std::vector<unsigned>>& points);

/* Permutation induced by the coordinatewise Frobenius x -> x^p. */
Permutation frobenius_point_action(const Field& f,
                                   const std::vector<std::vector<unsigned>>& points);

} // namespace ordspec
