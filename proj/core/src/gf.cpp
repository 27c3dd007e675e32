#include "ordspec/gf.hpp"

#include <algorithm>
#include <map>

#include "ordspec/errors.hpp"

namespace ordspec {

bool is_prime_u(unsigned n) {
    if (n < 2)
        return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool split_prime_power(unsigned q, unsigned& p, unsigned& m) {
    if (q < 2)
        return false;
    unsigned base = q;
    for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            base = d;
            break;
        }
    }
    unsigned e = 0;
    unsigned rest = q;
    while (rest % base == 0) {
        rest /= base;
        ++e;
    }
    if (rest != 1)
        return false;
    p = base;
    m = e;
    return true;
}

namespace {

/* Dense polynomial over GF(p), coefficients low degree first. */
using Poly = std::vector<unsigned>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

/* a mod b, b monic */
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    trim(a);
    while (a.size() >= b.size()) {
        unsigned lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            unsigned sub = (lead * b[i]) % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

bool is_irreducible(const Poly& f, unsigned p) {
    unsigned m = static_cast<unsigned>(f.size()) - 1;
    if (m == 1)
        return true;
    /* trial division by every monic polynomial of degree 1..m/2 */
    for (unsigned d = 1; 2 * d <= m; ++d) {
        unsigned long long count = 1;
        for (unsigned i = 0; i < d; ++i)
            count *= p;
        for (unsigned long long idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            unsigned long long t = idx;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

unsigned poly_to_index(const Poly& a, unsigned p) {
    unsigned idx = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        idx = idx * p + a[i];
    return idx;
}

Poly index_to_poly(unsigned idx, unsigned p) {
    Poly a;
    while (idx) {
        a.push_back(idx % p);
        idx /= p;
    }
    return a;
}

} // namespace

Field Field::make(unsigned q) {
    unsigned p = 0, m = 0;
    if (q > 1024 || !split_prime_power(q, p, m))
        throw value_error("field size must be a prime power at most 1024, got " +
                          std::to_string(q));

    Field f;
    f.q_ = q;
    f.p_ = p;
    f.m_ = m;

    /* Lex-smallest monic irreducible: count through coefficient tuples
     * with c_0 as the most significant digit. */
    unsigned long long total = 1;
    for (unsigned i = 0; i < m; ++i)
        total *= p;
    for (unsigned long long n = 0; n < total; ++n) {
        Poly cand(m + 1, 0);
        for (unsigned j = 0; j < m; ++j) {
            unsigned long long place = 1;
            for (unsigned i = 0; i + j + 1 < m; ++i)
                place *= p;
            cand[j] = static_cast<unsigned>((n / place) % p);
        }
        cand[m] = 1;
        if (is_irreducible(cand, p)) {
            f.modulus_ = cand;
            break;
        }
    }
    if (f.modulus_.empty())
        throw error("no irreducible modulus found"); // unreachable

    f.add_.resize(static_cast<std::size_t>(q) * q);
    f.mul_.resize(static_cast<std::size_t>(q) * q);
    f.neg_.resize(q);
    f.inv_.assign(q, 0);
    for (unsigned a = 0; a < q; ++a) {
        Poly pa = index_to_poly(a, p);
        Poly na = pa;
        for (auto& c : na)
            c = (p - c) % p;
        f.neg_[a] = static_cast<std::uint16_t>(poly_to_index(na, p));
        for (unsigned b = 0; b < q; ++b) {
            Poly pb = index_to_poly(b, p);
            Poly s(std::max(pa.size(), pb.size()), 0);
            for (std::size_t i = 0; i < s.size(); ++i) {
                unsigned ca = i < pa.size() ? pa[i] : 0;
                unsigned cb = i < pb.size() ? pb[i] : 0;
                s[i] = (ca + cb) % p;
            }
            f.add_[a * q + b] = static_cast<std::uint16_t>(poly_to_index(s, p));
            Poly prod = poly_mod(poly_mul(pa, pb, p), f.modulus_, p);
            f.mul_[a * q + b] = static_cast<std::uint16_t>(poly_to_index(prod, p));
        }
    }
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
            if (f.mul_[a * q + b] == 1) {
                f.inv_[a] = static_cast<std::uint16_t>(b);
                break;
            }

    for (unsigned a = 1; a < q; ++a) {
        unsigned ord = 1;
        unsigned x = a;
        while (x != 1) {
            x = f.mul_[x * q + a];
            ++ord;
        }
        if (ord == q - 1) {
            f.primitive_ = a;
            break;
        }
    }
    return f;
}

unsigned Field::inv(unsigned a) const {
    if (a == 0)
        throw value_error("division by zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
}

unsigned Field::pow(unsigned a, unsigned long long e) const {
    unsigned r = 1;
    unsigned base = a;
    while (e) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

unsigned Field::frobenius(unsigned a, unsigned i) const {
    unsigned r = a;
    for (unsigned t = 0; t < i % m_; ++t)
        r = pow(r, p_);
    return r;
}

void normalize_projective(const Field& f, std::vector<unsigned>& v) {
    for (unsigned c : v) {
        if (c != 0) {
            if (c != 1) {
                unsigned s = f.inv(c);
                for (auto& x : v)
                    x = f.mul(x, s);
            }
            return;
        }
    }
    throw value_error("zero vector has no projective class");
}

std::vector<std::vector<unsigned>> projective_line(const Field& f) {
    std::vector<std::vector<unsigned>> pts;
    pts.reserve(f.q() + 1);
    for (unsigned x = 0; x < f.q(); ++x) {
        std::vector<unsigned> v{x, 1};
        normalize_projective(f, v);
        pts.push_back(std::move(v));
    }
    pts.push_back({1, 0});
    return pts;
}

std::vector<std::vector<unsigned>> suzuki_ovoid(const Field& f) {
    if (f.p() != 2 || f.m() < 3 || f.m() % 2 == 0)
        throw value_error("Suzuki ovoid needs GF(2^(2a+1)) with a >= 1");
    const unsigned a = (f.m() - 1) / 2;
    auto theta = [&](unsigned x) { return f.frobenius(x, a + 1); };
    std::vector<std::vector<unsigned>> pts;
    pts.reserve(f.q() * f.q() + 1);
    for (unsigned b = 0; b < f.q(); ++b)
        for (unsigned c = 0; c < f.q(); ++c) {
            unsigned z = f.add(f.mul(b, c), f.mul(theta(b), f.mul(b, b)));
            z = f.add(z, theta(c));
            pts.push_back({1, b, c, z});
        }
    pts.push_back({0, 0, 0, 1});
    return pts;
}

Permutation matrix_point_action(const Field& f, const std::vector<unsigned>& mat,
                                const std::vector<std::vector<unsigned>>& points) {
    if (points.empty())
        throw value_error("empty point set");
    const std::size_t dim = points.front().size();
    if (mat.size() != dim * dim)
        throw value_error("matrix size does not match point dimension");
    std::map<std::vector<unsigned>, std::uint16_t> index;
    for (std::size_t i = 0; i < points.size(); ++i)
        index[points[i]] = static_cast<std::uint16_t>(i);
    std::vector<std::uint16_t> images(points.size());
    std::vector<unsigned> w(dim);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& v = points[i];
        for (std::size_t j = 0; j < dim; ++j) {
            unsigned s = 0;
            for (std::size_t t = 0; t < dim; ++t)
                s = f.add(s, f.mul(v[t], mat[t * dim + j]));
            w[j] = s;
        }
        normalize_projective(f, w);
        auto it = index.find(w);
        if (it == index.end())
            throw value_error("matrix does not preserve the point set");
        images[i] = it->second;
    }
    return Permutation::from_images(std::move(images));
}

Permutation frobenius_point_action(const Field& f,
                                   const std::vector<std::vector<unsigned>>& points) {
    if (points.empty())
        throw value_error("empty point set");
    std::map<std::vector<unsigned>, std::uint16_t> index;
    for (std::size_t i = 0; i < points.size(); ++i)
        index[points[i]] = static_cast<std::uint16_t>(i);
    std::vector<std::uint16_t> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<unsigned> w = points[i];
        for (auto& c : w)
            c = f.frobenius(c);
        normalize_projective(f, w);
        auto it = index.find(w);
        if (it == index.end())
            throw value_error("Frobenius does not preserve the point set");
        images[i] = it->second;
    }
    return Permutation::from_images(std::move(images));
}

} // namespace ordspec
