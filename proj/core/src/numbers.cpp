#include "ordspec/numbers.hpp"

#include "ordspec/errors.hpp"

namespace ordspec {

std::uint64_t to_u64(const Nat& n) {
    if (n < 0 || !n.fits_ulong_p())
        throw value_error("value out of 64-bit range: " + n.get_str());
    return static_cast<std::uint64_t>(n.get_ui());
}

Nat euler_phi(const Nat& n) {
    if (n <= 0)
        throw value_error("euler_phi requires a positive argument");
    std::uint64_t m = to_u64(n);
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        result -= result / m;
    return Nat(static_cast<unsigned long>(result));
}

std::string format_rational(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    auto bad = [&] { return value_error("malformed rational: '" + text + "'"); };
    if (text.empty())
        throw bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(Nat(text), 1);
            r.canonicalize();
            return r;
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            throw bad();
        Rational r{Nat(num), Nat(den)};
        if (r.get_den() == 0)
            throw value_error("zero denominator in rational: '" + text + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

Nat factorial(unsigned n) {
    Nat r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace ordspec
