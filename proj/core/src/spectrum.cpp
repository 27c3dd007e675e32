#include "ordspec/spectrum.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "ordspec/errors.hpp"

namespace ordspec {

OrderSpectrum OrderSpectrum::unchecked(const Map& counts) {
    OrderSpectrum s;
    s.group_order_ = 0;
    for (const auto& [order, count] : counts) {
        if (order < 1)
            throw value_error("spectrum order must be >= 1, got " + order.get_str());
        if (count < 0)
            throw value_error("spectrum count must be >= 0, got " + count.get_str());
        if (count == 0)
            continue;
        s.counts_.emplace(order, count);
        s.group_order_ += count;
    }
    return s;
}

OrderSpectrum OrderSpectrum::make(const Map& counts) {
    OrderSpectrum s = unchecked(counts);
    if (s.count_of(1) != 1)
        throw value_error("spectrum must contain exactly one element of order 1");
    for (const auto& [order, count] : s.counts_) {
        if (!divides(order, s.group_order_))
            throw value_error("order " + order.get_str() + " does not divide group order " +
                              s.group_order_.get_str());
        if (!divides(euler_phi(order), count))
            throw value_error("count " + count.get_str() + " at order " + order.get_str() +
                              " is not a multiple of phi(order)");
    }
    return s;
}

OrderSpectrum OrderSpectrum::make(const std::vector<std::pair<Nat, Nat>>& entries) {
    Map m;
    for (const auto& [order, count] : entries) {
        if (m.count(order))
            throw value_error("duplicate order " + order.get_str() + " in spectrum entries");
        m.emplace(order, count);
    }
    return make(m);
}

Nat OrderSpectrum::count_of(const Nat& order) const {
    auto it = counts_.find(order);
    return it == counts_.end() ? Nat(0) : it->second;
}

Rational rho(const OrderSpectrum& s, const Nat& k) {
    if (k < 1)
        throw value_error("rho requires k >= 1");
    if (s.group_order() == 0)
        throw value_error("rho of an empty spectrum");
    Nat total = 0;
    for (const auto& [order, count] : s.counts())
        if (divides(order, k))
            total += count;
    return make_ratio(total, s.group_order());
}

Rational rho_star(const OrderSpectrum& s, const Nat& k) {
    if (k < 1)
        throw value_error("rho_star requires k >= 1");
    if (s.group_order() == 0)
        throw value_error("rho_star of an empty spectrum");
    return make_ratio(s.count_of(k), s.group_order());
}

Nat exponent(const OrderSpectrum& s) {
    Nat e = 1;
    for (const auto& [order, count] : s.counts())
        e = nat_lcm(e, order);
    return e;
}

OrderSpectrum direct_product(const OrderSpectrum& a, const OrderSpectrum& b) {
    OrderSpectrum::Map acc;
    for (const auto& [d, cd] : a.counts())
        for (const auto& [e, ce] : b.counts())
            acc[nat_lcm(d, e)] += cd * ce;
    return OrderSpectrum::make(acc);
}

OrderSpectrum power(const OrderSpectrum& s, const Nat& n) {
    if (n < 0)
        throw value_error("power requires n >= 0");
    OrderSpectrum result = cyclic_spectrum(1);
    OrderSpectrum base = s;
    Nat e = n;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            result = direct_product(result, base);
        e >>= 1;
        if (e > 0)
            base = direct_product(base, base);
    }
    return result;
}

OrderSpectrum wreath_c2(const OrderSpectrum& s) {
    OrderSpectrum straight = direct_product(s, s);
    OrderSpectrum::Map acc = straight.counts();
    for (const auto& [m, c] : s.counts())
        acc[2 * m] += s.group_order() * c;
    return OrderSpectrum::make(acc);
}

OrderSpectrum cyclic_spectrum(const Nat& n) {
    if (n < 1)
        throw value_error("cyclic_spectrum requires n >= 1");
    std::uint64_t m = to_u64(n);
    OrderSpectrum::Map acc;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d)
            continue;
        acc[Nat(static_cast<unsigned long>(d))] = euler_phi(Nat(static_cast<unsigned long>(d)));
        std::uint64_t e = m / d;
        if (e != d)
            acc[Nat(static_cast<unsigned long>(e))] = euler_phi(Nat(static_cast<unsigned long>(e)));
    }
    return OrderSpectrum::make(acc);
}

Nat construction2_n(const OrderSpectrum& h, const Nat& k, const Rational& eps) {
    if (k < 2)
        throw value_error("construction2_n requires k >= 2");
    if (rho(h, k) <= eps)
        throw value_error("construction2_n requires rho(h, k) > eps; got " +
                          format_rational(rho(h, k)) + " <= " + format_rational(eps));
    OrderSpectrum ck = cyclic_spectrum(k);
    OrderSpectrum current = h;
    Nat n = 0;
    while (rho_star(current, k) <= eps) {
        current = direct_product(current, ck);
        n += 1;
    }
    return n;
}

void write_spectrum(std::ostream& out, const OrderSpectrum& s) {
    out << "order " << s.group_order().get_str() << "\n";
    for (const auto& [order, count] : s.counts())
        out << order.get_str() << " " << count.get_str() << "\n";
}

std::string to_string(const OrderSpectrum& s) {
    std::ostringstream os;
    write_spectrum(os, s);
    return os.str();
}

OrderSpectrum read_spectrum(std::istream& in) {
    std::string line;
    bool have_header = false;
    Nat declared = 0;
    OrderSpectrum::Map acc;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        if (!have_header) {
            std::string value;
            if (first != "order" || !(ls >> value))
                throw io_error("spectrum text must start with 'order <group_order>'");
            try {
                declared = Nat(value);
            } catch (const std::invalid_argument&) {
                throw io_error("malformed group order '" + value + "'");
            }
            have_header = true;
            continue;
        }
        std::string second;
        if (!(ls >> second))
            throw io_error("malformed spectrum line: '" + line + "'");
        try {
            Nat order(first), count(second);
            if (acc.count(order))
                throw io_error("duplicate order " + order.get_str() + " in spectrum text");
            acc[order] = count;
        } catch (const std::invalid_argument&) {
            throw io_error("malformed spectrum line: '" + line + "'");
        }
    }
    if (!have_header)
        throw io_error("empty spectrum text");
    OrderSpectrum s = OrderSpectrum::make(acc);
    if (s.group_order() != declared)
        throw io_error("spectrum counts sum to " + s.group_order().get_str() +
                       " but header declares " + declared.get_str());
    return s;
}

OrderSpectrum parse_spectrum(const std::string& text) {
    std::istringstream is(text);
    return read_spectrum(is);
}

} // namespace ordspec
