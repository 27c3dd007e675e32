#include "ordspec/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ordspec/errors.hpp"

namespace ordspec {

Permutation Permutation::identity(unsigned degree) {
    Permutation p;
    p.images_.resize(degree);
    for (unsigned i = 0; i < degree; ++i)
        p.images_[i] = static_cast<std::uint16_t>(i);
    return p;
}

Permutation Permutation::from_images(std::vector<std::uint16_t> images0) {
    std::vector<bool> seen(images0.size(), false);
    for (std::uint16_t v : images0) {
        if (v >= images0.size() || seen[v])
            throw value_error("image vector is not a permutation");
        seen[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images0);
    return p;
}

bool Permutation::is_identity() const {
    for (unsigned i = 0; i < degree(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_.resize(degree());
    for (unsigned i = 0; i < degree(); ++i)
        r.images_[images_[i]] = static_cast<std::uint16_t>(i);
    return r;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree())
        throw value_error("degree mismatch in permutation product");
    Permutation r;
    r.images_.resize(degree());
    for (unsigned i = 0; i < degree(); ++i)
        r.images_[i] = rhs.images_[images_[i]];
    return r;
}

Permutation Permutation::conjugated_by(const Permutation& rhs) const {
    return rhs.inverse() * (*this * rhs);
}

Permutation Permutation::pow(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    Permutation acc = identity(degree());
    while (n) {
        if (n & 1)
            acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Nat Permutation::order() const {
    Nat result = 1;
    std::vector<bool> seen(degree(), false);
    for (unsigned i = 0; i < degree(); ++i) {
        if (seen[i])
            continue;
        unsigned long len = 0;
        unsigned j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = images_[j];
            ++len;
        }
        result = nat_lcm(result, Nat(len));
    }
    return result;
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        skip_ws();
        if (pos >= text.size())
            throw value_error("unexpected end of permutation text: '" + text + "'");
        return text[pos++];
    }
    unsigned take_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw value_error("expected a point number at position " + std::to_string(start) +
                              " in '" + text + "'");
        return static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
    }
};

Permutation parse_cycles(Cursor& c, unsigned degree) {
    std::vector<std::vector<unsigned>> cycles;
    unsigned max_point = 0;
    while (!c.eof()) {
        if (c.take() != '(')
            throw value_error("expected '(' in permutation: '" + c.text + "'");
        std::vector<unsigned> cycle;
        if (c.peek() == ')') {
            c.take();
        } else {
            for (;;) {
                unsigned pt = c.take_uint();
                if (pt == 0)
                    throw value_error("points are 1-based in '" + c.text + "'");
                cycle.push_back(pt);
                max_point = std::max(max_point, pt);
                char ch = c.take();
                if (ch == ')')
                    break;
                if (ch != ',')
                    throw value_error("expected ',' or ')' in permutation: '" + c.text + "'");
            }
        }
        cycles.push_back(std::move(cycle));
    }
    unsigned deg = std::max(degree, max_point);
    std::vector<std::uint16_t> images(deg);
    std::vector<bool> assigned(deg, false);
    for (unsigned i = 0; i < deg; ++i)
        images[i] = static_cast<std::uint16_t>(i);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            unsigned from = cycle[i] - 1;
            unsigned to = cycle[(i + 1) % cycle.size()] - 1;
            if (assigned[from])
                throw value_error("point " + std::to_string(from + 1) + " repeated in '" + c.text + "'");
            assigned[from] = true;
            images[from] = static_cast<std::uint16_t>(to);
        }
    }
    return Permutation::from_images(std::move(images));
}

Permutation parse_images(Cursor& c, unsigned degree) {
    if (c.take() != '[')
        throw value_error("expected '[' in permutation: '" + c.text + "'");
    std::vector<std::uint16_t> images;
    if (c.peek() == ']') {
        c.take();
    } else {
        for (;;) {
            unsigned pt = c.take_uint();
            if (pt == 0)
                throw value_error("points are 1-based in '" + c.text + "'");
            images.push_back(static_cast<std::uint16_t>(pt - 1));
            char ch = c.take();
            if (ch == ']')
                break;
            if (ch != ',')
                throw value_error("expected ',' or ']' in permutation: '" + c.text + "'");
        }
    }
    if (!c.eof())
        throw value_error("trailing text after image list: '" + c.text + "'");
    if (degree > images.size()) {
        for (std::size_t i = images.size(); i < degree; ++i)
            images.push_back(static_cast<std::uint16_t>(i));
    }
    try {
        return Permutation::from_images(std::move(images));
    } catch (const value_error&) {
        throw value_error("image list is not a permutation: '" + c.text + "'");
    }
}

} // namespace

Permutation parse_perm(const std::string& text, unsigned degree) {
    if (degree > 65535)
        throw value_error("degree too large");
    Cursor c{text};
    if (c.eof())
        throw value_error("empty permutation text");
    Permutation p = c.peek() == '[' ? parse_images(c, degree) : parse_cycles(c, degree);
    if (degree != 0 && p.degree() != degree)
        throw value_error("permutation '" + text + "' does not fit degree " + std::to_string(degree));
    return p;
}

std::string to_cycle_string(const Permutation& p) {
    std::ostringstream os;
    std::vector<bool> seen(p.degree(), false);
    bool any = false;
    for (unsigned i = 0; i < p.degree(); ++i) {
        if (seen[i] || p.apply0(static_cast<std::uint16_t>(i)) == i) {
            seen[i] = true;
            continue;
        }
        os << '(';
        unsigned j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            os << (first ? "" : ",") << (j + 1);
            first = false;
            j = p.apply0(static_cast<std::uint16_t>(j));
        }
        os << ')';
        any = true;
    }
    if (!any)
        return "()";
    return os.str();
}

} // namespace ordspec
