#include "ordspec/expr.hpp"

#include <cctype>

#include "ordspec/errors.hpp"
#include "ordspec/group_ops.hpp"

namespace ordspec {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
        throw value_error("position " + std::to_string(at + 1) + ": " + msg);
    }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c))
            fail(pos, std::string("expected `") + c + "` " + what);
    }

    unsigned long integer() {
        skip_space();
        const std::size_t start = pos;
        unsigned long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (v > 400000000ul)
                fail(start, "number too large");
            v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
            ++pos;
        }
        if (pos == start)
            fail(pos, "expected a number");
        return v;
    }

    std::string name() {
        skip_space();
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    std::string quoted_string() {
        skip_space();
        if (pos >= text.size() || text[pos] != '"')
            fail(pos, "expected a double-quoted string");
        const std::size_t start = ++pos;
        while (pos < text.size() && text[pos] != '"')
            ++pos;
        if (pos >= text.size())
            fail(start - 1, "unterminated string");
        return text.substr(start, pos++ - start);
    }

    ExprPtr family_atom(Family family, std::size_t at) {
        expect('(', "after the family name");
        unsigned long q;
        switch (family) {
        case Family::PSL2:
        case Family::PGL2:
        case Family::PSigmaL2:
        case Family::PGammaL2: {
            const std::size_t dim_at = pos;
            const unsigned long dim = integer();
            if (dim != 2)
                fail(dim_at, "only dimension 2 is constructible; use load(\"...\") "
                             "for a fixture such as PSL3_4");
            expect(',', "between dimension and field size");
            q = integer();
            break;
        }
        default:
            q = integer();
            break;
        }
        expect(')', "after the parameter");
        auto node = std::make_shared<GroupExpr>();
        node->kind = GroupExpr::Kind::FamilyAtom;
        try {
            node->family = FamilySpec::make(family, static_cast<unsigned>(q));
        } catch (const error& e) {
            fail(at, e.what());
        }
        return node;
    }

    ExprPtr atom() {
        skip_space();
        const std::size_t at = pos;
        if (eat('(')) {
            ExprPtr inner = expression();
            expect(')', "to close the parenthesis");
            return inner;
        }
        const std::string id = name();
        if (id.empty())
            fail(at, "expected a group atom");
        if (id == "wr2") {
            expect('(', "after wr2");
            auto node = std::make_shared<GroupExpr>();
            node->kind = GroupExpr::Kind::Wreath;
            node->child = expression();
            expect(')', "to close wr2");
            return node;
        }
        if (id == "load") {
            expect('(', "after load");
            auto node = std::make_shared<GroupExpr>();
            node->kind = GroupExpr::Kind::Load;
            node->load_name = quoted_string();
            expect(')', "to close load");
            if (node->load_name.empty())
                fail(at, "load() needs a fixture name");
            return node;
        }
        Family family;
        if (!family_from_atom(id, family))
            fail(at, "unknown atom `" + id +
                         "` (expected S, A, C, PSL, PGL, PSigmaL, PGammaL, Sz, wr2, load)");
        return family_atom(family, at);
    }

    ExprPtr term() {
        ExprPtr base = atom();
        skip_space();
        if (eat('^')) {
            const std::size_t at = pos;
            const unsigned long e = integer();
            if (e > 65536)
                fail(at, "exponent too large");
            auto node = std::make_shared<GroupExpr>();
            node->kind = GroupExpr::Kind::Power;
            node->child = base;
            node->exponent = e;
            return node;
        }
        return base;
    }

    ExprPtr expression() {
        ExprPtr first = term();
        std::vector<ExprPtr> factors{first};
        while (eat('*'))
            factors.push_back(term());
        if (factors.size() == 1)
            return first;
        auto node = std::make_shared<GroupExpr>();
        node->kind = GroupExpr::Kind::Product;
        node->factors = std::move(factors);
        return node;
    }
};

void print_into(const ExprPtr& e, std::string& out, bool parenthesize_products) {
    switch (e->kind) {
    case GroupExpr::Kind::FamilyAtom:
        out += family_display(e->family);
        return;
    case GroupExpr::Kind::Load:
        out += "load(\"" + e->load_name + "\")";
        return;
    case GroupExpr::Kind::Wreath:
        out += "wr2(";
        print_into(e->child, out, false);
        out += ")";
        return;
    case GroupExpr::Kind::Power: {
        const bool wrap = e->child->kind == GroupExpr::Kind::Product ||
                          e->child->kind == GroupExpr::Kind::Power;
        if (wrap)
            out += "(";
        print_into(e->child, out, false);
        if (wrap)
            out += ")";
        out += "^" + std::to_string(e->exponent);
        return;
    }
    case GroupExpr::Kind::Product: {
        if (parenthesize_products)
            out += "(";
        for (std::size_t i = 0; i < e->factors.size(); ++i) {
            if (i)
                out += " * ";
            print_into(e->factors[i], out, true);
        }
        if (parenthesize_products)
            out += ")";
        return;
    }
    }
}

} // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.expression();
    p.skip_space();
    if (p.pos != text.size())
        p.fail(p.pos, "unexpected trailing input");
    return e;
}

std::string print_expr(const ExprPtr& e) {
    std::string out;
    print_into(e, out, false);
    return out;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind)
        return false;
    switch (a->kind) {
    case GroupExpr::Kind::FamilyAtom:
        return a->family.family == b->family.family && a->family.parameter == b->family.parameter;
    case GroupExpr::Kind::Load:
        return a->load_name == b->load_name;
    case GroupExpr::Kind::Wreath:
        return expr_equal(a->child, b->child);
    case GroupExpr::Kind::Power:
        return a->exponent == b->exponent && expr_equal(a->child, b->child);
    case GroupExpr::Kind::Product: {
        if (a->factors.size() != b->factors.size())
            return false;
        for (std::size_t i = 0; i < a->factors.size(); ++i)
            if (!expr_equal(a->factors[i], b->factors[i]))
                return false;
        return true;
    }
    }
    return false;
}

namespace {

OrderSpectrum family_atom_spectrum(const FamilySpec& spec, const EvalConfig& config) {
    switch (spec.family) {
    case Family::Sym:
        return sn_spectrum(spec.parameter);
    case Family::Alt:
        return an_spectrum(spec.parameter);
    case Family::Cyclic:
        return cyclic_spectrum(Nat(spec.parameter));
    case Family::PSL2:
        return spec.p == 2 ? psl2_even_spectrum(spec.parameter) : psl2_spectrum(spec.parameter);
    case Family::PGL2:
        return spec.p == 2 ? psl2_even_spectrum(spec.parameter) : pgl2_spectrum(spec.parameter);
    case Family::Sz:
        return sz_spectrum(spec.parameter);
    case Family::PSigmaL2:
    case Family::PGammaL2:
        /* no closed form; enumerate */
        return spectrum_of(family_group(spec, config.cap), config.threads);
    }
    throw value_error("unknown family");
}

/* g's generators re-indexed to act on [offset, offset+g.degree) inside
 * a larger point set. */
void append_shifted(std::vector<Permutation>& out, const ElementSet& g, unsigned offset,
                    unsigned total) {
    for (const auto& gen : g.generators()) {
        std::vector<std::uint16_t> img(total);
        for (unsigned i = 0; i < total; ++i)
            img[i] = static_cast<std::uint16_t>(i);
        for (unsigned i = 0; i < g.degree(); ++i)
            img[offset + i] = static_cast<std::uint16_t>(offset + gen.apply0(i));
        out.push_back(Permutation::from_images(std::move(img)));
    }
}

ElementSet trivial_concrete(const std::string& label, std::uint64_t cap) {
    return ElementSet::generate({Permutation::identity(1)}, cap, label);
}

} // namespace

OrderSpectrum evaluate_spectrum(const ExprPtr& e, const EvalConfig& config) {
    switch (e->kind) {
    case GroupExpr::Kind::FamilyAtom:
        return family_atom_spectrum(e->family, config);
    case GroupExpr::Kind::Load:
        return spectrum_of(evaluate_concrete(e, config), config.threads);
    case GroupExpr::Kind::Product: {
        OrderSpectrum acc = evaluate_spectrum(e->factors[0], config);
        for (std::size_t i = 1; i < e->factors.size(); ++i)
            acc = direct_product(acc, evaluate_spectrum(e->factors[i], config));
        return acc;
    }
    case GroupExpr::Kind::Power:
        return power(evaluate_spectrum(e->child, config), Nat(e->exponent));
    case GroupExpr::Kind::Wreath:
        return wreath_c2(evaluate_spectrum(e->child, config));
    }
    throw value_error("unknown expression");
}

ElementSet evaluate_concrete(const ExprPtr& e, const EvalConfig& config) {
    const std::string label = print_expr(e);
    switch (e->kind) {
    case GroupExpr::Kind::FamilyAtom:
        return family_group(e->family, config.cap);
    case GroupExpr::Kind::Load:
        if (!config.fixtures)
            throw value_error("load(\"" + e->load_name + "\") needs a fixture directory");
        return config.fixtures->load(e->load_name, config.cap);
    case GroupExpr::Kind::Product: {
        std::vector<ElementSet> parts;
        unsigned long total = 0;
        for (const auto& f : e->factors) {
            parts.push_back(evaluate_concrete(f, config));
            total += parts.back().degree();
        }
        if (total > 65536)
            throw value_error("product degree exceeds 65536 points");
        std::vector<Permutation> gens;
        unsigned offset = 0;
        for (const auto& part : parts) {
            append_shifted(gens, part, offset, static_cast<unsigned>(total));
            offset += part.degree();
        }
        return ElementSet::generate(gens, config.cap, label);
    }
    case GroupExpr::Kind::Power: {
        if (e->exponent == 0)
            return trivial_concrete(label, config.cap);
        const ElementSet base = evaluate_concrete(e->child, config);
        const unsigned long total = static_cast<unsigned long>(base.degree()) * e->exponent;
        if (total > 65536)
            throw value_error("power degree exceeds 65536 points");
        std::vector<Permutation> gens;
        for (unsigned long i = 0; i < e->exponent; ++i)
            append_shifted(gens, base, static_cast<unsigned>(i * base.degree()),
                           static_cast<unsigned>(total));
        return ElementSet::generate(gens, config.cap, label);
    }
    case GroupExpr::Kind::Wreath: {
        const ElementSet base = evaluate_concrete(e->child, config);
        const unsigned long total = 2ul * base.degree();
        if (total > 65536)
            throw value_error("wreath degree exceeds 65536 points");
        std::vector<Permutation> gens;
        append_shifted(gens, base, 0, static_cast<unsigned>(total));
        std::vector<std::uint16_t> swap_img(total);
        for (unsigned i = 0; i < base.degree(); ++i) {
            swap_img[i] = static_cast<std::uint16_t>(i + base.degree());
            swap_img[i + base.degree()] = static_cast<std::uint16_t>(i);
        }
        gens.push_back(Permutation::from_images(std::move(swap_img)));
        return ElementSet::generate(gens, config.cap, label);
    }
    }
    throw value_error("unknown expression");
}

} // namespace ordspec
