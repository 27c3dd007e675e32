#include <doctest.h>

#include <string>

#include "ordspec/errors.hpp"
#include "ordspec/expr.hpp"
#include "ordspec/group_ops.hpp"

using namespace ordspec;

namespace {

std::string error_text(const std::string& input) {
    try {
        parse_expr(input);
    } catch (const value_error& e) {
        return e.what();
    }
    return "";
}

bool mentions(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("parse and print round trips") {
    for (const char* text : {
             "S(5)",
             "A(7)",
             "C(12)",
             "PSL(2,27)",
             "PGammaL(2,32)",
             "Sz(8)",
             "wr2(S(5))",
             "load(\"M10\")",
             "A(5) * C(2)",
             "C(2)^3",
             "wr2(wr2(C(2)))",
             "(S(3) * C(2))^2",
             "(C(2)^2)^3",
             "S(3) * C(2)^4 * A(4)",
             "wr2(S(3) * S(3))",
         }) {
        CAPTURE(text);
        ExprPtr e = parse_expr(text);
        CHECK(print_expr(e) == text);
        CHECK(expr_equal(e, parse_expr(print_expr(e))));
    }
    // whitespace and redundant parens normalize away
    CHECK(print_expr(parse_expr("  S( 5 )*C(3) ")) == "S(5) * C(3)");
    CHECK(print_expr(parse_expr("((A(5)))")) == "A(5)");
    // parenthesized products keep their shape so printing round-trips
    CHECK(print_expr(parse_expr("(A(5) * C(2)) * S(3)")) == "(A(5) * C(2)) * S(3)");
}

TEST_CASE("structural equality") {
    CHECK(expr_equal(parse_expr("C(2) * C(3)"), parse_expr("C(2) * C(3)")));
    CHECK(!expr_equal(parse_expr("C(2) * C(3)"), parse_expr("C(3) * C(2)")));
    CHECK(!expr_equal(parse_expr("C(6)"), parse_expr("C(2) * C(3)")));
    CHECK(!expr_equal(parse_expr("C(2)^2"), parse_expr("C(2) * C(2)")));
    CHECK(!expr_equal(parse_expr("wr2(C(2))"), parse_expr("C(2)^2")));
    CHECK(!expr_equal(parse_expr("load(\"M10\")"), parse_expr("load(\"M11\")")));
    CHECK(!expr_equal(parse_expr("S(4)"), parse_expr("A(4)")));
    CHECK(!expr_equal(parse_expr("S(4)"), parse_expr("S(5)")));
}

TEST_CASE("parse errors carry positions and hints") {
    CHECK(mentions(error_text(""), "position 1"));
    CHECK(mentions(error_text(""), "expected a group atom"));
    CHECK(mentions(error_text("S(5"), "expected `)`"));
    CHECK(mentions(error_text("S()"), "expected a number"));
    CHECK(mentions(error_text("Q(3)"), "unknown atom `Q`"));
    CHECK(mentions(error_text("Q(3)"), "expected S, A, C, PSL, PGL, PSigmaL, PGammaL, Sz, wr2, load"));
    CHECK(mentions(error_text("PSL(3,4)"), "only dimension 2 is constructible"));
    CHECK(mentions(error_text("PSL(3,4)"), "PSL3_4"));
    CHECK(mentions(error_text("PSL(2)"), "expected `,`"));
    CHECK(mentions(error_text("S(5)^"), "expected a number"));
    CHECK(mentions(error_text("S(5) * * C(2)"), "expected a group atom"));
    CHECK(mentions(error_text("S(5))"), "unexpected trailing input"));
    CHECK(mentions(error_text("S(5) C(2)"), "unexpected trailing input"));
    CHECK(mentions(error_text("C(2)^70000"), "exponent too large"));
    CHECK(mentions(error_text("C(5000000000)"), "number too large"));
    CHECK(mentions(error_text("load(M10)"), "expected a double-quoted string"));
    CHECK(mentions(error_text("load(\"M10)"), "unterminated string"));
    CHECK(mentions(error_text("load(\"\")"), "load() needs a fixture name"));
    CHECK(mentions(error_text("Sz(4)"), "Sz needs q = 2^(2a+1)"));
    CHECK(mentions(error_text("S(5) * Sz(4)"), "position 8"));
    CHECK(error_text("S(5) * C(2)").empty());
}

TEST_CASE("spectrum evaluation matches concrete enumeration") {
    EvalConfig cfg;
    for (const char* text : {
             "S(4)",
             "A(5)",
             "C(12)",
             "C(1)",
             "S(3) * C(4)",
             "A(4)^2",
             "wr2(S(3))",
             "wr2(C(6))",
             "wr2(C(2))^2",
             "wr2(wr2(C(2)))",
             "PSL(2,7)",
             "PSL(2,8)",
             "PGL(2,5)",
             "PSigmaL(2,9)",
             "S(3) * S(3) * C(2)",
             "S(5)^0",
         }) {
        CAPTURE(text);
        ExprPtr e = parse_expr(text);
        ElementSet g = evaluate_concrete(e, cfg);
        CHECK(g.label() == print_expr(e));
        CHECK(evaluate_spectrum(e, cfg) == spectrum_of(g));
    }
}

TEST_CASE("specific evaluation results") {
    EvalConfig cfg;
    CHECK(evaluate_spectrum(parse_expr("wr2(C(2))"), cfg) ==
          OrderSpectrum::make(OrderSpectrum::Map{{1, 1}, {2, 5}, {4, 2}}));
    CHECK(evaluate_spectrum(parse_expr("S(5)^0"), cfg) == cyclic_spectrum(1));
    CHECK(evaluate_spectrum(parse_expr("C(2) * C(3)"), cfg) == cyclic_spectrum(6));
    CHECK(rho(evaluate_spectrum(parse_expr("Sz(8)"), cfg), 91) == Rational(211, 320));

    CHECK(evaluate_concrete(parse_expr("S(3) * C(4)"), cfg).degree() == 7);
    CHECK(evaluate_concrete(parse_expr("wr2(S(3))"), cfg).degree() == 6);
    CHECK(evaluate_concrete(parse_expr("S(5)^0"), cfg).degree() == 1);
    CHECK(evaluate_concrete(parse_expr("C(3)^4"), cfg).size() == 81);

    EvalConfig tight;
    tight.cap = 100;
    CHECK_THROWS_AS(evaluate_concrete(parse_expr("S(6)"), tight), cap_exceeded);
    CHECK_THROWS_AS(evaluate_spectrum(parse_expr("PSigmaL(2,27)"), tight), cap_exceeded);
}

TEST_CASE("load atoms resolve through the fixture set") {
    FixtureSet fixtures(std::string(ORDSPEC_REPO_DIR) + "/fixtures");
    EvalConfig cfg;
    cfg.fixtures = &fixtures;

    ExprPtr e = parse_expr("load(\"M10\")");
    ElementSet m10 = evaluate_concrete(e, cfg);
    CHECK(m10.size() == 720);
    OrderSpectrum s = evaluate_spectrum(e, cfg);
    CHECK(rho(s, 8) == Rational(31, 45));

    // mixed expressions take fixtures too
    CHECK(evaluate_spectrum(parse_expr("load(\"M10\") * C(2)"), cfg).group_order() == 1440);

    EvalConfig bare;
    CHECK_THROWS_AS(evaluate_concrete(e, bare), value_error);
    CHECK_THROWS_AS(evaluate_spectrum(e, bare), value_error);
}
