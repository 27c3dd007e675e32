#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ordspec/expr.hpp"
#include "ordspec/numbers.hpp"

namespace ordspec {

enum class CheckMethod { Formula, Enumeration, Both };

/* An exact expectation: a rational to equal, or a strict/weak bound. */
struct Expected {
    enum class Relation { Equal, Greater, GreaterEqual, Less, LessEqual };
    Relation relation = Relation::Equal;
    Rational value;

    bool satisfied_by(const Rational& r) const;
    std::string to_text() const;
    static Expected parse(const std::string& text);
};

/* One suite line: `id | group-expression | k | expected | method`. */
struct CheckSpec {
    std::string id;
    std::string group_text;
    Nat k;
    Expected expected;
    CheckMethod method = CheckMethod::Both;
};

struct CheckResult {
    std::string id;
    std::string group;
    Nat order;      // group order; from the manifest for skipped checks
    Nat k;
    Rational value; // meaningless when skipped
    std::string expected_text;
    std::string method; // "formula" | "enumeration" | "both" | "skipped"
    bool pass = true;
    bool skipped = false;
    std::uint64_t millis = 0;

    bool operator==(const CheckResult&) const = default;
};

std::vector<CheckSpec> parse_suite(std::istream& in);
std::vector<CheckSpec> read_suite(const std::string& path);

/* Runs the checks in suite order. method=formula evaluates the
 * spectrum-level closed forms, method=enumeration builds the group,
 * method=both requires the two results to be identical rationals.
 * Checks that run over the cap, or whose fixture is declared but not
 * shipped, come back skipped (pass stays true). */
std::vector<CheckResult> run_suite(const std::vector<CheckSpec>& suite, const EvalConfig& config);

bool all_passed(const std::vector<CheckResult>& results);

/* Reports. JSON is an array of {id, group, order, k, rho, expected,
 * method, pass, millis} with order as a decimal string and rho as
 * "num/den" ("-" when skipped); CSV carries the same columns; text is
 * one aligned PASS/FAIL/SKIP line per check. */
void write_report_json(std::ostream& out, const std::vector<CheckResult>& results);
void write_report_csv(std::ostream& out, const std::vector<CheckResult>& results);
void write_report_text(std::ostream& out, const std::vector<CheckResult>& results);

/* Inverse of write_report_json. */
std::vector<CheckResult> parse_report_json(std::istream& in);

} // namespace ordspec
