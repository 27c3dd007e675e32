#include "ordspec/census.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ordspec/errors.hpp"
#include "ordspec/group_ops.hpp"

namespace ordspec {

namespace {

std::string strip(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

bool Expected::satisfied_by(const Rational& r) const {
    switch (relation) {
    case Relation::Equal: return r == value;
    case Relation::Greater: return r > value;
    case Relation::GreaterEqual: return r >= value;
    case Relation::Less: return r < value;
    case Relation::LessEqual: return r <= value;
    }
    return false;
}

std::string Expected::to_text() const {
    switch (relation) {
    case Relation::Equal: return format_rational(value);
    case Relation::Greater: return "> " + format_rational(value);
    case Relation::GreaterEqual: return ">= " + format_rational(value);
    case Relation::Less: return "< " + format_rational(value);
    case Relation::LessEqual: return "<= " + format_rational(value);
    }
    return "?";
}

Expected Expected::parse(const std::string& text) {
    const std::string t = strip(text);
    Expected e;
    std::size_t skip = 0;
    if (t.rfind(">=", 0) == 0) {
        e.relation = Relation::GreaterEqual;
        skip = 2;
    } else if (t.rfind("<=", 0) == 0) {
        e.relation = Relation::LessEqual;
        skip = 2;
    } else if (!t.empty() && t[0] == '>') {
        e.relation = Relation::Greater;
        skip = 1;
    } else if (!t.empty() && t[0] == '<') {
        e.relation = Relation::Less;
        skip = 1;
    }
    e.value = parse_rational(strip(t.substr(skip)));
    return e;
}

std::vector<CheckSpec> parse_suite(std::istream& in) {
    std::vector<CheckSpec> out;
    std::set<std::string> ids;
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line;
        const auto hash = body.find('#');
        if (hash != std::string::npos)
            body = body.substr(0, hash);
        body = strip(body);
        if (body.empty())
            continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const auto bar = body.find('|', start);
            fields.push_back(strip(bar == std::string::npos ? body.substr(start)
                                                            : body.substr(start, bar - start)));
            if (bar == std::string::npos)
                break;
            start = bar + 1;
        }
        if (fields.size() != 5)
            throw io_error("suite line " + std::to_string(lineno) +
                           ": expected `id | group | k | expected | method`");
        CheckSpec spec;
        spec.id = fields[0];
        spec.group_text = fields[1];
        if (spec.id.empty() || !ids.insert(spec.id).second)
            throw io_error("suite line " + std::to_string(lineno) + ": missing or duplicate id");
        if (mpz_set_str(spec.k.get_mpz_t(), fields[2].c_str(), 10) != 0 || spec.k < 1)
            throw io_error("suite line " + std::to_string(lineno) + ": bad k");
        try {
            spec.expected = Expected::parse(fields[3]);
        } catch (const error& e) {
            throw io_error("suite line " + std::to_string(lineno) + ": " + e.what());
        }
        if (fields[4] == "formula")
            spec.method = CheckMethod::Formula;
        else if (fields[4] == "enumeration")
            spec.method = CheckMethod::Enumeration;
        else if (fields[4] == "both")
            spec.method = CheckMethod::Both;
        else
            throw io_error("suite line " + std::to_string(lineno) + ": bad method `" + fields[4] +
                           "`");
        out.push_back(std::move(spec));
    }
    return out;
}

std::vector<CheckSpec> read_suite(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open suite " + path);
    return parse_suite(in);
}

namespace {

const char* method_name(CheckMethod m) {
    switch (m) {
    case CheckMethod::Formula: return "formula";
    case CheckMethod::Enumeration: return "enumeration";
    case CheckMethod::Both: return "both";
    }
    return "?";
}

/* Manifest order for a skipped `load("...")` check, if determinable. */
Nat skipped_order(const ExprPtr& expr, const EvalConfig& config) {
    if (expr && expr->kind == GroupExpr::Kind::Load && config.fixtures) {
        if (const ManifestEntry* e = config.fixtures->find(expr->load_name))
            return e->expected_order;
    }
    return Nat(0);
}

} // namespace

std::vector<CheckResult> run_suite(const std::vector<CheckSpec>& suite, const EvalConfig& config) {
    std::vector<CheckResult> out;
    out.reserve(suite.size());
    for (const CheckSpec& spec : suite) {
        CheckResult r;
        r.id = spec.id;
        r.group = spec.group_text;
        r.k = spec.k;
        r.expected_text = spec.expected.to_text();
        r.method = method_name(spec.method);
        const auto t0 = std::chrono::steady_clock::now();
        ExprPtr expr;
        try {
            expr = parse_expr(spec.group_text);
            OrderSpectrum spectrum =
                spec.method == CheckMethod::Enumeration || spec.method == CheckMethod::Both
                    ? spectrum_of(evaluate_concrete(expr, config), config.threads)
                    : evaluate_spectrum(expr, config);
            r.value = rho(spectrum, spec.k);
            r.order = spectrum.group_order();
            r.pass = spec.expected.satisfied_by(r.value);
            if (spec.method == CheckMethod::Both) {
                const Rational by_formula = rho(evaluate_spectrum(expr, config), spec.k);
                if (by_formula != r.value)
                    r.pass = false;
            }
        } catch (const cap_exceeded&) {
            r.skipped = true;
            r.method = "skipped";
            r.order = skipped_order(expr, config);
        } catch (const fixture_unavailable&) {
            r.skipped = true;
            r.method = "skipped";
            r.order = skipped_order(expr, config);
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.millis = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
        out.push_back(std::move(r));
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return true;
}

namespace {

std::string rho_text(const CheckResult& r) {
    return r.skipped ? "-" : format_rational(r.value);
}

nlohmann::json to_json(const CheckResult& r) {
    return nlohmann::json{{"id", r.id},
                          {"group", r.group},
                          {"order", r.order.get_str()},
                          {"k", to_u64(r.k)},
                          {"rho", rho_text(r)},
                          {"expected", r.expected_text},
                          {"method", r.method},
                          {"pass", r.pass},
                          {"millis", r.millis}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace

void write_report_json(std::ostream& out, const std::vector<CheckResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results)
        arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
}

void write_report_csv(std::ostream& out, const std::vector<CheckResult>& results) {
    out << "id,group,order,k,rho,expected,method,pass,millis\n";
    for (const auto& r : results) {
        out << csv_field(r.id) << ',' << csv_field(r.group) << ',' << r.order.get_str() << ','
            << r.k.get_str() << ',' << rho_text(r) << ',' << csv_field(r.expected_text) << ','
            << r.method << ',' << (r.pass ? "true" : "false") << ',' << r.millis << "\n";
    }
}

void write_report_text(std::ostream& out, const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        const char* tag = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
        out << tag << "  " << std::left << std::setw(24) << r.id << "  " << std::setw(32)
            << r.group << "  k=" << r.k.get_str() << "  rho=" << rho_text(r)
            << "  expected " << r.expected_text << "  [" << r.method << ", " << r.millis
            << " ms]\n";
    }
    std::size_t failed = 0, skipped = 0;
    for (const auto& r : results) {
        failed += !r.pass;
        skipped += r.skipped;
    }
    out << results.size() << " checks, " << (results.size() - failed - skipped) << " passed, "
        << failed << " failed, " << skipped << " skipped\n";
}

std::vector<CheckResult> parse_report_json(std::istream& in) {
    nlohmann::json arr;
    try {
        in >> arr;
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("bad report JSON: ") + e.what());
    }
    if (!arr.is_array())
        throw io_error("bad report JSON: expected an array");
    std::vector<CheckResult> out;
    try {
        for (const auto& j : arr) {
            CheckResult r;
            r.id = j.at("id").get<std::string>();
            r.group = j.at("group").get<std::string>();
            if (mpz_set_str(r.order.get_mpz_t(), j.at("order").get<std::string>().c_str(), 10) !=
                0)
                throw io_error("bad report JSON: bad order");
            r.k = Nat(static_cast<unsigned long>(j.at("k").get<std::uint64_t>()));
            const std::string rho_s = j.at("rho").get<std::string>();
            r.method = j.at("method").get<std::string>();
            r.skipped = r.method == "skipped";
            if (!r.skipped)
                r.value = parse_rational(rho_s);
            r.expected_text = j.at("expected").get<std::string>();
            r.pass = j.at("pass").get<bool>();
            r.millis = j.at("millis").get<std::uint64_t>();
            out.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("bad report JSON: ") + e.what());
    }
    return out;
}

} // namespace ordspec
