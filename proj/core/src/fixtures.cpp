#include "ordspec/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordspec/errors.hpp"

namespace fs = std::filesystem;

namespace ordspec {

namespace {

std::string strip(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

/* Drop a trailing `# ...` comment, then trim. */
std::string strip_comment(const std::string& line) {
    const auto h = line.find('#');
    return strip(h == std::string::npos ? line : line.substr(0, h));
}

} // namespace

GeneratorFile parse_generator_file(std::istream& in, const std::string& label) {
    GeneratorFile out;
    out.label = label;
    std::string line;
    bool have_degree = false;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = strip_comment(line);
        if (body.empty())
            continue;
        std::istringstream words(body);
        std::string keyword;
        words >> keyword;
        if (!have_degree) {
            if (keyword != "degree")
                throw io_error(label + ":" + std::to_string(lineno) +
                               ": expected `degree N` before any generators");
            long n = -1;
            words >> n;
            if (!words || n < 1 || n > 65535)
                throw io_error(label + ":" + std::to_string(lineno) + ": bad degree");
            out.degree = static_cast<unsigned>(n);
            have_degree = true;
            continue;
        }
        if (keyword != "gen")
            throw io_error(label + ":" + std::to_string(lineno) +
                           ": expected `gen <permutation>`");
        std::string rest;
        std::getline(words, rest);
        Permutation p;
        try {
            p = parse_perm(strip(rest), out.degree);
        } catch (const error& e) {
            throw io_error(label + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (p.degree() != out.degree)
            throw io_error(label + ":" + std::to_string(lineno) +
                           ": generator uses points beyond the declared degree");
        out.generators.push_back(std::move(p));
    }
    if (!have_degree)
        throw io_error(label + ": missing `degree N` line");
    if (out.generators.empty())
        throw io_error(label + ": no generators");
    return out;
}

GeneratorFile read_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open generator file " + path);
    return parse_generator_file(in, fs::path(path).stem().string());
}

std::vector<ManifestEntry> parse_manifest(std::istream& in) {
    std::vector<ManifestEntry> out;
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = strip_comment(line);
        if (body.empty())
            continue;
        const auto c1 = body.find(',');
        const auto c2 = c1 == std::string::npos ? std::string::npos : body.find(',', c1 + 1);
        if (c2 == std::string::npos)
            throw io_error("manifest line " + std::to_string(lineno) +
                           ": expected `label, path, order`");
        ManifestEntry e;
        e.label = strip(body.substr(0, c1));
        e.path = strip(body.substr(c1 + 1, c2 - c1 - 1));
        const std::string order = strip(body.substr(c2 + 1));
        if (e.label.empty() || e.path.empty() || order.empty() ||
            mpz_set_str(e.expected_order.get_mpz_t(), order.c_str(), 10) != 0 ||
            e.expected_order < 1)
            throw io_error("manifest line " + std::to_string(lineno) + ": bad entry");
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<ManifestEntry> read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open manifest " + path);
    return parse_manifest(in);
}

FixtureSet::FixtureSet(const std::string& directory) : directory_(directory) {
    const fs::path m = fs::path(directory) / "manifest";
    if (fs::exists(m))
        entries_ = read_manifest(m.string());
}

const ManifestEntry* FixtureSet::find(const std::string& label) const {
    for (const auto& e : entries_)
        if (e.label == label)
            return &e;
    return nullptr;
}

ElementSet FixtureSet::load(const std::string& name, std::uint64_t cap) const {
    if (const ManifestEntry* e = find(name)) {
        if (e->path == "-")
            throw fixture_unavailable(name);
        const GeneratorFile gf = read_generator_file((fs::path(directory_) / e->path).string());
        ElementSet g = ElementSet::generate(gf.generators, cap, e->label);
        if (Nat(static_cast<unsigned long>(g.size())) != e->expected_order)
            throw error("fixture " + name + " closed to order " + std::to_string(g.size()) +
                        ", manifest says " + e->expected_order.get_str());
        return g;
    }
    fs::path p = name;
    if (!fs::exists(p) && !directory_.empty() && fs::exists(fs::path(directory_) / name))
        p = fs::path(directory_) / name;
    const GeneratorFile gf = read_generator_file(p.string());
    return ElementSet::generate(gf.generators, cap, gf.label);
}

} // namespace ordspec
