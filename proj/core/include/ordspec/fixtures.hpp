#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ordspec/numbers.hpp"
#include "ordspec/perm.hpp"
#include "ordspec/permset.hpp"

namespace ordspec {

struct GeneratorFile {
    unsigned degree = 0;
    std::vector<Permutation> generators;
    std::string label; // file name stem
};

/* Generator file format (UTF-8 text):
 *   # comment
 *   degree N
 *   gen (1,2,3)(4,5)
 *   gen [2,3,1]
 * The first non-comment line must be the degree line; every generator
 * must stay within 1..N. */
GeneratorFile parse_generator_file(std::istream& in, const std::string& label);
GeneratorFile read_generator_file(const std::string& path);

struct ManifestEntry {
    std::string label;
    std::string path; // relative to the manifest directory; "-" = not shipped
    Nat expected_order;
};

/* Manifest lines: `label, path, expected_order`; `#` comments. */
std::vector<ManifestEntry> parse_manifest(std::istream& in);
std::vector<ManifestEntry> read_manifest(const std::string& path);

/* A fixture directory with an optional `manifest` file. Names resolve
 * first as manifest labels, then as paths under the directory, then as
 * plain paths. Closures of manifest-resolved fixtures are checked
 * against the recorded order. */
class FixtureSet {
  public:
    FixtureSet() = default;
    explicit FixtureSet(const std::string& directory);

    const std::string& directory() const { return directory_; }
    const std::vector<ManifestEntry>& entries() const { return entries_; }
    const ManifestEntry* find(const std::string& label) const;

    ElementSet load(const std::string& name, std::uint64_t cap = default_element_cap) const;

  private:
    std::string directory_;
    std::vector<ManifestEntry> entries_;
};

} // namespace ordspec
