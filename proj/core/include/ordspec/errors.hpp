#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordspec {

/* All library failures derive from error so callers can map them to a
 * process exit code in one place. */
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Malformed input: bad expression text, bad permutation syntax, invalid
 * arguments to a constructor or formula. */
struct value_error : error {
    using error::error;
};

/* Enumeration would exceed the active element cap. */
struct cap_exceeded : error {
    cap_exceeded(std::uint64_t cap, const std::string& what_group)
        : error("element cap " + std::to_string(cap) + " exceeded while generating " + what_group),
          cap(cap) {}
    std::uint64_t cap;
};

/* Missing or unreadable file, malformed fixture/suite/manifest data. */
struct io_error : error {
    using error::error;
};

/* A manifest declares the fixture but does not ship generators for it
 * (path "-"). Verification treats the affected checks as skipped. */
struct fixture_unavailable : error {
    explicit fixture_unavailable(const std::string& label)
        : error("fixture '" + label + "' is declared but not shipped"), label(label) {}
    std::string label;
};

} // namespace ordspec
