#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ordspec/perm.hpp"

namespace ordspec {

inline constexpr std::uint64_t default_element_cap = 20'000'000;

/* Fully enumerated permutation group (or plain element list).
 *
 * Elements live in one arena of fixed-width packed image vectors:
 * one byte per point when the degree fits in 256, two otherwise.
 * The packed bytes double as the canonical encoding, so memcmp
 * gives a total order and the arena index gives a deterministic
 * discovery order (breadth-first over the right Cayley graph,
 * identity first).
 */
class ElementSet {
public:
    /* Closure of `gens` under products. Throws cap_exceeded once more
     * than `cap` elements appear. */
    static ElementSet generate(std::vector<Permutation> gens,
                               std::uint64_t cap = default_element_cap,
                               std::string label = "");

    /* Wraps an explicit element list (deduplicated, arena in list
     * order). Derives a small generating set greedily and verifies
     * the list is product-closed. */
    static ElementSet from_elements(unsigned degree, const std::vector<Permutation>& elements,
                                    std::string label = "",
                                    std::uint64_t cap = default_element_cap);

    unsigned degree() const { return degree_; }
    unsigned width() const { return width_; }
    std::uint64_t size() const { return count_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    std::size_t entry_bytes() const { return static_cast<std::size_t>(degree_) * width_; }

    Permutation element(std::uint64_t i) const;
    std::span<const std::uint8_t> encoded(std::uint64_t i) const;

    bool contains(const Permutation& p) const;
    std::int64_t index_of(const Permutation& p) const; // -1 when absent
    std::int64_t index_of_packed(const std::uint8_t* data) const;
    bool contains_generators_of(const ElementSet& sub) const;

private:
    ElementSet() = default;

    const std::uint8_t* entry(std::uint64_t i) const { return arena_.data() + i * entry_bytes(); }
    std::uint64_t hash_bytes(const std::uint8_t* data) const;
    std::uint16_t point_at(const std::uint8_t* data, unsigned i) const;
    void pack_into(const Permutation& p, std::uint8_t* out) const;
    void rehash(std::uint64_t capacity);
    std::uint64_t insert_packed(const std::uint8_t* data, bool& inserted);

    unsigned degree_ = 0;
    unsigned width_ = 1;
    std::uint64_t count_ = 0;
    std::vector<std::uint8_t> arena_;
    std::vector<std::uint32_t> table_; // open addressing; slot stores index + 1
    std::uint64_t table_mask_ = 0;
    std::vector<Permutation> gens_;
    std::string label_;
};

} // namespace ordspec
