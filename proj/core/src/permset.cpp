#include "ordspec/permset.hpp"

#include <cstring>

#include "ordspec/errors.hpp"

namespace ordspec {

namespace {

constexpr std::uint64_t fnv_offset = 1469598103934665603ull;
constexpr std::uint64_t fnv_prime = 1099511628211ull;

std::uint64_t fnv1a(const std::uint8_t* data, std::size_t n) {
    std::uint64_t h = fnv_offset;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= fnv_prime;
    }
    return h;
}

} // namespace

std::uint64_t ElementSet::hash_bytes(const std::uint8_t* data) const {
    return fnv1a(data, entry_bytes());
}

std::uint16_t ElementSet::point_at(const std::uint8_t* data, unsigned i) const {
    if (width_ == 1)
        return data[i];
    return static_cast<std::uint16_t>(data[2 * i] | (data[2 * i + 1] << 8));
}

void ElementSet::pack_into(const Permutation& p, std::uint8_t* out) const {
    const auto& im = p.images0();
    if (width_ == 1) {
        for (unsigned i = 0; i < degree_; ++i)
            out[i] = static_cast<std::uint8_t>(im[i]);
    } else {
        for (unsigned i = 0; i < degree_; ++i) {
            out[2 * i] = static_cast<std::uint8_t>(im[i] & 0xff);
            out[2 * i + 1] = static_cast<std::uint8_t>(im[i] >> 8);
        }
    }
}

void ElementSet::rehash(std::uint64_t capacity) {
    table_.assign(capacity, 0);
    table_mask_ = capacity - 1;
    for (std::uint64_t i = 0; i < count_; ++i) {
        std::uint64_t slot = hash_bytes(entry(i)) & table_mask_;
        while (table_[slot] != 0)
            slot = (slot + 1) & table_mask_;
        table_[slot] = static_cast<std::uint32_t>(i + 1);
    }
}

std::uint64_t ElementSet::insert_packed(const std::uint8_t* data, bool& inserted) {
    if ((count_ + 1) * 5 > table_.size() * 3)
        rehash(table_.size() * 2);
    const std::size_t eb = entry_bytes();
    std::uint64_t slot = fnv1a(data, eb) & table_mask_;
    while (table_[slot] != 0) {
        std::uint64_t idx = table_[slot] - 1;
        if (std::memcmp(entry(idx), data, eb) == 0) {
            inserted = false;
            return idx;
        }
        slot = (slot + 1) & table_mask_;
    }
    arena_.insert(arena_.end(), data, data + eb);
    table_[slot] = static_cast<std::uint32_t>(++count_);
    inserted = true;
    return count_ - 1;
}

Permutation ElementSet::element(std::uint64_t i) const {
    if (i >= count_)
        throw value_error("element index out of range");
    const std::uint8_t* data = entry(i);
    std::vector<std::uint16_t> im(degree_);
    for (unsigned k = 0; k < degree_; ++k)
        im[k] = point_at(data, k);
    return Permutation::from_images(std::move(im));
}

std::span<const std::uint8_t> ElementSet::encoded(std::uint64_t i) const {
    if (i >= count_)
        throw value_error("element index out of range");
    return {entry(i), entry_bytes()};
}

bool ElementSet::contains(const Permutation& p) const {
    return index_of(p) >= 0;
}

std::int64_t ElementSet::index_of(const Permutation& p) const {
    if (count_ == 0 || p.degree() != degree_)
        return -1;
    std::vector<std::uint8_t> buf(entry_bytes());
    pack_into(p, buf.data());
    return index_of_packed(buf.data());
}

std::int64_t ElementSet::index_of_packed(const std::uint8_t* data) const {
    if (count_ == 0)
        return -1;
    const std::size_t eb = entry_bytes();
    std::uint64_t slot = fnv1a(data, eb) & table_mask_;
    while (table_[slot] != 0) {
        std::uint64_t idx = table_[slot] - 1;
        if (std::memcmp(entry(idx), data, eb) == 0)
            return static_cast<std::int64_t>(idx);
        slot = (slot + 1) & table_mask_;
    }
    return -1;
}

bool ElementSet::contains_generators_of(const ElementSet& sub) const {
    for (const auto& g : sub.generators())
        if (!contains(g))
            return false;
    return true;
}

ElementSet ElementSet::generate(std::vector<Permutation> gens, std::uint64_t cap,
                                std::string label) {
    if (cap == 0 || cap > 4'000'000'000ull)
        throw value_error("element cap out of range");
    unsigned degree = gens.empty() ? 1 : gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != degree)
            throw value_error("generator degree mismatch in '" + label + "'");
    if (degree == 0)
        throw value_error("degree must be positive");

    ElementSet s;
    s.degree_ = degree;
    s.width_ = degree <= 256 ? 1 : 2;
    s.gens_ = std::move(gens);
    s.label_ = std::move(label);
    s.rehash(1 << 10);

    std::vector<std::uint8_t> buf(s.entry_bytes());
    s.pack_into(Permutation::identity(degree), buf.data());
    bool inserted = false;
    s.insert_packed(buf.data(), inserted);

    /* Breadth-first over the right Cayley graph. Generators have finite
     * order, so right-multiplication alone closes the set into a group. */
    for (std::uint64_t cursor = 0; cursor < s.count_; ++cursor) {
        for (const auto& g : s.gens_) {
            const auto& gi = g.images0();
            /* entry pointer recomputed per generator: the arena may
             * have been reallocated by an insertion. */
            const std::uint8_t* src = s.entry(cursor);
            if (s.width_ == 1) {
                for (unsigned i = 0; i < degree; ++i)
                    buf[i] = static_cast<std::uint8_t>(gi[src[i]]);
            } else {
                for (unsigned i = 0; i < degree; ++i) {
                    std::uint16_t x = static_cast<std::uint16_t>(src[2 * i] | (src[2 * i + 1] << 8));
                    std::uint16_t y = gi[x];
                    buf[2 * i] = static_cast<std::uint8_t>(y & 0xff);
                    buf[2 * i + 1] = static_cast<std::uint8_t>(y >> 8);
                }
            }
            s.insert_packed(buf.data(), inserted);
            if (inserted && s.count_ > cap)
                throw cap_exceeded(cap, s.label_.empty() ? "permutation group" : s.label_);
        }
    }
    return s;
}

ElementSet ElementSet::from_elements(unsigned degree, const std::vector<Permutation>& elements,
                                     std::string label, std::uint64_t cap) {
    if (degree == 0 || degree > 65535)
        throw value_error("degree out of range");
    ElementSet s;
    s.degree_ = degree;
    s.width_ = degree <= 256 ? 1 : 2;
    s.label_ = std::move(label);
    s.rehash(1 << 10);
    std::vector<std::uint8_t> buf(s.entry_bytes());
    bool inserted = false;
    bool has_identity = false;
    for (const auto& p : elements) {
        if (p.degree() != degree)
            throw value_error("element degree mismatch in '" + s.label_ + "'");
        s.pack_into(p, buf.data());
        s.insert_packed(buf.data(), inserted);
        if (inserted && s.count_ > cap)
            throw cap_exceeded(cap, s.label_.empty() ? "element list" : s.label_);
        if (p.is_identity())
            has_identity = true;
    }
    if (!has_identity)
        throw value_error("element list for '" + s.label_ + "' lacks the identity");

    /* Greedy generating subset: walk the arena and keep elements not
     * yet generated by the kept ones. */
    std::vector<Permutation> gens;
    ElementSet closure = generate({Permutation::identity(degree)}, cap);
    for (std::uint64_t i = 0; i < s.count_; ++i) {
        Permutation p = s.element(i);
        if (!closure.contains(p)) {
            gens.push_back(p);
            closure = generate(gens, cap);
        }
    }
    if (closure.size() != s.count_)
        throw value_error("element list for '" + s.label_ + "' is not closed under products");
    s.gens_ = std::move(gens);
    return s;
}

} // namespace ordspec
