#pragma once

#include <cstdint>
#include <vector>

#include "ordspec/permset.hpp"
#include "ordspec/spectrum.hpp"

namespace ordspec {

/* Order spectrum by walking every element of the enumerated group.
 * With threads > 1 the arena is split into ranges and the partial
 * histograms are summed, so the result does not depend on timing. */
OrderSpectrum spectrum_of(const ElementSet& g, unsigned threads = 1);

/* Order histogram of the right coset n * rep. Built unchecked: a coset
 * other than n itself has no identity, so group-spectrum invariants do
 * not apply. The histogram total is |n|. */
OrderSpectrum coset_spectrum(const ElementSet& n, const Permutation& rep);

/* Spectrum of the quotient g/n. Requires n to be a normal subgroup of
 * g; the order of a coset is the least power of a representative that
 * falls back into n. */
OrderSpectrum quotient_spectrum(const ElementSet& g, const ElementSet& n);

ElementSet center(const ElementSet& g);

/* Elements of g whose conjugation maps h onto itself. */
ElementSet normalizer(const ElementSet& g, const ElementSet& h);

/* A Sylow p-subgroup, grown by adjoining p-elements that normalize the
 * current p-subgroup. Scanning the arena in order makes the choice
 * deterministic. Verifies the final order equals the p-part of |g|. */
ElementSet sylow_subgroup(const ElementSet& g, std::uint64_t p);

/* Elements fixing the given 0-based point. */
ElementSet stabilizer(const ElementSet& g, std::uint16_t point);

/* All subgroups of index 2, in a deterministic order. They are the
 * preimages of the hyperplanes of g / <squares>. */
std::vector<ElementSet> index2_subgroups(const ElementSet& g);

bool is_subgroup(const ElementSet& g, const ElementSet& h);
bool is_normal(const ElementSet& g, const ElementSet& n);
Nat subgroup_index(const ElementSet& g, const ElementSet& h);

/* Orbit of a 0-based point under the given permutations, in
 * breadth-first discovery order. */
std::vector<std::uint16_t> orbit(const std::vector<Permutation>& gens, std::uint16_t point);
bool is_transitive(const std::vector<Permutation>& gens, unsigned degree);

} // namespace ordspec
