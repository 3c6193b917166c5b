#pragma once

#include "design/perm.hpp"

#include <cstdint>
#include <vector>

namespace design {

// A fully enumerated permutation group. Every group handled here is small
// enough (<= 180400 elements on <= 451 points) that the complete element
// list is the simplest structure to compute with and to check claims against.
struct PermGroup {
    Point degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements; // elements[0] is the identity

    std::uint64_t order() const { return elements.size(); }
    bool contains(const Permutation& p) const;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Breadth-first closure of the generators under composition, starting from
// the identity. Element order is deterministic: discovery order with
// generators applied in their listed order. Throws if the closure would
// exceed `cap` elements.
PermGroup enumerate_group(const std::vector<Permutation>& generators,
                          std::uint64_t cap = kDefaultEnumerationCap);

// Orbit partition of the point set, each orbit sorted ascending, orbits
// ordered by their smallest point.
std::vector<std::vector<Point>> orbits_on_points(const PermGroup& group);

bool is_transitive(const PermGroup& group);

// Number of elements g with block^g = block (set-wise).
std::uint64_t setwise_stabilizer_order(const PermGroup& group,
                                       const std::vector<Point>& block);

// True iff the image of every class under every generator is again a class.
// Invariance under the generators implies invariance under the whole group:
// the set of permutations preserving the partition is closed under
// composition and inverse, so it contains the generated group.
bool partition_is_invariant(const PermGroup& group,
                            const std::vector<std::vector<Point>>& partition);

} // namespace design
