#pragma once

#include "design/pair_orbits.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace design {

// Per-orbit block targets from the orbit theorem: a starter block for a
// 2-(v,k,1) design must contain exactly b_i = |O_i| / b_hat pairs from orbit
// O_i, where b_hat = v(v-1)/(k(k-1)), and its set-wise stabilizer must have
// order |G| / b_hat.
struct OrbitTargets {
    std::uint64_t v = 0;
    int k = 0;
    std::uint64_t b_hat = 0;
    std::vector<std::uint32_t> targets; // targets[i] for orbit i+1
    std::uint64_t group_order = 0;
    std::uint64_t required_stabilizer_order = 0;
};

// Non-integral quotients mean no design can exist for this group; that is a
// normal outcome, reported as a value rather than thrown.
struct TargetsResult {
    bool feasible = false;
    std::string reason;
    OrbitTargets targets;
};

TargetsResult make_targets(std::uint64_t v, int k, const PairOrbitTable& table,
                           std::uint64_t group_order);

// Per-orbit tally of the pairs inside a growing block, with O(1) pair lookup
// through the orbit table. add() is monotone pruning: the first tally to
// exceed its target rejects the point, all partial increments are reverted,
// and any superset would be rejected as well.
class PairTally {
public:
    PairTally() = default;
    PairTally(const PairOrbitTable* table, const OrbitTargets* targets)
        : table_(table), targets_(targets), counts_(table->orbit_count() + 1, 0) {}

    // Tallies {new_point, p} for every p in block. Returns false (and leaves
    // the tally unchanged) as soon as some orbit would exceed its target.
    bool add(Point new_point, std::span<const Point> block);

    // Reverts a successful add() of new_point against the same block.
    void remove(Point new_point, std::span<const Point> block);

    // True iff every tally equals its target exactly.
    bool complete() const;

    const std::vector<std::uint32_t>& counts() const { return counts_; }

    // Tally built from scratch; used to cross-check the incremental path.
    static std::vector<std::uint32_t> from_scratch(const PairOrbitTable& table,
                                                   std::span<const Point> block);

private:
    const PairOrbitTable* table_ = nullptr;
    const OrbitTargets* targets_ = nullptr;
    std::vector<std::uint32_t> counts_; // counts_[orbit], entry 0 unused
};

// Full orbit condition on a k-subset: exact per-orbit tallies plus the
// stabilizer-order requirement.
bool full_orbit_condition(const std::vector<Point>& block, const PairOrbitTable& table,
                          const OrbitTargets& targets, const PermGroup& group);

} // namespace design
