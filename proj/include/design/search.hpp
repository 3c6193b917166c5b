#pragma once

#include "design/dd.hpp"
#include "design/grid.hpp"
#include "design/orbit_condition.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace design {

// Pluggable symmetry-reduction rules. The initial block is always prescribed;
// first_extension_in_row1 demands that the smallest added point lie in row 1;
// col0_at_least_col1 is the stricter normalization that the searched runs
// left relaxed, available for speed but off by default.
struct SearchRules {
    bool fixed_initial_block = true;
    bool first_extension_in_row1 = true;
    bool col0_at_least_col1 = false;
};

struct SearchConfig {
    GridGeometry geom;
    const PermGroup* group = nullptr;      // stabilizer checks on full blocks
    const PairOrbitTable* table = nullptr; // pair-orbit lookup
    const OrbitTargets* targets = nullptr; // per-orbit tallies
    int k = 0;
    InterceptVector row_vector;
    InterceptVector column_vector;
    std::vector<Point> initial_block; // ascending; occupies the unique 2-row
    SearchRules rules;
};

struct SearchStats {
    std::uint64_t candidates = 0; // extension attempts
    std::uint64_t nodes = 0;      // partial blocks accepted
    std::uint64_t prune_symmetry = 0;
    std::uint64_t prune_row = 0;
    std::uint64_t prune_column = 0;
    std::uint64_t prune_orbit = 0;
    std::uint64_t full_vector_rejects = 0;
    std::uint64_t full_orbit_rejects = 0;
    std::uint64_t full_stabilizer_rejects = 0;
    std::uint64_t found = 0;

    void merge(const SearchStats& other);
    std::string to_text() const; // stable key:value layout
};

struct SearchResult {
    std::vector<std::vector<Point>> blocks; // lexicographic order
    SearchStats stats;
};

// Depth-first lexicographic extension of the initial block. A point is
// appended only if the partial row, partial column, symmetry and partial
// orbit conditions all pass; emitted blocks of size k additionally satisfy
// both exact intercept vectors and the full orbit condition. With jobs > 1
// the tree is split at the first extension point; output is identical to the
// single-threaded run.
SearchResult search(const SearchConfig& config, int jobs = 1);

using BlockSink = std::function<void(const std::vector<Point>&)>;

struct CensusResult {
    std::uint64_t count = 0;
    SearchStats stats;
};

// Counts the q-subsets reachable under the partial row/column/symmetry
// rules, applying the partial orbit condition iff with_orbit_condition.
// A sink, when given, receives every counted block (sequential execution).
CensusResult census(const SearchConfig& config, int depth, bool with_orbit_condition,
                    int jobs = 1, const BlockSink* sink = nullptr);

// The dedicated first-family enumerator on the 41x11 grid: blocks are
// {(0,0),(0,1)} plus four 2-columns chosen among columns 2..10, the lowest
// carrying the row pair {1,40} and the remaining three carrying distinct
// ordered choices from the other 19 pairs {e, 41-e}. Every candidate is
// checked against the full orbit condition.
struct Set1Result {
    std::vector<std::vector<Point>> blocks;
    std::uint64_t candidates = 0;
};

Set1Result search_set1(const PermGroup& group, const PairOrbitTable& table,
                       const OrbitTargets& targets);

} // namespace design
