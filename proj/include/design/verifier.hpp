#pragma once

#include "design/perm_group.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace design {

// A block set over points 1..v with constant block size k.
struct Design {
    Point v = 0;
    int k = 0;
    std::vector<std::vector<Point>> blocks; // each sorted ascending, all distinct
};

// Orbit of a block under the group: the developed design.
Design develop(const PermGroup& group, const std::vector<Point>& block);

struct PartitionCheck {
    std::string name;
    bool invariant = false;
    bool inner_pairs_constant = false;
    std::int64_t inner_pairs = -1; // per line, when constant
    bool outer_pairs_constant = false;
    std::int64_t outer_pairs = -1; // inner + outer = C(k,2)
};

// Everything is checked exhaustively and reported as plain values; a failed
// verification is a normal outcome, not an error. The pair counting here is
// deliberately separate from the search engine's tally machinery so the two
// can catch each other's bugs.
struct VerificationReport {
    Point v = 0;
    int k = 0;
    std::uint64_t b = 0;
    bool is_design = false;              // every pair covered exactly once
    bool lambda_constant = false;
    std::int64_t lambda = -1;            // when constant
    bool replication_constant = false;
    std::int64_t r = -1;                 // lines per point, when constant
    bool identities_hold = false;        // b = v(v-1)/k(k-1), bk = vr, v-1 = r(k-1)
    bool is_projective_plane = false;    // design with b = v
    std::optional<bool> line_transitive; // set when a group was supplied
    std::vector<PartitionCheck> partitions;

    std::string to_text() const; // stable key:value layout
};

VerificationReport verify(const Design& design, const PermGroup* group = nullptr,
                          const std::vector<std::vector<std::vector<Point>>>* partitions = nullptr,
                          const std::vector<std::string>* partition_names = nullptr);

// Independent recheck of the partial orbit condition on a block: every pair's
// orbit is recomputed from the group elements alone (no orbit table), pairs
// are grouped by the lexicographically least image, and each group's tally is
// compared against |orbit| / b_hat.
bool recheck_partial_orbit_condition(const PermGroup& group, std::uint64_t b_hat,
                                     const std::vector<Point>& block);

// Block-list text format: one block per line, ascending 1-based ids,
// space-separated.
void write_block_list(std::ostream& out, const std::vector<std::vector<Point>>& blocks);
std::vector<std::vector<Point>> read_block_list(std::istream& in);
void write_block_list_file(const std::string& path,
                           const std::vector<std::vector<Point>>& blocks);
std::vector<std::vector<Point>> read_block_list_file(const std::string& path);

} // namespace design
