#pragma once

#include "design/perm_group.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace design {

// Orbit index for every unordered point pair {r,s}, 1 <= r < s <= degree.
// Orbits are numbered 1..orbit_count() in order of their lexicographically
// smallest pair, which makes the table identical across runs and machines.
class PairOrbitTable {
public:
    PairOrbitTable() = default;
    PairOrbitTable(Point degree, std::vector<std::uint16_t> orbit_of,
                   std::vector<std::uint32_t> orbit_sizes);

    Point degree() const { return degree_; }
    std::size_t pair_count() const { return orbit_of_.size(); }
    std::size_t orbit_count() const { return orbit_sizes_.size(); }
    const std::vector<std::uint32_t>& orbit_sizes() const { return orbit_sizes_; }

    // 1-based orbit number of the pair {r,s}; r != s, order irrelevant.
    std::uint16_t orbit_of(Point r, Point s) const {
        if (r > s) std::swap(r, s);
        return orbit_of_[tri_index(r, s)];
    }

    bool operator==(const PairOrbitTable& other) const {
        return degree_ == other.degree_ && orbit_of_ == other.orbit_of_ &&
               orbit_sizes_ == other.orbit_sizes_;
    }

    std::size_t tri_index(Point r, Point s) const {
        // pairs (r, r+1..degree) are stored consecutively, row r first
        return static_cast<std::size_t>(r - 1) * (2 * degree_ - r) / 2 + (s - r - 1);
    }

private:
    Point degree_ = 0;
    std::vector<std::uint16_t> orbit_of_;
    std::vector<std::uint32_t> orbit_sizes_;
};

// Scans pairs lexicographically; each time an unassigned pair is met, its
// full orbit is computed by applying every group element and recorded.
PairOrbitTable orbits_on_pairs(const PermGroup& group);

// Text format: a header line "# degree=<n> orbits=<m>", then line r
// (r = 1..degree-1) holding the orbit numbers of {r,r+1} ... {r,degree}.
void write_orbit_table(std::ostream& out, const PairOrbitTable& table);
PairOrbitTable read_orbit_table(std::istream& in);

void write_orbit_table_file(const std::string& path, const PairOrbitTable& table);
PairOrbitTable read_orbit_table_file(const std::string& path);

} // namespace design
