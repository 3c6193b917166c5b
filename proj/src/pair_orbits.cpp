#include "design/pair_orbits.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace design {

PairOrbitTable::PairOrbitTable(Point degree, std::vector<std::uint16_t> orbit_of,
                               std::vector<std::uint32_t> orbit_sizes)
    : degree_(degree), orbit_of_(std::move(orbit_of)), orbit_sizes_(std::move(orbit_sizes)) {
    std::size_t pairs = static_cast<std::size_t>(degree_) * (degree_ - 1) / 2;
    if (orbit_of_.size() != pairs)
        throw std::invalid_argument("PairOrbitTable: wrong table size");
    std::uint64_t total = 0;
    for (std::uint32_t s : orbit_sizes_) total += s;
    if (total != pairs)
        throw std::invalid_argument("PairOrbitTable: orbit sizes do not sum to the pair count");
}

PairOrbitTable orbits_on_pairs(const PermGroup& group) {
    const Point n = group.degree;
    std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<std::uint16_t> orbit_of(pairs, 0);
    std::vector<std::uint32_t> sizes;

    auto tri = [n](Point r, Point s) {
        return static_cast<std::size_t>(r - 1) * (2 * n - r) / 2 + (s - r - 1);
    };

    for (Point r = 1; r < n; ++r) {
        for (Point s = static_cast<Point>(r + 1); s <= n; ++s) {
            if (orbit_of[tri(r, s)] != 0) continue;
            if (sizes.size() == std::numeric_limits<std::uint16_t>::max())
                throw std::runtime_error("orbits_on_pairs: more than 65535 orbits");
            auto index = static_cast<std::uint16_t>(sizes.size() + 1);
            std::uint32_t size = 0;
            for (const Permutation& e : group.elements) {
                Point a = e.apply(r), b = e.apply(s);
                if (a > b) std::swap(a, b);
                std::uint16_t& slot = orbit_of[tri(a, b)];
                if (slot == 0) {
                    slot = index;
                    ++size;
                }
            }
            sizes.push_back(size);
        }
    }
    return PairOrbitTable(n, std::move(orbit_of), std::move(sizes));
}

void write_orbit_table(std::ostream& out, const PairOrbitTable& table) {
    out << "# degree=" << table.degree() << " orbits=" << table.orbit_count() << '\n';
    const Point n = table.degree();
    for (Point r = 1; r < n; ++r) {
        for (Point s = static_cast<Point>(r + 1); s <= n; ++s) {
            if (s > r + 1) out << ' ';
            out << table.orbit_of(r, s);
        }
        out << '\n';
    }
}

PairOrbitTable read_orbit_table(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw std::runtime_error("read_orbit_table: empty input");
    unsigned long degree = 0, orbits = 0;
    if (std::sscanf(header.c_str(), "# degree=%lu orbits=%lu", &degree, &orbits) != 2)
        throw std::runtime_error("read_orbit_table: bad header line");
    if (degree < 2 || degree > std::numeric_limits<Point>::max())
        throw std::runtime_error("read_orbit_table: degree out of range");

    const Point n = static_cast<Point>(degree);
    std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<std::uint16_t> orbit_of;
    orbit_of.reserve(pairs);
    std::vector<std::uint32_t> sizes(orbits, 0);
    unsigned long value = 0;
    while (orbit_of.size() < pairs && in >> value) {
        if (value < 1 || value > orbits)
            throw std::runtime_error("read_orbit_table: orbit number out of range");
        orbit_of.push_back(static_cast<std::uint16_t>(value));
        ++sizes[value - 1];
    }
    if (orbit_of.size() != pairs)
        throw std::runtime_error("read_orbit_table: truncated table");
    return PairOrbitTable(n, std::move(orbit_of), std::move(sizes));
}

void write_orbit_table_file(const std::string& path, const PairOrbitTable& table) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    write_orbit_table(out, table);
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

PairOrbitTable read_orbit_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open: " + path);
    return read_orbit_table(in);
}

} // namespace design
