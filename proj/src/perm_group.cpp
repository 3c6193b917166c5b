#include "design/perm_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace design {

namespace {

struct ImageHash {
    std::size_t operator()(const std::vector<Point>& v) const {
        std::uint64_t h = 1469598103934665603ULL; // FNV-1a over the image words
        for (Point x : v) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace

bool PermGroup::contains(const Permutation& p) const {
    for (const Permutation& e : elements)
        if (e == p) return true;
    return false;
}

PermGroup enumerate_group(const std::vector<Permutation>& generators, std::uint64_t cap) {
    if (generators.empty())
        throw std::invalid_argument("enumerate_group: no generators");
    Point degree = generators.front().degree();
    for (const Permutation& g : generators)
        if (g.degree() != degree)
            throw std::invalid_argument("enumerate_group: generator degree mismatch");

    PermGroup group;
    group.degree = degree;
    group.generators = generators;

    std::unordered_set<std::vector<Point>, ImageHash> seen;
    group.elements.push_back(Permutation::identity(degree));
    seen.insert(group.elements.back().images());

    for (std::size_t head = 0; head < group.elements.size(); ++head) {
        for (const Permutation& g : generators) {
            Permutation next = compose(group.elements[head], g);
            if (seen.insert(next.images()).second) {
                group.elements.push_back(std::move(next));
                if (group.elements.size() > cap)
                    throw std::runtime_error("enumerate_group: cap exceeded");
            }
        }
    }
    return group;
}

std::vector<std::vector<Point>> orbits_on_points(const PermGroup& group) {
    std::vector<std::vector<Point>> orbits;
    std::vector<bool> seen(group.degree + 1, false);
    for (Point p = 1; p <= group.degree; ++p) {
        if (seen[p]) continue;
        std::vector<Point> orbit;
        for (const Permutation& e : group.elements) {
            Point q = e.apply(p);
            if (!seen[q]) {
                seen[q] = true;
                orbit.push_back(q);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

bool is_transitive(const PermGroup& group) {
    return orbits_on_points(group).size() == 1;
}

std::uint64_t setwise_stabilizer_order(const PermGroup& group,
                                       const std::vector<Point>& block) {
    std::vector<bool> in_block(group.degree + 1, false);
    for (Point p : block) {
        if (p < 1 || p > group.degree)
            throw std::invalid_argument("setwise_stabilizer_order: point out of range");
        in_block[p] = true;
    }
    std::uint64_t count = 0;
    for (const Permutation& e : group.elements) {
        bool fixes = true;
        for (Point p : block) {
            if (!in_block[e.apply(p)]) {
                fixes = false;
                break;
            }
        }
        if (fixes) ++count;
    }
    return count;
}

bool partition_is_invariant(const PermGroup& group,
                            const std::vector<std::vector<Point>>& partition) {
    std::vector<int> class_of(group.degree + 1, -1);
    std::size_t covered = 0;
    for (std::size_t c = 0; c < partition.size(); ++c) {
        if (partition[c].empty())
            throw std::invalid_argument("partition_is_invariant: empty class");
        for (Point p : partition[c]) {
            if (p < 1 || p > group.degree || class_of[p] != -1)
                throw std::invalid_argument("partition_is_invariant: not a partition");
            class_of[p] = static_cast<int>(c);
            ++covered;
        }
    }
    if (covered != group.degree)
        throw std::invalid_argument("partition_is_invariant: classes do not cover the point set");

    for (const Permutation& g : group.generators) {
        for (const auto& cls : partition) {
            int target = class_of[g.apply(cls.front())];
            for (Point p : cls)
                if (class_of[g.apply(p)] != target) return false;
            // image lands inside one class; equal sizes force image = class
            if (partition[static_cast<std::size_t>(target)].size() != cls.size()) return false;
        }
    }
    return true;
}

} // namespace design
