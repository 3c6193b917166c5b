#include "design/orbit_condition.hpp"

#include <sstream>

namespace design {

TargetsResult make_targets(std::uint64_t v, int k, const PairOrbitTable& table,
                           std::uint64_t group_order) {
    TargetsResult result;
    if (table.degree() != v) {
        result.reason = "orbit table degree does not match v";
        return result;
    }
    std::uint64_t num = v * (v - 1);
    std::uint64_t den = static_cast<std::uint64_t>(k) * (k - 1);
    if (num % den != 0) {
        std::ostringstream msg;
        msg << "b_hat = " << v << "*" << (v - 1) << "/" << den << " is not an integer";
        result.reason = msg.str();
        return result;
    }
    std::uint64_t b_hat = num / den;
    if (group_order % b_hat != 0) {
        std::ostringstream msg;
        msg << "group order " << group_order << " not divisible by b_hat = " << b_hat;
        result.reason = msg.str();
        return result;
    }

    OrbitTargets targets;
    targets.v = v;
    targets.k = k;
    targets.b_hat = b_hat;
    targets.group_order = group_order;
    targets.required_stabilizer_order = group_order / b_hat;
    targets.targets.reserve(table.orbit_count());
    for (std::size_t i = 0; i < table.orbit_count(); ++i) {
        std::uint64_t size = table.orbit_sizes()[i];
        if (size % b_hat != 0) {
            std::ostringstream msg;
            msg << "orbit " << (i + 1) << " has size " << size
                << ", not divisible by b_hat = " << b_hat;
            result.reason = msg.str();
            return result;
        }
        targets.targets.push_back(static_cast<std::uint32_t>(size / b_hat));
    }
    result.feasible = true;
    result.targets = std::move(targets);
    return result;
}

bool PairTally::add(Point new_point, std::span<const Point> block) {
    for (std::size_t i = 0; i < block.size(); ++i) {
        std::uint16_t orbit = table_->orbit_of(new_point, block[i]);
        if (++counts_[orbit] > targets_->targets[orbit - 1]) {
            --counts_[orbit];
            for (std::size_t j = 0; j < i; ++j)
                --counts_[table_->orbit_of(new_point, block[j])];
            return false;
        }
    }
    return true;
}

void PairTally::remove(Point new_point, std::span<const Point> block) {
    for (Point p : block) --counts_[table_->orbit_of(new_point, p)];
}

bool PairTally::complete() const {
    for (std::size_t i = 0; i < targets_->targets.size(); ++i)
        if (counts_[i + 1] != targets_->targets[i]) return false;
    return true;
}

std::vector<std::uint32_t> PairTally::from_scratch(const PairOrbitTable& table,
                                                   std::span<const Point> block) {
    std::vector<std::uint32_t> counts(table.orbit_count() + 1, 0);
    for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j)
            ++counts[table.orbit_of(block[i], block[j])];
    return counts;
}

bool full_orbit_condition(const std::vector<Point>& block, const PairOrbitTable& table,
                          const OrbitTargets& targets, const PermGroup& group) {
    std::vector<std::uint32_t> counts = PairTally::from_scratch(table, block);
    for (std::size_t i = 0; i < targets.targets.size(); ++i)
        if (counts[i + 1] != targets.targets[i]) return false;
    return setwise_stabilizer_order(group, block) == targets.required_stabilizer_order;
}

} // namespace design
