#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "design/grid.hpp"
#include "design/orbit_condition.hpp"
#include "design/pair_orbits.hpp"

#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

using namespace design;

namespace {

struct Fixture {
    PermGroup group;
    PairOrbitTable table;
    OrbitTargets targets;
};

const Fixture& set2_fixture() {
    static Fixture f = [] {
        Fixture fx;
        fx.group = build_parameter_set_group(2, 1);
        fx.table = orbits_on_pairs(fx.group);
        TargetsResult r = make_targets(451, 10, fx.table, fx.group.order());
        if (!r.feasible) throw std::logic_error("fixture: targets infeasible");
        fx.targets = r.targets;
        return fx;
    }();
    return f;
}

std::vector<Point> random_subset(std::mt19937& rng, Point degree, std::size_t size) {
    std::set<Point> s;
    while (s.size() < size) s.insert(static_cast<Point>(rng() % degree + 1));
    return {s.begin(), s.end()};
}

} // namespace

TEST_CASE("targets for the second family: b_hat 2255, all ones, stabilizer 1") {
    const Fixture& fx = set2_fixture();
    CHECK(fx.targets.b_hat == 2255);
    CHECK(fx.targets.required_stabilizer_order == 1);
    CHECK(fx.targets.targets.size() == 45);
    for (std::uint32_t t : fx.targets.targets) CHECK(t == 1);
    std::uint64_t total = std::accumulate(fx.targets.targets.begin(), fx.targets.targets.end(),
                                          std::uint64_t{0});
    CHECK(total == 45); // C(10,2)
}

TEST_CASE("targets for the first family: ones and twos, stabilizer 2") {
    PermGroup group = build_parameter_set_group(1, 1);
    PairOrbitTable table = orbits_on_pairs(group);
    TargetsResult r = make_targets(451, 10, table, group.order());
    REQUIRE(r.feasible);
    CHECK(r.targets.b_hat == 2255);
    CHECK(r.targets.required_stabilizer_order == 2);
    int ones = 0, twos = 0;
    for (std::size_t i = 0; i < r.targets.targets.size(); ++i) {
        if (r.targets.targets[i] == 1) {
            ++ones;
            CHECK(table.orbit_sizes()[i] == 2255);
        } else if (r.targets.targets[i] == 2) {
            ++twos;
            CHECK(table.orbit_sizes()[i] == 4510);
        }
    }
    CHECK(ones == 5);
    CHECK(twos == 20);
    std::uint64_t total = std::accumulate(r.targets.targets.begin(), r.targets.targets.end(),
                                          std::uint64_t{0});
    CHECK(total == 45);
}

TEST_CASE("non-integral quotients are reported as infeasible, not thrown") {
    // trivial group on 8 points: all pair orbits size 1, b_hat = 8*7/(3*2) not integral
    PermGroup trivial = enumerate_group({Permutation::identity(8)});
    PairOrbitTable table = orbits_on_pairs(trivial);
    TargetsResult r = make_targets(8, 3, table, 1);
    CHECK_FALSE(r.feasible);
    CHECK_FALSE(r.reason.empty());

    // v=7, k=3: b_hat = 7, but orbit sizes 1 are not divisible by 7
    PermGroup trivial7 = enumerate_group({Permutation::identity(7)});
    TargetsResult r7 = make_targets(7, 3, orbits_on_pairs(trivial7), 1);
    CHECK_FALSE(r7.feasible);
}

TEST_CASE("empty block accepts any point; thresholds reject") {
    const Fixture& fx = set2_fixture();
    PairTally tally(&fx.table, &fx.targets);
    std::vector<Point> block;

    CHECK(tally.add(17, block)); // no pairs yet
    block.push_back(17);

    // find two points making a pair in the same orbit as {17, q}
    Point q = 42;
    CHECK(tally.add(q, block));
    block.push_back(q);
    std::uint16_t orbit = fx.table.orbit_of(17, q);

    // apply a group element to get another pair from the same orbit
    const Permutation& g = fx.group.elements[5];
    Point r = g.apply(17), s = g.apply(q);
    REQUIRE(fx.table.orbit_of(r, s) == orbit);
    if (r != 17 && r != q && s != 17 && s != q) {
        CHECK(tally.add(r, block));
        block.push_back(r);
        // adding s now creates a second pair in `orbit` (target is 1)
        CHECK_FALSE(tally.add(s, block));
        // failed add leaves the tally unchanged
        auto reference = PairTally::from_scratch(fx.table, block);
        CHECK(tally.counts() == reference);
    }
}

TEST_CASE("incremental tallies equal batch tallies on 1000 random 6-subsets") {
    const Fixture& fx = set2_fixture();
    std::mt19937 rng(20240111);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Point> subset = random_subset(rng, 451, 6);
        PairTally tally(&fx.table, &fx.targets);
        std::vector<Point> partial;
        bool ok = true;
        for (Point p : subset) {
            if (!tally.add(p, partial)) { ok = false; break; }
            partial.push_back(p);
        }
        auto reference = PairTally::from_scratch(fx.table, partial);
        if (ok) {
            CHECK(tally.counts() == reference);
        } else {
            // rejection must coincide with a genuine target violation
            auto full = PairTally::from_scratch(fx.table, subset);
            bool violated = false;
            for (std::size_t i = 0; i < fx.targets.targets.size(); ++i)
                if (full[i + 1] > fx.targets.targets[i]) violated = true;
            CHECK(violated);
            CHECK(tally.counts() == reference); // partial increments reverted
        }
    }
}

TEST_CASE("rejection is monotone along random chains") {
    const Fixture& fx = set2_fixture();
    std::mt19937 rng(99);
    int rejected_chains = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Point> subset = random_subset(rng, 451, 8);
        // grow the chain; once a prefix is rejected, every extension must be too
        for (std::size_t cut = 2; cut < subset.size(); ++cut) {
            std::vector<Point> prefix(subset.begin(), subset.begin() + cut);
            auto prefix_counts = PairTally::from_scratch(fx.table, prefix);
            bool prefix_bad = false;
            for (std::size_t i = 0; i < fx.targets.targets.size(); ++i)
                if (prefix_counts[i + 1] > fx.targets.targets[i]) prefix_bad = true;
            if (!prefix_bad) continue;
            ++rejected_chains;
            auto full_counts = PairTally::from_scratch(fx.table, subset);
            bool full_bad = false;
            for (std::size_t i = 0; i < fx.targets.targets.size(); ++i)
                if (full_counts[i + 1] > fx.targets.targets[i]) full_bad = true;
            CHECK(full_bad);
            break;
        }
    }
    CHECK(rejected_chains > 0); // the check must have exercised real rejections
}

TEST_CASE("a column-confined 10-subset fails the full condition badly") {
    const Fixture& fx = set2_fixture();
    GridGeometry geom{kRows451, kCols451};
    std::vector<Point> column_block;
    for (Point e = 0; e < 10; ++e) column_block.push_back(geom.id(e, 0));
    auto counts = PairTally::from_scratch(fx.table, column_block);
    bool violated = false;
    for (std::size_t i = 0; i < fx.targets.targets.size(); ++i)
        if (counts[i + 1] > fx.targets.targets[i]) violated = true;
    CHECK(violated);
    CHECK_FALSE(full_orbit_condition(column_block, fx.table, fx.targets, fx.group));
}

TEST_CASE("matching tallies with the wrong stabilizer order still fail the full condition") {
    // Z_5 x Z_3 on the 5x3 grid; the pair {1,6} is its whole tally budget
    GridGeometry geom{5, 3};
    PermGroup group = enumerate_group({row_addition(geom), column_addition(geom)});
    PairOrbitTable table = orbits_on_pairs(group);
    OrbitTargets targets;
    targets.v = 15;
    targets.k = 2;
    targets.b_hat = 1;
    targets.group_order = group.order();
    targets.targets.assign(table.orbit_count(), 0);
    targets.targets[table.orbit_of(1, 6) - 1] = 1;

    targets.required_stabilizer_order = 1; // the true stabilizer of {1,6}
    CHECK(full_orbit_condition({1, 6}, table, targets, group));
    targets.required_stabilizer_order = 3; // tallies unchanged, stabilizer wrong
    CHECK_FALSE(full_orbit_condition({1, 6}, table, targets, group));
}

TEST_CASE("orbit table from file behaves identically to the in-memory table") {
    const Fixture& fx = set2_fixture();
    std::stringstream buffer;
    write_orbit_table(buffer, fx.table);
    PairOrbitTable reloaded = read_orbit_table(buffer);
    REQUIRE(reloaded == fx.table);

    TargetsResult r = make_targets(451, 10, reloaded, fx.group.order());
    REQUIRE(r.feasible);
    CHECK(r.targets.targets == fx.targets.targets);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Point> subset = random_subset(rng, 451, 6);
        CHECK(PairTally::from_scratch(reloaded, subset) ==
              PairTally::from_scratch(fx.table, subset));
    }
}
