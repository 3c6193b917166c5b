#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "design/grid.hpp"
#include "design/pair_orbits.hpp"
#include "design/perm_group.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

using namespace design;

TEST_CASE("a 5-cycle generates the cyclic group of order 5") {
    PermGroup g = enumerate_group({parse_cycles("(1 2 3 4 5)", 5)});
    CHECK(g.order() == 5);
    CHECK(is_transitive(g));
}

TEST_CASE("enumeration cap throws on oversized closures") {
    std::vector<Permutation> gens{parse_cycles("(1 2)", 6), parse_cycles("(1 2 3 4 5 6)", 6)};
    CHECK_THROWS(enumerate_group(gens, 100)); // Sym(6) has 720 elements
    CHECK(enumerate_group(gens, 720).order() == 720);
}

TEST_CASE("primitive roots are found by order checks") {
    CHECK(smallest_primitive_root(41) == 6);
    CHECK(smallest_primitive_root(11) == 2);
    CHECK(multiplicative_order(6, 41) == 40);
    CHECK(multiplicative_order(2, 11) == 10);
    // the derived multipliers of order 5 and the row involution
    CHECK(multiplicative_order(10, 41) == 5);  // 6^8 mod 41
    CHECK((1 * 6 * 6) % 41 == 36);
    unsigned a20 = 1;
    for (int i = 0; i < 20; ++i) a20 = (a20 * 6) % 41;
    CHECK(a20 == 40); // the involution e -> -e
}

TEST_CASE("grid generator orders") {
    GridGeometry geom{kRows451, kCols451};
    Permutation alpha = row_addition(geom);
    Permutation acc = alpha;
    for (int i = 1; i < 41; ++i) acc = compose(acc, alpha);
    CHECK(acc.is_identity());

    // a primitive root as a row multiplier has order 40; b^2 has order 5
    PermGroup rowmul = enumerate_group({row_multiplication(geom, 6)});
    CHECK(rowmul.order() == 40);
    PermGroup colmul = enumerate_group({column_multiplication(geom, (2 * 2) % 11)});
    CHECK(colmul.order() == 5);

    CHECK_THROWS(row_multiplication(GridGeometry{4, 3}, 2)); // 4 is not prime
    CHECK_THROWS(column_multiplication(geom, 11));           // 0 mod 11
}

TEST_CASE("row translations have the columns as orbits") {
    GridGeometry geom{kRows451, kCols451};
    PermGroup rows = enumerate_group({row_addition(geom)});
    auto orbits = orbits_on_points(rows);
    REQUIRE(orbits.size() == 11);
    auto columns = geom.column_partition();
    for (std::size_t f = 0; f < 11; ++f) CHECK(orbits[f] == columns[f]);
}

TEST_CASE("searched groups have the right orders and act transitively") {
    PermGroup g2 = build_parameter_set_group(2, 1);
    CHECK(g2.order() == 2255);
    CHECK(is_transitive(g2));

    PermGroup g1 = build_parameter_set_group(1, 1);
    CHECK(g1.order() == 4510);
    CHECK(is_transitive(g1));
}

TEST_CASE("the four second-family groups are distinct permutation groups") {
    std::set<std::set<std::vector<Point>>> element_sets;
    for (int i = 1; i <= 4; ++i) {
        PermGroup g = build_parameter_set_group(2, i);
        std::set<std::vector<Point>> elems;
        for (const Permutation& e : g.elements) elems.insert(e.images());
        element_sets.insert(std::move(elems));
    }
    CHECK(element_sets.size() == 4);
}

TEST_CASE("grid partitions are invariant, a scrambled one is not") {
    GridGeometry geom{kRows451, kCols451};
    PermGroup g = build_parameter_set_group(2, 1);
    CHECK(partition_is_invariant(g, geom.column_partition()));
    CHECK(partition_is_invariant(g, geom.row_partition()));

    // swap two points across columns: no longer a union of grid classes
    auto scrambled = geom.column_partition();
    std::swap(scrambled[0][0], scrambled[1][0]);
    std::sort(scrambled[0].begin(), scrambled[0].end());
    std::sort(scrambled[1].begin(), scrambled[1].end());
    CHECK_FALSE(partition_is_invariant(g, scrambled));

    auto malformed = geom.column_partition();
    malformed.pop_back();
    CHECK_THROWS(partition_is_invariant(g, malformed));
}

TEST_CASE("setwise stabilizers") {
    PermGroup g = build_parameter_set_group(2, 2);
    std::vector<Point> all(g.degree);
    for (Point p = 1; p <= g.degree; ++p) all[p - 1] = p;
    CHECK(setwise_stabilizer_order(g, all) == g.order());

    // Lagrange on a handful of random subsets
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::set<Point> block;
        while (block.size() < 10)
            block.insert(static_cast<Point>(rng() % g.degree + 1));
        std::vector<Point> b(block.begin(), block.end());
        CHECK(g.order() % setwise_stabilizer_order(g, b) == 0);
    }
}

TEST_CASE("pair orbits: counts and sizes for both families") {
    PermGroup g2 = build_parameter_set_group(2, 1);
    PairOrbitTable t2 = orbits_on_pairs(g2);
    CHECK(t2.orbit_count() == 45);
    for (std::uint32_t s : t2.orbit_sizes()) CHECK(s == 2255);

    PermGroup g1 = build_parameter_set_group(1, 1);
    PairOrbitTable t1 = orbits_on_pairs(g1);
    CHECK(t1.orbit_count() == 25);
    int small = 0, large = 0;
    for (std::uint32_t s : t1.orbit_sizes()) {
        if (s == 2255) ++small;
        else if (s == 4510) ++large;
    }
    CHECK(small == 5);
    CHECK(large == 20);
}

TEST_CASE("pair orbits of the trivial group are singletons") {
    PermGroup trivial = enumerate_group({Permutation::identity(8)});
    PairOrbitTable t = orbits_on_pairs(trivial);
    CHECK(t.orbit_count() == 28);
    for (std::uint32_t s : t.orbit_sizes()) CHECK(s == 1);
}

TEST_CASE("pair orbit invariance and orbit-stabilizer spot checks") {
    PermGroup g = build_parameter_set_group(2, 3);
    PairOrbitTable table = orbits_on_pairs(g);

    // invariance under every generator, on 100 random pairs
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Point r = static_cast<Point>(rng() % g.degree + 1);
        Point s = r;
        while (s == r) s = static_cast<Point>(rng() % g.degree + 1);
        for (const Permutation& gen : g.generators)
            CHECK(table.orbit_of(gen.apply(r), gen.apply(s)) == table.orbit_of(r, s));
        // |pair orbit| * |pair stabilizer| = |G|
        std::uint64_t stab = setwise_stabilizer_order(g, {r, s});
        std::uint64_t orbit_size = table.orbit_sizes()[table.orbit_of(r, s) - 1];
        CHECK(orbit_size * stab == g.order());
    }
}

TEST_CASE("orbit table determinism and file round-trip") {
    PermGroup g = enumerate_group({parse_cycles("(1 2 3 4 5 6 7)", 7)});
    PairOrbitTable a = orbits_on_pairs(g);
    PairOrbitTable b = orbits_on_pairs(g);
    CHECK(a == b);

    std::stringstream buffer;
    write_orbit_table(buffer, a);
    PairOrbitTable c = read_orbit_table(buffer);
    CHECK(a == c);
}
