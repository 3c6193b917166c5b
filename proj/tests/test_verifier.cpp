#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "design/grid.hpp"
#include "design/singer.hpp"
#include "design/verifier.hpp"

#include <sstream>

using namespace design;

TEST_CASE("the Fano plane verifies as a 2-(7,3,1) design") {
    PlaneModel fano = build_plane(2);
    Design d{7, 3, fano.lines};
    PermGroup singer_group = enumerate_group({fano.singer});
    VerificationReport report = verify(d, &singer_group);
    CHECK(report.is_design);
    CHECK(report.lambda == 1);
    CHECK(report.b == 7);
    CHECK(report.r == 3);
    CHECK(report.identities_hold);
    CHECK(report.is_projective_plane);
    REQUIRE(report.line_transitive.has_value());
    CHECK(*report.line_transitive);
}

TEST_CASE("deleting a block breaks the coverage") {
    PlaneModel fano = build_plane(2);
    Design d{7, 3, fano.lines};
    d.blocks.pop_back();
    VerificationReport report = verify(d);
    CHECK_FALSE(report.is_design);
    CHECK_FALSE(report.lambda_constant);
}

TEST_CASE("develop: orbit sizes") {
    PlaneModel plane = build_plane(7);
    PermGroup singer_group = enumerate_group({plane.singer});

    Design developed = develop(singer_group, plane.lines.front());
    CHECK(developed.blocks.size() == 57);

    // a block fixed by the whole group develops to itself
    PermGroup trivial = enumerate_group({Permutation::identity(10)});
    Design fixed = develop(trivial, {1, 2, 3});
    CHECK(fixed.blocks.size() == 1);
}

TEST_CASE("a 10-subset with trivial stabilizer develops to 2255 blocks") {
    PermGroup group = build_parameter_set_group(2, 1);
    std::vector<Point> block{1, 42, 87, 130, 172, 214, 260, 305, 351, 400};
    REQUIRE(setwise_stabilizer_order(group, block) == 1);
    Design developed = develop(group, block);
    CHECK(developed.blocks.size() == group.order());
}

TEST_CASE("inner pairs per line against the Singer partitions") {
    PlaneModel plane = build_plane(7);
    PermGroup singer_group = enumerate_group({plane.singer});
    std::vector<std::vector<std::vector<Point>>> partitions{singer_partition(plane, 3),
                                                            singer_partition(plane, 19)};
    std::vector<std::string> names{"three", "nineteen"};
    Design d{57, 8, plane.lines};
    VerificationReport report = verify(d, &singer_group, &partitions, &names);
    REQUIRE(report.partitions.size() == 2);
    CHECK(report.partitions[0].invariant);
    CHECK(report.partitions[1].invariant);
    CHECK(report.partitions[0].inner_pairs_constant);
    CHECK(report.partitions[1].inner_pairs_constant);
    // x from the inner-pair equations: 9 on 3 classes of 19, 1 on 19 classes of 3
    CHECK(report.partitions[0].inner_pairs == 9);
    CHECK(report.partitions[1].inner_pairs == 1);
    // inner + outer = C(8,2), with outer counted independently
    CHECK(report.partitions[0].outer_pairs_constant);
    CHECK(report.partitions[1].outer_pairs_constant);
    CHECK(report.partitions[0].inner_pairs + report.partitions[0].outer_pairs == 28);
    CHECK(report.partitions[1].inner_pairs + report.partitions[1].outer_pairs == 28);
}

TEST_CASE("report text is stable") {
    PlaneModel fano = build_plane(2);
    Design d{7, 3, fano.lines};
    VerificationReport report = verify(d);
    std::string text = report.to_text();
    CHECK(text.find("v: 7") != std::string::npos);
    CHECK(text.find("is_design: true") != std::string::npos);
    CHECK(text.find("lambda: 1") != std::string::npos);
    CHECK(verify(d).to_text() == text);
}

TEST_CASE("independent orbit recheck accepts plane lines and rejects bad blocks") {
    PlaneModel plane = build_plane(7);
    PermGroup singer_group = enumerate_group({plane.singer});
    // b_hat for a 2-(57,8,1) design is 57
    for (int i = 0; i < 5; ++i)
        CHECK(recheck_partial_orbit_condition(singer_group, 57, plane.lines[i]));

    // two lines' union restricted to 8 points that double a pair orbit:
    // take a line and replace its last point by the Singer image of another,
    // duplicating some difference with high probability; verify a handmade
    // violation instead: a block holding two pairs of the same orbit
    std::vector<Point> block = plane.lines.front();
    // the Singer image of the whole line is another line; mixing half of each
    // concentrates repeated differences
    std::vector<Point> image;
    for (Point p : block) image.push_back(plane.singer.apply(p));
    std::vector<Point> mixed(block.begin(), block.begin() + 4);
    for (std::size_t i = 0; i < 4; ++i) mixed.push_back(image[i]);
    std::sort(mixed.begin(), mixed.end());
    mixed.erase(std::unique(mixed.begin(), mixed.end()), mixed.end());
    if (mixed.size() == 8) CHECK_FALSE(recheck_partial_orbit_condition(singer_group, 57, mixed));
}

TEST_CASE("block list round-trips") {
    std::vector<std::vector<Point>> blocks{{1, 2, 5}, {3, 4, 9}, {2, 6, 7}};
    std::stringstream buffer;
    write_block_list(buffer, blocks);
    CHECK(read_block_list(buffer) == blocks);
}
