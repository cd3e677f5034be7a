#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fanoq/reconstruction.hpp"

using namespace fanoq;

namespace {

DecoratedQuiver make(std::vector<Label> labels, std::initializer_list<Int> entries) {
    const auto n = static_cast<Eigen::Index>(labels.size());
    IntMatrix e(n, n);
    auto it = entries.begin();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) e(i, j) = *it++;
    return DecoratedQuiver(std::move(labels), std::move(e));
}

DecoratedQuiver cyclic_triangle(std::array<Label, 3> labels, std::array<Int, 3> arrows) {
    return make({labels[0], labels[1], labels[2]},
                {0, arrows[0], -arrows[2], -arrows[0], 0, arrows[1], arrows[2], -arrows[1], 0});
}

DecoratedQuiver q113() { return cyclic_triangle({{{1, 1}, {1, 1}, {1, 3}}}, {5, 5, 5}); }

// Fig-style non-polygonal quiver: the mutated P(1,1,6) quiver.
DecoratedQuiver q_fig4() { return cyclic_triangle({{{2, 1}, {1, 1}, {1, 1}}}, {4, 8, 4}); }

}  // namespace

TEST_CASE("triangle reconstruction of the P(1,1,3) quiver") {
    ReconstructionReport report = reconstruct_triangle(q113());
    REQUIRE(report.success);
    FanoPolygon expected({Vec2(0, -1), Vec2(-1, -1), Vec2(1, 4)});
    CHECK(polygons_equivalent(*report.polygon, expected, EquivalenceGroup::GL));
    CHECK(report.x_choice == 0);
    CHECK(normalized_volume(*report.polygon) == 5);
}

TEST_CASE("triangle reconstruction rejects the mutated P(1,1,6) quiver at the volume gap") {
    ReconstructionReport report = reconstruct_triangle(q_fig4());
    REQUIRE_FALSE(report.success);
    CHECK(report.failed_condition == "C6");
    CHECK(expected_volume_gap(q_fig4()) == std::pair<Int, Int>{4, 8});
}

TEST_CASE("triangle reconstruction of the projective plane quiver") {
    DecoratedQuiver p2 = cyclic_triangle({{{1, 1}, {1, 1}, {1, 1}}}, {3, 3, 3});
    ReconstructionReport report = reconstruct_triangle(p2);
    REQUIRE(report.success);
    CHECK(normalized_volume(*report.polygon) == 3);
    FanoPolygon expected({Vec2(1, 0), Vec2(0, 1), Vec2(-1, -1)});
    CHECK(polygons_equivalent(*report.polygon, expected, EquivalenceGroup::GL));
}

TEST_CASE("expected volume of the one-parameter families") {
    for (Int a = 1; a <= 8; ++a) {
        DecoratedQuiver q = cyclic_triangle({{{1, 1}, {1, 1}, {1, 1}}}, {a, a, a});
        CHECK(expected_volume_gap(q) == std::pair<Int, Int>{3, a});
        CHECK(reconstruct_triangle(q).success == (a == 3));
        CHECK(reconstruct_general(q).success == (a == 3));
    }
    for (Int b = 1; b <= 8; ++b) {
        DecoratedQuiver q = cyclic_triangle({{{1, 1}, {2, 3}, {1, 1}}}, {b, b, 2 * b});
        CHECK(expected_volume_gap(q) == std::pair<Int, Int>{8, 2 * b});
        CHECK(reconstruct_triangle(q).success == (b == 4));
        CHECK(reconstruct_general(q).success == (b == 4));
    }
}

TEST_CASE("expected volume of the P(1,1,3) quiver") {
    CHECK(expected_volume_gap(q113()) == std::pair<Int, Int>{5, 5});
    CHECK_THROWS_AS(expected_volume_gap(make({{1, 1}, {1, 1}}, {0, 1, -1, 0})),
                    std::invalid_argument);
}

TEST_CASE("reconstruction outcome is nomination independent") {
    for (const DecoratedQuiver& q :
         {q113(), q_fig4(), cyclic_triangle({{{1, 1}, {1, 1}, {1, 1}}}, {4, 4, 4})}) {
        ReconstructionReport base = reconstruct_triangle(q, 0);
        for (int nominate = 1; nominate < 3; ++nominate)
            CHECK(reconstruct_triangle(q, nominate).success == base.success);
    }
}

TEST_CASE("general reconstruction rejects small or unbalanced input") {
    DecoratedQuiver two = make({{0, 1}, {0, 2}}, {0, 3, -3, 0});
    CHECK_THROWS_AS(reconstruct_general(two), std::invalid_argument);
    DecoratedQuiver unbalanced = make({{1, 1}, {1, 1}, {1, 1}}, {0, 1, 0, -1, 0, 1, 0, -1, 0});
    CHECK_THROWS_AS(reconstruct_general(unbalanced), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_triangle(unbalanced), std::invalid_argument);
    // not a block quiver: two mergeable vertices
    DecoratedQuiver mergeable = make({{1, 1}, {1, 1}, {1, 1}, {1, 1}},
                                     {0, 2, 2, -4, -2, 0, 0, 2, -2, 0, 0, 2, 4, -2, -2, 0});
    CHECK_THROWS_AS(reconstruct_general(mergeable), std::invalid_argument);
}

TEST_CASE("pure five-cycles fail the coverage condition") {
    const int n = 5;
    IntMatrix e = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        e(i, (i + 1) % n) = 1;
        e((i + 1) % n, i) = -1;
    }
    // weights from the balanced weight space: all ones
    DecoratedQuiver cycle(std::vector<Label>(n, Label{1, 1}), e);
    REQUIRE(balancing(cycle).all_balanced());
    ReconstructionReport report = reconstruct_general(cycle);
    REQUIRE_FALSE(report.success);
    CHECK(report.failed_condition == "C1");
}

TEST_CASE("round trip over the bound-2 corpus") {
    for (const FanoPolygon& polygon : enumerate_fano_polygons(2)) {
        PolygonalQuiver bq = build_block_quiver(polygon);
        ReconstructionReport report = reconstruct_general(bq.quiver);
        REQUIRE(report.success);
        CHECK(polygons_equivalent(*report.polygon, polygon, EquivalenceGroup::GL));
    }
}

TEST_CASE("round trip covers every zero pattern of the height chains") {
    // hexagon: zeros on both chains for every nomination
    FanoPolygon hexagon({Vec2(1, 0), Vec2(0, 1), Vec2(-1, 1), Vec2(-1, 0), Vec2(0, -1),
                         Vec2(1, -1)});
    ReconstructionReport both = reconstruct_general(build_block_quiver(hexagon).quiver);
    REQUIRE(both.success);
    CHECK(polygons_equivalent(*both.polygon, hexagon, EquivalenceGroup::GL));

    // quadrilateral with a vertex at height zero on one side only
    FanoPolygon lopsided({Vec2(3, 1), Vec2(2, 3), Vec2(-1, 2), Vec2(-2, -3)});
    ReconstructionReport one = reconstruct_general(build_block_quiver(lopsided).quiver);
    REQUIRE(one.success);
    CHECK(build_block_quiver(*one.polygon).quiver.size() == 4);
}

TEST_CASE("triangle and general deciders agree on polygonal triangles") {
    int triangles = 0;
    for (const FanoPolygon& polygon : enumerate_fano_polygons(2)) {
        if (polygon.size() != 3) continue;
        ++triangles;
        DecoratedQuiver quiver = build_block_quiver(polygon).quiver;
        ReconstructionReport triangle = reconstruct_triangle(quiver);
        ReconstructionReport general = reconstruct_general(quiver);
        REQUIRE(triangle.success);
        REQUIRE(general.success);
        CHECK(polygons_equivalent(*triangle.polygon, *general.polygon, EquivalenceGroup::GL));
        CHECK(polygons_equivalent(*triangle.polygon, polygon, EquivalenceGroup::GL));
    }
    CHECK(triangles == 11);
}

TEST_CASE("triangle and general deciders agree on random balanced triangles") {
    std::mt19937_64 rng(2718281);
    std::uniform_int_distribution<Int> base(1, 5);
    std::uniform_int_distribution<Int> extra(0, 3);
    int agreements = 0;
    for (int trial = 0; trial < 100; ++trial) {
        // kernel weights proportional to (q, r, p) balance the cyclic
        // triangle with arrows (p, q, r); labels stay in the range w <= l
        Int p = base(rng), q = base(rng), r = base(rng);
        Int g = std::gcd(p, std::gcd(q, r));
        std::array<Label, 3> labels = {Label{q / g, q / g + extra(rng)},
                                       Label{r / g, r / g + extra(rng)},
                                       Label{p / g, p / g + extra(rng)}};
        DecoratedQuiver quiver = cyclic_triangle(labels, {p, q, r});
        REQUIRE(balancing(quiver).all_balanced());

        ReconstructionReport triangle = reconstruct_triangle(quiver);
        ReconstructionReport general = reconstruct_general(quiver);
        CHECK(triangle.success == general.success);
        ++agreements;
        if (triangle.success)
            CHECK(polygons_equivalent(*triangle.polygon, *general.polygon,
                                      EquivalenceGroup::GL));
    }
    CHECK(agreements == 100);
}

TEST_CASE("every lattice realization of a shared block quiver is found") {
    // these quivers admit two realizations that are equivalent over the
    // rationals but not over the lattice; the full search must see both
    std::vector<std::vector<Vec2>> sources = {
        {Vec2(3, 1), Vec2(2, 3), Vec2(-1, 2), Vec2(-2, -3)},
        {Vec2(3, 1), Vec2(-2, 3), Vec2(-3, -1), Vec2(2, -3)},
        {Vec2(3, 1), Vec2(2, 3), Vec2(-1, 2), Vec2(-3, -1), Vec2(-2, -3)}};
    for (const auto& vertices : sources) {
        FanoPolygon source(vertices);
        std::vector<ReconstructionReport> solutions =
            reconstruct_solutions(build_block_quiver(source).quiver);
        bool found_source = false;
        int classes = 0;
        std::vector<FanoPolygon> seen;
        for (const ReconstructionReport& solution : solutions) {
            REQUIRE(solution.success);
            found_source = found_source ||
                           polygons_equivalent(*solution.polygon, source, EquivalenceGroup::GL);
            bool fresh = true;
            for (const FanoPolygon& p : seen)
                fresh = fresh && !polygons_equivalent(p, *solution.polygon, EquivalenceGroup::GL);
            if (fresh) {
                seen.push_back(*solution.polygon);
                ++classes;
            }
        }
        CHECK(found_source);
        CHECK(classes == 2);
    }
}

TEST_CASE("failure transcripts name the first broken condition") {
    ReconstructionReport report = reconstruct_general(q_fig4());
    REQUIRE_FALSE(report.success);
    CHECK_FALSE(report.failed_condition.empty());
    CHECK(report.y.size() >= 3);
}

TEST_CASE("reconstruction is independent of the input vertex order") {
    std::mt19937_64 rng(424242);
    for (const FanoPolygon& polygon : enumerate_fano_polygons(1)) {
        DecoratedQuiver bq = build_block_quiver(polygon).quiver;
        std::vector<int> perm(bq.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        std::vector<Label> labels(bq.size());
        IntMatrix exchange(bq.size(), bq.size());
        for (int i = 0; i < bq.size(); ++i) {
            labels[perm[i]] = bq.label(i);
            for (int j = 0; j < bq.size(); ++j) exchange(perm[i], perm[j]) = bq.arrows(i, j);
        }
        DecoratedQuiver shuffled(std::move(labels), std::move(exchange));

        ReconstructionReport report = reconstruct_general(shuffled);
        REQUIRE(report.success);
        CHECK(polygons_equivalent(*report.polygon, polygon, EquivalenceGroup::GL));
    }
}
