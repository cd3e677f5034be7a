#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "fanoq/polygon.hpp"

using namespace fanoq;

namespace {

const FanoPolygon kP2({Vec2(1, 0), Vec2(0, 1), Vec2(-1, -1)});
const FanoPolygon kP112({Vec2(-1, 0), Vec2(2, -1), Vec2(0, 1)});
const FanoPolygon kP116({Vec2(1, 0), Vec2(0, 1), Vec2(-1, -6)});
const FanoPolygon kP113({Vec2(0, -1), Vec2(-1, -1), Vec2(1, 4)});
const FanoPolygon kSquare({Vec2(0, -1), Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0)});

// Normalized volume by lattice point counts: 2A = 2I + B - 2.
Int pick_volume(const FanoPolygon& polygon) {
    Int lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    for (const Vec2& v : polygon.vertices()) {
        lo_x = std::min(lo_x, v.x());
        hi_x = std::max(hi_x, v.x());
        lo_y = std::min(lo_y, v.y());
        hi_y = std::max(hi_y, v.y());
    }
    Int interior = 0, boundary = 0;
    for (Int x = lo_x; x <= hi_x; ++x)
        for (Int y = lo_y; y <= hi_y; ++y) {
            Vec2 p(x, y);
            bool on_edge = false, inside = true;
            for (int i = 0; i < polygon.size() && inside; ++i) {
                Int side = polygon.lattice().det(Vec2(polygon.vertex(i + 1) - polygon.vertex(i)),
                                                 Vec2(p - polygon.vertex(i)));
                if (side < 0) inside = false;
                if (side == 0) on_edge = true;
            }
            if (!inside) continue;
            (on_edge ? boundary : interior) += 1;
        }
    return 2 * interior + boundary - 2;
}

std::multiset<std::tuple<Int, Int, bool>> cone_multiset(const StandardRefinement& refinement) {
    std::multiset<std::tuple<Int, Int, bool>> result;
    for (const ConeData& cone : refinement.cones) result.insert({cone.w, cone.l, cone.is_t_cone()});
    return result;
}

Mat2 random_unimodular(std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> shear(-3, 3);
    Mat2 m = Mat2::Identity();
    for (int step = 0; step < 4; ++step) {
        Mat2 e = Mat2::Identity();
        if (step % 2 == 0)
            e(0, 1) = shear(rng);
        else
            e(1, 0) = shear(rng);
        m = m * e;
    }
    return m;
}

}  // namespace

TEST_CASE("polygon validation") {
    CHECK_THROWS_AS(FanoPolygon({Vec2(1, 0), Vec2(0, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(FanoPolygon({Vec2(2, 0), Vec2(0, 1), Vec2(-1, -1)}), std::invalid_argument);
    // origin on the boundary
    CHECK_THROWS_AS(FanoPolygon({Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0)}), std::invalid_argument);
    // collinear vertex on the top edge
    CHECK_THROWS_AS(FanoPolygon({Vec2(1, 1), Vec2(0, 1), Vec2(-1, 1), Vec2(0, -1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(FanoPolygon({Vec2(1, 0), Vec2(1, 0), Vec2(0, 1), Vec2(-1, -1)}),
                    std::invalid_argument);
}

TEST_CASE("loader re-sorts vertices into positive cyclic order") {
    FanoPolygon shuffled({Vec2(0, 1), Vec2(-1, 0), Vec2(2, -1)});
    CHECK(shuffled == kP112);
    for (int i = 0; i < shuffled.size(); ++i)
        CHECK(shuffled.lattice().det(shuffled.vertex(i), shuffled.vertex(i + 1)) > 0);
}

TEST_CASE("standard refinement splits the quadric cone of P(1,1,2)") {
    StandardRefinement refinement = standard_refinement(kP112);
    REQUIRE(refinement.cones.size() == 4);
    for (const ConeData& cone : refinement.cones) {
        CHECK(cone.w == 1);
        CHECK(cone.l == 1);
        CHECK(cone.is_t_cone());
    }
    // the split edge passes through (1,0)
    int through = 0;
    for (const ConeData& cone : refinement.cones) through += cone.u == Vec2(1, 0);
    CHECK(through == 1);
}

TEST_CASE("standard refinement of a reflexive polygon is the spanning fan") {
    StandardRefinement refinement = standard_refinement(kP2);
    CHECK(refinement.cones.size() == 3);
    for (const ConeData& cone : refinement.cones) CHECK(cone.w * cone.l == 1);
}

TEST_CASE("standard refinement of P(1,1,6) keeps its R-cone whole") {
    StandardRefinement refinement = standard_refinement(kP116);
    REQUIRE(refinement.cones.size() == 3);
    int r_cones = 0;
    for (const ConeData& cone : refinement.cones)
        if (!cone.is_t_cone()) {
            ++r_cones;
            CHECK(cone.w == 2);
            CHECK(cone.l == 3);
        }
    CHECK(r_cones == 1);
}

TEST_CASE("refinement cone multiset does not depend on the R-cone placement") {
    for (const FanoPolygon& polygon : enumerate_fano_polygons(2)) {
        CHECK(cone_multiset(standard_refinement(polygon, RConePlacement::Last)) ==
              cone_multiset(standard_refinement(polygon, RConePlacement::First)));
    }
}

TEST_CASE("normalized volume matches the lattice point count") {
    CHECK(normalized_volume(kP113) == 5);
    CHECK(normalized_volume(FanoPolygon({Vec2(1, 0), Vec2(0, 1), Vec2(-1, -1)})) == 3);
    CHECK(normalized_volume(kP112) == 4);
    for (const FanoPolygon& polygon : enumerate_fano_polygons(2))
        CHECK(normalized_volume(polygon) == pick_volume(polygon));
}

TEST_CASE("dual degree of the worked examples") {
    CHECK(dual_degree(kP112) == Rational(8));
    CHECK(dual_degree(kP116) == Rational(32, 3));
    CHECK(dual_degree(kP2) == Rational(9));
}

TEST_CASE("dual degree is a unimodular invariant") {
    std::mt19937_64 rng(3);
    for (const FanoPolygon& polygon : {kP112, kP116, kP113}) {
        Rational degree = dual_degree(polygon);
        for (int trial = 0; trial < 5; ++trial) {
            Mat2 map = random_unimodular(rng);
            std::vector<Vec2> mapped;
            for (const Vec2& v : polygon.vertices()) mapped.push_back(map * v);
            CHECK(dual_degree(FanoPolygon(mapped)) == degree);
        }
    }
}

TEST_CASE("mutation of the square gives P(1,1,2)") {
    FanoPolygon image = mutate_polygon(kSquare, Vec2(1, 1));
    CHECK(polygons_equivalent(image, kP112, EquivalenceGroup::GL));
    CHECK(image.vertices() == kP112.vertices());
}

TEST_CASE("mutation is an involution up to equivalence") {
    for (const FanoPolygon& polygon : enumerate_fano_polygons(1)) {
        StandardRefinement refinement = standard_refinement(polygon);
        std::set<std::vector<Int>> tried;
        for (const ConeData& cone : refinement.cones) {
            if (!cone.is_t_cone()) continue;
            if (!tried.insert({cone.m.x(), cone.m.y()}).second) continue;
            FanoPolygon image = mutate_polygon(polygon, cone.m);
            FanoPolygon back = mutate_polygon(image, Vec2(-cone.m));
            CHECK(polygons_equivalent(back, polygon, EquivalenceGroup::GL));
        }
    }
}

TEST_CASE("mutating P(1,1,2) at its height-4 smooth vertex gives a volume-12 triangle") {
    FanoPolygon image = mutate_polygon(kP112, Vec2(1, 3));
    CHECK(image.size() == 3);
    CHECK(normalized_volume(image) == 12);
    CHECK(pick_volume(image) == 12);
}

TEST_CASE("mutating P(1,1,6) at a smooth vertex gives a volume-56 triangle") {
    FanoPolygon image = mutate_polygon(kP116, Vec2(-1, -1));
    CHECK(image.size() == 3);
    CHECK(normalized_volume(image) == 56);
    CHECK(pick_volume(image) == 56);
}

TEST_CASE("mutation refuses R-vertex normals and strangers") {
    CHECK_THROWS_AS(mutate_polygon(kP116, Vec2(-3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(mutate_polygon(kP116, Vec2(5, 7)), std::invalid_argument);
}

TEST_CASE("equivalence of the two P(1,1,3) models") {
    FanoPolygon other({Vec2(0, -1), Vec2(1, -1), Vec2(-3, 4)});
    CHECK(polygons_equivalent(kP113, other, EquivalenceGroup::GL));
    CHECK(polygons_equivalent(kP113, kP113, EquivalenceGroup::SL));
    CHECK_FALSE(polygons_equivalent(kP2, kP112, EquivalenceGroup::GL));
}

TEST_CASE("equivalence respects the group choice") {
    // mirrored polygons are always GL-equivalent and here SL-equivalent too
    std::vector<Vec2> mirrored;
    for (const Vec2& v : kP113.vertices()) mirrored.push_back(Vec2(-v.x(), v.y()));
    FanoPolygon mirror(mirrored);
    CHECK(polygons_equivalent(kP113, mirror, EquivalenceGroup::GL));
}

namespace {

// Subset-based oracle: try every subset of the primitive points of the box
// as a vertex set and count GL-classes.
int subset_class_count(Int bound) {
    std::vector<Vec2> points;
    for (Int x = -bound; x <= bound; ++x)
        for (Int y = -bound; y <= bound; ++y)
            if ((x != 0 || y != 0) && std::gcd(x, y) == 1) points.push_back(Vec2(x, y));
    const int np = static_cast<int>(points.size());
    REQUIRE(np <= 20);
    std::set<std::vector<Int>> classes;
    for (unsigned mask = 0; mask < (1u << np); ++mask) {
        if (__builtin_popcount(mask) < 3) continue;
        std::vector<Vec2> chosen;
        for (int i = 0; i < np; ++i)
            if (mask & (1u << i)) chosen.push_back(points[i]);
        try {
            FanoPolygon polygon(chosen);
            classes.insert(canonical_form(polygon, EquivalenceGroup::GL));
        } catch (const std::invalid_argument&) {
        }
    }
    return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("enumeration at bound 1 matches the subset oracle") {
    std::vector<FanoPolygon> corpus = enumerate_fano_polygons(1);
    CHECK(corpus.size() == 11);
    CHECK(subset_class_count(1) == 11);

    bool has_p2 = false;
    for (const FanoPolygon& polygon : corpus)
        has_p2 = has_p2 || polygons_equivalent(polygon, kP2, EquivalenceGroup::GL);
    CHECK(has_p2);

    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j)
            CHECK_FALSE(polygons_equivalent(corpus[i], corpus[j], EquivalenceGroup::GL));
}

TEST_CASE("enumeration at bound 2 matches the subset oracle") {
    CHECK(enumerate_fano_polygons(2).size() == 156);
    CHECK(subset_class_count(2) == 156);
}

TEST_CASE("enumeration finds exactly the sixteen reflexive classes") {
    int reflexive = 0;
    for (const FanoPolygon& polygon : enumerate_fano_polygons(3)) {
        bool all_unit = true;
        for (int i = 0; i < polygon.size(); ++i)
            all_unit = all_unit &&
                       cone_data(polygon.edge_start(i), polygon.edge_end(i)).l == 1;
        reflexive += all_unit;
    }
    CHECK(reflexive == 16);
}

TEST_CASE("enumeration is deterministic") {
    std::vector<FanoPolygon> a = enumerate_fano_polygons(2);
    std::vector<FanoPolygon> b = enumerate_fano_polygons(2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    CHECK_THROWS_AS(enumerate_fano_polygons(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_fano_polygons(9), std::invalid_argument);
}
