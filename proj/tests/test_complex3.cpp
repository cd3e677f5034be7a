#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fanoq/complex3.hpp"

using namespace fanoq;

namespace {

std::multiset<Int> multiplicities(const BlockComplex3& complex) {
    std::multiset<Int> result;
    for (const auto& simplex : complex.simplices) result.insert(simplex.multiplicity);
    return result;
}

Mat3 random_unimodular3(std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> shear(-2, 2);
    std::uniform_int_distribution<int> slot(0, 5);
    Mat3 m = Mat3::Identity();
    for (int step = 0; step < 6; ++step) {
        Mat3 e = Mat3::Identity();
        static const int rows[6] = {0, 0, 1, 1, 2, 2};
        static const int cols[6] = {1, 2, 0, 2, 0, 1};
        int s = slot(rng);
        e(rows[s], cols[s]) = shear(rng);
        m = m * e;
    }
    return m;
}

}  // namespace

TEST_CASE("block complex of the three-space simplex") {
    FanoPolytope3 p3{{Vec3(-1, -1, -1), Vec3(-1, 0, -1), Vec3(0, -1, -1), Vec3(2, 2, 3)}};
    BlockComplex3 complex = block_complex3(p3);
    REQUIRE(complex.normals.size() == 4);
    std::set<std::vector<Int>> normals;
    for (const Vec3& m : complex.normals) normals.insert({m.x(), m.y(), m.z()});
    std::set<std::vector<Int>> expected = {
        {0, 0, 1}, {4, 0, -3}, {0, 4, -3}, {-4, -4, 5}};
    CHECK(normals == expected);
    CHECK(multiplicities(complex) == std::multiset<Int>{16, 16, 16, 16});
}

TEST_CASE("block complex of the quotient polytope") {
    FanoPolytope3 p{{Vec3(-1, -1, -1), Vec3(2, 5, 3), Vec3(5, 2, 3), Vec3(2, 2, 3)}};
    BlockComplex3 complex = block_complex3(p);
    REQUIRE(complex.normals.size() == 4);
    std::set<std::vector<Int>> normals;
    for (const Vec3& m : complex.normals) normals.insert({m.x(), m.y(), m.z()});
    std::set<std::vector<Int>> expected = {
        {0, 0, -1}, {4, 0, -3}, {0, 4, -3}, {-4, -4, 9}};
    CHECK(normals == expected);
    CHECK(multiplicities(complex) == std::multiset<Int>{16, 16, 16, 48});
}

TEST_CASE("block complex of the standard simplex is symmetric") {
    FanoPolytope3 simplex{{Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1), Vec3(-1, -1, -1)}};
    BlockComplex3 complex = block_complex3(simplex);
    REQUIRE(complex.simplices.size() == 4);
    std::multiset<Int> ms = multiplicities(complex);
    CHECK(std::set<Int>(ms.begin(), ms.end()).size() == 1);
}

TEST_CASE("simplices are stored positively oriented") {
    FanoPolytope3 simplex{{Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1), Vec3(-1, -1, -1)}};
    BlockComplex3 complex = block_complex3(simplex);
    for (const auto& s : complex.simplices) {
        Int det = det3(complex.normals[s.triple[0]], complex.normals[s.triple[1]],
                       complex.normals[s.triple[2]]);
        CHECK(det == s.multiplicity);
        CHECK(det > 0);
        // odd permutations flip the sign
        CHECK(det3(complex.normals[s.triple[1]], complex.normals[s.triple[0]],
                   complex.normals[s.triple[2]]) == -det);
    }
}

TEST_CASE("multiplicities are unimodular invariants") {
    std::mt19937_64 rng(99);
    FanoPolytope3 base{{Vec3(-1, -1, -1), Vec3(-1, 0, -1), Vec3(0, -1, -1), Vec3(2, 2, 3)}};
    std::multiset<Int> reference = multiplicities(block_complex3(base));
    for (int trial = 0; trial < 5; ++trial) {
        Mat3 map = random_unimodular3(rng);
        FanoPolytope3 image;
        for (const Vec3& v : base.vertices) image.vertices.push_back(map * v);
        CHECK(multiplicities(block_complex3(image)) == reference);
    }
}

TEST_CASE("polytope validation") {
    CHECK_THROWS_AS(block_complex3(FanoPolytope3{{Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(block_complex3(FanoPolytope3{
                        {Vec3(2, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1), Vec3(-1, -1, -1)}}),
                    std::invalid_argument);
    // origin on a facet plane
    CHECK_THROWS_AS(block_complex3(FanoPolytope3{
                        {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1), Vec3(-1, -1, 0)}}),
                    std::invalid_argument);
    // flat configuration
    CHECK_THROWS_AS(block_complex3(FanoPolytope3{{Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(-1, 0, 0),
                                                  Vec3(0, -1, 0)}}),
                    std::invalid_argument);
}

TEST_CASE("polytopes with the origin outside are rejected") {
    CHECK_THROWS_AS(block_complex3(FanoPolytope3{
                        {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1), Vec3(1, 1, 1)}}),
                    std::invalid_argument);
}
