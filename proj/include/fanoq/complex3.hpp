#pragma once

#include <array>
#include <vector>

#include "fanoq/lattice.hpp"

namespace fanoq {

// Convex lattice polytope in rank 3 with primitive vertices and the origin
// in its strict interior.
struct FanoPolytope3 {
    std::vector<Vec3> vertices;
};

struct BlockComplex3 {
    std::vector<Vec3> normals;  // primitive inner facet normals
    struct Simplex {
        std::array<int, 3> triple;  // normal indices, ordered so det > 0
        Int multiplicity = 0;       // |det| of the three normals
    };
    std::vector<Simplex> simplices;
};

// Facets by exhaustive supporting-plane search over vertex triples; one
// oriented 2-simplex class per normal triple with nonzero determinant.
BlockComplex3 block_complex3(const FanoPolytope3& polytope);

}  // namespace fanoq
