#pragma once

#include <vector>

#include "fanoq/lattice.hpp"

namespace fanoq {

// Rank-2 lattice with a fixed orientation; determinants of ordered pairs are
// taken with respect to it.
struct OrientedLattice2 {
    int orientation = +1;

    Int det(const Vec2& a, const Vec2& b) const { return orientation * det2(a, b); }
};

inline bool operator==(const OrientedLattice2& a, const OrientedLattice2& b) {
    return a.orientation == b.orientation;
}

// A maximal cone spanned by two primitive generators with det(u, v) > 0,
// together with its width w, local index l, inner normal m and the canonical
// cyclic-quotient type 1/r(1, a).
struct ConeData {
    Vec2 u, v;
    Int w = 0;
    Int l = 0;
    Vec2 m;
    Int r = 0;
    Int a = 0;

    bool is_t_cone() const { return w == l; }
    // 1/r(1,a) and 1/r(1,a') name the same singularity when a' = a^{-1} mod r;
    // the class key picks the smaller of the two.
    std::pair<Int, Int> singularity_class() const;
};

ConeData cone_data(const Vec2& u, const Vec2& v, const OrientedLattice2& lattice = {});

// Lattice polygon with primitive vertices and the origin in its strict
// interior, stored in positive cyclic order for the given orientation.
class FanoPolygon {
public:
    FanoPolygon(OrientedLattice2 lattice, std::vector<Vec2> vertices);
    explicit FanoPolygon(std::vector<Vec2> vertices) : FanoPolygon(OrientedLattice2{}, std::move(vertices)) {}

    const OrientedLattice2& lattice() const { return lattice_; }
    const std::vector<Vec2>& vertices() const { return vertices_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    const Vec2& vertex(int i) const { return vertices_[mod(i)]; }

    // Edge i runs from vertex i to vertex i+1.
    Vec2 edge_start(int i) const { return vertex(i); }
    Vec2 edge_end(int i) const { return vertex(i + 1); }

private:
    int mod(int i) const {
        int n = size();
        return ((i % n) + n) % n;
    }

    OrientedLattice2 lattice_;
    std::vector<Vec2> vertices_;
};

bool operator==(const FanoPolygon& a, const FanoPolygon& b);

enum class RConePlacement { Last, First };

struct StandardRefinement {
    std::vector<ConeData> cones;  // cyclic, positively oriented
    std::vector<int> edge_of;     // polygon edge refined by each cone
};

StandardRefinement standard_refinement(const FanoPolygon& polygon,
                                       RConePlacement placement = RConePlacement::Last);

// Exact shoelace volume, normalized so the empty 2-simplex has volume 1.
// Cross-checked against the sum of w*l over the standard refinement.
Int normalized_volume(const FanoPolygon& polygon);

// Normalized volume of the dual polygon, whose vertices are m_i / l_i.
Rational dual_degree(const FanoPolygon& polygon);

// Combinatorial mutation with respect to the width vector m (the inner normal
// of a primitive T-cone of the refinement) and a unit-length factor along the
// mutated edge.
FanoPolygon mutate_polygon(const FanoPolygon& polygon, const Vec2& width_vector);

enum class EquivalenceGroup { SL, GL };

// Flattened canonical vertex list; equal iff the polygons are equivalent
// under the chosen group of unimodular maps.
std::vector<Int> canonical_form(const FanoPolygon& polygon, EquivalenceGroup group);

bool polygons_equivalent(const FanoPolygon& a, const FanoPolygon& b, EquivalenceGroup group);

// All Fano polygons with vertices in [-bound, bound]^2, one representative per
// GL2(Z)-class, in a deterministic order. Desk scale: bound <= 5.
std::vector<FanoPolygon> enumerate_fano_polygons(Int bound);

}  // namespace fanoq
