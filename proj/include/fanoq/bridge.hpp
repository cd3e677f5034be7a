#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanoq/polygon.hpp"
#include "fanoq/quiver.hpp"

namespace fanoq {

// Decorated quiver built from a Fano polygon, remembering which inner normal
// and which polygon edge each vertex stands for.
struct PolygonalQuiver {
    DecoratedQuiver quiver;
    std::vector<Vec2> normals;
    std::vector<int> edge_of;
    FanoPolygon source;
};

// One vertex per cone of the standard refinement, in cyclic order.
PolygonalQuiver build_quiver(const FanoPolygon& polygon);

// One vertex per edge; coincides with block(build_quiver(P).quiver).
PolygonalQuiver build_block_quiver(const FanoPolygon& polygon);

struct HamiltonianData {
    bool has_property = false;
    std::vector<Int> radius;       // r(v)
    std::vector<Int> radius_hits;  // h(v)
    std::vector<int> cycle;        // cyclic vertex order when the property holds
    int violating_vertex = -1;     // r != 1 or h != 1, or where seq stopped short
    std::string failure;
};

// Radial-distance construction of the distinguished cycle of a balanced
// block quiver.
HamiltonianData hamiltonian(const DecoratedQuiver& quiver);

// Cyclic arrow sum A(m_k, m_{k+1}) / (l_k * l_{k+1}); for refinement-level
// quivers one representative vertex per edge is used.
Rational degree_from_quiver(const PolygonalQuiver& pq);
Rational degree_from_quiver(const DecoratedQuiver& block_quiver);

struct SingularityContent {
    Int tau = 0;
    std::vector<std::pair<Int, Int>> basket;  // sorted canonical (r, a) classes
};

bool operator==(const SingularityContent& a, const SingularityContent& b);

SingularityContent singularity_content(const FanoPolygon& polygon);

// Sum of the per-class degree contributions of the basket, read off from the
// Noether-type relation: degree - 12 + tau.
Rational residual_sum(const FanoPolygon& polygon);

// Exact check that the cyclic arrow sum equals 12 - tau + residual, for both
// the refinement-level and the block quiver.
bool quiver_degree_check(const FanoPolygon& polygon);

struct MarkovPoint {
    std::vector<Int> x;  // normalized arrows along the distinguished cycle
    std::vector<Int> y;  // local indices
    Int z = 0;           // gcd of all arrows
    Rational t;          // 12 - tau + residual
    Rational residual;   // value of the hypersurface polynomial, must be 0
};

MarkovPoint markov_point(const FanoPolygon& polygon);

struct FeasibilityResult {
    Int lhs_coefficient = 0;  // w1*l1 + w2*l2 + w3*l3
    Rational rhs;             // (12 - tau + residual) * l1*l2*l3
    std::optional<Int> g;     // the unique positive integer solution, if any
};

FeasibilityResult triangle_feasibility(const std::array<Int, 3>& w, const std::array<Int, 3>& l,
                                       Int tau, const Rational& residual);

// T-vertex: quiver mutation must match the quiver of the mutated polygon.
// R-vertex: the mutated label must violate w <= l.
bool commutation_check(const FanoPolygon& polygon, int vertex);

enum class BlockShape { Triangle, QuadTwoParallelPairs, QuadOneParallelPair, QuadNoParallelPair, None };

// Shape taxonomy of 3- and 4-vertex block quivers that can come from a
// polygon: a single cyclic triangle, or a 4-cycle with 0/1/2 arrowless
// (parallel-edge) diagonals.
BlockShape block_shape_classifier(const DecoratedQuiver& block_quiver);

std::string to_string(BlockShape shape);

}  // namespace fanoq
