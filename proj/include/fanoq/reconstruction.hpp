#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanoq/bridge.hpp"

namespace fanoq {

// Outcome of deciding whether a balanced block quiver comes from a Fano
// polygon. On success the polygon is rebuilt and re-verified against the
// input; on failure the deepest violated condition is reported with the
// witness data that was reached.
struct ReconstructionReport {
    bool success = false;
    std::optional<FanoPolygon> polygon;
    int nominated_vertex = -1;
    Int x_choice = 0;
    std::string failed_condition;  // "C1".."C9" when success is false
    std::string detail;
    std::vector<Rational> y, x, s, t;  // transcript in nomination order
};

// Triangle decision: conditions (1)-(7) at the nominated vertex, searching
// the base abscissa over residues modulo l_1.
ReconstructionReport reconstruct_triangle(const DecoratedQuiver& block_quiver, int nominated = 0);

// Necessary volume identity for 3-vertex cyclic balanced quivers:
// sum of w_i*l_i versus w_1*w_2*arr(m_1, m_2). Equal for block-polygonal
// quivers; the right side is nomination-independent.
std::pair<Int, Int> expected_volume_gap(const DecoratedQuiver& block_quiver);

// Full decision for balanced block quivers with at least 3 vertices:
// conditions (1)-(9) over every nomination, handling all four patterns of
// zeros in the two height chains. Returns the first realization found.
ReconstructionReport reconstruct_general(const DecoratedQuiver& block_quiver);

// Every realization over all nominations and base abscissae. A block quiver
// can admit several, not always lattice-equivalent.
std::vector<ReconstructionReport> reconstruct_solutions(const DecoratedQuiver& block_quiver);

}  // namespace fanoq
