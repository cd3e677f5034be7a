#include "fanoq/bridge.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace fanoq {

namespace {

PolygonalQuiver from_cones(const FanoPolygon& polygon, const std::vector<ConeData>& cones,
                           const std::vector<int>& edge_of) {
    const int n = static_cast<int>(cones.size());
    std::vector<Label> labels(n);
    std::vector<Vec2> normals(n);
    IntMatrix exchange(n, n);
    for (int i = 0; i < n; ++i) {
        labels[i] = {cones[i].w, cones[i].l};
        normals[i] = cones[i].m;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            exchange(i, j) = polygon.lattice().det(normals[i], normals[j]);
    return PolygonalQuiver{DecoratedQuiver(std::move(labels), std::move(exchange)), normals,
                           edge_of, polygon};
}

}  // namespace

PolygonalQuiver build_quiver(const FanoPolygon& polygon) {
    StandardRefinement refinement = standard_refinement(polygon);
    return from_cones(polygon, refinement.cones, refinement.edge_of);
}

PolygonalQuiver build_block_quiver(const FanoPolygon& polygon) {
    std::vector<ConeData> cones;
    std::vector<int> edge_of;
    for (int i = 0; i < polygon.size(); ++i) {
        cones.push_back(cone_data(polygon.edge_start(i), polygon.edge_end(i), polygon.lattice()));
        edge_of.push_back(i);
    }
    return from_cones(polygon, cones, edge_of);
}

namespace {

// Longest path from m to x through distinct members of out(m).
Int radial_distance(const DecoratedQuiver& quiver, int m, int x) {
    std::vector<int> out = quiver.out_of(m);
    std::vector<bool> visited(quiver.size(), false);
    Int best = 0;
    auto dfs = [&](auto&& self, int at, Int length) -> void {
        if (at == x) best = std::max(best, length);
        for (int y : out) {
            if (visited[y] || quiver.arrows(at, y) <= 0) continue;
            visited[y] = true;
            self(self, y, length + 1);
            visited[y] = false;
        }
    };
    dfs(dfs, m, 0);
    return best;
}

}  // namespace

HamiltonianData hamiltonian(const DecoratedQuiver& quiver) {
    const int n = quiver.size();
    HamiltonianData data;
    data.radius.assign(n, 0);
    data.radius_hits.assign(n, 0);

    std::vector<int> successor(n, -1);
    for (int m = 0; m < n; ++m) {
        std::vector<int> out = quiver.out_of(m);
        if (out.empty()) {
            data.violating_vertex = m;
            data.failure = "vertex has no outgoing arrows";
            return data;
        }
        Int radius = 0;
        for (int x : out) {
            Int r = radial_distance(quiver, m, x);
            if (radius == 0 || r < radius) radius = r;
        }
        Int hits = 0;
        for (int x : out)
            if (radial_distance(quiver, m, x) == radius) {
                ++hits;
                successor[m] = x;
            }
        data.radius[m] = radius;
        data.radius_hits[m] = hits;
        if (radius != 1 || hits != 1) {
            data.violating_vertex = m;
            data.failure = radius != 1 ? "radius != 1" : "radius attained more than once";
            return data;
        }
    }

    std::vector<bool> seen(n, false);
    int at = 0;
    while (!seen[at]) {
        seen[at] = true;
        data.cycle.push_back(at);
        at = successor[at];
    }
    if (static_cast<int>(data.cycle.size()) != n || at != data.cycle.front()) {
        data.violating_vertex = at;
        data.failure = "successor sequence closes before visiting every vertex";
        data.cycle.clear();
        return data;
    }
    data.has_property = true;
    return data;
}

namespace {

Rational cycle_degree(const DecoratedQuiver& quiver, const std::vector<int>& cycle) {
    Rational total(0);
    const int n = static_cast<int>(cycle.size());
    for (int i = 0; i < n; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % n];
        total += Rational(quiver.arrows(a, b), quiver.label(a).l * quiver.label(b).l);
    }
    return total;
}

}  // namespace

Rational degree_from_quiver(const PolygonalQuiver& pq) {
    // Lowest vertex id per edge; any choice gives the same value.
    std::map<int, int> rep;
    for (int v = 0; v < pq.quiver.size(); ++v) rep.try_emplace(pq.edge_of[v], v);
    std::vector<int> cycle;
    for (const auto& [edge, v] : rep) cycle.push_back(v);
    Rational by_cycle = cycle_degree(pq.quiver, cycle);
    Rational by_dual = dual_degree(pq.source);
    if (by_cycle != by_dual)
        throw VerificationError("quiver degree disagrees with dual volume");
    return by_cycle;
}

Rational degree_from_quiver(const DecoratedQuiver& block_quiver) {
    HamiltonianData data = hamiltonian(block_quiver);
    if (!data.has_property)
        throw std::invalid_argument("degree needs the distinguished cycle: " + data.failure);
    return cycle_degree(block_quiver, data.cycle);
}

bool operator==(const SingularityContent& a, const SingularityContent& b) {
    return a.tau == b.tau && a.basket == b.basket;
}

SingularityContent singularity_content(const FanoPolygon& polygon) {
    SingularityContent content;
    for (const ConeData& cone : standard_refinement(polygon).cones) {
        if (cone.is_t_cone())
            ++content.tau;
        else
            content.basket.push_back(cone.singularity_class());
    }
    std::sort(content.basket.begin(), content.basket.end());
    return content;
}

Rational residual_sum(const FanoPolygon& polygon) {
    return dual_degree(polygon) - Rational(12) + Rational(singularity_content(polygon).tau);
}

bool quiver_degree_check(const FanoPolygon& polygon) {
    Rational rhs = Rational(12) - Rational(singularity_content(polygon).tau) + residual_sum(polygon);
    if (degree_from_quiver(build_quiver(polygon)) != rhs) return false;
    return degree_from_quiver(build_block_quiver(polygon).quiver) == rhs;
}

MarkovPoint markov_point(const FanoPolygon& polygon) {
    PolygonalQuiver bq = build_block_quiver(polygon);
    HamiltonianData data = hamiltonian(bq.quiver);
    if (!data.has_property)
        throw VerificationError("block quiver of a polygon lost the distinguished cycle");

    MarkovPoint point;
    point.z = gcd_arrows(bq.quiver);
    const int n = static_cast<int>(data.cycle.size());
    for (int i = 0; i < n; ++i) {
        int a = data.cycle[i], b = data.cycle[(i + 1) % n];
        point.x.push_back(bq.quiver.arrows(a, b) / point.z);
        point.y.push_back(bq.quiver.label(a).l);
    }
    point.t = Rational(12) - Rational(singularity_content(polygon).tau) + residual_sum(polygon);

    Rational sum(0);
    Rational product(1);
    for (int i = 0; i < n; ++i) {
        sum += Rational(point.x[i], point.y[i] * point.y[(i + 1) % n]);
        product *= Rational(point.y[i]);
    }
    point.residual = product * (Rational(point.z) * sum - point.t);
    return point;
}

FeasibilityResult triangle_feasibility(const std::array<Int, 3>& w, const std::array<Int, 3>& l,
                                       Int tau, const Rational& residual) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::gcd(w[i], w[j]) != 1)
                throw std::invalid_argument("feasibility needs pairwise coprime widths");
    for (int i = 0; i < 3; ++i)
        if (w[i] < 1 || l[i] < 1) throw std::invalid_argument("widths and indices must be positive");

    FeasibilityResult result;
    result.lhs_coefficient = w[0] * l[0] + w[1] * l[1] + w[2] * l[2];
    result.rhs = (Rational(12) - Rational(tau) + residual) * Rational(l[0] * l[1] * l[2]);
    Rational g = result.rhs / Rational(result.lhs_coefficient);
    if (g.is_integer() && g.num() > 0) result.g = g.num();
    return result;
}

bool commutation_check(const FanoPolygon& polygon, int vertex) {
    PolygonalQuiver pq = build_quiver(polygon);
    if (vertex < 0 || vertex >= pq.quiver.size())
        throw std::invalid_argument("vertex out of range");
    DecoratedQuiver mutated = mutate(pq.quiver, vertex);

    const Label label = pq.quiver.label(vertex);
    if (label.w == label.l)
        return quivers_isomorphic(mutated,
                                  build_quiver(mutate_polygon(polygon, pq.normals[vertex])).quiver);
    // R-vertex: the new label must leave the polygonal range.
    const Label after = mutated.label(vertex);
    return after.w > after.l;
}

BlockShape block_shape_classifier(const DecoratedQuiver& block_quiver) {
    const int n = block_quiver.size();
    if (n == 3) {
        for (int second = 1; second < 3; ++second) {
            int third = 3 - second;
            if (block_quiver.arrows(0, second) > 0 && block_quiver.arrows(second, third) > 0 &&
                block_quiver.arrows(third, 0) > 0)
                return BlockShape::Triangle;
        }
        return BlockShape::None;
    }
    if (n != 4) throw std::invalid_argument("shape classifier expects 3 or 4 vertices");

    std::array<int, 3> rest = {1, 2, 3};
    std::sort(rest.begin(), rest.end());
    do {
        std::array<int, 4> c = {0, rest[0], rest[1], rest[2]};
        bool cyclic = true;
        for (int i = 0; i < 4 && cyclic; ++i) cyclic = block_quiver.arrows(c[i], c[(i + 1) % 4]) > 0;
        if (!cyclic) continue;
        int parallel = 0;
        parallel += block_quiver.arrows(c[0], c[2]) == 0;
        parallel += block_quiver.arrows(c[1], c[3]) == 0;
        switch (parallel) {
            case 0: return BlockShape::QuadNoParallelPair;
            case 1: return BlockShape::QuadOneParallelPair;
            default: return BlockShape::QuadTwoParallelPairs;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return BlockShape::None;
}

std::string to_string(BlockShape shape) {
    switch (shape) {
        case BlockShape::Triangle: return "triangle";
        case BlockShape::QuadTwoParallelPairs: return "two-parallel-pairs";
        case BlockShape::QuadOneParallelPair: return "one-parallel-pair";
        case BlockShape::QuadNoParallelPair: return "no-parallel-pairs";
        default: return "none";
    }
}

}  // namespace fanoq
