#include "fanoq/complex3.hpp"

#include <algorithm>
#include <set>

namespace fanoq {

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
    return Vec3(a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(),
                a.x() * b.y() - a.y() * b.x());
}

}  // namespace

BlockComplex3 block_complex3(const FanoPolytope3& polytope) {
    const auto& verts = polytope.vertices;
    const int n = static_cast<int>(verts.size());
    if (n < 4) throw std::invalid_argument("polytope needs at least 4 vertices");
    if (n > 30) throw std::invalid_argument("polytope too large for exhaustive facet search");
    for (const Vec3& v : verts)
        if (!is_primitive(v)) throw std::invalid_argument("non-primitive polytope vertex");

    // Supporting planes through vertex triples with every vertex on one
    // side; the origin must sit strictly on the inner side of each.
    std::set<std::vector<Int>> seen;
    std::vector<Vec3> normals;
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec3 base = cross(Vec3(verts[j] - verts[i]), Vec3(verts[k] - verts[i]));
                if (base == Vec3(0, 0, 0)) continue;
                base = primitive_direction(base);
                for (Vec3 normal : {base, Vec3(-base)}) {
                    Int level = normal.dot(verts[i]);
                    bool supporting = true;
                    std::vector<int> on_facet;
                    for (int v = 0; v < n && supporting; ++v) {
                        Int h = normal.dot(verts[v]);
                        if (h > level) supporting = false;
                        if (h == level) on_facet.push_back(v);
                    }
                    if (!supporting) continue;
                    if (level <= 0)
                        throw std::invalid_argument("origin is not in the strict interior");
                    Vec3 inner = -normal;  // evaluates to -level < 0 on the facet
                    std::vector<Int> key{inner.x(), inner.y(), inner.z()};
                    if (seen.insert(key).second) {
                        normals.push_back(inner);
                        facets.push_back(on_facet);
                    }
                }
            }
    if (normals.size() < 4) throw std::invalid_argument("polytope is not 3-dimensional");

    // Each listed vertex must be a hull vertex: on at least 3 facets.
    std::vector<int> incident(n, 0);
    for (const auto& facet : facets)
        for (int v : facet) ++incident[v];
    for (int v = 0; v < n; ++v)
        if (incident[v] < 3)
            throw std::invalid_argument("listed point is not a vertex of the hull");

    BlockComplex3 complex;
    complex.normals = normals;
    const int m = static_cast<int>(normals.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                Int det = det3(normals[a], normals[b], normals[c]);
                if (det == 0) continue;
                BlockComplex3::Simplex simplex;
                simplex.triple = det > 0 ? std::array<int, 3>{a, b, c} : std::array<int, 3>{a, c, b};
                simplex.multiplicity = det > 0 ? det : -det;
                complex.simplices.push_back(simplex);
            }
    return complex;
}

}  // namespace fanoq
