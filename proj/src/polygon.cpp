#include "fanoq/polygon.hpp"

#include <algorithm>
#include <map>

namespace fanoq {

namespace {

// Angular order around the origin: positive half-turn first, then by the
// oriented determinant. Distinct primitive vectors on a common ray coincide,
// so determinant ties mean equal vectors.
int half_plane(const Vec2& v, int orientation) {
    Int y = orientation * v.y();
    if (y > 0 || (y == 0 && v.x() > 0)) return 0;
    return 1;
}

bool angular_less(const Vec2& a, const Vec2& b, const OrientedLattice2& lat) {
    int ha = half_plane(a, lat.orientation), hb = half_plane(b, lat.orientation);
    if (ha != hb) return ha < hb;
    Int d = lat.det(a, b);
    if (d != 0) return d > 0;
    return lex_less(a, b);
}

Int inv_mod(Int a, Int r) {
    auto [g, p, q] = extended_gcd(((a % r) + r) % r, r);
    (void)q;
    if (g != 1) throw std::logic_error("inverse of non-unit residue");
    return ((p % r) + r) % r;
}

}  // namespace

std::pair<Int, Int> ConeData::singularity_class() const {
    if (r == 1) return {1, 0};
    return {r, std::min(a, inv_mod(a, r))};
}

ConeData cone_data(const Vec2& u, const Vec2& v, const OrientedLattice2& lattice) {
    if (!is_primitive(u) || !is_primitive(v))
        throw std::invalid_argument("cone generators must be primitive");
    Int r = lattice.det(u, v);
    if (r == 0) throw std::invalid_argument("degenerate cone: collinear generators");
    if (r < 0) throw std::invalid_argument("cone generators are negatively oriented");

    ConeData cone;
    cone.u = u;
    cone.v = v;
    cone.w = content(Vec2(v - u));
    cone.r = r;

    // Inner normal: primitive, vanishing on the edge direction, negative on u.
    Vec2 d = v - u;
    Vec2 m = primitive_direction(Vec2(-d.y(), d.x()));
    if (dot2(m, u) > 0) m = -m;
    cone.m = m;
    cone.l = -dot2(m, u);
    if (cone.l <= 0 || dot2(m, v) != -cone.l)
        throw std::logic_error("inner normal does not evaluate to -l on both generators");
    if (cone.r != cone.w * cone.l)
        throw VerificationError("cone width/index mismatch: det(u,v) != w*l");

    // Canonical type 1/r(1,a): a determinant +1 map sends v to (0,1) and u to
    // (r,-a), working in orientation-adjusted coordinates.
    Vec2 cu = u, cv = v;
    if (lattice.orientation < 0) {
        std::swap(cu.x(), cu.y());
        std::swap(cv.x(), cv.y());
    }
    auto [g, p, q] = extended_gcd(cv.x(), cv.y());
    (void)g;
    Int second = p * cu.x() + q * cu.y();
    cone.a = ((-second) % r + r) % r;
    if (r > 1 && std::gcd(cone.a, r) != 1)
        throw std::logic_error("cyclic quotient weight not coprime to order");
    return cone;
}

FanoPolygon::FanoPolygon(OrientedLattice2 lattice, std::vector<Vec2> vertices)
    : lattice_(lattice), vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) throw std::invalid_argument("Fano polygon needs at least 3 vertices");
    for (const Vec2& v : vertices_)
        if (!is_primitive(v)) throw std::invalid_argument("non-primitive polygon vertex");

    std::sort(vertices_.begin(), vertices_.end(),
              [&](const Vec2& a, const Vec2& b) { return angular_less(a, b, lattice_); });
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        if (vertices_[i] == vertices_[i + 1]) throw std::invalid_argument("duplicate polygon vertex");

    const int n = static_cast<int>(vertices_.size());
    for (int i = 0; i < n; ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % n];
        const Vec2& c = vertices_[(i + 2) % n];
        if (lattice_.det(a, b) <= 0)
            throw std::invalid_argument("origin not in the strict interior");
        if (lattice_.det(Vec2(b - a), Vec2(c - b)) <= 0)
            throw std::invalid_argument("vertices not in strictly convex position");
    }
}

bool operator==(const FanoPolygon& a, const FanoPolygon& b) {
    return a.lattice() == b.lattice() && a.vertices() == b.vertices();
}

StandardRefinement standard_refinement(const FanoPolygon& polygon, RConePlacement placement) {
    StandardRefinement result;
    for (int i = 0; i < polygon.size(); ++i) {
        ConeData whole = cone_data(polygon.edge_start(i), polygon.edge_end(i), polygon.lattice());
        Int alpha = whole.w / whole.l;
        Int rho = whole.w % whole.l;

        // Cut points u + j*l*d are primitive: u is primitive at height l, and
        // shifting by multiples of l along the edge preserves that.
        std::vector<Int> offsets{0};
        if (placement == RConePlacement::Last || rho == 0) {
            for (Int j = 1; j <= alpha; ++j)
                if (j * whole.l < whole.w) offsets.push_back(j * whole.l);
        } else {
            if (rho != whole.w) offsets.push_back(rho);
            for (Int j = 1; j < alpha; ++j) offsets.push_back(rho + j * whole.l);
        }
        offsets.push_back(whole.w);

        Vec2 d = primitive_direction(Vec2(whole.v - whole.u));
        for (std::size_t j = 0; j + 1 < offsets.size(); ++j) {
            Vec2 from = whole.u + offsets[j] * d;
            Vec2 to = whole.u + offsets[j + 1] * d;
            result.cones.push_back(cone_data(from, to, polygon.lattice()));
            result.edge_of.push_back(i);
        }
    }
    return result;
}

Int normalized_volume(const FanoPolygon& polygon) {
    Int shoelace = 0;
    for (int i = 0; i < polygon.size(); ++i)
        shoelace += polygon.lattice().det(polygon.vertex(i), polygon.vertex(i + 1));

    Int from_cones = 0;
    for (const ConeData& cone : standard_refinement(polygon).cones) from_cones += cone.w * cone.l;
    if (shoelace != from_cones)
        throw VerificationError("volume mismatch between shoelace and refinement");
    return shoelace;
}

Rational dual_degree(const FanoPolygon& polygon) {
    const int n = polygon.size();
    std::vector<ConeData> cones;
    for (int i = 0; i < n; ++i)
        cones.push_back(cone_data(polygon.edge_start(i), polygon.edge_end(i), polygon.lattice()));

    Rational total(0);
    for (int i = 0; i < n; ++i) {
        const ConeData& a = cones[i];
        const ConeData& b = cones[(i + 1) % n];
        total += Rational(polygon.lattice().det(a.m, b.m), a.l * b.l);
    }
    return total;
}

FanoPolygon mutate_polygon(const FanoPolygon& polygon, const Vec2& width_vector) {
    StandardRefinement refinement = standard_refinement(polygon);
    int edge = -1;
    bool has_t_cone = false;
    for (std::size_t c = 0; c < refinement.cones.size(); ++c) {
        if (refinement.cones[c].m == width_vector) {
            edge = refinement.edge_of[c];
            if (refinement.cones[c].is_t_cone()) has_t_cone = true;
        }
    }
    if (edge < 0) throw std::invalid_argument("width vector is not a refinement cone normal");
    if (!has_t_cone)
        throw std::invalid_argument("mutation undefined: width vector is an R-vertex normal");

    const Vec2& m = width_vector;
    const Vec2 factor =
        primitive_direction(Vec2(polygon.edge_end(edge) - polygon.edge_start(edge)));
    const int n = polygon.size();

    // Boundary walk from the far end of the mutated edge: heights rise to a
    // single apex or to a parallel top edge, then fall back to the near end.
    // Rising-chain points are sheared by height * factor, the rest kept.
    std::vector<Vec2> candidates;
    int idx = edge + 1;
    for (int guard = 0;; ++idx, ++guard) {
        if (guard > n) throw std::logic_error("mutation walk failed to terminate");
        Vec2 p = polygon.vertex(idx);
        candidates.push_back(Vec2(p + dot2(m, p) * factor));
        if (dot2(m, polygon.vertex(idx + 1)) <= dot2(m, p)) break;
    }
    int left_start =
        dot2(m, polygon.vertex(idx + 1)) == dot2(m, polygon.vertex(idx)) ? idx + 1 : idx;
    for (int t = left_start;; ++t) {
        candidates.push_back(polygon.vertex(t));
        if (polygon.vertex(t) == polygon.edge_start(edge)) break;
        if (t > left_start + n) throw std::logic_error("mutation walk failed to close");
    }

    // Candidates are in convex position up to repeats and collinear triples;
    // a monotone-chain hull prunes both.
    std::sort(candidates.begin(), candidates.end(), lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Vec2> hull;
    auto build_chain = [&hull](auto begin, auto end) {
        std::size_t base = hull.size();
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= base + 2 &&
                   det2(Vec2(hull.back() - hull[hull.size() - 2]), Vec2(*it - hull.back())) <= 0)
                hull.pop_back();
            hull.push_back(*it);
        }
        hull.pop_back();
    };
    build_chain(candidates.begin(), candidates.end());
    build_chain(candidates.rbegin(), candidates.rend());
    return FanoPolygon(polygon.lattice(), hull);
}

namespace {

// Unimodular map sending vertex `start` to (1,0) and its successor to
// (c, d) with 0 <= c < d; appending all images gives one candidate form.
std::vector<Int> candidate_form(const std::vector<Vec2>& ccw, int start) {
    const int n = static_cast<int>(ccw.size());
    const Vec2& base = ccw[start];
    auto [g, p, q] = extended_gcd(base.x(), base.y());
    (void)g;
    Mat2 map;
    map << p, q, -base.y(), base.x();

    Vec2 next = map * ccw[(start + 1) % n];
    Int d = next.y();
    Int c = ((next.x() % d) + d) % d;
    Mat2 shear;
    shear << 1, (c - next.x()) / d, 0, 1;
    map = shear * map;

    std::vector<Int> flat;
    flat.reserve(2 * n);
    for (int k = 0; k < n; ++k) {
        Vec2 img = map * ccw[(start + k) % n];
        flat.push_back(img.x());
        flat.push_back(img.y());
    }
    return flat;
}

std::vector<Vec2> standard_ccw_vertices(const FanoPolygon& polygon) {
    std::vector<Vec2> ccw = polygon.vertices();
    if (polygon.lattice().orientation < 0)
        for (Vec2& v : ccw) v.y() = -v.y();  // mirror restores positive order
    return ccw;
}

}  // namespace

std::vector<Int> canonical_form(const FanoPolygon& polygon, EquivalenceGroup group) {
    std::vector<Vec2> ccw = standard_ccw_vertices(polygon);
    const int n = static_cast<int>(ccw.size());

    std::vector<Int> best;
    auto consider = [&](const std::vector<Vec2>& verts) {
        for (int start = 0; start < n; ++start) {
            std::vector<Int> cand = candidate_form(verts, start);
            if (best.empty() || cand < best) best = cand;
        }
    };
    consider(ccw);
    if (group == EquivalenceGroup::GL) {
        std::vector<Vec2> mirrored = ccw;
        for (Vec2& v : mirrored) v.y() = -v.y();
        std::reverse(mirrored.begin(), mirrored.end());
        consider(mirrored);
    }
    return best;
}

bool polygons_equivalent(const FanoPolygon& a, const FanoPolygon& b, EquivalenceGroup group) {
    if (a.size() != b.size()) return false;
    return canonical_form(a, group) == canonical_form(b, group);
}

std::vector<FanoPolygon> enumerate_fano_polygons(Int bound) {
    if (bound < 1 || bound > 5) throw std::invalid_argument("enumeration bound must be in [1, 5]");

    OrientedLattice2 lat;
    std::vector<Vec2> points;
    for (Int x = -bound; x <= bound; ++x)
        for (Int y = -bound; y <= bound; ++y)
            if ((x != 0 || y != 0) && std::gcd(x, y) == 1) points.push_back(Vec2(x, y));
    std::sort(points.begin(), points.end(),
              [&](const Vec2& a, const Vec2& b) { return angular_less(a, b, lat); });

    const int np = static_cast<int>(points.size());
    std::map<std::vector<Int>, FanoPolygon> classes;
    std::vector<Vec2> chain;

    // Grow vertex chains in global angular order; every polygon around the
    // origin is listed exactly once, cut at its angularly-first vertex.
    auto close_ok = [&](const Vec2& last) {
        const Vec2& first = chain.front();
        if (det2(last, first) <= 0) return false;
        if (det2(Vec2(first - last), Vec2(chain[1] - first)) <= 0) return false;
        if (det2(Vec2(last - chain[chain.size() - 2]), Vec2(first - last)) <= 0) return false;
        return true;
    };

    auto dfs = [&](auto&& self, int next_index) -> void {
        const Vec2 last = chain.back();
        if (chain.size() >= 3 && close_ok(last)) {
            FanoPolygon polygon(lat, chain);
            classes.emplace(canonical_form(polygon, EquivalenceGroup::GL), polygon);
        }
        for (int i = next_index; i < np; ++i) {
            const Vec2 p = points[i];
            if (det2(last, p) <= 0) continue;
            if (chain.size() >= 2 &&
                det2(Vec2(last - chain[chain.size() - 2]), Vec2(p - last)) <= 0)
                continue;
            chain.push_back(p);
            self(self, i + 1);
            chain.pop_back();
        }
    };

    for (int s = 0; s < np; ++s) {
        chain.assign(1, points[s]);
        dfs(dfs, s + 1);
    }

    std::vector<std::pair<std::vector<Int>, const FanoPolygon*>> keyed;
    keyed.reserve(classes.size());
    for (const auto& [key, polygon] : classes) keyed.emplace_back(key, &polygon);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<FanoPolygon> result;
    result.reserve(keyed.size());
    for (const auto& [key, polygon] : keyed) result.push_back(*polygon);
    return result;
}

}  // namespace fanoq
