#include "fanoq/reconstruction.hpp"

#include <algorithm>
#include <numeric>

namespace fanoq {

namespace {

int condition_rank(const std::string& c) { return c.empty() ? 100 : c[1] - '0'; }

void keep_deepest(ReconstructionReport& best, ReconstructionReport candidate) {
    if (best.failed_condition.empty() ||
        condition_rank(candidate.failed_condition) > condition_rank(best.failed_condition))
        best = std::move(candidate);
}

Int gcd_abs(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void require_block_balanced(const DecoratedQuiver& q) {
    if (!balancing(q).all_balanced())
        throw std::invalid_argument("reconstruction needs a balanced quiver");
    if (!is_block(q)) throw std::invalid_argument("reconstruction needs a block quiver");
}

std::optional<std::array<int, 3>> cyclic_frame(const DecoratedQuiver& q, int first) {
    for (int second = 0; second < 3; ++second) {
        if (second == first) continue;
        int third = 3 - first - second;
        if (q.arrows(first, second) > 0 && q.arrows(second, third) > 0 &&
            q.arrows(third, first) > 0)
            return std::array<int, 3>{first, second, third};
    }
    return std::nullopt;
}

}  // namespace

std::pair<Int, Int> expected_volume_gap(const DecoratedQuiver& block_quiver) {
    if (block_quiver.size() != 3)
        throw std::invalid_argument("expected volume is defined for 3-vertex quivers");
    if (!balancing(block_quiver).all_balanced())
        throw std::invalid_argument("expected volume needs a balanced quiver");
    if (!cyclic_frame(block_quiver, 0))
        throw std::invalid_argument("expected volume needs the cyclic triangle shape");

    Int lhs = 0;
    for (const Label& label : block_quiver.labels()) lhs += label.w * label.l;

    std::optional<Int> rhs;
    for (int nominate = 0; nominate < 3; ++nominate) {
        auto f = cyclic_frame(block_quiver, nominate);
        Int value = block_quiver.label((*f)[0]).w * block_quiver.label((*f)[1]).w *
                    block_quiver.arrows((*f)[0], (*f)[1]);
        if (rhs && *rhs != value)
            throw std::logic_error("base-times-height volume depends on the nomination");
        rhs = value;
    }
    return {lhs, *rhs};
}

ReconstructionReport reconstruct_triangle(const DecoratedQuiver& block_quiver, int nominated) {
    if (block_quiver.size() != 3)
        throw std::invalid_argument("triangle reconstruction needs exactly 3 vertices");
    if (nominated < 0 || nominated > 2) throw std::invalid_argument("nominated vertex out of range");
    require_block_balanced(block_quiver);

    ReconstructionReport best;
    best.nominated_vertex = nominated;

    auto frame = cyclic_frame(block_quiver, nominated);
    if (!frame) {
        best.failed_condition = "C1";
        best.detail = "quiver is not a single oriented 3-cycle";
        return best;
    }
    const auto [i1, i2, i3] = *frame;
    const Label l1 = block_quiver.label(i1), l2 = block_quiver.label(i2),
                l3 = block_quiver.label(i3);

    if (l1.w < 1 || l1.l < 1 || l2.w < 1 || l2.l < 1 || l3.w < 1 || l3.l < 1) {
        best.failed_condition = "C2";
        best.detail = "labels must be positive";
        return best;
    }

    const Int y1 = -l1.l, y2 = -l1.l;
    const Int y3 = y2 + l2.w * block_quiver.arrows(i1, i2);
    best.y = {Rational(y1), Rational(y2), Rational(y3)};
    if (y3 <= 0) {
        best.failed_condition = "C3";
        best.detail = "apex height is not positive";
        return best;
    }

    const Int s2 = -block_quiver.arrows(i1, i2);
    const Int s3 = -block_quiver.arrows(i1, i3);

    bool any_x = false;
    for (Int x = 0; x < l1.l; ++x) {
        if (gcd_abs(x, y1) != 1 || gcd_abs(x + l1.w, y2) != 1) continue;
        any_x = true;

        ReconstructionReport attempt;
        attempt.nominated_vertex = nominated;
        attempt.x_choice = x;
        const Rational x1(x), x2(x + l1.w);
        const Rational x3 = (Rational(l3.w * l3.l) + x1 * Rational(y3)) / Rational(y1);
        const Rational x3p = (x2 * Rational(y3) - Rational(l2.w * l2.l)) / Rational(y2);
        const Rational t2 = (x3 - x2) / Rational(l2.w);
        const Rational t3 = (x1 - x3) / Rational(l3.w);
        attempt.y = best.y;
        attempt.x = {x1, x2, x3};
        attempt.s = {Rational(0), Rational(s2), Rational(s3)};
        attempt.t = {Rational(1), t2, t3};

        if (!t2.is_integer() || !t3.is_integer()) {
            attempt.failed_condition = "C5";
            attempt.detail = "edge direction is not integral";
            keep_deepest(best, std::move(attempt));
            continue;
        }
        if (x3 != x3p) {
            attempt.failed_condition = "C6";
            attempt.detail = "the two determinations of the third abscissa differ: " + x3.str() +
                             " vs " + x3p.str();
            keep_deepest(best, std::move(attempt));
            continue;
        }
        if (gcd_abs(x3.as_integer(), y3) != 1 || gcd_abs(s2, t2.as_integer()) != 1 ||
            gcd_abs(s3, t3.as_integer()) != 1) {
            attempt.failed_condition = "C7";
            attempt.detail = "primitivity fails";
            keep_deepest(best, std::move(attempt));
            continue;
        }

        FanoPolygon polygon({Vec2(x, y1), Vec2(x + l1.w, y2), Vec2(x3.as_integer(), y3)});
        // Soundness: the edge data must reproduce the input exactly.
        std::array<Vec2, 3> normals = {Vec2(0, 1), Vec2(s2, t2.as_integer()),
                                       Vec2(s3, t3.as_integer())};
        std::array<Label, 3> expect = {l1, l2, l3};
        PolygonalQuiver bq = build_block_quiver(polygon);
        std::array<int, 3> where{-1, -1, -1};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (bq.normals[b] == normals[a]) where[a] = b;
        bool sound = where[0] >= 0 && where[1] >= 0 && where[2] >= 0 && where[0] != where[1] &&
                     where[1] != where[2] && where[0] != where[2];
        for (int a = 0; a < 3 && sound; ++a) {
            sound = bq.quiver.label(where[a]) == expect[a];
            for (int b = 0; b < 3 && sound; ++b)
                sound = bq.quiver.arrows(where[a], where[b]) ==
                        block_quiver.arrows((*frame)[a], (*frame)[b]);
        }
        if (!sound) throw std::logic_error("reconstructed triangle fails re-verification");

        attempt.success = true;
        attempt.polygon = polygon;
        return attempt;
    }

    if (!any_x) {
        best.failed_condition = "C4";
        best.detail = "no base abscissa is coprime to the local index";
    }
    return best;
}

// ------------------------------------------------------------------ general

namespace {

// Affine form a + b * param over the rationals, param being the one
// abscissa a vanishing height leaves free.
struct Affine {
    Rational a, b;

    Rational at(const Rational& value) const { return a + b * value; }
    Affine operator+(const Affine& o) const { return {a + o.a, b + o.b}; }
    Affine operator-(const Affine& o) const { return {a - o.a, b - o.b}; }
    Affine scaled(const Rational& s) const { return {a * s, b * s}; }
};

// Index frame for one nomination: index 1 is the nominated vertex,
// 2..k-1 the out-arc, k the arrowless slot (a parallel-edge vertex or a
// doubled apex), k+1..n the in-arc.
struct NominationFrame {
    std::vector<int> vertex;  // 1-based; -1 marks the doubled apex slot
    int n = 0;
    int k = 0;
    bool has_gap_vertex = false;
};

std::optional<NominationFrame> make_frame(const DecoratedQuiver& q, const std::vector<int>& cycle,
                                          int nominated, std::string& why) {
    const int n = static_cast<int>(cycle.size());
    int pos = static_cast<int>(std::find(cycle.begin(), cycle.end(), nominated) - cycle.begin());
    std::vector<int> rotated(n);
    for (int i = 0; i < n; ++i) rotated[i] = cycle[(pos + i) % n];

    NominationFrame frame;
    frame.vertex.assign(2, -1);
    frame.vertex[1] = nominated;
    int i = 1;
    while (i < n && q.arrows(nominated, rotated[i]) > 0) frame.vertex.push_back(rotated[i++]);
    if (frame.vertex.size() == 2) {
        why = "nominated vertex has no outgoing arc along the cycle";
        return std::nullopt;
    }
    frame.k = static_cast<int>(frame.vertex.size());
    if (i < n && q.arrows(nominated, rotated[i]) == 0) {
        frame.has_gap_vertex = true;
        frame.vertex.push_back(rotated[i++]);
    } else {
        frame.vertex.push_back(-1);
    }
    if (i >= n) {
        why = "nominated vertex has no incoming arc along the cycle";
        return std::nullopt;
    }
    while (i < n && q.arrows(rotated[i], nominated) > 0) frame.vertex.push_back(rotated[i++]);
    if (i < n) {
        why = "cycle does not split into an out-arc, one gap and an in-arc";
        return std::nullopt;
    }
    frame.n = static_cast<int>(frame.vertex.size()) - 1;
    return frame;
}

struct GeneralContext {
    const DecoratedQuiver* q = nullptr;
    NominationFrame frame;
    std::vector<Int> y;     // 1-based heights, y[n+1] = y[1]
    std::vector<Int> w, l;  // 1-based labels per index
    std::vector<Int> s;     // 1-based: -arr(m_1, m_i)
    int r_asc = 0, r_desc = 0;

    bool is_edge(int i) const { return frame.vertex[i] >= 0; }
    // With a doubled apex, vertex k+1 repeats vertex k; edges k-1 and k+1
    // then share that point.
    bool same_point(int i, int j) const {
        if (i == j) return true;
        if (frame.has_gap_vertex) return false;
        int a = std::min(i, j), b = std::max(i, j);
        return a == frame.k && b == frame.k + 1;
    }
};

struct CandidateOutcome {
    bool success = false;
    std::string condition;
    std::string detail;
    std::optional<FanoPolygon> polygon;
    std::vector<Rational> xs, ts;
};

// Conditions (7)-(9) plus rebuild and re-verification, for fully determined
// abscissae.
CandidateOutcome evaluate_candidate(const GeneralContext& ctx, const std::vector<Rational>& xin) {
    const auto& frame = ctx.frame;
    const int n = frame.n, k = frame.k;
    CandidateOutcome out;

    std::vector<Rational> x = xin;  // 1-based, x[n+1] = x[1]
    out.xs.assign(x.begin() + 1, x.begin() + n + 1);

    for (int i = 1; i <= n; ++i)
        if (!x[i].is_integer()) {
            out.condition = "C7";
            out.detail = "abscissa is not integral at index " + std::to_string(i);
            return out;
        }

    std::vector<Rational> t(n + 1);
    for (int i = 1; i <= n; ++i) {
        if (!ctx.is_edge(i)) continue;
        t[i] = (x[i + 1] - x[i]) / Rational(ctx.w[i]);
        if (!t[i].is_integer()) {
            out.condition = "C7";
            out.detail = "edge direction is not integral at index " + std::to_string(i);
            return out;
        }
    }
    out.ts.assign(t.begin() + 1, t.end());

    for (int i = 2; i <= n; ++i) {
        if (gcd_abs(x[i].as_integer(), ctx.y[i]) != 1) {
            out.condition = "C7";
            out.detail = "vertex is imprimitive at index " + std::to_string(i);
            return out;
        }
        if (ctx.is_edge(i) && gcd_abs(ctx.s[i], t[i].as_integer()) != 1) {
            out.condition = "C7";
            out.detail = "normal is imprimitive at index " + std::to_string(i);
            return out;
        }
    }

    // (8): cross determinants of the normals reproduce the arrows.
    for (int i = 1; i <= n; ++i) {
        if (!ctx.is_edge(i)) continue;
        for (int j = i + 2; j <= n; ++j) {
            if (!ctx.is_edge(j) || (i == 1 && j == n)) continue;
            Int det = ctx.s[i] * t[j].as_integer() - ctx.s[j] * t[i].as_integer();
            if (det != ctx.q->arrows(frame.vertex[i], frame.vertex[j])) {
                out.condition = "C8";
                out.detail = "normal determinant disagrees with the arrows at (" +
                             std::to_string(i) + "," + std::to_string(j) + ")";
                return out;
            }
        }
    }

    // (9): every non-incident vertex lies strictly inside each half-plane.
    for (int i = 1; i <= n; ++i) {
        if (!ctx.is_edge(i)) continue;
        int succ = i == n ? 1 : i + 1;
        for (int j = 1; j <= n; ++j) {
            if (ctx.same_point(j, i) || ctx.same_point(j, succ)) continue;
            if (ctx.s[i] * x[j].as_integer() + t[i].as_integer() * ctx.y[j] <= -ctx.l[i]) {
                out.condition = "C9";
                out.detail = "vertex " + std::to_string(j) + " violates the half-plane of edge " +
                             std::to_string(i);
                return out;
            }
        }
    }

    std::vector<Vec2> vertices;
    for (int i = 1; i <= n; ++i) {
        if (i == k + 1 && !frame.has_gap_vertex) continue;
        vertices.emplace_back(x[i].as_integer(), ctx.y[i]);
    }
    try {
        FanoPolygon polygon(vertices);
        // Soundness: edge normals, labels and arrows must match the input.
        PolygonalQuiver bq = build_block_quiver(polygon);
        std::vector<int> where(n + 1, -1);
        for (int i = 1; i <= n; ++i) {
            if (!ctx.is_edge(i)) continue;
            Vec2 normal(ctx.s[i], t[i].as_integer());
            for (int b = 0; b < bq.quiver.size(); ++b)
                if (bq.normals[b] == normal) where[i] = b;
            if (where[i] < 0 || bq.quiver.label(where[i]).w != ctx.w[i] ||
                bq.quiver.label(where[i]).l != ctx.l[i])
                throw VerificationError("edge label mismatch");
            for (int j = 1; j < i; ++j)
                if (ctx.is_edge(j) && where[j] == where[i])
                    throw VerificationError("two indices matched one edge");
        }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (!ctx.is_edge(i) || !ctx.is_edge(j)) continue;
                if (bq.quiver.arrows(where[i], where[j]) !=
                    ctx.q->arrows(frame.vertex[i], frame.vertex[j]))
                    throw VerificationError("arrow mismatch");
            }
        out.success = true;
        out.polygon = polygon;
    } catch (const std::exception& e) {
        out.condition = "C9";
        out.detail = std::string("rebuilt polygon fails verification: ") + e.what();
    }
    return out;
}

}  // namespace

namespace {

ReconstructionReport reconstruct_driver(const DecoratedQuiver& block_quiver,
                                        std::vector<ReconstructionReport>* sink) {
    const int n_vertices = block_quiver.size();
    if (n_vertices < 3)
        throw std::invalid_argument("block quivers of polygons have at least three vertices");
    require_block_balanced(block_quiver);

    ReconstructionReport best;

    // (1): in+out reaches all but at most one other vertex, globally.
    for (int v = 0; v < n_vertices; ++v) {
        int missing = 0;
        for (int u = 0; u < n_vertices; ++u)
            if (u != v && block_quiver.arrows(v, u) == 0) ++missing;
        if (missing > 1) {
            best.failed_condition = "C1";
            best.detail = "vertex " + std::to_string(v) + " has " + std::to_string(missing) +
                          " unconnected partners";
            return best;
        }
    }

    // (2): the distinguished cycle must exist.
    HamiltonianData ham = hamiltonian(block_quiver);
    if (!ham.has_property) {
        best.failed_condition = "C2";
        best.detail = ham.failure;
        return best;
    }

    for (int nominated = 0; nominated < n_vertices; ++nominated) {
        ReconstructionReport report;
        report.nominated_vertex = nominated;

        std::string why;
        auto frame_opt = make_frame(block_quiver, ham.cycle, nominated, why);
        if (!frame_opt) {
            report.failed_condition = "C1";
            report.detail = why;
            keep_deepest(best, std::move(report));
            continue;
        }
        GeneralContext ctx;
        ctx.q = &block_quiver;
        ctx.frame = *frame_opt;
        const int n = ctx.frame.n, k = ctx.frame.k;

        // (3): positive labels everywhere.
        ctx.w.assign(n + 1, 0);
        ctx.l.assign(n + 1, 0);
        ctx.s.assign(n + 1, 0);
        bool positive = true;
        for (int i = 1; i <= n; ++i) {
            int v = ctx.frame.vertex[i];
            if (v < 0) continue;
            ctx.w[i] = block_quiver.label(v).w;
            ctx.l[i] = block_quiver.label(v).l;
            ctx.s[i] = -block_quiver.arrows(nominated, v);
            positive = positive && ctx.w[i] >= 1 && ctx.l[i] >= 1;
        }
        if (!positive) {
            report.failed_condition = "C3";
            report.detail = "labels must be positive";
            keep_deepest(best, std::move(report));
            continue;
        }

        // Height chains on both sides of the nominated edge.
        ctx.y.assign(n + 2, 0);
        ctx.y[1] = ctx.y[2] = -ctx.l[1];
        for (int i = 2; i <= k - 1; ++i)
            ctx.y[i + 1] =
                ctx.y[i] + ctx.w[i] * block_quiver.arrows(nominated, ctx.frame.vertex[i]);
        ctx.y[n + 1] = ctx.y[1];
        for (int j = n; j >= k + 1; --j)
            ctx.y[j] =
                ctx.y[j + 1] + ctx.w[j] * block_quiver.arrows(ctx.frame.vertex[j], nominated);
        if (ctx.y[k] != ctx.y[k + 1])
            throw std::logic_error("balanced quiver produced mismatched top heights");
        for (int i = 1; i <= n; ++i) report.y.push_back(Rational(ctx.y[i]));

        // (4): gap height matches its local index, or the apex is above zero.
        if (ctx.frame.has_gap_vertex ? ctx.y[k] != ctx.l[k] : ctx.y[k] <= 0) {
            report.failed_condition = "C4";
            report.detail = ctx.frame.has_gap_vertex
                                ? "parallel-edge height differs from its local index"
                                : "apex height is not positive";
            keep_deepest(best, std::move(report));
            continue;
        }

        ctx.r_asc = 0;
        for (int i = 3; i <= k - 1; ++i)
            if (ctx.y[i] == 0) ctx.r_asc = i;
        ctx.r_desc = 0;
        for (int j = k + 2; j <= n; ++j)
            if (ctx.y[j] == 0) ctx.r_desc = j;

        // (5): a base abscissa coprime to the nominated local index.
        std::vector<Int> x_candidates;
        for (Int x = 0; x < ctx.l[1]; ++x)
            if (gcd_abs(x, ctx.y[1]) == 1 && gcd_abs(x + ctx.w[1], ctx.y[2]) == 1)
                x_candidates.push_back(x);
        if (x_candidates.empty()) {
            report.failed_condition = "C5";
            report.detail = "no base abscissa is coprime to the local index";
            keep_deepest(best, std::move(report));
            continue;
        }

        for (Int x : x_candidates) {
            ReconstructionReport attempt;
            attempt.nominated_vertex = nominated;
            attempt.x_choice = x;
            attempt.y = report.y;

            // Ascending abscissa chain; a vanishing height detaches the
            // upper segment, which hangs off one free integer.
            std::vector<Affine> xf(n + 2, Affine{Rational(0), Rational(0)});
            std::string c6_failure;
            bool asc_free = false;
            xf[1] = {Rational(x), Rational(0)};
            xf[2] = {Rational(x + ctx.w[1]), Rational(0)};
            for (int i = 2; i <= k - 1; ++i) {
                if (ctx.r_asc != 0 && i == ctx.r_asc) {
                    // (6): the determinant relation at the vanishing height
                    // pins the abscissa already computed from below.
                    Rational pinned = Rational(ctx.w[i] * ctx.l[i]) / Rational(ctx.y[i + 1]);
                    if (xf[i].a != pinned)
                        c6_failure = "zero-height abscissa should be " + pinned.str() +
                                     ", ascending chain gives " + xf[i].a.str();
                    xf[i + 1] = {Rational(0), Rational(1)};
                    asc_free = true;
                } else {
                    xf[i + 1] = (xf[i].scaled(Rational(ctx.y[i + 1])) -
                                 Affine{Rational(ctx.w[i] * ctx.l[i]), Rational(0)})
                                    .scaled(Rational(1) / Rational(ctx.y[i]));
                }
            }

            // Descending chain from x_1 around the other side.
            std::vector<Affine> xg(n + 2, Affine{Rational(0), Rational(0)});
            bool desc_free = false;
            xg[n + 1] = {Rational(x), Rational(0)};
            for (int j = n; j >= k + 1 && c6_failure.empty(); --j) {
                if (ctx.r_desc != 0 && j + 1 == ctx.r_desc) {
                    // mirrored (6): the relation at this edge is a pure check.
                    Rational need = Rational(-ctx.w[j] * ctx.l[j]) / Rational(ctx.y[j]);
                    if (xg[ctx.r_desc].a != need)
                        c6_failure = "zero-height abscissa should be " + need.str() +
                                     ", descending chain gives " + xg[ctx.r_desc].a.str();
                    xg[j] = {Rational(0), Rational(1)};
                    desc_free = true;
                } else {
                    xg[j] = (xg[j + 1].scaled(Rational(ctx.y[j])) +
                             Affine{Rational(ctx.w[j] * ctx.l[j]), Rational(0)})
                                .scaled(Rational(1) / Rational(ctx.y[j + 1]));
                }
            }
            if (!c6_failure.empty()) {
                attempt.failed_condition = "C6";
                attempt.detail = c6_failure;
                keep_deepest(best, std::move(attempt));
                continue;
            }

            // (7c): glue the chains at the top of the polygon.
            Rational gap_width = ctx.frame.has_gap_vertex ? Rational(ctx.w[k]) : Rational(0);
            Affine glue = xf[k] - xg[k + 1] - Affine{gap_width, Rational(0)};

            auto assemble = [&](const Rational& pu, const Rational& pv) {
                std::vector<Rational> xs(n + 2);
                for (int i = 1; i <= k; ++i) xs[i] = xf[i].at(pu);
                for (int j = k + 1; j <= n; ++j) xs[j] = xg[j].at(pv);
                xs[n + 1] = xs[1];
                return evaluate_candidate(ctx, xs);
            };

            CandidateOutcome outcome;
            if (!asc_free && !desc_free) {
                if (glue.a != Rational(0)) {
                    outcome.condition = "C7";
                    outcome.detail = "chains do not glue at the top: offset " + glue.a.str();
                } else {
                    outcome = assemble(Rational(0), Rational(0));
                }
            } else if (asc_free != desc_free) {
                if (glue.b == Rational(0))
                    throw std::logic_error("free abscissa dropped out of the glue equation");
                Rational pin = -glue.a / glue.b;
                if (!pin.is_integer()) {
                    outcome.condition = "C7";
                    outcome.detail = "glued abscissa is not an integer: " + pin.str();
                } else {
                    outcome = assemble(asc_free ? pin : Rational(0), desc_free ? pin : Rational(0));
                }
            } else {
                // Both chains have a free abscissa and the glue ties them:
                // v = (xf[k](u) - gap - xg[k+1].a) / xg[k+1].b. The strict
                // half-plane constraints of (9) bound u to a finite window.
                const Rational vb = xg[k + 1].b;
                if (vb == Rational(0))
                    throw std::logic_error("free abscissa dropped out of the glue equation");
                const Rational valpha = (xf[k].a - gap_width - xg[k + 1].a) / vb;
                const Rational vbeta = xf[k].b / vb;
                auto x_in_u = [&](int i) -> Affine {
                    if (i == n + 1) return xf[1];
                    if (i <= k) return xf[i];
                    return Affine{xg[i].a + xg[i].b * valpha, xg[i].b * vbeta};
                };

                std::optional<Rational> lo, hi;
                bool infeasible = false;
                for (int i = 1; i <= n && !infeasible; ++i) {
                    if (!ctx.is_edge(i)) continue;
                    int succ = i == n ? 1 : i + 1;
                    Affine ti =
                        (x_in_u(i + 1) - x_in_u(i)).scaled(Rational(1) / Rational(ctx.w[i]));
                    for (int j = 1; j <= n && !infeasible; ++j) {
                        if (ctx.same_point(j, i) || ctx.same_point(j, succ)) continue;
                        // s_i * x_j + t_i * y_j + l_i > 0
                        Affine xj = x_in_u(j);
                        Rational slope = xj.b * Rational(ctx.s[i]) + ti.b * Rational(ctx.y[j]);
                        Rational icept = xj.a * Rational(ctx.s[i]) + ti.a * Rational(ctx.y[j]) +
                                         Rational(ctx.l[i]);
                        if (slope == Rational(0)) {
                            if (icept <= Rational(0)) infeasible = true;
                        } else {
                            Rational bound = -icept / slope;
                            if (slope > Rational(0)) {
                                if (!lo || bound > *lo) lo = bound;
                            } else {
                                if (!hi || bound < *hi) hi = bound;
                            }
                        }
                    }
                }
                if (infeasible || !lo || !hi || !(*lo < *hi)) {
                    outcome.condition = "C9";
                    outcome.detail = "no free abscissa satisfies the half-plane constraints";
                } else {
                    Int u = lo->num() / lo->den();
                    while (Rational(u) <= *lo) ++u;
                    CandidateOutcome deepest;
                    for (; Rational(u) < *hi; ++u) {
                        CandidateOutcome one = assemble(Rational(u), valpha + vbeta * Rational(u));
                        if (one.success) {
                            if (!deepest.success) {
                                // first hit flows out through the common path
                                deepest = std::move(one);
                                if (!sink) break;
                            } else if (sink) {
                                ReconstructionReport found;
                                found.success = true;
                                found.nominated_vertex = nominated;
                                found.x_choice = x;
                                found.polygon = one.polygon;
                                found.y = report.y;
                                found.x = one.xs;
                                found.t = one.ts;
                                for (int i = 1; i <= n; ++i) found.s.push_back(Rational(ctx.s[i]));
                                sink->push_back(std::move(found));
                            }
                            continue;
                        }
                        if (!deepest.success &&
                            (deepest.condition.empty() ||
                             condition_rank(one.condition) > condition_rank(deepest.condition)))
                            deepest = std::move(one);
                    }
                    if (!deepest.success && deepest.condition.empty()) {
                        deepest.condition = "C9";
                        deepest.detail = "the feasible abscissa window contains no integer";
                    }
                    outcome = std::move(deepest);
                }
            }

            attempt.x = outcome.xs;
            attempt.t = outcome.ts;
            for (int i = 1; i <= n; ++i) attempt.s.push_back(Rational(ctx.s[i]));
            if (outcome.success) {
                attempt.success = true;
                attempt.polygon = outcome.polygon;
                if (!sink) return attempt;
                sink->push_back(attempt);
                continue;
            }
            attempt.failed_condition = outcome.condition;
            attempt.detail = outcome.detail;
            keep_deepest(best, std::move(attempt));
        }
    }
    if (sink && !sink->empty()) return sink->front();
    return best;
}

}  // namespace

ReconstructionReport reconstruct_general(const DecoratedQuiver& block_quiver) {
    return reconstruct_driver(block_quiver, nullptr);
}

std::vector<ReconstructionReport> reconstruct_solutions(const DecoratedQuiver& block_quiver) {
    std::vector<ReconstructionReport> solutions;
    reconstruct_driver(block_quiver, &solutions);
    return solutions;
}

}  // namespace fanoq
