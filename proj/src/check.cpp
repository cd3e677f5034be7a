#include "fanoq/check.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace fanoq {

namespace {

void expect(CheckSummary& summary, bool condition, const std::string& message) {
    ++summary.checks;
    if (!condition) summary.violations.push_back(message);
}

std::string tag(const FanoPolygon& polygon) {
    std::string s = "polygon";
    for (const Vec2& v : polygon.vertices())
        s += " (" + std::to_string(v.x()) + "," + std::to_string(v.y()) + ")";
    return s;
}

Int geometric_diameter(const FanoPolygon& polygon, const Vec2& m) {
    Int lo = 0, hi = 0;
    for (int i = 0; i < polygon.size(); ++i) {
        Int h = dot2(m, polygon.vertex(i));
        lo = std::min(lo, h);
        hi = std::max(hi, h);
    }
    return hi - lo;
}

}  // namespace

void check_polygon(const FanoPolygon& polygon, CheckSummary& summary) {
    ++summary.polygons;
    const std::string name = tag(polygon);

    // Volume: shoelace against the refinement cone sum.
    Int volume = 0;
    try {
        volume = normalized_volume(polygon);
        expect(summary, volume > 0, name + ": volume not positive");
    } catch (const VerificationError& e) {
        expect(summary, false, name + ": " + e.what());
    }

    PolygonalQuiver pq = build_quiver(polygon);
    PolygonalQuiver bq = build_block_quiver(polygon);

    // Refinement placement choice does not change the cone multiset.
    {
        auto key = [](const StandardRefinement& r) {
            std::multiset<std::tuple<Int, Int, bool>> cones;
            for (const ConeData& c : r.cones) cones.insert({c.w, c.l, c.is_t_cone()});
            return cones;
        };
        expect(summary,
               key(standard_refinement(polygon, RConePlacement::Last)) ==
                   key(standard_refinement(polygon, RConePlacement::First)),
               name + ": refinement multiset depends on the R-cone placement");
    }

    // Volume from quiver labels.
    {
        Int from_labels = 0;
        for (const Label& label : pq.quiver.labels()) from_labels += label.w * label.l;
        expect(summary, from_labels == volume, name + ": label volume sum differs from shoelace");
    }

    // Balancing, with diameters equal to the geometric heights.
    {
        BalancingReport report = balancing(pq.quiver);
        expect(summary, report.all_balanced(), name + ": refinement quiver is not balanced");
        for (int v = 0; v < pq.quiver.size(); ++v)
            expect(summary,
                   report.vertices[v].diameter == geometric_diameter(polygon, pq.normals[v]),
                   name + ": diameter differs from the height span at vertex " + std::to_string(v));
        expect(summary, balancing(bq.quiver).all_balanced(),
               name + ": block quiver is not balanced");
    }

    // Labels stay in the polygonal range and the quiver has a cycle.
    for (const Label& label : pq.quiver.labels())
        expect(summary, label.w >= 1 && label.w <= label.l,
               name + ": label outside 1 <= w <= l");

    // Block structure agrees with the per-edge construction.
    expect(summary, quivers_isomorphic(block(pq.quiver), bq.quiver),
           name + ": block of the refinement quiver differs from the edge quiver");
    expect(summary, is_block(bq.quiver), name + ": edge quiver is not its own block");

    // Near-completeness of in+out for the block quiver.
    for (int v = 0; v < bq.quiver.size(); ++v) {
        int connected = 0;
        for (int u = 0; u < bq.quiver.size(); ++u)
            if (u != v && bq.quiver.arrows(v, u) != 0) ++connected;
        expect(summary, connected >= bq.quiver.size() - 2,
               name + ": block vertex misses more than one partner");
    }

    // Distinguished cycle exists and follows the edge order.
    {
        HamiltonianData ham = hamiltonian(bq.quiver);
        expect(summary, ham.has_property, name + ": block quiver lost the distinguished cycle");
        if (ham.has_property) {
            int at = static_cast<int>(std::find(ham.cycle.begin(), ham.cycle.end(), 0) -
                                      ham.cycle.begin());
            bool matches = true;
            for (int i = 0; i < bq.quiver.size(); ++i)
                matches = matches && ham.cycle[(at + i) % bq.quiver.size()] == i;
            expect(summary, matches, name + ": cycle order differs from the edge order");
        }
    }

    // Degree: quiver formula against the dual volume, on both quivers.
    {
        Rational degree = dual_degree(polygon);
        try {
            expect(summary, degree_from_quiver(pq) == degree, name + ": degree mismatch (quiver)");
            expect(summary, degree_from_quiver(bq.quiver) == degree,
                   name + ": degree mismatch (block)");
        } catch (const std::exception& e) {
            expect(summary, false, name + ": " + e.what());
        }
        expect(summary, quiver_degree_check(polygon), name + ": degree formula check failed");
        SingularityContent content = singularity_content(polygon);
        expect(summary,
               degree == Rational(12) - Rational(content.tau) + residual_sum(polygon),
               name + ": residual sum does not close the degree relation");
        if (content.basket.empty())
            expect(summary, degree == Rational(12 - content.tau),
                   name + ": empty basket degree differs from 12 - tau");
    }

    // Reflexive specialization: all local indices 1 forces (1,1) labels and
    // equal in/out arrow counts.
    {
        bool reflexive = true;
        for (const Label& label : bq.quiver.labels()) reflexive = reflexive && label.l == 1;
        if (reflexive) {
            for (const Label& label : pq.quiver.labels())
                expect(summary, label.w == 1 && label.l == 1,
                       name + ": reflexive polygon with a non-(1,1) label");
            for (int v = 0; v < pq.quiver.size(); ++v) {
                Int in = 0, out = 0;
                for (int u = 0; u < pq.quiver.size(); ++u) {
                    Int a = pq.quiver.arrows(v, u);
                    (a > 0 ? out : in) += a > 0 ? a : -a;
                }
                expect(summary, in == out, name + ": reflexive in/out arrow counts differ");
            }
        }
    }

    // Markov point sits on the hypersurface.
    expect(summary, markov_point(polygon).residual == Rational(0),
           name + ": Markov residual is nonzero");

    // Mutation: invariants, closure and the polygon dictionary, per vertex.
    const SingularityContent content = singularity_content(polygon);
    const Rational degree = dual_degree(polygon);
    const Int g = gcd_arrows(pq.quiver);
    const Int wq = gcd_weights(pq.quiver);
    for (int v = 0; v < pq.quiver.size(); ++v) {
        expect(summary, commutation_check(polygon, v),
               name + ": mutation dictionary fails at vertex " + std::to_string(v));
        DecoratedQuiver mutated = mutate(pq.quiver, v);
        expect(summary, gcd_arrows(mutated) == g, name + ": arrow gcd not preserved");
        expect(summary, gcd_weights(mutated) == wq, name + ": weight gcd not preserved");
        expect(summary, balancing(mutated).all_balanced(), name + ": mutation broke balancing");

        if (pq.quiver.label(v).w == pq.quiver.label(v).l) {
            FanoPolygon image = mutate_polygon(polygon, pq.normals[v]);
            expect(summary, singularity_content(image) == content,
                   name + ": singularity content not mutation-invariant");
            expect(summary, dual_degree(image) == degree,
                   name + ": degree not mutation-invariant");
            expect(summary,
                   polygons_equivalent(mutate_polygon(image, Vec2(-pq.normals[v])), polygon,
                                       EquivalenceGroup::GL),
                   name + ": polygon mutation is not an involution");
        }
    }

    // Reconstruction round trip through the block quiver.
    {
        ReconstructionReport report = reconstruct_general(bq.quiver);
        expect(summary, report.success, name + ": reconstruction failed (" +
                                            report.failed_condition + ": " + report.detail + ")");
        if (report.success) {
            expect(summary,
                   polygons_equivalent(*report.polygon, polygon, EquivalenceGroup::GL),
                   name + ": reconstruction returned an inequivalent polygon");
            if (!polygons_equivalent(*report.polygon, polygon, EquivalenceGroup::SL))
                ++summary.sl_class_flips;
        }
    }
}

CheckSummary check_corpus(Int bound, std::uint64_t seed) {
    CheckSummary summary;
    std::vector<FanoPolygon> corpus = enumerate_fano_polygons(bound);
    for (const FanoPolygon& polygon : corpus) check_polygon(polygon, summary);

    // Seeded probes of the generalized mutation laws on corpus quivers.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(corpus.size()) - 1);
    std::uniform_int_distribution<Int> pick_k(-2, 2);
    std::uniform_int_distribution<Int> pick_exp(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const FanoPolygon& polygon = corpus[pick(rng)];
        DecoratedQuiver quiver = build_quiver(polygon).quiver;
        std::uniform_int_distribution<int> pick_vertex(0, quiver.size() - 1);
        int m = pick_vertex(rng);
        Int k = pick_k(rng);
        DecoratedQuiver once = mutate(quiver, m, k);
        expect(summary, balancing(once).all_balanced(), "mutation closure violated");
        expect(summary, diameter(once, m) == diameter(quiver, m),
               "diameter changed under mutation");
        expect(summary, mutate(once, m, k) == quiver, "generalized mutation is not self-inverse");
        expect(summary, mutation_group_check(quiver, m, pick_exp(rng), pick_exp(rng)),
               "mutation group identity violated");
        expect(summary, balanced_vertex_count(once) == quiver.size(),
               "balanced vertex count changed");
    }
    return summary;
}

}  // namespace fanoq
