#include "fanoq/json_io.hpp"

namespace fanoq {

namespace {

Json vec_json(const Vec2& v) { return Json::array({v.x(), v.y()}); }

Json rationals_json(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const Rational& r : values) arr.push_back(r.str());
    return arr;
}

Vec2 vec_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a pair [x, y]");
    return Vec2(j[0].get<Int>(), j[1].get<Int>());
}

}  // namespace

Json to_json(const FanoPolygon& polygon) {
    Json j;
    j["orientation"] = polygon.lattice().orientation;
    Json verts = Json::array();
    for (const Vec2& v : polygon.vertices()) verts.push_back(vec_json(v));
    j["vertices"] = verts;
    return j;
}

FanoPolygon polygon_from_json(const Json& j) {
    OrientedLattice2 lattice;
    if (j.contains("orientation")) {
        int orientation = j.at("orientation").get<int>();
        if (orientation != 1 && orientation != -1)
            throw std::invalid_argument("orientation must be 1 or -1");
        lattice.orientation = orientation;
    }
    std::vector<Vec2> vertices;
    for (const Json& item : j.at("vertices")) vertices.push_back(vec_from(item));
    return FanoPolygon(lattice, std::move(vertices));
}

Json to_json(const StandardRefinement& refinement) {
    Json cones = Json::array();
    for (std::size_t i = 0; i < refinement.cones.size(); ++i) {
        const ConeData& cone = refinement.cones[i];
        Json c;
        c["u"] = vec_json(cone.u);
        c["v"] = vec_json(cone.v);
        c["w"] = cone.w;
        c["l"] = cone.l;
        c["m"] = vec_json(cone.m);
        c["r"] = cone.r;
        c["a"] = cone.a;
        c["type"] = cone.is_t_cone() ? "T" : "R";
        c["edge"] = refinement.edge_of[i];
        cones.push_back(c);
    }
    return Json{{"cones", cones}};
}

Json to_json(const DecoratedQuiver& quiver) {
    Json labels = Json::array();
    for (const Label& label : quiver.labels()) labels.push_back(Json::array({label.w, label.l}));
    Json exchange = Json::array();
    for (int i = 0; i < quiver.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < quiver.size(); ++j) row.push_back(quiver.arrows(i, j));
        exchange.push_back(row);
    }
    return Json{{"labels", labels}, {"exchange", exchange}};
}

DecoratedQuiver quiver_from_json(const Json& j) {
    std::vector<Label> labels;
    for (const Json& item : j.at("labels")) {
        if (!item.is_array() || item.size() != 2)
            throw std::invalid_argument("labels must be pairs [w, l]");
        labels.push_back({item[0].get<Int>(), item[1].get<Int>()});
    }
    const auto n = labels.size();
    IntMatrix exchange(n, n);
    const Json& rows = j.at("exchange");
    if (rows.size() != n) throw std::invalid_argument("exchange matrix size mismatch");
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n) throw std::invalid_argument("exchange matrix is not square");
        for (std::size_t c = 0; c < n; ++c) exchange(r, c) = rows[r][c].get<Int>();
    }
    return DecoratedQuiver(std::move(labels), std::move(exchange));
}

Json to_json(const PolygonalQuiver& pq) {
    Json j = to_json(pq.quiver);
    Json normals = Json::array();
    for (const Vec2& m : pq.normals) normals.push_back(vec_json(m));
    j["normals"] = normals;
    j["source"] = to_json(pq.source);
    return j;
}

Json to_json(const SingularityContent& content) {
    Json basket = Json::array();
    for (const auto& [r, a] : content.basket) basket.push_back(Json{{"r", r}, {"a", a}});
    return Json{{"tau", content.tau}, {"basket", basket}};
}

Json to_json(const MarkovPoint& point) {
    Json j;
    j["x"] = point.x;
    j["y"] = point.y;
    j["z"] = point.z;
    j["t"] = point.t.str();
    j["residual"] = point.residual.str();
    return j;
}

Json to_json(const ReconstructionReport& report) {
    Json j;
    j["outcome"] = report.success ? "success" : "failure";
    if (report.polygon) j["polygon"] = to_json(*report.polygon);
    j["nominated_vertex"] = report.nominated_vertex;
    j["x_choice"] = report.x_choice;
    if (!report.success) j["failed_condition"] = report.failed_condition;
    if (!report.detail.empty()) j["detail"] = report.detail;
    Json transcript;
    transcript["y"] = rationals_json(report.y);
    transcript["x"] = rationals_json(report.x);
    transcript["s"] = rationals_json(report.s);
    transcript["t"] = rationals_json(report.t);
    j["transcript"] = transcript;
    return j;
}

Json to_json(const BlockComplex3& complex) {
    Json normals = Json::array();
    for (const Vec3& m : complex.normals) normals.push_back(Json::array({m.x(), m.y(), m.z()}));
    Json simplices = Json::array();
    for (const auto& simplex : complex.simplices)
        simplices.push_back(Json{{"triple", simplex.triple}, {"multiplicity", simplex.multiplicity}});
    return Json{{"normals", normals}, {"simplices", simplices}};
}

FanoPolytope3 polytope_from_json(const Json& j) {
    FanoPolytope3 polytope;
    for (const Json& item : j.at("vertices")) {
        if (!item.is_array() || item.size() != 3)
            throw std::invalid_argument("expected a triple [x, y, z]");
        polytope.vertices.emplace_back(item[0].get<Int>(), item[1].get<Int>(), item[2].get<Int>());
    }
    return polytope;
}

}  // namespace fanoq
