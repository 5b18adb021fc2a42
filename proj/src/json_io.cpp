#include "nsmac/json_io.hpp"

namespace nsmac {

using nlohmann::json;

json to_json(const WeightVector& v) { return json(v); }

json to_json(const PointSet& s) {
    json a = json::array();
    for (const auto& p : s) a.push_back(to_json(p));
    return a;
}

json to_json(const Filling& f) {
    Diagram d = build_diagram(f.shape);
    json labels = json::array();
    for (std::size_t k = 0; k < d.boxes.size(); ++k)
        labels.push_back({d.boxes[k].col, d.boxes[k].row, f.labels[k]});
    return json{{"shape", f.shape}, {"labels", labels}};
}

json to_json(const LatticePolytope& P) {
    json facets = json::array();
    for (const auto& f : P.facets) {
        json normal = json::array();
        for (const auto& x : f.normal) normal.push_back(rational_to_string(x));
        facets.push_back({{"normal", normal}, {"offset", rational_to_string(f.offset)}});
    }
    json edges = json::array();
    for (const auto& [a, b] : P.edges) edges.push_back({a, b});
    return json{{"dim", P.dim},
                {"vertices", to_json(P.vertices)},
                {"edges", edges},
                {"facets", facets}};
}

json to_json(const SparsePolynomial& p) {
    json a = json::array(); // terms map is exponent-sorted already
    for (const auto& [expo, coef] : p.terms)
        a.push_back({{"exponent", expo}, {"coefficient", rational_to_string(coef)}});
    return a;
}

json to_json(const MConvexCertificate& c) {
    json steps = json::array();
    for (const auto& s : c.steps) {
        if (s.kind == CertificateStep::Kind::Rotate)
            steps.push_back({{"op", "rotate"}});
        else
            steps.push_back({{"op", "shift-column"}, {"column", s.column}});
    }
    return json{{"target", c.target}, {"steps", steps}, {"support", to_json(c.support)}};
}

WeightVector weight_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a non-empty integer array");
    WeightVector v;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw std::invalid_argument("expected integer entries");
        v.push_back(x.get<Int>());
    }
    return v;
}

PointSet point_set_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a non-empty array of points");
    PointSet s;
    for (const auto& x : j) s.push_back(weight_from_json(x));
    canonicalize(s);
    return s;
}

} // namespace nsmac
