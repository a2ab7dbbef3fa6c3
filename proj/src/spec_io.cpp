#include <echcap/spec_io.hpp>

#include <echcap/errors.hpp>

namespace echcap {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const char* context) {
    if (!j.is_string()) {
        throw ParseError(std::string(context) + ": rationals must be strings");
    }
    return parse_rational(j.get<std::string>());
}

Point point_field(const json& j, const char* context) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError(std::string(context) + ": expected a [x, y] pair");
    }
    return {rational_field(j[0], context), rational_field(j[1], context)};
}

ResolvedRegion from_vertices(std::vector<Point> vertices) {
    StarPolygon polygon(std::move(vertices));
    ResolvedRegion out{polygon, std::nullopt};
    if (polygon.is_convex()) {
        out.convex = MomentRegion(polygon.vertices());
    }
    return out;
}

const json& required(const json& spec, const char* field) {
    const auto it = spec.find(field);
    if (it == spec.end()) {
        throw ParseError(std::string("region spec: missing field '") + field + "'");
    }
    return *it;
}

}  // namespace

const MomentRegion& ResolvedRegion::require_convex() const {
    if (!convex) {
        throw PreconditionError("region spec resolves to a non-convex polygon; "
                                "this operation requires a convex region");
    }
    return *convex;
}

ResolvedRegion resolve_region_spec(const json& spec) {
    if (!spec.is_object()) {
        throw ParseError("region spec: expected a JSON object");
    }
    const std::string kind = required(spec, "kind").is_string()
                                 ? required(spec, "kind").get<std::string>()
                                 : throw ParseError("region spec: 'kind' must be a string");

    if (kind == "ellipsoid") {
        const Rational a = rational_field(required(spec, "a"), "ellipsoid");
        const Rational b = rational_field(required(spec, "b"), "ellipsoid");
        return from_vertices(make_ellipsoid(a, b).vertices());
    }
    if (kind == "ball") {
        const Rational a = rational_field(required(spec, "a"), "ball");
        return from_vertices(make_ellipsoid(a, a).vertices());
    }
    if (kind == "polydisk") {
        const Rational a = rational_field(required(spec, "a"), "polydisk");
        const Rational b = rational_field(required(spec, "b"), "polydisk");
        return from_vertices(make_polydisk(a, b).vertices());
    }
    if (kind == "polygon") {
        const json& verts = required(spec, "vertices");
        if (!verts.is_array() || verts.size() < 3) {
            throw ParseError("polygon: 'vertices' must be an array of at least 3 points");
        }
        std::vector<Point> points;
        for (const auto& v : verts) points.push_back(point_field(v, "polygon"));
        return from_vertices(std::move(points));
    }
    if (kind == "intersection") {
        const json& of = required(spec, "of");
        if (!of.is_array() || of.size() < 2) {
            throw ParseError("intersection: 'of' must be an array of at least 2 specs");
        }
        MomentRegion acc = resolve_region_spec(of[0]).require_convex();
        for (std::size_t i = 1; i < of.size(); ++i) {
            acc = intersect(acc, resolve_region_spec(of[i]).require_convex());
        }
        return from_vertices(acc.vertices());
    }
    if (kind == "translate") {
        const ResolvedRegion inner = resolve_region_spec(required(spec, "of"));
        const Point by = point_field(required(spec, "by"), "translate");
        return from_vertices(translate(inner.polygon, by).vertices());
    }
    if (kind == "scale") {
        const ResolvedRegion inner = resolve_region_spec(required(spec, "of"));
        const Rational factor = rational_field(required(spec, "factor"), "scale");
        const Point from = point_field(required(spec, "from"), "scale");
        return from_vertices(scale_from(inner.polygon, factor, from).vertices());
    }
    throw ParseError("region spec: unknown kind '" + kind + "'");
}

namespace {

json normalize_rational(const json& j, const char* context) {
    return rational_to_string(rational_field(j, context));
}

json normalize_point(const json& j, const char* context) {
    const Point p = point_field(j, context);
    return json::array({rational_to_string(p.x), rational_to_string(p.y)});
}

}  // namespace

json normalize_region_spec(const json& spec) {
    resolve_region_spec(spec);  // full validation first
    const std::string kind = spec.at("kind").get<std::string>();
    json out;
    out["kind"] = kind;
    if (kind == "ellipsoid" || kind == "polydisk") {
        out["a"] = normalize_rational(spec.at("a"), kind.c_str());
        out["b"] = normalize_rational(spec.at("b"), kind.c_str());
    } else if (kind == "ball") {
        out["a"] = normalize_rational(spec.at("a"), "ball");
    } else if (kind == "polygon") {
        json verts = json::array();
        for (const auto& v : spec.at("vertices")) verts.push_back(normalize_point(v, "polygon"));
        out["vertices"] = std::move(verts);
    } else if (kind == "intersection") {
        json of = json::array();
        for (const auto& sub : spec.at("of")) of.push_back(normalize_region_spec(sub));
        out["of"] = std::move(of);
    } else if (kind == "translate") {
        out["of"] = normalize_region_spec(spec.at("of"));
        out["by"] = normalize_point(spec.at("by"), "translate");
    } else if (kind == "scale") {
        out["of"] = normalize_region_spec(spec.at("of"));
        out["factor"] = normalize_rational(spec.at("factor"), "scale");
        out["from"] = normalize_point(spec.at("from"), "scale");
    }
    return out;
}

json loop_to_json(const ConvexLoop& loop, const Rational& length) {
    json edges = json::array();
    for (const LatticeVector& e : loop.edges) {
        edges.push_back(json::array({e.dx, e.dy}));
    }
    return json{{"base", json::array({loop.base.x, loop.base.y})},
                {"edges", std::move(edges)},
                {"length", rational_to_string(length)},
                {"points", enclosed_count(loop)}};
}

json point_to_json(const Point& p) {
    return json::array({rational_to_string(p.x), rational_to_string(p.y)});
}

json vertices_to_json(const std::vector<Point>& vertices) {
    json out = json::array();
    for (const Point& p : vertices) out.push_back(point_to_json(p));
    return out;
}

}  // namespace echcap
