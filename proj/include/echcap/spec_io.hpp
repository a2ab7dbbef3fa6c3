#pragma once

#include <echcap/lattice.hpp>
#include <echcap/region.hpp>

#include <nlohmann/json.hpp>

#include <optional>

namespace echcap {

// A resolved region-spec document. The polygon is always present; convex is
// set when the polygon is convex and can serve as a MomentRegion.
struct ResolvedRegion {
    StarPolygon polygon;
    std::optional<MomentRegion> convex;

    const MomentRegion& require_convex() const;
};

// Region-spec JSON:
//   {"kind":"ellipsoid","a":"2","b":"4"}
//   {"kind":"polydisk","a":"1","b":"2"}
//   {"kind":"ball","a":"1"}
//   {"kind":"polygon","vertices":[["0","0"],["2","0"],...]}
//   {"kind":"intersection","of":[spec,spec,...]}
//   {"kind":"translate","of":spec,"by":["1","1"]}
//   {"kind":"scale","of":spec,"factor":"3/2","from":["0","0"]}
// Rationals are strings "p/q" or integer strings.
ResolvedRegion resolve_region_spec(const nlohmann::json& spec);

// Structural validation plus canonical rational strings; the result resolves
// to the same region as the input.
nlohmann::json normalize_region_spec(const nlohmann::json& spec);

nlohmann::json loop_to_json(const ConvexLoop& loop, const Rational& length);

nlohmann::json point_to_json(const Point& p);
nlohmann::json vertices_to_json(const std::vector<Point>& vertices);

}  // namespace echcap
