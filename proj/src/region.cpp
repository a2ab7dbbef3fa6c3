#include <echcap/region.hpp>

#include <echcap/errors.hpp>

#include <algorithm>
#include <utility>

namespace echcap {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

Rational orient(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

namespace {

Rational twice_signed_area(const std::vector<Point>& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

bool lex_less(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

bool on_segment(const Point& p, const Point& q, const Point& t) {
    if (orient(p, q, t) != 0) return false;
    return dot(t - p, q - p) >= 0 && dot(t - q, p - q) >= 0;
}

// Closed-segment intersection test (shared endpoints count).
bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    const Rational o1 = orient(p1, p2, q1);
    const Rational o2 = orient(p1, p2, q2);
    const Rational o3 = orient(q1, q2, p1);
    const Rational o4 = orient(q1, q2, p2);
    if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
        ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
        return true;
    }
    return (o1 == 0 && on_segment(p1, p2, q1)) || (o2 == 0 && on_segment(p1, p2, q2)) ||
           (o3 == 0 && on_segment(q1, q2, p1)) || (o4 == 0 && on_segment(q1, q2, p2));
}

// Canonical storage form: CCW, no consecutive duplicates, no straight-through
// vertices, rotated so the lexicographically smallest vertex is first.
std::vector<Point> canonicalize(std::vector<Point> v, const char* what) {
    // Drop consecutive duplicates (cyclically).
    std::vector<Point> w;
    for (const Point& p : v) {
        if (w.empty() || !(w.back() == p)) w.push_back(p);
    }
    while (w.size() > 1 && w.front() == w.back()) w.pop_back();
    if (w.size() < 3) {
        throw PreconditionError(std::string(what) + ": fewer than 3 distinct vertices");
    }

    Rational a2 = twice_signed_area(w);
    if (a2 == 0) {
        throw PreconditionError(std::string(what) + ": zero area");
    }
    if (a2 < 0) std::reverse(w.begin(), w.end());

    // Remove straight-through vertices; reject spikes (180-degree turns).
    bool changed = true;
    while (changed && w.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Point& prev = w[(i + w.size() - 1) % w.size()];
            const Point& cur = w[i];
            const Point& next = w[(i + 1) % w.size()];
            if (orient(prev, cur, next) == 0) {
                if (dot(next - cur, cur - prev) <= 0) {
                    throw PreconditionError(std::string(what) + ": boundary doubles back");
                }
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (w.size() < 3) {
        throw PreconditionError(std::string(what) + ": degenerate after cleanup");
    }

    const auto smallest = std::min_element(w.begin(), w.end(), lex_less);
    std::rotate(w.begin(), smallest, w.end());
    return w;
}

void check_simple(const std::vector<Point>& v, const char* what) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) {
                throw PreconditionError(std::string(what) + ": polygon is not simple");
            }
        }
    }
}

bool all_left_turns(const std::vector<Point>& v) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orient(v[i], v[(i + 1) % n], v[(i + 2) % n]) <= 0) return false;
    }
    return true;
}

// Sutherland-Hodgman step: keep the closed half-plane left of a -> b.
std::vector<Point> clip_by_halfplane(const std::vector<Point>& poly, const Point& a, const Point& b) {
    std::vector<Point> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        const Rational op = orient(a, b, p);
        const Rational oq = orient(a, b, q);
        if (op >= 0) out.push_back(p);
        if ((op > 0 && oq < 0) || (op < 0 && oq > 0)) {
            const Rational t = op / (op - oq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

std::vector<Point> scaled_vertices(const std::vector<Point>& v, const Rational& lambda, const Point& p) {
    if (lambda <= 0) {
        throw PreconditionError("scale_from: lambda must be positive");
    }
    std::vector<Point> out;
    out.reserve(v.size());
    for (const Point& q : v) {
        out.push_back({lambda * (q.x - p.x) + p.x, lambda * (q.y - p.y) + p.y});
    }
    return out;
}

std::vector<Point> translated_vertices(const std::vector<Point>& v, const Point& t) {
    std::vector<Point> out;
    out.reserve(v.size());
    for (const Point& q : v) out.push_back(q + t);
    return out;
}

}  // namespace

StarPolygon::StarPolygon(std::vector<Point> vertices)
    : vertices_(canonicalize(std::move(vertices), "StarPolygon")) {
    check_simple(vertices_, "StarPolygon");
}

bool StarPolygon::is_convex() const { return all_left_turns(vertices_); }

MomentRegion::MomentRegion(std::vector<Point> vertices)
    : vertices_(canonicalize(std::move(vertices), "MomentRegion")) {
    if (!all_left_turns(vertices_)) {
        throw PreconditionError("MomentRegion: polygon is not convex");
    }
}

MomentRegion make_ellipsoid(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) {
        throw PreconditionError("make_ellipsoid: parameters must be positive");
    }
    return MomentRegion({{0, 0}, {a, 0}, {0, b}});
}

MomentRegion make_polydisk(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) {
        throw PreconditionError("make_polydisk: parameters must be positive");
    }
    return MomentRegion({{0, 0}, {a, 0}, {a, b}, {0, b}});
}

MomentRegion intersect(const MomentRegion& r1, const MomentRegion& r2) {
    std::vector<Point> poly = r1.vertices();
    const auto& clip = r2.vertices();
    for (std::size_t i = 0; i < clip.size() && !poly.empty(); ++i) {
        poly = clip_by_halfplane(poly, clip[i], clip[(i + 1) % clip.size()]);
    }
    if (poly.size() < 3 || twice_signed_area(poly) == 0) {
        throw PreconditionError("intersect: intersection is empty or degenerate");
    }
    return MomentRegion(std::move(poly));
}

MomentRegion translate(const MomentRegion& r, const Point& t) {
    return MomentRegion(translated_vertices(r.vertices(), t));
}

StarPolygon translate(const StarPolygon& r, const Point& t) {
    return StarPolygon(translated_vertices(r.vertices(), t));
}

MomentRegion scale_from(const MomentRegion& r, const Rational& lambda, const Point& p) {
    return MomentRegion(scaled_vertices(r.vertices(), lambda, p));
}

StarPolygon scale_from(const StarPolygon& r, const Rational& lambda, const Point& p) {
    return StarPolygon(scaled_vertices(r.vertices(), lambda, p));
}

Rational area(const MomentRegion& r) { return twice_signed_area(r.vertices()) / 2; }

Rational area(const StarPolygon& r) { return twice_signed_area(r.vertices()) / 2; }

Rational enclosing_ball_radius(const MomentRegion& r) {
    Rational best = 0;
    for (const Point& p : r.vertices()) best = std::max(best, p.x + p.y);
    return best;
}

bool contains(const StarPolygon& poly, const Point& p) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        if (on_segment(a, b, p)) return true;
        if ((a.y > p.y) != (b.y > p.y)) {
            const Rational xin = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (xin > p.x) inside = !inside;
        }
    }
    return inside;
}

bool contains(const MomentRegion& region, const Point& p) {
    return contains(region.as_star_polygon(), p);
}

bool contains_segment(const StarPolygon& poly, const Point& a, const Point& b) {
    if (!contains(poly, a) || !contains(poly, b)) return false;
    if (a == b) return true;

    // Split [a,b] at every boundary crossing and test a point inside each
    // piece; exact, since the inside/outside status only changes at crossings.
    const Point d = b - a;
    std::vector<Rational> params = {Rational(0), Rational(1)};
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % n];
        const Point e = q - p;
        const Rational denom = d.x * e.y - d.y * e.x;
        const Point w = p - a;
        if (denom != 0) {
            const Rational t = (w.x * e.y - w.y * e.x) / denom;
            const Rational u = (w.x * d.y - w.y * d.x) / denom;
            if (t >= 0 && t <= 1 && u >= 0 && u <= 1) params.push_back(t);
        } else if (w.x * d.y - w.y * d.x == 0) {
            const Rational dd = dot(d, d);
            Rational tp = dot(p - a, d) / dd;
            Rational tq = dot(q - a, d) / dd;
            if (tp > tq) std::swap(tp, tq);
            tp = std::max(tp, Rational(0));
            tq = std::min(tq, Rational(1));
            if (tp <= tq) {
                params.push_back(tp);
                params.push_back(tq);
            }
        }
    }
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
        const Rational m = (params[i] + params[i + 1]) / 2;
        const Point mid{a.x + m * d.x, a.y + m * d.y};
        if (!contains(poly, mid)) return false;
    }
    return true;
}

namespace {

struct Interval {
    Rational lo;
    Rational hi;
};

// Intersection of the polygon with the line {coord axis_index == c}, as a
// merged list of closed intervals in the other coordinate. axis_index 0
// means a vertical line x = c (intervals in y), 1 a horizontal line y = c.
std::vector<Interval> line_chords(const StarPolygon& poly, int axis_index, const Rational& c) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    auto fixed_of = [&](const Point& p) { return axis_index == 0 ? p.x : p.y; };
    auto free_of = [&](const Point& p) { return axis_index == 0 ? p.y : p.x; };
    auto make_point = [&](const Rational& free) {
        return axis_index == 0 ? Point{c, free} : Point{free, c};
    };

    std::vector<Interval> raw;
    std::vector<Rational> cuts;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % n];
        const Rational fp = fixed_of(p) - c;
        const Rational fq = fixed_of(q) - c;
        if (fp == 0 && fq == 0) {
            Interval iv{free_of(p), free_of(q)};
            if (iv.lo > iv.hi) std::swap(iv.lo, iv.hi);
            raw.push_back(iv);
            cuts.push_back(iv.lo);
            cuts.push_back(iv.hi);
        } else if ((fp <= 0 && fq >= 0) || (fp >= 0 && fq <= 0)) {
            const Rational t = fp / (fp - fq);
            const Rational y = free_of(p) + t * (free_of(q) - free_of(p));
            raw.push_back({y, y});
            cuts.push_back(y);
        }
    }
    if (cuts.empty()) return {};

    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
        if (contains(poly, make_point(mid))) {
            raw.push_back({cuts[i], cuts[i + 1]});
        }
    }

    std::sort(raw.begin(), raw.end(),
              [](const Interval& a, const Interval& b) {
                  return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
              });
    std::vector<Interval> merged;
    for (const Interval& iv : raw) {
        if (!merged.empty() && iv.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    return merged;
}

// Chord scan for one coordinate plane. plane_index 0 checks P_1 = {rho1 = 0}
// (horizontal chords, anchored at rho1 = 0), plane_index 1 checks P_2.
AxisVerdict check_axis(const StarPolygon& r, int plane_index) {
    AxisVerdict verdict;
    verdict.axis = plane_index == 0 ? Axis::Axis1 : Axis::Axis2;

    const auto& v = r.vertices();
    auto plane_coord = [&](const Point& p) { return plane_index == 0 ? p.x : p.y; };
    Rational lo = plane_coord(v[0]);
    for (const Point& p : v) lo = std::min(lo, plane_coord(p));
    verdict.touched = (lo == 0);
    if (!verdict.touched) return verdict;

    // Chords normal to P_i vary rho_i; they are parametrized by the other
    // coordinate. The chord structure only changes at vertex coordinates,
    // so vertex values plus midpoints cover every case exactly.
    const int param_index = 1 - plane_index;
    std::vector<Rational> coords;
    for (const Point& p : v) coords.push_back(param_index == 0 ? p.x : p.y);
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    std::vector<Rational> samples = coords;
    for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
        samples.push_back((coords[i] + coords[i + 1]) / 2);
    }
    std::sort(samples.begin(), samples.end());

    for (const Rational& c : samples) {
        const auto chords = line_chords(r, param_index, c);
        if (chords.empty()) continue;
        if (chords.size() > 1 || chords.front().lo != 0) {
            verdict.pass = false;
            verdict.witness = c;
            return verdict;
        }
    }
    return verdict;
}

}  // namespace

CriterionReport criterion_check(const StarPolygon& r) {
    for (const Point& p : r.vertices()) {
        if (p.x < 0 || p.y < 0) {
            throw PreconditionError("criterion_check: polygon must lie in the closed first quadrant");
        }
    }
    CriterionReport report;
    report.axis1 = check_axis(r, 0);
    report.axis2 = check_axis(r, 1);
    return report;
}

std::optional<MomentRegion> star_kernel(const StarPolygon& r) {
    const auto& v = r.vertices();
    Rational minx = v[0].x, maxx = v[0].x, miny = v[0].y, maxy = v[0].y;
    for (const Point& p : v) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    std::vector<Point> kernel = {{minx, miny}, {maxx, miny}, {maxx, maxy}, {minx, maxy}};
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n && !kernel.empty(); ++i) {
        kernel = clip_by_halfplane(kernel, v[i], v[(i + 1) % n]);
    }
    if (kernel.size() < 3 || twice_signed_area(kernel) == 0) return std::nullopt;
    return MomentRegion(std::move(kernel));
}

TransversalityResult transversality_check(const StarPolygon& r, const Point& center) {
    const auto kernel = star_kernel(r);
    if (!kernel || !contains(*kernel, center)) {
        throw PreconditionError("transversality_check: center is not a star-center");
    }
    const auto& v = r.vertices();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orient(v[i], v[(i + 1) % n], center) == 0) {
            return {false, i};
        }
    }
    return {true, std::nullopt};
}

}  // namespace echcap
