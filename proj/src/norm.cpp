#include <echcap/norm.hpp>

#include <echcap/errors.hpp>

#include <utility>

namespace echcap {

SupportNorm::SupportNorm(MomentRegion region, Point origin)
    : region_(std::move(region)), origin_(std::move(origin)) {}

Rational SupportNorm::ell(const LatticeVector& v) const {
    if (v.dx == 0 && v.dy == 0) {
        throw PreconditionError("ell: zero vector");
    }
    const auto& verts = region_.vertices();
    Rational best = v.dx * (verts[0].x - origin_.x) + v.dy * (verts[0].y - origin_.y);
    for (std::size_t i = 1; i < verts.size(); ++i) {
        const Rational value =
            v.dx * (verts[i].x - origin_.x) + v.dy * (verts[i].y - origin_.y);
        if (value > best) best = value;
    }
    return best;
}

Rational SupportNorm::loop_length(const std::vector<LatticeVector>& edges) const {
    std::int64_t sx = 0, sy = 0;
    for (const LatticeVector& e : edges) {
        sx += e.dx;
        sy += e.dy;
    }
    if (sx != 0 || sy != 0) {
        throw PreconditionError("loop_length: edges do not close");
    }
    Rational total = 0;
    for (const LatticeVector& e : edges) total += ell(e);
    return total;
}

std::size_t SupportNorm::classify_direction(const LatticeVector& v) const {
    if (v.dx == 0 && v.dy == 0) {
        throw PreconditionError("classify_direction: zero vector");
    }
    const auto& verts = region_.vertices();
    std::size_t best_index = 0;
    Rational best = v.dx * (verts[0].x - origin_.x) + v.dy * (verts[0].y - origin_.y);
    for (std::size_t i = 1; i < verts.size(); ++i) {
        const Rational value =
            v.dx * (verts[i].x - origin_.x) + v.dy * (verts[i].y - origin_.y);
        if (value > best) {
            best = value;
            best_index = i;
        }
    }
    return best_index;
}

}  // namespace echcap
