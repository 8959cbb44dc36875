#include "photomap/transform.hpp"

#include "photomap/errors.hpp"

#include <cmath>
#include <numbers>

namespace photomap {

double wrap_angle(double radians) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(radians, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    if (a > std::numbers::pi) a -= two_pi;
    return a;
}

Vec2 rotate(Vec2 v, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

SimilarityTransform compose(const SimilarityTransform& parent, const SimilarityTransform& rel) {
    SimilarityTransform out;
    out.scale = parent.scale * rel.scale;
    if (out.scale < 1.0 / 64.0 || out.scale > 64.0) {
        throw ScaleOutOfRange("composed scale outside [1/64, 64]");
    }
    out.rotation = wrap_angle(parent.rotation + rel.rotation);
    Vec2 t = rotate({parent.scale * rel.tx, parent.scale * rel.ty}, parent.rotation);
    out.tx = t.x + parent.tx;
    out.ty = t.y + parent.ty;
    return out;
}

SimilarityTransform invert(const SimilarityTransform& t) {
    SimilarityTransform out;
    out.scale = 1.0 / t.scale;
    out.rotation = wrap_angle(-t.rotation);
    Vec2 ti = rotate({t.tx / t.scale, t.ty / t.scale}, -t.rotation);
    out.tx = -ti.x;
    out.ty = -ti.y;
    return out;
}

}  // namespace photomap
