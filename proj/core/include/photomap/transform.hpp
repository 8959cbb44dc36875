#pragma once

#include <cmath>

namespace photomap {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

// Wrap an angle to (-pi, pi].
double wrap_angle(double radians);

// Rotate v by theta in pixel axes (x right, y down).
Vec2 rotate(Vec2 v, double theta);

// 4-DOF similarity: apply(p) = scale * R(rotation) * p + (tx, ty).
// Registration reports it mapping frame-B centered pixel coordinates into
// frame-A centered pixel coordinates; the photomap reuses the same type as
// a frame-to-map pose.
struct SimilarityTransform {
    double scale = 1.0;
    double rotation = 0.0;  // radians, kept in (-pi, pi]
    double tx = 0.0;        // pixels
    double ty = 0.0;

    Vec2 apply(Vec2 p) const {
        Vec2 r = rotate({scale * p.x, scale * p.y}, rotation);
        return {r.x + tx, r.y + ty};
    }

    bool is_identity() const {
        return scale == 1.0 && rotation == 0.0 && tx == 0.0 && ty == 0.0;
    }
};

// A frame's placement in map coordinates (the first accepted frame's
// centered pixel grid).
using MapPose = SimilarityTransform;

// compose(parent, rel) maps a point through rel, then through parent.
// Throws ScaleOutOfRange when the combined scale leaves [1/64, 64].
SimilarityTransform compose(const SimilarityTransform& parent, const SimilarityTransform& rel);

// compose(t, invert(t)) is the identity in exact arithmetic.
SimilarityTransform invert(const SimilarityTransform& t);

}  // namespace photomap
