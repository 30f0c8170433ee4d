#pragma once

#include <cmath>

namespace gcortop {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Distance from point p to the segment [a, b].
inline double segment_distance(const Point& p, const Point& a, const Point& b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 <= 0.0) return distance(p, a);
    double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::fmin(1.0, std::fmax(0.0, t));
    return distance(p, Point{a.x + t * dx, a.y + t * dy});
}

// Interior angle (radians, in [0, pi]) at vertex b of the polyline a-b-c.
// Collinear through-traffic gives pi; a full U-turn gives 0.
inline double interior_angle(const Point& a, const Point& b, const Point& c) {
    const double ux = a.x - b.x, uy = a.y - b.y;
    const double vx = c.x - b.x, vy = c.y - b.y;
    const double nu = std::hypot(ux, uy);
    const double nv = std::hypot(vx, vy);
    if (nu <= 0.0 || nv <= 0.0) return 0.0;
    double cosang = (ux * vx + uy * vy) / (nu * nv);
    cosang = std::fmin(1.0, std::fmax(-1.0, cosang));
    return std::acos(cosang);
}

}  // namespace gcortop
