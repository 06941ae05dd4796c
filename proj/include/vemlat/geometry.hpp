#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace vemlat {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
  // 90-degree counter-clockwise rotation
  Vec2 perp() const { return {-y, x}; }
  Vec2 normalized() const {
    const double n = norm();
    return {x / n, y / n};
  }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Ordered vertex loop; not closed (last vertex != first).
using Ring = std::vector<Vec2>;

// Shoelace signed area; positive for counter-clockwise rings.
double ring_signed_area(const Ring& ring);

// Signed first moment: integral of (x, y) over the enclosed region.
Vec2 ring_signed_first_moment(const Ring& ring);

// Maximum pairwise vertex distance over all rings.
double rings_diameter(std::span<const Ring> loops);

struct PolygonGeometry {
  double area = 0.0;
  Vec2 centroid;
  double diameter = 0.0;
};

// Area, centroid and diameter of a polygon given as one outer ring (CCW)
// plus optional hole rings (CW, subtract). Throws std::invalid_argument on a
// ring with fewer than 3 vertices and std::runtime_error when the net area is
// not positive.
PolygonGeometry polygon_geometry(std::span<const Ring> loops);
PolygonGeometry polygon_geometry(const Ring& single_loop);

// Crossing-number point-in-polygon test for a single ring (any orientation).
bool point_in_ring(const Vec2& p, const Ring& ring);

// True when no two non-adjacent edges of the ring intersect.
bool ring_is_simple(const Ring& ring);

double distance_point_segment(const Vec2& p, const Vec2& a, const Vec2& b);

// Bounding box of a point set as (min, max) corners.
std::pair<Vec2, Vec2> bounding_box(std::span<const Vec2> pts);

}  // namespace vemlat
