#include "vemlat/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace vemlat {

double ring_signed_area(const Ring& ring) {
  double acc = 0.0;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = ring[i];
    const Vec2& q = ring[(i + 1) % n];
    acc += cross(p, q);
  }
  return 0.5 * acc;
}

Vec2 ring_signed_first_moment(const Ring& ring) {
  Vec2 acc;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = ring[i];
    const Vec2& q = ring[(i + 1) % n];
    const double w = cross(p, q);
    acc.x += (p.x + q.x) * w;
    acc.y += (p.y + q.y) * w;
  }
  return acc / 6.0;
}

double rings_diameter(std::span<const Ring> loops) {
  std::vector<Vec2> pts;
  for (const Ring& r : loops) pts.insert(pts.end(), r.begin(), r.end());
  double best = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, (pts[i] - pts[j]).squared_norm());
  return std::sqrt(best);
}

PolygonGeometry polygon_geometry(std::span<const Ring> loops) {
  if (loops.empty()) throw std::invalid_argument("polygon has no rings");
  double area = 0.0;
  Vec2 moment;
  for (const Ring& ring : loops) {
    if (ring.size() < 3)
      throw std::invalid_argument("polygon ring has fewer than 3 vertices");
    area += ring_signed_area(ring);
    moment += ring_signed_first_moment(ring);
  }
  if (!(area > 0.0))
    throw std::runtime_error("malformed element: non-positive area");
  PolygonGeometry g;
  g.area = area;
  g.centroid = moment / area;
  g.diameter = rings_diameter(loops);
  return g;
}

PolygonGeometry polygon_geometry(const Ring& single_loop) {
  return polygon_geometry(std::span<const Ring>(&single_loop, 1));
}

bool point_in_ring(const Vec2& p, const Ring& ring) {
  bool inside = false;
  const size_t n = ring.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double t = (p.y - a.y) / (b.y - a.y);
      if (p.x < a.x + t * (b.x - a.x)) inside = !inside;
    }
  }
  return inside;
}

namespace {

int orientation_sign(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double v = cross(b - a, c - a);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  const int o1 = orientation_sign(p1, p2, q1);
  const int o2 = orientation_sign(p1, p2, q2);
  const int o3 = orientation_sign(q1, q2, p1);
  const int o4 = orientation_sign(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

}  // namespace

bool ring_is_simple(const Ring& ring) {
  const size_t n = ring.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a0 = ring[i];
    const Vec2& a1 = ring[(i + 1) % n];
    for (size_t j = i + 1; j < n; ++j) {
      // skip edges sharing a vertex
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      const Vec2& b0 = ring[j];
      const Vec2& b1 = ring[(j + 1) % n];
      if (segments_intersect(a0, a1, b0, b1)) return false;
    }
  }
  return true;
}

double distance_point_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squared_norm();
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

std::pair<Vec2, Vec2> bounding_box(std::span<const Vec2> pts) {
  Vec2 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
  Vec2 hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (const Vec2& p : pts) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  return {lo, hi};
}

}  // namespace vemlat
