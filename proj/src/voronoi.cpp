#include "vemlat/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "vemlat/rng.hpp"

namespace vemlat {

Ring DomainSpec::boundary_polygon() const {
  Ring ring;
  if (shape == Shape::Rectangle) {
    ring = {rect_min, {rect_max.x, rect_min.y}, rect_max, {rect_min.x, rect_max.y}};
  } else {
    ring.reserve(circle_segments);
    for (int k = 0; k < circle_segments; ++k) {
      const double t = 2.0 * std::numbers::pi * k / circle_segments;
      ring.push_back(center + Vec2{radius * std::cos(t), radius * std::sin(t)});
    }
  }
  return ring;
}

double DomainSpec::area() const { return ring_signed_area(boundary_polygon()); }

double DomainSpec::diameter() const {
  if (shape == Shape::Rectangle) return (rect_max - rect_min).norm();
  return 2.0 * radius;
}

bool DomainSpec::contains(const Vec2& p) const {
  if (shape == Shape::Rectangle)
    return p.x >= rect_min.x && p.x <= rect_max.x && p.y >= rect_min.y && p.y <= rect_max.y;
  return point_in_ring(p, boundary_polygon());
}

int DomainSpec::classify(const Vec2& p) const {
  for (const Inclusion& inc : inclusions) {
    if (inc.is_disk) {
      if (distance(p, inc.center) <= inc.radius) return inc.phase_id;
    } else {
      if (point_in_ring(p, inc.polygon)) return inc.phase_id;
    }
  }
  for (const Inclusion& inc : inclusions) {
    if (inc.coating <= 0.0) continue;
    if (inc.is_disk) {
      if (distance(p, inc.center) <= inc.radius + inc.coating) return inc.coating_phase_id;
    } else {
      double d = std::numeric_limits<double>::max();
      const size_t n = inc.polygon.size();
      for (size_t k = 0; k < n; ++k)
        d = std::min(d, distance_point_segment(p, inc.polygon[k], inc.polygon[(k + 1) % n]));
      if (d <= inc.coating) return inc.coating_phase_id;
    }
  }
  return matrix_phase;
}

DomainSpec unit_square_domain() {
  DomainSpec d;
  d.shape = DomainSpec::Shape::Rectangle;
  d.rect_min = {0.0, 0.0};
  d.rect_max = {1.0, 1.0};
  return d;
}

DomainSpec circle_domain(double radius, int segments) {
  DomainSpec d;
  d.shape = DomainSpec::Shape::Circle;
  d.center = {0.0, 0.0};
  d.radius = radius;
  d.circle_segments = segments;
  return d;
}

std::vector<Vec2> generate_seeds(const DomainSpec& domain, double target_spacing,
                                 std::uint64_t rng_seed) {
  if (!(target_spacing > 0.0)) throw std::invalid_argument("target_spacing must be positive");
  const double min_dist = 0.5 * target_spacing;
  const double min_dist2 = min_dist * min_dist;
  const int target = std::max<int>(2, static_cast<int>(std::llround(domain.area() / (target_spacing * target_spacing))));

  const Ring bnd = domain.boundary_polygon();
  const auto [lo, hi] = bounding_box(bnd);
  Rng rng(rng_seed);

  std::vector<Vec2> seeds;
  seeds.reserve(target);
  const long max_attempts = 4000L * target + 100000L;
  long attempts = 0;
  while (static_cast<int>(seeds.size()) < target) {
    if (++attempts > max_attempts)
      throw std::runtime_error("infeasible spacing: placed " + std::to_string(seeds.size()) +
                               " of " + std::to_string(target) + " seeds");
    const Vec2 p{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
    if (!domain.contains(p)) continue;
    bool ok = true;
    for (const Vec2& q : seeds) {
      if ((p - q).squared_norm() < min_dist2) {
        ok = false;
        break;
      }
    }
    if (ok) seeds.push_back(p);
  }
  return seeds;
}

namespace {

struct CurveSample {
  Vec2 point;
  Vec2 normal;
};

std::vector<CurveSample> sample_curve(const InterfaceCurve& curve, int samples, double* spacing_out) {
  std::vector<CurveSample> out;
  out.reserve(samples);
  if (curve.kind == InterfaceCurve::Kind::Circle) {
    for (int k = 0; k < samples; ++k) {
      const double t = 2.0 * std::numbers::pi * (k + 0.5) / samples;
      const Vec2 n{std::cos(t), std::sin(t)};
      out.push_back({curve.center + n * curve.radius, n});
    }
    *spacing_out = 2.0 * std::numbers::pi * curve.radius / samples;
  } else {
    const Ring& line = curve.polyline;
    if (line.size() < 2) throw std::invalid_argument("polyline interface needs >= 2 points");
    const size_t nseg = curve.closed ? line.size() : line.size() - 1;
    double total = 0.0;
    for (size_t k = 0; k < nseg; ++k) total += distance(line[k], line[(k + 1) % line.size()]);
    const double step = total / samples;
    double carried = 0.5 * step;
    for (size_t k = 0; k < nseg; ++k) {
      const Vec2 a = line[k];
      const Vec2 b = line[(k + 1) % line.size()];
      const double len = distance(a, b);
      const Vec2 dir = (b - a) / len;
      const Vec2 n = dir.perp();
      while (carried < len) {
        out.push_back({a + dir * carried, n});
        carried += step;
      }
      carried -= len;
    }
    *spacing_out = step;
  }
  return out;
}

double distance_to_curve(const Vec2& p, const InterfaceCurve& curve) {
  if (curve.kind == InterfaceCurve::Kind::Circle)
    return std::abs(distance(p, curve.center) - curve.radius);
  double d = std::numeric_limits<double>::max();
  const Ring& line = curve.polyline;
  const size_t nseg = curve.closed ? line.size() : line.size() - 1;
  for (size_t k = 0; k < nseg; ++k)
    d = std::min(d, distance_point_segment(p, line[k], line[(k + 1) % line.size()]));
  return d;
}

}  // namespace

std::vector<Vec2> mirror_seeds_across_interface(const std::vector<Vec2>& seeds,
                                                const InterfaceCurve& curve, double offset,
                                                int samples, double clearance) {
  if (!(offset > 0.0)) throw std::invalid_argument("mirror offset must be positive");
  if (samples < 1) throw std::invalid_argument("mirror needs at least one sample");
  double spacing = 0.0;
  const std::vector<CurveSample> pts = sample_curve(curve, samples, &spacing);
  if (samples > 1 && offset >= spacing)
    throw std::invalid_argument("degenerate mirrored pair: offset " + std::to_string(offset) +
                                " >= sample spacing " + std::to_string(spacing));
  std::vector<Vec2> out;
  out.reserve(seeds.size() + 2 * pts.size());
  for (const Vec2& s : seeds)
    if (distance_to_curve(s, curve) >= clearance) out.push_back(s);
  for (const CurveSample& cs : pts) {
    out.push_back(cs.point - cs.normal * offset);
    out.push_back(cs.point + cs.normal * offset);
  }
  return out;
}

namespace {

// Polygon with one label per edge: edge k runs from vertex k to vertex k+1.
// Labels: neighbour seed index >= 0, or -1 for the domain boundary.
struct LabeledPoly {
  Ring pts;
  std::vector<int> labels;
};

// Sutherland-Hodgman against the half-plane dot(x - origin, dir) <= 0.
// Edges created on the clip line get `clip_label`.
LabeledPoly clip_half_plane(const LabeledPoly& in, const Vec2& origin, const Vec2& dir,
                            int clip_label, double eps) {
  LabeledPoly out;
  const size_t n = in.pts.size();
  out.pts.reserve(n + 2);
  out.labels.reserve(n + 2);
  for (size_t k = 0; k < n; ++k) {
    const Vec2& p = in.pts[k];
    const Vec2& q = in.pts[(k + 1) % n];
    const int lab = in.labels[k];
    const double fp = dot(p - origin, dir);
    const double fq = dot(q - origin, dir);
    const bool pin = fp <= eps;
    const bool qin = fq <= eps;
    if (pin && qin) {
      out.pts.push_back(p);
      out.labels.push_back(lab);
    } else if (pin && !qin) {
      out.pts.push_back(p);
      out.labels.push_back(lab);
      const double t = fp / (fp - fq);
      out.pts.push_back(p + (q - p) * t);
      out.labels.push_back(clip_label);
    } else if (!pin && qin) {
      const double t = fp / (fp - fq);
      out.pts.push_back(p + (q - p) * t);
      out.labels.push_back(lab);
    }
  }
  return out;
}

// Collapse consecutive vertices closer than eps; the surviving vertex takes
// the label of the edge leaving the removed one.
void dedup_consecutive(LabeledPoly& poly, double eps) {
  const double eps2 = eps * eps;
  LabeledPoly out;
  const size_t n = poly.pts.size();
  for (size_t k = 0; k < n; ++k) {
    const Vec2& p = poly.pts[k];
    const Vec2& q = poly.pts[(k + 1) % n];
    if ((p - q).squared_norm() <= eps2) continue;  // zero-length edge: drop p, q keeps its own label
    out.pts.push_back(p);
    out.labels.push_back(poly.labels[k]);
  }
  poly = std::move(out);
}

}  // namespace

VoronoiTessellation clipped_voronoi(const std::vector<Vec2>& seeds, const DomainSpec& domain) {
  const size_t n = seeds.size();
  if (n < 2) throw std::invalid_argument("clipped_voronoi needs at least 2 seeds");

  VoronoiTessellation tess;
  tess.seeds = seeds;
  tess.domain_polygon = domain.boundary_polygon();
  tess.domain_area = ring_signed_area(tess.domain_polygon);
  const auto [lo, hi] = bounding_box(tess.domain_polygon);
  tess.domain_diameter = (hi - lo).norm();
  const double eps = 1e-12 * tess.domain_diameter;
  const double dup_tol2 = eps * eps;

  for (const Vec2& s : seeds)
    if (!domain.contains(s))
      throw std::invalid_argument("seed outside domain: (" + std::to_string(s.x) + ", " +
                                  std::to_string(s.y) + ")");

  // neighbour ordering by distance, shared scratch
  std::vector<int> order(n);
  std::vector<double> dist2(n);

  tess.cells.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const Vec2 si = seeds[i];
    order.clear();
    for (size_t j = 0; j < n; ++j) {
      if (j == static_cast<size_t>(i)) continue;
      dist2[j] = (seeds[j] - si).squared_norm();
      if (dist2[j] <= dup_tol2)
        throw std::invalid_argument("degenerate diagram: duplicate seeds " + std::to_string(i) +
                                    " and " + std::to_string(j));
      order.push_back(static_cast<int>(j));
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return dist2[a] < dist2[b]; });

    LabeledPoly cell;
    cell.pts = tess.domain_polygon;
    cell.labels.assign(cell.pts.size(), -1);

    double max_r2 = 0.0;
    for (const Vec2& v : cell.pts) max_r2 = std::max(max_r2, (v - si).squared_norm());

    for (int j : order) {
      if (dist2[j] > 4.0 * max_r2) break;  // bisector cannot reach the cell
      const Vec2 mid = (si + seeds[j]) * 0.5;
      const Vec2 dir = seeds[j] - si;
      LabeledPoly clipped = clip_half_plane(cell, mid, dir, j, eps);
      dedup_consecutive(clipped, eps);
      if (clipped.pts.size() < 3)
        throw std::runtime_error("degenerate diagram: empty cell for seed " + std::to_string(i));
      cell = std::move(clipped);
      max_r2 = 0.0;
      for (const Vec2& v : cell.pts) max_r2 = std::max(max_r2, (v - si).squared_norm());
    }

    VoronoiCell& out = tess.cells[i];
    out.seed = static_cast<int>(i);
    out.polygon = std::move(cell.pts);
    out.edge_labels = std::move(cell.labels);
    out.area = ring_signed_area(out.polygon);
    out.touches_boundary =
        std::any_of(out.edge_labels.begin(), out.edge_labels.end(), [](int l) { return l < 0; });
  }

  // facets from the lower-index cell of each neighbouring pair
  for (size_t i = 0; i < n; ++i) {
    const VoronoiCell& ci = tess.cells[i];
    const size_t m = ci.polygon.size();
    for (size_t k = 0; k < m; ++k) {
      const int j = ci.edge_labels[k];
      if (j < 0 || static_cast<size_t>(j) < i) continue;
      VoronoiFacet f;
      f.cell_a = static_cast<int>(i);
      f.cell_b = j;
      f.p0 = ci.polygon[k];
      f.p1 = ci.polygon[(k + 1) % m];
      f.length = distance(f.p0, f.p1);
      f.midpoint = (f.p0 + f.p1) * 0.5;
      f.normal = (seeds[j] - seeds[i]).normalized();
      f.tangent = f.normal.perp();
      tess.facets.push_back(f);
    }
  }
  return tess;
}

namespace {

// Spatial hash for vertex deduplication; probes the 3x3 bucket neighbourhood
// so near-tolerance points across bucket borders still merge.
class VertexMerger {
 public:
  explicit VertexMerger(double tol) : tol_(tol), tol2_(tol * tol) {}

  int insert(const Vec2& p, std::vector<Vec2>& nodes) {
    const long bx = static_cast<long>(std::floor(p.x / tol_));
    const long by = static_cast<long>(std::floor(p.y / tol_));
    for (long dx = -1; dx <= 1; ++dx) {
      for (long dy = -1; dy <= 1; ++dy) {
        const auto it = buckets_.find(key(bx + dx, by + dy));
        if (it == buckets_.end()) continue;
        for (int id : it->second)
          if ((nodes[id] - p).squared_norm() <= tol2_) return id;
      }
    }
    const int id = static_cast<int>(nodes.size());
    nodes.push_back(p);
    buckets_[key(bx, by)].push_back(id);
    return id;
  }

 private:
  static std::uint64_t key(long x, long y) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(y));
  }
  double tol_;
  double tol2_;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

}  // namespace

PolygonalMesh tessellation_to_mesh(const VoronoiTessellation& tess, const DomainSpec& domain,
                                   const PhaseClassifier& classifier) {
  PolygonalMesh mesh;
  const double tol = 1e-9 * tess.domain_diameter;
  VertexMerger merger(tol);

  for (const VoronoiCell& cell : tess.cells) {
    const int phase = classifier(tess.seeds[cell.seed]);
    if (phase < 0) continue;  // porosity: no element
    std::vector<int> ring;
    ring.reserve(cell.polygon.size());
    for (const Vec2& p : cell.polygon) {
      const int id = merger.insert(p, mesh.nodes);
      if (ring.empty() || (ring.back() != id && ring.front() != id)) ring.push_back(id);
    }
    while (ring.size() > 1 && ring.back() == ring.front()) ring.pop_back();
    if (ring.size() < 3)
      throw std::runtime_error("cell collapsed below 3 vertices during deduplication");
    PolyElement el;
    el.loops = {std::move(ring)};
    el.phase_id = phase;
    mesh.elements.push_back(std::move(el));
  }

  // boundary tags
  const double btol = 1e-8 * tess.domain_diameter;
  const Ring& bnd = tess.domain_polygon;
  for (size_t i = 0; i < mesh.nodes.size(); ++i) {
    const Vec2& p = mesh.nodes[i];
    double d = std::numeric_limits<double>::max();
    for (size_t k = 0; k < bnd.size(); ++k)
      d = std::min(d, distance_point_segment(p, bnd[k], bnd[(k + 1) % bnd.size()]));
    if (d <= btol) mesh.node_tags["outer"].insert(static_cast<int>(i));
  }
  if (domain.shape == DomainSpec::Shape::Rectangle) {
    for (size_t i = 0; i < mesh.nodes.size(); ++i) {
      const Vec2& p = mesh.nodes[i];
      const int id = static_cast<int>(i);
      if (std::abs(p.x - domain.rect_min.x) <= btol) mesh.node_tags["left"].insert(id);
      if (std::abs(p.x - domain.rect_max.x) <= btol) mesh.node_tags["right"].insert(id);
      if (std::abs(p.y - domain.rect_min.y) <= btol) mesh.node_tags["bottom"].insert(id);
      if (std::abs(p.y - domain.rect_max.y) <= btol) mesh.node_tags["top"].insert(id);
    }
  }

  mesh.compact_nodes();
  mesh.finalize();
  return mesh;
}

PolygonalMesh tessellation_to_mesh(const VoronoiTessellation& tess, const DomainSpec& domain) {
  return tessellation_to_mesh(tess, domain, [&domain](const Vec2& p) { return domain.classify(p); });
}

LatticeModel extract_lattice(const VoronoiTessellation& tess, const PhaseClassifier& classifier) {
  LatticeModel lat;
  std::vector<int> node_of_cell(tess.cells.size(), -1);
  for (size_t c = 0; c < tess.cells.size(); ++c) {
    const VoronoiCell& cell = tess.cells[c];
    const int phase = classifier(tess.seeds[cell.seed]);
    if (phase < 0) continue;
    LatticeNode node;
    node.pos = tess.seeds[cell.seed];
    node.cell_area = cell.area;
    node.phase_id = phase;
    node.boundary_adjacent = cell.touches_boundary;
    node.cell_polygon = cell.polygon;
    node_of_cell[c] = static_cast<int>(lat.nodes.size());
    lat.nodes.push_back(std::move(node));
  }
  for (const VoronoiFacet& f : tess.facets) {
    const int i = node_of_cell[f.cell_a];
    const int j = node_of_cell[f.cell_b];
    if (i < 0 || j < 0) continue;
    if (!(f.length > 0.0)) {
      std::cerr << "vemlat: dropping zero-length facet between cells " << f.cell_a << " and "
                << f.cell_b << "\n";
      continue;
    }
    LatticeElement el;
    el.i = i;
    el.j = j;
    el.facet_length = f.length;
    el.midpoint = f.midpoint;
    el.normal = f.normal;
    el.tangent = f.tangent;
    el.center_distance = distance(lat.nodes[i].pos, lat.nodes[j].pos);
    lat.elements.push_back(el);
  }
  return lat;
}

LatticeModel extract_lattice(const VoronoiTessellation& tess) {
  return extract_lattice(tess, [](const Vec2&) { return 0; });
}

}  // namespace vemlat
