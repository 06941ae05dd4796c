#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vemlat/geometry.hpp"
#include "vemlat/lattice.hpp"
#include "vemlat/mesh.hpp"

namespace vemlat {

// Analysis domain: rectangle or circle (approximated by an inscribed n-gon),
// with optional disk or polygon inclusions. Inclusions may carry a coating of
// uniform thickness; points outside every inclusion and coating belong to
// matrix_phase (-1 marks them as porosity, i.e. no element is emitted).
struct DomainSpec {
  enum class Shape { Rectangle, Circle };

  Shape shape = Shape::Rectangle;
  Vec2 rect_min{0.0, 0.0};
  Vec2 rect_max{1.0, 1.0};
  Vec2 center{0.0, 0.0};
  double radius = 1.0;
  int circle_segments = 64;

  struct Inclusion {
    bool is_disk = true;
    Vec2 center;
    double radius = 0.0;
    Ring polygon;               // CCW, used when !is_disk
    double coating = 0.0;       // 0 = no coating phase
    int phase_id = 1;
    int coating_phase_id = 2;
  };
  std::vector<Inclusion> inclusions;
  int matrix_phase = 2;

  Ring boundary_polygon() const;  // CCW
  double area() const;
  double diameter() const;
  bool contains(const Vec2& p) const;
  // Phase of a point: inclusion, coating, or matrix (-1 = porosity).
  int classify(const Vec2& p) const;
};

DomainSpec unit_square_domain();
DomainSpec circle_domain(double radius, int segments = 64);

// Interface curve for seed mirroring: a circle or an open/closed polyline.
struct InterfaceCurve {
  enum class Kind { Circle, Polyline };
  Kind kind = Kind::Circle;
  Vec2 center;
  double radius = 0.0;
  Ring polyline;
  bool closed = false;

  static InterfaceCurve circle(const Vec2& c, double r) {
    InterfaceCurve k;
    k.kind = Kind::Circle;
    k.center = c;
    k.radius = r;
    return k;
  }
};

// Dart-throwing seed generation: ~area/spacing^2 seeds inside the domain with
// pairwise distance >= 0.5*spacing. Deterministic for a given rng_seed.
// Throws when the target count cannot be placed.
std::vector<Vec2> generate_seeds(const DomainSpec& domain, double target_spacing,
                                 std::uint64_t rng_seed);

// Removes seeds within `clearance` of the curve, then adds `samples` mirrored
// pairs at +/-offset along the curve normal so the shared Voronoi facet of
// each pair lies on (a chord approximation of) the interface.
std::vector<Vec2> mirror_seeds_across_interface(const std::vector<Vec2>& seeds,
                                                const InterfaceCurve& curve, double offset,
                                                int samples, double clearance);

struct VoronoiCell {
  int seed = -1;
  Ring polygon;                   // CCW
  std::vector<int> edge_labels;   // per edge: neighbour seed index, or -1 for domain boundary
  double area = 0.0;
  bool touches_boundary = false;
};

struct VoronoiFacet {
  int cell_a = -1;  // cell_a < cell_b
  int cell_b = -1;
  Vec2 p0, p1;
  Vec2 midpoint;
  double length = 0.0;
  Vec2 normal;   // from seed a toward seed b
  Vec2 tangent;
};

struct VoronoiTessellation {
  std::vector<Vec2> seeds;
  std::vector<VoronoiCell> cells;
  std::vector<VoronoiFacet> facets;
  Ring domain_polygon;
  double domain_area = 0.0;
  double domain_diameter = 0.0;
};

// Clipped Voronoi diagram by half-plane clipping of the (convex) domain
// polygon. Throws on fewer than 2 seeds or (near-)duplicate seeds.
VoronoiTessellation clipped_voronoi(const std::vector<Vec2>& seeds, const DomainSpec& domain);

using PhaseClassifier = std::function<int(const Vec2&)>;

// Voronoi cells become single-loop elements; vertices are deduplicated within
// 1e-9 * domain diameter. Cells whose seed classifies to phase -1 are omitted
// (porosity). Boundary nodes receive tag "outer" (and side tags for
// rectangles).
PolygonalMesh tessellation_to_mesh(const VoronoiTessellation& tess, const DomainSpec& domain,
                                   const PhaseClassifier& classifier);
PolygonalMesh tessellation_to_mesh(const VoronoiTessellation& tess, const DomainSpec& domain);

// Dual lattice skeleton: one node per seed, one element per interior facet.
// Spring stiffnesses are left zero (see vclm.hpp). Cells classified to phase
// -1 and their facets are dropped.
LatticeModel extract_lattice(const VoronoiTessellation& tess, const PhaseClassifier& classifier);
LatticeModel extract_lattice(const VoronoiTessellation& tess);

}  // namespace vemlat
