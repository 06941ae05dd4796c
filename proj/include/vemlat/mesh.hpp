#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "vemlat/geometry.hpp"
#include "vemlat/materials.hpp"

namespace vemlat {

// Polygonal element given as vertex-index rings into the mesh node list.
// First ring is the outer boundary (counter-clockwise); any further rings are
// holes (clockwise). Geometry is cached by PolygonalMesh::finalize().
struct PolyElement {
  std::vector<std::vector<int>> loops;
  int phase_id = 0;

  double area = 0.0;
  Vec2 centroid;
  double diameter = 0.0;

  int vertex_count() const {
    int n = 0;
    for (const auto& l : loops) n += static_cast<int>(l.size());
    return n;
  }
};

struct PolygonalMesh {
  std::vector<Vec2> nodes;
  std::vector<PolyElement> elements;
  std::map<std::string, std::set<int>> node_tags;
  std::map<int, MaterialPhase> phases;

  // Recomputes cached element geometry. Throws on malformed elements.
  void finalize();

  // Checks index bounds, ring simplicity and ring orientation; optionally the
  // partition property against a reference domain area (1e-10 relative).
  void validate(double expected_area = -1.0) const;

  double total_area() const;
  double diameter() const;

  std::vector<Ring> element_rings(int elem) const;
  const std::set<int>& tagged_nodes(const std::string& tag) const;

  // Boundary edges (node pairs used by exactly one element loop), each with
  // the index of the owning element.
  struct BoundaryEdge {
    int n0 = -1;
    int n1 = -1;
    int element = -1;
  };
  std::vector<BoundaryEdge> boundary_edges() const;

  // Drops nodes referenced by no element and renumbers; tags follow.
  void compact_nodes();
};

// Replaces all elements of the given phase by a single element whose boundary
// is the outline of their union. The union must be edge-connected and simply
// connected. Interior nodes left unused are removed.
PolygonalMesh merge_phase_elements(const PolygonalMesh& mesh, int phase_id);

}  // namespace vemlat
