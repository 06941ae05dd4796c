#pragma once

#include <vector>

#include "vemlat/geometry.hpp"

namespace vemlat {

// One rigid cell per Voronoi generator point; DOFs are (u, v, theta).
struct LatticeNode {
  Vec2 pos;                       // generator point
  double cell_area = 0.0;         // volume per unit thickness
  int phase_id = 0;
  bool boundary_adjacent = false; // cell has an edge on the domain boundary
  Ring cell_polygon;
};

// Spring set on the shared facet of cells i and j, placed at the facet
// midpoint. Normal points from node i toward node j.
struct LatticeElement {
  int i = -1;
  int j = -1;
  double facet_length = 0.0;
  Vec2 midpoint;
  Vec2 normal;
  Vec2 tangent;
  double center_distance = 0.0;
  double k_n = 0.0;
  double k_t = 0.0;
  double k_phi = 0.0;
};

struct LatticeModel {
  std::vector<LatticeNode> nodes;
  std::vector<LatticeElement> elements;
  double thickness = 1.0;

  int dof_count() const { return 3 * static_cast<int>(nodes.size()); }
};

}  // namespace vemlat
