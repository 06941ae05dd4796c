#include "vemlat/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace vemlat {

void PolygonalMesh::finalize() {
  for (PolyElement& el : elements) {
    const std::vector<Ring> rings = element_rings(static_cast<int>(&el - elements.data()));
    const PolygonGeometry g = polygon_geometry(rings);
    el.area = g.area;
    el.centroid = g.centroid;
    el.diameter = g.diameter;
  }
}

std::vector<Ring> PolygonalMesh::element_rings(int elem) const {
  const PolyElement& el = elements.at(elem);
  std::vector<Ring> rings;
  rings.reserve(el.loops.size());
  for (const auto& loop : el.loops) {
    Ring r;
    r.reserve(loop.size());
    for (int idx : loop) r.push_back(nodes.at(idx));
    rings.push_back(std::move(r));
  }
  return rings;
}

void PolygonalMesh::validate(double expected_area) const {
  const int n_nodes = static_cast<int>(nodes.size());
  for (size_t e = 0; e < elements.size(); ++e) {
    const PolyElement& el = elements[e];
    if (el.loops.empty())
      throw std::runtime_error("element " + std::to_string(e) + " has no loops");
    for (size_t li = 0; li < el.loops.size(); ++li) {
      const auto& loop = el.loops[li];
      if (loop.size() < 3)
        throw std::runtime_error("element " + std::to_string(e) + " has a ring with fewer than 3 vertices");
      for (int idx : loop)
        if (idx < 0 || idx >= n_nodes)
          throw std::runtime_error("element " + std::to_string(e) + " references invalid node " +
                                   std::to_string(idx));
      Ring r;
      for (int idx : loop) r.push_back(nodes[idx]);
      if (!ring_is_simple(r))
        throw std::runtime_error("element " + std::to_string(e) + " has a self-intersecting ring");
      const double sa = ring_signed_area(r);
      if (li == 0 && !(sa > 0.0))
        throw std::runtime_error("element " + std::to_string(e) + " outer ring is not counter-clockwise");
      if (li > 0 && !(sa < 0.0))
        throw std::runtime_error("element " + std::to_string(e) + " hole ring is not clockwise");
    }
  }
  if (expected_area > 0.0) {
    const double total = total_area();
    if (std::abs(total - expected_area) > 1e-10 * expected_area)
      throw std::runtime_error("mesh does not partition the domain: area " + std::to_string(total) +
                               " vs expected " + std::to_string(expected_area));
  }
}

double PolygonalMesh::total_area() const {
  double acc = 0.0;
  for (size_t e = 0; e < elements.size(); ++e) {
    double a = 0.0;
    for (const Ring& r : element_rings(static_cast<int>(e))) a += ring_signed_area(r);
    acc += a;
  }
  return acc;
}

double PolygonalMesh::diameter() const {
  const auto [lo, hi] = bounding_box(nodes);
  return (hi - lo).norm();
}

const std::set<int>& PolygonalMesh::tagged_nodes(const std::string& tag) const {
  static const std::set<int> empty;
  const auto it = node_tags.find(tag);
  return it == node_tags.end() ? empty : it->second;
}

std::vector<PolygonalMesh::BoundaryEdge> PolygonalMesh::boundary_edges() const {
  std::map<std::pair<int, int>, std::pair<int, BoundaryEdge>> uses;  // key -> (count, first use)
  for (size_t e = 0; e < elements.size(); ++e) {
    for (const auto& loop : elements[e].loops) {
      const size_t n = loop.size();
      for (size_t i = 0; i < n; ++i) {
        const int a = loop[i];
        const int b = loop[(i + 1) % n];
        const auto key = std::minmax(a, b);
        auto& slot = uses[{key.first, key.second}];
        if (slot.first == 0) slot.second = {a, b, static_cast<int>(e)};
        slot.first++;
      }
    }
  }
  std::vector<BoundaryEdge> out;
  for (const auto& [key, slot] : uses)
    if (slot.first == 1) out.push_back(slot.second);
  return out;
}

void PolygonalMesh::compact_nodes() {
  std::vector<int> remap(nodes.size(), -1);
  for (const PolyElement& el : elements)
    for (const auto& loop : el.loops)
      for (int idx : loop) remap[idx] = 0;
  std::vector<Vec2> kept;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (remap[i] == 0) {
      remap[i] = static_cast<int>(kept.size());
      kept.push_back(nodes[i]);
    }
  }
  nodes = std::move(kept);
  for (PolyElement& el : elements)
    for (auto& loop : el.loops)
      for (int& idx : loop) idx = remap[idx];
  for (auto& [tag, ids] : node_tags) {
    std::set<int> updated;
    for (int id : ids)
      if (remap[id] >= 0) updated.insert(remap[id]);
    ids = std::move(updated);
  }
}

PolygonalMesh merge_phase_elements(const PolygonalMesh& mesh, int phase_id) {
  // Boundary of the union: edges used exactly once among the phase elements.
  std::map<std::pair<int, int>, int> edge_count;
  std::map<std::pair<int, int>, std::pair<int, int>> edge_oriented;
  bool any = false;
  for (const PolyElement& el : mesh.elements) {
    if (el.phase_id != phase_id) continue;
    any = true;
    for (const auto& loop : el.loops) {
      const size_t n = loop.size();
      for (size_t i = 0; i < n; ++i) {
        const int a = loop[i];
        const int b = loop[(i + 1) % n];
        const auto key = std::minmax(a, b);
        edge_count[{key.first, key.second}]++;
        edge_oriented[{key.first, key.second}] = {a, b};
      }
    }
  }
  if (!any) throw std::invalid_argument("no elements carry phase " + std::to_string(phase_id));

  // Chain the once-used edges into a loop, preserving their orientation (all
  // phase rings are CCW, so the outline comes out CCW).
  std::map<int, int> next;
  for (const auto& [key, count] : edge_count) {
    if (count != 1) continue;
    const auto [a, b] = edge_oriented[key];
    if (next.count(a))
      throw std::runtime_error("phase union boundary is not a single closed loop");
    next[a] = b;
  }
  if (next.empty()) throw std::runtime_error("phase union has no boundary");
  std::vector<int> outline;
  const int start = next.begin()->first;
  int cur = start;
  do {
    outline.push_back(cur);
    const auto it = next.find(cur);
    if (it == next.end()) throw std::runtime_error("phase union boundary is not closed");
    cur = it->second;
  } while (cur != start && outline.size() <= next.size());
  if (cur != start || outline.size() != next.size())
    throw std::runtime_error("phase union is not simply connected");

  PolygonalMesh out;
  out.nodes = mesh.nodes;
  out.node_tags = mesh.node_tags;
  out.phases = mesh.phases;
  PolyElement merged;
  merged.loops = {outline};
  merged.phase_id = phase_id;
  out.elements.push_back(merged);
  for (const PolyElement& el : mesh.elements)
    if (el.phase_id != phase_id) out.elements.push_back(el);
  out.compact_nodes();
  out.finalize();
  return out;
}

}  // namespace vemlat
