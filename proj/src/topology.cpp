#include "gcf/topology.hpp"

#include <algorithm>
#include <array>

namespace gcf {

namespace {

// The link of a vertex: one undirected edge (a, b) per incident face (v, a, b),
// remembering the winding direction a -> b.
struct Link {
  std::vector<VertexIndex> nodes;
  std::vector<std::array<int, 2>> wedges;      // node indices, winding order
  std::vector<std::array<int, 2>> nodeWedges;  // up to two wedges per node, -1 if absent
  bool branching = false;                      // some node touches more than two wedges

  void clear() {
    nodes.clear();
    wedges.clear();
    nodeWedges.clear();
    branching = false;
  }

  int nodeOf(VertexIndex v) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] == v) return static_cast<int>(i);
    }
    nodes.push_back(v);
    nodeWedges.push_back({-1, -1});
    return static_cast<int>(nodes.size() - 1);
  }

  void attach(int node, int wedge) {
    auto& slots = nodeWedges[static_cast<std::size_t>(node)];
    if (slots[0] < 0) {
      slots[0] = wedge;
    } else if (slots[1] < 0) {
      slots[1] = wedge;
    } else {
      branching = true;
    }
  }

  void addWedge(VertexIndex a, VertexIndex b) {
    const int na = nodeOf(a);
    const int nb = nodeOf(b);
    const int w = static_cast<int>(wedges.size());
    wedges.push_back({na, nb});
    attach(na, w);
    attach(nb, w);
  }

  int degree(int node) const {
    const auto& s = nodeWedges[static_cast<std::size_t>(node)];
    return (s[0] >= 0) + (s[1] >= 0);
  }

  int otherEnd(int wedge, int node) const {
    const auto& w = wedges[static_cast<std::size_t>(wedge)];
    return w[0] == node ? w[1] : w[0];
  }

  int otherWedge(int node, int wedge) const {
    const auto& s = nodeWedges[static_cast<std::size_t>(node)];
    return s[0] == wedge ? s[1] : s[0];
  }
};

enum class FanKind { Closed, Open, Broken };

// Orders the link into a single cycle or chain. Returns Broken when the link is
// anything else (branching, several components, or a 2-cycle from doubled faces).
FanKind walkFan(const Link& link, std::vector<VertexIndex>& ring) {
  ring.clear();
  const int n = static_cast<int>(link.nodes.size());
  const int w = static_cast<int>(link.wedges.size());
  if (link.branching || n == 0) return FanKind::Broken;

  int endpoints = 0;
  for (int i = 0; i < n; ++i) endpoints += link.degree(i) == 1;

  int start = 0;
  int wedge = 0;
  FanKind kind;
  if (endpoints == 0) {
    if (w != n || n < 3) return FanKind::Broken;
    kind = FanKind::Closed;
    start = link.wedges[0][0];  // follow the winding of the first incident face
    wedge = 0;
  } else if (endpoints == 2) {
    if (w != n - 1) return FanKind::Broken;
    kind = FanKind::Open;
    // Prefer the endpoint whose wedge leaves it in winding order.
    start = -1;
    int fallback = -1;
    for (int i = 0; i < n; ++i) {
      if (link.degree(i) != 1) continue;
      const int wi = link.nodeWedges[static_cast<std::size_t>(i)][0];
      if (fallback < 0) fallback = i;
      if (link.wedges[static_cast<std::size_t>(wi)][0] == i) {
        start = i;
        break;
      }
    }
    if (start < 0) start = fallback;
    wedge = link.nodeWedges[static_cast<std::size_t>(start)][0];
  } else {
    return FanKind::Broken;
  }

  int node = start;
  ring.push_back(link.nodes[static_cast<std::size_t>(node)]);
  for (int steps = 0; steps < w; ++steps) {
    const int next = link.otherEnd(wedge, node);
    if (kind == FanKind::Closed && next == start) break;
    ring.push_back(link.nodes[static_cast<std::size_t>(next)]);
    node = next;
    wedge = link.otherWedge(node, wedge);
    if (wedge < 0) break;
  }
  // A walk that did not visit every node means more than one component.
  if (static_cast<int>(ring.size()) != n) return FanKind::Broken;
  return kind;
}

}  // namespace

std::size_t MeshTopology::boundaryVertexCount() const {
  return static_cast<std::size_t>(std::count(isBoundary_.begin(), isBoundary_.end(), 1));
}

std::size_t MeshTopology::nonManifoldVertexCount() const {
  return static_cast<std::size_t>(std::count(isManifold_.begin(), isManifold_.end(), 0));
}

MeshTopology buildTopology(const TriangleMesh& mesh) {
  const std::size_t nv = mesh.vertexCount();
  MeshTopology topo;

  // Incident faces, CSR, ascending face index per vertex.
  topo.faceOffsets_.assign(nv + 1, 0);
  for (const Face& f : mesh.faces) {
    for (VertexIndex v : f) ++topo.faceOffsets_[v + 1];
  }
  for (std::size_t v = 0; v < nv; ++v) topo.faceOffsets_[v + 1] += topo.faceOffsets_[v];
  topo.faceData_.resize(topo.faceOffsets_[nv]);
  {
    std::vector<std::size_t> cursor(topo.faceOffsets_.begin(), topo.faceOffsets_.end() - 1);
    for (std::size_t fi = 0; fi < mesh.faces.size(); ++fi) {
      for (VertexIndex v : mesh.faces[fi]) topo.faceData_[cursor[v]++] = static_cast<std::uint32_t>(fi);
    }
  }

  topo.isBoundary_.assign(nv, 0);
  topo.isManifold_.assign(nv, 0);
  topo.ringOffsets_.assign(1, 0);
  topo.ringOffsets_.reserve(nv + 1);
  topo.ringData_.reserve(topo.faceData_.size() + nv);

  Link link;
  std::vector<VertexIndex> ring;
  for (std::size_t v = 0; v < nv; ++v) {
    link.clear();
    for (std::uint32_t fi : topo.vertexFaces(v)) {
      const Face& f = mesh.faces[fi];
      const int p = f[0] == v ? 0 : (f[1] == v ? 1 : 2);
      link.addWedge(f[static_cast<std::size_t>((p + 1) % 3)], f[static_cast<std::size_t>((p + 2) % 3)]);
    }
    const FanKind kind = walkFan(link, ring);
    if (kind == FanKind::Broken) {
      ring.assign(link.nodes.begin(), link.nodes.end());
      std::sort(ring.begin(), ring.end());
    } else {
      topo.isManifold_[v] = 1;
      topo.isBoundary_[v] = kind == FanKind::Open;
    }
    topo.ringData_.insert(topo.ringData_.end(), ring.begin(), ring.end());
    topo.ringOffsets_.push_back(topo.ringData_.size());
    topo.maxDegree_ = std::max(topo.maxDegree_, ring.size());
  }
  return topo;
}

}  // namespace gcf
