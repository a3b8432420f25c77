#pragma once

// Faces of the diagram's 4-valent planar map via rotation-system traversal,
// plus checkerboard colorings.  A face is an orbit of arrival states (q,s)
// meaning "arriving at crossing q along the edge in slot s"; the orbit steps
// to the other end of the edge in slot s-1.  The corner of the orbit at
// (q,s) is the quadrant between slots s-1 and s.

#include "knotlib/diagram.hpp"

#include <map>
#include <queue>
#include <vector>

namespace knot {

enum class FaceColor : std::uint8_t { white, black };

struct FaceSet {
  // face id -> list of (edge, arrival state) incidences, in boundary order.
  std::vector<std::vector<std::pair<long, std::pair<int, int>>>> faces;
  // quadrant (crossing, corner k in 0..3, between slots k and k+1) -> face id
  std::vector<std::array<int, 4>> quadrant_face;
  // adjacency across edges: face -> multiset of neighbouring faces
  std::vector<std::vector<int>> adjacency;

  int face_count() const { return static_cast<int>(faces.size()); }
};

inline FaceSet compute_faces(const LinkDiagram& d) {
  if (!d.projection_connected())
    throw DiagramError("faces: projection is disconnected");
  FaceSet fs;
  const auto& xs = d.crossings();
  int n = static_cast<int>(xs.size());
  if (n == 0) {
    // crossingless unknot: two regions, no corners
    fs.faces.resize(2);
    fs.adjacency.resize(2);
    fs.adjacency[0].push_back(1);
    fs.adjacency[1].push_back(0);
    return fs;
  }
  fs.quadrant_face.assign(n, {-1, -1, -1, -1});
  std::map<std::pair<int, int>, int> face_of_state;
  for (int q0 = 0; q0 < n; ++q0)
    for (int s0 = 0; s0 < 4; ++s0) {
      if (face_of_state.count({q0, s0})) continue;
      int fid = static_cast<int>(fs.faces.size());
      fs.faces.emplace_back();
      int q = q0, s = s0;
      while (!face_of_state.count({q, s})) {
        face_of_state[{q, s}] = fid;
        fs.quadrant_face[q][(s + 3) % 4] = fid;
        fs.faces[fid].push_back({xs[q].e[s], {q, s}});
        int t = (s + 3) % 4;  // exit slot
        long e = xs[q].e[t];
        const auto& occ = d.occurrences(e);
        auto nxt = (occ[0] == std::make_pair(q, t)) ? occ[1] : occ[0];
        q = nxt.first;
        s = nxt.second;
      }
    }
  int f = fs.face_count();
  fs.adjacency.assign(f, {});
  for (long e = 1; e <= d.edge_count(); ++e) {
    const auto& occ = d.occurrences(e);
    int f1 = face_of_state.at(occ[0]);
    int f2 = face_of_state.at(occ[1]);
    fs.adjacency[f1].push_back(f2);
    fs.adjacency[f2].push_back(f1);
  }
  if (f != n + 2)
    throw DiagramError("faces: rotation system is not planar (F != c+2)");
  return fs;
}

struct CheckerboardColoring {
  std::vector<FaceColor> color;  // per face id
  int unbounded_face = 0;        // white by convention

  bool is_white(int face) const { return color[face] == FaceColor::white; }
};

// Two-color the faces with the chosen unbounded face white.
inline CheckerboardColoring checkerboard(const FaceSet& fs, int unbounded = 0) {
  int f = fs.face_count();
  if (unbounded < 0 || unbounded >= f)
    throw DiagramError("checkerboard: invalid face id");
  std::vector<int> col(f, -1);
  std::queue<int> bfs;
  col[unbounded] = 0;
  bfs.push(unbounded);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : fs.adjacency[v]) {
      if (col[w] == -1) {
        col[w] = 1 - col[v];
        bfs.push(w);
      } else if (col[w] == col[v]) {
        throw DiagramError("checkerboard: face graph is not bipartite");
      }
    }
  }
  CheckerboardColoring cc;
  cc.unbounded_face = unbounded;
  cc.color.resize(f);
  for (int i = 0; i < f; ++i)
    cc.color[i] = col[i] == 0 ? FaceColor::white : FaceColor::black;
  return cc;
}

inline std::pair<FaceSet, CheckerboardColoring> faces_and_coloring(
    const LinkDiagram& d, int unbounded = 0) {
  FaceSet fs = compute_faces(d);
  return {fs, checkerboard(fs, unbounded)};
}

}  // namespace knot
