#pragma once

// Signed planar graphs, Kirchhoff complexity, and the Tait translation
// between checkerboard-colored diagrams and signed planar graphs.

#include "knotlib/diagram.hpp"
#include "knotlib/faces.hpp"
#include "knotlib/goeritz.hpp"
#include "knotlib/matrix.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace knot {

struct GraphEdge {
  int u = 0, v = 0;
  int sign = +1;
};

// Rotation entry: (edge id, end) where end 0 is the u endpoint.
using EdgeEnd = std::pair<int, int>;

struct SignedPlanarGraph {
  int vertex_count = 0;
  std::vector<GraphEdge> edges;
  // Per-vertex counterclockwise cyclic order of incident edge ends; may be
  // empty when no embedding is carried.
  std::vector<std::vector<EdgeEnd>> rotation;

  bool has_rotation() const { return !rotation.empty(); }

  void validate() const {
    if (vertex_count < 0) throw DiagramError("graph: negative vertex count");
    for (const auto& e : edges)
      if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
        throw DiagramError("graph: edge endpoint out of range");
    if (!rotation.empty()) {
      if (static_cast<int>(rotation.size()) != vertex_count)
        throw DiagramError("graph: rotation size mismatch");
      std::map<EdgeEnd, int> seen;
      for (int v = 0; v < vertex_count; ++v)
        for (const auto& ee : rotation[v]) {
          int id = ee.first, end = ee.second;
          if (id < 0 || id >= static_cast<int>(edges.size()) || end < 0 || end > 1)
            throw DiagramError("graph: bad rotation entry");
          int at = end == 0 ? edges[id].u : edges[id].v;
          if (at != v) throw DiagramError("graph: rotation entry at wrong vertex");
          if (seen.count(ee)) throw DiagramError("graph: duplicated edge end");
          seen[ee] = v;
        }
      if (seen.size() != 2 * edges.size())
        throw DiagramError("graph: rotation misses edge ends");
    }
  }

  bool connected() const {
    if (vertex_count == 0) return true;
    std::vector<int> stack{0};
    std::vector<bool> vis(vertex_count, false);
    vis[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& e : edges) {
        for (int w : {e.u == v ? e.v : -1, e.v == v ? e.u : -1})
          if (w >= 0 && !vis[w]) {
            vis[w] = true;
            ++cnt;
            stack.push_back(w);
          }
      }
    }
    return cnt == vertex_count;
  }
};

struct KirchhoffBundle {
  IntMatrix adjacency;
  IntMatrix degree;
  IntMatrix laplacian;
  IntMatrix kirchhoff;
};

// Loops are ignored throughout; signs play no role here.
inline KirchhoffBundle kirchhoff(const SignedPlanarGraph& g) {
  g.validate();
  if (g.vertex_count < 1) throw DiagramError("kirchhoff: need a vertex");
  int n = g.vertex_count;
  KirchhoffBundle kb{IntMatrix(n, n), IntMatrix(n, n), IntMatrix(n, n),
                     IntMatrix(n - 1, n - 1)};
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    kb.adjacency(e.u, e.v) += 1;
    kb.adjacency(e.v, e.u) += 1;
  }
  for (int i = 0; i < n; ++i) {
    Int deg = 0;
    for (int j = 0; j < n; ++j) deg += kb.adjacency(i, j);
    kb.degree(i, i) = deg;
  }
  kb.laplacian = kb.degree - kb.adjacency;
  kb.kirchhoff = kb.laplacian.minor_without(0, 0);
  return kb;
}

inline Int spanning_tree_count(const SignedPlanarGraph& g) {
  if (g.vertex_count == 0) return 0;
  return det_bareiss(kirchhoff(g).kirchhoff);
}

// Tait graph on the black faces: one vertex per black face, one signed edge
// per crossing with sign eta(p); rotation induced by the cyclic order of
// crossings around each black face.
inline SignedPlanarGraph tait_graph(const LinkDiagram& d, const FaceSet& fs,
                                    const CheckerboardColoring& cc) {
  SignedPlanarGraph g;
  int nf = fs.face_count();
  std::map<int, int> black_index;
  for (int f = 0; f < nf; ++f)
    if (!cc.is_white(f)) {
      black_index[f] = g.vertex_count++;
    }
  if (d.crossing_count() == 0) {
    g.rotation.assign(g.vertex_count, {});
    return g;
  }
  GoeritzData gd = goeritz_data(d, fs, cc);
  g.edges.resize(d.crossing_count());
  for (int q = 0; q < d.crossing_count(); ++q) {
    const auto& qf = fs.quadrant_face[q];
    bool white02 = cc.is_white(qf[0]);
    int bf1 = white02 ? qf[1] : qf[0];
    int bf2 = white02 ? qf[3] : qf[2];
    g.edges[q] = {black_index.at(bf1), black_index.at(bf2), gd.eta[q]};
  }
  // Rotation: walk each black face boundary; the corners of the face orbit
  // give the crossings in cyclic order.
  g.rotation.assign(g.vertex_count, {});
  for (int f = 0; f < nf; ++f) {
    if (cc.is_white(f)) continue;
    int v = black_index.at(f);
    for (const auto& [edge, state] : fs.faces[f]) {
      int q = state.first, s = state.second;
      // corner quadrant is (s+3)%4; the crossing q is incident there.  The
      // edge end: end 0 if this face is bf1 of q.
      const auto& qf = fs.quadrant_face[q];
      bool white02 = cc.is_white(qf[0]);
      int bf1 = white02 ? qf[1] : qf[0];
      int corner = (s + 3) % 4;
      bool is_bf1 = white02 ? (corner == 1) : (corner == 0);
      if (qf[corner] != f) throw std::logic_error("tait: face mismatch");
      (void)bf1;
      g.rotation[v].push_back({q, is_bf1 ? 0 : 1});
    }
  }
  return g;
}

inline SignedPlanarGraph tait_graph(const LinkDiagram& d, int unbounded = 0) {
  auto [fs, cc] = faces_and_coloring(d, unbounded);
  return tait_graph(d, fs, cc);
}

// Medial construction: each edge becomes a crossing, strands connect
// consecutive edge ends around each vertex.  A positive edge yields a
// crossing whose eta is +1 for the coloring with black vertex regions.
inline LinkDiagram diagram_from_graph(const SignedPlanarGraph& g) {
  g.validate();
  if (!g.has_rotation())
    throw DiagramError("diagram_from_graph: rotation system required");
  if (!g.connected()) throw DiagramError("diagram_from_graph: graph must be connected");
  int m = static_cast<int>(g.edges.size());
  if (m == 0) return LinkDiagram::unknot();

  // Segments: around each vertex, between consecutive edge ends in rotation
  // order there is one strand segment.
  // seg id per (vertex, rotation position): segment between rotation[k] and
  // rotation[k+1].
  std::map<std::pair<int, int>, int> seg;  // (vertex, pos) -> id
  int next = 0;
  for (int v = 0; v < g.vertex_count; ++v) {
    int deg = static_cast<int>(g.rotation[v].size());
    if (deg == 0)
      throw DiagramError("diagram_from_graph: isolated vertex in connected graph");
    for (int k = 0; k < deg; ++k) seg[{v, k}] = next++;
  }
  // For edge end (id, end) at vertex v at rotation position k, the two
  // neighbouring segments are seg[{v,k-1}] (before) and seg[{v,k}] (after).
  std::map<EdgeEnd, std::pair<int, int>> around;  // end -> (before, after)
  for (int v = 0; v < g.vertex_count; ++v) {
    int deg = static_cast<int>(g.rotation[v].size());
    for (int k = 0; k < deg; ++k) {
      around[g.rotation[v][k]] = {seg.at({v, (k + deg - 1) % deg}),
                                  seg.at({v, k})};
    }
  }
  // Crossing of edge e = (u,v): four strand ends: at the u mouth the two
  // segments around end (e,0), at the v mouth those around (e,1).
  // CCW tuple with under axis on slots {0,2}:
  //   positive edge: (u_before, v_after, v_before, u_after) keeps the black
  //   u-v axis in the quadrants between slots (1,2) and (3,0), so the white
  //   side quadrants are (0,1) and (2,3) and eta = +1.
  std::vector<std::array<int, 4>> xs;
  for (int i = 0; i < m; ++i) {
    auto [ub, ua] = around.at({i, 0});
    auto [vb, va] = around.at({i, 1});
    if (g.edges[i].sign > 0)
      xs.push_back({ub, va, vb, ua});
    else
      xs.push_back({ua, ub, va, vb});
  }
  return detail::assemble(xs);
}

// Text format: "v <count>" then "e <u> <v> <+|->" lines and optional
// "rot <v>: <edge>:<end> ..." lines.
inline SignedPlanarGraph parse_graph(const std::string& text) {
  SignedPlanarGraph g;
  std::istringstream is(text);
  std::string line;
  bool have_rot = false;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "v") {
      if (!(ls >> g.vertex_count)) throw DiagramError("graph: bad v line");
    } else if (kw == "e") {
      int u, v;
      std::string s;
      if (!(ls >> u >> v >> s) || (s != "+" && s != "-"))
        throw DiagramError("graph: bad e line");
      g.edges.push_back({u, v, s == "+" ? +1 : -1});
    } else if (kw == "rot") {
      have_rot = true;
      if (g.rotation.empty()) g.rotation.resize(g.vertex_count);
      int v;
      char colon;
      if (!(ls >> v >> colon) || colon != ':')
        throw DiagramError("graph: bad rot line");
      std::string tok;
      while (ls >> tok) {
        auto pos = tok.find(':');
        if (pos == std::string::npos) throw DiagramError("graph: bad rot entry");
        g.rotation[v].push_back(
            {std::stoi(tok.substr(0, pos)), std::stoi(tok.substr(pos + 1))});
      }
    } else {
      throw DiagramError("graph: unknown line '" + kw + "'");
    }
  }
  if (have_rot && static_cast<int>(g.rotation.size()) != g.vertex_count)
    g.rotation.resize(g.vertex_count);
  g.validate();
  return g;
}

inline std::string graph_to_text(const SignedPlanarGraph& g) {
  std::ostringstream os;
  os << "v " << g.vertex_count << "\n";
  for (const auto& e : g.edges)
    os << "e " << e.u << " " << e.v << " " << (e.sign > 0 ? "+" : "-") << "\n";
  if (g.has_rotation())
    for (int v = 0; v < g.vertex_count; ++v) {
      os << "rot " << v << ":";
      for (const auto& [id, end] : g.rotation[v]) os << " " << id << ":" << end;
      os << "\n";
    }
  return os.str();
}

}  // namespace knot
