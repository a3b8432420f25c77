#pragma once

// Goeritz matrices and the Gordon-Litherland correction terms.
//
// Conventions, pinned by the worked torus-link example (G' of T(2,k) equals
// [[k,-k],[-k,k]] with mu = k for the two-big-white-regions coloring):
//   eta(p) = +1  iff the white quadrants at p are those between slots (a,b)
//                and (c,d) of the tuple;
//   type II iff eta(p) == sgn(p).

#include "knotlib/diagram.hpp"
#include "knotlib/faces.hpp"
#include "knotlib/matrix.hpp"
#include "knotlib/ops.hpp"

#include <map>
#include <vector>

namespace knot {

enum class CrossingType : std::uint8_t { I, II };

struct GoeritzData {
  IntMatrix unreduced;               // indexed by white faces, X0 first
  IntMatrix reduced;                 // first row/column deleted
  std::vector<int> eta;              // per crossing, +-1
  std::vector<CrossingType> ctype;   // per crossing
  long mu = 0;                       // sum of eta over type II crossings
  long beta = 0;                     // components of the black Tait graph
  std::vector<int> white_faces;      // face ids, X0 first
};

inline GoeritzData goeritz_data(const LinkDiagram& d, const FaceSet& fs,
                                const CheckerboardColoring& cc) {
  GoeritzData g;
  int n = static_cast<int>(d.crossings().size());
  if (n == 0) {
    g.unreduced = IntMatrix(1, 1);
    g.reduced = IntMatrix(0, 0);
    g.mu = 0;
    g.beta = 1;
    g.white_faces = {cc.unbounded_face};
    return g;
  }

  std::map<int, int> white_index;  // face id -> index in white list
  g.white_faces.push_back(cc.unbounded_face);
  white_index[cc.unbounded_face] = 0;
  for (int f = 0; f < fs.face_count(); ++f)
    if (cc.is_white(f) && f != cc.unbounded_face) {
      white_index[f] = static_cast<int>(g.white_faces.size());
      g.white_faces.push_back(f);
    }
  int w = static_cast<int>(g.white_faces.size());
  g.unreduced = IntMatrix(w, w);

  g.eta.resize(n);
  g.ctype.resize(n);
  for (int q = 0; q < n; ++q) {
    const auto& qf = fs.quadrant_face[q];
    bool white02 = cc.is_white(qf[0]);
    if (cc.is_white(qf[2]) != white02 || cc.is_white(qf[1]) == white02)
      throw std::logic_error("goeritz: inconsistent quadrant coloring");
    g.eta[q] = white02 ? +1 : -1;
    int sign = d.crossings()[q].sign;
    g.ctype[q] = (g.eta[q] == sign) ? CrossingType::II : CrossingType::I;
    if (g.ctype[q] == CrossingType::II) g.mu += g.eta[q];

    int wf1 = white02 ? qf[0] : qf[1];
    int wf2 = white02 ? qf[2] : qf[3];
    if (wf1 != wf2) {
      int i = white_index.at(wf1), j = white_index.at(wf2);
      g.unreduced(i, j) -= g.eta[q];
      g.unreduced(j, i) -= g.eta[q];
    }
  }
  for (int i = 0; i < w; ++i) {
    Int s = 0;
    for (int j = 0; j < w; ++j)
      if (j != i) s += g.unreduced(i, j);
    g.unreduced(i, i) = -s;
  }
  g.reduced = g.unreduced.minor_without(0, 0);

  // beta: components of the black Tait graph.
  std::vector<int> black_faces;
  std::map<int, int> bindex;
  for (int f = 0; f < fs.face_count(); ++f)
    if (!cc.is_white(f)) {
      bindex[f] = static_cast<int>(black_faces.size());
      black_faces.push_back(f);
    }
  std::vector<int> parent(black_faces.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int q = 0; q < n; ++q) {
    const auto& qf = fs.quadrant_face[q];
    bool white02 = cc.is_white(qf[0]);
    int bf1 = white02 ? qf[1] : qf[0];
    int bf2 = white02 ? qf[3] : qf[2];
    parent[find(bindex.at(bf1))] = find(bindex.at(bf2));
  }
  std::set<int> roots;
  for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
  g.beta = static_cast<long>(roots.size());
  return g;
}

inline GoeritzData goeritz_data(const LinkDiagram& d, int unbounded = 0) {
  auto [fs, cc] = faces_and_coloring(d, unbounded);
  return goeritz_data(d, fs, cc);
}

struct SigNul {
  long sigma = 0;
  long nullity = 0;
};

// Exact inertia-based signature of a symmetric integer matrix.
inline SigNul symmetric_signature(const IntMatrix& m) {
  Inertia in = symmetric_inertia(m);
  return {in.signature(), in.zero};
}

// Generalized Goeritz matrix H = diag(G, A, B) with A = diag(-eta) over
// type II crossings and B the zero block of size beta-1.
inline IntMatrix generalized_goeritz(const GoeritzData& g) {
  std::vector<Int> diag_a;
  for (std::size_t q = 0; q < g.eta.size(); ++q)
    if (g.ctype[q] == CrossingType::II) diag_a.push_back(Int(-g.eta[q]));
  std::size_t gn = g.reduced.rows();
  std::size_t dim = gn + diag_a.size() + static_cast<std::size_t>(g.beta - 1);
  IntMatrix h(dim, dim);
  for (std::size_t i = 0; i < gn; ++i)
    for (std::size_t j = 0; j < gn; ++j) h(i, j) = g.reduced(i, j);
  for (std::size_t k = 0; k < diag_a.size(); ++k) h(gn + k, gn + k) = diag_a[k];
  return h;
}

namespace detail {

// Split a diagram into its connected projection parts (free loops separate).
struct SplitParts {
  std::vector<LinkDiagram> parts;  // crossing-bearing parts
  long loops = 0;
  long total() const { return static_cast<long>(parts.size()) + loops; }
};

inline SplitParts split_parts(const LinkDiagram& d) {
  SplitParts sp;
  sp.loops = d.free_loops();
  for (const auto& part : d.projection_parts())
    sp.parts.push_back(d.sub_diagram(part));
  return sp;
}

}  // namespace detail

// Signature and nullity of the link; split diagrams combine as
// sigma = sum sigma_i, nul = sum nul_i + (#parts - 1).
inline SigNul signature_and_nullity(const LinkDiagram& d) {
  auto sp = detail::split_parts(d);
  SigNul out;
  for (const auto& p : sp.parts) {
    GoeritzData g = goeritz_data(p);
    SigNul sg = symmetric_signature(g.reduced);
    out.sigma += sg.sigma - g.mu;
    out.nullity += sg.nullity + g.beta - 1;
  }
  out.nullity += sp.total() - 1;
  return out;
}

// Det_L = det(i H(L)); zero for split links, multiplicative over parts
// otherwise (a single part just gives its own determinant).
inline Gauss link_determinant(const LinkDiagram& d) {
  auto sp = detail::split_parts(d);
  if (sp.total() == 0) throw DiagramError("empty diagram has no determinant");
  if (sp.total() > 1) return Gauss(0);
  if (sp.parts.empty()) return Gauss(1);  // unknot
  GoeritzData g = goeritz_data(sp.parts[0]);
  IntMatrix h = generalized_goeritz(g);
  Gauss det = ipow(static_cast<long>(h.rows()));
  return det * Gauss(det_bareiss(h), 0);
}

inline Int link_det_abs(const LinkDiagram& d) {
  Gauss det = link_determinant(d);
  if (det.re != 0 && det.im != 0)
    throw std::logic_error("determinant not in a single axis");
  return iabs(det.re) + iabs(det.im);
}

}  // namespace knot
