#pragma once

// Parameterized diagram families: torus2(k) as the closure of sigma_1^k,
// turks_head(n) as the closure of (sigma_1 sigma_2^{-1})^n, pretzel links
// as vertical twist columns, and raw braid closures.

#include "knotlib/diagram.hpp"

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace knot {

namespace detail {

// Assemble a diagram from crossings given as CCW 4-tuples of segment ids with
// the under-strand on slots {0,2} (direction resolved by tracing).  Segments
// are arbitrary distinct integers, each appearing exactly twice overall.
inline LinkDiagram assemble(const std::vector<std::array<int, 4>>& xs) {
  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (int i = 0; i < static_cast<int>(xs.size()); ++i)
    for (int s = 0; s < 4; ++s) occ[xs[i][s]].push_back({i, s});
  for (auto& [seg, o] : occ)
    if (o.size() != 2)
      throw DiagramError("assemble: segment does not appear twice");

  std::map<int, long> edge_of;
  std::map<int, std::pair<int, int>> in_occ;
  long next_id = 1;
  std::set<int> seen;
  for (auto& [s0, o0] : occ) {
    if (seen.count(s0)) continue;
    int seg = s0;
    std::pair<int, int> at = o0[0];
    while (!seen.count(seg)) {
      seen.insert(seg);
      edge_of[seg] = next_id++;
      in_occ[seg] = at;
      int q = at.first, s = at.second;
      int t = (s + 2) % 4;
      int f = xs[q][t];
      const auto& fo = occ[f];
      at = (fo[0] == std::make_pair(q, t)) ? fo[1] : fo[0];
      seg = f;
    }
  }
  std::vector<std::array<long, 4>> tuples(xs.size());
  for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
    std::array<long, 4> t;
    for (int s = 0; s < 4; ++s) t[s] = edge_of.at(xs[i][s]);
    // Root at the incoming under end: slots {0,2} form the under axis.
    if (in_occ.at(xs[i][2]) == std::make_pair(i, 2))
      t = {t[2], t[3], t[0], t[1]};
    tuples[i] = t;
  }
  return LinkDiagram::from_tuples(std::move(tuples), 0);
}

}  // namespace detail

inline LinkDiagram torus2(long k) {
  if (k == 0) return LinkDiagram::unlink(2);
  std::vector<int> word(static_cast<std::size_t>(k < 0 ? -k : k), k > 0 ? 1 : -1);
  return LinkDiagram::parse_braid(2, word);
}

inline LinkDiagram turks_head(long n) {
  if (n < 0) throw DiagramError("turks_head: n must be nonnegative");
  if (n == 0) return LinkDiagram::unlink(3);
  std::vector<int> word;
  for (long i = 0; i < n; ++i) {
    word.push_back(1);
    word.push_back(-2);
  }
  return LinkDiagram::parse_braid(3, word);
}

// Pretzel link P(n_1, ..., n_m): m vertical twist columns joined by top and
// bottom buses.  Columns with n_i > 0 twist so that P(1,1,1) matches the
// invariants of torus2(3).
inline LinkDiagram pretzel(const std::vector<long>& columns) {
  if (columns.empty()) throw DiagramError("pretzel needs at least one column");
  for (long n : columns)
    if (n == 0) throw DiagramError("pretzel columns must be nonzero");
  int m = static_cast<int>(columns.size());
  // Segment ids: per column i, crossing j in 0..|n_i|-1:
  //   left/right strand segments between crossings.  Top of column i left
  //   strand = T(i,L); bottom = B(i,L); internal segments between stacked
  //   crossings.  Bus segments: top_i joins column i right top to column
  //   i+1 left top; bottom_i likewise (cyclic).
  int next = 0;
  auto fresh = [&] { return next++; };
  std::vector<int> topL(m), topR(m), botL(m), botR(m);
  std::vector<std::array<int, 4>> xs;
  for (int i = 0; i < m; ++i) {
    long n = columns[i];
    long cnt = n < 0 ? -n : n;
    int segL = fresh(), segR = fresh();
    topL[i] = segL;
    topR[i] = segR;
    // stack crossings downward
    for (long j = 0; j < cnt; ++j) {
      int ul = segL, ur = segR;
      int dl = fresh(), dr = fresh();
      if (n > 0)
        xs.push_back({dl, dr, ur, ul});  // under axis DL-UR
      else
        xs.push_back({dr, ur, ul, dl});  // under axis DR-UL
      segL = dl;
      segR = dr;
    }
    botL[i] = segL;
    botR[i] = segR;
  }
  // Buses: merge topR[i] with topL[i+1], botR[i] with botL[i+1] (cyclic).
  // Implement by renaming: a union-find over segment ids.
  std::vector<int> parent(next);
  for (int s = 0; s < next; ++s) parent[s] = s;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < m; ++i) {
    parent[find(topR[i])] = find(topL[(i + 1) % m]);
    parent[find(botR[i])] = find(botL[(i + 1) % m]);
  }
  for (auto& t : xs)
    for (int s = 0; s < 4; ++s) t[s] = find(t[s]);
  return detail::assemble(xs);
}

// ---------------------------------------------------------------------------

struct FamilySpec {
  enum class Kind { torus2, pretzel, braid_closure, turks_head } kind;
  long k = 0;                    // torus2 / turks_head parameter
  std::vector<long> columns;     // pretzel
  int strands = 0;               // braid
  std::vector<int> word;
};

inline LinkDiagram construct(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::torus2: return torus2(spec.k);
    case FamilySpec::Kind::turks_head: return turks_head(spec.k);
    case FamilySpec::Kind::pretzel: return pretzel(spec.columns);
    case FamilySpec::Kind::braid_closure:
      return LinkDiagram::parse_braid(spec.strands, spec.word);
  }
  throw DiagramError("construct: unknown family");
}

}  // namespace knot
