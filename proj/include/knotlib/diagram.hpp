#pragma once

// Combinatorial link diagrams as PD codes.
//
// A crossing stores its four edge ids (a,b,c,d) read counterclockwise from
// the incoming under-strand edge a; the under-strand runs a -> c.  Crossing
// sign is +1 exactly when the over-strand runs d -> b, equivalently when
// rotating the over direction counterclockwise by a quarter turn gives the
// under direction.  Edges are numbered consecutively along each component,
// which is what carries orientation.  Crossingless unknot components are
// tracked by an explicit free-loop count since PD tuples cannot encode them.

#include "knotlib/numeric.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace knot {

struct Crossing {
  std::array<long, 4> e{};  // (a,b,c,d)
  int sign = 0;

  long a() const { return e[0]; }
  long b() const { return e[1]; }
  long c() const { return e[2]; }
  long d() const { return e[3]; }
};

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Smoothing { zero, infinity, oriented };

class LinkDiagram {
 public:
  LinkDiagram() = default;

  // Build from raw tuples; validates, orients, populates signs.
  static LinkDiagram from_tuples(std::vector<std::array<long, 4>> tuples,
                                 long free_loops = 0);

  static LinkDiagram parse_pd(const std::string& text);
  static LinkDiagram parse_braid(int strands, const std::vector<int>& word);
  static LinkDiagram parse_braid_text(const std::string& text);

  static LinkDiagram unknot() { return from_tuples({}, 1); }
  static LinkDiagram unlink(long n) { return from_tuples({}, n); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  long crossing_count() const { return static_cast<long>(crossings_.size()); }
  long edge_count() const { return edge_count_; }
  long free_loops() const { return free_loops_; }
  const std::vector<std::vector<long>>& component_edges() const {
    return components_;
  }
  long component_count() const {
    return static_cast<long>(components_.size()) + free_loops_;
  }

  long next_edge(long e) const { return next_.at(e); }
  long prev_edge(long e) const { return prev_.at(e); }
  int component_of(long e) const { return comp_of_.at(e); }

  // The two (crossing index, slot) occurrences of an edge.
  const std::array<std::pair<int, int>, 2>& occurrences(long e) const {
    return occ_.at(e);
  }
  // The occurrence where the edge runs into a crossing / out of one.
  std::pair<int, int> incoming_occurrence(long e) const { return in_occ_.at(e); }
  std::pair<int, int> outgoing_occurrence(long e) const {
    const auto& o = occ_.at(e);
    return o[0] == in_occ_.at(e) ? o[1] : o[0];
  }

  long writhe() const {
    long w = 0;
    for (const auto& x : crossings_) w += x.sign;
    return w;
  }

  std::vector<int> crossing_signs() const {
    std::vector<int> s;
    s.reserve(crossings_.size());
    for (const auto& x : crossings_) s.push_back(x.sign);
    return s;
  }

  // Symmetric matrix of pairwise linking numbers over strand components
  // (free loops excluded; they link nothing).  lk(i,j) = half the signed
  // count of mixed crossings.
  std::vector<std::vector<long>> linking_matrix() const;

  bool is_alternating() const;

  static bool slot_is_over(int slot) { return slot == 1 || slot == 3; }

  // Connected components of the underlying projection (4-valent graph),
  // as sets of crossing indices; free loops count as extra parts.
  std::vector<std::vector<int>> projection_parts() const;
  bool projection_connected() const {
    long parts = static_cast<long>(projection_parts().size()) + free_loops_;
    return parts <= 1;
  }

  // Sub-diagram induced by a set of crossings (must be a union of
  // projection parts), renumbered canonically.
  LinkDiagram sub_diagram(const std::vector<int>& crossing_ids) const;

  std::string pd_string() const;
  // Stable key for memoization: sorted tuples + loop count.
  std::string canonical_key() const;

 private:
  friend class DiagramBuilder;
  void finish_validation();

  std::vector<Crossing> crossings_;
  long edge_count_ = 0;
  long free_loops_ = 0;
  std::vector<std::vector<long>> components_;
  std::map<long, long> next_, prev_;
  std::map<long, int> comp_of_;
  std::map<long, std::array<std::pair<int, int>, 2>> occ_;
  std::map<long, std::pair<int, int>> in_occ_;
};

// ---------------------------------------------------------------------------
// Validation / orientation derivation.

inline LinkDiagram LinkDiagram::from_tuples(
    std::vector<std::array<long, 4>> tuples, long free_loops) {
  LinkDiagram d;
  d.free_loops_ = free_loops;
  for (const auto& t : tuples) {
    Crossing x;
    x.e = t;
    d.crossings_.push_back(x);
  }
  d.edge_count_ = 2 * static_cast<long>(tuples.size());
  d.finish_validation();
  return d;
}

inline void LinkDiagram::finish_validation() {
  const long n = static_cast<long>(crossings_.size());
  if (free_loops_ < 0) throw DiagramError("negative component count");
  if (n == 0) {
    edge_count_ = 0;
    return;
  }

  std::map<long, std::vector<std::pair<int, int>>> occ;
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < 4; ++s) {
      long e = crossings_[i].e[s];
      if (e < 1 || e > edge_count_)
        throw DiagramError("edge id " + std::to_string(e) + " out of range");
      occ[e].push_back({i, s});
    }
  for (long e = 1; e <= edge_count_; ++e) {
    auto it = occ.find(e);
    if (it == occ.end() || it->second.size() != 2)
      throw DiagramError("edge " + std::to_string(e) +
                         " does not appear exactly twice");
  }
  for (int i = 0; i < n; ++i)
    if (crossings_[i].a() == crossings_[i].c() ||
        crossings_[i].b() == crossings_[i].d())
      throw DiagramError("crossing " + std::to_string(i) +
                         ": strand enters and leaves through opposite slots");

  // Walk the immersed curves.  From an incoming occurrence (q,s) the strand
  // leaves through the opposite slot.  Consecutive edge numbering along each
  // component selects the walk direction.
  std::set<long> unvisited;
  for (long e = 1; e <= edge_count_; ++e) unvisited.insert(e);
  components_.clear();
  next_.clear();
  prev_.clear();
  comp_of_.clear();
  occ_.clear();
  in_occ_.clear();

  // Walk starting with `start` whose incoming occurrence is occ[start][which];
  // returns edge sequence and incoming occurrence of each.
  auto walk = [&](long start, int which,
                  std::vector<std::pair<int, int>>& incoming) {
    std::vector<long> seq;
    incoming.clear();
    long e = start;
    std::pair<int, int> at = occ[start][which];
    while (true) {
      seq.push_back(e);
      incoming.push_back(at);
      int q = at.first, s = at.second;
      int t = (s + 2) % 4;
      long f = crossings_[q].e[t];
      auto& fo = occ[f];
      std::pair<int, int> nxt = (fo[0] == std::make_pair(q, t)) ? fo[1] : fo[0];
      if (f == start && nxt == occ[start][which]) break;
      e = f;
      at = nxt;
      if (seq.size() > static_cast<std::size_t>(2 * edge_count_))
        throw DiagramError("strand walk failed to close");
    }
    return seq;
  };
  auto consecutive = [](const std::vector<long>& seq) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
      if (seq[k + 1] != seq[k] + 1) return false;
    return true;
  };

  // A direction is acceptable when the numbering is consecutive and no edge
  // of the component arrives at an under-out slot (tuples are rooted at the
  // incoming under edge, so arrivals at slot 2 mean the direction is wrong).
  auto acceptable = [&](const std::vector<long>& seq,
                        const std::vector<std::pair<int, int>>& inc) {
    if (!consecutive(seq)) return false;
    for (const auto& [q, s] : inc)
      if (s == 2) return false;
    return true;
  };

  while (!unvisited.empty()) {
    long m = *unvisited.begin();
    std::vector<std::pair<int, int>> inc;
    std::vector<long> seq = walk(m, 0, inc);
    if (!acceptable(seq, inc)) seq = walk(m, 1, inc);
    if (!acceptable(seq, inc) || seq.front() != m)
      throw DiagramError("component numbering not consecutive from edge " +
                         std::to_string(m));
    int ci = static_cast<int>(components_.size());
    for (std::size_t k = 0; k < seq.size(); ++k) {
      long e = seq[k];
      if (!unvisited.count(e))
        throw DiagramError("edge " + std::to_string(e) + " visited twice");
      unvisited.erase(e);
      long f = seq[(k + 1) % seq.size()];
      next_[e] = f;
      prev_[f] = e;
      comp_of_[e] = ci;
      in_occ_[e] = inc[k];
    }
    components_.push_back(seq);
  }

  // Tuple rooting and signs from the recorded flow directions.
  for (int i = 0; i < n; ++i) {
    Crossing& x = crossings_[i];
    if (in_occ_[x.a()] != std::make_pair(i, 0))
      throw DiagramError("crossing " + std::to_string(i) +
                         ": under-strand does not run a->c");
    bool d_in = in_occ_[x.d()] == std::make_pair(i, 3);
    bool b_in = in_occ_[x.b()] == std::make_pair(i, 1);
    if (d_in == b_in)
      throw DiagramError("crossing " + std::to_string(i) +
                         ": over-strand direction inconsistent");
    x.sign = d_in ? +1 : -1;
  }

  for (long e = 1; e <= edge_count_; ++e) occ_[e] = {occ[e][0], occ[e][1]};
}

// ---------------------------------------------------------------------------

inline std::vector<std::vector<long>> LinkDiagram::linking_matrix() const {
  long nc = static_cast<long>(components_.size());
  std::vector<std::vector<long>> twice(nc, std::vector<long>(nc, 0));
  for (const auto& x : crossings_) {
    int cu = comp_of_.at(x.a());
    int co = comp_of_.at(x.b());
    if (cu != co) {
      twice[cu][co] += x.sign;
      twice[co][cu] += x.sign;
    }
  }
  for (auto& row : twice)
    for (auto& v : row) {
      if (v % 2 != 0) throw std::logic_error("odd mixed-crossing sum");
      v /= 2;
    }
  return twice;
}

inline bool LinkDiagram::is_alternating() const {
  if (crossings_.empty()) return true;
  for (const auto& comp : components_) {
    std::vector<bool> flags;
    for (long e : comp) flags.push_back(slot_is_over(in_occ_.at(e).second));
    for (std::size_t k = 0; k < flags.size(); ++k)
      if (flags[k] == flags[(k + 1) % flags.size()]) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> LinkDiagram::projection_parts() const {
  int n = static_cast<int>(crossings_.size());
  if (n == 0) return {};
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (long e = 1; e <= edge_count_; ++e) {
    const auto& o = occ_.at(e);
    parent[find(o[0].first)] = find(o[1].first);
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> parts;
  for (auto& [root, v] : groups) parts.push_back(std::move(v));
  return parts;
}

inline LinkDiagram LinkDiagram::sub_diagram(
    const std::vector<int>& crossing_ids) const {
  std::set<int> keep(crossing_ids.begin(), crossing_ids.end());
  std::set<long> edges;
  for (int i : keep)
    for (long e : crossings_[i].e) edges.insert(e);
  std::map<long, long> relabel;
  long nxt = 1;
  for (const auto& comp : components_) {
    bool in = edges.count(comp[0]) > 0;
    for (long e : comp)
      if ((edges.count(e) > 0) != in)
        throw std::logic_error("sub_diagram: crossing set not a projection part");
    if (in)
      for (long e : comp) relabel[e] = nxt++;
  }
  std::vector<std::array<long, 4>> tuples;
  for (int i : keep) {
    std::array<long, 4> t;
    for (int s = 0; s < 4; ++s) t[s] = relabel.at(crossings_[i].e[s]);
    tuples.push_back(t);
  }
  return from_tuples(std::move(tuples), 0);
}

inline std::string LinkDiagram::pd_string() const {
  std::ostringstream os;
  if (crossings_.empty()) {
    os << "components=" << free_loops_;
    return os.str();
  }
  if (free_loops_ > 0) os << "components=" << free_loops_ << " ";
  bool first = true;
  for (const auto& x : crossings_) {
    if (!first) os << " ";
    first = false;
    os << "X(" << x.a() << "," << x.b() << "," << x.c() << "," << x.d() << ")";
  }
  return os.str();
}

inline std::string LinkDiagram::canonical_key() const {
  std::vector<std::array<long, 4>> t;
  for (const auto& x : crossings_) t.push_back(x.e);
  std::sort(t.begin(), t.end());
  std::ostringstream os;
  os << free_loops_ << ";";
  for (const auto& q : t)
    os << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ";";
  return os.str();
}

// ---------------------------------------------------------------------------
// Text formats.

inline LinkDiagram LinkDiagram::parse_pd(const std::string& text) {
  std::vector<std::array<long, 4>> tuples;
  long components = -1;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw DiagramError("pd parse error at position " + std::to_string(i) +
                       ": " + msg);
  };
  auto skip_ws = [&] {
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      } else if (text[i] == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else {
        break;
      }
    }
  };
  auto parse_int = [&]() -> long {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) fail("expected integer");
    return std::stol(text.substr(start, i - start));
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text.compare(i, 11, "components=") == 0) {
      i += 11;
      components = parse_int();
      if (components < 0) fail("components must be nonnegative");
      continue;
    }
    if (text[i] != 'X') fail("expected 'X(' term");
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '(') fail("expected '('");
    ++i;
    std::array<long, 4> t;
    for (int k = 0; k < 4; ++k) {
      t[k] = parse_int();
      if (t[k] <= 0) fail("edge ids must be positive");
      skip_ws();
      if (k < 3) {
        if (i >= text.size() || text[i] != ',') fail("expected ','");
        ++i;
      }
    }
    skip_ws();
    if (i >= text.size() || text[i] != ')') fail("expected ')'");
    ++i;
    tuples.push_back(t);
  }
  if (tuples.empty()) {
    if (components < 0) components = 0;
    return from_tuples({}, components);
  }
  return from_tuples(std::move(tuples), components < 0 ? 0 : components);
}

// Closure of a braid word.  At a positive letter the strand entering from
// bottom-left passes over.  Levels are read bottom to top; closure joins the
// top of each strand position to its bottom.
inline LinkDiagram LinkDiagram::parse_braid(int strands,
                                            const std::vector<int>& word) {
  if (strands < 1) throw DiagramError("braid needs at least one strand");
  for (int g : word)
    if (g == 0 || std::abs(g) >= strands)
      throw DiagramError("braid letter out of range");
  const int m = static_cast<int>(word.size());
  if (m == 0) return from_tuples({}, strands);

  // Segment (pos, level) with levels mod m (closure).
  auto sid = [&](int pos, int level) {
    return (((level % m) + m) % m) * strands + (pos - 1);
  };
  std::vector<std::array<int, 4>> xs;
  for (int t = 0; t < m; ++t) {
    int g = word[t];
    int j = std::abs(g);
    int LL = sid(j, t), LR = sid(j + 1, t), UL = sid(j, t + 1),
        UR = sid(j + 1, t + 1);
    if (g > 0)
      xs.push_back({LR, UR, UL, LL});
    else
      xs.push_back({LL, LR, UR, UL});
  }
  // Merge segments across levels with no crossing at that position.
  std::vector<int> parent(m * strands);
  for (std::size_t k = 0; k < parent.size(); ++k)
    parent[k] = static_cast<int>(k);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int t = 0; t < m; ++t) {
    int j = std::abs(word[t]);
    for (int p = 1; p <= strands; ++p)
      if (p != j && p != j + 1) parent[find(sid(p, t))] = find(sid(p, t + 1));
  }
  std::vector<bool> used(strands + 2, false);
  for (int g : word) {
    used[std::abs(g)] = true;
    used[std::abs(g) + 1] = true;
  }
  long loops = 0;
  for (int p = 1; p <= strands; ++p)
    if (!used[p]) ++loops;

  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (int i = 0; i < static_cast<int>(xs.size()); ++i)
    for (int s = 0; s < 4; ++s) occ[find(xs[i][s])].push_back({i, s});
  std::map<int, long> edge_of;
  long next_edge_id = 1;
  std::set<int> seen;
  for (auto& [r0, o0] : occ) {
    if (o0.size() != 2) throw std::logic_error("braid segment occurrence != 2");
    if (seen.count(r0)) continue;
    int r = r0;
    while (!seen.count(r)) {
      seen.insert(r);
      edge_of[r] = next_edge_id++;
      int qi = -1, si = -1;
      for (auto [q, s] : occ[r]) {
        // Incoming ends are the below-level slots: for g>0 tuple
        // (LR,UR,UL,LL) these are slots 0 and 3; for g<0 tuple
        // (LL,LR,UR,UL) slots 0 and 1.
        bool incoming = (word[q] > 0) ? (s == 0 || s == 3) : (s == 0 || s == 1);
        if (incoming) {
          qi = q;
          si = s;
        }
      }
      if (qi < 0) throw std::logic_error("braid trace: no incoming end");
      r = find(xs[qi][(si + 2) % 4]);
    }
  }
  std::vector<std::array<long, 4>> tuples(xs.size());
  for (int i = 0; i < static_cast<int>(xs.size()); ++i)
    for (int s = 0; s < 4; ++s) tuples[i][s] = edge_of.at(find(xs[i][s]));
  return from_tuples(std::move(tuples), loops);
}

inline LinkDiagram LinkDiagram::parse_braid_text(const std::string& text) {
  std::istringstream is(text);
  std::string kw;
  is >> kw;
  if (kw != "braid") throw DiagramError("braid format: expected 'braid'");
  int strands;
  if (!(is >> strands)) throw DiagramError("braid format: expected strand count");
  char colon;
  is >> colon;
  if (colon != ':') throw DiagramError("braid format: expected ':'");
  std::vector<int> word;
  int g;
  while (is >> g) word.push_back(g);
  return parse_braid(strands, word);
}

}  // namespace knot
