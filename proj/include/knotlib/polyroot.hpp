#pragma once

// Exact real-root isolation for univariate integer polynomials via Sturm
// chains with rational bisection.  Used to isolate Tristram-Levine jump
// locations; degrees stay small so simplicity beats asymptotics here.

#include "knotlib/numeric.hpp"

#include <utility>
#include <vector>

namespace knot {

// Coefficients ascending: p[i] multiplies u^i.
using RatPoly = std::vector<Rat>;

inline RatPoly rp_trim(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}
inline bool rp_zero(const RatPoly& p) { return p.empty(); }
inline long rp_deg(const RatPoly& p) { return static_cast<long>(p.size()) - 1; }

inline Rat rp_eval(const RatPoly& p, const Rat& u) {
  Rat acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * u + p[i];
  return acc;
}

inline RatPoly rp_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(Int(i)));
  return rp_trim(d);
}

inline RatPoly rp_neg_rem(const RatPoly& a, const RatPoly& b) {
  RatPoly r = a;
  while (!rp_zero(r) && rp_deg(r) >= rp_deg(b)) {
    Rat q = r.back() / b.back();
    long shift = rp_deg(r) - rp_deg(b);
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= q * b[i];
    r = rp_trim(std::move(r));
  }
  for (auto& c : r) c = -c;
  return r;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
  a = rp_trim(std::move(a));
  b = rp_trim(std::move(b));
  while (!rp_zero(b)) {
    RatPoly r = rp_neg_rem(a, b);
    for (auto& c : r) c = -c;
    a = std::move(b);
    b = rp_trim(std::move(r));
  }
  if (!rp_zero(a)) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

inline RatPoly rp_divide_exact(const RatPoly& a, const RatPoly& b) {
  RatPoly r = a, q(a.size(), Rat(0));
  while (!rp_zero(r) && rp_deg(r) >= rp_deg(b)) {
    Rat f = r.back() / b.back();
    long shift = rp_deg(r) - rp_deg(b);
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
    r = rp_trim(std::move(r));
  }
  return rp_trim(std::move(q));
}

struct SturmChain {
  std::vector<RatPoly> seq;

  explicit SturmChain(const RatPoly& p) {
    RatPoly a = rp_trim(p);
    if (rp_zero(a)) return;
    seq.push_back(a);
    RatPoly b = rp_derivative(a);
    if (rp_zero(b)) return;
    seq.push_back(b);
    while (true) {
      RatPoly r = rp_neg_rem(seq[seq.size() - 2], seq.back());
      if (rp_zero(r)) break;
      seq.push_back(std::move(r));
    }
  }

  long variations(const Rat& u) const {
    long v = 0;
    int last = 0;
    for (const auto& p : seq) {
      int s = sgn(rp_eval(p, u));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // Number of distinct roots in (lo, hi]; requires lo, hi non-roots of p for
  // half-open semantics to be exact, which the caller arranges.
  long roots_in(const Rat& lo, const Rat& hi) const {
    return variations(lo) - variations(hi);
  }
};

struct IsolatedRoot {
  Rat lo, hi;        // open isolating interval, p has one root inside
  long multiplicity; // multiplicity in the original polynomial
};

// Isolate the distinct real roots of p (integer coefficients, given exactly)
// inside the open interval (lo, hi).  Endpoints that are roots are ignored.
inline std::vector<IsolatedRoot> isolate_roots(const std::vector<Int>& coeffs,
                                               Rat lo, Rat hi) {
  RatPoly p;
  for (const auto& c : coeffs) p.emplace_back(c);
  p = rp_trim(std::move(p));
  std::vector<IsolatedRoot> out;
  if (rp_zero(p) || rp_deg(p) == 0) return out;

  RatPoly g = rp_gcd(p, rp_derivative(p));
  RatPoly sq = rp_deg(g) >= 1 ? rp_divide_exact(p, g) : p;  // square-free part
  SturmChain chain(sq);

  // Nudge endpoints off roots of the square-free part.
  auto nudge = [&](Rat v, bool up) {
    Rat step(1, 1024);
    while (rp_eval(sq, v) == 0) v += up ? step : -step, step /= 2;
    return v;
  };
  lo = nudge(lo, true);
  hi = nudge(hi, false);
  if (!(lo < hi)) return out;

  auto mult_of = [&](const Rat& a, const Rat& b) {
    // multiplicity = 1 + multiplicity of the root inside gcd(p, p')
    long m = 1;
    RatPoly h = g;
    while (rp_deg(h) >= 1) {
      SturmChain hc(rp_divide_exact(h, rp_gcd(h, rp_derivative(h))));
      if (hc.roots_in(a, b) == 0) break;
      ++m;
      h = rp_gcd(h, rp_derivative(h));
    }
    return m;
  };

  auto rec = [&](auto&& self, Rat a, Rat b) -> void {
    long k = chain.roots_in(a, b);
    if (k == 0) return;
    if (k == 1) {
      out.push_back({a, b, mult_of(a, b)});
      return;
    }
    Rat mid = (a + b) / 2;
    while (rp_eval(sq, mid) == 0) mid = (a + mid) / 2;
    self(self, a, mid);
    self(self, mid, b);
  };
  rec(rec, lo, hi);
  return out;
}

}  // namespace knot
