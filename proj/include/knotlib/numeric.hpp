#pragma once

// Exact arithmetic primitives shared by the whole library: arbitrary-precision
// integers and rationals (boost.multiprecision), Gaussian integers, and the
// ring Z[zeta_8] used for bracket evaluation at A^4 = -1.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace knot {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Int& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }
inline int sgn(const Rat& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }
inline Int iabs(const Int& v) { return v < 0 ? Int(-v) : v; }

// Gaussian integer a + b*i.
struct Gauss {
  Int re{0};
  Int im{0};

  Gauss() = default;
  Gauss(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
  Gauss(long r) : re(r), im(0) {}

  bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Gauss& o) const { return !(*this == o); }

  Gauss operator+(const Gauss& o) const { return {re + o.re, im + o.im}; }
  Gauss operator-(const Gauss& o) const { return {re - o.re, im - o.im}; }
  Gauss operator-() const { return {-re, -im}; }
  Gauss operator*(const Gauss& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Gauss& operator+=(const Gauss& o) { return *this = *this + o; }
  Gauss& operator-=(const Gauss& o) { return *this = *this - o; }
  Gauss& operator*=(const Gauss& o) { return *this = *this * o; }

  Gauss conj() const { return {re, Int(-im)}; }
  Int norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  // Exact division, throws if not divisible in Z[i].
  Gauss exact_div(const Gauss& o) const {
    Int n = o.norm();
    if (n == 0) throw std::domain_error("gauss: division by zero");
    Gauss num = *this * o.conj();
    if (num.re % n != 0 || num.im % n != 0)
      throw std::domain_error("gauss: inexact division");
    return {num.re / n, num.im / n};
  }

  std::string str() const {
    std::string s = re.str();
    if (im != 0) {
      s += (im > 0 ? "+" : "-") + iabs(im).str() + "i";
    }
    return s;
  }
};

inline Gauss gauss_i() { return {0, 1}; }

// i^k for any integer k.
inline Gauss ipow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

inline std::ostream& operator<<(std::ostream& os, const Gauss& g) {
  return os << g.str();
}

// Element of Z[zeta] with zeta = primitive 8th root of unity, zeta^4 = -1.
// Stored as c0 + c1*zeta + c2*zeta^2 + c3*zeta^3.
struct Zeta8 {
  std::array<Int, 4> c{Int(0), Int(0), Int(0), Int(0)};

  Zeta8() = default;
  Zeta8(long v) { c[0] = v; }
  static Zeta8 zeta_pow(long k) {
    long r = ((k % 8) + 8) % 8;
    Zeta8 z;
    if (r < 4)
      z.c[r] = 1;
    else
      z.c[r - 4] = -1;
    return z;
  }

  bool operator==(const Zeta8& o) const { return c == o.c; }

  Zeta8 operator+(const Zeta8& o) const {
    Zeta8 r;
    for (int k = 0; k < 4; ++k) r.c[k] = c[k] + o.c[k];
    return r;
  }
  Zeta8 operator-(const Zeta8& o) const {
    Zeta8 r;
    for (int k = 0; k < 4; ++k) r.c[k] = c[k] - o.c[k];
    return r;
  }
  Zeta8 operator*(const Zeta8& o) const {
    std::array<Int, 7> t{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[a + b] += c[a] * o.c[b];
    Zeta8 r;
    for (int k = 0; k < 4; ++k) r.c[k] = t[k];
    for (int k = 4; k < 7; ++k) r.c[k - 4] -= t[k];
    return r;
  }
  Zeta8& operator+=(const Zeta8& o) { return *this = *this + o; }
  Zeta8& operator*=(const Zeta8& o) { return *this = *this * o; }

  bool is_zero() const {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
  }

  // True when the element lies in Z[i] = Z[zeta^2]; then returns re/im.
  bool as_gauss(Gauss& out) const {
    if (c[1] != 0 || c[3] != 0) return false;
    out = Gauss(c[0], c[2]);  // zeta^2 = i
    return true;
  }
};

}  // namespace knot
