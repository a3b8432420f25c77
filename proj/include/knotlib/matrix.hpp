#pragma once

// Dense exact matrices over Int / Gauss / Laurent with the handful of exact
// kernels the library needs: Bareiss determinants, characteristic polynomials
// (Faddeev-LeVerrier, exact divisions asserted), inertia of symmetric and
// Hermitian matrices by Descartes sign counting on the characteristic
// polynomial (valid since all roots are real), and division-free determinants
// of small polynomial matrices by memoized minor expansion.

#include "knotlib/laurent.hpp"
#include "knotlib/numeric.hpp"

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace knot {

template <class T>
class Matrix {
 public:
  Matrix() : n_(0), m_(0) {}
  Matrix(std::size_t n, std::size_t m, T init = T()) : n_(n), m_(m), a_(n * m, init) {}
  static Matrix identity(std::size_t n) {
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = T(1);
    return r;
  }

  std::size_t rows() const { return n_; }
  std::size_t cols() const { return m_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * m_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }

  bool operator==(const Matrix& o) const {
    return n_ == o.n_ && m_ == o.m_ && a_ == o.a_;
  }

  Matrix transpose() const {
    Matrix r(m_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < m_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix r(n_, o.m_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < m_; ++k) {
        const T& v = (*this)(i, k);
        for (std::size_t j = 0; j < o.m_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  Matrix minor_without(std::size_t row, std::size_t col) const {
    Matrix r(n_ - 1, m_ - 1);
    for (std::size_t i = 0, ri = 0; i < n_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, rj = 0; j < m_; ++j) {
        if (j == col) continue;
        r(ri, rj) = (*this)(i, j);
        ++rj;
      }
      ++ri;
    }
    return r;
  }

 private:
  std::size_t n_, m_;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using GaussMatrix = Matrix<Gauss>;

// Fraction-free Gaussian elimination (Bareiss).  Exact over Z and Z[i].
inline Int det_bareiss(IntMatrix m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  Int denom = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = v / denom;  // exact by Bareiss
      }
    denom = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

inline Gauss det_bareiss(GaussMatrix m) {
  std::size_t n = m.rows();
  if (n == 0) return Gauss(1);
  Gauss denom(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return Gauss(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)).exact_div(denom);
    denom = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

inline Int matrix_rank(IntMatrix m) {
  std::size_t n = m.rows(), c = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < n; ++col) {
    std::size_t p = rank;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j < c; ++j) std::swap(m(rank, j), m(p, j));
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Int a = m(rank, col), b = m(i, col);
      for (std::size_t j = 0; j < c; ++j) m(i, j) = m(i, j) * a - m(rank, j) * b;
    }
    ++rank;
  }
  return rank;
}

// Characteristic polynomial coefficients of an integer matrix:
// p(t) = t^n + c[1] t^{n-1} + ... + c[n].  Faddeev-LeVerrier; every division
// is exact because the coefficients are integers.
inline std::vector<Int> char_poly(const IntMatrix& a) {
  std::size_t n = a.rows();
  std::vector<Int> c(n + 1);
  c[0] = 1;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
    if (tr % Int(k) != 0) throw std::logic_error("char_poly: inexact trace division");
    c[k] = -tr / Int(k);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[k];
  }
  return c;
}

// Characteristic polynomial of a Hermitian Gaussian-integer matrix; the
// result has integer coefficients (thrown on otherwise).
inline std::vector<Int> char_poly_hermitian(const GaussMatrix& a) {
  std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != a(j, i).conj())
        throw std::invalid_argument("char_poly_hermitian: matrix not Hermitian");
  std::vector<Int> c(n + 1);
  c[0] = 1;
  GaussMatrix m = GaussMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    Gauss tr;
    for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
    if (tr.im != 0 || tr.re % Int(k) != 0)
      throw std::logic_error("char_poly_hermitian: inexact trace");
    c[k] = -tr.re / Int(k);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += Gauss(c[k], 0);
  }
  return c;
}

struct Inertia {
  long positive = 0;
  long negative = 0;
  long zero = 0;
  long signature() const { return positive - negative; }
};

// Eigenvalue sign counts from a characteristic polynomial all of whose roots
// are real.  Descartes' rule is exact in that case.
inline Inertia inertia_from_char_poly(const std::vector<Int>& c) {
  Inertia r;
  std::size_t n = c.size() - 1;
  std::size_t z = 0;
  while (z < n && c[n - z] == 0) ++z;
  r.zero = static_cast<long>(z);
  // p(t)/t^z has nonzero constant term; count sign variations for +/- roots.
  int last = 0;
  for (std::size_t k = 0; k <= n - z; ++k) {
    int s = sgn(c[k]);
    if (s == 0) continue;
    if (last != 0 && s != last) ++r.positive;
    last = s;
  }
  last = 0;
  for (std::size_t k = 0; k <= n - z; ++k) {
    int s = sgn(c[k]);
    if (s == 0) continue;
    if ((n - z - k) % 2 == 1) s = -s;  // substitute t -> -t
    if (last != 0 && s != last) ++r.negative;
    last = s;
  }
  return r;
}

inline Inertia symmetric_inertia(const IntMatrix& m) {
  std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i))
        throw std::invalid_argument("symmetric_inertia: matrix not symmetric");
  return inertia_from_char_poly(char_poly(m));
}

inline Inertia hermitian_inertia(const GaussMatrix& m) {
  return inertia_from_char_poly(char_poly_hermitian(m));
}

// Determinant of a matrix of Laurent polynomials by minor expansion along the
// first remaining column, memoized over row subsets.  Division-free; fine for
// the dimensions Seifert matrices reach on small diagrams.
inline Laurent det_poly(const Matrix<Laurent>& m, Var v) {
  std::size_t n = m.rows();
  if (n == 0) return Laurent::constant(v, 1);
  if (n > 63) throw std::invalid_argument("det_poly: matrix too large");
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  std::unordered_map<std::uint64_t, Laurent> memo;

  auto rec = [&](auto&& self, std::uint64_t rowmask, std::size_t col) -> Laurent {
    if (col == n) return Laurent::constant(v, 1);
    auto it = memo.find(rowmask);
    if (it != memo.end()) return it->second;
    Laurent acc(v);
    int parity = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(rowmask & (1ULL << i))) continue;
      const Laurent& entry = m(i, col);
      if (!entry.is_zero()) {
        Laurent sub = self(self, rowmask & ~(1ULL << i), col + 1);
        Laurent term = entry * sub;
        if (parity % 2 == 1) term = -term;
        acc += term;
      }
      ++parity;
    }
    memo.emplace(rowmask, acc);
    return acc;
  };
  std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  return rec(rec, full, 0);
}

}  // namespace knot
