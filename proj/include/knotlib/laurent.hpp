#pragma once

// Integer-coefficient Laurent polynomials in one formal variable.
// The variable tag is carried along so that Omega (x), Conway (z),
// Alexander (t^{1/2}) and bracket (A) polynomials cannot be mixed up
// silently.  Exponents of the t_half variable count half-powers of t.

#include "knotlib/numeric.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace knot {

enum class Var : std::uint8_t { x, z, t_half, A };

inline const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::z: return "z";
    case Var::t_half: return "t_half";
    default: return "A";
  }
}

class Laurent {
 public:
  explicit Laurent(Var v = Var::z) : var_(v) {}
  Laurent(Var v, long exp, Int coeff) : var_(v) { add_term(exp, coeff); }

  static Laurent constant(Var v, Int c) {
    Laurent p(v);
    p.add_term(0, std::move(c));
    return p;
  }
  static Laurent monomial(Var v, long exp) { return Laurent(v, exp, 1); }

  Var var() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<long, Int>& terms() const { return terms_; }

  Int coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
  }
  long min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  long max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(long exp, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const Laurent& o) const {
    return var_ == o.var_ && terms_ == o.terms_;
  }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent operator+(const Laurent& o) const {
    check_var(o);
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  Laurent operator-(const Laurent& o) const {
    check_var(o);
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }
  Laurent operator-() const {
    Laurent r(var_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  Laurent operator*(const Laurent& o) const {
    check_var(o);
    Laurent r(var_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent operator*(const Int& k) const {
    Laurent r(var_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * k;
    return r;
  }

  Laurent shifted(long d) const {
    Laurent r(var_);
    for (const auto& [e, c] : terms_) r.terms_[e + d] = c;
    return r;
  }

  // Substitute the variable by -1/v: v^k -> (-1)^k v^{-k}.
  Laurent sub_neg_inverse() const {
    Laurent r(var_);
    for (const auto& [e, c] : terms_) r.terms_[-e] = (e % 2 == 0) ? c : -c;
    return r;
  }

  // Evaluate at a Gaussian integer (nonnegative exponents only).
  Gauss eval_gauss(const Gauss& g) const {
    if (!terms_.empty() && min_exp() < 0)
      throw std::domain_error("laurent: gauss evaluation needs exponents >= 0");
    Gauss acc;
    long last = 0;
    Gauss pw(1);
    for (const auto& [e, c] : terms_) {
      while (last < e) {
        pw *= g;
        ++last;
      }
      acc += pw * Gauss(c, 0);
    }
    return acc;
  }

  // Evaluate at a rational point (any exponents).
  Rat eval_rat(const Rat& q) const {
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
      Rat pw = 1;
      for (long k = 0; k < (e < 0 ? -e : e); ++k) pw *= q;
      if (e < 0) pw = 1 / pw;
      acc += Rat(c) * pw;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Int a = c < 0 ? Int(-c) : c;
      if (!first)
        os << (c < 0 ? " - " : " + ");
      else if (c < 0)
        os << "-";
      first = false;
      if (a != 1 || e == 0) os << a.str();
      if (e != 0) {
        if (a != 1) os << "*";
        os << var_name(var_);
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void check_var(const Laurent& o) const {
    if (var_ != o.var_) throw std::logic_error("laurent: mixed variables");
  }

  Var var_;
  std::map<long, Int> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Laurent& p) {
  return os << p.str();
}

}  // namespace knot
