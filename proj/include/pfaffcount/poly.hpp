/// Dense univariate polynomials over an exact coefficient ring.
///
/// Coefficients are stored ascending by exponent and kept normalized
/// (no trailing zeros), so deg() is size-1 and the zero polynomial is
/// the empty vector with deg() == -1.  The same template instantiates
///   IntPoly  = Polynomial<Int>        (Z[X])
///   RatPoly  = Polynomial<Rat>        (Q[X])
///   BiPoly   = Polynomial<IntPoly>    (Z[X][Y], outer variable Y)
#ifndef PFAFFCOUNT_POLY_HPP
#define PFAFFCOUNT_POLY_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pfaffcount/numeric.hpp"

namespace pfaffcount {

template <class C>
class Polynomial;

inline bool coeff_is_zero(const Int& c) { return c == 0; }
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
template <class C>
bool coeff_is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

template <class C>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const C& c) {
    if (!coeff_is_zero(c)) cs_.push_back(c);
  }

  static Polynomial from_coeffs(std::vector<C> cs) {
    Polynomial p;
    p.cs_ = std::move(cs);
    p.normalize();
    return p;
  }

  static Polynomial monomial(const C& c, size_t k) {
    Polynomial p;
    if (!coeff_is_zero(c)) {
      p.cs_.assign(k + 1, C());
      p.cs_[k] = c;
    }
    return p;
  }

  bool is_zero() const { return cs_.empty(); }
  int deg() const { return static_cast<int>(cs_.size()) - 1; }

  const C& lc() const {
    if (cs_.empty()) throw std::invalid_argument("lc of zero polynomial");
    return cs_.back();
  }

  C coeff(size_t i) const { return i < cs_.size() ? cs_[i] : C(); }
  const std::vector<C>& coeffs() const { return cs_; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (C& c : r.cs_) c = C() - c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (cs_.size() < o.cs_.size()) cs_.resize(o.cs_.size(), C());
    for (size_t i = 0; i < o.cs_.size(); ++i) cs_[i] = cs_[i] + o.cs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (cs_.size() < o.cs_.size()) cs_.resize(o.cs_.size(), C());
    for (size_t i = 0; i < o.cs_.size(); ++i) cs_[i] = cs_[i] - o.cs_[i];
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<C> out(a.cs_.size() + b.cs_.size() - 1, C());
    for (size_t i = 0; i < a.cs_.size(); ++i) {
      if (coeff_is_zero(a.cs_[i])) continue;
      for (size_t j = 0; j < b.cs_.size(); ++j) {
        if (coeff_is_zero(b.cs_[j])) continue;
        out[i + j] = out[i + j] + a.cs_[i] * b.cs_[j];
      }
    }
    return from_coeffs(std::move(out));
  }

  /// c * p, c a coefficient.
  Polynomial scaled(const C& c) const {
    if (coeff_is_zero(c)) return Polynomial();
    Polynomial r = *this;
    for (C& e : r.cs_) e = e * c;
    r.normalize();
    return r;
  }

  /// p * c*Y^k.
  Polynomial times_monomial(const C& c, size_t k) const {
    if (coeff_is_zero(c) || is_zero()) return Polynomial();
    Polynomial r;
    r.cs_.assign(cs_.size() + k, C());
    for (size_t i = 0; i < cs_.size(); ++i) r.cs_[i + k] = cs_[i] * c;
    r.normalize();
    return r;
  }

  Polynomial derivative() const {
    if (cs_.size() <= 1) return Polynomial();
    std::vector<C> out(cs_.size() - 1, C());
    for (size_t i = 1; i < cs_.size(); ++i) out[i - 1] = cs_[i] * C(int(i));
    return from_coeffs(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.cs_ == b.cs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

 private:
  void normalize() {
    while (!cs_.empty() && coeff_is_zero(cs_.back())) cs_.pop_back();
  }
  std::vector<C> cs_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;
using BiPoly = Polynomial<IntPoly>;    // Z[X][Y], coefficients indexed by Y-power
using BiRatPoly = Polynomial<RatPoly>; // Q[X][Y], scratch ring for checked divisions

// Coefficient constructors need C(int); mpz_class/mpq_class provide it, and
// Polynomial<C>(int) is resolved through the explicit C conversion below.
template <class C>
Polynomial<C> poly_const(int v) {
  return Polynomial<C>(C(v));
}

inline IntPoly ipoly(std::initializer_list<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return IntPoly::from_coeffs(std::move(v));
}

inline BiPoly bipoly(std::initializer_list<IntPoly> ycoeffs) {
  return BiPoly::from_coeffs(std::vector<IntPoly>(ycoeffs));
}

// ---------------------------------------------------------------------------
// exact coefficient division hooks

inline bool coeff_div_exact(const Int& a, const Int& b, Int& out) {
  if (b == 0) return false;
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return true;
}

inline bool coeff_div_exact(const Rat& a, const Rat& b, Rat& out) {
  if (b == 0) return false;
  out = a / b;
  return true;
}

template <class C>
std::optional<Polynomial<C>> divide_exact(const Polynomial<C>& a,
                                          const Polynomial<C>& b);

template <class C>
bool coeff_div_exact(const Polynomial<C>& a, const Polynomial<C>& b,
                     Polynomial<C>& out) {
  auto q = divide_exact(a, b);
  if (!q) return false;
  out = *q;
  return true;
}

/// Exact division a / b in C[Y]; nullopt if b = 0 or the division leaves a
/// remainder (including non-exact coefficient divisions along the way).
template <class C>
std::optional<Polynomial<C>> divide_exact(const Polynomial<C>& a,
                                          const Polynomial<C>& b) {
  if (b.is_zero()) return std::nullopt;
  Polynomial<C> r = a;
  std::vector<C> q(a.is_zero() ? 0 : std::max(0, a.deg() - b.deg() + 1), C());
  while (!r.is_zero() && r.deg() >= b.deg()) {
    C t;
    if (!coeff_div_exact(r.lc(), b.lc(), t)) return std::nullopt;
    size_t k = size_t(r.deg() - b.deg());
    q[k] = t;
    r -= b.times_monomial(t, k);
  }
  if (!r.is_zero()) return std::nullopt;
  return Polynomial<C>::from_coeffs(std::move(q));
}

/// Quotient/remainder in C[Y] where every leading-coefficient division must
/// be exact (used where the theory guarantees the quotient stays in the ring).
template <class C>
std::optional<std::pair<Polynomial<C>, Polynomial<C>>> divrem_exactdiv(
    const Polynomial<C>& a, const Polynomial<C>& b) {
  if (b.is_zero()) return std::nullopt;
  Polynomial<C> r = a;
  std::vector<C> q(a.is_zero() ? 0 : size_t(std::max(0, a.deg() - b.deg() + 1)), C());
  while (!r.is_zero() && r.deg() >= b.deg()) {
    C t;
    if (!coeff_div_exact(r.lc(), b.lc(), t)) return std::nullopt;
    size_t k = size_t(r.deg() - b.deg());
    q[k] = q[k] + t;
    r -= b.times_monomial(t, k);
  }
  return std::make_pair(Polynomial<C>::from_coeffs(std::move(q)), r);
}

/// Division-free pseudo-remainder: returns (r, s) with
/// lc(b)^s * a = q*b + r, deg r < deg b, s <= max(0, deg a - deg b + 1).
template <class C>
std::pair<Polynomial<C>, int> prem_steps(const Polynomial<C>& a,
                                         const Polynomial<C>& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-remainder by zero");
  Polynomial<C> r = a;
  int steps = 0;
  while (!r.is_zero() && r.deg() >= b.deg()) {
    size_t k = size_t(r.deg() - b.deg());
    C rl = r.lc();
    r = r.scaled(b.lc()) - b.times_monomial(rl, k);
    ++steps;
  }
  return {r, steps};
}

// ---------------------------------------------------------------------------
// evaluation

inline Rat eval_ipoly(const IntPoly& p, const Rat& x) {
  Rat acc(0);
  for (int i = p.deg(); i >= 0; --i) acc = acc * x + Rat(p.coeff(size_t(i)));
  return acc;
}

inline Int eval_ipoly_int(const IntPoly& p, const Int& x) {
  Int acc(0);
  for (int i = p.deg(); i >= 0; --i) acc = acc * x + p.coeff(size_t(i));
  return acc;
}

inline Rat eval_rpoly(const RatPoly& p, const Rat& x) {
  Rat acc(0);
  for (int i = p.deg(); i >= 0; --i) acc = acc * x + p.coeff(size_t(i));
  return acc;
}

inline RatPoly to_ratpoly(const IntPoly& p) {
  std::vector<Rat> cs;
  cs.reserve(size_t(p.deg() + 1));
  for (int i = 0; i <= p.deg(); ++i) cs.emplace_back(p.coeff(size_t(i)));
  return RatPoly::from_coeffs(std::move(cs));
}

/// Clears denominators: returns (q, m) with q = m*p integral, m > 0 minimal.
inline std::pair<IntPoly, Int> clear_denominators(const RatPoly& p) {
  Int m(1);
  for (int i = 0; i <= p.deg(); ++i) {
    const Int& d = p.coeff(size_t(i)).get_den();
    m = m / gcd_int(m, d) * d;
  }
  std::vector<Int> cs;
  for (int i = 0; i <= p.deg(); ++i) {
    Rat c = p.coeff(size_t(i)) * Rat(m);
    cs.push_back(c.get_num());
  }
  return {IntPoly::from_coeffs(std::move(cs)), m};
}

/// outer(inner(X)) by Horner.
inline IntPoly compose(const IntPoly& outer, const IntPoly& inner) {
  IntPoly acc;
  for (int i = outer.deg(); i >= 0; --i) {
    acc = acc * inner + IntPoly(outer.coeff(size_t(i)));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// bivariate helpers (BiPoly = Z[X][Y])

inline int deg_y(const BiPoly& f) { return f.deg(); }

inline int deg_x(const BiPoly& f) {
  int d = -1;
  for (int j = 0; j <= f.deg(); ++j) d = std::max(d, f.coeff(size_t(j)).deg());
  return d;
}

inline int deg_total(const BiPoly& f) {
  int d = -1;
  for (int j = 0; j <= f.deg(); ++j) {
    const IntPoly& c = f.coeff(size_t(j));
    for (int i = 0; i <= c.deg(); ++i)
      if (c.coeff(size_t(i)) != 0) d = std::max(d, i + j);
  }
  return d;
}

inline Int height(const IntPoly& p) {
  Int h(0);
  for (int i = 0; i <= p.deg(); ++i) {
    Int a = abs_int(p.coeff(size_t(i)));
    if (a > h) h = a;
  }
  return h;
}

inline Int height(const BiPoly& f) {
  Int h(0);
  for (int j = 0; j <= f.deg(); ++j) {
    Int hj = height(f.coeff(size_t(j)));
    if (hj > h) h = hj;
  }
  return h;
}

inline BiPoly lift_to_bipoly(const IntPoly& p) { return BiPoly(p); }

inline BiPoly bipoly_x() { return BiPoly(ipoly({0, 1})); }
inline BiPoly bipoly_y() { return BiPoly::monomial(ipoly({1}), 1); }

/// dF/dY.
inline BiPoly partial_y(const BiPoly& f) { return f.derivative(); }

/// dF/dX (coefficient-wise).
inline BiPoly partial_x(const BiPoly& f) {
  std::vector<IntPoly> cs;
  for (int j = 0; j <= f.deg(); ++j) cs.push_back(f.coeff(size_t(j)).derivative());
  return BiPoly::from_coeffs(std::move(cs));
}

/// F(x, Y) as a polynomial in Y over Q.
inline RatPoly bipoly_eval_x(const BiPoly& f, const Rat& x) {
  std::vector<Rat> cs;
  for (int j = 0; j <= f.deg(); ++j) cs.push_back(eval_ipoly(f.coeff(size_t(j)), x));
  return RatPoly::from_coeffs(std::move(cs));
}

/// F(X, y) as a polynomial in X over Q.
inline RatPoly bipoly_eval_y(const BiPoly& f, const Rat& y) {
  RatPoly acc;
  for (int j = f.deg(); j >= 0; --j) {
    acc = acc.scaled(y) + to_ratpoly(f.coeff(size_t(j)));
  }
  return acc;
}

inline Rat bipoly_eval(const BiPoly& f, const Rat& x, const Rat& y) {
  Rat acc(0);
  for (int j = f.deg(); j >= 0; --j) acc = acc * y + eval_ipoly(f.coeff(size_t(j)), x);
  return acc;
}

/// Swaps the roles of X and Y.
inline BiPoly transpose_xy(const BiPoly& f) {
  int dx = deg_x(f);
  std::vector<IntPoly> out;
  for (int i = 0; i <= dx; ++i) {
    std::vector<Int> cs;
    for (int j = 0; j <= f.deg(); ++j) cs.push_back(f.coeff(size_t(j)).coeff(size_t(i)));
    out.push_back(IntPoly::from_coeffs(std::move(cs)));
  }
  return BiPoly::from_coeffs(std::move(out));
}

inline BiRatPoly to_biratpoly(const BiPoly& f) {
  std::vector<RatPoly> cs;
  for (int j = 0; j <= f.deg(); ++j) cs.push_back(to_ratpoly(f.coeff(size_t(j))));
  return BiRatPoly::from_coeffs(std::move(cs));
}

inline std::optional<BiPoly> to_bipoly_if_integral(const BiRatPoly& f) {
  std::vector<IntPoly> cs;
  for (int j = 0; j <= f.deg(); ++j) {
    const RatPoly& c = f.coeff(size_t(j));
    std::vector<Int> ci;
    for (int i = 0; i <= c.deg(); ++i) {
      const Rat& v = c.coeff(size_t(i));
      if (v.get_den() != 1) return std::nullopt;
      ci.push_back(v.get_num());
    }
    cs.push_back(IntPoly::from_coeffs(std::move(ci)));
  }
  return BiPoly::from_coeffs(std::move(cs));
}

// ---------------------------------------------------------------------------
// printing (canonical, re-parseable by the CLI grammar)

inline std::string ipoly_to_string(const IntPoly& p, const char* var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.deg(); ++i) {
    const Int c = p.coeff(size_t(i));
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = abs_int(c);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

inline std::string bipoly_to_string(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= f.deg(); ++j) {
    const IntPoly& cj = f.coeff(size_t(j));
    for (int i = 0; i <= cj.deg(); ++i) {
      const Int c = cj.coeff(size_t(i));
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Int a = abs_int(c);
      bool wrote = false;
      if (a != 1 || (i == 0 && j == 0)) {
        os << a.get_str();
        wrote = true;
      }
      if (i > 0) {
        if (wrote) os << "*";
        os << "x";
        if (i > 1) os << "^" << i;
        wrote = true;
      }
      if (j > 0) {
        if (wrote) os << "*";
        os << "y";
        if (j > 1) os << "^" << j;
      }
    }
  }
  return os.str();
}

}  // namespace pfaffcount

#endif
