/// Exact integer/rational layer on top of GMP, plus the handful of
/// enclosure helpers (rational square-root bounds) the root bounds need.
#ifndef PFAFFCOUNT_NUMERIC_HPP
#define PFAFFCOUNT_NUMERIC_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pfaffcount {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when an identity the theory guarantees fails at runtime
/// (non-exact division, exceeded multiplicity cap, ...).
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Raised by the cooperative cancellation token.
class cancelled_error : public std::runtime_error {
 public:
  cancelled_error() : std::runtime_error("computation cancelled") {}
};

inline int sign_of(const Int& z) { return sgn(z); }
inline int sign_of(const Rat& q) { return sgn(q); }

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  return r;  // num/den coprime stays coprime under powers
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int abs_int(const Int& a) { return abs(a); }

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// smallest integer >= sqrt(n), n >= 0.
inline Int isqrt_ceil(const Int& n) {
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) ++r;
  return r;
}

/// Rational upper bound for sqrt(s), s >= 0, within 2^-bits of the true value.
inline Rat sqrt_upper(const Rat& s, unsigned bits = 32) {
  if (sgn(s) < 0) throw std::invalid_argument("sqrt_upper: negative argument");
  const Int& n = s.get_num();
  const Int& d = s.get_den();
  Int scale = Int(1) << bits;
  // sqrt(n/d) = sqrt(n*d)/d, so ceil(sqrt(n*d*4^bits)) / (d*2^bits) >= sqrt(s)
  Int t = isqrt_ceil(n * d * scale * scale);
  Rat r(t, d * scale);
  r.canonicalize();
  return r;
}

/// Rational lower bound for sqrt(s), s >= 0.
inline Rat sqrt_lower(const Rat& s, unsigned bits = 32) {
  if (sgn(s) < 0) throw std::invalid_argument("sqrt_lower: negative argument");
  const Int& n = s.get_num();
  const Int& d = s.get_den();
  Int scale = Int(1) << bits;
  Int t = isqrt_floor(n * d * scale * scale);
  Rat r(t, d * scale);
  r.canonicalize();
  return r;
}

/// ceil(q) as an integer.
inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

/// Parses "p", "p/q" or an exact decimal literal ("1.25" -> 5/4).
inline std::optional<Rat> parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) return std::nullopt;
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    Rat r(Int(num), d);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
    if (head.empty()) head = "0";
    if (!is_int(head) || tail.empty() || !is_int(tail)) return std::nullopt;
    Int scale = int_pow(Int(10), tail.size());
    Int v = Int(head) * scale + Int(tail);
    if (neg) v = -v;
    Rat r(v, scale);
    r.canonicalize();
    return r;
  }
  if (!is_int(s)) return std::nullopt;
  return Rat(Int(s));
}

inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace pfaffcount

#endif
