#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "wrep/errors.hpp"

namespace wrep {

using Integer = mpz_class;

/// Exact rational number, always reduced, denominator > 0.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& num, const Integer& den) : q_(num, den) { normalize(); }
  Rational(long num, long den) : q_(num, den) { normalize(); }

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string to_string() const {
    std::string s = q_.get_num().get_str();
    if (q_.get_den() != 1) s += "/" + q_.get_den().get_str();
    return s;
  }

 private:
  explicit Rational(const mpq_class& q) : q_(q) {}
  void normalize() {
    if (q_.get_den() == 0) throw Error("Rational: zero denominator");
    q_.canonicalize();
  }
  mpq_class q_;
};

inline Integer factorial(long n) {
  Integer f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer int_pow(const Integer& b, long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

namespace detail {

// Dense little-endian polynomials over Q, used only to set up cyclotomic fields.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

// Exact division remainder: a mod b, with b monic-leading after scaling.
inline Poly poly_mod(Poly a, const Poly& b) {
  poly_trim(a);
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    poly_trim(a);
  }
  return a;
}

inline Poly poly_div(Poly a, const Poly& b) {
  poly_trim(a);
  if (b.empty()) throw Error("poly_div: division by zero polynomial");
  if (a.empty()) return {};
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    poly_trim(a);
  }
  if (!a.empty()) throw Error("poly_div: division not exact");
  poly_trim(q);
  return q;
}

struct CycloField {
  unsigned n = 1;
  Poly phi;                            // Phi_n, monic
  std::vector<std::vector<Rational>> pow;  // pow[k] = coords of zeta^k, k in [0,n)
  size_t deg() const { return phi.size() - 1; }
};

inline const Poly& cyclotomic_poly(unsigned n, std::map<unsigned, Poly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  Poly p(n + 1, Rational(0));
  p[0] = Rational(-1);
  p[n] = Rational(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_div(p, cyclotomic_poly(d, cache));
  }
  return cache.emplace(n, std::move(p)).first->second;
}

inline const CycloField& cyclo_field(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, CycloField> fields;
  static std::map<unsigned, Poly> phi_cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = fields.find(n);
  if (it != fields.end()) return it->second;
  if (n == 0) throw Error("cyclotomic order must be positive");
  CycloField f;
  f.n = n;
  f.phi = cyclotomic_poly(n, phi_cache);
  size_t deg = f.phi.size() - 1;
  f.pow.resize(n);
  Poly cur{Rational(1)};
  for (unsigned k = 0; k < n; ++k) {
    Poly red = poly_mod(cur, f.phi);
    red.resize(deg, Rational(0));
    f.pow[k] = red;
    // multiply by x for the next power
    cur.insert(cur.begin(), Rational(0));
  }
  return fields.emplace(n, std::move(f)).first->second;
}

}  // namespace detail

/// Exact element of Q(zeta_N), stored canonically in the power basis of Q[x]/Phi_N.
/// Mixed-order arithmetic is allowed only when one order divides the other
/// (in practice: rational constants of order 1 meeting values of the context order).
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_{Rational(0)} {}
  Cyclotomic(const Rational& r) : order_(1), c_{r} {}  // NOLINT: implicit by design
  Cyclotomic(long n) : order_(1), c_{Rational(n)} {}   // NOLINT: implicit by design
  Cyclotomic(const Integer& n) : order_(1), c_{Rational(n)} {}  // NOLINT

  /// zeta_N^k, reduced mod Phi_N.
  static Cyclotomic root(unsigned n, long k) {
    const auto& f = detail::cyclo_field(n);
    long r = k % static_cast<long>(n);
    if (r < 0) r += n;
    return Cyclotomic(n, f.pow[static_cast<size_t>(r)]);
  }

  static Cyclotomic zero(unsigned n) {
    const auto& f = detail::cyclo_field(n);
    return Cyclotomic(n, std::vector<Rational>(f.deg(), Rational(0)));
  }

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }

  Rational as_rational() const {
    if (!is_rational()) throw NotRational("Cyclotomic value is not rational: " + to_string());
    return c_[0];
  }

  /// Field automorphism zeta -> zeta^{-1}.
  Cyclotomic conj() const {
    const auto& f = detail::cyclo_field(order_);
    Cyclotomic r = zero(order_);
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j].is_zero()) continue;
      size_t k = (order_ - j) % order_;
      r.add_scaled(f.pow[k], c_[j]);
    }
    return r;
  }

  /// Embed into Q(zeta_N); requires order() | N.
  Cyclotomic promoted(unsigned n) const {
    if (n == order_) return *this;
    if (n % order_ != 0)
      throw OrderMismatch("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                          std::to_string(n) + ")");
    const auto& f = detail::cyclo_field(n);
    unsigned step = n / order_;
    Cyclotomic r = zero(n);
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j].is_zero()) continue;
      r.add_scaled(f.pow[(j * step) % n], c_[j]);
    }
    return r;
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    auto [a, b] = aligned(*this, o);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    *this = std::move(a);
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    auto [a, b] = aligned(*this, o);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    *this = std::move(a);
    return *this;
  }

  Cyclotomic& operator*=(const Cyclotomic& o) {
    auto [a, b] = aligned(*this, o);
    unsigned n = a.order_;
    const auto& f = detail::cyclo_field(n);
    size_t deg = f.deg();
    // coefficient convolution, then reduce with zeta^n = 1 and the power table
    std::vector<Rational> conv(2 * deg - 1 >= 1 ? 2 * deg - 1 : 1, Rational(0));
    for (size_t i = 0; i < deg; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < deg; ++j) {
        if (b.c_[j].is_zero()) continue;
        conv[i + j] += a.c_[i] * b.c_[j];
      }
    }
    Cyclotomic r = zero(n);
    for (size_t k = 0; k < conv.size(); ++k) {
      if (conv[k].is_zero()) continue;
      if (k < deg && f.pow[k][k] == Rational(1)) {
        // power basis element maps to itself below the reduction degree
        r.c_[k] += conv[k];
      } else {
        r.add_scaled(f.pow[k % n], conv[k]);
      }
    }
    *this = std::move(r);
    return *this;
  }

  Cyclotomic& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  Cyclotomic& operator/=(const Rational& s) {
    if (s.is_zero()) throw Error("Cyclotomic: division by zero");
    for (auto& x : c_) x /= s;
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
  friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& s) { return a /= s; }

  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.order_ == y.order_) return x.c_ == y.c_;
    auto [a, b] = aligned(x, y);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclotomic& x, const Cyclotomic& y) { return !(x == y); }

  std::string to_string() const {
    if (is_rational()) return c_[0].to_string();
    std::string out;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j].is_zero()) continue;
      Rational coef = c_[j];
      bool neg = coef < Rational(0);
      Rational mag = neg ? -coef : coef;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string sym;
      if (j == 0) {
        sym = mag.to_string();
      } else {
        sym = "z" + std::to_string(order_);
        if (j > 1) sym += "^" + std::to_string(j);
        if (mag != Rational(1)) sym = mag.to_string() + "*" + sym;
      }
      out += sym;
    }
    return out.empty() ? "0" : out;
  }

 private:
  Cyclotomic(unsigned order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}

  void add_scaled(const std::vector<Rational>& v, const Rational& s) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += v[i] * s;
  }

  static std::pair<Cyclotomic, Cyclotomic> aligned(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.order_ == y.order_) return {x, y};
    if (y.order_ % x.order_ == 0) return {x.promoted(y.order_), y};
    return {x, y.promoted(x.order_)};
  }

  unsigned order_;
  std::vector<Rational> c_;
};

using Scalar = Cyclotomic;

/// zeta_N^k as a canonical field element (k reduced mod N).
inline Cyclotomic cyclo_root(unsigned n, long k) { return Cyclotomic::root(n, k); }

inline Cyclotomic conj(const Cyclotomic& x) { return x.conj(); }

inline Rational as_rational(const Cyclotomic& x) { return x.as_rational(); }

}  // namespace wrep
