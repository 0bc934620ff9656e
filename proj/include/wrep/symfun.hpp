#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wrep/combinatorics.hpp"
#include "wrep/errors.hpp"
#include "wrep/groups.hpp"
#include "wrep/scalars.hpp"

namespace wrep {

inline constexpr int kMaxSchurWeight = 30;

enum class Basis { Classes, Characters };

inline std::string basis_prefix(Basis b) { return b == Basis::Classes ? "c" : "g"; }

/// Monomial in power sums: sparse multiset of (degree r, alphabet) pairs.
class Monomial {
 public:
  struct Entry {
    int r;
    int alpha;
    int mult;
    friend bool operator==(const Entry& a, const Entry& b) {
      return a.r == b.r && a.alpha == b.alpha && a.mult == b.mult;
    }
    friend bool operator<(const Entry& a, const Entry& b) {
      if (a.r != b.r) return a.r < b.r;
      if (a.alpha != b.alpha) return a.alpha < b.alpha;
      return a.mult < b.mult;
    }
  };

  Monomial() = default;

  static Monomial one() { return Monomial(); }
  static Monomial power_sum(int r, int alpha) {
    Monomial m;
    m.e_.push_back({r, alpha, 1});
    return m;
  }

  const std::vector<Entry>& entries() const { return e_; }
  bool is_one() const { return e_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& e : e_) d += e.r * e.mult;
    return d;
  }

  int exponent_of(int r, int alpha) const {
    for (const auto& e : e_)
      if (e.r == r && e.alpha == alpha) return e.mult;
    return 0;
  }

  Monomial with_exponent(int r, int alpha, int mult) const {
    Monomial m;
    bool placed = false;
    for (const auto& e : e_) {
      if (e.r == r && e.alpha == alpha) {
        if (mult > 0) m.e_.push_back({r, alpha, mult});
        placed = true;
      } else {
        m.e_.push_back(e);
      }
    }
    if (!placed && mult > 0) {
      m.e_.push_back({r, alpha, mult});
      std::sort(m.e_.begin(), m.e_.end());
    }
    return m;
  }

  Monomial times(const Monomial& o) const {
    Monomial m = *this;
    for (const auto& e : o.e_) {
      int cur = m.exponent_of(e.r, e.alpha);
      m = m.with_exponent(e.r, e.alpha, cur + e.mult);
    }
    return m;
  }

  /// Applies alpha -> map[alpha] to every entry (used for the inverse-class
  /// pairing of the class-basis form).
  Monomial alphabet_mapped(const std::vector<int>& map) const {
    Monomial m;
    for (const auto& e : e_) m.e_.push_back({e.r, map.at(e.alpha), e.mult});
    std::sort(m.e_.begin(), m.e_.end());
    return m;
  }

  int max_alphabet() const {
    int a = -1;
    for (const auto& e : e_) a = std::max(a, e.alpha);
    return a;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e_ < b.e_;
  }

  std::string to_string(Basis basis) const {
    if (e_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < e_.size(); ++i) {
      if (i) s += "*";
      s += "p" + std::to_string(e_[i].r) + "(" + basis_prefix(basis) +
           std::to_string(e_[i].alpha) + ")";
      if (e_[i].mult > 1) s += "^" + std::to_string(e_[i].mult);
    }
    return s;
  }

 private:
  std::vector<Entry> e_;  // sorted by (r, alpha); mult >= 1
};

/// Sparse exact polynomial in power sums over a tagged family of alphabets.
class SymFunc {
 public:
  SymFunc(Basis basis, int nalpha) : basis_(basis), nalpha_(nalpha) {}

  static SymFunc zero(Basis basis, int nalpha) { return SymFunc(basis, nalpha); }
  static SymFunc constant(Basis basis, int nalpha, Scalar s) {
    SymFunc f(basis, nalpha);
    f.add_term(Monomial::one(), std::move(s));
    return f;
  }
  static SymFunc one(Basis basis, int nalpha) { return constant(basis, nalpha, Scalar(1)); }
  static SymFunc power_sum(Basis basis, int nalpha, int r, int alpha) {
    SymFunc f(basis, nalpha);
    f.add_term(Monomial::power_sum(r, alpha), Scalar(1));
    return f;
  }
  static SymFunc from_monomial(Basis basis, int nalpha, Monomial m, Scalar s) {
    SymFunc f(basis, nalpha);
    f.add_term(std::move(m), std::move(s));
    return f;
  }

  Basis basis() const { return basis_; }
  int nalpha() const { return nalpha_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  void add_term(Monomial m, Scalar s) {
    if (s.is_zero()) return;
    if (m.max_alphabet() >= nalpha_)
      throw BasisMismatch("monomial uses alphabet index beyond the tagged family");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(s));
    } else {
      it->second += s;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [m, s] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// True iff every term has the same degree (zero counts as homogeneous of
  /// any degree); sets *d to that degree (0 for zero).
  bool homogeneous(int* d = nullptr) const {
    int deg = -1;
    for (const auto& [m, s] : terms_) {
      if (deg < 0)
        deg = m.degree();
      else if (m.degree() != deg)
        return false;
    }
    if (d) *d = deg < 0 ? 0 : deg;
    return true;
  }

  SymFunc operator-() const {
    SymFunc f(basis_, nalpha_);
    for (const auto& [m, s] : terms_) f.terms_.emplace(m, -s);
    return f;
  }
  SymFunc& operator+=(const SymFunc& o) {
    require_compatible(o);
    for (const auto& [m, s] : o.terms_) add_term(m, s);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& o) {
    require_compatible(o);
    for (const auto& [m, s] : o.terms_) add_term(m, -s);
    return *this;
  }
  SymFunc& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    prune();
    return *this;
  }
  SymFunc& operator/=(const Rational& s) {
    for (auto& [m, c] : terms_) c /= s;
    return *this;
  }

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Scalar& s) { return a *= s; }
  friend SymFunc operator*(const Scalar& s, SymFunc a) { return a *= s; }
  friend SymFunc operator/(SymFunc a, const Rational& s) { return a /= s; }

  friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    a.require_compatible(b);
    SymFunc r(a.basis_, a.nalpha_);
    for (const auto& [ma, sa] : a.terms_)
      for (const auto& [mb, sb] : b.terms_) r.add_term(ma.times(mb), sa * sb);
    return r;
  }

  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    if (a.basis_ != b.basis_ || a.nalpha_ != b.nalpha_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = a.terms_.begin();
    auto jt = b.terms_.begin();
    for (; it != a.terms_.end(); ++it, ++jt) {
      if (!(it->first == jt->first) || it->second != jt->second) return false;
    }
    return true;
  }
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  /// Deterministic rendering, e.g. "1/2*p1(g0)^2 + 1/2*p2(g0)".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, s] : terms_) {
      std::string coef = s.to_string();
      bool neg = false;
      if (s.is_rational()) {
        Rational r = s.as_rational();
        if (r < Rational(0)) {
          neg = true;
          coef = (-r).to_string();
        }
      }
      if (first) {
        out += neg ? "-" : "";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono = m.to_string(basis_);
      if (mono == "1") {
        out += coef;
      } else if (coef == "1") {
        out += mono;
      } else {
        bool simple = s.is_rational() || coef.find(' ') == std::string::npos;
        out += (simple ? coef : "(" + coef + ")") + "*" + mono;
      }
    }
    return out;
  }

 private:
  void require_compatible(const SymFunc& o) const {
    if (basis_ != o.basis_ || nalpha_ != o.nalpha_)
      throw BasisMismatch("symmetric functions over different bases or alphabet families");
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.is_zero())
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  Basis basis_;
  int nalpha_;
  std::map<Monomial, Scalar> terms_;
};

/// p_mu on a single alphabet.
inline Monomial power_sum_monomial(const Partition& mu, int alpha) {
  Monomial m;
  for (const auto& [r, mult] : mu.multiplicities()) m = m.with_exponent(r, alpha, mult);
  return m;
}

/// P_rho = prod_c p_{rho(c)}(c).
inline Monomial p_rho_monomial(const TypeFunction& rho) {
  Monomial m;
  for (int c = 0; c < rho.num_classes(); ++c)
    for (const auto& [r, mult] : rho.at(c).multiplicities()) m = m.with_exponent(r, c, mult);
  return m;
}

/// Reads a degree-n class-basis monomial back as a type function.
inline TypeFunction monomial_type(const Monomial& m, int num_classes) {
  std::vector<std::vector<int>> parts(num_classes);
  for (const auto& e : m.entries()) {
    if (e.alpha >= num_classes) throw BasisMismatch("monomial alphabet out of range");
    for (int i = 0; i < e.mult; ++i) parts[e.alpha].push_back(e.r);
  }
  TypeFunction t(num_classes);
  for (int c = 0; c < num_classes; ++c)
    if (!parts[c].empty()) t.set(c, Partition(parts[c]));
  return t;
}

namespace detail {
inline Integer z_factor_char(const Monomial& m) {
  Integer z = 1;
  for (const auto& e : m.entries()) z *= int_pow(Integer(e.r), e.mult) * factorial(e.mult);
  return z;
}
}  // namespace detail

/// The bilinear form on S_Gamma. Character basis: alphabets orthonormal,
/// <p_mu, p_nu> = delta prod z. Class basis: <P_rho, P_sigma> =
/// delta_{sigma, rho*} Z_rho with rho*(c) = rho(c^{-1}), which is what makes
/// the characteristic map an isometry for non-ambivalent groups.
inline Scalar form(const SymFunc& f, const SymFunc& g, const ClassDomain& base) {
  if (f.basis() != g.basis() || f.nalpha() != g.nalpha())
    throw BasisMismatch("form: mismatched bases");
  if (f.nalpha() != base.num_classes())
    throw BasisMismatch("form: alphabet family does not match the group");
  Scalar acc(0);
  if (f.basis() == Basis::Characters) {
    for (const auto& [m, s] : f.terms()) {
      Scalar t = g.coeff(m);
      if (t.is_zero()) continue;
      acc += s * t * Rational(detail::z_factor_char(m));
    }
  } else {
    std::vector<int> inv(base.num_classes());
    for (int c = 0; c < base.num_classes(); ++c) inv[c] = base.class_inv(c);
    for (const auto& [m, s] : f.terms()) {
      Scalar t = g.coeff(m.alphabet_mapped(inv));
      if (t.is_zero()) continue;
      Integer z = detail::z_factor_char(m);
      for (const auto& e : m.entries()) z *= int_pow(base.zeta(e.alpha), e.mult);
      acc += s * t * Rational(z);
    }
  }
  return acc;
}

/// Substitution p_r(c) = sum_gamma gamma(c^{-1}) p_r(gamma).
inline SymFunc to_character_basis(const SymFunc& f, const GroupTable& G) {
  if (f.basis() != Basis::Classes) throw BasisMismatch("to_character_basis: not in class basis");
  const CharacterTable* T = G.characters();
  if (!T) throw Error(G.label() + ": no character table attached");
  const int k = G.num_classes();
  SymFunc out = SymFunc::zero(Basis::Characters, k);
  for (const auto& [m, s] : f.terms()) {
    SymFunc prod = SymFunc::constant(Basis::Characters, k, s);
    for (const auto& e : m.entries()) {
      SymFunc factor = SymFunc::zero(Basis::Characters, k);
      for (int gamma = 0; gamma < k; ++gamma)
        factor.add_term(Monomial::power_sum(e.r, gamma), T->rows[gamma][G.class_inv(e.alpha)]);
      for (int t = 0; t < e.mult; ++t) prod = prod * factor;
    }
    out += prod;
  }
  return out;
}

/// Substitution p_r(gamma) = sum_c zeta_c^{-1} gamma(c) p_r(c).
inline SymFunc to_class_basis(const SymFunc& f, const GroupTable& G) {
  if (f.basis() != Basis::Characters) throw BasisMismatch("to_class_basis: not in character basis");
  const CharacterTable* T = G.characters();
  if (!T) throw Error(G.label() + ": no character table attached");
  const int k = G.num_classes();
  SymFunc out = SymFunc::zero(Basis::Classes, k);
  for (const auto& [m, s] : f.terms()) {
    SymFunc prod = SymFunc::constant(Basis::Classes, k, s);
    for (const auto& e : m.entries()) {
      SymFunc factor = SymFunc::zero(Basis::Classes, k);
      for (int c = 0; c < k; ++c)
        factor.add_term(Monomial::power_sum(e.r, c),
                        T->rows[e.alpha][c] * Rational(Integer(1), G.zeta(c)));
      for (int t = 0; t < e.mult; ++t) prod = prod * factor;
    }
    out += prod;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric group characters (Murnaghan-Nakayama) and Schur functions.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<long> beta_set(const Partition& lambda, int len) {
  std::vector<long> b;
  const auto& parts = lambda.parts();
  for (int i = 0; i < len; ++i) {
    long part = i < lambda.length() ? parts[i] : 0;
    b.push_back(part + (len - 1 - i));
  }
  return b;  // strictly decreasing
}

inline Partition partition_from_beta(std::vector<long> b) {
  std::sort(b.begin(), b.end(), std::greater<long>());
  std::vector<int> parts;
  const int len = static_cast<int>(b.size());
  for (int i = 0; i < len; ++i) {
    long p = b[i] - (len - 1 - i);
    if (p > 0) parts.push_back(static_cast<int>(p));
  }
  return Partition(parts);
}

inline long long mn_character(const Partition& lambda, const std::vector<int>& mu, size_t pos,
                              std::map<std::pair<Partition, size_t>, long long>& memo) {
  if (pos == mu.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, pos);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int r = mu[pos];
  const int len = std::max(lambda.length(), 1);
  std::vector<long> b = beta_set(lambda, len);
  long long total = 0;
  for (size_t i = 0; i < b.size(); ++i) {
    long nb = b[i] - r;
    if (nb < 0) continue;
    bool occupied = false;
    int crossings = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      if (j == i) continue;
      if (b[j] == nb) occupied = true;
      if (b[j] > nb && b[j] < b[i]) ++crossings;
    }
    if (occupied) continue;
    std::vector<long> b2 = b;
    b2[i] = nb;
    long long sign = (crossings % 2) ? -1 : 1;
    total += sign * mn_character(partition_from_beta(std::move(b2)), mu, pos + 1, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// chi^lambda_mu via border-strip recursion.
inline long long sn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw SizeMismatch("sn_character: |lambda| != |mu|");
  std::map<std::pair<Partition, size_t>, long long> memo;
  return detail::mn_character(lambda, mu.parts(), 0, memo);
}

/// s_lambda = sum_mu z_mu^{-1} chi^lambda_mu p_mu on one alphabet.
inline SymFunc schur(const Partition& lambda, int alpha, Basis basis, int nalpha) {
  if (lambda.weight() > kMaxSchurWeight)
    throw BoundExceeded("schur: |lambda| exceeds bound " + std::to_string(kMaxSchurWeight));
  SymFunc f = SymFunc::zero(basis, nalpha);
  for (const auto& mu : enumerate_partitions(lambda.weight())) {
    long long chi = sn_character(lambda, mu);
    if (chi == 0) continue;
    f.add_term(power_sum_monomial(mu, alpha),
               Scalar(Rational(Integer(static_cast<long>(chi)), z_of(mu))));
  }
  return f;
}

/// s_Lambda = prod_gamma s_{Lambda(gamma)}(gamma) over character alphabets.
inline SymFunc schur_multi(const TypeFunction& Lambda, int nalpha) {
  if (Lambda.norm() > kMaxSchurWeight)
    throw BoundExceeded("schur_multi: ||Lambda|| exceeds bound");
  SymFunc f = SymFunc::one(Basis::Characters, nalpha);
  for (int gamma = 0; gamma < Lambda.num_classes(); ++gamma) {
    if (Lambda.at(gamma).empty()) continue;
    f = f * schur(Lambda.at(gamma), gamma, Basis::Characters, nalpha);
  }
  return f;
}

}  // namespace wrep
