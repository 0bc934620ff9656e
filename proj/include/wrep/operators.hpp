#pragma once

#include <limits>
#include <string>
#include <vector>

#include "wrep/errors.hpp"
#include "wrep/groups.hpp"
#include "wrep/symfun.hpp"

namespace wrep {

/// Operators with infinitely many normal-form terms (Virasoro, Delta) are
/// materialized with every term of derivative degree <= this cutoff, which
/// makes them exact on inputs of degree <= the cutoff.
inline constexpr int kDefaultOperatorDegree = 24;
inline constexpr int kUnboundedDegree = std::numeric_limits<int>::max() / 2;

/// One normal-form term: f -> coeff * mul * (prod of partials) f.
struct OpTerm {
  Monomial mul;   // multiply by this monomial after differentiating
  Monomial ders;  // multiset of d/dp_r(alpha)
  Scalar coeff;
};

/// Linear operator on S_Gamma in differential normal form. Every term shifts
/// the grading by the same declared amount.
class FockOperator {
 public:
  FockOperator(Basis basis, int nalpha, int shift, int complete_to = kUnboundedDegree)
      : basis_(basis), nalpha_(nalpha), shift_(shift), complete_to_(complete_to) {}

  Basis basis() const { return basis_; }
  int nalpha() const { return nalpha_; }
  int shift() const { return shift_; }
  int complete_to() const { return complete_to_; }
  const std::vector<OpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial mul, Monomial ders, Scalar coeff) {
    if (coeff.is_zero()) return;
    if (mul.degree() - ders.degree() != shift_)
      throw Error("FockOperator: term shift does not match declared degree shift");
    if (mul.max_alphabet() >= nalpha_ || ders.max_alphabet() >= nalpha_)
      throw BasisMismatch("FockOperator: alphabet index out of range");
    for (auto& t : terms_) {
      if (t.mul == mul && t.ders == ders) {
        t.coeff += coeff;
        if (t.coeff.is_zero()) {
          t = terms_.back();
          terms_.pop_back();
          sort_terms();
        }
        return;
      }
    }
    terms_.push_back(OpTerm{std::move(mul), std::move(ders), std::move(coeff)});
    sort_terms();
  }

  FockOperator& operator+=(const FockOperator& o) {
    if (basis_ != o.basis_ || nalpha_ != o.nalpha_)
      throw BasisMismatch("FockOperator: mixed bases in a sum");
    if (shift_ != o.shift_) throw Error("FockOperator: mixed degree shifts in a sum");
    complete_to_ = std::min(complete_to_, o.complete_to_);
    for (const auto& t : o.terms_) add_term(t.mul, t.ders, t.coeff);
    return *this;
  }
  FockOperator& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coeff *= s;
    return *this;
  }
  friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
  friend FockOperator operator*(FockOperator a, const Scalar& s) { return a *= s; }
  friend FockOperator operator*(const Scalar& s, FockOperator a) { return a *= s; }

  friend bool operator==(const FockOperator& a, const FockOperator& b) {
    if (a.basis_ != b.basis_ || a.nalpha_ != b.nalpha_ || a.shift_ != b.shift_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mul == b.terms_[i].mul) || !(a.terms_[i].ders == b.terms_[i].ders) ||
          a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    }
    return true;
  }

 private:
  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [](const OpTerm& x, const OpTerm& y) {
      if (x.ders != y.ders) return x.ders < y.ders;
      return x.mul < y.mul;
    });
  }

  Basis basis_;
  int nalpha_;
  int shift_;
  int complete_to_;
  std::vector<OpTerm> terms_;
};

/// Exact application. Throws WindowTooSmall if the operator's term list is
/// not complete up to the input degree.
inline SymFunc apply(const FockOperator& op, const SymFunc& f) {
  if (op.basis() != f.basis() || op.nalpha() != f.nalpha())
    throw BasisMismatch("apply: operator and operand use different alphabet families");
  if (f.degree() > op.complete_to())
    throw WindowTooSmall("apply: operator materialized up to input degree " +
                         std::to_string(op.complete_to()) + ", got degree " +
                         std::to_string(f.degree()));
  SymFunc out = SymFunc::zero(f.basis(), f.nalpha());
  for (const auto& t : op.terms()) {
    for (const auto& [m, c] : f.terms()) {
      Scalar coeff = c * t.coeff;
      Monomial cur = m;
      bool dead = false;
      for (const auto& d : t.ders.entries()) {
        int e = cur.exponent_of(d.r, d.alpha);
        if (e < d.mult) {
          dead = true;
          break;
        }
        long long fall = 1;
        for (int j = 0; j < d.mult; ++j) fall *= (e - j);
        coeff *= Rational(fall);
        cur = cur.with_exponent(d.r, d.alpha, e - d.mult);
      }
      if (dead) continue;
      out.add_term(cur.times(t.mul), std::move(coeff));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The operators of the construction.
// ---------------------------------------------------------------------------

/// a_n(alpha): multiplication by p_{-n} for n < 0, n d/dp_n for n > 0, and 0
/// for n = 0.
inline FockOperator heisenberg(int n, int alpha, int nalpha = 1,
                               Basis basis = Basis::Characters) {
  FockOperator op(basis, nalpha, -n);
  if (n < 0) {
    op.add_term(Monomial::power_sum(-n, alpha), Monomial::one(), Scalar(1));
  } else if (n > 0) {
    op.add_term(Monomial::one(), Monomial::power_sum(n, alpha), Scalar(Rational(n)));
  }
  return op;
}

/// a_n(c) = sum_gamma gamma(c^{-1}) a_n(gamma).
inline FockOperator heisenberg_class(const GroupTable& G, int n, int c) {
  const CharacterTable* T = G.characters();
  if (!T) throw Error(G.label() + ": no character table attached");
  const int k = G.num_classes();
  FockOperator op(Basis::Characters, k, -n);
  for (int gamma = 0; gamma < k; ++gamma)
    op += heisenberg(n, gamma, k) * T->rows[gamma][G.class_inv(c)];
  return op;
}

/// L_n on one alphabet, in normal form (derived once from (1/2):a(z)a(z): with
/// a_0 = 0):
///   n > 0:  sum_{m>0} (n+m) p_m d_{n+m}  +  (1/2) sum_{j=1}^{n-1} j(n-j) d_j d_{n-j}
///   n = 0:  sum_{m>0} m p_m d_m
///   n < 0:  sum_{m>0} m p_{|n|+m} d_m    +  (1/2) sum_{j=1}^{|n|-1} p_j p_{|n|-j}
inline FockOperator virasoro(int n, int alpha, int nalpha = 1,
                             int max_degree = kDefaultOperatorDegree) {
  FockOperator op(Basis::Characters, nalpha, -n, max_degree);
  if (n > 0) {
    for (int m = 1; n + m <= max_degree; ++m)
      op.add_term(Monomial::power_sum(m, alpha), Monomial::power_sum(n + m, alpha),
                  Scalar(Rational(n + m)));
    for (int j = 1; j <= n - 1; ++j) {
      Monomial ders = Monomial::power_sum(j, alpha).times(Monomial::power_sum(n - j, alpha));
      op.add_term(Monomial::one(), ders, Scalar(Rational(j * (n - j), 2)));
    }
  } else if (n == 0) {
    for (int m = 1; m <= max_degree; ++m)
      op.add_term(Monomial::power_sum(m, alpha), Monomial::power_sum(m, alpha),
                  Scalar(Rational(m)));
  } else {
    const int k = -n;
    for (int m = 1; m <= max_degree; ++m)
      op.add_term(Monomial::power_sum(k + m, alpha), Monomial::power_sum(m, alpha),
                  Scalar(Rational(m)));
    for (int j = 1; j <= k - 1; ++j) {
      Monomial mul = Monomial::power_sum(j, alpha).times(Monomial::power_sum(k - j, alpha));
      op.add_term(mul, Monomial::one(), Scalar(Rational(1, 2)));
    }
  }
  return op;
}

/// The degree-0 cubic operator on one alphabet:
/// (1/2) sum_{i,j>=1} ( i j p_{i+j} d_i d_j + (i+j) p_i p_j d_{i+j} ).
inline FockOperator delta_gamma(int alpha, int nalpha = 1,
                                int max_degree = kDefaultOperatorDegree) {
  FockOperator op(Basis::Characters, nalpha, 0, max_degree);
  for (int i = 1; i <= max_degree; ++i)
    for (int j = i; i + j <= max_degree; ++j) {
      // i j p_{i+j} d_i d_j, both (i,j) and (j,i) collected
      Monomial ders = Monomial::power_sum(i, alpha).times(Monomial::power_sum(j, alpha));
      Rational w = (i == j) ? Rational(i * j, 2) : Rational(i * j);
      op.add_term(Monomial::power_sum(i + j, alpha), ders, Scalar(w));
      // (i+j) p_i p_j d_{i+j}
      Monomial mul = Monomial::power_sum(i, alpha).times(Monomial::power_sum(j, alpha));
      Rational v = (i == j) ? Rational(i + j, 2) : Rational(i + j);
      op.add_term(mul, Monomial::power_sum(i + j, alpha), Scalar(v));
    }
  return op;
}

/// Delta_c = sum_beta |Gamma|^2 beta(c^{-1}) / (d_beta^2 zeta_c) Delta^beta.
inline FockOperator delta_c(const GroupTable& G, int c,
                            int max_degree = kDefaultOperatorDegree) {
  const CharacterTable* T = G.characters();
  if (!T) throw Error(G.label() + ": no character table attached");
  const int k = G.num_classes();
  FockOperator op(Basis::Characters, k, 0, max_degree);
  const Integer g2 = G.group_order() * G.group_order();
  for (int beta = 0; beta < k; ++beta) {
    Scalar coeff = T->rows[beta][G.class_inv(c)] *
                   Rational(g2, T->degrees[beta] * T->degrees[beta] * G.zeta(c));
    op += delta_gamma(beta, k, max_degree) * coeff;
  }
  return op;
}

// ---------------------------------------------------------------------------
// Graded windows and matrices.
// ---------------------------------------------------------------------------

/// All monomials of degree <= D over a fixed alphabet family, in the canonical
/// monomial order (degree first).
class GradedWindow {
 public:
  GradedWindow(Basis basis, int nalpha, int max_degree)
      : basis_(basis), nalpha_(nalpha), max_degree_(max_degree) {
    Monomial m;
    gen(m, 1, 0, max_degree_);
    std::sort(basis_list_.begin(), basis_list_.end());
    for (size_t i = 0; i < basis_list_.size(); ++i) index_[basis_list_[i]] = static_cast<int>(i);
  }

  Basis basis() const { return basis_; }
  int nalpha() const { return nalpha_; }
  int max_degree() const { return max_degree_; }
  int size() const { return static_cast<int>(basis_list_.size()); }
  const Monomial& at(int i) const { return basis_list_.at(i); }
  int index_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }

 private:
  void gen(Monomial& m, int min_r, int min_alpha, int budget) {
    basis_list_.push_back(m);
    for (int r = min_r; r <= budget; ++r) {
      for (int a = (r == min_r ? min_alpha : 0); a < nalpha_; ++a) {
        Monomial next = m.with_exponent(r, a, m.exponent_of(r, a) + 1);
        gen(next, r, a, budget - r);
      }
    }
  }

  Basis basis_;
  int nalpha_;
  int max_degree_;
  std::vector<Monomial> basis_list_;
  std::map<Monomial, int> index_;
};

struct ScalarMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> a;

  ScalarMatrix() = default;
  ScalarMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Scalar(0)) {}

  Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static ScalarMatrix identity(int n) {
    ScalarMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  ScalarMatrix& operator+=(const ScalarMatrix& o) {
    if (rows != o.rows || cols != o.cols) throw SizeMismatch("matrix shapes differ");
    for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
  }
  ScalarMatrix& operator-=(const ScalarMatrix& o) {
    if (rows != o.rows || cols != o.cols) throw SizeMismatch("matrix shapes differ");
    for (size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
    return *this;
  }
  ScalarMatrix& operator*=(const Scalar& s) {
    for (auto& x : a) x *= s;
    return *this;
  }
  friend ScalarMatrix operator+(ScalarMatrix x, const ScalarMatrix& y) { return x += y; }
  friend ScalarMatrix operator-(ScalarMatrix x, const ScalarMatrix& y) { return x -= y; }
  friend ScalarMatrix operator*(ScalarMatrix x, const Scalar& s) { return x *= s; }
  friend bool operator==(const ScalarMatrix& x, const ScalarMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  int nonzero_count() const {
    int n = 0;
    for (const auto& x : a)
      if (!x.is_zero()) ++n;
    return n;
  }
};

namespace detail {
inline void fill_column(ScalarMatrix& M, const GradedWindow& W, int col, const SymFunc& image) {
  for (const auto& [m, s] : image.terms()) {
    int row = W.index_of(m);
    if (row >= 0) M.at(row, col) = s;
  }
}
}  // namespace detail

/// Matrix of A restricted to the window (image components of degree > D are
/// dropped; entries mapping W -> W are exact).
inline ScalarMatrix operator_matrix(const FockOperator& A, const GradedWindow& W) {
  if (A.basis() != W.basis() || A.nalpha() != W.nalpha())
    throw BasisMismatch("operator_matrix: operator and window disagree");
  ScalarMatrix M(W.size(), W.size());
  for (int j = 0; j < W.size(); ++j) {
    SymFunc v = SymFunc::from_monomial(W.basis(), W.nalpha(), W.at(j), Scalar(1));
    detail::fill_column(M, W, j, apply(A, v));
  }
  return M;
}

/// Matrix of AB - BA restricted to the window. The intermediate images are
/// exact polynomials, so no truncation error enters any entry; the operators
/// must be materialized far enough for the enlarged degrees (WindowTooSmall
/// otherwise).
inline ScalarMatrix commutator_matrix(const FockOperator& A, const FockOperator& B,
                                      const GradedWindow& W) {
  if (A.basis() != W.basis() || A.nalpha() != W.nalpha() || B.basis() != W.basis() ||
      B.nalpha() != W.nalpha())
    throw BasisMismatch("commutator_matrix: operands and window disagree");
  ScalarMatrix M(W.size(), W.size());
  for (int j = 0; j < W.size(); ++j) {
    SymFunc v = SymFunc::from_monomial(W.basis(), W.nalpha(), W.at(j), Scalar(1));
    SymFunc image = apply(A, apply(B, v)) - apply(B, apply(A, v));
    detail::fill_column(M, W, j, image);
  }
  return M;
}

}  // namespace wrep
