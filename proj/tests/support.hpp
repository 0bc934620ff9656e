#pragma once

// Test-only helpers: seeded random generators and independent oracles
// (pentagonal-recurrence partition counts, hook lengths, normally ordered
// mode expansions built from raw ladder operators). Nothing here touches the
// closed-form normal forms it is used to check.

#include <random>
#include <vector>

#include "wrep/wrep.hpp"

namespace wreptest {

using namespace wrep;

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed1234);
  return gen;
}

inline int rand_int(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng());
}

inline Rational rand_rational() {
  return Rational(rand_int(-6, 6), rand_int(1, 4));
}

inline Scalar rand_scalar(unsigned order) {
  Scalar s = Scalar::zero(order);
  for (unsigned k = 0; k < order; ++k)
    if (rand_int(0, 2) == 0) s += cyclo_root(order, k) * rand_rational();
  return s;
}

inline ClassFunction rand_class_function(const std::shared_ptr<const ClassDomain>& dom) {
  ClassFunction f(dom);
  for (int c = 0; c < dom->num_classes(); ++c)
    f.set(c, Scalar(rand_rational()));
  return f;
}

inline SymFunc rand_symfunc(Basis basis, int nalpha, int max_degree, int terms = 4) {
  SymFunc f = SymFunc::zero(basis, nalpha);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int budget = rand_int(0, max_degree);
    while (budget > 0) {
      int r = rand_int(1, budget);
      int a = rand_int(0, nalpha - 1);
      m = m.with_exponent(r, a, m.exponent_of(r, a) + 1);
      budget -= r;
    }
    f.add_term(m, Scalar(rand_rational()));
  }
  return f;
}

/// p(n) by the pentagonal-number recurrence; independent of the enumerator.
inline long partition_count(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    long acc = 0;
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
      if (g1 > i && g2 > i) break;
      long sign = (k % 2) ? 1 : -1;
      if (g1 <= i) acc += sign * p[i - g1];
      if (g2 <= i) acc += sign * p[i - g2];
    }
    p[i] = acc;
  }
  return p[n];
}

/// f^lambda by the hook length formula.
inline Integer hook_length_degree(const Partition& lam) {
  const auto& parts = lam.parts();
  Integer hooks = 1;
  for (int i = 0; i < lam.length(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      int arm = parts[i] - j - 1;
      int leg = 0;
      for (int k = i + 1; k < lam.length(); ++k)
        if (parts[k] > j) ++leg;
      hooks *= (arm + leg + 1);
    }
  }
  return factorial(lam.weight()) / hooks;
}

/// Applies the normally ordered pair :a_{i1} a_{i2}: built from raw ladder
/// operators (creation applied last, i.e. leftmost).
inline SymFunc normal_pair_apply(int i1, int i2, int alpha, int nalpha, const SymFunc& f) {
  if (i1 == 0 || i2 == 0) return SymFunc::zero(f.basis(), f.nalpha());
  int first = i1, second = i2;  // apply `first`, then `second`
  if (i1 < 0 && i2 >= 0) {
    first = i2;
    second = i1;
  }
  SymFunc mid = apply(heisenberg(first, alpha, nalpha), f);
  return apply(heisenberg(second, alpha, nalpha), mid);
}

/// L_n as (1/2) sum_k :a_{n-k} a_k:, evaluated directly mode by mode.
inline SymFunc mode_virasoro_apply(int n, int alpha, int nalpha, const SymFunc& f) {
  SymFunc acc = SymFunc::zero(f.basis(), f.nalpha());
  const int d = f.degree();
  for (int k = n - d; k <= d; ++k) {
    if (k == 0 || n - k == 0) continue;
    acc += normal_pair_apply(n - k, k, alpha, nalpha, f);
  }
  return acc * Scalar(Rational(1, 2));
}

/// Delta as (1/2) sum_{n,m>0} (a_{-n-m} a_n a_m + a_{-n} a_{-m} a_{n+m}),
/// evaluated directly mode by mode.
inline SymFunc mode_delta_apply(int alpha, int nalpha, const SymFunc& f) {
  SymFunc acc = SymFunc::zero(f.basis(), f.nalpha());
  const int d = f.degree();
  for (int n = 1; n <= d; ++n) {
    for (int m = 1; m <= d; ++m) {
      // a_{-n-m} a_n a_m
      SymFunc t1 = apply(heisenberg(m, alpha, nalpha), f);
      t1 = apply(heisenberg(n, alpha, nalpha), t1);
      t1 = apply(heisenberg(-n - m, alpha, nalpha), t1);
      acc += t1;
      // a_{-n} a_{-m} a_{n+m}
      if (n + m <= d) {
        SymFunc t2 = apply(heisenberg(n + m, alpha, nalpha), f);
        t2 = apply(heisenberg(-m, alpha, nalpha), t2);
        t2 = apply(heisenberg(-n, alpha, nalpha), t2);
        acc += t2;
      }
    }
  }
  return acc * Scalar(Rational(1, 2));
}

}  // namespace wreptest
