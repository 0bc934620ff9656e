#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "wrep/operators.hpp"

using namespace wrep;
using wreptest::mode_delta_apply;
using wreptest::mode_virasoro_apply;
using wreptest::rand_symfunc;

namespace {
SymFunc p(int r, int alpha = 0, int nalpha = 1) {
  return SymFunc::power_sum(Basis::Characters, nalpha, r, alpha);
}
SymFunc one(int nalpha = 1) { return SymFunc::one(Basis::Characters, nalpha); }
}  // namespace

TEST_CASE("heisenberg operators") {
  REQUIRE(apply(heisenberg(-1, 0), one()) == p(1));
  REQUIRE(apply(heisenberg(1, 0), p(1) * p(1)) == p(1) * Scalar(2));
  REQUIRE(apply(heisenberg(0, 0), p(1)).is_zero());
  REQUIRE(apply(heisenberg(-2, 0), p(1)) == p(2) * p(1));
  REQUIRE(apply(heisenberg(3, 0), p(3)) == one() * Scalar(3));
}

TEST_CASE("heisenberg commutation relations on a window") {
  GradedWindow W(Basis::Characters, 2, 6);
  for (int n = -3; n <= 3; ++n) {
    if (n == 0) continue;
    for (int m = -3; m <= 3; ++m) {
      if (m == 0) continue;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          ScalarMatrix C =
              commutator_matrix(heisenberg(n, a, 2), heisenberg(m, b, 2), W);
          ScalarMatrix want(W.size(), W.size());
          if (n == -m && a == b) want = ScalarMatrix::identity(W.size()) * Scalar(Rational(n));
          REQUIRE(C == want);
        }
    }
  }
}

TEST_CASE("class-basis heisenberg combinations") {
  auto triv = builtin_trivial();
  REQUIRE(heisenberg_class(*triv, -2, 0) == heisenberg(-2, 0, 1));

  auto z2 = builtin_cyclic(2);
  FockOperator combo = heisenberg(-1, 0, 2) + heisenberg(-1, 1, 2) * Scalar(-1);
  REQUIRE(heisenberg_class(*z2, -1, 1) == combo);

  // [a_n(c), a_{-n}(c')] = n zeta_c delta_{c', c^{-1}} on a window
  for (const std::string name : {"cyclic2", "cyclic3"}) {
    auto g = build_group(name);
    const int k = g->num_classes();
    GradedWindow W(Basis::Characters, k, 5);
    for (int n = 1; n <= 2; ++n)
      for (int c = 0; c < k; ++c)
        for (int cp = 0; cp < k; ++cp) {
          ScalarMatrix C = commutator_matrix(heisenberg_class(*g, n, c),
                                             heisenberg_class(*g, -n, cp), W);
          ScalarMatrix want(W.size(), W.size());
          if (cp == g->class_inv(c)) {
            Integer weight = Integer(n) * g->zeta(c);
            want = ScalarMatrix::identity(W.size()) * Scalar(Rational(weight));
          }
          REQUIRE(C == want);
        }
  }
}

TEST_CASE("virasoro normal forms") {
  FockOperator L0 = virasoro(0, 0);
  for (const auto& mu : enumerate_partitions(4)) {
    SymFunc pm = SymFunc::from_monomial(Basis::Characters, 1, power_sum_monomial(mu, 0), Scalar(1));
    REQUIRE(apply(L0, pm) == pm * Scalar(4));
  }
  REQUIRE(apply(virasoro(-1, 0), p(1)) == p(2));
  // [L_2, L_{-2}] 1 = 1/2, the central charge 1 seen on the vacuum
  FockOperator L2 = virasoro(2, 0), Lm2 = virasoro(-2, 0);
  SymFunc comm = apply(L2, apply(Lm2, one())) - apply(Lm2, apply(L2, one()));
  REQUIRE(comm == one() * Scalar(Rational(1, 2)));
}

TEST_CASE("virasoro normal form agrees with the mode-by-mode expansion") {
  GradedWindow W(Basis::Characters, 1, 6);
  for (int n = -3; n <= 3; ++n) {
    FockOperator Ln = virasoro(n, 0);
    for (int j = 0; j < W.size(); ++j) {
      SymFunc v = SymFunc::from_monomial(Basis::Characters, 1, W.at(j), Scalar(1));
      REQUIRE(apply(Ln, v) == mode_virasoro_apply(n, 0, 1, v));
    }
  }
}

TEST_CASE("delta swaps p_1^2 and p_2 and kills low degrees") {
  FockOperator D = delta_gamma(0);
  REQUIRE(apply(D, p(1) * p(1)) == p(2));
  REQUIRE(apply(D, p(2)) == p(1) * p(1));
  REQUIRE(apply(D, one()).is_zero());
  REQUIRE(apply(D, p(1)).is_zero());
  // eigenvectors in degree 2
  SymFunc s2 = schur(Partition({2}), 0, Basis::Characters, 1);
  SymFunc s11 = schur(Partition({1, 1}), 0, Basis::Characters, 1);
  REQUIRE(apply(D, s2) == s2);
  REQUIRE(apply(D, s11) == -s11);
}

TEST_CASE("delta agrees with its cubic mode expansion") {
  GradedWindow W(Basis::Characters, 1, 6);
  FockOperator D = delta_gamma(0);
  for (int j = 0; j < W.size(); ++j) {
    SymFunc v = SymFunc::from_monomial(Basis::Characters, 1, W.at(j), Scalar(1));
    REQUIRE(apply(D, v) == mode_delta_apply(0, 1, v));
  }
}

TEST_CASE("delta eigenvalues follow the inner-product formula") {
  auto triv = builtin_trivial();
  FockOperator D = delta_gamma(0);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : enumerate_partitions(n)) {
      SymFunc s = schur(lam, 0, Basis::Characters, 1);
      Scalar eig(0);
      if (n >= 2) {
        Monomial m = Monomial::power_sum(2, 0).with_exponent(1, 0, n - 2);
        SymFunc probe = SymFunc::from_monomial(Basis::Characters, 1, m, Scalar(1));
        TypeFunction L(1);
        L.set(0, lam);
        eig = form(probe, s, *triv) *
              Rational(Integer(n) * Integer(n - 1), 2 * degree_formula(triv, L));
      }
      REQUIRE(apply(D, s) == s * eig);
    }
  }
}

TEST_CASE("delta_c combinations") {
  auto triv = builtin_trivial();
  REQUIRE(delta_c(*triv, 0) == delta_gamma(0, 1));

  // identity class: sum of (|G|/d) Delta^beta
  for (const std::string name : {"cyclic2", "cyclic3", "sym3"}) {
    auto g = build_group(name);
    const int k = g->num_classes();
    FockOperator want(Basis::Characters, k, 0, kDefaultOperatorDegree);
    for (int beta = 0; beta < k; ++beta)
      want += delta_gamma(beta, k) *
              Scalar(Rational(g->group_order(), g->characters()->degrees[beta]));
    REQUIRE(delta_c(*g, g->identity_class()) == want);
  }

  auto z2 = builtin_cyclic(2);
  FockOperator want = (delta_gamma(0, 2) + delta_gamma(1, 2) * Scalar(-1)) * Scalar(2);
  REQUIRE(delta_c(*z2, 1) == want);
}

TEST_CASE("adjointness of the ladder operators under the form") {
  auto z2 = builtin_cyclic(2);
  for (int t = 0; t < 10; ++t) {
    SymFunc f = rand_symfunc(Basis::Characters, 2, 5);
    SymFunc g = rand_symfunc(Basis::Characters, 2, 5);
    for (int n = 1; n <= 3; ++n)
      for (int a = 0; a < 2; ++a)
        REQUIRE(form(apply(heisenberg(n, a, 2), f), g, *z2) ==
                form(f, apply(heisenberg(-n, a, 2), g), *z2));
  }
}

TEST_CASE("lemma commutator [Delta, a_n] = -n L_n on windows") {
  GradedWindow W(Basis::Characters, 1, 6);
  FockOperator D = delta_gamma(0);
  for (int n = -3; n <= 3; ++n) {
    if (n == 0) continue;
    ScalarMatrix C = commutator_matrix(D, heisenberg(n, 0), W);
    ScalarMatrix L = operator_matrix(virasoro(n, 0), W);
    REQUIRE((C + L * Scalar(Rational(n))).is_zero());
  }
}

TEST_CASE("window machinery") {
  GradedWindow W(Basis::Characters, 1, 4);
  REQUIRE(W.size() == 12);  // 1 + p(1) + ... + p(4)
  ScalarMatrix C = commutator_matrix(heisenberg(1, 0), heisenberg(-1, 0), W);
  REQUIRE(C == ScalarMatrix::identity(W.size()));
  REQUIRE(operator_matrix(FockOperator(Basis::Characters, 1, 0), W).is_zero());
  // Virasoro bracket as a matrix identity: [L_1, L_{-1}] = 2 L_0
  GradedWindow W6(Basis::Characters, 1, 6);
  ScalarMatrix V = commutator_matrix(virasoro(1, 0), virasoro(-1, 0), W6);
  REQUIRE(V == operator_matrix(virasoro(0, 0), W6) * Scalar(2));
}

TEST_CASE("operators refuse inputs beyond their materialized degree") {
  FockOperator L = virasoro(1, 0, 1, 4);
  Monomial m;
  m = m.with_exponent(1, 0, 6);
  SymFunc f = SymFunc::from_monomial(Basis::Characters, 1, m, Scalar(1));
  REQUIRE_THROWS_AS(apply(L, f), WindowTooSmall);
  REQUIRE_THROWS_AS(apply(heisenberg(1, 0, 1), SymFunc::power_sum(Basis::Classes, 1, 1, 0)),
                    BasisMismatch);
}

TEST_CASE("degree shifts are tracked") {
  REQUIRE(heisenberg(-2, 0).shift() == 2);
  REQUIRE(heisenberg(2, 0).shift() == -2);
  REQUIRE(virasoro(3, 0).shift() == -3);
  REQUIRE(delta_gamma(0).shift() == 0);
  REQUIRE_THROWS_AS(heisenberg(1, 0) + heisenberg(-1, 0), Error);
}
