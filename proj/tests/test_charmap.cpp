#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "wrep/charmap.hpp"

using namespace wrep;

TEST_CASE("ch of the transposition class on the symmetric group") {
  auto triv = builtin_trivial();
  for (int n : {4, 5}) {
    auto wc = wreath_classes(triv, n);
    ClassFunction K = class_indicator(wc, lambda_c_type(*wc, 0));
    SymFunc img = ch(K);
    Monomial m = Monomial::power_sum(2, 0).with_exponent(1, 0, n - 2);
    SymFunc want = SymFunc::from_monomial(Basis::Classes, 1, m,
                                          Scalar(Rational(Integer(1), 2 * factorial(n - 2))));
    REQUIRE(img == want);
  }
}

TEST_CASE("ch of the identity class") {
  auto z2 = builtin_cyclic(2);
  const int n = 3;
  auto wc = wreath_classes(z2, n);
  ClassFunction f = ClassFunction::indicator(wc, wc->identity_class());
  Monomial m;
  m = m.with_exponent(1, 0, n);
  SymFunc want = SymFunc::from_monomial(
      Basis::Classes, 2, m, Scalar(Rational(Integer(1), factorial(n) * int_pow(Integer(2), n))));
  REQUIRE(ch(f) == want);
}

TEST_CASE("ch of K_{lambda_c} matches the closed form") {
  auto z2 = builtin_cyclic(2);
  const int n = 4;
  auto wc = wreath_classes(z2, n);
  ClassFunction K = class_indicator(wc, lambda_c_type(*wc, 1));
  // (1/Z_{lambda_c}) p_1(c0)^{n-2} p_2(c), Z = 2 (n-2)! |G|^{n-2} zeta_c = 32
  Monomial m = Monomial::power_sum(2, 1).with_exponent(1, 0, n - 2);
  REQUIRE(ch(K) ==
          SymFunc::from_monomial(Basis::Classes, 2, m, Scalar(Rational(1, 32))));
}

TEST_CASE("ch_inverse round trips") {
  auto triv = builtin_trivial();
  auto z2 = builtin_cyclic(2);
  auto s4 = wreath_classes(triv, 4);
  auto b2 = wreath_classes(z2, 2);
  for (int t = 0; t < 30; ++t) {
    ClassFunction f = wreptest::rand_class_function(
        t % 2 ? std::static_pointer_cast<const ClassDomain>(s4)
              : std::static_pointer_cast<const ClassDomain>(b2));
    auto base = t % 2 ? triv : z2;
    int n = t % 2 ? 4 : 2;
    REQUIRE(ch_inverse(ch(f), base, n) == f);
  }
}

TEST_CASE("ch_inverse of the normalized power of p_1") {
  auto z2 = builtin_cyclic(2);
  const int n = 3;
  Monomial m;
  m = m.with_exponent(1, 0, n);
  SymFunc f = SymFunc::from_monomial(
      Basis::Classes, 2, m, Scalar(Rational(Integer(1), factorial(n) * int_pow(Integer(2), n))));
  ClassFunction g = ch_inverse(f, z2, n);
  auto wc = wreath_classes(z2, n);
  REQUIRE(g == ClassFunction::indicator(wc, wc->identity_class()));
}

TEST_CASE("ch_inverse of a Schur function gives the character values") {
  auto triv = builtin_trivial();
  SymFunc s = to_class_basis(schur(Partition({2, 1}), 0, Basis::Characters, 1), *triv);
  ClassFunction chi = ch_inverse(s, triv, 3);
  auto wc = wreath_classes(triv, 3);
  auto value_at = [&](std::vector<int> parts) {
    TypeFunction t(1);
    t.set(0, Partition(parts));
    return chi.at(wc->index_of(t));
  };
  REQUIRE(value_at({1, 1, 1}) == Scalar(2));
  REQUIRE(value_at({2, 1}) == Scalar(0));
  REQUIRE(value_at({3}) == Scalar(-1));
}

TEST_CASE("ch_inverse demands homogeneous class-basis input") {
  auto triv = builtin_trivial();
  SymFunc mixed = SymFunc::power_sum(Basis::Classes, 1, 1, 0) +
                  SymFunc::power_sum(Basis::Classes, 1, 2, 0) *
                      SymFunc::power_sum(Basis::Classes, 1, 1, 0);
  REQUIRE_THROWS_AS(ch_inverse(mixed, triv, 2), NotHomogeneous);
  REQUIRE_THROWS_AS(ch_inverse(SymFunc::power_sum(Basis::Characters, 1, 1, 0), triv, 1),
                    BasisMismatch);
}

TEST_CASE("ch requires a wreath domain") {
  auto s3 = builtin_sym3();
  ClassFunction f = s3->character(2);
  REQUIRE_THROWS_AS(ch(f), NotWreath);
}

TEST_CASE("irreducible characters of S_n and Gamma_1") {
  auto triv = builtin_trivial();
  for (int n : {2, 3, 4}) {
    TypeFunction lam(1);
    lam.set(0, Partition({n}));
    ClassFunction chi = irreducible_character(triv, lam);
    for (int c = 0; c < chi.num_classes(); ++c) REQUIRE(chi.at(c) == Scalar(1));
  }
  // Z/2, n=1, Lambda = (empty, (1)) is the sign character seen in Gamma_1
  auto z2 = builtin_cyclic(2);
  TypeFunction lam(2);
  lam.set(1, Partition({1}));
  ClassFunction chi = irreducible_character(z2, lam);
  REQUIRE(chi.at(0) == Scalar(1));
  REQUIRE(chi.at(1) == Scalar(-1));
}

TEST_CASE("irreducible characters are orthonormal and exhaust the group order") {
  for (const std::string name : {"trivial", "cyclic2"}) {
    auto base = build_group(name);
    for (int n = 1; n <= 3; ++n) {
      auto G = build_wreath(base, n);
      auto dom = std::static_pointer_cast<const ClassDomain>(G);
      auto lambdas = enumerate_types(n, base->num_classes());
      Integer sumsq = 0;
      for (size_t i = 0; i < lambdas.size(); ++i) {
        ClassFunction ci(dom, irreducible_character(base, lambdas[i]).values());
        for (size_t j = 0; j <= i; ++j) {
          ClassFunction cj(dom, irreducible_character(base, lambdas[j]).values());
          REQUIRE(inner_product(ci, cj) == Scalar(i == j ? 1 : 0));
        }
        Integer deg = degree_formula(base, lambdas[i]);
        REQUIRE(ci.at(G->identity_class()) == Scalar(Rational(deg)));
        sumsq += deg * deg;
      }
      REQUIRE(sumsq == G->group_order());
    }
  }
}

TEST_CASE("degree formula") {
  auto triv = builtin_trivial();
  TypeFunction lam21(1);
  lam21.set(0, Partition({2, 1}));
  REQUIRE(degree_formula(triv, lam21) == 2);

  auto z2 = builtin_cyclic(2);
  TypeFunction mixed(2);
  mixed.set(0, Partition({1}));
  mixed.set(1, Partition({1}));
  REQUIRE(degree_formula(z2, mixed) == 2);

  TypeFunction row(2);
  row.set(1, Partition({3}));
  REQUIRE(degree_formula(z2, row) == 1);
}

TEST_CASE("ch is an isometry between the two bilinear forms") {
  for (const std::string name : {"trivial", "cyclic2", "cyclic3"}) {
    auto base = build_group(name);
    for (int n = 1; n <= 3; ++n) {
      auto wc = wreath_classes(base, n);
      for (int i = 0; i < wc->num_classes(); ++i)
        for (int j = 0; j < wc->num_classes(); ++j) {
          ClassFunction fi = ClassFunction::indicator(wc, i);
          ClassFunction fj = ClassFunction::indicator(wc, j);
          REQUIRE(inner_product(fi, fj) == form(ch(fi), ch(fj), *base));
        }
    }
  }
}
