#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "wrep/scalars.hpp"

using namespace wrep;
using wreptest::rand_scalar;

TEST_CASE("rationals reduce and render canonically") {
  REQUIRE(Rational(6, 4) == Rational(3, 2));
  REQUIRE(Rational(-6, -4) == Rational(3, 2));
  REQUIRE(Rational(6, -4).to_string() == "-3/2");
  REQUIRE(Rational(4, 2).to_string() == "2");
  REQUIRE(Rational(4, 2).is_integer());
  REQUIRE_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("cyclo_root basic values") {
  REQUIRE(cyclo_root(1, 0) == Scalar(1));
  REQUIRE(cyclo_root(4, 2) == Scalar(-1));
  // Phi_3 = x^2 + x + 1 forces zeta^2 = -1 - zeta
  Scalar z32 = cyclo_root(3, 2);
  REQUIRE(z32.coeffs() == std::vector<Rational>{Rational(-1), Rational(-1)});
  // exponents reduce mod N
  REQUIRE(cyclo_root(5, 12) == cyclo_root(5, 2));
  REQUIRE(cyclo_root(5, -1) == cyclo_root(5, 4));
}

TEST_CASE("conj is the inversion automorphism") {
  REQUIRE(conj(Scalar(1)) == Scalar(1));
  REQUIRE(conj(cyclo_root(4, 1)) == -cyclo_root(4, 1));
  REQUIRE(conj(cyclo_root(3, 1)) == cyclo_root(3, 2));
  for (unsigned n : {2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
    for (int t = 0; t < 10; ++t) {
      Scalar a = rand_scalar(n), b = rand_scalar(n);
      REQUIRE(conj(conj(a)) == a);
      REQUIRE(conj(a * b) == conj(a) * conj(b));
      REQUIRE(conj(a + b) == conj(a) + conj(b));
    }
  }
}

TEST_CASE("as_rational") {
  REQUIRE(as_rational(Scalar(Rational(5, 2))) == Rational(5, 2));
  REQUIRE(as_rational(cyclo_root(4, 1) * cyclo_root(4, 1)) == Rational(-1));
  REQUIRE_THROWS_AS(as_rational(cyclo_root(3, 1)), NotRational);
}

TEST_CASE("ring axioms on random operands") {
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
    for (int t = 0; t < 12; ++t) {
      Scalar a = rand_scalar(n), b = rand_scalar(n), c = rand_scalar(n);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a - a).is_zero());
      REQUIRE(a * Scalar(1) == a);
    }
  }
}

TEST_CASE("power relations and character sums settle the Phi_N reduction") {
  for (unsigned n = 1; n <= 12; ++n) {
    Scalar z = cyclo_root(n, 1);
    Scalar p(1);
    for (unsigned k = 0; k < n; ++k) p *= z;
    REQUIRE(p == Scalar(1));
    for (unsigned j = 0; j < n; ++j) {
      Scalar sum(0);
      for (unsigned k = 0; k < n; ++k) sum += cyclo_root(n, static_cast<long>(k * j));
      REQUIRE(sum == (j == 0 ? Scalar(Rational(Integer(static_cast<long>(n)))) : Scalar(0)));
    }
  }
}

TEST_CASE("division by nonzero rationals is exact") {
  for (unsigned n : {1u, 3u, 8u}) {
    for (int t = 0; t < 10; ++t) {
      Scalar a = rand_scalar(n);
      Rational r(wreptest::rand_int(1, 9), wreptest::rand_int(1, 9));
      REQUIRE((a * r) / r == a);
    }
  }
  REQUIRE_THROWS_AS(Scalar(1) / Rational(0), Error);
}

TEST_CASE("rational constants embed into any order") {
  Scalar half(Rational(1, 2));
  Scalar z = cyclo_root(6, 1);
  REQUIRE((half * z + half * z) == z);
  REQUIRE(half + half == Scalar(1));
  // orders 2 and 3 both divide 6
  REQUIRE(cyclo_root(2, 1).promoted(6) == cyclo_root(6, 3));
  REQUIRE(cyclo_root(3, 1).promoted(6) == cyclo_root(6, 2));
  REQUIRE_THROWS_AS(cyclo_root(4, 1).promoted(6), OrderMismatch);
}

TEST_CASE("rendering is deterministic") {
  REQUIRE(cyclo_root(3, 2).to_string() == "-1 - z3");
  REQUIRE((cyclo_root(4, 1) * Rational(1, 2)).to_string() == "1/2*z4");
  REQUIRE(Scalar(0).to_string() == "0");
}
