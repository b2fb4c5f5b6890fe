#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "caylap/cyclotomic.hpp"
#include "caylap/util.hpp"

using namespace caylap;

TEST_CASE("rational constructors canonicalize") {
  CHECK(Cyc::rational(2, 4) == Cyc::rational(1, 2));
  CHECK(Cyc::rational(-3, -6) == Cyc::rational(1, 2));
  CHECK(make_rational(10, 15) == Rational(2, 3));
  CHECK(Cyc::integer(0).is_zero());
  CHECK(Cyc::integer(1).is_rational());
  CHECK(Cyc::rational(7, 3).rational_value() == make_rational(7, 3));
}

TEST_CASE("classic root-of-unity identities") {
  Cyc z3 = Cyc::zeta(3);
  CHECK(z3 + z3 * z3 == Cyc::integer(-1));
  CHECK(z3 * z3 * z3 == Cyc::integer(1));
  Cyc z4 = Cyc::zeta(4);
  CHECK(z4 * z4 == Cyc::integer(-1));
  CHECK(z4.conj() == -z4);
  CHECK(Cyc::zeta(1) == Cyc::integer(1));
  CHECK(Cyc::zeta(2) == Cyc::integer(-1));
  Cyc z8 = Cyc::zeta(8);
  Cyc p = Cyc::integer(1);
  for (int i = 0; i < 4; ++i) p = p * z8;
  CHECK(p == Cyc::integer(-1));
  for (int i = 0; i < 4; ++i) p = p * z8;
  CHECK(p == Cyc::integer(1));
}

TEST_CASE("cross-conductor arithmetic agrees") {
  // zeta_6^2 = zeta_3 and zeta_6 = -zeta_3^2.
  Cyc z6 = Cyc::zeta(6);
  CHECK(z6 * z6 == Cyc::zeta(3));
  CHECK(z6 == -(Cyc::zeta(3) * Cyc::zeta(3)));
  // 1 + zeta_3 + zeta_3^2 = 0 stays true after lifting through Q(zeta_12).
  Cyc sum = Cyc::integer(1) + Cyc::zeta(3) + Cyc::zeta(3) * Cyc::zeta(3);
  CHECK(sum.is_zero());
  CHECK((sum + Cyc::zeta(12)) == Cyc::zeta(12));
}

TEST_CASE("field axioms on random elements") {
  DetRng rng(7);
  auto rand_cyc = [&](int m) {
    Cyc v = Cyc::integer(0);
    for (int k = 0; k < m; ++k)
      v = v + make_rational(rng.next_int(-4, 4), rng.next_int(1, 3)) *
                  Cyc::zeta(m, k);
    return v;
  };
  for (int m : {3, 4, 5, 8, 12}) {
    Cyc a = rand_cyc(m), b = rand_cyc(m), c = rand_cyc(m);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyc::integer(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyc::integer(1));
    }
  }
}

TEST_CASE("inverse of zero throws") {
  CHECK_THROWS_AS(Cyc::integer(0).inverse(), std::domain_error);
  CHECK_THROWS_AS((Cyc::zeta(5) - Cyc::zeta(5)).inverse(), std::domain_error);
}

TEST_CASE("complex embedding is a homomorphism") {
  DetRng rng(11);
  auto rand_cyc = [&](int m) {
    Cyc v = Cyc::integer(0);
    for (int k = 0; k < m; ++k)
      v = v + Rational(rng.next_int(-3, 3)) * Cyc::zeta(m, k);
    return v;
  };
  for (int m : {3, 5, 8, 12}) {
    for (int rep = 0; rep < 4; ++rep) {
      Cyc a = rand_cyc(m), b = rand_cyc(m);
      std::complex<double> ea = a.to_complex(), eb = b.to_complex();
      CHECK(std::abs((a + b).to_complex() - (ea + eb)) < 1e-10);
      CHECK(std::abs((a * b).to_complex() - ea * eb) < 1e-10);
    }
  }
  CHECK(std::abs(Cyc::zeta(4).to_complex() -
                 std::complex<double>(0.0, 1.0)) < 1e-12);
  CHECK(std::abs(Cyc::zeta(3).to_complex() -
                 std::complex<double>(-0.5, std::sqrt(3.0) / 2)) < 1e-12);
}

TEST_CASE("conjugation is an involutive automorphism") {
  Cyc a = Cyc::zeta(5) + make_rational(1, 2) * Cyc::zeta(5, 2);
  Cyc b = Cyc::zeta(5, 3) - Cyc::integer(2);
  CHECK(a.conj().conj() == a);
  CHECK((a * b).conj() == a.conj() * b.conj());
  CHECK((a + b).conj() == a.conj() + b.conj());
  // conj matches the complex embedding.
  CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) <
        1e-10);
}

TEST_CASE("rational detection across representations") {
  // zeta_5 + zeta_5^2 + zeta_5^3 + zeta_5^4 = -1, a rational in disguise.
  Cyc v = Cyc::zeta(5) + Cyc::zeta(5, 2) + Cyc::zeta(5, 3) + Cyc::zeta(5, 4);
  CHECK(v.is_rational());
  CHECK(v.rational_value() == Rational(-1));
  CHECK_THROWS_AS(Cyc::zeta(5).rational_value(), std::domain_error);
}
