#include <catch2/catch_amalgamated.hpp>

#include <sl213/cyclo.hpp>

#include <random>

using namespace sl213;

namespace {

Cyclo random_cyclo(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  Cyclo a;
  for (int i = 0; i < 12; ++i) {
    a.c[i] = Rational(num(rng), den(rng));
    a.c[i].canonicalize();
  }
  return a;
}

int legendre13(int k) {
  // k^6 mod 13 gives the quadratic character
  long r = 1, b = k % 13;
  for (int i = 0; i < 6; ++i) r = r * b % 13;
  return r == 1 ? 1 : -1;
}

}  // namespace

TEST_CASE("zeta powers") {
  CHECK(zeta_pow(0) == Cyclo(1));
  CHECK(zeta_pow(13) == Cyclo(1));
  CHECK(zeta_pow(-1) == zeta_pow(12));
  Cyclo s;
  for (int k = 0; k < 13; ++k) s += zeta_pow(k);
  CHECK(s.is_zero());
}

TEST_CASE("basic arithmetic") {
  CHECK(zeta_pow(1) * zeta_pow(12) == Cyclo(1));
  CHECK(zeta_pow(7) * zeta_pow(9) == zeta_pow(3));
  const auto& fc = field_constants();
  CHECK(fc.sqrt13 * fc.sqrt13 == Cyclo(13));
  CHECK(inverse(zeta_pow(1)) == zeta_pow(12));
}

TEST_CASE("ring axioms on random instances") {
  std::mt19937 rng(20260823);
  for (int t = 0; t < 40; ++t) {
    Cyclo a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("inverse on random nonzero instances") {
  std::mt19937 rng(7);
  int done = 0;
  while (done < 100) {
    Cyclo a = random_cyclo(rng);
    if (a.is_zero()) continue;
    CHECK(inverse(a) * a == Cyclo(1));
    ++done;
  }
  CHECK_THROWS_AS(inverse(Cyclo(0)), std::domain_error);
}

TEST_CASE("galois automorphisms") {
  std::mt19937 rng(99);
  Cyclo a = random_cyclo(rng), b = random_cyclo(rng);
  CHECK(galois(1, a) == a);
  CHECK(galois(3, zeta_pow(9)) == zeta_pow(27 % 13));
  CHECK(galois(3, zeta_pow(9)) == zeta_pow(1));
  for (int k = 1; k <= 12; ++k) {
    CHECK(galois(k, a * b) == galois(k, a) * galois(k, b));
    CHECK(galois(k, a + b) == galois(k, a) + galois(k, b));
  }
  CHECK_THROWS_AS(galois(13, a), std::invalid_argument);

  // sqrt13 transforms by the quadratic character
  const auto& fc = field_constants();
  for (int k = 1; k <= 12; ++k) {
    Cyclo expect = legendre13(k) == 1 ? fc.sqrt13 : -fc.sqrt13;
    CHECK(galois(k, fc.sqrt13) == expect);
  }
}

TEST_CASE("field trace") {
  CHECK(field_trace(Cyclo(1)) == 12);
  for (int k = 1; k <= 12; ++k) CHECK(field_trace(zeta_pow(k)) == -1);
  // trace is the sum of all Galois conjugates
  std::mt19937 rng(123);
  Cyclo a = random_cyclo(rng);
  Cyclo s;
  for (int k = 1; k <= 12; ++k) s += galois(k, a);
  CHECK(s.is_rational());
  CHECK(s.rational_part() == field_trace(a));
}

TEST_CASE("theta periods are the roots of z^4+z^3+2z^2-4z+3") {
  const auto& fc = field_constants();
  // elementary symmetric functions of the four periods
  const Cyclo t[4] = {fc.theta1, fc.theta2, fc.theta3, fc.theta4};
  Cyclo e1, e2, e3, e4(1);
  for (int i = 0; i < 4; ++i) e1 += t[i];
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) e2 += t[i] * t[j];
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) e3 += t[i] * t[j] * t[k];
  for (int i = 0; i < 4; ++i) e4 *= t[i];
  CHECK(e1 == Cyclo(-1));
  CHECK(e2 == Cyclo(2));
  CHECK(e3 == Cyclo(4));
  CHECK(e4 == Cyclo(3));
}

TEST_CASE("subfield constants") {
  const auto& fc = field_constants();
  CHECK(fc.alpha + fc.beta + fc.gamma == fc.sqrt13);
  CHECK(fc.r1 * fc.r1 == Cyclo(-13) - Rational(2) * fc.sqrt13);
  CHECK(fc.r3 * fc.r3 == Cyclo(-13) + Rational(2) * fc.sqrt13);
  Rational half(1, 2);
  CHECK(fc.r2 * fc.r2 == half * (Cyclo(-13) + Rational(3) * fc.sqrt13));
  CHECK(fc.r4 * fc.r4 == half * (Cyclo(-13) - Rational(3) * fc.sqrt13));
  // oracle for the r2 closed form: expand (4*theta1 + 1 - sqrt13)^2 / 4
  Cyclo lhs = Rational(4) * fc.theta1 + Cyclo(1) - fc.sqrt13;
  CHECK(Rational(1, 4) * (lhs * lhs) == half * (Cyclo(-13) + Rational(3) * fc.sqrt13));
}
