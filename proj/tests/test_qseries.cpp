#include <catch2/catch_amalgamated.hpp>

#include <sl213/invariants.hpp>
#include <sl213/qseries.hpp>

using namespace sl213;

namespace {
constexpr long D = kDefaultDen;  // 312

long sigma3_brute(long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += d * d * d;
  return s;
}

std::vector<QSeries> theta_vector(long trunc) {
  std::vector<QSeries> a;
  for (int i = 1; i <= 6; ++i) a.push_back(theta13(i, D, trunc));
  return a;
}
}  // namespace

TEST_CASE("series arithmetic") {
  QSeries one = qs_const(Cyclo(1));
  QSeries q = qs_monomial(Cyclo(1), 1, 1);
  QSeries s = truncate(one - q, 20 * D);

  // geometric series: 1/(1-q) = 1 + q + q^2 + ...
  QSeries r = recip(s);
  for (long n = 0; n < 19; ++n) CHECK(r.coeff(n) == Cyclo(1));
  CHECK(agrees(r * s, one));

  CHECK_THROWS_AS(recip(qs_zero(D, 10 * D)), std::domain_error);
  CHECK_THROWS_AS(recip(one - q), std::invalid_argument);  // untruncated

  // negative exponents and shifts
  QSeries qinv = qs_monomial(Cyclo(1), -1, 1);
  CHECK((qinv * q).coeff(0) == Cyclo(1));
  CHECK(shift(q, -D).coeff(0) == Cyclo(1));

  // truncation rule for products
  QSeries a = truncate(q, 5 * D);                      // val D, trunc 5D
  QSeries b = truncate(qs_monomial(Cyclo(1), 2, 1), 7 * D);  // val 2D, trunc 7D
  CHECK((a * b).trunc == std::min(5 * D + 2 * D, 7 * D + D));

  // grids unify by lcm
  QSeries c{8, 8 * 10, {{4, Cyclo(1)}}};   // q^(1/2) on grid 1/8
  QSeries d{12, 12 * 10, {{6, Cyclo(1)}}};  // q^(1/2) on grid 1/12
  CHECK((c - d).is_zero());
  CHECK((c + d).den == 24);
}

TEST_CASE("eta and the pentagonal numbers") {
  QSeries e = eta(D, 30 * D);
  // q^(1/24) (1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + q^22 + q^26 - ...)
  CHECK(e.valuation() == D / 24);
  struct P {
    long n;
    int c;
  };
  for (P p : {P{0, 1}, P{1, -1}, P{2, -1}, P{5, 1}, P{7, 1}, P{12, -1},
              P{15, -1}, P{22, 1}, P{26, 1}}) {
    CHECK(e.coeff(1 + 24 * p.n, 24) == Cyclo(p.c));
  }
  // all other coefficients vanish below the truncation
  int nonzero = 0;
  for (const auto& [exp, coef] : e.coeffs) (void)exp, ++nonzero;
  CHECK(nonzero == 9);
  CHECK(e.has_rational_coeffs());

  // eta * recip(eta) = 1
  CHECK(agrees(e * recip(e), qs_const(Cyclo(1))));

  // truncation honesty: deeper run has the same prefix
  QSeries e2 = eta(D, 60 * D);
  CHECK((truncate(e2, e.trunc) - e).is_zero());

  // eta(13z) via exponent scaling
  CHECK(scale_exponent(e, 13).valuation() == 13 * D / 24);
}

TEST_CASE("Eisenstein series, delta, j") {
  long T = 25 * D;
  QSeries e4 = eisenstein(4, D, T), e6 = eisenstein(6, D, T);
  for (long n = 1; n <= 20; ++n)
    CHECK(e4.coeff(n) == Cyclo(Rational(240) * sigma3_brute(n)));
  // classical initial coefficients
  CHECK(e4.coeff(0) == Cyclo(1));
  CHECK(e4.coeff(2) == Cyclo(2160));
  CHECK(e6.coeff(1) == Cyclo(-504));
  CHECK(e6.coeff(2) == Cyclo(-16632));
  CHECK(e6.coeff(3) == Cyclo(-122976));

  QSeries d = delta(D, T);
  CHECK(d.valuation() == D);
  CHECK(d.coeff(1) == Cyclo(1));
  CHECK(d.coeff(2) == Cyclo(-24));
  CHECK(d.coeff(3) == Cyclo(252));

  // E4^3 - E6^2 = 1728 Delta
  CHECK(agrees(qs_pow(e4, 3) - qs_pow(e6, 2), Cyclo(1728) * d));

  QSeries j = j_invariant(D, T);
  CHECK(j.valuation() == -D);
  CHECK(j.coeff(-1) == Cyclo(1));
  CHECK(j.coeff(0) == Cyclo(744));
  CHECK(j.coeff(1) == Cyclo(196884));
  CHECK(j.coeff(2) == Cyclo(21493760));
}

TEST_CASE("theta constants of order 13") {
  long T = 30 * D;
  // signed-sum definition matches the triple-product form for all six
  static const long lv[6] = {11, 7, 5, 3, 9, 1};
  for (int i = 1; i <= 6; ++i) {
    QSeries sum = theta13(i, D, T);
    QSeries prod = theta_char(lv[i - 1], 13, D, T);
    if (i == 4) prod = -prod;
    CHECK(agrees(sum, prod));
    CHECK(sum.has_rational_coeffs());
  }
  // leading expansions
  QSeries a6 = theta13(6, D, T);
  CHECK(a6.valuation() == D / 104);
  CHECK(a6.coeff(1, 104) == Cyclo(1));
  CHECK(a6.coeff(1 + 104 * 6, 104) == Cyclo(-1));
  CHECK(a6.coeff(1 + 104 * 7, 104) == Cyclo(-1));
  QSeries a4 = theta13(4, D, T);
  CHECK(a4.coeff(9, 104) == Cyclo(-1));
  CHECK(a4.coeff(9 + 104 * 5, 104) == Cyclo(1));
  CHECK(a4.coeff(9 + 104 * 8, 104) == Cyclo(1));
  QSeries a1 = theta13(1, D, T);
  CHECK(a1.coeff(121, 104) == Cyclo(1));
  CHECK(a1.coeff(121 + 104, 104) == Cyclo(-1));
  CHECK(a1.coeff(121 + 104 * 12, 104) == Cyclo(-1));
  CHECK(a1.coeff(121 + 104 * 15, 104) == Cyclo(1));
}

TEST_CASE("theta characteristics at other levels") {
  // valuation l^2/(8k)
  CHECK(theta_char(1, 13, D, 10 * D).valuation() == D / 104);
  long d5 = 120;
  CHECK(theta_char(3, 5, d5, 10 * d5).valuation() == 9 * d5 / 40);
  CHECK(theta_char(1, 5, d5, 10 * d5).valuation() == d5 / 40);
  CHECK_THROWS_AS(theta_char(2, 13, D, D), std::invalid_argument);
  CHECK_THROWS_AS(theta_char(1, 5, 312, 312), std::invalid_argument);
}

TEST_CASE("hauptmoduln") {
  long T = 15 * D;
  QSeries t13 = hauptmodul(13, D, T);
  CHECK(t13.valuation() == -D);  // 2 (1/24 - 13/24) = -1
  CHECK(t13.coeff(-1) == Cyclo(1));
  CHECK(t13.has_rational_coeffs());
  CHECK(hauptmodul(2, D, T).valuation() == -D);
  CHECK(hauptmodul(3, D, T).valuation() == -D);
  CHECK(hauptmodul(5, D, T).valuation() == -D);
  CHECK(hauptmodul(7, D, T).valuation() == -D);
  CHECK_THROWS_AS(hauptmodul(6, D, T), std::invalid_argument);

  // (eta/eta(5z))^6 * eta(5z)^6 = eta^6
  QSeries e = eta(D, T + 2 * D);
  QSeries e5 = scale_exponent(e, 5);
  CHECK(agrees(hauptmodul(5, D, T) * qs_pow(e5, 6), qs_pow(e, 6)));
}

TEST_CASE("polynomial evaluation on theta series") {
  long T = 12 * D;
  auto a = theta_vector(T);

  // leading terms of the evaluated families
  QSeries A0 = poly_eval(family_A()[0], a);
  CHECK(A0.valuation() == D / 4);
  CHECK(A0.coeff(1, 4) == Cyclo(1));

  QSeries D11 = poly_eval(family_D()[11], a);
  CHECK(D11.valuation() == 75 * D / 104);
  CHECK(D11.coeff(75, 104) == Cyclo(-4));

  QSeries G1 = poly_eval(family_G()[1], a);
  CHECK(G1.valuation() == 43 * D / 52);
  CHECK(G1.coeff(43, 52) == Cyclo(13));

  // evaluation is a ring homomorphism on a sample product
  const auto& A = family_A();
  CHECK(agrees(poly_eval(A[0] * A[1], a),
               poly_eval(A[0], a) * poly_eval(A[1], a)));
}

TEST_CASE("level 3 and 4 theta forms") {
  long d = 120, T = 20 * d;
  // x^2/4 over even x: 1 + 2q + 2q^4 + 2q^9 + ...
  QSeries t40 = theta_level4(0, d, T);
  CHECK(t40.coeff(0) == Cyclo(1));
  CHECK(t40.coeff(1) == Cyclo(2));
  CHECK(t40.coeff(4) == Cyclo(2));
  CHECK(t40.coeff(2) == Cyclo(0));
  // x^2/4 over odd x: 2q^(1/4)(1 + q^2 + q^6 + ...)
  QSeries t41 = theta_level4(1, d, T);
  CHECK(t41.valuation() == d / 4);
  CHECK(t41.coeff(1, 4) == Cyclo(2));
  CHECK(t41.coeff(9, 4) == Cyclo(2));

  // hexagonal lattice: 1 + 6q + 0q^2 + 6q^3 + 6q^4 + ...
  QSeries t30 = theta_level3(0, d, T);
  CHECK(t30.coeff(0) == Cyclo(1));
  CHECK(t30.coeff(1) == Cyclo(6));
  CHECK(t30.coeff(2) == Cyclo(0));
  CHECK(t30.coeff(3) == Cyclo(6));
  CHECK(t30.coeff(4) == Cyclo(6));
  CHECK(t30.coeff(7) == Cyclo(12));
  QSeries t31 = theta_level3(1, d, T);
  CHECK(t31.valuation() == d / 3);
  CHECK(t31.coeff(1, 3) == Cyclo(3));
}
