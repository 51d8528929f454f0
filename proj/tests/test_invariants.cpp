#include <catch2/catch_amalgamated.hpp>

#include <sl213/invariants.hpp>

using namespace sl213;

namespace {
MultiPoly z(int i) { return MultiPoly::var(i - 1); }

// the matrix of the substitution z -> S T^nu z
LinearMap st(int nu) {
  const auto& M = matrices();
  return M.S * map_pow(M.T, nu);
}
}  // namespace

TEST_CASE("family shapes") {
  struct Row {
    const char* name;
    size_t size;
    int degree;
  };
  for (Row r : {Row{"A", 7, 2}, Row{"D", 14, 3}, Row{"G", 13, 6},
                Row{"B", 21, 4}, Row{"C", 13, 4}}) {
    FormFamily f = family(r.name);
    REQUIRE(f.members.size() == r.size);
    for (const auto& p : f.members) {
      CHECK(p.is_homogeneous());
      CHECK(p.degree() == r.degree);
      CHECK(p.has_rational_coeffs());
    }
  }
  CHECK_THROWS_AS(family("X"), std::invalid_argument);
  CHECK(b_names().size() == 21);
}

TEST_CASE("generator matrices and group relations") {
  const auto& M = matrices();
  LinearMap I = LinearMap::identity(6);
  CHECK(M.S * M.S == -I);
  CHECK(map_pow(M.T, 13) == I);
  CHECK(map_pow(M.S * M.T, 3) == -I);
  // P is conjugate to a translation: P^13 = S T^{-13} S = S^2 = -I
  CHECK(map_pow(M.P, 13) == -I);
  CHECK(map_pow(map_pow(M.Q, 3) * map_pow(M.P, 4), 3) == I);
  // the generator word in P, Q equals H times the central element
  CHECK(M.Hword == -M.H);
  CHECK(map_pow(M.H, 6) == -I);
  // H normalizes <T>: H^{-1} T H = T^4
  CHECK(map_inverse(M.H) * M.T * M.H == map_pow(M.T, 4));
}

TEST_CASE("quadratic family law for all nu") {
  const auto& A = family_A();
  const Cyclo s13 = field_constants().sqrt13;
  for (int nu = 0; nu < 13; ++nu) {
    CHECK(s13 * apply_linear(st(nu), A[0]) == phi_linear(nu));
  }
  // phi_infinity at nu = 13
  CHECK(phi_linear(13) == s13 * A[0]);
}

TEST_CASE("cubic family laws for all nu") {
  const auto& D = family_D();
  const auto& fc = field_constants();
  const Cyclo m13s13 = Cyclo(-13) * fc.sqrt13;
  // coefficient pattern r_{c(k)} zeta^{k nu} on D_k, k = 1..12
  const Cyclo* rc[12] = {&fc.r1, &fc.r2, &fc.r1, &fc.r3, &fc.r2, &fc.r2,
                         &fc.r4, &fc.r4, &fc.r1, &fc.r3, &fc.r4, &fc.r3};
  // companion pattern for the image of D_infinity
  const Cyclo* ric[12] = {&fc.r3, &fc.r4, &fc.r3, &fc.r1, &fc.r4, &fc.r4,
                          &fc.r2, &fc.r2, &fc.r3, &fc.r1, &fc.r2, &fc.r1};
  const int isign[12] = {-1, -1, -1, +1, -1, -1, +1, +1, -1, +1, +1, +1};
  for (int nu = 0; nu < 13; ++nu) {
    LinearMap m = st(nu);
    MultiPoly rhs0 = fc.r0 * D[0] + fc.rInf * D[13];
    MultiPoly rhsInf = fc.rInf * D[0] - fc.r0 * D[13];
    for (int k = 1; k <= 12; ++k) {
      Cyclo zk = zeta_pow(long(k) * nu);
      rhs0 += (*rc[k - 1] * zk) * D[k];
      rhsInf += (Cyclo(isign[k - 1]) * *ric[k - 1] * zk) * D[k];
    }
    CHECK(m13s13 * apply_linear(m, D[0]) == rhs0);
    CHECK(m13s13 * apply_linear(m, D[13]) == rhsInf);
  }
}

TEST_CASE("sextic family law for all nu") {
  const auto& G = family_G();
  for (int nu = 0; nu < 13; ++nu) {
    CHECK(Cyclo(169) * apply_linear(st(nu), G[0]) == delta_poly(nu));
  }
  // delta_infinity = 169 G0 = 13^2 (z1^2 z2^2 z3^2 + z4^2 z5^2 z6^2)
  MultiPoly expect = Cyclo(169) * (z(1) * z(1) * z(2) * z(2) * z(3) * z(3) +
                                   z(4) * z(4) * z(5) * z(5) * z(6) * z(6));
  CHECK(delta_poly(13) == expect);
}

TEST_CASE("quartic family laws for all nu") {
  const auto& Cf = family_C();
  MultiPoly c_seed = -Cf[0];  // z1^2 z4^2 + z2^2 z5^2 + z3^2 z6^2
  const auto& B = family_B();
  const MultiPoly& b_seed = B[0];
  const int cexp[13] = {0, 1, 3, 9, 12, 10, 4, 5, 2, 6, 8, 11, 7};
  const int bexp[13] = {0, 1, 3, 9, 12, 10, 4, 5, 2, 6, 8, 11, 7};
  for (int nu = 0; nu < 13; ++nu) {
    LinearMap m = st(nu);
    MultiPoly crhs = Cf[0];
    for (int k = 1; k < 13; ++k)
      crhs += (Cyclo(2) * zeta_pow(long(cexp[k]) * nu)) * Cf[k];
    CHECK(Cyclo(13) * apply_linear(m, c_seed) == crhs);

    MultiPoly brhs;
    for (int k = 0; k < 13; ++k) {
      Cyclo coef = zeta_pow(long(bexp[k]) * nu);
      if (k >= 7) coef = Cyclo(2) * coef;  // single B-terms enter doubled
      brhs += coef * composite_B(bexp[k]);
    }
    CHECK(Cyclo(13) * apply_linear(m, b_seed) == brhs);
  }
}

TEST_CASE("invariant quadric and quartic") {
  const auto& A = family_A();
  MultiPoly psi2 = A[0] * A[0] + A[1] * A[5] + A[2] * A[3] + A[4] * A[6];
  CHECK(psi2 == Cyclo(2) * phi4());

  // sum of the fourteen w's is 26 Psi2 = 52 Phi4
  MultiPoly sum_w = phi_mn_symbolic(1, 0);
  CHECK(sum_w == Cyclo(52) * phi4());

  // sum of the fourteen delta's vanishes identically
  CHECK(phi_mn_symbolic(0, 1).is_zero());

  // Phi4 is fixed by both generators, hence by the whole group
  const auto& M = matrices();
  CHECK(apply_linear(M.S, phi4()) == phi4());
  CHECK(apply_linear(M.T, phi4()) == phi4());

  CHECK_THROWS_AS(phi_mn_symbolic(1, 2), std::invalid_argument);
}

TEST_CASE("quartic system of the genus-50 curve") {
  auto sys = klein_system(13);
  REQUIRE(sys.size() == 21);
  for (const auto& kq : sys) {
    CHECK(kq.poly.is_homogeneous());
    CHECK(kq.poly.degree() == 4);
  }
  // spot check: indices (0,1,2,3) give E1^3 E5 - E2^3 E4 + E3^3 E1
  MultiPoly expect = poly_pow(z(1), 3) * z(5) - poly_pow(z(2), 3) * z(4) +
                     poly_pow(z(3), 3) * z(1);
  CHECK(klein_quartic(13, 0, 1, 2, 3) == expect);

  // the same construction at level 7 yields the single genus-3 quartic
  auto sys7 = klein_system(7);
  REQUIRE(sys7.size() == 1);
  MultiPoly k7 = -poly_pow(z(1), 3) * z(2) + poly_pow(z(2), 3) * z(3) +
                 poly_pow(z(3), 3) * z(1);
  CHECK(sys7[0].poly == k7);
}

TEST_CASE("correspondence between B-terms and the quartic system") {
  auto table = b_phi_correspondence();  // throws on any mismatch
  CHECK(table.size() == 21);
}

TEST_CASE("21-dimensional representation") {
  const auto& rep = rep21();  // construction self-checks the relations
  CHECK(rep.Stilde.trace() == Cyclo(1));
  Cyclo expect = Rational(1, 2) * (Cyclo(3) + field_constants().sqrt13);
  CHECK(rep.Ttilde.trace() == expect);
}
