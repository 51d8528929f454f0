#include <catch2/catch_amalgamated.hpp>

#include <sl213/invariants.hpp>
#include <sl213/mpoly.hpp>

#include <random>

using namespace sl213;

namespace {
MultiPoly z(int i) { return MultiPoly::var(i - 1); }
MultiPoly c(long n) { return MultiPoly(Cyclo(n)); }

// random polynomial of total degree <= deg
MultiPoly random_poly(std::mt19937& rng, int nterms, int deg) {
  std::uniform_int_distribution<int> coef(-3, 3), var(0, kNumVars - 1), zp(0, 12);
  MultiPoly p;
  for (int t = 0; t < nterms; ++t) {
    Monomial m;
    for (int d = 0; d < deg; ++d) m.e[var(rng)] += 1;
    p += MultiPoly::term(m, Cyclo(coef(rng)) * zeta_pow(zp(rng)));
  }
  return p;
}

LinearMap random_map(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-2, 2), ex(0, 12);
  LinearMap m(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m.at(i, j) = Cyclo(coef(rng)) * zeta_pow(ex(rng));
  return m;
}
}  // namespace

TEST_CASE("poly arithmetic basics") {
  std::mt19937 rng(1);
  CHECK((z(1) * z(2)) == (z(2) * z(1)));
  CHECK((random_poly(rng, 3, 2) * MultiPoly()).is_zero());
  MultiPoly p = poly_pow(z(1) + z(2), 2);
  CHECK(p == z(1) * z(1) + c(2) * z(1) * z(2) + z(2) * z(2));

  // A0^2 expands into squares plus doubled cross terms
  MultiPoly a0 = z(1) * z(4) + z(2) * z(5) + z(3) * z(6);
  MultiPoly expect = (z(1) * z(1) * z(4) * z(4) + z(2) * z(2) * z(5) * z(5) +
                      z(3) * z(3) * z(6) * z(6)) +
                     c(2) * (z(1) * z(2) * z(4) * z(5) + z(2) * z(3) * z(5) * z(6) +
                             z(3) * z(1) * z(6) * z(4));
  CHECK(a0 * a0 == expect);
}

TEST_CASE("matrix arithmetic") {
  const auto& M = matrices();
  LinearMap I = LinearMap::identity(6);
  CHECK(M.S * M.S == -I);
  CHECK(map_pow(M.T, 13) == I);
  // exact up to the center: (ST)^3 = -I in SL(2,13), = I in PSL(2,13)
  CHECK(map_pow(M.S * M.T, 3) == -I);
  CHECK(M.T.at(0, 0) == zeta_pow(7));
  CHECK_THROWS(M.S * LinearMap::identity(3));
}

TEST_CASE("apply_linear") {
  std::mt19937 rng(42);
  MultiPoly p = random_poly(rng, 4, 1);
  CHECK(apply_linear(LinearMap::identity(6), p) == p);

  // respects products
  MultiPoly q = random_poly(rng, 3, 1);
  LinearMap m = random_map(rng);
  CHECK(apply_linear(m, p * q) == apply_linear(m, p) * apply_linear(m, q));

  // composition law
  LinearMap n = random_map(rng);
  CHECK(apply_linear(m, apply_linear(n, p)) == apply_linear(n * m, p));

  // homogeneity and degree preserved (generic invertible map)
  const auto& M = matrices();
  MultiPoly h = apply_linear(M.S, phi4());
  CHECK(h.is_homogeneous());
  CHECK(h.degree() == 4);

  // T fixes the invariant quartic; S fixes it too
  CHECK(apply_linear(M.T, phi4()) == phi4());
  CHECK(apply_linear(M.S, phi4()) == phi4());

  // sqrt13 * (A0 composed with S) is the sum of all seven A-forms
  const auto& A = family_A();
  MultiPoly sum;
  for (const auto& a : A) sum += a;
  CHECK(field_constants().sqrt13 * apply_linear(M.S, A[0]) == sum);
}

TEST_CASE("express_in_basis") {
  const auto& B = family_B();
  std::vector<MultiPoly> basis012 = {B[0], B[1], B[2]};
  std::vector<Cyclo> coef = express_in_basis(phi4(), basis012);
  CHECK(coef[0] == Cyclo(3));
  CHECK(coef[1] == Cyclo(1));
  CHECK(coef[2] == Cyclo(-1));

  // trivial: a basis element in its own basis
  std::vector<Cyclo> e0 = express_in_basis(B[0], B);
  CHECK(e0[0] == Cyclo(1));
  for (int i = 1; i < 21; ++i) CHECK(e0[i].is_zero());

  // round trip on a random combination
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coefd(-4, 4);
  MultiPoly combo;
  std::vector<Cyclo> want(21);
  for (int i = 0; i < 21; ++i) {
    want[i] = Cyclo(coefd(rng)) * zeta_pow(coefd(rng));
    combo += want[i] * B[i];
  }
  std::vector<Cyclo> got = express_in_basis(combo, B);
  CHECK(got == want);

  // 13 * (B0(0) composed with S) has the expected coefficient pattern
  const auto& M = matrices();
  std::vector<Cyclo> sb = express_in_basis(Cyclo(13) * apply_linear(M.S, B[0]), B);
  CHECK(sb[0] == Cyclo(5));
  CHECK(sb[1] == Cyclo(2));
  CHECK(sb[2] == Cyclo(-2));
  for (int i : {3, 5, 7}) CHECK(sb[i] == Cyclo(1));        // Bk(1), k=1,3,9
  for (int i : {9, 11, 13}) CHECK(sb[i] == Cyclo(-1));     // Bk(1), k=12,10,4
  for (int i : {4, 6, 8, 10, 12, 14}) CHECK(sb[i] == Cyclo(1));  // Bk(2)
  for (int i = 15; i < 21; ++i) CHECK(sb[i] == Cyclo(2));  // single B-terms

  // error cases
  CHECK_THROWS_AS(express_in_basis(z(1), {z(2)}), NotInSpan);
  CHECK_THROWS_AS(express_in_basis(z(2), {z(2), c(2) * z(2)}), DependentBasis);
  try {
    express_in_basis(z(1) + z(2), {z(2)});
    FAIL("expected NotInSpan");
  } catch (const NotInSpan& e) {
    CHECK(e.residual == z(1));
  }
}
