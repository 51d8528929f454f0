#pragma once

// The named matrices and polynomial families of the SL(2,13) invariant
// theory in six variables: the generators S, T (and H, P, Q), the quadratic
// A-family, cubic D-family, sextic G-family, quartic B- and C-families, the
// invariant quartic Phi4, the orbit sums Phi_{m,n}, the Klein quartic system
// for X(p), the B <-> Phi correspondence and the induced 21-dimensional
// representation on the span of the B-terms.

#include <sl213/cyclo.hpp>
#include <sl213/mpoly.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sl213 {

namespace detail {
inline MultiPoly Z(int i) { return MultiPoly::var(i - 1); }
inline MultiPoly C(long n) { return MultiPoly(Cyclo(n)); }
inline MultiPoly C2(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return MultiPoly(Cyclo(r));
}
}  // namespace detail

struct Matrices {
  LinearMap S, T, H, P, Q;
  // The generator word Q^5 P^2 . P^2 Q^6 P^8 . Q^5 P^2 . P^3 Q. With the
  // sign of S pinned by the (sign-sensitive, degree-3) D-family law, the
  // word equals -H: the group relations involving odd powers of S hold
  // exactly only up to the central element -I.
  LinearMap Hword;
};

inline const Matrices& matrices() {
  static const Matrices ms = [] {
    Matrices m;
    // S = -(1/sqrt13) * (matrix of differences zeta^a - zeta^b)
    auto e = [](int a, int b) { return zeta_pow(a) - zeta_pow(b); };
    const int rows[6][6][2] = {
        {{12, 1}, {10, 3}, {4, 9}, {5, 8}, {2, 11}, {6, 7}},
        {{10, 3}, {4, 9}, {12, 1}, {2, 11}, {6, 7}, {5, 8}},
        {{4, 9}, {12, 1}, {10, 3}, {6, 7}, {5, 8}, {2, 11}},
        {{5, 8}, {2, 11}, {6, 7}, {1, 12}, {3, 10}, {9, 4}},
        {{2, 11}, {6, 7}, {5, 8}, {3, 10}, {9, 4}, {1, 12}},
        {{6, 7}, {5, 8}, {2, 11}, {9, 4}, {1, 12}, {3, 10}}};
    LinearMap S(6);
    Cyclo neg_inv_sqrt13 = -inverse(field_constants().sqrt13);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        S.at(i, j) = neg_inv_sqrt13 * e(rows[i][j][0], rows[i][j][1]);
    m.S = S;

    LinearMap T(6);
    const int texp[6] = {7, 11, 8, 6, 2, 5};
    for (int i = 0; i < 6; ++i) T.at(i, i) = zeta_pow(texp[i]);
    m.T = T;

    m.P = m.S * map_pow(m.T, 12) * m.S;  // S T^{-1} S
    m.Q = m.S * map_pow(m.T, 3);         // S T^3

    auto& P = m.P;
    auto& Q = m.Q;
    m.Hword = map_pow(Q, 5) * map_pow(P, 2) * map_pow(P, 2) * map_pow(Q, 6) *
              map_pow(P, 8) * map_pow(Q, 5) * map_pow(P, 2) * map_pow(P, 3) * Q;
    // H as the explicit signed permutation
    LinearMap H(6);
    const int row_col[6] = {5, 3, 4, 2, 0, 1};
    const int row_sign[6] = {1, 1, 1, -1, -1, -1};
    for (int i = 0; i < 6; ++i) H.at(i, row_col[i]) = Cyclo(row_sign[i]);
    m.H = H;
    return m;
  }();
  return ms;
}

inline const std::vector<MultiPoly>& family_A() {
  using namespace detail;
  static const std::vector<MultiPoly> fam = [] {
    std::vector<MultiPoly> A(7);
    A[0] = Z(1) * Z(4) + Z(2) * Z(5) + Z(3) * Z(6);
    A[1] = Z(1) * Z(1) - C(2) * Z(3) * Z(4);
    A[2] = -(Z(5) * Z(5)) - C(2) * Z(2) * Z(4);
    A[3] = Z(2) * Z(2) - C(2) * Z(1) * Z(5);
    A[4] = Z(3) * Z(3) - C(2) * Z(2) * Z(6);
    A[5] = -(Z(4) * Z(4)) - C(2) * Z(1) * Z(6);
    A[6] = -(Z(6) * Z(6)) - C(2) * Z(3) * Z(5);
    return A;
  }();
  return fam;
}

// D-family: indices 0..12, with the infinity member stored at position 13.
inline const std::vector<MultiPoly>& family_D() {
  using namespace detail;
  static const std::vector<MultiPoly> fam = [] {
    std::vector<MultiPoly> D(14);
    D[0] = Z(1) * Z(2) * Z(3);
    D[1] = C(2) * Z(2) * Z(3) * Z(3) + Z(2) * Z(2) * Z(6) - Z(4) * Z(4) * Z(5) +
           Z(1) * Z(5) * Z(6);
    D[2] = -(Z(6) * Z(6) * Z(6)) + Z(2) * Z(2) * Z(4) -
           C(2) * Z(2) * Z(5) * Z(5) + Z(1) * Z(4) * Z(5) +
           C(3) * Z(3) * Z(5) * Z(6);
    D[3] = C(2) * Z(1) * Z(2) * Z(2) + Z(1) * Z(1) * Z(5) - Z(4) * Z(6) * Z(6) +
           Z(3) * Z(4) * Z(5);
    D[4] = -(Z(2) * Z(2) * Z(3)) + Z(1) * Z(6) * Z(6) -
           C(2) * Z(4) * Z(4) * Z(6) - Z(1) * Z(3) * Z(5);
    D[5] = -(Z(4) * Z(4) * Z(4)) + Z(3) * Z(3) * Z(5) -
           C(2) * Z(3) * Z(6) * Z(6) + Z(2) * Z(5) * Z(6) +
           C(3) * Z(1) * Z(4) * Z(6);
    D[6] = -(Z(5) * Z(5) * Z(5)) + Z(1) * Z(1) * Z(6) -
           C(2) * Z(1) * Z(4) * Z(4) + Z(3) * Z(4) * Z(6) +
           C(3) * Z(2) * Z(4) * Z(5);
    D[7] = -(Z(2) * Z(2) * Z(2)) + Z(3) * Z(4) * Z(4) - Z(1) * Z(3) * Z(6) -
           C(3) * Z(1) * Z(2) * Z(5) + C(2) * Z(1) * Z(1) * Z(4);
    D[8] = -(Z(1) * Z(1) * Z(1)) + Z(2) * Z(6) * Z(6) - Z(2) * Z(3) * Z(5) -
           C(3) * Z(1) * Z(3) * Z(4) + C(2) * Z(3) * Z(3) * Z(6);
    D[9] = C(2) * Z(1) * Z(1) * Z(3) + Z(3) * Z(3) * Z(4) - Z(5) * Z(5) * Z(6) +
           Z(2) * Z(4) * Z(6);
    D[10] = -(Z(1) * Z(3) * Z(3)) + Z(2) * Z(4) * Z(4) -
            C(2) * Z(4) * Z(5) * Z(5) - Z(1) * Z(2) * Z(6);
    D[11] = -(Z(3) * Z(3) * Z(3)) + Z(1) * Z(5) * Z(5) - Z(1) * Z(2) * Z(4) -
            C(3) * Z(2) * Z(3) * Z(6) + C(2) * Z(2) * Z(2) * Z(5);
    D[12] = -(Z(1) * Z(1) * Z(2)) + Z(3) * Z(5) * Z(5) -
            C(2) * Z(5) * Z(6) * Z(6) - Z(2) * Z(3) * Z(4);
    D[13] = Z(4) * Z(5) * Z(6);  // infinity
    return D;
  }();
  return fam;
}

inline const std::vector<MultiPoly>& family_G() {
  using namespace detail;
  static const std::vector<MultiPoly> fam = [] {
    const auto& D = family_D();
    auto d = [&](int i) { return D[i == -1 ? 13 : i]; };
    const MultiPoly Dinf = D[13];
    std::vector<MultiPoly> G(13);
    G[0] = d(0) * d(0) + Dinf * Dinf;
    G[1] = -(d(7) * d(7)) + C(2) * d(0) * d(1) + C(10) * Dinf * d(1) +
           C(2) * d(2) * d(12) - C(2) * d(3) * d(11) - C(4) * d(4) * d(10) -
           C(2) * d(9) * d(5);
    G[2] = -C(2) * (d(1) * d(1)) - C(4) * d(0) * d(2) + C(6) * Dinf * d(2) -
           C(2) * d(4) * d(11) + C(2) * d(5) * d(10) - C(2) * d(6) * d(9) -
           C(2) * d(7) * d(8);
    G[3] = -(d(8) * d(8)) + C(2) * d(0) * d(3) + C(10) * Dinf * d(3) +
           C(2) * d(6) * d(10) - C(2) * d(9) * d(7) - C(4) * d(12) * d(4) -
           C(2) * d(1) * d(2);
    G[4] = -(d(2) * d(2)) + C(10) * d(0) * d(4) - C(2) * Dinf * d(4) +
           C(2) * d(5) * d(12) - C(2) * d(9) * d(8) - C(4) * d(1) * d(3) -
           C(2) * d(10) * d(7);
    G[5] = -C(2) * (d(9) * d(9)) - C(4) * d(0) * d(5) + C(6) * Dinf * d(5) -
           C(2) * d(10) * d(8) + C(2) * d(6) * d(12) - C(2) * d(2) * d(3) -
           C(2) * d(11) * d(7);
    G[6] = -C(2) * (d(3) * d(3)) - C(4) * d(0) * d(6) + C(6) * Dinf * d(6) -
           C(2) * d(12) * d(7) + C(2) * d(2) * d(4) - C(2) * d(5) * d(1) -
           C(2) * d(8) * d(11);
    G[7] = -C(2) * (d(10) * d(10)) + C(6) * d(0) * d(7) + C(4) * Dinf * d(7) -
           C(2) * d(1) * d(6) - C(2) * d(2) * d(5) - C(2) * d(8) * d(12) -
           C(2) * d(9) * d(11);
    G[8] = -C(2) * (d(4) * d(4)) + C(6) * d(0) * d(8) + C(4) * Dinf * d(8) -
           C(2) * d(3) * d(5) - C(2) * d(6) * d(2) - C(2) * d(11) * d(10) -
           C(2) * d(1) * d(7);
    G[9] = -(d(11) * d(11)) + C(2) * d(0) * d(9) + C(10) * Dinf * d(9) +
           C(2) * d(5) * d(4) - C(2) * d(1) * d(8) - C(4) * d(10) * d(12) -
           C(2) * d(3) * d(6);
    G[10] = -(d(5) * d(5)) + C(10) * d(0) * d(10) - C(2) * Dinf * d(10) +
            C(2) * d(6) * d(4) - C(2) * d(3) * d(7) - C(4) * d(9) * d(1) -
            C(2) * d(12) * d(11);
    G[11] = -C(2) * (d(12) * d(12)) + C(6) * d(0) * d(11) + C(4) * Dinf * d(11) -
            C(2) * d(9) * d(2) - C(2) * d(5) * d(6) - C(2) * d(7) * d(4) -
            C(2) * d(3) * d(8);
    G[12] = -(d(6) * d(6)) + C(10) * d(0) * d(12) - C(2) * Dinf * d(12) +
            C(2) * d(2) * d(10) - C(2) * d(1) * d(11) - C(4) * d(3) * d(9) -
            C(2) * d(4) * d(8);
    return G;
  }();
  return fam;
}

// Canonical order of the 21 quartic B-terms.
inline const std::vector<std::string>& b_names() {
  static const std::vector<std::string> names = {
      "B0_0", "B0_1", "B0_2", "B1_1", "B1_2",  "B3_1", "B3_2",
      "B9_1", "B9_2", "B12_1", "B12_2", "B10_1", "B10_2", "B4_1",
      "B4_2", "B5",   "B2",    "B6",    "B8",    "B11",   "B7"};
  return names;
}

inline const std::vector<MultiPoly>& family_B() {
  using namespace detail;
  static const std::vector<MultiPoly> fam = [] {
    std::vector<MultiPoly> B(21);
    B[0] = Z(1) * Z(2) * Z(4) * Z(5) + Z(2) * Z(3) * Z(5) * Z(6) +
           Z(3) * Z(1) * Z(6) * Z(4);                                  // B0(0)
    B[1] = Z(1) * poly_pow(Z(5), 3) + Z(2) * poly_pow(Z(6), 3) +
           Z(3) * poly_pow(Z(4), 3);                                   // B0(1)
    B[2] = poly_pow(Z(1), 3) * Z(6) + poly_pow(Z(2), 3) * Z(4) +
           poly_pow(Z(3), 3) * Z(5);                                   // B0(2)
    B[3] = Z(3) * poly_pow(Z(5), 3) + poly_pow(Z(1), 3) * Z(4) -
           Z(1) * poly_pow(Z(2), 3);                                   // B1(1)
    B[4] = Z(2) * Z(4) * Z(6) * Z(6) - Z(3) * Z(3) * Z(6) * Z(4) -
           Z(1) * Z(1) * Z(2) * Z(5);                                  // B1(2)
    B[5] = Z(2) * poly_pow(Z(4), 3) + poly_pow(Z(3), 3) * Z(6) -
           Z(3) * poly_pow(Z(1), 3);                                   // B3(1)
    B[6] = Z(1) * Z(6) * Z(5) * Z(5) - Z(2) * Z(2) * Z(5) * Z(6) -
           Z(3) * Z(3) * Z(1) * Z(4);                                  // B3(2)
    B[7] = Z(1) * poly_pow(Z(6), 3) + poly_pow(Z(2), 3) * Z(5) -
           Z(2) * poly_pow(Z(3), 3);                                   // B9(1)
    B[8] = Z(3) * Z(5) * Z(4) * Z(4) - Z(1) * Z(1) * Z(4) * Z(5) -
           Z(2) * Z(2) * Z(3) * Z(6);                                  // B9(2)
    B[9] = Z(1) * poly_pow(Z(4), 3) + poly_pow(Z(2), 3) * Z(6) +
           Z(4) * poly_pow(Z(5), 3);                                   // B12(1)
    B[10] = Z(2) * Z(5) * Z(4) * Z(4) - Z(3) * Z(3) * Z(1) * Z(5) -
            Z(6) * Z(6) * Z(3) * Z(1);                                 // B12(2)
    B[11] = Z(3) * poly_pow(Z(6), 3) + poly_pow(Z(1), 3) * Z(5) +
            Z(6) * poly_pow(Z(4), 3);                                  // B10(1)
    B[12] = Z(1) * Z(4) * Z(6) * Z(6) - Z(2) * Z(2) * Z(3) * Z(4) -
            Z(5) * Z(5) * Z(2) * Z(3);                                 // B10(2)
    B[13] = Z(2) * poly_pow(Z(5), 3) + poly_pow(Z(3), 3) * Z(4) +
            Z(5) * poly_pow(Z(6), 3);                                  // B4(1)
    B[14] = Z(3) * Z(6) * Z(5) * Z(5) - Z(1) * Z(1) * Z(2) * Z(6) -
            Z(4) * Z(4) * Z(1) * Z(2);                                 // B4(2)
    B[15] = -(Z(2) * Z(2) * Z(1) * Z(5)) + Z(4) * Z(5) * Z(6) * Z(6) +
            Z(2) * Z(3) * Z(4) * Z(4);                                 // B5
    B[16] = -(Z(1) * Z(1) * Z(3) * Z(4)) + Z(6) * Z(4) * Z(5) * Z(5) +
            Z(1) * Z(2) * Z(6) * Z(6);                                 // B2
    B[17] = -(Z(3) * Z(3) * Z(2) * Z(6)) + Z(5) * Z(6) * Z(4) * Z(4) +
            Z(3) * Z(1) * Z(5) * Z(5);                                 // B6
    B[18] = Z(2) * Z(4) * Z(5) * Z(5) + Z(1) * Z(2) * Z(3) * Z(3) +
            Z(1) * Z(1) * Z(5) * Z(6);                                 // B8
    B[19] = Z(1) * Z(6) * Z(4) * Z(4) + Z(3) * Z(1) * Z(2) * Z(2) +
            Z(3) * Z(3) * Z(4) * Z(5);                                 // B11
    B[20] = Z(3) * Z(5) * Z(6) * Z(6) + Z(2) * Z(3) * Z(1) * Z(1) +
            Z(2) * Z(2) * Z(6) * Z(4);                                 // B7
    return B;
  }();
  return fam;
}

// Composite B-terms appearing in the transformation law:
// B0 = 5 B0(0) + 2 B0(1) - 2 B0(2); Bk = Bk(1) + Bk(2) for k = 1, 3, 9;
// Bk = -Bk(1) + Bk(2) for k = 12, 10, 4.
inline MultiPoly composite_B(int k) {
  const auto& B = family_B();
  using detail::C;
  switch (k) {
    case 0: return C(5) * B[0] + C(2) * B[1] - C(2) * B[2];
    case 1: return B[3] + B[4];
    case 3: return B[5] + B[6];
    case 9: return B[7] + B[8];
    case 12: return -B[9] + B[10];
    case 10: return -B[11] + B[12];
    case 4: return -B[13] + B[14];
    case 5: return family_B()[15];
    case 2: return family_B()[16];
    case 6: return family_B()[17];
    case 8: return family_B()[18];
    case 11: return family_B()[19];
    case 7: return family_B()[20];
    default: throw std::invalid_argument("composite_B: bad index");
  }
}

// C-family in the order of the transformation law exponents:
// C0, C1, C3, C9, C12, C10, C4, C5, C2, C6, C8, C11, C7.
inline const std::vector<MultiPoly>& family_C() {
  using namespace detail;
  static const std::vector<MultiPoly> fam = [] {
    std::vector<MultiPoly> Cc(13);
    Cc[0] = -(Z(1) * Z(1) * Z(4) * Z(4) + Z(2) * Z(2) * Z(5) * Z(5) +
              Z(3) * Z(3) * Z(6) * Z(6));  // C0
    Cc[1] = Z(5) * Z(5) * Z(6) * Z(6) + C(2) * Z(2) * Z(3) * Z(4) * Z(5) +
            C(2) * Z(1) * Z(1) * Z(2) * Z(5) - C(2) * Z(3) * Z(1) * Z(4) * Z(4) -
            Z(3) * Z(3) * Z(6) * Z(4) + Z(1) * poly_pow(Z(2), 3) +
            Z(3) * poly_pow(Z(5), 3) + Z(2) * Z(4) * Z(6) * Z(6) +
            Z(1) * Z(1) * Z(3) * Z(6);  // C1
    Cc[2] = Z(4) * Z(4) * Z(5) * Z(5) + C(2) * Z(1) * Z(2) * Z(6) * Z(4) +
            C(2) * Z(3) * Z(3) * Z(1) * Z(4) - C(2) * Z(2) * Z(3) * Z(6) * Z(6) -
            Z(2) * Z(2) * Z(5) * Z(6) + Z(3) * poly_pow(Z(1), 3) +
            Z(2) * poly_pow(Z(4), 3) + Z(1) * Z(6) * Z(5) * Z(5) +
            Z(3) * Z(3) * Z(2) * Z(5);  // C3
    Cc[3] = Z(6) * Z(6) * Z(4) * Z(4) + C(2) * Z(3) * Z(1) * Z(5) * Z(6) +
            C(2) * Z(2) * Z(2) * Z(3) * Z(6) - C(2) * Z(1) * Z(2) * Z(5) * Z(5) -
            Z(1) * Z(1) * Z(4) * Z(5) + Z(2) * poly_pow(Z(3), 3) +
            Z(1) * poly_pow(Z(6), 3) + Z(3) * Z(5) * Z(4) * Z(4) +
            Z(2) * Z(2) * Z(1) * Z(4);  // C9
    Cc[4] = Z(2) * Z(2) * Z(3) * Z(3) + C(2) * Z(1) * Z(2) * Z(5) * Z(6) -
            C(2) * Z(4) * Z(4) * Z(2) * Z(5) - C(2) * Z(1) * Z(1) * Z(6) * Z(4) -
            Z(6) * Z(6) * Z(3) * Z(1) - poly_pow(Z(2), 3) * Z(6) -
            Z(3) * Z(3) * Z(1) * Z(5) + Z(4) * poly_pow(Z(5), 3) -
            Z(4) * Z(4) * Z(3) * Z(6);  // C12
    Cc[5] = Z(1) * Z(1) * Z(2) * Z(2) + C(2) * Z(3) * Z(1) * Z(4) * Z(5) -
            C(2) * Z(6) * Z(6) * Z(1) * Z(4) - C(2) * Z(3) * Z(3) * Z(5) * Z(6) -
            Z(5) * Z(5) * Z(2) * Z(3) - poly_pow(Z(1), 3) * Z(5) -
            Z(2) * Z(2) * Z(3) * Z(4) + Z(6) * poly_pow(Z(4), 3) -
            Z(6) * Z(6) * Z(2) * Z(5);  // C10
    Cc[6] = Z(3) * Z(3) * Z(1) * Z(1) + C(2) * Z(2) * Z(3) * Z(6) * Z(4) -
            C(2) * Z(5) * Z(5) * Z(3) * Z(6) - C(2) * Z(2) * Z(2) * Z(4) * Z(5) -
            Z(4) * Z(4) * Z(1) * Z(2) - poly_pow(Z(3), 3) * Z(4) -
            Z(1) * Z(1) * Z(2) * Z(6) + Z(5) * poly_pow(Z(6), 3) -
            Z(5) * Z(5) * Z(1) * Z(4);  // C4
    Cc[7] = C2(1, 2) * poly_pow(Z(2), 4) - C(2) * Z(4) * Z(5) * Z(6) * Z(6) +
            C(2) * Z(3) * Z(4) * Z(5) * Z(5) + C(2) * Z(2) * Z(3) * Z(4) * Z(4) -
            C(2) * Z(1) * Z(1) * Z(2) * Z(4) + Z(1) * Z(1) * Z(5) * Z(5);  // C5
    Cc[8] = C2(1, 2) * poly_pow(Z(1), 4) - C(2) * Z(6) * Z(4) * Z(5) * Z(5) +
            C(2) * Z(2) * Z(6) * Z(4) * Z(4) + C(2) * Z(1) * Z(2) * Z(6) * Z(6) -
            C(2) * Z(3) * Z(3) * Z(1) * Z(6) + Z(3) * Z(3) * Z(4) * Z(4);  // C2
    Cc[9] = C2(1, 2) * poly_pow(Z(3), 4) - C(2) * Z(5) * Z(6) * Z(4) * Z(4) +
            C(2) * Z(1) * Z(5) * Z(6) * Z(6) + C(2) * Z(3) * Z(1) * Z(5) * Z(5) -
            C(2) * Z(2) * Z(2) * Z(3) * Z(5) + Z(2) * Z(2) * Z(6) * Z(6);  // C6
    Cc[10] = C2(1, 2) * poly_pow(Z(5), 4) - C(2) * Z(1) * Z(2) * Z(3) * Z(3) +
             C(2) * Z(1) * Z(1) * Z(5) * Z(6) + C(2) * Z(1) * Z(5) * Z(4) * Z(4) -
             C(2) * Z(2) * Z(2) * Z(1) * Z(6) + Z(2) * Z(2) * Z(4) * Z(4);  // C8
    Cc[11] = C2(1, 2) * poly_pow(Z(4), 4) - C(2) * Z(3) * Z(1) * Z(2) * Z(2) +
             C(2) * Z(3) * Z(3) * Z(4) * Z(5) + C(2) * Z(3) * Z(4) * Z(6) * Z(6) -
             C(2) * Z(1) * Z(1) * Z(3) * Z(5) + Z(1) * Z(1) * Z(6) * Z(6);  // C11
    Cc[12] = C2(1, 2) * poly_pow(Z(6), 4) - C(2) * Z(2) * Z(3) * Z(1) * Z(1) +
             C(2) * Z(2) * Z(2) * Z(6) * Z(4) + C(2) * Z(2) * Z(6) * Z(5) * Z(5) -
             C(2) * Z(3) * Z(3) * Z(2) * Z(4) + Z(3) * Z(3) * Z(5) * Z(5);  // C7
    return Cc;
  }();
  return fam;
}

struct FormFamily {
  std::string name;
  std::vector<MultiPoly> members;
};

inline FormFamily family(const std::string& name) {
  if (name == "A") return {name, family_A()};
  if (name == "D") return {name, family_D()};
  if (name == "G") return {name, family_G()};
  if (name == "B") return {name, family_B()};
  if (name == "C") return {name, family_C()};
  throw std::invalid_argument("family: unknown name " + name);
}

// The exponent pattern of the linear-combination law for the A-family:
// phi_nu = A0 + z^nu A1 + z^{4nu} A2 + z^{9nu} A3 + z^{3nu} A4 +
//          z^{12nu} A5 + z^{10nu} A6.
constexpr int kAExp[7] = {0, 1, 4, 9, 3, 12, 10};

// phi_nu and delta_nu as polynomials; nu in 0..12, or 13 for infinity.
inline MultiPoly phi_linear(int nu) {
  const auto& A = family_A();
  if (nu == 13) {
    // phi_infinity = sqrt13 * A0; squared below it gives w_inf = 13 A0^2
    return field_constants().sqrt13 * A[0];
  }
  MultiPoly p;
  for (int k = 0; k < 7; ++k) p += zeta_pow(long(kAExp[k]) * nu) * A[k];
  return p;
}

inline MultiPoly w_poly(int nu) {
  MultiPoly f = phi_linear(nu);
  return f * f;
}

inline MultiPoly delta_poly(int nu) {
  const auto& G = family_G();
  if (nu == 13) return Cyclo(169) * G[0];
  MultiPoly p = Cyclo(-13) * G[0];
  for (int k = 1; k <= 12; ++k) p += zeta_pow(long(k) * nu) * G[k];
  return p;
}

struct WDelta {
  MultiPoly w, delta;
};
inline WDelta w_delta(int nu) { return {w_poly(nu), delta_poly(nu)}; }

inline const MultiPoly& phi4() {
  using namespace detail;
  static const MultiPoly p = [] {
    MultiPoly q =
        (Z(3) * poly_pow(Z(4), 3) + Z(1) * poly_pow(Z(5), 3) +
         Z(2) * poly_pow(Z(6), 3)) -
        (Z(6) * poly_pow(Z(1), 3) + Z(4) * poly_pow(Z(2), 3) +
         Z(5) * poly_pow(Z(3), 3)) +
        C(3) * (Z(1) * Z(2) * Z(4) * Z(5) + Z(2) * Z(3) * Z(5) * Z(6) +
                Z(3) * Z(1) * Z(6) * Z(4));
    return q;
  }();
  return p;
}

// Orbit sum Phi_{m,n} = sum_{nu=0..12} w_nu^m delta_nu^n + w_inf^m delta_inf^n,
// expanded exactly. Uses the Galois-trace identity: for nu = 1..12 the
// summand is the conjugate of the nu = 1 summand, so the sum over those nu is
// the coefficient-wise field trace of w_1^m delta_1^n.
inline MultiPoly phi_mn_symbolic(int m, int n) {
  if (m < 0 || n < 0 || 4 * m + 6 * n > 12)
    throw std::invalid_argument("phi_mn_symbolic: degree above 12");
  MultiPoly term0 = poly_pow(w_poly(0), m) * poly_pow(delta_poly(0), n);
  MultiPoly term1 = poly_pow(w_poly(1), m) * poly_pow(delta_poly(1), n);
  MultiPoly terminf = poly_pow(w_poly(13), m) * poly_pow(delta_poly(13), n);
  MultiPoly out = term0 + coeff_trace(term1) + terminf;
  if (!out.has_rational_coeffs())
    throw std::logic_error("phi_mn_symbolic: non-rational coefficients");
  return out;
}

// One quartic of the Klein system for X(p): indices mod p with
// E_{-t} = -E_t and E_0 = 0, so E_t for t > (p-1)/2 folds to -E_{p-t}.
inline MultiPoly klein_quartic(int p, int a, int b, int c, int d) {
  const int half = (p - 1) / 2;
  if (half > kNumVars)
    throw std::invalid_argument("klein_quartic: too many variables");
  auto E = [&](int t) -> MultiPoly {
    t %= p;
    if (t < 0) t += p;
    if (t == 0) return MultiPoly();
    if (t <= half) return MultiPoly::var(t - 1);
    return -MultiPoly::var(p - t - 1);
  };
  auto quad = [&](int s, int t, int u, int v) {
    return E(s) * E(t) * E(u) * E(v);
  };
  return quad(a + b, a - b, c + d, c - d) + quad(a + c, a - c, d + b, d - b) +
         quad(a + d, a - d, b + c, b - c);
}

struct KleinQuartic {
  std::array<int, 4> idx;
  MultiPoly poly;
};

// All distinct quartics of the system, deduplicated up to sign, in
// lexicographic order of their first index quadruple.
inline std::vector<KleinQuartic> klein_system(int p) {
  const int half = (p - 1) / 2;
  std::vector<KleinQuartic> out;
  for (int a = 0; a <= half; ++a)
    for (int b = a + 1; b <= half; ++b)
      for (int c = b + 1; c <= half; ++c)
        for (int d = c + 1; d <= half; ++d) {
          MultiPoly q = klein_quartic(p, a, b, c, d);
          if (q.is_zero()) continue;
          bool dup = false;
          for (const auto& kq : out)
            if (kq.poly == q || kq.poly == -q) {
              dup = true;
              break;
            }
          if (!dup) out.push_back({{a, b, c, d}, q});
        }
  return out;
}

struct BPhiEntry {
  int b_index;          // position in the canonical B order
  std::array<int, 4> phi;  // quartic indices
  int sign;             // +1 or -1
};

// The 21 identifications between B-terms and Klein quartics under the
// variable matching z1..z6 <-> (E1, E3, E4, E5, E2, E6) with a scalar whose
// fourth power is -1 (tracked as an overall sign on degree-4 forms) and an
// extra sign on the images of z1 and z2.
inline const std::vector<BPhiEntry>& b_phi_table() {
  static const std::vector<BPhiEntry> t = {
      {0, {1, 2, 3, 5}, +1},  {1, {0, 2, 5, 6}, -1},  {2, {0, 1, 3, 4}, -1},
      {3, {0, 1, 2, 3}, +1},  {4, {0, 1, 4, 6}, +1},  {5, {0, 1, 4, 5}, +1},
      {6, {0, 2, 3, 4}, -1},  {7, {0, 3, 4, 6}, -1},  {8, {0, 1, 3, 5}, -1},
      {9, {0, 2, 3, 5}, +1},  {10, {0, 4, 5, 6}, +1}, {11, {0, 1, 5, 6}, -1},
      {12, {0, 2, 3, 6}, +1}, {13, {0, 2, 4, 6}, -1}, {14, {0, 1, 2, 5}, +1},
      {15, {0, 3, 5, 6}, +1}, {16, {0, 1, 2, 6}, -1}, {17, {0, 2, 4, 5}, -1},
      {18, {0, 1, 2, 4}, -1}, {19, {0, 3, 4, 5}, -1}, {20, {0, 1, 3, 6}, -1}};
  return t;
}

// Substitute z_i -> (scalar) E_{sigma(i)} into a degree-4 form, tracking the
// net scalar as a sign. Result lives in the same six variables read as
// E1..E6.
inline MultiPoly b_to_e_substitution(const MultiPoly& p) {
  // z1->E1, z2->E3, z3->E4, z4->E5, z5->E2, z6->E6 (0-based slots)
  static const int slot[6] = {0, 2, 3, 4, 1, 5};
  MultiPoly r;
  for (const auto& [m, c] : p.terms) {
    if (m.degree() != 4)
      throw std::invalid_argument("b_to_e_substitution: degree must be 4");
    Monomial nm;
    for (int i = 0; i < kNumVars; ++i) nm.e[slot[i]] += m.e[i];
    // (e^{pi i/4})^4 = -1 overall; z1 and z2 carry an extra -1 each
    int sign = -1;
    if ((m.e[0] + m.e[1]) % 2) sign = -sign;
    r += MultiPoly::term(nm, Cyclo(sign) * c);
  }
  return r;
}

// Verify all 21 identifications; returns the table. Throws with the failing
// pair on mismatch.
inline std::vector<BPhiEntry> b_phi_correspondence() {
  const auto& B = family_B();
  for (const auto& ent : b_phi_table()) {
    MultiPoly lhs = b_to_e_substitution(B[ent.b_index]);
    MultiPoly rhs = Cyclo(ent.sign) *
                    klein_quartic(13, ent.phi[0], ent.phi[1], ent.phi[2], ent.phi[3]);
    if (!(lhs == rhs))
      throw std::logic_error("b_phi_correspondence: mismatch at " +
                             b_names()[ent.b_index]);
  }
  return b_phi_table();
}

struct Rep21 {
  LinearMap Stilde, Ttilde;  // size 21
};

// Eigenvalue exponents of T on the ordered B basis.
constexpr int kTEigen[21] = {0, 0, 0, 1, 1, 3, 3, 9, 9, 12, 12,
                             10, 10, 4, 4, 5, 2, 6, 8, 11, 7};

inline const Rep21& rep21() {
  static const Rep21 rep = [] {
    const auto& B = family_B();
    const auto& M = matrices();
    Rep21 r;
    r.Stilde = LinearMap(21);
    for (int i = 0; i < 21; ++i) {
      std::vector<Cyclo> col = express_in_basis(apply_linear(M.S, B[i]), B);
      for (int j = 0; j < 21; ++j) r.Stilde.at(j, i) = col[j];
    }
    r.Ttilde = LinearMap(21);
    for (int i = 0; i < 21; ++i) r.Ttilde.at(i, i) = zeta_pow(kTEigen[i]);
    // double-entry check of the diagonal against the basis expansion
    for (int i = 0; i < 21; ++i) {
      std::vector<Cyclo> col = express_in_basis(apply_linear(M.T, B[i]), B);
      for (int j = 0; j < 21; ++j)
        if (!(col[j] == r.Ttilde.at(j, i)))
          throw std::logic_error("rep21: T eigenvalue table mismatch");
    }
    LinearMap I = LinearMap::identity(21);
    if (!(r.Stilde * r.Stilde == I)) throw std::logic_error("rep21: S~^2 != I");
    if (!(map_pow(r.Ttilde, 13) == I)) throw std::logic_error("rep21: T~^13 != I");
    if (!(map_pow(r.Stilde * r.Ttilde, 3) == I))
      throw std::logic_error("rep21: (S~T~)^3 != I");
    return r;
  }();
  return rep;
}

}  // namespace sl213
