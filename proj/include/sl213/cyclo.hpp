#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta), zeta = exp(2*pi*i/13).
// Elements are stored in the power basis {1, zeta, ..., zeta^11} with the
// reduction zeta^12 = -(1 + zeta + ... + zeta^11) always applied, so equality
// is coordinate-wise.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sl213 {

using Rational = mpq_class;

struct Cyclo {
  std::array<Rational, 12> c{};  // c[0] + c[1]*zeta + ... + c[11]*zeta^11

  Cyclo() = default;
  Cyclo(const Rational& r) { c[0] = r; }
  Cyclo(long n) { c[0] = n; }
  Cyclo(int n) { c[0] = n; }

  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (int i = 1; i < 12; ++i)
      if (c[i] != 0) return false;
    return true;
  }
  const Rational& rational_part() const { return c[0]; }

  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c == b.c; }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  Cyclo& operator+=(const Cyclo& o) {
    for (int i = 0; i < 12; ++i) c[i] += o.c[i];
    return *this;
  }
  Cyclo& operator-=(const Cyclo& o) {
    for (int i = 0; i < 12; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator-(const Cyclo& a) {
    Cyclo r;
    for (int i = 0; i < 12; ++i) r.c[i] = -a.c[i];
    return r;
  }

  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    std::array<Rational, 13> v{};
    for (int i = 0; i < 12; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < 12; ++j) {
        if (b.c[j] == 0) continue;
        v[(i + j) % 13] += a.c[i] * b.c[j];
      }
    }
    Cyclo r;
    for (int k = 0; k < 12; ++k) r.c[k] = v[k] - v[12];
    return r;
  }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  friend Cyclo operator*(const Rational& s, const Cyclo& a) {
    Cyclo r;
    for (int i = 0; i < 12; ++i) r.c[i] = s * a.c[i];
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 12; ++i) {
      if (c[i] == 0) continue;
      if (!first) os << " + ";
      os << c[i].get_str();
      if (i > 0) os << "*z^" << i;
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Cyclo& a) {
    return os << a.str();
  }
};

// zeta^k for any integer k (reduced mod 13).
inline Cyclo zeta_pow(long k) {
  k %= 13;
  if (k < 0) k += 13;
  Cyclo r;
  if (k == 12) {
    for (int i = 0; i < 12; ++i) r.c[i] = -1;
  } else {
    r.c[k] = 1;
  }
  return r;
}

// Field automorphism zeta -> zeta^k, gcd(k,13) = 1.
inline Cyclo galois(long k, const Cyclo& a) {
  k %= 13;
  if (k < 0) k += 13;
  if (k == 0) throw std::invalid_argument("galois: exponent divisible by 13");
  std::array<Rational, 13> v{};
  for (int i = 0; i < 12; ++i) v[(i * k) % 13] += a.c[i];
  Cyclo r;
  for (int j = 0; j < 12; ++j) r.c[j] = v[j] - v[12];
  return r;
}

// Field trace down to Q: Tr(1) = 12, Tr(zeta^i) = -1 for i != 0 mod 13.
inline Rational field_trace(const Cyclo& a) {
  Rational t = 12 * a.c[0];
  for (int i = 1; i < 12; ++i) t -= a.c[i];
  return t;
}

// Multiplicative inverse via the 12x12 linear system a*x = 1 over Q.
inline Cyclo inverse(const Cyclo& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  // Column j holds the coordinates of a*zeta^j; augmented with e_0.
  Rational m[12][13];
  for (int j = 0; j < 12; ++j) {
    Cyclo col = a * zeta_pow(j);
    for (int i = 0; i < 12; ++i) m[i][j] = col.c[i];
  }
  for (int i = 0; i < 12; ++i) m[i][12] = 0;
  m[0][12] = 1;

  int row = 0;
  std::array<int, 12> pivot_col{};
  for (int col = 0; col < 12 && row < 12; ++col) {
    int p = -1;
    for (int r = row; r < 12; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    for (int k = 0; k < 13; ++k) std::swap(m[p][k], m[row][k]);
    Rational inv_p = 1 / m[row][col];
    for (int k = col; k < 13; ++k) m[row][k] *= inv_p;
    for (int r = 0; r < 12; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int k = col; k < 13; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col[row] = col;
    ++row;
  }
  if (row < 12) throw std::logic_error("inverse: singular system");
  Cyclo x;
  for (int r = 0; r < 12; ++r) x.c[pivot_col[r]] = m[r][12];
  return x;
}

inline Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * inverse(b); }

inline Cyclo cyclo_pow(Cyclo a, unsigned long e) {
  Cyclo r(1);
  while (e) {
    if (e & 1) r *= a;
    a *= a;
    e >>= 1;
  }
  return r;
}

// The quadratic and quartic subfield constants.
//   theta_i are the Gauss periods of length 3; each satisfies
//   z^4 + z^3 + 2z^2 - 4z + 3 = 0 and theta1+theta3-theta2-theta4 = sqrt(13).
//   r0, rInf, r1..r4 are the coefficients in the cubic family transformation
//   law; the signs of r1..r4 are pinned by explicit formulas and the square
//   relations are asserted at construction.
struct FieldConstants {
  Cyclo sqrt13;
  Cyclo theta1, theta2, theta3, theta4;
  Cyclo alpha, beta, gamma;
  Cyclo r0, rInf, r1, r2, r3, r4;
};

inline const FieldConstants& field_constants() {
  static const FieldConstants fc = [] {
    FieldConstants f;
    auto z = [](long k) { return zeta_pow(k); };
    f.theta1 = z(1) + z(3) + z(9);
    f.theta2 = z(2) + z(6) + z(5);
    f.theta3 = z(4) + z(12) + z(10);
    f.theta4 = z(8) + z(11) + z(7);
    f.sqrt13 = f.theta1 + f.theta3 - f.theta2 - f.theta4;
    f.alpha = z(1) + z(12) - z(5) - z(8);
    f.beta = z(3) + z(10) - z(2) - z(11);
    f.gamma = z(9) + z(4) - z(6) - z(7);
    f.r0 = Rational(2) * (f.theta1 - f.theta3) - Rational(3) * (f.theta2 - f.theta4);
    f.rInf = Rational(2) * (f.theta4 - f.theta2) - Rational(3) * (f.theta1 - f.theta3);
    f.r1 = f.theta1 - f.theta3 + f.theta2 - f.theta4;
    f.r3 = -(f.theta1 - f.theta3 - f.theta2 + f.theta4);
    Rational half(1, 2);
    f.r2 = half * (Rational(4) * f.theta1 + Cyclo(1) - f.sqrt13);
    f.r4 = half * (Rational(4) * f.theta2 + Cyclo(1) + f.sqrt13);

    auto check = [](bool ok, const char* what) {
      if (!ok) throw std::logic_error(std::string("field_constants: ") + what);
    };
    check(f.sqrt13 * f.sqrt13 == Cyclo(13), "sqrt13^2 != 13");
    for (const Cyclo* th : {&f.theta1, &f.theta2, &f.theta3, &f.theta4}) {
      Cyclo t = *th;
      Cyclo val = cyclo_pow(t, 4) + cyclo_pow(t, 3) + Rational(2) * (t * t) -
                  Rational(4) * t + Cyclo(3);
      check(val.is_zero(), "theta minimal polynomial");
    }
    check(f.alpha + f.beta + f.gamma == f.sqrt13, "alpha+beta+gamma != sqrt13");
    check(f.r1 * f.r1 == Cyclo(-13) - Rational(2) * f.sqrt13, "r1^2");
    check(f.r3 * f.r3 == Cyclo(-13) + Rational(2) * f.sqrt13, "r3^2");
    Rational half2(1, 2);
    check(f.r2 * f.r2 == half2 * (Cyclo(-13) + Rational(3) * f.sqrt13), "r2^2");
    check(f.r4 * f.r4 == half2 * (Cyclo(-13) - Rational(3) * f.sqrt13), "r4^2");
    return f;
  }();
  return fc;
}

}  // namespace sl213
