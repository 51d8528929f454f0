#pragma once

// Exact truncated q-expansions with fractional exponents. A QSeries stores
// coefficients on the grid q^(1/den) as a map from scaled integer exponents
// to cyclotomic numbers, together with a truncation bound: coefficients are
// known exactly for all scaled exponents strictly below `trunc`. Negative
// exponents are allowed. All arithmetic propagates the truncation honestly:
//   trunc(a+b) = min(trunc(a), trunc(b))
//   trunc(a*b) = min(trunc(a)+val(b), trunc(b)+val(a)).

#include <sl213/cyclo.hpp>
#include <sl213/mpoly.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl213 {

constexpr long kDefaultDen = 312;  // lcm(104, 24)
constexpr long kInfTrunc = std::numeric_limits<long>::max() / 4;

namespace detail {
inline long add_trunc(long a, long b) {
  if (a >= kInfTrunc || b >= kInfTrunc) {
    long s = a + b;
    return s >= kInfTrunc ? kInfTrunc : s;
  }
  return a + b;
}
}  // namespace detail

struct QSeries {
  long den = kDefaultDen;  // exponent denominator
  long trunc = 0;          // scaled bound: exact for exponents < trunc
  std::map<long, Cyclo> coeffs;

  void cleanup() {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
      if (it->first >= trunc || it->second.is_zero())
        it = coeffs.erase(it);
      else
        ++it;
    }
  }
  bool is_zero() const { return coeffs.empty(); }
  // scaled valuation; for the (truncation-)zero series, the truncation bound
  long valuation() const {
    return coeffs.empty() ? trunc : coeffs.begin()->first;
  }
  const Cyclo& lead() const {
    if (coeffs.empty()) throw std::domain_error("lead of zero series");
    return coeffs.begin()->second;
  }
  // coefficient of q^(num/d); zero off the stored grid
  Cyclo coeff(long num, long d = 1) const {
    if ((num * den) % d != 0) return Cyclo(0);
    auto it = coeffs.find(num * den / d);
    return it == coeffs.end() ? Cyclo(0) : it->second;
  }
  bool has_rational_coeffs() const {
    for (const auto& [e, c] : coeffs)
      if (!c.is_rational()) return false;
    return true;
  }
  std::string str(int max_terms = 8) const {
    std::ostringstream os;
    int n = 0;
    for (const auto& [e, c] : coeffs) {
      if (n++ >= max_terms) {
        os << "+ ...";
        break;
      }
      os << "(" << c << ")q^(" << e << "/" << den << ") ";
    }
    if (coeffs.empty()) os << "0 ";
    os << "+ O(q^(" << trunc << "/" << den << "))";
    return os.str();
  }
};

inline QSeries qs_zero(long den, long trunc) { return {den, trunc, {}}; }

// the exact constant c (known to all orders)
inline QSeries qs_const(const Cyclo& c, long den = kDefaultDen) {
  QSeries s{den, kInfTrunc, {}};
  if (!c.is_zero()) s.coeffs[0] = c;
  return s;
}

// the exact monomial c * q^(num/d)
inline QSeries qs_monomial(const Cyclo& c, long num, long d,
                           long den = kDefaultDen) {
  if ((num * den) % d != 0)
    throw std::invalid_argument("qs_monomial: exponent off the grid");
  QSeries s{den, kInfTrunc, {}};
  if (!c.is_zero()) s.coeffs[num * den / d] = c;
  return s;
}

inline QSeries rescale_to(const QSeries& a, long newden) {
  if (newden == a.den) return a;
  if (newden % a.den != 0)
    throw std::invalid_argument("rescale_to: incompatible grids");
  long f = newden / a.den;
  QSeries r{newden,
            a.trunc >= kInfTrunc ? kInfTrunc : a.trunc * f,
            {}};
  for (const auto& [e, c] : a.coeffs) r.coeffs[e * f] = c;
  return r;
}

inline void unify(QSeries& a, QSeries& b) {
  if (a.den == b.den) return;
  long l = std::lcm(a.den, b.den);
  a = rescale_to(a, l);
  b = rescale_to(b, l);
}

inline QSeries operator+(QSeries a, QSeries b) {
  unify(a, b);
  QSeries r{a.den, std::min(a.trunc, b.trunc), std::move(a.coeffs)};
  for (const auto& [e, c] : b.coeffs) r.coeffs[e] += c;
  r.cleanup();
  return r;
}

inline QSeries operator-(const QSeries& a) {
  QSeries r{a.den, a.trunc, {}};
  for (const auto& [e, c] : a.coeffs) r.coeffs[e] = -c;
  return r;
}

inline QSeries operator-(const QSeries& a, const QSeries& b) {
  return a + (-b);
}

inline QSeries operator*(const Cyclo& s, const QSeries& a) {
  QSeries r{a.den, a.trunc, {}};
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.coeffs) r.coeffs[e] = s * c;
  r.cleanup();
  return r;
}

inline QSeries operator*(QSeries a, QSeries b) {
  unify(a, b);
  long t = std::min(detail::add_trunc(a.trunc, b.valuation()),
                    detail::add_trunc(b.trunc, a.valuation()));
  QSeries r{a.den, t, {}};
  for (const auto& [ea, ca] : a.coeffs) {
    for (const auto& [eb, cb] : b.coeffs) {
      if (t < kInfTrunc && ea + eb >= t) break;  // eb ascending
      r.coeffs[ea + eb] += ca * cb;
    }
  }
  r.cleanup();
  return r;
}

// multiply by the exact monomial q^(k/den) (k may be negative)
inline QSeries shift(const QSeries& a, long k) {
  QSeries r{a.den, detail::add_trunc(a.trunc, k), {}};
  for (const auto& [e, c] : a.coeffs) r.coeffs[e + k] = c;
  return r;
}

inline QSeries qs_pow(const QSeries& a, unsigned long n) {
  if (n == 0) return qs_const(Cyclo(1), a.den);
  QSeries r = a, base = a;
  n -= 1;
  while (n) {
    if (n & 1) r = r * base;
    if (n >>= 1) base = base * base;
  }
  return r;
}

// drop knowledge beyond a smaller truncation
inline QSeries truncate(QSeries a, long t) {
  if (t < a.trunc) {
    a.trunc = t;
    a.cleanup();
  }
  return a;
}

// reciprocal via the geometric series; requires a nonzero leading term
inline QSeries recip(const QSeries& a) {
  if (a.is_zero()) throw std::domain_error("recip of zero series");
  long v = a.valuation();
  Cyclo cinv = inverse(a.lead());
  long m = a.trunc >= kInfTrunc ? kInfTrunc : a.trunc - v;  // relative precision
  // u = a / (lead * q^v) - 1 has positive valuation
  QSeries u = cinv * shift(a, -v);
  u.trunc = m;
  u.coeffs.erase(0);
  u.cleanup();
  if (!u.is_zero() && m >= kInfTrunc)
    throw std::invalid_argument("recip: truncate the series first");
  QSeries r = qs_const(Cyclo(1), a.den);
  r.trunc = m;
  QSeries term = r;
  while (!term.is_zero()) {
    term = truncate(term * (-u), m);
    r = r + term;
    r.trunc = m;  // geometric tail is controlled by m only
  }
  r.cleanup();
  return cinv * shift(r, v >= kInfTrunc ? 0 : -v);
}

// substitute q -> q^f (for forms in Nz); f >= 1
inline QSeries scale_exponent(const QSeries& a, long f) {
  if (f < 1) throw std::invalid_argument("scale_exponent: factor must be >= 1");
  QSeries r{a.den, a.trunc >= kInfTrunc ? kInfTrunc : a.trunc * f, {}};
  for (const auto& [e, c] : a.coeffs) r.coeffs[e * f] = c;
  return r;
}

// identical known prefixes (up to the common truncation)
inline bool agrees(const QSeries& a, const QSeries& b) {
  return (a - b).is_zero();
}

// ---- named series -------------------------------------------------------

// finite q-Pochhammer (q^(a/den); q^(step/den)) up to the truncation
inline QSeries pochhammer(long a, long step, long den, long trunc) {
  QSeries r = qs_const(Cyclo(1), den);
  r.trunc = trunc;
  for (long e = a; e < trunc; e += step) {
    QSeries f = qs_const(Cyclo(1), den);
    f.trunc = trunc;
    f.coeffs[e] = Cyclo(-1);
    r = r * f;
    r.trunc = trunc;
    r.cleanup();
  }
  return r;
}

// Dedekind eta = q^(1/24) prod (1 - q^n)
inline QSeries eta(long den, long trunc) {
  if (den % 24 != 0) throw std::invalid_argument("eta: 24 must divide den");
  return shift(pochhammer(den, den, den, trunc), den / 24);
}

namespace detail {
inline Rational sigma_pow(long n, int k) {
  Rational s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      long p = 1;
      for (int i = 0; i < k; ++i) p *= d;
      s += p;
    }
  return s;
}
}  // namespace detail

// normalized Eisenstein series E4 or E6
inline QSeries eisenstein(int k, long den, long trunc) {
  if (k != 4 && k != 6) throw std::invalid_argument("eisenstein: k must be 4 or 6");
  QSeries r{den, trunc, {}};
  r.coeffs[0] = Cyclo(1);
  long factor = (k == 4) ? 240 : -504;
  for (long n = 1; n * den < trunc; ++n)
    r.coeffs[n * den] = Cyclo(Rational(factor) * detail::sigma_pow(n, k - 1));
  r.cleanup();
  return r;
}

inline QSeries delta(long den, long trunc) {
  // eta^24; relative precision is preserved by powers, so build eta directly
  return qs_pow(eta(den, trunc), 24);
}

inline QSeries j_invariant(long den, long trunc) {
  QSeries e4 = eisenstein(4, den, trunc);
  return qs_pow(e4, 3) * recip(delta(den, trunc));
}

// theta constant with characteristic [l/k; 1] at (0, kz), phase dropped:
// q^(l^2/8k) (q^((k-l)/2); q^k)(q^((k+l)/2); q^k)(q^k; q^k)
inline QSeries theta_char(long l, long k, long den, long trunc) {
  if (l <= 0 || l >= k || l % 2 == 0 || k % 2 == 0)
    throw std::invalid_argument("theta_char: need odd 0 < l < k");
  if (den % (8 * k) != 0)
    throw std::invalid_argument("theta_char: exponent grid incompatible");
  QSeries p = pochhammer((k - l) / 2 * den, k * den, den, trunc) *
              pochhammer((k + l) / 2 * den, k * den, den, trunc) *
              pochhammer(k * den, k * den, den, trunc);
  p.trunc = trunc;
  p.cleanup();
  return shift(p, l * l * den / (8 * k));
}

// the six theta constants of order 13 from their signed sums:
// a_i = sign_i q^(l^2/104) sum_n (-1)^n q^((13n^2+ln)/2)
inline QSeries theta13(int i, long den = kDefaultDen, long trunc = 0) {
  if (i < 1 || i > 6) throw std::invalid_argument("theta13: index 1..6");
  if (den % 104 != 0) throw std::invalid_argument("theta13: 104 must divide den");
  static const long lv[6] = {11, 7, 5, 3, 9, 1};
  long l = lv[i - 1];
  int sign = (i == 4) ? -1 : 1;
  QSeries r{den, trunc, {}};
  long base = l * l * den / 104;
  for (long n = -1;; --n) {
    long e = base + (13 * n * n + l * n) * den / 2;
    if (e >= trunc && n < -2) break;
    if (e < trunc) r.coeffs[e] += Cyclo(((n % 2) ? -1 : 1) * sign);
  }
  for (long n = 0;; ++n) {
    long e = base + (13 * n * n + l * n) * den / 2;
    if (e >= trunc && n > 2) break;
    if (e < trunc) r.coeffs[e] += Cyclo(((n % 2) ? -1 : 1) * sign);
  }
  r.cleanup();
  return r;
}

// level-4 theta forms: sums of q^(x^2/4) over even / odd integers x
inline QSeries theta_level4(int j, long den, long trunc) {
  if (den % 4 != 0) throw std::invalid_argument("theta_level4: 4 must divide den");
  QSeries r{den, trunc, {}};
  for (long x = (j == 0) ? 0 : 1;; x += 2) {
    long e = x * x * den / 4;
    if (e >= trunc) break;
    r.coeffs[e] += Cyclo(x == 0 ? 1 : 2);  // +/- x fold together
  }
  r.cleanup();
  return r;
}

// level-3 theta forms: sums over the hexagonal lattice
inline QSeries theta_level3(int j, long den, long trunc) {
  if (den % 3 != 0) throw std::invalid_argument("theta_level3: 3 must divide den");
  QSeries r{den, trunc, {}};
  long qmax = trunc / den + 2;
  long R = long(std::sqrt(double(2 * qmax))) + 3;
  for (long x = -R; x <= R; ++x)
    for (long y = -R; y <= R; ++y) {
      long e;
      if (j == 0)
        e = (x * x - x * y + y * y) * den;
      else
        e = den / 3 + (x * x - x * y + y * y + x - y) * den;
      if (e < trunc) r.coeffs[e] += Cyclo(1);
    }
  r.cleanup();
  return r;
}

// Hauptmodul tau_N = (eta(z)/eta(Nz))^e, e = 24, 12, 6, 4, 2
inline QSeries hauptmodul(int N, long den, long trunc) {
  long e;
  switch (N) {
    case 2: e = 24; break;
    case 3: e = 12; break;
    case 5: e = 6; break;
    case 7: e = 4; break;
    case 13: e = 2; break;
    default: throw std::invalid_argument("hauptmodul: N must be 2,3,5,7,13");
  }
  // build eta deep enough that the result is exact below `trunc`
  long margin = e * (N - 1) * den / 24;
  QSeries et = eta(den, trunc + den / 24 + margin);
  QSeries ratio = et * recip(scale_exponent(et, N));
  QSeries r = qs_pow(ratio, e);
  return truncate(r, trunc);
}

// evaluate a six-variable polynomial on an assignment of series
inline QSeries poly_eval(const MultiPoly& p, const std::vector<QSeries>& a) {
  if (a.size() != kNumVars)
    throw std::invalid_argument("poly_eval: need six series");
  long den = 1;
  for (const auto& s : a) den = std::lcm(den, s.den);
  // per-variable power caches
  std::vector<std::vector<QSeries>> powers(kNumVars);
  for (int i = 0; i < kNumVars; ++i)
    powers[i].push_back(qs_const(Cyclo(1), den));
  auto var_pow = [&](int i, int e) -> const QSeries& {
    while (int(powers[i].size()) <= e)
      powers[i].push_back(powers[i].back() * a[i]);
    return powers[i][e];
  };
  bool first = true;
  QSeries sum;
  for (const auto& [m, c] : p.terms) {
    QSeries t = qs_const(c, den);
    for (int i = 0; i < kNumVars; ++i)
      if (m.e[i]) t = t * var_pow(i, m.e[i]);
    sum = first ? t : sum + t;
    first = false;
  }
  if (first) return qs_zero(den, kInfTrunc);
  return sum;
}

}  // namespace sl213
