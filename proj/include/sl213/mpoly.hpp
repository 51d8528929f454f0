#pragma once

// Sparse multivariate polynomials in z1..z6 over Q(zeta_13), linear changes
// of variables by square matrices, and exact linear algebra for expressing a
// polynomial in a given basis.

#include <sl213/cyclo.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace sl213 {

constexpr int kNumVars = 6;

struct Monomial {
  std::array<uint8_t, kNumVars> e{};
  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MultiPoly {
  std::map<Monomial, Cyclo> terms;  // no zero coefficients stored

  MultiPoly() = default;
  explicit MultiPoly(const Cyclo& c) {
    if (!c.is_zero()) terms[Monomial{}] = c;
  }

  static MultiPoly var(int i, int pow = 1) {
    MultiPoly p;
    Monomial m;
    m.e[i] = static_cast<uint8_t>(pow);
    p.terms[m] = Cyclo(1);
    return p;
  }
  static MultiPoly term(const Monomial& m, const Cyclo& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms[m] = c;
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
  }
  bool is_homogeneous() const {
    if (terms.empty()) return true;
    int d = terms.begin()->first.degree();
    for (const auto& [m, c] : terms)
      if (m.degree() != d) return false;
    return true;
  }
  Cyclo coeff(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Cyclo(0) : it->second;
  }
  Cyclo coeff(std::initializer_list<int> exps) const {
    Monomial m;
    int i = 0;
    for (int x : exps) m.e[i++] = static_cast<uint8_t>(x);
    return coeff(m);
  }
  bool has_rational_coeffs() const {
    for (const auto& [m, c] : terms)
      if (!c.is_rational()) return false;
    return true;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms) {
      auto it = terms.find(m);
      if (it == terms.end()) {
        terms.emplace(m, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
      }
    }
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms) {
      auto it = terms.find(m);
      if (it == terms.end()) {
        terms.emplace(m, -c);
      } else {
        it->second -= c;
        if (it->second.is_zero()) terms.erase(it);
      }
    }
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r;
    for (const auto& [m, c] : a.terms) r.terms.emplace(m, -c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i)
          m.e[i] = static_cast<uint8_t>(ma.e[i] + mb.e[i]);
        auto it = r.terms.find(m);
        if (it == r.terms.end()) {
          Cyclo c = ca * cb;
          if (!c.is_zero()) r.terms.emplace(m, std::move(c));
        } else {
          it->second += ca * cb;
          if (it->second.is_zero()) r.terms.erase(it);
        }
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator*(const Cyclo& s, const MultiPoly& p) {
    MultiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : p.terms) {
      Cyclo x = s * c;
      if (!x.is_zero()) r.terms.emplace(m, std::move(x));
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms == b.terms;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      for (int i = 0; i < kNumVars; ++i)
        if (m.e[i]) {
          s += "*z" + std::to_string(i + 1);
          if (m.e[i] > 1) s += "^" + std::to_string(int(m.e[i]));
        }
    }
    return s;
  }
};

inline MultiPoly poly_pow(const MultiPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
  MultiPoly r(Cyclo(1));
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// Apply a Galois automorphism to every coefficient.
inline MultiPoly coeff_galois(long k, const MultiPoly& p) {
  MultiPoly r;
  for (const auto& [m, c] : p.terms) r.terms.emplace(m, galois(k, c));
  return r;
}

// Coefficient-wise field trace; result has rational coefficients.
inline MultiPoly coeff_trace(const MultiPoly& p) {
  MultiPoly r;
  for (const auto& [m, c] : p.terms) {
    Cyclo t(field_trace(c));
    if (!t.is_zero()) r.terms.emplace(m, std::move(t));
  }
  return r;
}

struct LinearMap {
  int n = 0;
  std::vector<Cyclo> a;  // row-major, n*n

  LinearMap() = default;
  explicit LinearMap(int size) : n(size), a(size_t(size) * size) {}

  Cyclo& at(int i, int j) { return a[size_t(i) * n + j]; }
  const Cyclo& at(int i, int j) const { return a[size_t(i) * n + j]; }

  static LinearMap identity(int size) {
    LinearMap m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = Cyclo(1);
    return m;
  }

  friend LinearMap operator*(const LinearMap& x, const LinearMap& y) {
    if (x.n != y.n) throw std::invalid_argument("LinearMap: size mismatch");
    LinearMap r(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (int j = 0; j < x.n; ++j) {
          if (y.at(k, j).is_zero()) continue;
          r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
      }
    return r;
  }
  friend LinearMap operator-(const LinearMap& x) {
    LinearMap r(x.n);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = -x.a[i];
    return r;
  }
  friend bool operator==(const LinearMap& x, const LinearMap& y) {
    return x.n == y.n && x.a == y.a;
  }

  friend LinearMap operator*(const Cyclo& s, const LinearMap& x) {
    LinearMap r(x.n);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = s * x.a[i];
    return r;
  }

  Cyclo trace() const {
    Cyclo t;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
  }
};

inline LinearMap map_pow(const LinearMap& m, int e) {
  if (e < 0) throw std::invalid_argument("map_pow: negative exponent");
  LinearMap r = LinearMap::identity(m.n);
  LinearMap b = m;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

inline LinearMap map_inverse(const LinearMap& m) {
  // Gauss-Jordan over the field
  int n = m.n;
  LinearMap w = m, inv = LinearMap::identity(n);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r)
      if (!w.at(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) throw std::domain_error("map_inverse: singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(w.at(p, j), w.at(col, j));
      std::swap(inv.at(p, j), inv.at(col, j));
    }
    Cyclo s = inverse(w.at(col, col));
    for (int j = 0; j < n; ++j) {
      w.at(col, j) = s * w.at(col, j);
      inv.at(col, j) = s * inv.at(col, j);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || w.at(r, col).is_zero()) continue;
      Cyclo f = w.at(r, col);
      for (int j = 0; j < n; ++j) {
        w.at(r, j) -= f * w.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

// Substitution z_i -> sum_j M(i,j) z_j; returns p composed with M.
inline MultiPoly apply_linear(const LinearMap& M, const MultiPoly& p) {
  if (M.n != kNumVars) throw std::invalid_argument("apply_linear: need a 6x6 map");
  // variable images and their power caches
  std::array<MultiPoly, kNumVars> img;
  for (int i = 0; i < kNumVars; ++i) {
    for (int j = 0; j < kNumVars; ++j)
      if (!M.at(i, j).is_zero()) img[i] += M.at(i, j) * MultiPoly::var(j);
  }
  std::array<std::vector<MultiPoly>, kNumVars> pows;
  for (int i = 0; i < kNumVars; ++i) pows[i].push_back(MultiPoly(Cyclo(1)));
  auto power = [&](int i, int e) -> const MultiPoly& {
    while (int(pows[i].size()) <= e) pows[i].push_back(pows[i].back() * img[i]);
    return pows[i][e];
  };
  MultiPoly r;
  for (const auto& [m, c] : p.terms) {
    MultiPoly t(c);
    for (int i = 0; i < kNumVars; ++i)
      if (m.e[i]) t *= power(i, m.e[i]);
    r += t;
  }
  return r;
}

struct NotInSpan : std::runtime_error {
  MultiPoly residual;
  explicit NotInSpan(MultiPoly res)
      : std::runtime_error("express_in_basis: polynomial not in span"),
        residual(std::move(res)) {}
};
struct DependentBasis : std::runtime_error {
  DependentBasis() : std::runtime_error("express_in_basis: basis is dependent") {}
};

// Unique coefficients c with p = sum c_i basis_i, by exact Gaussian
// elimination on monomial coordinates.
inline std::vector<Cyclo> express_in_basis(const MultiPoly& p,
                                           const std::vector<MultiPoly>& basis) {
  std::map<Monomial, int> index;
  for (const auto& b : basis)
    for (const auto& [m, c] : b.terms) index.emplace(m, 0);
  for (const auto& [m, c] : p.terms) index.emplace(m, 0);
  int rows = 0;
  for (auto& [m, i] : index) i = rows++;
  const int cols = int(basis.size());

  std::vector<std::vector<Cyclo>> mat(rows, std::vector<Cyclo>(cols + 1));
  for (int j = 0; j < cols; ++j)
    for (const auto& [m, c] : basis[j].terms) mat[index.at(m)][j] = c;
  for (const auto& [m, c] : p.terms) mat[index.at(m)][cols] = c;

  std::vector<int> pivot_row(cols, -1);
  int rank = 0;
  for (int col = 0; col < cols; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!mat[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(mat[piv], mat[rank]);
    Cyclo s = inverse(mat[rank][col]);
    for (int j = col; j <= cols; ++j) mat[rank][j] = s * mat[rank][j];
    for (int r = 0; r < rows; ++r) {
      if (r == rank || mat[r][col].is_zero()) continue;
      Cyclo f = mat[r][col];
      for (int j = col; j <= cols; ++j) mat[r][j] -= f * mat[rank][j];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  if (rank < cols) throw DependentBasis();

  std::vector<Cyclo> coeffs(cols);
  for (int col = 0; col < cols; ++col) coeffs[col] = mat[pivot_row[col]][cols];

  // verify the residual is exactly zero
  MultiPoly recon;
  for (int col = 0; col < cols; ++col) recon += coeffs[col] * basis[col];
  MultiPoly residual = p - recon;
  if (!residual.is_zero()) throw NotInSpan(std::move(residual));
  return coeffs;
}

}  // namespace sl213
