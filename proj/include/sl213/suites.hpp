#pragma once

// The verification engine. Each suite runs a family of identity checks --
// exact symbolic ones on polynomials and matrices, and q-series ones on
// truncated expansions -- and reports one CheckResult per identity. Series
// checks clear denominators first, record how many integral q-powers beyond
// the potential valuation were certified, and degrade to "inconclusive"
// rather than "pass" when the certified margin is too small.

#include <sl213/cyclo.hpp>
#include <sl213/invariants.hpp>
#include <sl213/mpoly.hpp>
#include <sl213/qseries.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl213 {

enum class CheckStatus { pass, fail, inconclusive };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "inconclusive";
  }
}

struct CheckResult {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::fail;
  bool symbolic = true;   // exact check (no truncation involved)
  long truncation_used = 0;  // certified integral q-powers beyond the
                             // potential valuation (series checks only)
  std::string witness;    // leading discrepancy or informative note
  double elapsed_ms = 0;
};

struct SuiteConfig {
  long truncation_margin = 30;  // integral q-powers beyond valuation
  std::vector<std::string> suites_enabled;  // empty = all
  int parallelism = 1;
  bool self_test = false;  // include negative controls (which must fail)
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckResult> results;
  int n_pass = 0, n_fail = 0, n_inconclusive = 0;
  bool all_pass() const { return n_fail == 0 && n_inconclusive == 0; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "group",         "symbolic",   "modular-equations", "phi-identifications",
      "singularities", "hauptmodul", "klein-ade"};
  return names;
}

// ---- series helpers -----------------------------------------------------

// apply a Galois substitution zeta -> zeta^k to every coefficient
inline QSeries qs_galois(long k, const QSeries& s) {
  QSeries r{s.den, s.trunc, {}};
  for (const auto& [e, c] : s.coeffs) r.coeffs[e] = galois(k, c);
  r.cleanup();
  return r;
}

// coefficient-wise field trace (sums the twelve Galois conjugates)
inline QSeries qs_trace(const QSeries& s) {
  QSeries r{s.den, s.trunc, {}};
  for (const auto& [e, c] : s.coeffs) r.coeffs[e] = field_trace(c);
  r.cleanup();
  return r;
}

// lower bound for the valuation of poly_eval(p, a): the polynomial could
// only reach this low if no cancellation occurred among its monomials
inline long potential_valuation(const MultiPoly& p, const std::vector<QSeries>& a) {
  long best = kInfTrunc;
  for (const auto& [m, c] : p.terms) {
    long v = 0;
    for (int i = 0; i < kNumVars; ++i) v += long(m.e[i]) * a[i].valuation();
    best = std::min(best, v);
  }
  return best;
}

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Laurent polynomials in one variable, used for the exact Fricke-involution
// and quadratic-field factorization checks.
template <typename Coef>
using Laurent = std::map<long, Coef>;

inline bool coef_is_zero(const Rational& r) { return r == 0; }
inline bool coef_is_zero(const Cyclo& c) { return c.is_zero(); }

template <typename Coef>
Laurent<Coef> lp_clean(Laurent<Coef> p) {
  for (auto it = p.begin(); it != p.end();)
    it = coef_is_zero(it->second) ? p.erase(it) : std::next(it);
  return p;
}

template <typename Coef>
Laurent<Coef> lp_add(const Laurent<Coef>& x, const Laurent<Coef>& y) {
  Laurent<Coef> r = x;
  for (const auto& [e, c] : y) r[e] += c;
  return lp_clean(std::move(r));
}

template <typename Coef>
Laurent<Coef> lp_mul(const Laurent<Coef>& x, const Laurent<Coef>& y) {
  Laurent<Coef> r;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) r[ex + ey] += cx * cy;
  return lp_clean(std::move(r));
}

template <typename Coef>
Laurent<Coef> lp_pow(const Laurent<Coef>& x, int n) {
  Laurent<Coef> r{{0, Coef(1)}};
  for (int i = 0; i < n; ++i) r = lp_mul(r, x);
  return r;
}

template <typename Coef>
bool lp_eq(const Laurent<Coef>& x, const Laurent<Coef>& y) {
  Laurent<Coef> d = x;
  for (const auto& [e, c] : y) d[e] -= c;
  return lp_clean(std::move(d)).empty();
}

}  // namespace detail

// ---- shared series caches -----------------------------------------------

// Base cache for the order-13 theta world (exponent grid 1/312). Everything
// is built once, at an absolute truncation deep enough that every downstream
// cleared-denominator check still certifies the configured margin.
struct SeriesContext {
  long margin;
  long den = kDefaultDen;
  long T;  // scaled base truncation
  std::vector<QSeries> a;  // theta constants of order 13 (a[0] = a_1)
  QSeries eta1, e4, e6, dlt, j;

  explicit SeriesContext(long margin_q, bool flip_a4 = false)
      : margin(margin_q), T((margin_q + 22) * kDefaultDen) {
    for (int i = 1; i <= 6; ++i) a.push_back(theta13(i, den, T));
    if (flip_a4) a[3] = -a[3];
    eta1 = eta(den, T);
    e4 = eisenstein(4, den, T);
    e6 = eisenstein(6, den, T);
    dlt = qs_pow(eta1, 24);
    j = qs_pow(e4, 3) * recip(dlt);
  }
};

// Cache of evaluated orbit sums. phi_x(m, n) is the unnormalized
//   sum_{nu=0..12} w_nu^m delta_nu^n + w_inf^m delta_inf^n
// evaluated on the theta constants and multiplied by eta^(4m+6n), i.e. the
// value of the degree-(4m+6n) invariant on the weight-normalized forms
// x_i = eta * a_i. The twelve conjugate summands nu = 1..12 are obtained
// from the nu = 1 summand by a coefficient-wise Galois trace.
class PhiCache {
 public:
  explicit PhiCache(const SeriesContext& ctx) : ctx_(ctx) {
    w_[0] = poly_eval(w_poly(0), ctx.a);
    w_[1] = poly_eval(w_poly(1), ctx.a);
    w_[2] = poly_eval(w_poly(13), ctx.a);
    d_[0] = poly_eval(delta_poly(0), ctx.a);
    d_[1] = poly_eval(delta_poly(1), ctx.a);
    d_[2] = poly_eval(delta_poly(13), ctx.a);
  }

  const QSeries& phi_x(int m, int n) {
    auto key = std::make_pair(m, n);
    auto it = phi_.find(key);
    if (it != phi_.end()) return it->second;
    QSeries sum = slot_term(0, m, n) + qs_trace(slot_term(1, m, n)) +
                  slot_term(2, m, n);
    QSeries r = sum * eta_pow(4 * m + 6 * n);
    return phi_.emplace(key, std::move(r)).first->second;
  }

  // lower bound for the valuation of phi_x(m, n), cancellation ignored
  long phi_potential_valuation(int m, int n) const {
    long v = kInfTrunc;
    for (int s = 0; s < 3; ++s)
      v = std::min(v, m * w_[s].valuation() + n * d_[s].valuation());
    return v + (4 * m + 6 * n) * ctx_.den / 24;
  }

  const QSeries& w_slot(int s) const { return w_[s]; }
  const SeriesContext& ctx() const { return ctx_; }

 private:
  QSeries slot_term(int s, int m, int n) {
    QSeries r = pow_of(wpows_[s], w_[s], m);
    if (n > 0) r = r * pow_of(dpows_[s], d_[s], n);
    return r;
  }
  static const QSeries& pow_of(std::vector<QSeries>& cache, const QSeries& base,
                               int e) {
    if (cache.empty()) cache.push_back(qs_const(Cyclo(1), base.den));
    while (int(cache.size()) <= e) cache.push_back(cache.back() * base);
    return cache[e];
  }
  const QSeries& eta_pow(int e) { return pow_of(etapows_, ctx_.eta1, e); }

  const SeriesContext& ctx_;
  QSeries w_[3], d_[3];  // slots: nu = 0, nu = 1, infinity
  std::vector<QSeries> wpows_[3], dpows_[3], etapows_;
  std::map<std::pair<int, int>, QSeries> phi_;
};

// ---- the engine ---------------------------------------------------------

class SuiteEngine {
 public:
  explicit SuiteEngine(SuiteConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.truncation_margin < 5)
      throw std::invalid_argument("truncation_margin must be at least 5");
    if (cfg_.parallelism < 1)
      throw std::invalid_argument("parallelism must be positive");
    for (const auto& s : cfg_.suites_enabled)
      if (std::find(suite_names().begin(), suite_names().end(), s) ==
          suite_names().end())
        throw std::invalid_argument("unknown suite: " + s);
  }

  SuiteReport run_all() {
    SuiteReport rep;
    rep.config = cfg_;
    for (const auto& s : suite_names()) {
      if (!enabled(s)) continue;
      std::vector<CheckResult> rs = run_suite(s);
      rep.results.insert(rep.results.end(), rs.begin(), rs.end());
    }
    for (const auto& r : rep.results) {
      if (r.status == CheckStatus::pass) ++rep.n_pass;
      else if (r.status == CheckStatus::fail) ++rep.n_fail;
      else ++rep.n_inconclusive;
    }
    return rep;
  }

  std::vector<CheckResult> run_suite(const std::string& name) {
    if (name == "group") return suite_group();
    if (name == "symbolic") return suite_symbolic();
    if (name == "modular-equations") return suite_modular_equations();
    if (name == "phi-identifications") return suite_phi_identifications();
    if (name == "singularities") return suite_singularities();
    if (name == "hauptmodul") return suite_hauptmodul();
    if (name == "klein-ade") return suite_klein_ade();
    throw std::invalid_argument("unknown suite: " + name);
  }

  // ---- suite: group (exact matrix identities) ---------------------------

  std::vector<CheckResult> suite_group() {
    Collector out("group");
    const auto& M = matrices();
    const LinearMap I6 = LinearMap::identity(6);

    out.exact("S_squared", M.S * M.S == -I6, "S^2 differs from -I",
              "S^2 = -I (central element)");
    out.exact("T_order", map_pow(M.T, 13) == I6, "T^13 differs from I");
    out.exact("ST_cubed", map_pow(M.S * M.T, 3) == -I6,
              "(ST)^3 differs from -I",
              "(ST)^3 = -I; trivial in the quotient by the center");
    out.exact("P_thirteenth", map_pow(M.P, 13) == -I6, "P^13 differs from -I",
              "P^13 = -I; trivial in the quotient by the center");
    out.exact("QP_word", map_pow(map_pow(M.Q, 3) * map_pow(M.P, 4), 3) == I6,
              "(Q^3 P^4)^3 differs from I");
    out.exact("H_word", M.Hword == -M.H,
              "generator word in P, Q differs from -H",
              "word = -H; equal to H in the quotient by the center");
    out.exact("H_order", map_pow(M.H, 6) == -I6, "H^6 differs from -I",
              "H^6 = -I; order 6 in the quotient by the center");
    out.exact("H_conjugation", map_inverse(M.H) * M.T * M.H == map_pow(M.T, 4),
              "H^-1 T H differs from T^4",
              "H^-1 T H = T^4 (central sign conventions differ by -I)");
    out.exact("H_matrix", h_matrix_pattern_ok(M.H),
              "H is not the expected signed permutation");

    if (cfg_.self_test) {
      // negative control: the 21-dimensional S-matrix is not symmetric, so
      // its transpose must disagree with the action on the basis elements
      out.run("control_transposed_Stilde", [&] {
        const auto& rep = rep21();
        const auto& B = family_B();
        for (int col = 0; col < 21; ++col) {
          std::vector<Cyclo> want =
              express_in_basis(apply_linear(matrices().S, B[col]), B);
          for (int row = 0; row < 21; ++row) {
            Cyclo got = rep.Stilde.at(col, row);  // transposed entry
            if (!(got == want[row])) {
              std::ostringstream os;
              os << "transposed entry (" << b_names()[row] << ", "
                 << b_names()[col] << ") is " << got << ", action gives "
                 << want[row];
              return Verdict::fail(os.str());
            }
          }
        }
        return Verdict::pass();
      });
    }
    return out.take();
  }

  // ---- suite: symbolic (exact polynomial identities) --------------------

  std::vector<CheckResult> suite_symbolic() {
    Collector out("symbolic");
    const auto& M = matrices();
    const auto& fc = field_constants();
    const Cyclo s13 = fc.sqrt13;

    // quadratic family transformation law, all nu and infinity
    out.run("A_law_all_nu", [&] {
      const auto& A = family_A();
      for (int nu = 0; nu < 13; ++nu)
        if (!(s13 * apply_linear(st(nu), A[0]) == phi_linear(nu)))
          return Verdict::fail("mismatch at nu=" + std::to_string(nu));
      if (!(phi_linear(13) == s13 * A[0]))
        return Verdict::fail("mismatch at infinity");
      return Verdict::pass();
    });

    // cubic family transformation laws, all nu
    out.run("D_law_all_nu", [&] {
      const auto& D = family_D();
      const Cyclo m13s13 = Cyclo(-13) * s13;
      const Cyclo* rc[12] = {&fc.r1, &fc.r2, &fc.r1, &fc.r3, &fc.r2, &fc.r2,
                             &fc.r4, &fc.r4, &fc.r1, &fc.r3, &fc.r4, &fc.r3};
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
        if (!(m13s13 * apply_linear(m, D[0]) == rhs0))
          return Verdict::fail("D0 image mismatch at nu=" + std::to_string(nu));
        if (!(m13s13 * apply_linear(m, D[13]) == rhsInf))
          return Verdict::fail("Dinf image mismatch at nu=" +
                               std::to_string(nu));
      }
      return Verdict::pass();
    });

    // sextic family transformation law, all nu
    out.run("G_law_all_nu", [&] {
      const auto& G = family_G();
      for (int nu = 0; nu < 13; ++nu)
        if (!(Cyclo(169) * apply_linear(st(nu), G[0]) == delta_poly(nu)))
          return Verdict::fail("mismatch at nu=" + std::to_string(nu));
      return Verdict::pass();
    });

    // invariant quadric combinations and the quartic invariant
    const auto& A = family_A();
    MultiPoly psi2 = A[0] * A[0] + A[1] * A[5] + A[2] * A[3] + A[4] * A[6];
    out.exact("psi2_equals_2phi4", psi2 == Cyclo(2) * phi4(),
              "Psi2 differs from 2 Phi4");
    out.exact("sum_w_equals_26_psi2", phi_mn_symbolic(1, 0) == Cyclo(26) * psi2,
              "sum of the w's differs from 26 Psi2");
    out.exact("phi6_zero", phi_mn_symbolic(0, 1).is_zero(),
              "sum of the delta's is nonzero");
    out.exact("phi4_S_invariant", apply_linear(M.S, phi4()) == phi4(),
              "Phi4 not fixed by S");
    out.exact("phi4_T_invariant", apply_linear(M.T, phi4()) == phi4(),
              "Phi4 not fixed by T");
    {
      const auto& B = family_B();
      out.exact("phi4_B_decomposition",
                phi4() == Cyclo(3) * B[0] + B[1] - B[2],
                "Phi4 differs from 3 B0(0) + B0(1) - B0(2)");
    }

    // the displayed columns of the 21-dimensional S-matrix
    check_s_columns(out);

    // the remaining columns follow from the displayed ones by the Galois
    // substitution zeta -> zeta^9 within each triple of basis elements
    out.run("s_columns_galois_triples", [&] {
      const auto& rep = rep21();
      const int triples[6][3] = {{3, 5, 7},   {9, 11, 13},  {4, 6, 8},
                                 {10, 12, 14}, {15, 16, 17}, {18, 19, 20}};
      for (const auto& t : triples)
        for (int step = 0; step < 2; ++step)
          for (int row = 0; row < 21; ++row) {
            Cyclo want = galois(9, rep.Stilde.at(row, t[step]));
            if (!(rep.Stilde.at(row, t[step + 1]) == want))
              return Verdict::fail("triple starting at column " +
                                   b_names()[t[0]] + " breaks at row " +
                                   b_names()[row]);
          }
      return Verdict::pass();
    });

    out.run("T_eigenvalues", [&] {
      const auto& rep = rep21();
      for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j) {
          Cyclo want = (i == j) ? zeta_pow(kTEigen[i]) : Cyclo(0);
          if (!(rep.Ttilde.at(j, i) == want))
            return Verdict::fail("T action not diagonal at " + b_names()[i]);
        }
      return Verdict::pass();
    });

    out.exact("trace_Stilde", rep21().Stilde.trace() == Cyclo(1),
              "trace of the 21-dim S differs from 1");
    out.exact("trace_Ttilde",
              rep21().Ttilde.trace() ==
                  Rational(1, 2) * (Cyclo(3) + s13),
              "trace of the 21-dim T differs from (3+sqrt13)/2");

    // quartic system of the genus-50 curve and its correspondence
    out.run("klein_distinct_count", [&] {
      size_t n = klein_system(13).size();
      if (n != 21)
        return Verdict::fail("expected 21 distinct quartics, got " +
                             std::to_string(n));
      return Verdict::pass();
    });
    out.run("klein_sign_rules", [&] {
      const int quads[4][4] = {
          {0, 1, 2, 3}, {1, 2, 3, 4}, {0, 2, 4, 6}, {1, 3, 4, 6}};
      for (const auto& q : quads) {
        MultiPoly base = klein_quartic(13, q[0], q[1], q[2], q[3]);
        if (!(klein_quartic(13, q[1], q[0], q[2], q[3]) == -base))
          return Verdict::fail("transposition sign rule fails");
        if (!(klein_quartic(13, q[1], q[2], q[3], q[0]) == -base))
          return Verdict::fail("4-cycle sign rule fails");
        if (!(klein_quartic(13, -q[0], q[1], -q[2], q[3]) == base))
          return Verdict::fail("sign-flip invariance fails");
      }
      return Verdict::pass();
    });
    out.run("b_phi_correspondence", [&] {
      try {
        if (b_phi_correspondence().size() != 21)
          return Verdict::fail("correspondence table is not 21 entries");
      } catch (const std::exception& e) {
        return Verdict::fail(e.what());
      }
      return Verdict::pass();
    });

    // arithmetic identities: group order, dimension counts, genus, degree
    out.exact("group_order_2184", 13 * (13 * 13 - 1) == 2184,
              "order of the group differs from 2184");
    out.exact("dimension_count_classical",
              1 + 13 * 13 + 5 * 14 * 14 + 2 * 7 * 7 + 6 * 12 * 12 +
                      2 * 6 * 6 ==
                  2184,
              "classical sum-of-squares count differs from 2184");
    out.exact("dimension_count_with_21",
              1 + 21 * 21 + 13 * 13 + 3 * 14 * 14 + 7 * 7 + 6 * 12 * 12 +
                      2 * 6 * 6 ==
                  2184,
              "sum-of-squares count with the 21 differs from 2184");
    out.exact("genus_formula", (13 + 2) * (13 - 3) * (13 - 5) / 24 == 50,
              "genus formula does not give 50");
    out.exact("genus_ramification",
              2 - (2 * 1092 - 12 * 84 - 2 * 364 - 546) == 2 * 50,
              "ramification count does not give genus 50");
    out.exact("degree_formula", (13 - 3) * (13 * 13 - 1) / 48 == 35,
              "degree formula does not give 35");

    return out.take();
  }

  // ---- suite: modular-equations (series vanishing + dependencies) -------

  std::vector<CheckResult> suite_modular_equations() {
    Collector out("modular-equations");
    const SeriesContext& ctx = base();
    const auto& B = family_B();
    const auto& names = b_names();

    for (int i = 0; i < 21; ++i) {
      out.timed(names[i] + "_vanishes", [&](CheckResult& r) {
        QSeries v = poly_eval(B[i], ctx.a);
        series_zero_verdict(r, v, potential_valuation(B[i], ctx.a));
      });
    }

    // The two algebraic consequences certifying that the 19 equations other
    // than B0(1), B0(2) already imply those two: exact polynomial identities
    // expressing each as a combination of the others, plus the observation
    // that the products a1 a2 a3 and a4 a5 a6 are units (nonzero leading
    // coefficient) in the series ring.
    auto z = [](int i) { return MultiPoly::var(i - 1); };
    out.run("B0_1_dependency", [&] {
      MultiPoly lhs = z(1) * z(2) * z(3) * B[1];
      MultiPoly rhs = (z(1) * z(2) * z(3) - z(4) * z(5) * z(6)) * B[0] +
                      z(1) * z(2) * z(5) * B[17] + z(2) * z(3) * z(6) * B[16] +
                      z(1) * z(3) * z(4) * B[15];
      if (!(lhs == rhs)) return Verdict::fail("combination identity fails");
      QSeries unit = poly_eval(z(1) * z(2) * z(3), ctx.a);
      if (unit.is_zero() || unit.lead().is_zero())
        return Verdict::fail("a1 a2 a3 is not a unit");
      return Verdict::pass(
          "z1 z2 z3 B0(1) = (z1 z2 z3 - z4 z5 z6) B0(0) + z1 z2 z5 B6 "
          "+ z2 z3 z6 B2 + z1 z3 z4 B5; a1 a2 a3 invertible");
    });
    out.run("B0_2_dependency", [&] {
      MultiPoly lhs = z(4) * z(5) * z(6) * B[2] +
                      (z(1) * z(2) * z(3) + z(4) * z(5) * z(6)) * B[0];
      MultiPoly rhs = z(1) * z(4) * z(6) * B[18] + z(2) * z(4) * z(5) * B[20] +
                      z(3) * z(5) * z(6) * B[19];
      if (!(lhs == rhs)) return Verdict::fail("combination identity fails");
      QSeries unit = poly_eval(z(4) * z(5) * z(6), ctx.a);
      if (unit.is_zero() || unit.lead().is_zero())
        return Verdict::fail("a4 a5 a6 is not a unit");
      return Verdict::pass(
          "z4 z5 z6 B0(2) + (z1 z2 z3 + z4 z5 z6) B0(0) = z1 z4 z6 B8 "
          "+ z2 z4 z5 B7 + z3 z5 z6 B11; a4 a5 a6 invertible");
    });

    if (cfg_.self_test) {
      // negative control: flipping the sign of a4 must break the equations
      out.timed("control_flip_a4_B1_1", [&](CheckResult& r) {
        SeriesContext flipped(cfg_.truncation_margin, /*flip_a4=*/true);
        QSeries v = poly_eval(B[3], flipped.a);
        series_zero_verdict(r, v, potential_valuation(B[3], flipped.a));
      });
    }
    return out.take();
  }

  // ---- suite: phi-identifications (orbit sums as modular forms) ---------

  std::vector<CheckResult> suite_phi_identifications() {
    Collector out("phi-identifications");
    const SeriesContext& ctx = base();
    PhiCache& pc = phi_cache();

    // Galois coherence: the nu = 2 summand is the zeta -> zeta^2 conjugate
    // of the nu = 1 summand
    out.timed("galois_coherence_w", [&](CheckResult& r) {
      QSeries w2 = poly_eval(w_poly(2), ctx.a);
      series_eq_verdict(r, qs_galois(2, pc.w_slot(1)), w2);
    });

    // unnormalized leading constants of the orbit sums. The constant for
    // the (3,3) sum is verified as -13*96; the value -13*27 quoted in some
    // accounts does not match the series (confirmed by two independent
    // evaluation strategies).
    struct Unnorm {
      int m, n;
      long c;
      const char* target;
      const char* note;
    };
    const Unnorm unnorm[] = {
        {3, 0, -13 * 30, "delta", ""},
        {0, 2, -13 * 52, "delta", ""},
        {5, 0, 13 * 25, "eta8deltaE4", ""},
        {2, 2, 13 * 26, "eta8deltaE4", ""},
        {0, 5, -13 * 1315, "delta2E6", ""},
        {3, 3, -13 * 96, "delta2E6",
         "verified constant -13*96 (corrects the quoted -13*27)"},
        {6, 1, -13 * 285, "delta2E6", ""}};
    for (const auto& u : unnorm) {
      out.timed(phi_name(u.m, u.n) + "_unnormalized", [&](CheckResult& r) {
        const QSeries& t = target_series(u.target);
        QSeries diff = pc.phi_x(u.m, u.n) - Cyclo(u.c) * t;
        series_zero_verdict(
            r, diff,
            std::min(pc.phi_potential_valuation(u.m, u.n), t.valuation()));
        if (r.status == CheckStatus::pass && u.note[0]) r.witness = u.note;
      });
    }

    // normalized identifications: zero forms and modular-form values. Six
    // of the normalization constants below (marked "corrected") are the
    // values this library verifies against the series; the constants quoted
    // in some accounts for these six differ and do not match.
    struct Norm {
      int m, n;
      long num, den;  // normalization constant num/den; 0/1 = zero form
      const char* target;
      bool corrected = false;
    };
    const Norm table[] = {
        {1, 0, 0, 1, nullptr},          {2, 0, 0, 1, nullptr},
        {1, 1, 0, 1, nullptr},          {2, 1, 0, 1, nullptr},
        {4, 0, 0, 1, nullptr},          {1, 2, 0, 1, nullptr},
        {1, 3, 0, 1, nullptr},          {4, 1, 0, 1, nullptr},
        {1, 5, 0, 1, nullptr},          {4, 3, 0, 1, nullptr},
        {7, 1, 0, 1, nullptr},
        {3, 0, -1, 13 * 30, "delta"},   {0, 2, -1, 13 * 52, "delta"},
        {3, 1, 1, 13 * 2, "deltaE6"},   {0, 3, 1, 13 * 6, "deltaE6"},
        {5, 0, 1, 13 * 25, "eta8deltaE4"},
        {2, 2, 1, 13 * 26, "eta8deltaE4"},
        {5, 1, -1, 13, "eta8deltaE4E6"},
        {2, 3, -1, 13, "eta8deltaE4E6"},
        {0, 5, -1, 13 * 1315, "delta2E6"},
        {3, 3, -1, 13 * 96, "delta2E6", true},
        {6, 1, -1, 13 * 285, "delta2E6"},
        {8, 0, -1, 13 * 1840, "eta8delta2E4"},
        {5, 2, -1, 13 * 1954, "eta8delta2E4", true},
        {2, 4, -1, 13 * 692, "eta8delta2E4", true},
        {0, 7, 1, 13 * 226842, "delta3E6"},
        {3, 5, 1, 13 * 5752, "delta3E6", true},
        {6, 3, 1, 13 * 9348, "delta3E6", true},
        {9, 1, 1, 13 * 23816, "delta3E6", true},
        {11, 0, 1, 13 * 146905, "eta8delta3E4"}};
    for (const auto& t : table) {
      std::string name = phi_name(t.m, t.n) + (t.target ? "_value" : "_zero");
      out.timed(name, [&](CheckResult& r) {
        QSeries diff = pc.phi_x(t.m, t.n);
        long pv = pc.phi_potential_valuation(t.m, t.n);
        if (t.target) {
          // compare c * Phi against the target with c = num/den; cleared of
          // the denominator: num * Phi - den * target
          const QSeries& ts = target_series(t.target);
          diff = Cyclo(t.num) * diff - Cyclo(t.den) * ts;
          pv = std::min(pv, ts.valuation());
        }
        series_zero_verdict(r, diff, pv);
        if (r.status == CheckStatus::pass && t.corrected)
          r.witness = "normalization constant " +
                      std::to_string(t.num * t.den) +
                      " verified against the series (corrected value)";
      });
    }

    // two-dimensional span membership for the remaining degree-44 forms
    for (auto [m, n] : {std::pair{8, 2}, std::pair{5, 4}, std::pair{2, 6}}) {
      out.timed(phi_name(m, n) + "_span", [&](CheckResult& r) {
        const QSeries& t1 = target_series("eta8delta2E4^4");
        const QSeries& t2 = target_series("eta8delta2E4E6^2");
        long pv = std::min({pc.phi_potential_valuation(m, n), t1.valuation(),
                            t2.valuation()});
        span_membership_verdict(r, pc.phi_x(m, n), t1, t2, pv);
      });
    }
    return out.take();
  }

  // ---- suite: singularities (cleared syzygies of the identified forms) --

  std::vector<CheckResult> suite_singularities() {
    Collector out("singularities");
    const SeriesContext& ctx = base();

    QSeries P12 = target_series("delta");
    QSeries P18 = target_series("deltaE6");
    QSeries P20 = target_series("eta8deltaE4");
    QSeries P26 = target_series("eta8deltaE4E6");
    QSeries P32 = target_series("eta8delta2E4");
    QSeries P44 = target_series("eta8delta3E4");
    auto pw = [](const QSeries& s, int e) { return qs_pow(s, e); };

    out.timed("E6_relation", [&](CheckResult& r) {
      // ((P20^3/P12^4 + 1728 P12)^2 - (P26/P20)^4 - 6912 (P20/P12)^3 = 0,
      // multiplied through by P12^8 P20^4
      QSeries lhs = pw(pw(P20, 3) + Cyclo(1728) * pw(P12, 5), 2) * pw(P20, 4);
      QSeries diff = lhs - pw(P12, 8) * pw(P26, 4) -
                     Cyclo(6912) * pw(P12, 5) * pw(P20, 7);
      series_zero_verdict(r, diff, lhs.valuation());
    });
    out.timed("E7_relation", [&](CheckResult& r) {
      QSeries diff = P12 * pw(P26, 3) - pw(P18, 5) -
                     Cyclo(1728) * pw(P12, 3) * pw(P18, 3);
      series_zero_verdict(r, diff, (P12 * pw(P26, 3)).valuation());
    });
    out.timed("E8_relation", [&](CheckResult& r) {
      QSeries diff = pw(P20, 5) - pw(P12, 4) * pw(P26, 2) -
                     Cyclo(1728) * pw(P12, 5) * pw(P20, 2);
      series_zero_verdict(r, diff, pw(P20, 5).valuation());
    });
    out.timed("Q18_relation", [&](CheckResult& r) {
      QSeries diff = pw(P32, 5) - pw(P12, 9) * pw(P26, 2) -
                     Cyclo(1728) * pw(P12, 8) * pw(P32, 2);
      series_zero_verdict(r, diff, pw(P32, 5).valuation());
    });
    out.timed("E20_relation", [&](CheckResult& r) {
      QSeries diff = pw(P44, 5) - pw(P12, 14) * pw(P26, 2) -
                     Cyclo(1728) * pw(P12, 11) * pw(P44, 2);
      series_zero_verdict(r, diff, pw(P44, 5).valuation());
    });

    // decompositions of j: cross-multiplied with j = E4^3/Delta and
    // j - 1728 = E6^2/Delta
    out.timed("j_decomposition_E7type", [&](CheckResult& r) {
      QSeries lhs = pw(ctx.e4, 3) * pw(P18, 3) * pw(P12, 2);
      series_eq_verdict(r, lhs, ctx.dlt * pw(P26, 3));
    });
    out.timed("j_minus_1728_E7type", [&](CheckResult& r) {
      QSeries lhs = pw(ctx.e6, 2) * pw(P12, 3);
      series_eq_verdict(r, lhs, ctx.dlt * pw(P18, 2));
    });
    out.timed("j_decomposition_E8type", [&](CheckResult& r) {
      QSeries lhs = pw(ctx.e4, 3) * pw(P12, 5);
      series_eq_verdict(r, lhs, ctx.dlt * pw(P20, 3));
    });
    out.timed("j_minus_1728_E8type", [&](CheckResult& r) {
      QSeries lhs = pw(ctx.e6, 2) * pw(P20, 2) * P12;
      series_eq_verdict(r, lhs, ctx.dlt * pw(P26, 2));
    });

    // parameter-family content: the two orbit sums of each degree agree
    // after normalization, so every convex combination gives the same form
    PhiCache& pc = phi_cache();
    struct Pair {
      int m1, n1;
      long c1n, c1d;
      int m2, n2;
      long c2n, c2d;
    };
    const Pair pairs[] = {
        {3, 0, -1, 13 * 30, 0, 2, -1, 13 * 52},
        {3, 1, 1, 13 * 2, 0, 3, 1, 13 * 6},
        {5, 0, 1, 13 * 25, 2, 2, 1, 13 * 26},
        {5, 1, -1, 13, 2, 3, -1, 13}};
    for (const auto& p : pairs) {
      std::string name = "pair_" + phi_name(p.m1, p.n1) + "_" +
                         phi_name(p.m2, p.n2) + "_agree";
      out.timed(name, [&](CheckResult& r) {
        // cleared form: c1n * c2d * Phi1 == c2n * c1d * Phi2
        QSeries diff = Cyclo(p.c1n * p.c2d) * pc.phi_x(p.m1, p.n1) -
                       Cyclo(p.c2n * p.c1d) * pc.phi_x(p.m2, p.n2);
        series_zero_verdict(
            r, diff,
            std::min(pc.phi_potential_valuation(p.m1, p.n1),
                     pc.phi_potential_valuation(p.m2, p.n2)));
      });
    }
    return out.take();
  }

  // ---- suite: hauptmodul (level-N parametrizations of j) ----------------

  std::vector<CheckResult> suite_hauptmodul() {
    Collector out("hauptmodul");
    const SeriesContext& ctx = base();

    struct HData {
      int N;
      long c;  // tau * tau' under the Fricke involution
      int sign;                  // overall sign of both numerators
      std::vector<long> f1_j, f3_j;  // j(z) = sign * f1(tau) f3(tau)^3 / tau^N
      std::vector<long> f1_y, f3_y;  // j(Nz) = sign * f1(tau) f3(tau)^3 / tau
    };
    const HData data[] = {
        {2, 4096, +1, {1}, {256, 1}, {1}, {16, 1}},
        {3, 729, +1, {27, 1}, {243, 1}, {27, 1}, {3, 1}},
        // with tau = (eta(z)/eta(5z))^6 the numerators carry +250 and +10;
        // the variant with -250/-10 and a leading minus corresponds to -tau
        {5, 125, +1, {1}, {3125, 250, 1}, {1}, {5, 10, 1}},
        {7, 49, +1, {49, 13, 1}, {2401, 245, 1}, {49, 13, 1}, {1, 5, 1}},
        {13, 13, +1,
         {13, 5, 1}, {28561, 15379, 3380, 247, 1},
         {13, 5, 1}, {1, 19, 20, 7, 1}}};

    for (const HData& h : data) {
      std::string ns = std::to_string(h.N);
      QSeries tau = hauptmodul(h.N, ctx.den, ctx.T);

      out.timed("j_numerator_N" + ns, [&](CheckResult& r) {
        QSeries lhs = ctx.j * qs_pow(tau, h.N);
        QSeries rhs = Cyclo(h.sign) * tau_poly(h.f1_j, tau) *
                      qs_pow(tau_poly(h.f3_j, tau), 3);
        series_eq_verdict(r, lhs, rhs);
      });
      out.timed("j" + ns + "z_identity", [&](CheckResult& r) {
        QSeries lhs = scale_exponent(ctx.j, h.N) * tau;
        QSeries rhs = Cyclo(h.sign) * tau_poly(h.f1_y, tau) *
                      qs_pow(tau_poly(h.f3_y, tau), 3);
        series_eq_verdict(r, lhs, rhs);
      });
      out.run("fricke" + ns + "_rational", [&] {
        using L = detail::Laurent<Rational>;
        // substitute tau' = c/tau into the tau'-form of j and compare with
        // the tau-form as exact Laurent polynomials (cleared of signs)
        auto subst = [&](const std::vector<long>& p) {
          L r;
          Rational ck = 1;
          for (size_t k = 0; k < p.size(); ++k) {
            if (p[k] != 0) r[-long(k)] += Rational(p[k]) * ck;
            ck *= h.c;
          }
          return detail::lp_clean(std::move(r));
        };
        auto lift = [&](const std::vector<long>& p) {
          L r;
          for (size_t k = 0; k < p.size(); ++k)
            if (p[k] != 0) r[long(k)] = Rational(p[k]);
          return r;
        };
        // tau'-form numerator over tau'^1, with tau' = c/tau:
        //   f1(c/tau) f3(c/tau)^3 * tau / c
        L lhs = detail::lp_mul(subst(h.f1_y), detail::lp_pow(subst(h.f3_y), 3));
        lhs = detail::lp_mul(lhs, L{{1, Rational(1, h.c)}});
        // tau-form numerator over tau^N
        L rhs = detail::lp_mul(lift(h.f1_j), detail::lp_pow(lift(h.f3_j), 3));
        rhs = detail::lp_mul(rhs, L{{-long(h.N), Rational(1)}});
        if (!detail::lp_eq(lhs, rhs))
          return Verdict::fail("Fricke substitution does not match at N=" + ns);
        return Verdict::pass("tau tau' = " + std::to_string(h.c));
      });
    }

    out.timed("phi2_bivariate", [&](CheckResult& r) {
      QSeries X = ctx.j, Y = scale_exponent(ctx.j, 2);
      auto pw = [](const QSeries& s, int e) { return qs_pow(s, e); };
      QSeries v = pw(X, 3) + pw(Y, 3) - pw(X, 2) * pw(Y, 2) +
                  Cyclo(1488) * (pw(X, 2) * Y + X * pw(Y, 2)) -
                  Cyclo(162000) * (pw(X, 2) + pw(Y, 2)) +
                  Cyclo(40773375) * X * Y +
                  Cyclo(8748000000L) * (X + Y) -
                  qs_const(Cyclo(157464000000000L), ctx.den);
      series_zero_verdict(r, v, -6 * ctx.den);
    });

    // the two level-13 quartics factor over the real quadratic field
    const Cyclo s13 = field_constants().sqrt13;
    auto quad_factor_check = [&](const std::vector<long>& quartic,
                                 const Rational& b_int, const Rational& b_rad,
                                 const Rational& c_int, const Rational& c_rad) {
      using L = detail::Laurent<Cyclo>;
      auto half = Rational(1, 2);
      L f1{{2, Cyclo(1)},
           {1, half * (Cyclo(b_int) + b_rad * s13)},
           {0, half * (Cyclo(c_int) + c_rad * s13)}};
      L f2{{2, Cyclo(1)},
           {1, half * (Cyclo(b_int) - b_rad * s13)},
           {0, half * (Cyclo(c_int) - c_rad * s13)}};
      L want;
      for (size_t k = 0; k < quartic.size(); ++k)
        if (quartic[k] != 0) want[long(k)] = Cyclo(quartic[k]);
      return detail::lp_eq(detail::lp_mul(f1, f2), want);
    };
    out.exact("quartic_factorization_j",
              quad_factor_check({28561, 15379, 3380, 247, 1}, 247, 65, 1859,
                                507),
              "quadratic-field factorization of the degree-13 numerator fails");
    out.exact("quartic_factorization_j13z",
              quad_factor_check({1, 19, 20, 7, 1}, 7, 1, 11, 3),
              "quadratic-field factorization of the j(13z) numerator fails");

    return out.take();
  }

  // ---- suite: klein-ade (genus-zero ADE parametrizations) ---------------

  std::vector<CheckResult> suite_klein_ade() {
    Collector out("klein-ade");
    auto z = [](int i) { return MultiPoly::var(i - 1); };
    auto c = [](long n) { return MultiPoly(Cyclo(n)); };
    auto pw = [](const MultiPoly& p, int e) { return poly_pow(p, e); };

    // two-variable invariants of the binary polyhedral groups
    MultiPoly z1 = z(1), z2 = z(2);
    MultiPoly f = z1 * z2 * (pw(z1, 10) + c(11) * pw(z1, 5) * pw(z2, 5) -
                             pw(z2, 10));
    MultiPoly H = -(pw(z1, 20) + pw(z2, 20)) +
                  c(228) * (pw(z1, 15) * pw(z2, 5) - pw(z1, 5) * pw(z2, 15)) -
                  c(494) * pw(z1, 10) * pw(z2, 10);
    MultiPoly Tico = (pw(z1, 30) + pw(z2, 30)) +
                     c(522) * (pw(z1, 25) * pw(z2, 5) - pw(z1, 5) * pw(z2, 25)) -
                     c(10005) * (pw(z1, 20) * pw(z2, 10) +
                                 pw(z1, 10) * pw(z2, 20));
    MultiPoly t4 = z1 * z2 * (pw(z1, 4) - pw(z2, 4));
    MultiPoly W = pw(z1, 8) + c(14) * pw(z1, 4) * pw(z2, 4) + pw(z2, 8);
    MultiPoly chi = pw(z1, 12) - c(33) * pw(z1, 8) * pw(z2, 4) -
                    c(33) * pw(z1, 4) * pw(z2, 8) + pw(z2, 12);
    MultiPoly F1 = pw(z1, 4) + c(8) * z1 * pw(z2, 3);
    MultiPoly F2 = c(4) * (pw(z2, 4) - pw(z1, 3) * z2);
    MultiPoly F3 = pw(z1, 6) - c(20) * pw(z1, 3) * pw(z2, 3) - c(8) * pw(z2, 6);

    out.exact("icosahedral_syzygy",
              pw(Tico, 2) + pw(H, 3) == c(1728) * pw(f, 5),
              "T^2 + H^3 differs from 1728 f^5");
    out.exact("tetrahedral_syzygy",
              (pw(chi, 2) - pw(W, 3) + c(108) * pw(t4, 4)).is_zero(),
              "chi^2 - W^3 + 108 t^4 is nonzero");
    {
      MultiPoly f1 = t4 * chi, f2 = W, f3 = t4 * t4;
      out.exact("octahedral_syzygy",
                pw(f1, 2) == f3 * pw(f2, 3) - c(108) * pw(f3, 3),
                "f1^2 differs from f3 f2^3 - 108 f3^3");
    }
    out.exact("level3_syzygy", pw(F1, 3) + pw(F2, 3) == pw(F3, 2),
              "F1^3 + F2^3 differs from F3^2");
    {
      MultiPoly f1 = F1 * F2, f2 = F3, f3 = pw(F1, 3) - pw(F2, 3);
      out.exact("level3_derived_quartic", pw(f2, 4) == pw(f3, 2) + c(4) * pw(f1, 3),
                "f2^4 differs from f3^2 + 4 f1^3");
      MultiPoly g1 = f2 * f3, g2 = f1, g3 = f2 * f2;
      out.exact("level3_derived_octahedral",
                pw(g1, 2) == pw(g3, 3) - c(4) * pw(g2, 3) * g3,
                "g1^2 differs from g3^3 - 4 g2^3 g3");
    }

    // q-series identifications on the modular curves of level 5, 4, 3
    long den = 120, T = (cfg_.truncation_margin + 10) * den;
    QSeries et = eta(den, T);
    QSeries e4 = eisenstein(4, den, T), e6 = eisenstein(6, den, T);
    QSeries dlt = qs_pow(et, 24);
    QSeries x1 = et * theta_char(3, 5, den, T);
    QSeries x2 = et * theta_char(1, 5, den, T);
    auto eval2 = [&](const MultiPoly& p, const QSeries& s1, const QSeries& s2) {
      std::vector<QSeries> vars(6, qs_zero(den, kInfTrunc));
      vars[0] = s1;
      vars[1] = s2;
      return poly_eval(p, vars);
    };

    out.timed("f_equals_minus_delta", [&](CheckResult& r) {
      series_eq_verdict(r, eval2(f, x1, x2), -dlt);
    });
    out.timed("H_equals_minus_eta8_delta_E4", [&](CheckResult& r) {
      series_eq_verdict(r, eval2(H, x1, x2), -(qs_pow(et, 8) * dlt * e4));
    });
    out.timed("T_equals_delta2_E6", [&](CheckResult& r) {
      series_eq_verdict(r, eval2(Tico, x1, x2), qs_pow(dlt, 2) * e6);
    });
    out.timed("icosa_j_relation", [&](CheckResult& r) {
      // j = H^3 / f^5 cross-multiplied with j = E4^3 / Delta
      series_eq_verdict(r, qs_pow(e4, 3) * qs_pow(eval2(f, x1, x2), 5),
                        dlt * qs_pow(eval2(H, x1, x2), 3));
    });

    QSeries th40 = theta_level4(0, den, T), th41 = theta_level4(1, den, T);
    out.timed("level4_t4_16delta", [&](CheckResult& r) {
      series_eq_verdict(r, qs_pow(eval2(t4, th40, th41), 4),
                        Cyclo(16) * dlt);
    });
    out.timed("level4_W_E4", [&](CheckResult& r) {
      series_eq_verdict(r, eval2(W, th40, th41), e4);
    });
    out.timed("level4_chi_E6", [&](CheckResult& r) {
      series_eq_verdict(r, eval2(chi, th40, th41), e6);
    });

    QSeries th30 = theta_level3(0, den, T), th31 = theta_level3(1, den, T);
    out.timed("level3_F1_E4", [&](CheckResult& r) {
      series_eq_verdict(r, eval2(F1, th30, th31), e4);
    });
    out.timed("level3_F2cubed", [&](CheckResult& r) {
      series_eq_verdict(r, qs_pow(eval2(F2, th30, th31), 3),
                        Cyclo(-1728) * dlt);
    });
    out.timed("level3_F3_E6", [&](CheckResult& r) {
      series_eq_verdict(r, eval2(F3, th30, th31), e6);
    });

    return out.take();
  }

 private:
  // ---- verdict plumbing -------------------------------------------------

  struct Verdict {
    bool ok;
    std::string note;
    static Verdict pass(std::string n = {}) { return {true, std::move(n)}; }
    static Verdict fail(std::string n) { return {false, std::move(n)}; }
  };

  class Collector {
   public:
    explicit Collector(std::string suite) : suite_(std::move(suite)) {}

    void exact(const std::string& name, bool ok,
               const std::string& witness_on_fail,
               const std::string& note_on_pass = {}) {
      detail::Stopwatch sw;
      CheckResult r;
      r.suite = suite_;
      r.name = name;
      r.symbolic = true;
      r.status = ok ? CheckStatus::pass : CheckStatus::fail;
      r.witness = ok ? note_on_pass : witness_on_fail;
      r.elapsed_ms = sw.ms();
      results_.push_back(std::move(r));
    }

    template <typename Fn>
    void run(const std::string& name, Fn&& fn) {
      detail::Stopwatch sw;
      CheckResult r;
      r.suite = suite_;
      r.name = name;
      r.symbolic = true;
      try {
        Verdict v = fn();
        r.status = v.ok ? CheckStatus::pass : CheckStatus::fail;
        r.witness = v.note;
      } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        r.witness = std::string("exception: ") + e.what();
      }
      r.elapsed_ms = sw.ms();
      results_.push_back(std::move(r));
    }

    // for series checks: the callback fills status/witness/truncation
    template <typename Fn>
    void timed(const std::string& name, Fn&& fn) {
      detail::Stopwatch sw;
      CheckResult r;
      r.suite = suite_;
      r.name = name;
      r.symbolic = false;
      try {
        fn(r);
      } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        r.witness = std::string("exception: ") + e.what();
      }
      r.elapsed_ms = sw.ms();
      results_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

   private:
    std::string suite_;
    std::vector<CheckResult> results_;
  };

  // classify a difference series that is expected to vanish
  void series_zero_verdict(CheckResult& r, const QSeries& diff,
                           long potential_val) const {
    r.symbolic = false;
    if (!diff.is_zero()) {
      r.status = CheckStatus::fail;
      std::ostringstream os;
      os << "leading discrepancy " << diff.str(2);
      r.witness = os.str();
      return;
    }
    long certified = (diff.trunc - potential_val) / diff.den;
    r.truncation_used = certified;
    if (certified >= 10 && certified >= cfg_.truncation_margin) {
      r.status = CheckStatus::pass;
    } else {
      r.status = CheckStatus::inconclusive;
      r.witness = "difference vanishes but only " + std::to_string(certified) +
                  " integral q-powers beyond the potential valuation are "
                  "certified";
    }
  }

  void series_eq_verdict(CheckResult& r, const QSeries& lhs,
                         const QSeries& rhs) const {
    long pv = std::min(lhs.valuation(), rhs.valuation());
    series_zero_verdict(r, lhs - rhs, pv);
  }

  // membership of s in the exact 2-dimensional span of t1, t2
  void span_membership_verdict(CheckResult& r, const QSeries& s,
                               const QSeries& t1, const QSeries& t2,
                               long potential_val) const {
    // solve for alpha, beta from two exponents where (t1, t2) is invertible
    long e1 = t1.valuation();
    std::optional<std::pair<Cyclo, Cyclo>> sol;
    for (long e2 = e1 + 1; e2 < e1 + 40 * t1.den; ++e2) {
      Cyclo a = t1.coeff(e1, t1.den), b = t2.coeff(e1, t2.den);
      Cyclo cc = t1.coeff(e2, t1.den), d = t2.coeff(e2, t2.den);
      Cyclo det = a * d - b * cc;
      if (det.is_zero()) continue;
      Cyclo s1 = s.coeff(e1, s.den), s2 = s.coeff(e2, s.den);
      Cyclo inv = inverse(det);
      sol = {{inv * (d * s1 - b * s2), inv * (a * s2 - cc * s1)}};
      break;
    }
    if (!sol) {
      r.status = CheckStatus::fail;
      r.witness = "span basis is degenerate on the computed prefix";
      return;
    }
    auto [alpha, beta] = *sol;
    QSeries diff = s - alpha * t1 - beta * t2;
    series_zero_verdict(r, diff, potential_val);
    if (r.status == CheckStatus::pass) {
      std::ostringstream os;
      os << "coefficients: " << alpha << ", " << beta;
      r.witness = os.str();
    }
  }

  // ---- shared caches ----------------------------------------------------

  const SeriesContext& base() {
    if (!base_) base_ = std::make_unique<SeriesContext>(cfg_.truncation_margin);
    return *base_;
  }
  PhiCache& phi_cache() {
    if (!phi_) phi_ = std::make_unique<PhiCache>(base());
    return *phi_;
  }

  bool enabled(const std::string& s) const {
    if (cfg_.suites_enabled.empty()) return true;
    return std::find(cfg_.suites_enabled.begin(), cfg_.suites_enabled.end(),
                     s) != cfg_.suites_enabled.end();
  }

  static LinearMap st(int nu) {
    const auto& M = matrices();
    return M.S * map_pow(M.T, nu);
  }

  static std::string phi_name(int m, int n) {
    return "phi_" + std::to_string(m) + "_" + std::to_string(n);
  }

  // named target modular forms on the base grid
  const QSeries& target_series(const std::string& key) {
    auto it = targets_.find(key);
    if (it != targets_.end()) return it->second;
    const SeriesContext& c = base();
    QSeries eta8 = qs_pow(c.eta1, 8);
    QSeries v;
    if (key == "delta") v = c.dlt;
    else if (key == "deltaE6") v = c.dlt * c.e6;
    else if (key == "eta8deltaE4") v = eta8 * c.dlt * c.e4;
    else if (key == "eta8deltaE4E6") v = eta8 * c.dlt * c.e4 * c.e6;
    else if (key == "delta2E6") v = qs_pow(c.dlt, 2) * c.e6;
    else if (key == "eta8delta2E4") v = eta8 * qs_pow(c.dlt, 2) * c.e4;
    else if (key == "delta3E6") v = qs_pow(c.dlt, 3) * c.e6;
    else if (key == "eta8delta3E4") v = eta8 * qs_pow(c.dlt, 3) * c.e4;
    else if (key == "eta8delta2E4^4") v = eta8 * qs_pow(c.dlt, 2) * qs_pow(c.e4, 4);
    else if (key == "eta8delta2E4E6^2") v = eta8 * qs_pow(c.dlt, 2) * c.e4 * qs_pow(c.e6, 2);
    else throw std::logic_error("unknown target series " + key);
    return targets_.emplace(key, std::move(v)).first->second;
  }

  static QSeries tau_poly(const std::vector<long>& coef, const QSeries& tau) {
    // Horner evaluation of an integer polynomial at the series tau
    QSeries r = qs_const(Cyclo(coef.back()), tau.den);
    for (size_t k = coef.size() - 1; k-- > 0;)
      r = r * tau + qs_const(Cyclo(coef[k]), tau.den);
    return r;
  }

  static bool h_matrix_pattern_ok(const LinearMap& h) {
    // signed permutation: rows 0..5 pick columns {5,3,4,2,0,1} with signs
    // {+,+,+,-,-,-}
    static const int col[6] = {5, 3, 4, 2, 0, 1};
    static const int sgn[6] = {+1, +1, +1, -1, -1, -1};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        Cyclo want = (j == col[i]) ? Cyclo(sgn[i]) : Cyclo(0);
        if (!(h.at(i, j) == want)) return false;
      }
    return true;
  }

  // expected columns of 13 * Stilde for the displayed expansions
  void check_s_columns(Collector& out) {
    const auto& rep = rep21();
    const Cyclo s13 = field_constants().sqrt13;
    auto cc = [](int k) { return zeta_pow(k) + zeta_pow(13 - k); };
    auto hf = [&](long a, long b) {  // (a + b sqrt13)/2
      return Rational(1, 2) * (Cyclo(a) + Rational(b) * s13);
    };
    const Cyclo c1 = cc(1), c2 = cc(2), c3 = cc(3), c4 = cc(4), c5 = cc(5),
                c6 = cc(6);

    struct Col {
      int index;
      std::array<Cyclo, 21> v;
    };
    std::vector<Col> cols;

    {  // image of B0(0)
      Col c{0, {}};
      c.v[0] = Cyclo(5); c.v[1] = Cyclo(2); c.v[2] = Cyclo(-2);
      for (int i : {3, 5, 7}) c.v[i] = Cyclo(1);
      for (int i : {9, 11, 13}) c.v[i] = Cyclo(-1);
      for (int i : {4, 6, 8, 10, 12, 14}) c.v[i] = Cyclo(1);
      for (int i = 15; i < 21; ++i) c.v[i] = Cyclo(2);
      cols.push_back(c);
    }
    {  // image of B0(1)
      Col c{1, {}};
      c.v[0] = Cyclo(12); c.v[1] = hf(7, 1); c.v[2] = hf(-7, 1);
      for (int i : {3, 5, 7}) c.v[i] = hf(-3, 1);
      for (int i : {9, 11, 13}) c.v[i] = hf(3, 1);
      for (int i : {4, 6, 8}) c.v[i] = hf(-3, -3);
      for (int i : {10, 12, 14}) c.v[i] = hf(-3, 3);
      for (int i = 15; i < 21; ++i) c.v[i] = Cyclo(-3);
      cols.push_back(c);
    }
    {  // image of B0(2)
      Col c{2, {}};
      c.v[0] = Cyclo(-12); c.v[1] = hf(-7, 1); c.v[2] = hf(7, 1);
      for (int i : {3, 5, 7}) c.v[i] = hf(3, 1);
      for (int i : {9, 11, 13}) c.v[i] = hf(-3, 1);
      for (int i : {4, 6, 8}) c.v[i] = hf(3, -3);
      for (int i : {10, 12, 14}) c.v[i] = hf(3, 3);
      for (int i = 15; i < 21; ++i) c.v[i] = Cyclo(3);
      cols.push_back(c);
    }
    {  // image of B1(1)
      Col c{3, {}};
      c.v[0] = Cyclo(6); c.v[1] = hf(-3, 1); c.v[2] = hf(3, 1);
      c.v[15] = Cyclo(3) * (c4 + c6 + c2);
      c.v[16] = Cyclo(3) * (c3 + c2 + c5);
      c.v[17] = Cyclo(3) * (c1 + c5 + c6);
      c.v[18] = Cyclo(3) * (c4 + c6 + c3);
      c.v[19] = Cyclo(3) * (c3 + c2 + c1);
      c.v[20] = Cyclo(3) * (c1 + c5 + c4);
      c.v[4] = Cyclo(3) * (Cyclo(1) + c4);
      c.v[6] = Cyclo(3) * (Cyclo(1) + c3);
      c.v[8] = Cyclo(3) * (Cyclo(1) + c1);
      c.v[10] = Cyclo(3) * (Cyclo(1) + c6);
      c.v[12] = Cyclo(3) * (Cyclo(1) + c2);
      c.v[14] = Cyclo(3) * (Cyclo(1) + c5);
      c.v[3] = Cyclo(1) + c4 + Cyclo(2) * c1 + c2;
      c.v[5] = Cyclo(1) + c3 + Cyclo(2) * c4 + c5;
      c.v[7] = Cyclo(1) + c1 + Cyclo(2) * c3 + c6;
      c.v[9] = -(Cyclo(1) + c6 + Cyclo(2) * c5 + c3);
      c.v[11] = -(Cyclo(1) + c2 + Cyclo(2) * c6 + c1);
      c.v[13] = -(Cyclo(1) + c5 + Cyclo(2) * c2 + c4);
      cols.push_back(c);
    }
    {  // image of B12(1)
      Col c{9, {}};
      c.v[0] = Cyclo(-6); c.v[1] = hf(3, 1); c.v[2] = hf(-3, 1);
      c.v[15] = Cyclo(-3) * (c4 + c6 + c3);
      c.v[16] = Cyclo(-3) * (c3 + c2 + c1);
      c.v[17] = Cyclo(-3) * (c1 + c5 + c4);
      c.v[18] = Cyclo(-3) * (c4 + c6 + c2);
      c.v[19] = Cyclo(-3) * (c3 + c2 + c5);
      c.v[20] = Cyclo(-3) * (c1 + c5 + c6);
      c.v[4] = Cyclo(-3) * (Cyclo(1) + c6);
      c.v[6] = Cyclo(-3) * (Cyclo(1) + c2);
      c.v[8] = Cyclo(-3) * (Cyclo(1) + c5);
      c.v[10] = Cyclo(-3) * (Cyclo(1) + c4);
      c.v[12] = Cyclo(-3) * (Cyclo(1) + c3);
      c.v[14] = Cyclo(-3) * (Cyclo(1) + c1);
      c.v[3] = -(Cyclo(1) + c6 + Cyclo(2) * c5 + c3);
      c.v[5] = -(Cyclo(1) + c2 + Cyclo(2) * c6 + c1);
      c.v[7] = -(Cyclo(1) + c5 + Cyclo(2) * c2 + c4);
      c.v[9] = Cyclo(1) + c4 + Cyclo(2) * c1 + c2;
      c.v[11] = Cyclo(1) + c3 + Cyclo(2) * c4 + c5;
      c.v[13] = Cyclo(1) + c1 + Cyclo(2) * c3 + c6;
      cols.push_back(c);
    }
    {  // image of B1(2)
      Col c{4, {}};
      c.v[0] = Cyclo(2); c.v[1] = hf(-1, -1); c.v[2] = hf(1, -1);
      c.v[15] = c4 + c6 + c2;
      c.v[16] = c3 + c2 + c5;
      c.v[17] = c1 + c5 + c6;
      c.v[18] = c4 + c6 + c3;
      c.v[19] = c3 + c2 + c1;
      c.v[20] = c1 + c5 + c4;
      c.v[4] = Cyclo(-1) - c4 + Cyclo(2) * c1 + c2;
      c.v[6] = Cyclo(-1) - c3 + Cyclo(2) * c4 + c5;
      c.v[8] = Cyclo(-1) - c1 + Cyclo(2) * c3 + c6;
      c.v[10] = Cyclo(-1) - c6 + Cyclo(2) * c5 + c3;
      c.v[12] = Cyclo(-1) - c2 + Cyclo(2) * c6 + c1;
      c.v[14] = Cyclo(-1) - c5 + Cyclo(2) * c2 + c4;
      c.v[3] = Cyclo(1) + c4;
      c.v[5] = Cyclo(1) + c3;
      c.v[7] = Cyclo(1) + c1;
      c.v[9] = -(Cyclo(1) + c6);
      c.v[11] = -(Cyclo(1) + c2);
      c.v[13] = -(Cyclo(1) + c5);
      cols.push_back(c);
    }
    {  // image of B12(2)
      Col c{10, {}};
      c.v[0] = Cyclo(2); c.v[1] = hf(-1, 1); c.v[2] = hf(1, 1);
      c.v[15] = c4 + c6 + c3;
      c.v[16] = c3 + c2 + c1;
      c.v[17] = c1 + c5 + c4;
      c.v[18] = c4 + c6 + c2;
      c.v[19] = c3 + c2 + c5;
      c.v[20] = c1 + c5 + c6;
      c.v[4] = Cyclo(-1) - c6 + Cyclo(2) * c5 + c3;
      c.v[6] = Cyclo(-1) - c2 + Cyclo(2) * c6 + c1;
      c.v[8] = Cyclo(-1) - c5 + Cyclo(2) * c2 + c4;
      c.v[10] = Cyclo(-1) - c4 + Cyclo(2) * c1 + c2;
      c.v[12] = Cyclo(-1) - c3 + Cyclo(2) * c4 + c5;
      c.v[14] = Cyclo(-1) - c1 + Cyclo(2) * c3 + c6;
      c.v[3] = Cyclo(1) + c6;
      c.v[5] = Cyclo(1) + c2;
      c.v[7] = Cyclo(1) + c5;
      c.v[9] = -(Cyclo(1) + c4);
      c.v[11] = -(Cyclo(1) + c3);
      c.v[13] = -(Cyclo(1) + c1);
      cols.push_back(c);
    }
    {  // image of B5
      Col c{15, {}};
      c.v[0] = Cyclo(4); c.v[1] = Cyclo(-1); c.v[2] = Cyclo(1);
      c.v[15] = -(c3 + Cyclo(2) * (c2 + c4 + c1));
      c.v[16] = -(c1 + Cyclo(2) * (c5 + c3 + c4));
      c.v[17] = -(c4 + Cyclo(2) * (c6 + c1 + c3));
      c.v[18] = -(c2 + Cyclo(2) * (c3 + c6 + c5));
      c.v[19] = -(c5 + Cyclo(2) * (c1 + c2 + c6));
      c.v[20] = -(c6 + Cyclo(2) * (c4 + c5 + c2));
      c.v[4] = c4 + c6 + c2;
      c.v[6] = c3 + c2 + c5;
      c.v[8] = c1 + c5 + c6;
      c.v[10] = c4 + c6 + c3;
      c.v[12] = c3 + c2 + c1;
      c.v[14] = c1 + c5 + c4;
      c.v[3] = c4 + c6 + c2;
      c.v[5] = c3 + c2 + c5;
      c.v[7] = c1 + c5 + c6;
      c.v[9] = -(c4 + c6 + c3);
      c.v[11] = -(c3 + c2 + c1);
      c.v[13] = -(c1 + c5 + c4);
      cols.push_back(c);
    }
    {  // image of B8
      Col c{18, {}};
      c.v[0] = Cyclo(4); c.v[1] = Cyclo(-1); c.v[2] = Cyclo(1);
      c.v[15] = -(c2 + Cyclo(2) * (c3 + c6 + c5));
      c.v[16] = -(c5 + Cyclo(2) * (c1 + c2 + c6));
      c.v[17] = -(c6 + Cyclo(2) * (c4 + c5 + c2));
      c.v[18] = -(c3 + Cyclo(2) * (c2 + c4 + c1));
      c.v[19] = -(c1 + Cyclo(2) * (c5 + c3 + c4));
      c.v[20] = -(c4 + Cyclo(2) * (c6 + c1 + c3));
      c.v[4] = c4 + c6 + c3;
      c.v[6] = c3 + c2 + c1;
      c.v[8] = c1 + c5 + c4;
      c.v[10] = c4 + c6 + c2;
      c.v[12] = c3 + c2 + c5;
      c.v[14] = c1 + c5 + c6;
      c.v[3] = c4 + c6 + c3;
      c.v[5] = c3 + c2 + c1;
      c.v[7] = c1 + c5 + c4;
      c.v[9] = -(c4 + c6 + c2);
      c.v[11] = -(c3 + c2 + c5);
      c.v[13] = -(c1 + c5 + c6);
      cols.push_back(c);
    }

    for (const Col& col : cols) {
      out.run("s_column_" + b_names()[col.index], [&] {
        for (int row = 0; row < 21; ++row) {
          Cyclo got = Cyclo(13) * rep.Stilde.at(row, col.index);
          if (!(got == col.v[row]))
            return Verdict::fail("entry at row " + b_names()[row] +
                                 " differs from the displayed expansion");
        }
        return Verdict::pass();
      });
    }
  }

  SuiteConfig cfg_;
  std::unique_ptr<SeriesContext> base_;
  std::unique_ptr<PhiCache> phi_;
  std::map<std::string, QSeries> targets_;
};

inline SuiteReport run_all(const SuiteConfig& cfg) {
  SuiteEngine engine(cfg);
  return engine.run_all();
}

}  // namespace sl213
