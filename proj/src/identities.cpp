#include "isomf/identities.hpp"

#include <algorithm>

#include "isomf/companion.hpp"
#include "isomf/isobaric.hpp"

namespace isomf {

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  j["sweep"] = sweep;
  j["pass"] = pass;
  if (!pass) j["witness"] = witness;
  return j;
}

namespace {

Scalar spow(const Scalar& x, int e) {
  Scalar acc = x.one_like();
  for (int i = 0; i < e; ++i) acc = acc * x;
  return acc;
}

std::string fmt2(const Scalar& t1, const Scalar& t2) {
  return "t=(" + scalar_format(t1) + "," + scalar_format(t2) + ")";
}

std::string fmt_core(const CoreParams& t) {
  std::string s = "t=(";
  for (int j = 1; j <= t.k(); ++j) {
    if (j > 1) s += ",";
    s += scalar_format(t.at(j));
  }
  return s + ")";
}

mpz_class binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

CheckReport check_br_product(const Scalar& t1, const Scalar& t2, int r, int s) {
  CheckReport rep;
  rep.identity = "busche-ramanujan-4.1";
  rep.sweep = fmt2(t1, t2) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
  if (r < 1 || s < r) throw Error("check_br_product needs 1 <= r <= s");
  CoreParams t({t1, t2});
  auto f = gfp_values(t, r + s);
  Scalar lhs = f[r + s];
  Scalar rhs = f[r] * f[s] + t2 * f[r - 1] * f[s - 1];
  if (!(lhs == rhs))
    rep.fail(rep.sweep + " lhs=" + scalar_format(lhs) + " rhs=" + scalar_format(rhs));
  return rep;
}

CheckReport check_br_inverse(const Scalar& t1, const Scalar& t2, int r, int s) {
  CheckReport rep;
  rep.identity = "busche-ramanujan-4.2+lemma1";
  rep.sweep = fmt2(t1, t2) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
  if (r < 1 || s < r) throw Error("check_br_inverse needs 1 <= r <= s");
  CoreParams t({t1, t2});
  auto f = gfp_values(t, r + s);
  // (4.2): F_r F_s = sum_{j=0}^r (-t_2)^j F_{r+s-2j}
  Scalar sum42 = t1.zero_like();
  for (int j = 0; j <= r; ++j) sum42 = sum42 + spow(-t2, j) * f[r + s - 2 * j];
  if (!(f[r] * f[s] == sum42))
    rep.fail(rep.sweep + " (4.2) lhs=" + scalar_format(f[r] * f[s]) +
             " rhs=" + scalar_format(sum42));
  // Lemma 1: t_2 F_{r-1} F_{s-1} + sum_{j=1}^r (-t_2)^j F_{r+s-2j} = 0
  Scalar lem = t2 * f[r - 1] * f[s - 1];
  for (int j = 1; j <= r; ++j) lem = lem + spow(-t2, j) * f[r + s - 2 * j];
  if (!lem.is_zero()) rep.fail(rep.sweep + " lemma1 residue=" + scalar_format(lem));
  // Equivalence: (4.1) minus Lemma 1 must reproduce (4.2).
  Scalar via41 = f[r + s] - t2 * f[r - 1] * f[s - 1];
  if (!(via41 == sum42 - lem))
    rep.fail(rep.sweep + " equivalence broke");
  return rep;
}

McCarthyReport check_mccarthy(const LocalMF& f) {
  CoreParams t = effective_params(f);
  for (int j = 3; j <= t.k(); ++j)
    if (!t.at(j).is_zero()) throw Error("check_mccarthy needs a degree-2 function");
  if (t.k() < 2 || t.at(2).is_zero())
    throw Error("check_mccarthy needs a degree-2 function");
  McCarthyReport out;
  out.recursion.identity = "mccarthy-recursion";
  out.recursion.sweep = fmt2(t.at(1), t.at(2)) + " n<=" + std::to_string(f.horizon());
  Scalar b = -t.at(2);
  for (int n = 1; n + 1 <= f.horizon(); ++n) {
    Scalar lhs = f.values[n + 1];
    Scalar rhs = f.values[1] * f.values[n] - f.values[n - 1] * b;
    if (!(lhs == rhs))
      out.recursion.fail("n=" + std::to_string(n) + " lhs=" + scalar_format(lhs) +
                         " rhs=" + scalar_format(rhs));
  }
  // B(p^n) = F_n^2 - F_{2n}; completely multiplicative iff degree 1.
  int M = f.horizon() / 2;
  std::vector<Scalar> bv;
  bv.push_back(f.ring_sample().one_like());
  for (int n = 1; n <= M; ++n) bv.push_back(f.values[n] * f.values[n] - f.values[2 * n]);
  CoreParams u = recover_params(bv);
  out.b_params = u.params;
  out.b_degree_one.identity = "mccarthy-B-degree-1";
  out.b_degree_one.sweep = out.recursion.sweep;
  for (int j = 2; j <= u.k(); ++j)
    if (!u.at(j).is_zero())
      out.b_degree_one.fail("u_" + std::to_string(j) + "=" + scalar_format(u.at(j)));
  return out;
}

namespace {

// One (core, r, s) instance of the hook expansion, reusing the bottom row
// of A^r. The leg index runs over 0..k-1 (the full row) with F vanishing at
// negative indices; truncating at s-r+1 instead is wrong whenever k > s-r+2.
bool thm13_holds(const CoreParams& t, const std::vector<Scalar>& f,
                 const std::vector<Scalar>& bottom_row_ar, int r, int s,
                 Scalar* lhs_out, Scalar* rhs_out) {
  int k = t.k();
  Scalar rhs = t.ring_sample().zero_like();
  for (int j = 0; j <= k - 1; ++j) {
    if (s - j < 0) continue;  // F vanishes at negative indices down to -(k-1)
    // S_{(r,1^j)} = (-1)^j * (bottom row of A^r)[k-1-j]
    Scalar hookv = bottom_row_ar[k - 1 - j];
    if (j % 2 == 1) hookv = -hookv;
    Scalar term = hookv * f[s - j];
    rhs = (j % 2 == 0) ? rhs + term : rhs - term;
  }
  Scalar lhs = f[r + s];
  if (lhs_out) *lhs_out = lhs;
  if (rhs_out) *rhs_out = rhs;
  return lhs == rhs;
}

}  // namespace

CheckReport check_thm13(const CoreParams& t, int r, int s) {
  CheckReport rep;
  rep.identity = "thm13-hook-busche-ramanujan";
  rep.sweep = fmt_core(t) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
  if (r < 0 || s < r) throw Error("check_thm13 needs 0 <= r <= s");
  auto f = gfp_values(t, r + s);
  Matrix ar = matrix_power(companion_matrix(t), r);
  Scalar lhs, rhs;
  if (!thm13_holds(t, f, ar.back(), r, s, &lhs, &rhs))
    rep.fail(rep.sweep + " lhs=" + scalar_format(lhs) + " rhs=" + scalar_format(rhs));
  return rep;
}

CheckReport params_from_F(int n) {
  CheckReport rep;
  rep.identity = "prop5-params-from-F";
  rep.sweep = "n=" + std::to_string(n);
  if (n < 1) throw Error("params_from_F needs n >= 1");
  std::vector<IsobaricPoly> fpolys;  // F_1..F_n
  for (int j = 1; j <= n; ++j) fpolys.push_back(gfp_poly(n, j));
  IsobaricPoly fn = fpolys[n - 1];
  IsobaricPoly acc(n, n);
  for (const auto& [alpha, c] : fn.terms()) {
    IsobaricPoly mono(n, 0);
    mono.add_term(ExponentVector{}, c);
    for (std::size_t j = 0; j < alpha.alpha.size(); ++j) {
      if (alpha.alpha[j] == 0) continue;
      // t_{j+1} -> (-1)^{j+2} F_{j+1} = (-1)^j F_{j+1}
      IsobaricPoly sub = (j % 2 == 0) ? fpolys[j] : isobaric_scale(-1, fpolys[j]);
      mono = isobaric_mul(mono, isobaric_pow(sub, alpha.alpha[j]));
    }
    acc = isobaric_add(acc, mono);
  }
  // The substituted F_n reproduces t_n up to the same alternating sign that
  // the substitution applies: F_n(..., (-1)^{j+1}F_j, ...) = (-1)^{n+1} t_n.
  IsobaricPoly tn = isobaric_monomial(n, n, n % 2 == 1 ? 1 : -1);
  if (!(acc == tn)) rep.fail("n=" + std::to_string(n) + " got " + acc.to_string());
  return rep;
}

CheckReport check_binomial(const Scalar& t1, const Scalar& t2, int n) {
  CheckReport rep;
  rep.identity = "prop11-binomial";
  rep.sweep = fmt2(t1, t2) + " n=" + std::to_string(n);
  if (n < 0) throw Error("check_binomial needs n >= 0");
  CoreParams t({t1, t2});
  auto f = gfp_values(t, n);
  Scalar rhs = t1.zero_like();
  for (int j = 0; 2 * j <= n; ++j) {
    Scalar c = scalar_from_mpq(t1, mpq_class(binom(n - j, j)));
    Scalar term = c * spow(t1, n - 2 * j) * spow(-t2, j);
    rhs = (j % 2 == 0) ? rhs + term : rhs - term;
  }
  if (!(f[n] == rhs))
    rep.fail(rep.sweep + " lhs=" + scalar_format(f[n]) + " rhs=" + scalar_format(rhs));
  return rep;
}

CheckReport check_totient_formulas(const Scalar& tp, const Scalar& tpp, int N) {
  CheckReport rep;
  rep.identity = "thm4+prop8-totient";
  rep.sweep = "t'=" + scalar_format(tp) + " t''=" + scalar_format(tpp) +
              " N=" + std::to_string(N);
  if (tp == tpp) throw Error("check_totient_formulas: t' = t'' degenerates to the identity");
  if (tp.is_zero() || tpp.is_zero()) throw Error("check_totient_formulas: factors must be nonzero");
  LocalMF beta = from_params(CoreParams({tp}), N);
  LocalMF gamma = from_params(CoreParams({tpp}), N);
  LocalMF alpha = convolve(beta, inverse(gamma));
  CoreParams t = effective_params(alpha);
  for (int n = 1; n <= N; ++n) {
    Scalar fn = spow(tp, n) - spow(tp, n - 1) * tpp;
    if (!(alpha.values[n] == fn))
      rep.fail("F_" + std::to_string(n) + " != " + scalar_format(fn));
    Scalar tn = -spow(tpp, n) + tp * spow(tpp, n - 1);
    if (!(t.at(n) == tn))
      rep.fail("t_" + std::to_string(n) + " != " + scalar_format(tn));
    if (!(alpha.values[n] == spow(tp, n - 1) * alpha.values[1]))
      rep.fail("prop8 failed at n=" + std::to_string(n));
    if (alpha.values[n].is_zero() || t.at(n).is_zero())
      rep.fail("type-4 claim failed at n=" + std::to_string(n));
  }
  return rep;
}

CheckReport check_cor9(const CoreParams& tprime, const CoreParams& tsecond, int N) {
  CheckReport rep;
  rep.identity = "cor9-product-params";
  rep.sweep = "t'=" + fmt_core(tprime) + " t''=" + fmt_core(tsecond) +
              " N=" + std::to_string(N);
  LocalMF f = convolve(from_params(tprime, N), from_params(tsecond, N));
  CoreParams t = effective_params(f);
  for (int n = 1; n <= N; ++n) {
    Scalar rhs = tprime.at(n) + tsecond.at(n);
    for (int j = 1; j <= n - 1; ++j) rhs = rhs - tprime.at(n - j) * tsecond.at(j);
    if (!(t.at(n) == rhs))
      rep.fail("n=" + std::to_string(n) + " t_n=" + scalar_format(t.at(n)) +
               " formula=" + scalar_format(rhs));
  }
  return rep;
}

CheckReport check_thm11(const Scalar& tp, const CoreParams& gamma_params, int N) {
  CheckReport rep;
  rep.identity = "thm11-valence-1s";
  rep.sweep = "t'=" + scalar_format(tp) + " gamma=" + fmt_core(gamma_params) +
              " N=" + std::to_string(N);
  LocalMF gamma = inverse(from_params(gamma_params, N));
  LocalMF f = convolve(from_params(CoreParams({tp}), N), gamma);
  for (int n = 0; n <= N; ++n) {
    Scalar rhs = tp.zero_like();
    for (int j = 0; j <= n; ++j) rhs = rhs + spow(tp, n - j) * gamma.values[j];
    if (!(f.values[n] == rhs))
      rep.fail("n=" + std::to_string(n) + " lhs=" + scalar_format(f.values[n]) +
               " rhs=" + scalar_format(rhs));
  }
  return rep;
}

CheckReport sweep_br() {
  CheckReport rep;
  rep.identity = "busche-ramanujan-suite";
  rep.sweep = "t1,t2 in {-3..3}^2, t2 != 0, 1 <= r <= s, r+s <= 12";
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      if (b == 0) continue;
      Scalar t1{mpz_class(a)}, t2{mpz_class(b)};
      for (int r = 1; r <= 6; ++r)
        for (int s = r; r + s <= 12; ++s) {
          auto r1 = check_br_product(t1, t2, r, s);
          if (!r1.pass) rep.fail(r1.witness);
          auto r2 = check_br_inverse(t1, t2, r, s);
          if (!r2.pass) rep.fail(r2.witness);
        }
    }
  return rep;
}

CheckReport sweep_thm13() {
  CheckReport rep;
  rep.identity = "thm13-sweep";
  rep.sweep = "k <= 4, t in {-2..2}^k, t_k != 0, 0 <= r <= s <= 8";
  for (int k = 1; k <= 4; ++k) {
    std::vector<long> t(k, -2);
    while (true) {
      if (t[k - 1] != 0) {
        CoreParams core = CoreParams::from_ints(t);
        auto f = gfp_values(core, 16);
        Matrix a = companion_matrix(core);
        Matrix ar = identity_matrix(k, core.ring_sample());
        for (int r = 0; r <= 8; ++r) {
          for (int s = std::max(r, 0); s <= 8; ++s) {
            Scalar lhs, rhs;
            if (!thm13_holds(core, f, ar.back(), r, s, &lhs, &rhs))
              rep.fail(fmt_core(core) + " r=" + std::to_string(r) + " s=" +
                       std::to_string(s) + " lhs=" + scalar_format(lhs) +
                       " rhs=" + scalar_format(rhs));
          }
          ar = mat_mul(ar, a);
        }
      }
      int i = 0;
      while (i < k && t[i] == 2) t[i++] = -2;
      if (i == k) break;
      ++t[i];
    }
  }
  return rep;
}

CheckReport sweep_prop5(int max_n) {
  CheckReport rep;
  rep.identity = "prop5-sweep";
  rep.sweep = "n <= " + std::to_string(max_n) + ", symbolic";
  for (int n = 1; n <= max_n; ++n) {
    auto r = params_from_F(n);
    if (!r.pass) rep.fail(r.witness);
  }
  return rep;
}

CheckReport sweep_binomial() {
  CheckReport rep;
  rep.identity = "binomial-sweep";
  rep.sweep = "t1,t2 in {-3..3}^2, t2 != 0, n <= 10";
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      if (b == 0) continue;
      for (int n = 1; n <= 10; ++n) {
        auto r = check_binomial(Scalar(mpz_class(a)), Scalar(mpz_class(b)), n);
        if (!r.pass) rep.fail(r.witness);
      }
    }
  return rep;
}

CheckReport sweep_totient() {
  CheckReport rep;
  rep.identity = "totient-sweep";
  rep.sweep = "t',t'' in {-4..5}, nonzero, t' != t'', N = 10";
  for (long a = -4; a <= 5; ++a)
    for (long b = -4; b <= 5; ++b) {
      if (a == 0 || b == 0 || a == b) continue;
      auto r = check_totient_formulas(Scalar(mpz_class(a)), Scalar(mpz_class(b)), 10);
      if (!r.pass) rep.fail(r.witness);
    }
  return rep;
}

}  // namespace isomf
