// Acceptance suite: twelve end-to-end checks, one printed line each.
// Exits nonzero if any check fails.
#include <chrono>
#include <iostream>
#include <random>
#include <string>

#include "isomf/catalog.hpp"
#include "isomf/companion.hpp"
#include "isomf/identities.hpp"
#include "isomf/isobaric.hpp"
#include "isomf/norm.hpp"
#include "isomf/periodicity.hpp"
#include "isomf/roots.hpp"

using namespace isomf;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok) {
  std::cout << "criterion " << idx << " (" << what << "): " << (ok ? "pass" : "FAIL")
            << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool criterion1_gfp_table() {
  return gfp_poly(5, 1).to_string() == "t1" &&
         gfp_poly(5, 2).to_string() == "t1^2 + t2" &&
         gfp_poly(5, 3).to_string() == "t1^3 + 2*t1*t2 + t3" &&
         gfp_poly(5, 4).to_string() == "t1^4 + 3*t1^2*t2 + t2^2 + 2*t1*t3 + t4" &&
         gfp_poly(5, 5).to_string() ==
             "t1^5 + 4*t1^3*t2 + 3*t1*t2^2 + 3*t1^2*t3 + 2*t2*t3 + 2*t1*t4 + t5";
}

bool criterion2_recoveries() {
  bool ok = true;
  CoreParams tau = recover_params(gfp_values(CoreParams::from_ints({2, -1}), 6));
  ok = ok && tau.at(1) == Scalar(2L) && tau.at(2) == Scalar(-1L) && tau.at(3).is_zero();

  std::vector<Scalar> sig;
  for (int n = 0; n <= 6; ++n) {
    PolyP f;
    f.coeffs.assign(n + 1, mpz_class(1));  // 1 + p + ... + p^n
    sig.push_back(Scalar(f));
  }
  CoreParams s = recover_params(sig);
  ok = ok && s.at(1) == scalar_parse("p+1") && s.at(2) == scalar_parse("-p") &&
       s.at(3).is_zero();

  LocalMF phi = from_params(catalog("phi", {}, {}, 12), 12);
  CoreParams tphi = recover_params(phi.values);
  for (int j = 1; j <= 12; ++j) ok = ok && tphi.at(j) == scalar_parse("p-1");

  LocalMF mu = from_params(catalog("mu", {}, mpz_class(3), 12), 12);
  CoreParams tmu = recover_params(mu.values);
  for (int j = 1; j <= 12; ++j) ok = ok && tmu.at(j) == Scalar(-1L);
  return ok;
}

bool criterion3_product_core() {
  bool ok = true;
  // symbolic
  LocalMF taus = from_params(catalog("tau", {}, {}, 8), 8);
  LocalMF sigs = from_params(catalog("sigma", {}, {}, 8), 8);
  CoreParams u = effective_params(convolve(taus, sigs));
  ok = ok && u.at(1) == scalar_parse("p+3") && u.at(2) == scalar_parse("-3*p-3") &&
       u.at(3) == scalar_parse("3*p+1") && u.at(4) == scalar_parse("-p");
  for (int j = 5; j <= 8; ++j) ok = ok && u.at(j).is_zero();
  CoreParams prod = core_product(catalog("tau", {}, {}, 8), catalog("sigma", {}, {}, 8));
  for (int j = 1; j <= 4; ++j) ok = ok && prod.at(j) == u.at(j);

  // at p = 2
  LocalMF tau2 = from_params(catalog("tau", {}, mpz_class(2), 8), 8);
  LocalMF sig2 = from_params(catalog("sigma", {}, mpz_class(2), 8), 8);
  CoreParams u2 = effective_params(convolve(tau2, sig2));
  long want[] = {5, -9, 7, -2};
  int deg = 0;
  for (int j = 1; j <= 8; ++j)
    if (!u2.at(j).is_zero()) deg = j;
  ok = ok && deg == 4;
  for (int j = 1; j <= 4; ++j) ok = ok && u2.at(j) == Scalar(want[j - 1]);
  return ok;
}

bool criterion5_hook_splitting() {
  if (!sweep_thm13().pass) return false;
  // cross-validate orbit hooks against Jacobi-Trudi determinants
  for (int k = 1; k <= 4; ++k) {
    std::vector<long> t(k, -2);
    while (true) {
      if (t[k - 1] != 0) {
        CoreParams core = CoreParams::from_ints(t);
        for (int n = 1; n <= 6; ++n)
          for (int j = 0; j < k; ++j)
            if (!(hook(core, n, j) == hook_jt(core, n, j))) return false;
      }
      int i = 0;
      while (i < k && t[i] == 2) t[i++] = -2;
      if (i == k) break;
      ++t[i];
    }
  }
  return true;
}

bool criterion6_norm() {
  for (const auto& rep : [] {
         // same checks the `norm --suite` CLI command runs
         std::vector<CheckReport> reps;
         LocalMF fib = from_params(CoreParams::from_ints({1, 1}), 20);
         auto nr = km_norm(fib, 8);
         auto fv = gfp_values(CoreParams::from_ints({1, 1}), 17);
         CheckReport a;
         for (int n = 0; n <= 8; ++n)
           if (!(nr.values[n] == fv[2 * n + 1])) a.fail("fib");
         if (!(nr.params.at(1) == Scalar(3L)) || !(nr.params.at(2) == Scalar(-1L)))
           a.fail("fib params");
         reps.push_back(a);
         LocalMF tau = from_params(CoreParams::from_ints({2, -1}), 20);
         auto nt = km_norm(tau, 8);
         CheckReport b;
         for (int n = 0; n <= 8; ++n)
           if (!(nt.values[n] == tau.values[n])) b.fail("tau");
         if (!(nt.params.at(1) == Scalar(2L)) || !(nt.params.at(2) == Scalar(-1L)))
           b.fail("tau params");
         reps.push_back(b);
         CheckReport c;
         std::vector<CoreParams> grid;
         for (long x = -2; x <= 2; ++x) {
           if (x != 0) grid.push_back(CoreParams::from_ints({x}));
           for (long y = -2; y <= 2; ++y)
             if (y != 0) grid.push_back(CoreParams::from_ints({x, y}));
         }
         for (const auto& tf : grid)
           for (const auto& tg : grid)
             if (!check_norm_mult(from_params(tf, 8), from_params(tg, 8), 4).pass)
               c.fail("mult");
         reps.push_back(c);
         CheckReport d;
         for (const auto& t :
              {CoreParams::from_ints({2}), CoreParams::from_ints({1, 1}),
               CoreParams::from_ints({1, -1, 2}), CoreParams::from_ints({2, 0, -1, 1})})
           if (!check_norm_degree(from_params(t, 2 * (2 * t.k() + 4))).pass) d.fail("degree");
         reps.push_back(d);
         return reps;
       }())
    if (!rep.pass) return false;
  return true;
}

bool criterion7_roots() {
  mpz_class p2(2);
  for (const char* name : {"zeta", "tau", "sigma", "phi", "mu", "liouville"}) {
    LocalMF f = from_params(catalog(name, {}, p2, 12), 12);
    auto h1 = conv_power(f, 1, 12);
    auto hm = conv_power(f, -1, 12);
    LocalMF inv = inverse(f);
    for (int n = 0; n <= 12; ++n) {
      if (!(h1.values[n] == promote_to_rat(f.values[n]))) return false;
      if (!(hm.values[n] == promote_to_rat(inv.values[n]))) return false;
    }
  }
  auto h = conv_power(from_params(CoreParams::from_ints({1}), 8), mpq_class(1, 2), 8);
  for (int n = 0; n <= 8; ++n) {
    mpz_class c, d;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    mpz_ui_pow_ui(d.get_mpz_t(), 4, n);
    mpq_class want(c, d);
    want.canonicalize();
    if (!(h.values[n] == Scalar(want))) return false;
  }
  LocalMF fib = from_params(CoreParams::from_ints({1, 1}), 12);
  for (int m : {2, 3, 5}) {
    if (!check_root_roundtrip(from_params(catalog("tau", {}, p2, 12), 12), m, 12).pass)
      return false;
    if (!check_root_roundtrip(from_params(catalog("sigma", {}, p2, 12), 12), m, 12).pass)
      return false;
    if (!check_root_roundtrip(fib, m, 12).pass) return false;
  }
  return true;
}

bool criterion8_periodicity() {
  CoreParams fib = CoreParams::from_ints({1, 1});
  struct Want { long m; int period; } wants[] = {{2, 3}, {3, 8}, {7, 16}};
  for (auto [m, want] : wants) {
    auto pr = period_mod(fib, m);
    if (pr.period != want || (m * m - 1) % pr.period != 0) return false;
  }
  if (period_mod(fib, 5).period != 20 || core_irreducible_mod_p(fib, 5)) return false;
  for (int k = 1; k <= 3; ++k) {
    std::vector<long> t(k, -2);
    while (true) {
      for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        if (t[k - 1] % p != 0) {
          auto rep = check_thm19(CoreParams::from_ints(t), p, 5000);
          if (rep.irreducible && !rep.report.pass) return false;
        }
      }
      int i = 0;
      while (i < k && t[i] == 2) t[i++] = -2;
      if (i == k) break;
      ++t[i];
    }
  }
  return true;
}

bool criterion9_wip() {
  for (int k = 1; k <= 4; ++k) {
    std::vector<Scalar> ts;
    for (int j = 0; j < k; ++j) ts.emplace_back(mpz_class(j == k - 1 ? 2 : j - 1));
    CoreParams core(ts);
    auto fser = series_from_genfun(WeightVector::ones(), ts, 10);
    auto gser = series_from_genfun(WeightVector::natural(), ts, 10);
    for (int n = 0; n <= 10; ++n) {
      if (!(wip_poly(WeightVector::ones(), k, n) == gfp_poly(k, n))) return false;
      if (!(gfp_poly(k, n).eval(ts) == fser[n])) return false;
      if (n >= 1) {
        if (!(wip_poly(WeightVector::natural(), k, n) == glp_poly(k, n))) return false;
        if (!(glp_poly(k, n).eval(ts) == gser[n])) return false;
        if (!(glp_poly(k, n).eval(ts) == glp_trace(core, n))) return false;
      }
    }
  }
  return true;
}

bool criterion10_duality() {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> kd(1, 3);
  std::uniform_int_distribution<long> vd(-5, 5);
  for (int i = 0; i < 500; ++i) {
    int k = kd(rng);
    std::vector<long> tv(k);
    for (auto& x : tv) x = vd(rng);
    if (tv.back() == 0) tv.back() = 1;
    CoreParams t = CoreParams::from_ints(tv);
    LocalMF f = from_params(t, 12);
    LocalMF g = inverse(f);
    for (int n = 1; n <= 12; ++n) {
      if (!(g.values[n] == -t.at(n))) return false;
      if (!(g.params->at(n) == -f.values[n])) return false;
    }
    std::vector<long> sv(kd(rng));
    for (auto& x : sv) x = vd(rng);
    if (sv.back() == 0) sv.back() = 1;
    if (!check_cor9(t, CoreParams::from_ints(sv), 12).pass) return false;
  }
  return true;
}

bool criterion11_magnitude() {
  for (int k = 2; k <= 3; ++k) {
    std::vector<long> t(k, -2);
    while (true) {
      if (t[k - 1] != 0) {
        CoreParams core = CoreParams::from_ints(t);
        for (int j = 0; j <= 3; ++j)
          for (int s = 0; s < k; ++s)
            if (!check_prop1_magnitude(core, j, s).magnitude_equal) return false;
      }
      int i = 0;
      while (i < k && t[i] == 2) t[i++] = -2;
      if (i == k) break;
      ++t[i];
    }
  }
  return true;
}

bool criterion12_global() {
  return global_eval(catalog_family("sigma"), 12) == 28 &&
         global_eval(catalog_family("tau"), 36) == 9 &&
         global_eval(catalog_family("phi"), 100) == 40;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  report(1, "symbolic polynomial table", criterion1_gfp_table());
  report(2, "parameter recoveries", criterion2_recoveries());
  report(3, "product core and degree", criterion3_product_core());

  t0 = std::chrono::steady_clock::now();
  bool c4 = sweep_br().pass;
  double s4 = seconds_since(t0);
  report(4, "quadratic splitting sweep", c4 && s4 < 10.0);

  t0 = std::chrono::steady_clock::now();
  bool c5 = criterion5_hook_splitting();
  double s5 = seconds_since(t0);
  report(5, "hook splitting sweep + cross-validation", c5 && s5 < 60.0);

  report(6, "norm suite", criterion6_norm());
  report(7, "convolution powers and roots", criterion7_roots());

  t0 = std::chrono::steady_clock::now();
  bool c8 = criterion8_periodicity();
  double s8 = seconds_since(t0);
  report(8, "periodicity suite", c8 && s8 < 30.0);

  report(9, "weighted-polynomial consistency", criterion9_wip());
  report(10, "inverse duality and product parameters", criterion10_duality());
  report(11, "negative-index magnitude law", criterion11_magnitude());
  report(12, "global assembly", criterion12_global());

  if (failures) {
    std::cout << failures << " criteria FAILED" << std::endl;
    return 1;
  }
  std::cout << "all 12 criteria passed" << std::endl;
  return 0;
}
