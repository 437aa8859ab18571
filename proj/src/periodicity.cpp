#include "isomf/periodicity.hpp"

#include <functional>
#include <map>

#include "isomf/isobaric.hpp"

namespace isomf {

namespace {

// First repeated k-window in seq; seq must hold at least preperiod+period+k
// entries for the repeat to be visible.
struct Cycle {
  bool found = false;
  int preperiod = 0;
  int period = 0;
};

Cycle find_cycle(const std::vector<mpz_class>& seq, int k) {
  std::map<std::vector<mpz_class>, int> seen;
  int windows = static_cast<int>(seq.size()) - k + 1;
  for (int n = 0; n < windows; ++n) {
    std::vector<mpz_class> w(seq.begin() + n, seq.begin() + n + k);
    auto [it, inserted] = seen.emplace(std::move(w), n);
    if (!inserted) return {true, it->second, n - it->second};
  }
  return {};
}

std::vector<mpz_class> reduced_params(const CoreParams& t, const mpz_class& m) {
  std::vector<mpz_class> out;
  for (int j = 1; j <= t.k(); ++j) {
    const Scalar& s = t.at(j);
    if (s.kind() != Scalar::Kind::BigInt)
      throw DomainMismatch("period detection needs BigInt parameters");
    mpz_class r = s.as_int() % m;
    if (r < 0) r += m;
    out.push_back(r);
  }
  return out;
}

std::vector<mpz_class> f_sequence_mod(const std::vector<mpz_class>& t,
                                      const mpz_class& m, int count) {
  int k = static_cast<int>(t.size());
  std::vector<mpz_class> f;
  f.reserve(count);
  f.push_back(mpz_class(1) % m);
  for (int n = 1; n < count; ++n) {
    mpz_class acc = 0;
    for (int j = 1; j <= std::min(n, k); ++j) acc += t[j - 1] * f[n - j];
    f.push_back(acc % m);
  }
  return f;
}

}  // namespace

PeriodResult period_mod(const CoreParams& t, const mpz_class& m, long bound) {
  if (t.k() < 1) throw Error("period_mod needs k >= 1");
  if (m < 2) throw Error("period_mod needs m >= 2");
  auto tm = reduced_params(t, m);
  int k = t.k();
  auto seq = f_sequence_mod(tm, m, static_cast<int>(bound) + k);
  Cycle c = find_cycle(seq, k);
  if (!c.found) throw Error("period_mod: no repeat within bound");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), tm[k - 1].get_mpz_t(), m.get_mpz_t());
  if (g == 1 && c.preperiod != 0)
    throw Error("period_mod: expected pure periodicity for unit t_k");
  return {true, c.preperiod, c.period, m, bound};
}

bool core_irreducible_mod_p(const CoreParams& t, const mpz_class& p) {
  int k = t.k();
  if (k < 1 || k > 4) throw Error("core_irreducible_mod_p supports 1 <= k <= 4");
  if (k == 1) return true;
  auto tm = reduced_params(t, p);
  // ascending coefficients of X^k - t_1 X^{k-1} - ... - t_k mod p
  std::vector<mpz_class> c(k + 1);
  for (int j = 1; j <= k; ++j) c[k - j] = (p - tm[j - 1]) % p;
  c[k] = 1;
  auto eval = [&](const mpz_class& x) {
    mpz_class acc = 0;
    for (int i = k; i >= 0; --i) acc = (acc * x + c[i]) % p;
    return acc;
  };
  for (mpz_class x = 0; x < p; ++x)
    if (eval(x) == 0) return false;
  if (k < 4) return true;
  // No linear factor; a quartic is reducible only via a quadratic factor.
  for (mpz_class b = 0; b < p; ++b)
    for (mpz_class a = 0; a < p; ++a) {
      // divide c by X^2 + a X + b over F_p
      std::vector<mpz_class> r = c;
      for (int i = k; i >= 2; --i) {
        mpz_class q = r[i];
        r[i] = 0;
        r[i - 1] = (r[i - 1] - q * a % p + p * p) % p;
        r[i - 2] = (r[i - 2] - q * b % p + p * p) % p;
      }
      if (r[0] == 0 && r[1] == 0) return false;
    }
  return true;
}

Thm19Report check_thm19(const CoreParams& t, const mpz_class& p, long bound) {
  Thm19Report out;
  out.report.identity = "thm19-period-divides";
  if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw Error("check_thm19 needs a prime modulus");
  auto tm = reduced_params(t, p);
  if (tm.empty() || tm.back() == 0) throw Error("check_thm19 needs t_k nonzero mod p");
  PeriodResult pr = period_mod(t, p, bound);
  out.period = pr.period;
  out.irreducible = core_irreducible_mod_p(t, p);
  mpz_class order;
  mpz_pow_ui(order.get_mpz_t(), p.get_mpz_t(), t.k());
  order -= 1;
  out.report.sweep = "p=" + p.get_str() + " k=" + std::to_string(t.k()) +
                     (out.irreducible ? " irreducible" : " reducible");
  if (out.irreducible && order % pr.period != 0)
    out.report.fail("period " + std::to_string(pr.period) + " does not divide " +
                    order.get_str());
  return out;
}

PeriodResult detect_integral_period(const CoreParams& t, long bound) {
  if (t.k() < 1) throw Error("detect_integral_period needs k >= 1");
  int k = t.k();
  std::vector<mpz_class> tz;
  for (int j = 1; j <= k; ++j) {
    if (t.at(j).kind() != Scalar::Kind::BigInt)
      throw DomainMismatch("integral period detection needs BigInt parameters");
    tz.push_back(t.at(j).as_int());
  }
  std::vector<mpz_class> f;
  f.push_back(1);
  for (int n = 1; n < static_cast<int>(bound) + k; ++n) {
    mpz_class acc = 0;
    for (int j = 1; j <= std::min(n, k); ++j) acc += tz[j - 1] * f[n - j];
    f.push_back(acc);
  }
  Cycle c = find_cycle(f, k);
  PeriodResult out;
  out.bound = bound;
  if (c.found) {
    out.periodic = true;
    out.preperiod = c.preperiod;
    out.period = c.period;
  }
  return out;
}

CoreParams cyclotomic_core(int d) {
  if (d < 1) throw Error("cyclotomic_core needs d >= 1");
  // Phi_d = (X^d - 1) / prod_{e | d, e < d} Phi_e, by exact division.
  std::function<PolyP(int)> phi = [&](int n) -> PolyP {
    std::vector<mpz_class> xc(n + 1, mpz_class(0));
    xc[0] = -1;
    xc[n] = 1;
    PolyP num{xc};
    for (int e = 1; e < n; ++e)
      if (n % e == 0) num = polyp_div_exact(num, phi(e));
    return num;
  };
  PolyP f = phi(d);
  std::vector<Scalar> coeffs;
  for (const auto& c : f.coeffs) coeffs.emplace_back(c);
  return core_from_coefficients(coeffs);
}

PeriodResult wip_column_period_mod(const CoreParams& t, const WeightVector& omega,
                                   const mpz_class& m, long bound) {
  if (t.k() < 1) throw Error("wip_column_period_mod needs k >= 1");
  int k = t.k();
  std::vector<Scalar> tm;
  for (const auto& r : reduced_params(t, m)) tm.emplace_back(ModInt(r, m));
  auto vals = series_from_genfun(omega, tm, static_cast<int>(bound) + k);
  // The n = 0 entry is the WIP convention P_0 = 1, which need not satisfy the
  // recursion (e.g. the Lucas column has G_0 = k); windows are valid recursion
  // states only from n >= 1, so cycle detection starts there.
  std::vector<mpz_class> seq;
  for (std::size_t i = 1; i < vals.size(); ++i) seq.push_back(vals[i].as_mod().residue);
  Cycle c = find_cycle(seq, k);
  if (!c.found) throw Error("wip_column_period_mod: no repeat within bound");
  return {true, c.preperiod + 1, c.period, m, bound};
}

}  // namespace isomf
