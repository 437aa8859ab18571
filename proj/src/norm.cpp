#include "isomf/norm.hpp"

namespace isomf {

NormResult km_norm(const LocalMF& f, int M) {
  if (M < 0) throw Error("km_norm needs M >= 0");
  if (f.horizon() < 2 * M) throw HorizonError("km_norm needs horizon >= 2M");
  NormResult out;
  for (int n = 0; n <= M; ++n) {
    Scalar acc = f.ring_sample().zero_like();
    for (int j = 0; j <= 2 * n; ++j) {
      Scalar term = f.values[2 * n - j] * f.values[j];
      acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    out.values.push_back(acc);
  }
  out.params = recover_params(out.values);
  return out;
}

Scalar km_norm_divisor_sum(const LocalMF& f, int n) {
  if (f.horizon() < 2 * n) throw HorizonError("km_norm_divisor_sum needs horizon >= 2n");
  // divisors of p^{2n} are p^j, lambda(p^j) = (-1)^j
  Scalar acc = f.ring_sample().zero_like();
  for (int j = 0; j <= 2 * n; ++j) {
    Scalar term = f.values[2 * n - j] * f.values[j];
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

LocalMF km_norm_mf(const LocalMF& f, int M) {
  NormResult r = km_norm(f, M);
  LocalMF out;
  out.values = r.values;
  out.params = r.params;
  out.prime = f.prime;
  return out;
}

CheckReport check_norm_mult(const LocalMF& f, const LocalMF& g, int M) {
  CheckReport rep;
  rep.identity = "thm14-norm-multiplicative";
  rep.sweep = "M=" + std::to_string(M);
  LocalMF lhs = km_norm_mf(convolve(f, g), M);
  LocalMF rhs = convolve(km_norm_mf(f, M), km_norm_mf(g, M));
  for (int n = 0; n <= M; ++n)
    if (!(lhs.values[n] == rhs.values[n]))
      rep.fail("n=" + std::to_string(n) + " N(f*g)=" + scalar_format(lhs.values[n]) +
               " N(f)*N(g)=" + scalar_format(rhs.values[n]));
  return rep;
}

CheckReport check_norm_degree(const LocalMF& f) {
  CheckReport rep;
  rep.identity = "thm16-norm-degree";
  DegreeResult df = degree(f);
  LocalMF nf = km_norm_mf(f, f.horizon() / 2);
  DegreeResult dn = degree(nf);
  rep.sweep = "deg(f)=" + std::to_string(df.degree);
  if (df.degree != dn.degree)
    rep.fail("deg(f)=" + std::to_string(df.degree) +
             " deg(N(f))=" + std::to_string(dn.degree));
  return rep;
}

CheckReport check_prop12(const LocalMF& f, int M) {
  CheckReport rep;
  rep.identity = "prop12-norm-s-form";
  rep.sweep = "M=" + std::to_string(M);
  if (f.horizon() < 2 * M) throw HorizonError("check_prop12 needs horizon >= 2M");
  NormResult nr = km_norm(f, M);
  // s_n = -F_n (inverse-parameter duality), s_0 = -1.
  auto s = [&](int n) { return -f.values[n]; };
  for (int n = 1; n <= M; ++n) {
    Scalar rhs = f.ring_sample().int_like(-2) * s(2 * n);
    for (int j = 1; j <= n - 1; ++j) {
      Scalar term = f.ring_sample().int_like(2) * s(2 * n - j) * s(j);
      rhs = (j % 2 == 0) ? rhs + term : rhs - term;
    }
    Scalar sq = s(n) * s(n);
    rhs = (n % 2 == 0) ? rhs + sq : rhs - sq;
    if (!(nr.values[n] == rhs))
      rep.fail("n=" + std::to_string(n) + " N_n=" + scalar_format(nr.values[n]) +
               " s-form=" + scalar_format(rhs));
  }
  return rep;
}

}  // namespace isomf
