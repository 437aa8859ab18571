#include "isomf/roots.hpp"

namespace isomf {

namespace {

mpq_class to_rat(const Scalar& s) {
  switch (s.kind()) {
    case Scalar::Kind::BigInt: return mpq_class(s.as_int());
    case Scalar::Kind::BigRat: return s.as_rat();
    default: throw DomainMismatch("conv_power needs BigInt or BigRat values");
  }
}

}  // namespace

LocalMF ConvPowerSeq::as_mf() const {
  LocalMF f;
  f.values = values;
  return f;
}

ConvPowerSeq conv_power(const LocalMF& f, const mpq_class& q, int N) {
  if (N < 0) throw Error("conv_power needs N >= 0");
  if (f.horizon() < N) throw HorizonError("conv_power needs horizon >= N");
  if (!f.values[0].is_one()) throw Error("conv_power needs F_0 = 1");
  std::vector<mpq_class> F;
  for (int n = 0; n <= N; ++n) F.push_back(to_rat(f.values[n]));
  // B(y)^q via B * H' = q * B' * H, i.e. n H_n = sum ((q+1)j - n) F_j H_{n-j}.
  std::vector<mpq_class> H(N + 1, 0);
  H[0] = 1;
  for (int n = 1; n <= N; ++n) {
    mpq_class acc = 0;
    for (int j = 1; j <= n; ++j) acc += ((q + 1) * j - n) * F[j] * H[n - j];
    H[n] = acc / n;
  }
  ConvPowerSeq out;
  out.q = q;
  for (auto& h : H) {
    h.canonicalize();
    out.values.emplace_back(h);
  }
  return out;
}

CheckReport check_root_roundtrip(const LocalMF& f, int m, int N) {
  CheckReport rep;
  rep.identity = "conv-root-roundtrip";
  rep.sweep = "m=" + std::to_string(m) + " N=" + std::to_string(N);
  if (m < 2) throw Error("check_root_roundtrip needs m >= 2");
  LocalMF root = conv_power(f, mpq_class(1, m), N).as_mf();
  LocalMF acc = root;
  for (int i = 1; i < m; ++i) acc = convolve(acc, root);
  for (int n = 0; n <= N; ++n)
    if (!(acc.values[n] == Scalar(to_rat(f.values[n]))))
      rep.fail("n=" + std::to_string(n) + " got " + scalar_format(acc.values[n]) +
               " want " + scalar_format(f.values[n]));
  return rep;
}

CheckReport check_power_group_law(const LocalMF& f, const mpq_class& q1,
                                  const mpq_class& q2, int N) {
  CheckReport rep;
  rep.identity = "conv-power-group-law";
  rep.sweep = "q1=" + q1.get_str() + " q2=" + q2.get_str() + " N=" + std::to_string(N);
  LocalMF lhs = convolve(conv_power(f, q1, N).as_mf(), conv_power(f, q2, N).as_mf());
  ConvPowerSeq rhs = conv_power(f, q1 + q2, N);
  for (int n = 0; n <= N; ++n)
    if (!(lhs.values[n] == rhs.values[n]))
      rep.fail("n=" + std::to_string(n) + " product=" + scalar_format(lhs.values[n]) +
               " direct=" + scalar_format(rhs.values[n]));
  return rep;
}

}  // namespace isomf
