#include "isomf/core.hpp"

namespace isomf {

CoreParams::CoreParams(std::vector<Scalar> t, Kind kd) : params(std::move(t)), kind(kd) {
  for (std::size_t i = 1; i < params.size(); ++i) {
    if (params[i].kind() != params[0].kind())
      throw DomainMismatch("core parameters must share one ring");
  }
  if (kind == Kind::Finite && !params.empty() && params.back().is_zero())
    throw Error("finite-degree core requires t_k != 0");
}

Scalar CoreParams::at(int j) const {
  if (j < 1) throw Error("core parameter index is 1-based");
  if (j > k()) return ring_sample().zero_like();
  return params[j - 1];
}

Scalar CoreParams::ring_sample() const {
  return params.empty() ? Scalar(mpz_class(0)) : params[0];
}

CoreParams CoreParams::from_ints(const std::vector<long>& t, Kind kd) {
  std::vector<Scalar> v;
  v.reserve(t.size());
  for (long x : t) v.emplace_back(mpz_class(x));
  return CoreParams(std::move(v), kd);
}

CoreParams CoreParams::from_rats(const std::vector<long>& t, Kind kd) {
  std::vector<Scalar> v;
  v.reserve(t.size());
  for (long x : t) v.emplace_back(mpq_class(x));
  return CoreParams(std::move(v), kd);
}

std::vector<Scalar> core_coefficients(const CoreParams& t) {
  std::vector<Scalar> c;
  c.reserve(t.k() + 1);
  for (int j = t.k(); j >= 1; --j) c.push_back(-t.at(j));
  c.push_back(t.ring_sample().one_like());
  return c;
}

CoreParams core_from_coefficients(const std::vector<Scalar>& coeffs) {
  if (coeffs.empty() || !coeffs.back().is_one())
    throw Error("core polynomial must be monic");
  std::vector<Scalar> t;
  int k = static_cast<int>(coeffs.size()) - 1;
  for (int j = 1; j <= k; ++j) t.push_back(-coeffs[k - j]);
  return CoreParams(std::move(t), CoreParams::Kind::Finite);
}

CoreParams core_product(const CoreParams& a, const CoreParams& b) {
  auto ca = core_coefficients(a);
  auto cb = core_coefficients(b);
  std::vector<Scalar> prod(ca.size() + cb.size() - 1, a.ring_sample().zero_like());
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j)
      prod[i + j] = prod[i + j] + ca[i] * cb[j];
  return core_from_coefficients(prod);
}

Scalar scalar_from_mpq(const Scalar& sample, const mpq_class& q) {
  switch (sample.kind()) {
    case Scalar::Kind::BigRat: return Scalar(q);
    case Scalar::Kind::BigInt:
      if (q.get_den() != 1) throw DivisionError("non-integer coefficient in BigInt ring");
      return Scalar(mpz_class(q.get_num()));
    case Scalar::Kind::PolyP:
      if (q.get_den() != 1) throw DivisionError("non-integer coefficient in PolyP ring");
      return Scalar(PolyP::constant(q.get_num()));
    case Scalar::Kind::ModInt: {
      const mpz_class& m = sample.as_mod().modulus;
      mpz_class inv;
      if (!mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t()))
        throw DivisionError("coefficient denominator not invertible mod m");
      return Scalar(ModInt(q.get_num() * inv, m));
    }
  }
  return Scalar();
}

}  // namespace isomf
