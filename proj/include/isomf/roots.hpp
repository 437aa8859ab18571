#pragma once

#include "isomf/identities.hpp"
#include "isomf/localmf.hpp"

namespace isomf {

// q-th convolution power of a value sequence: the coefficients of B(y)^q
// where B(y) = sum F_n y^n, F_0 = 1. Always carried in exact rationals.
struct ConvPowerSeq {
  mpq_class q;
  std::vector<Scalar> values;  // H_0 = 1, BigRat scalars

  LocalMF as_mf() const;
};

// H_0 = 1, n*H_n = sum_{j=1}^n ((q+1)j - n) * F_j * H_{n-j}.
ConvPowerSeq conv_power(const LocalMF& f, const mpq_class& q, int N);

// conv_power(f, 1/m) convolved with itself m times reproduces f to N.
CheckReport check_root_roundtrip(const LocalMF& f, int m, int N);

// f^{*q1} * f^{*q2} = f^{*(q1+q2)} to horizon N.
CheckReport check_power_group_law(const LocalMF& f, const mpq_class& q1,
                                  const mpq_class& q2, int N);

}  // namespace isomf
