#pragma once

#include "isomf/identities.hpp"
#include "isomf/localmf.hpp"

namespace isomf {

// Kesava Menon norm of f to index M: N_n = sum_{j=0}^{2n} (-1)^j F_{2n-j} F_j,
// equivalently the Liouville-weighted divisor sum over p^{2n}.
struct NormResult {
  std::vector<Scalar> values;  // N_0 = 1, N_1..N_M
  CoreParams params;           // recovered from the N-sequence
};

NormResult km_norm(const LocalMF& f, int M);

// Same norm straight from the divisor-sum definition; used as an oracle.
Scalar km_norm_divisor_sum(const LocalMF& f, int n);

// Wrap km_norm values as a LocalMF.
LocalMF km_norm_mf(const LocalMF& f, int M);

// N(f * g) = N(f) * N(g) entry-wise to M.
CheckReport check_norm_mult(const LocalMF& f, const LocalMF& g, int M);

// deg N(f) = deg f (both computed to the supplied horizons).
CheckReport check_norm_degree(const LocalMF& f);

// Corrected s-form: N_n = -2 s_{2n} + 2 sum_{j=1}^{n-1} (-1)^j s_{2n-j} s_j
// + (-1)^n s_n^2, with s_n = -F_n and s_0 = -1.
CheckReport check_prop12(const LocalMF& f, int M);

}  // namespace isomf
