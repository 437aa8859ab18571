#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "isomf/core.hpp"

#include "json.hpp"

namespace isomf {

inline constexpr int kDefaultHorizon = 16;

// A multiplicative function restricted to one prime: the value sequence
// F_0 = 1, F_1, ..., F_N at p^0..p^N, with whatever else is known about it.
struct LocalMF {
  enum class Structure { FiniteParams, FiniteValues, BothInfinite };

  std::vector<Scalar> values;  // F_0 = 1 first
  std::optional<CoreParams> params;      // t
  std::optional<CoreParams> inv_params;  // s, parameters of the inverse
  std::optional<Structure> structure;
  std::optional<std::pair<int, int>> valence;  // <r, s>
  std::optional<mpz_class> prime;

  int horizon() const { return static_cast<int>(values.size()) - 1; }
  bool is_identity() const;
  Scalar ring_sample() const { return values.at(0); }

  static LocalMF identity(const Scalar& ring_sample, int N = kDefaultHorizon);
};

LocalMF from_params(const CoreParams& t, int N);

// t_n = a_n - sum_{j=1}^{n-1} t_j a_{n-j}; requires F_0 = 1.
CoreParams recover_params(const std::vector<Scalar>& values);

// Params of f, recovering them from the values when not attached.
CoreParams effective_params(const LocalMF& f);

// Cauchy product of value sequences, truncated to the shorter horizon.
LocalMF convolve(const LocalMF& f, const LocalMF& g);

// Convolution inverse; computed both by the triangular system and by the
// parameter duality, which are asserted to agree.
LocalMF inverse(const LocalMF& f);

// Largest index d with t_d != 0, when that is meaningful.
struct DegreeResult {
  bool finite = false;   // certified finite (declared structure)
  int degree = 0;        // largest nonzero t-index within horizon
};
DegreeResult degree(const LocalMF& f);

// 1 identity / 2 finite params / 3 finite values / 4 both infinite
// (within-horizon caveat applies to 4). Requires declared structure.
int classify_type(const LocalMF& f);

struct NormalFormResult {
  std::vector<std::pair<Scalar, int>> reduced;  // (t1, exponent +-1)
  std::pair<int, int> valence;
  LocalMF product;
};

// Cancels mutually inverse degree-1 factors and builds the product.
NormalFormResult normal_form(const std::vector<std::pair<Scalar, int>>& factors,
                             int N = kDefaultHorizon);

// Prime-indexed family of local cores.
struct MFFamily {
  std::string name;
  // horizon bounds the parameter count for truncated cores.
  std::function<CoreParams(const mpz_class& p, int horizon)> rule;
};

// Factor n by trial division and multiply the local values.
mpz_class global_eval(const MFFamily& fam, const mpz_class& n);

nlohmann::ordered_json localmf_to_json(const LocalMF& f);
LocalMF localmf_from_json(const nlohmann::ordered_json& j);

}  // namespace isomf
