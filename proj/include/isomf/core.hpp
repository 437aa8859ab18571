#pragma once

#include <vector>

#include "isomf/scalar.hpp"

namespace isomf {

// Recursion parameters (t_1,...,t_k) of a core polynomial
// [t_1,...,t_k] = X^k - t_1 X^{k-1} - ... - t_k.
struct CoreParams {
  enum class Kind { Finite, Truncated };

  std::vector<Scalar> params;
  Kind kind = Kind::Finite;

  CoreParams() = default;
  CoreParams(std::vector<Scalar> t, Kind kd = Kind::Finite);

  int k() const { return static_cast<int>(params.size()); }
  // t_j, 1-based; zero beyond the stored list.
  Scalar at(int j) const;
  Scalar ring_sample() const;

  static CoreParams from_ints(const std::vector<long>& t, Kind kd = Kind::Finite);
  static CoreParams from_rats(const std::vector<long>& t, Kind kd = Kind::Finite);

  friend bool operator==(const CoreParams&, const CoreParams&) = default;
};

// Coefficients of the core polynomial, ascending: [-t_k,...,-t_1, 1].
std::vector<Scalar> core_coefficients(const CoreParams& t);
// Inverse of core_coefficients: monic coefficient list back to params.
CoreParams core_from_coefficients(const std::vector<Scalar>& coeffs);
// Polynomial product of two cores (both finite).
CoreParams core_product(const CoreParams& a, const CoreParams& b);

// Embed an exact rational into the ring of `sample`; errors if the
// denominator is not a unit there.
Scalar scalar_from_mpq(const Scalar& sample, const mpq_class& q);

}  // namespace isomf
