#pragma once

#include <map>
#include <string>

#include "isomf/core.hpp"
#include "isomf/partitions.hpp"

namespace isomf {

// Canonical monomial order: larger |alpha| first, ties broken by ascending
// lexicographic comparison of the partitions written as decreasing part
// lists. This reproduces the customary listing t1^3 + 2*t1*t2 + t3.
struct MonomialOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Sparse isobaric polynomial in t_1..t_k of one isobaric degree.
class IsobaricPoly {
public:
  IsobaricPoly(int k, int degree) : k_(k), degree_(degree) {}

  int k() const { return k_; }
  int degree() const { return degree_; }
  const std::map<ExponentVector, mpq_class, MonomialOrder>& terms() const { return terms_; }

  void add_term(const ExponentVector& alpha, const mpq_class& coeff);
  mpq_class coeff(const ExponentVector& alpha) const;
  bool integral() const;  // all coefficients have denominator 1

  // Evaluate at t (t[0] = t_1, ...); coefficients embedded via scalar_from_mpq.
  Scalar eval(const std::vector<Scalar>& t) const;

  // e.g. "t1^3 + 2*t1*t2 + t3"; "0"/"1" for empty degree-0 cases.
  std::string to_string() const;

  friend bool operator==(const IsobaricPoly&, const IsobaricPoly&);

private:
  int k_;
  int degree_;
  std::map<ExponentVector, mpq_class, MonomialOrder> terms_;
};

// Generalized Fibonacci polynomial F_{k,n}.
IsobaricPoly gfp_poly(int k, int n);
// Generalized Lucas polynomial G_{k,n}; coefficients asserted integral.
IsobaricPoly glp_poly(int k, int n);
// Weighted isobaric polynomial P_{omega,k,n}.
IsobaricPoly wip_poly(const WeightVector& omega, int k, int n);

// Graded-ring operations (degrees add under multiplication).
IsobaricPoly isobaric_add(const IsobaricPoly& a, const IsobaricPoly& b);
IsobaricPoly isobaric_mul(const IsobaricPoly& a, const IsobaricPoly& b);
IsobaricPoly isobaric_scale(const mpq_class& c, const IsobaricPoly& a);
// The monomial c * t_j, or the constant polynomial for j = 0.
IsobaricPoly isobaric_monomial(int k, int j, const mpq_class& c);
// Raise to a non-negative integer power.
IsobaricPoly isobaric_pow(const IsobaricPoly& a, int e);

// First N+1 Taylor coefficients of
//   1 + (omega_1 t_1 y + ... + omega_k t_k y^k) / (1 - t_1 y - ... - t_k y^k)
// by exact power-series division over the scalar ring of t.
std::vector<Scalar> series_from_genfun(const WeightVector& omega,
                                       const std::vector<Scalar>& t, int N);

}  // namespace isomf
