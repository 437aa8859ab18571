#pragma once

#include <optional>

#include "isomf/identities.hpp"
#include "isomf/localmf.hpp"
#include "isomf/partitions.hpp"

namespace isomf {

struct PeriodResult {
  bool periodic = false;  // a repeat was found within the bound
  int preperiod = 0;
  int period = 0;
  std::optional<mpz_class> modulus;  // absent for over-the-integers detection
  long bound = 0;
};

// First-repeat cycle detection on the state vector (F_n,...,F_{n+k-1}) mod m.
// Pure periodicity (preperiod 0) whenever gcd(t_k, m) = 1.
PeriodResult period_mod(const CoreParams& t, const mpz_class& m, long bound = 100000);

// Whether the core polynomial is irreducible over the field with p elements
// (k <= 4: root search plus a quadratic-factor search).
bool core_irreducible_mod_p(const CoreParams& t, const mpz_class& p);

struct Thm19Report {
  CheckReport report;
  bool irreducible = false;
  int period = 0;
};

// When the core is irreducible mod p, the period divides p^k - 1; when it is
// reducible the period is reported without that assertion.
Thm19Report check_thm19(const CoreParams& t, const mpz_class& p, long bound = 1000000);

// Cycle detection on exact integer state vectors; certifies periodicity (all
// core roots are roots of unity) only positively, within the bound.
PeriodResult detect_integral_period(const CoreParams& t, long bound = 10000);

// t-form of the d-th cyclotomic polynomial (negated non-leading coefficients).
CoreParams cyclotomic_core(int d);

// Period mod m of the WIP column with weight omega, by cycle detection on the
// value sequence's sliding window. Used to check that every column of the
// orbit module shares the F-column period.
PeriodResult wip_column_period_mod(const CoreParams& t, const WeightVector& omega,
                                   const mpz_class& m, long bound = 100000);

}  // namespace isomf
