#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "isomf/error.hpp"

namespace isomf {

// Univariate polynomial in the symbol p with integer coefficients.
// Dense ascending coefficient list, no trailing zeros; zero is the empty list.
struct PolyP {
  std::vector<mpz_class> coeffs;

  PolyP() = default;
  explicit PolyP(std::vector<mpz_class> c) : coeffs(std::move(c)) { trim(); }
  static PolyP constant(const mpz_class& c);
  static PolyP variable();  // the polynomial p

  void trim();
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  friend bool operator==(const PolyP&, const PolyP&) = default;
};

PolyP operator+(const PolyP& a, const PolyP& b);
PolyP operator-(const PolyP& a, const PolyP& b);
PolyP operator-(const PolyP& a);
PolyP operator*(const PolyP& a, const PolyP& b);
// Exact division; throws DivisionError if b = 0 or the division leaves a remainder.
PolyP polyp_div_exact(const PolyP& a, const PolyP& b);
mpz_class polyp_eval(const PolyP& f, const mpz_class& pval);

// Residue modulo m >= 2; residue normalized to [0, m).
struct ModInt {
  mpz_class residue;
  mpz_class modulus;

  ModInt() : residue(0), modulus(2) {}
  ModInt(mpz_class r, mpz_class m);

  friend bool operator==(const ModInt&, const ModInt&) = default;
};

// Element of one of the four exact scalar rings.
class Scalar {
public:
  enum class Kind { BigInt, BigRat, PolyP, ModInt };

  Scalar() : v_(mpz_class(0)) {}
  Scalar(const mpz_class& z) : v_(z) {}
  Scalar(long z) : v_(mpz_class(z)) {}
  Scalar(const mpq_class& q) : v_(q) { std::get<mpq_class>(v_).canonicalize(); }
  Scalar(const PolyP& f) : v_(f) {}
  Scalar(const ModInt& m) : v_(m) {}

  static Scalar rational(long num, long den) { return Scalar(mpq_class(num, den)); }
  static Scalar mod(long r, long m) { return Scalar(ModInt(mpz_class(r), mpz_class(m))); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_zero() const;
  bool is_one() const;

  const mpz_class& as_int() const { return std::get<mpz_class>(v_); }
  const mpq_class& as_rat() const { return std::get<mpq_class>(v_); }
  const PolyP& as_poly() const { return std::get<PolyP>(v_); }
  const ModInt& as_mod() const { return std::get<ModInt>(v_); }

  // Zero / one in the same ring as this scalar (carries modulus for ModInt).
  Scalar zero_like() const;
  Scalar one_like() const;
  // Small integer embedded into the ring of this scalar.
  Scalar int_like(long n) const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

private:
  std::variant<mpz_class, mpq_class, PolyP, ModInt> v_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_neg(const Scalar& a);
// Exact division; errors on zero divisor, inexact BigInt/PolyP quotients,
// or non-invertible ModInt divisors.
Scalar scalar_div_exact(const Scalar& a, const Scalar& b);

inline Scalar operator+(const Scalar& a, const Scalar& b) { return scalar_add(a, b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return scalar_sub(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return scalar_mul(a, b); }
inline Scalar operator-(const Scalar& a) { return scalar_neg(a); }

// Text grammar: integers, "num/den" rationals, polynomials in p, "r mod m".
Scalar scalar_parse(const std::string& text);
std::string scalar_format(const Scalar& s);

// Explicit ring promotions. BigInt embeds into BigRat and PolyP; anything
// else is an error (PolyP does not embed into BigRat).
Scalar promote_to_rat(const Scalar& s);
Scalar promote_to_poly(const Scalar& s);

// Unify a parsed scalar list to a common ring (BigInt widens to whichever
// non-BigInt variant appears). Throws DomainMismatch on irreconcilable mixes.
std::vector<Scalar> unify_ring(std::vector<Scalar> xs);

}  // namespace isomf
