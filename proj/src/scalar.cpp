#include "isomf/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace isomf {

// ---------------------------------------------------------------------------
// PolyP

PolyP PolyP::constant(const mpz_class& c) {
  PolyP f;
  if (c != 0) f.coeffs.push_back(c);
  return f;
}

PolyP PolyP::variable() {
  PolyP f;
  f.coeffs = {mpz_class(0), mpz_class(1)};
  return f;
}

void PolyP::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

PolyP operator+(const PolyP& a, const PolyP& b) {
  PolyP r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  r.trim();
  return r;
}

PolyP operator-(const PolyP& a) {
  PolyP r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

PolyP operator-(const PolyP& a, const PolyP& b) { return a + (-b); }

PolyP operator*(const PolyP& a, const PolyP& b) {
  if (a.is_zero() || b.is_zero()) return PolyP();
  PolyP r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  r.trim();
  return r;
}

PolyP polyp_div_exact(const PolyP& a, const PolyP& b) {
  if (b.is_zero()) throw DivisionError("polynomial division by zero");
  if (a.is_zero()) return PolyP();
  if (a.degree() < b.degree())
    throw DivisionError("inexact polynomial division: degree too small");
  PolyP rem = a;
  std::vector<mpz_class> q(a.degree() - b.degree() + 1, mpz_class(0));
  const mpz_class& lead = b.coeffs.back();
  for (int d = a.degree(); d >= b.degree(); --d) {
    if (rem.degree() < d) continue;
    mpz_class c = rem.coeffs[d];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
      throw DivisionError("inexact polynomial division");
    mpz_class f = c / lead;
    int shift = d - b.degree();
    q[shift] = f;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      rem.coeffs[i + shift] -= f * b.coeffs[i];
    rem.trim();
  }
  if (!rem.is_zero()) throw DivisionError("inexact polynomial division: nonzero remainder");
  return PolyP(std::move(q));
}

mpz_class polyp_eval(const PolyP& f, const mpz_class& pval) {
  mpz_class acc(0);
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = acc * pval + *it;
  return acc;
}

// ---------------------------------------------------------------------------
// ModInt

ModInt::ModInt(mpz_class r, mpz_class m) : residue(std::move(r)), modulus(std::move(m)) {
  if (modulus < 2) throw Error("ModInt modulus must be >= 2");
  mpz_mod(residue.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
}

// ---------------------------------------------------------------------------
// Scalar

bool Scalar::is_zero() const {
  switch (kind()) {
    case Kind::BigInt: return as_int() == 0;
    case Kind::BigRat: return as_rat() == 0;
    case Kind::PolyP: return as_poly().is_zero();
    case Kind::ModInt: return as_mod().residue == 0;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (kind()) {
    case Kind::BigInt: return as_int() == 1;
    case Kind::BigRat: return as_rat() == 1;
    case Kind::PolyP: return as_poly().coeffs.size() == 1 && as_poly().coeffs[0] == 1;
    case Kind::ModInt: return as_mod().residue == 1;
  }
  return false;
}

Scalar Scalar::zero_like() const { return int_like(0); }
Scalar Scalar::one_like() const { return int_like(1); }

Scalar Scalar::int_like(long n) const {
  switch (kind()) {
    case Kind::BigInt: return Scalar(mpz_class(n));
    case Kind::BigRat: return Scalar(mpq_class(n));
    case Kind::PolyP: return Scalar(PolyP::constant(mpz_class(n)));
    case Kind::ModInt: return Scalar(ModInt(mpz_class(n), as_mod().modulus));
  }
  return Scalar();
}

namespace {

void require_same_ring(const Scalar& a, const Scalar& b) {
  if (a.kind() != b.kind())
    throw DomainMismatch("mixed scalar variants in ring operation");
  if (a.kind() == Scalar::Kind::ModInt && a.as_mod().modulus != b.as_mod().modulus)
    throw DomainMismatch("mixed moduli in ModInt operation");
}

}  // namespace

Scalar scalar_add(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  switch (a.kind()) {
    case Scalar::Kind::BigInt: return Scalar(mpz_class(a.as_int() + b.as_int()));
    case Scalar::Kind::BigRat: return Scalar(mpq_class(a.as_rat() + b.as_rat()));
    case Scalar::Kind::PolyP: return Scalar(a.as_poly() + b.as_poly());
    case Scalar::Kind::ModInt:
      return Scalar(ModInt(a.as_mod().residue + b.as_mod().residue, a.as_mod().modulus));
  }
  return Scalar();
}

Scalar scalar_sub(const Scalar& a, const Scalar& b) { return scalar_add(a, scalar_neg(b)); }

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  switch (a.kind()) {
    case Scalar::Kind::BigInt: return Scalar(mpz_class(a.as_int() * b.as_int()));
    case Scalar::Kind::BigRat: return Scalar(mpq_class(a.as_rat() * b.as_rat()));
    case Scalar::Kind::PolyP: return Scalar(a.as_poly() * b.as_poly());
    case Scalar::Kind::ModInt:
      return Scalar(ModInt(a.as_mod().residue * b.as_mod().residue, a.as_mod().modulus));
  }
  return Scalar();
}

Scalar scalar_neg(const Scalar& a) {
  switch (a.kind()) {
    case Scalar::Kind::BigInt: return Scalar(mpz_class(-a.as_int()));
    case Scalar::Kind::BigRat: return Scalar(mpq_class(-a.as_rat()));
    case Scalar::Kind::PolyP: return Scalar(-a.as_poly());
    case Scalar::Kind::ModInt:
      return Scalar(ModInt(-a.as_mod().residue, a.as_mod().modulus));
  }
  return Scalar();
}

Scalar scalar_div_exact(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw DivisionError("division by zero");
  switch (a.kind()) {
    case Scalar::Kind::BigInt: {
      if (!mpz_divisible_p(a.as_int().get_mpz_t(), b.as_int().get_mpz_t()))
        throw DivisionError("inexact integer division");
      return Scalar(mpz_class(a.as_int() / b.as_int()));
    }
    case Scalar::Kind::BigRat: return Scalar(mpq_class(a.as_rat() / b.as_rat()));
    case Scalar::Kind::PolyP: return Scalar(polyp_div_exact(a.as_poly(), b.as_poly()));
    case Scalar::Kind::ModInt: {
      mpz_class inv;
      if (!mpz_invert(inv.get_mpz_t(), b.as_mod().residue.get_mpz_t(),
                      b.as_mod().modulus.get_mpz_t()))
        throw DivisionError("ModInt divisor not invertible");
      return Scalar(ModInt(a.as_mod().residue * inv, a.as_mod().modulus));
    }
  }
  return Scalar();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
};

mpz_class parse_uint(Cursor& c) {
  std::size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start) throw ParseError("expected digit", start);
  return mpz_class(c.s.substr(start, c.pos - start), 10);
}

mpz_class parse_int(Cursor& c) {
  bool neg = false;
  if (c.peek() == '-') {
    neg = true;
    ++c.pos;
  }
  mpz_class v = parse_uint(c);
  return neg ? mpz_class(-v) : v;
}

Scalar parse_polyp(Cursor& c) {
  std::vector<mpz_class> coeffs;
  auto bump = [&](std::size_t e, const mpz_class& v) {
    if (coeffs.size() <= e) coeffs.resize(e + 1, mpz_class(0));
    coeffs[e] += v;
  };
  bool first = true;
  while (true) {
    c.skip_ws();
    mpz_class sign(1);
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1;
      ++c.pos;
      c.skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", c.pos);
    }
    mpz_class coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = parse_uint(c);
      have_coeff = true;
      if (c.peek() == '*') ++c.pos;
      else if (c.peek() == 'p') throw ParseError("expected '*' before p", c.pos);
    }
    std::size_t exp = 0;
    if (c.peek() == 'p') {
      ++c.pos;
      exp = 1;
      if (c.peek() == '^') {
        ++c.pos;
        mpz_class e = parse_uint(c);
        if (e > 1000000) throw ParseError("exponent too large", c.pos);
        exp = e.get_ui();
      }
    } else if (!have_coeff) {
      throw ParseError("expected coefficient or p", c.pos);
    }
    bump(exp, sign * coeff);
    first = false;
    c.skip_ws();
    if (c.done()) break;
  }
  return Scalar(PolyP(std::move(coeffs)));
}

}  // namespace

Scalar scalar_parse(const std::string& text) {
  if (text.find(" mod ") != std::string::npos) {
    Cursor c{text};
    c.skip_ws();
    mpz_class r = parse_int(c);
    c.skip_ws();
    if (c.s.compare(c.pos, 3, "mod") != 0) throw ParseError("expected 'mod'", c.pos);
    c.pos += 3;
    c.skip_ws();
    mpz_class m = parse_uint(c);
    c.skip_ws();
    if (!c.done()) throw ParseError("trailing characters", c.pos);
    if (m < 2) throw ParseError("modulus must be >= 2", 0);
    return Scalar(ModInt(r, m));
  }
  if (text.find('p') != std::string::npos) {
    Cursor c{text};
    return parse_polyp(c);
  }
  if (text.find('/') != std::string::npos) {
    Cursor c{text};
    c.skip_ws();
    mpz_class num = parse_int(c);
    if (c.peek() != '/') throw ParseError("expected '/'", c.pos);
    ++c.pos;
    mpz_class den = parse_uint(c);
    c.skip_ws();
    if (!c.done()) throw ParseError("trailing characters", c.pos);
    if (den == 0) throw ParseError("zero denominator", 0);
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  Cursor c{text};
  c.skip_ws();
  mpz_class v = parse_int(c);
  c.skip_ws();
  if (!c.done()) throw ParseError("trailing characters", c.pos);
  return Scalar(v);
}

std::string scalar_format(const Scalar& s) {
  switch (s.kind()) {
    case Scalar::Kind::BigInt: return s.as_int().get_str();
    case Scalar::Kind::BigRat:
      return s.as_rat().get_num().get_str() + "/" + s.as_rat().get_den().get_str();
    case Scalar::Kind::PolyP: {
      const PolyP& f = s.as_poly();
      if (f.is_zero()) return "0";
      std::string out;
      for (int e = f.degree(); e >= 0; --e) {
        const mpz_class& c = f.coeffs[e];
        if (c == 0) continue;
        mpz_class ab = abs(c);
        if (out.empty()) {
          if (c < 0) out += "-";
        } else {
          out += (c < 0) ? "-" : "+";
        }
        if (e == 0) {
          out += ab.get_str();
        } else {
          if (ab != 1) out += ab.get_str() + "*";
          out += "p";
          if (e > 1) out += "^" + std::to_string(e);
        }
      }
      return out;
    }
    case Scalar::Kind::ModInt:
      return s.as_mod().residue.get_str() + " mod " + s.as_mod().modulus.get_str();
  }
  return "";
}

Scalar promote_to_rat(const Scalar& s) {
  if (s.kind() == Scalar::Kind::BigRat) return s;
  if (s.kind() == Scalar::Kind::BigInt) return Scalar(mpq_class(s.as_int()));
  throw DomainMismatch("cannot promote to BigRat");
}

Scalar promote_to_poly(const Scalar& s) {
  if (s.kind() == Scalar::Kind::PolyP) return s;
  if (s.kind() == Scalar::Kind::BigInt) return Scalar(PolyP::constant(s.as_int()));
  throw DomainMismatch("cannot promote to PolyP");
}

std::vector<Scalar> unify_ring(std::vector<Scalar> xs) {
  bool has_poly = false, has_rat = false, has_mod = false, has_int = false;
  for (const auto& x : xs) {
    switch (x.kind()) {
      case Scalar::Kind::BigInt: has_int = true; break;
      case Scalar::Kind::BigRat: has_rat = true; break;
      case Scalar::Kind::PolyP: has_poly = true; break;
      case Scalar::Kind::ModInt: has_mod = true; break;
    }
  }
  if (has_mod && (has_poly || has_rat || has_int))
    throw DomainMismatch("cannot mix ModInt with other rings");
  if (has_poly && has_rat)
    throw DomainMismatch("cannot mix PolyP with BigRat");
  if (has_poly) {
    for (auto& x : xs) x = promote_to_poly(x);
  } else if (has_rat) {
    for (auto& x : xs) x = promote_to_rat(x);
  }
  return xs;
}

}  // namespace isomf
