#include "isomf/isobaric.hpp"

namespace isomf {

bool MonomialOrder::operator()(const ExponentVector& a, const ExponentVector& b) const {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa > sb;
  return a.parts_decreasing() < b.parts_decreasing();
}

void IsobaricPoly::add_term(const ExponentVector& alpha, const mpq_class& coeff) {
  if (coeff == 0) return;
  if (alpha.weight() != degree_)
    throw Error("monomial weight does not match isobaric degree");
  if (static_cast<int>(alpha.alpha.size()) > k_ &&
      [&] {
        for (std::size_t j = k_; j < alpha.alpha.size(); ++j)
          if (alpha.alpha[j] != 0) return true;
        return false;
      }())
    throw Error("monomial uses a part larger than k");
  auto [it, inserted] = terms_.emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class IsobaricPoly::coeff(const ExponentVector& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

bool IsobaricPoly::integral() const {
  for (const auto& [a, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Scalar IsobaricPoly::eval(const std::vector<Scalar>& t) const {
  if (t.empty()) throw Error("eval needs at least one parameter for ring inference");
  Scalar acc = t[0].zero_like();
  for (const auto& [alpha, c] : terms_) {
    Scalar mono = scalar_from_mpq(t[0], c);
    for (std::size_t j = 0; j < alpha.alpha.size(); ++j) {
      if (alpha.alpha[j] == 0) continue;
      if (j >= t.size()) throw Error("eval: not enough parameters");
      for (int rep = 0; rep < alpha.alpha[j]; ++rep) mono = mono * t[j];
    }
    acc = acc + mono;
  }
  return acc;
}

std::string IsobaricPoly::to_string() const {
  if (terms_.empty()) return degree_ == 0 ? "1" : "0";
  std::string out;
  for (const auto& [alpha, c] : terms_) {
    mpq_class ac = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t j = 0; j < alpha.alpha.size(); ++j) {
      if (alpha.alpha[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(j + 1);
      if (alpha.alpha[j] > 1) mono += "^" + std::to_string(alpha.alpha[j]);
    }
    std::string cs = ac.get_den() == 1 ? ac.get_num().get_str() : ac.get_str();
    if (mono.empty()) {
      out += cs;
    } else if (ac == 1) {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

bool operator==(const IsobaricPoly& a, const IsobaricPoly& b) {
  return a.k_ == b.k_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

IsobaricPoly gfp_poly(int k, int n) { return wip_poly(WeightVector::ones(), k, n); }

IsobaricPoly glp_poly(int k, int n) {
  if (n < 1) throw Error("glp_poly requires n >= 1");
  IsobaricPoly g = wip_poly(WeightVector::natural(), k, n);
  if (!g.integral()) throw Error("GLP coefficients must be integral");
  return g;
}

IsobaricPoly wip_poly(const WeightVector& omega, int k, int n) {
  if (n < 0) throw Error("wip_poly requires n >= 0");
  IsobaricPoly poly(k, n);
  for (const auto& alpha : enumerate_partitions(n, k)) {
    mpq_class c = mpq_class(multinomial(alpha)) * weight_factor(alpha, omega);
    poly.add_term(alpha, c);
  }
  return poly;
}

IsobaricPoly isobaric_add(const IsobaricPoly& a, const IsobaricPoly& b) {
  if (a.degree() != b.degree()) throw Error("isobaric_add: degree mismatch");
  IsobaricPoly r(std::max(a.k(), b.k()), a.degree());
  for (const auto& [alpha, c] : a.terms()) r.add_term(alpha, c);
  for (const auto& [alpha, c] : b.terms()) r.add_term(alpha, c);
  return r;
}

IsobaricPoly isobaric_mul(const IsobaricPoly& a, const IsobaricPoly& b) {
  IsobaricPoly r(std::max(a.k(), b.k()), a.degree() + b.degree());
  for (const auto& [al, ca] : a.terms())
    for (const auto& [be, cb] : b.terms()) {
      ExponentVector prod;
      prod.alpha.assign(std::max(al.alpha.size(), be.alpha.size()), 0);
      for (std::size_t j = 0; j < al.alpha.size(); ++j) prod.alpha[j] += al.alpha[j];
      for (std::size_t j = 0; j < be.alpha.size(); ++j) prod.alpha[j] += be.alpha[j];
      r.add_term(prod, ca * cb);
    }
  return r;
}

IsobaricPoly isobaric_scale(const mpq_class& c, const IsobaricPoly& a) {
  IsobaricPoly r(a.k(), a.degree());
  for (const auto& [alpha, ca] : a.terms()) r.add_term(alpha, c * ca);
  return r;
}

IsobaricPoly isobaric_monomial(int k, int j, const mpq_class& c) {
  IsobaricPoly r(k, j);
  ExponentVector alpha;
  if (j > 0) {
    alpha.alpha.assign(j, 0);
    alpha.alpha[j - 1] = 1;
  }
  r.add_term(alpha, c);
  return r;
}

IsobaricPoly isobaric_pow(const IsobaricPoly& a, int e) {
  if (e < 0) throw Error("isobaric_pow: negative exponent");
  IsobaricPoly r(a.k(), 0);
  r.add_term(ExponentVector{}, 1);
  for (int i = 0; i < e; ++i) r = isobaric_mul(r, a);
  return r;
}

std::vector<Scalar> series_from_genfun(const WeightVector& omega,
                                       const std::vector<Scalar>& t, int N) {
  if (t.empty()) throw Error("series_from_genfun needs a nonempty parameter vector");
  int k = static_cast<int>(t.size());
  Scalar zero = t[0].zero_like();
  // b = 1/(1 - p(y)): b_0 = 1, b_n = sum_{j<=min(n,k)} t_j b_{n-j}.
  std::vector<Scalar> b(N + 1, zero);
  b[0] = t[0].one_like();
  for (int n = 1; n <= N; ++n) {
    Scalar acc = zero;
    for (int j = 1; j <= std::min(n, k); ++j) acc = acc + t[j - 1] * b[n - j];
    b[n] = acc;
  }
  // numerator omega_1 t_1 y + ... + omega_k t_k y^k
  std::vector<Scalar> out(N + 1, zero);
  out[0] = t[0].one_like();
  for (int n = 1; n <= N; ++n) {
    Scalar acc = zero;
    for (int j = 1; j <= std::min(n, k); ++j)
      acc = acc + t[0].int_like(omega.at(j)) * t[j - 1] * b[n - j];
    out[n] = acc;
  }
  return out;
}

}  // namespace isomf
