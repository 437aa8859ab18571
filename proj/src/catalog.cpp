#include "isomf/catalog.hpp"

namespace isomf {

namespace {

Scalar sym_p_pow(int e) {
  PolyP f;
  f.coeffs.assign(e + 1, mpz_class(0));
  f.coeffs[e] = 1;
  return Scalar(f);
}

Scalar num_p_pow(const mpz_class& p, int e) {
  mpz_class v;
  mpz_pow_ui(v.get_mpz_t(), p.get_mpz_t(), e);
  return Scalar(v);
}

}  // namespace

CoreParams catalog(const std::string& name, std::optional<int> k,
                   std::optional<mpz_class> p, int horizon) {
  bool symbolic = !p.has_value();
  auto ppow = [&](int e) { return symbolic ? sym_p_pow(e) : num_p_pow(*p, e); };
  auto cnst = [&](long c) {
    return symbolic ? Scalar(PolyP::constant(mpz_class(c))) : Scalar(mpz_class(c));
  };

  if (name == "zeta") return CoreParams({cnst(1)});
  if (name == "liouville") return CoreParams({cnst(-1)});
  if (name == "tau") return CoreParams({cnst(2), cnst(-1)});
  if (name == "zeta_k") {
    if (!k) throw Error("zeta_k needs k");
    return CoreParams({ppow(*k)});
  }
  if (name == "sigma_k" || name == "sigma") {
    int kk = k.value_or(1);
    return CoreParams({ppow(kk) + cnst(1), -ppow(kk)});
  }
  if (name == "phi") {
    Scalar t = ppow(1) + cnst(-1);  // p - 1
    return CoreParams(std::vector<Scalar>(horizon, t), CoreParams::Kind::Truncated);
  }
  if (name == "mu") {
    return CoreParams(std::vector<Scalar>(horizon, cnst(-1)), CoreParams::Kind::Truncated);
  }
  throw Error("unknown catalog name: " + name);
}

MFFamily catalog_family(const std::string& name, std::optional<int> k) {
  MFFamily fam;
  fam.name = name;
  fam.rule = [name, k](const mpz_class& p, int horizon) {
    return catalog(name, k, p, std::max(horizon, 1));
  };
  return fam;
}

}  // namespace isomf
