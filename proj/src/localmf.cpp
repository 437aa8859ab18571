#include "isomf/localmf.hpp"

#include <algorithm>

#include "isomf/companion.hpp"

namespace isomf {

bool LocalMF::is_identity() const {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!values[i].is_zero()) return false;
  return true;
}

LocalMF LocalMF::identity(const Scalar& ring_sample, int N) {
  LocalMF f;
  f.values.assign(N + 1, ring_sample.zero_like());
  f.values[0] = ring_sample.one_like();
  f.structure = Structure::FiniteParams;
  f.valence = {0, 0};
  return f;
}

LocalMF from_params(const CoreParams& t, int N) {
  LocalMF f;
  f.values = gfp_values(t, N);
  f.params = t;
  if (t.kind == CoreParams::Kind::Finite) f.structure = LocalMF::Structure::FiniteParams;
  return f;
}

CoreParams recover_params(const std::vector<Scalar>& values) {
  if (values.empty() || !values[0].is_one())
    throw Error("not invertible: F_0 must be 1");
  int N = static_cast<int>(values.size()) - 1;
  std::vector<Scalar> t;
  t.reserve(N);
  for (int n = 1; n <= N; ++n) {
    Scalar acc = values[n];
    for (int j = 1; j <= n - 1; ++j) acc = acc - t[j - 1] * values[n - j];
    t.push_back(acc);
  }
  return CoreParams(std::move(t), CoreParams::Kind::Truncated);
}

CoreParams effective_params(const LocalMF& f) {
  if (f.params) return *f.params;
  return recover_params(f.values);
}

LocalMF convolve(const LocalMF& f, const LocalMF& g) {
  if (f.ring_sample().kind() != g.ring_sample().kind())
    throw DomainMismatch("convolve: operands in different rings");
  int N = std::min(f.horizon(), g.horizon());
  LocalMF h;
  h.values.reserve(N + 1);
  for (int n = 0; n <= N; ++n) {
    Scalar acc = f.ring_sample().zero_like();
    for (int j = 0; j <= n; ++j) acc = acc + f.values[j] * g.values[n - j];
    h.values.push_back(acc);
  }
  h.params = recover_params(h.values);
  if (f.valence && g.valence)
    h.valence = {f.valence->first + g.valence->first,
                 f.valence->second + g.valence->second};
  if (f.prime && g.prime && *f.prime == *g.prime) h.prime = f.prime;
  return h;
}

LocalMF inverse(const LocalMF& f) {
  if (f.values.empty() || !f.values[0].is_one())
    throw Error("not invertible: F_0 must be 1");
  int N = f.horizon();
  // Triangular system (f*g)_n = [n=0].
  std::vector<Scalar> g(N + 1, f.ring_sample().zero_like());
  g[0] = f.ring_sample().one_like();
  for (int n = 1; n <= N; ++n) {
    Scalar acc = f.ring_sample().zero_like();
    for (int j = 1; j <= n; ++j) acc = acc + f.values[j] * g[n - j];
    g[n] = -acc;
  }
  // Duality route: (F^{-1})_n = -t_n.
  CoreParams t = effective_params(f);
  for (int n = 1; n <= N; ++n) {
    if (!(g[n] == -t.at(n)))
      throw Error("inverse duality check failed: (F^-1)_n != -t_n");
  }
  LocalMF r;
  r.values = std::move(g);
  // Params of the inverse are -F_n of the original.
  std::vector<Scalar> s;
  for (int n = 1; n <= N; ++n) s.push_back(-f.values[n]);
  r.params = CoreParams(std::move(s), CoreParams::Kind::Truncated);
  r.inv_params = t;
  if (f.structure) {
    switch (*f.structure) {
      case LocalMF::Structure::FiniteParams:
        r.structure = LocalMF::Structure::FiniteValues;
        break;
      case LocalMF::Structure::FiniteValues:
        r.structure = LocalMF::Structure::FiniteParams;
        break;
      case LocalMF::Structure::BothInfinite:
        r.structure = LocalMF::Structure::BothInfinite;
        break;
    }
  }
  if (f.valence) r.valence = {f.valence->second, f.valence->first};
  r.prime = f.prime;
  return r;
}

DegreeResult degree(const LocalMF& f) {
  CoreParams t = effective_params(f);
  DegreeResult d;
  for (int j = 1; j <= t.k(); ++j)
    if (!t.at(j).is_zero()) d.degree = j;
  bool declared_finite =
      (f.structure && *f.structure == LocalMF::Structure::FiniteParams) ||
      (f.params && f.params->kind == CoreParams::Kind::Finite);
  d.finite = declared_finite;
  return d;
}

int classify_type(const LocalMF& f) {
  if (f.is_identity()) return 1;
  if (!f.structure) throw Error("classify_type requires a declared structure");
  switch (*f.structure) {
    case LocalMF::Structure::FiniteParams: return 2;
    case LocalMF::Structure::FiniteValues: return 3;
    case LocalMF::Structure::BothInfinite: return 4;
  }
  return 4;
}

NormalFormResult normal_form(const std::vector<std::pair<Scalar, int>>& factors, int N) {
  for (const auto& [t1, e] : factors) {
    if (t1.is_zero()) throw Error("normal form: degree-1 factor needs t1 != 0");
    if (e != 1 && e != -1) throw Error("normal form: exponent must be +-1");
  }
  std::vector<std::pair<Scalar, int>> reduced;
  for (const auto& fac : factors) {
    auto it = std::find_if(reduced.begin(), reduced.end(), [&](const auto& r) {
      return r.first == fac.first && r.second == -fac.second;
    });
    if (it != reduced.end())
      reduced.erase(it);
    else
      reduced.push_back(fac);
  }
  NormalFormResult out;
  out.reduced = reduced;
  int r = 0, s = 0;
  Scalar sample = factors.empty() ? Scalar(mpz_class(0)) : factors[0].first;
  LocalMF prod = LocalMF::identity(sample.zero_like(), N);
  for (const auto& [t1, e] : reduced) {
    LocalMF cm = from_params(CoreParams({t1}), N);
    cm.valence = {1, 0};
    if (e == 1) {
      ++r;
      prod = convolve(prod, cm);
    } else {
      ++s;
      prod = convolve(prod, inverse(cm));
    }
  }
  out.valence = {r, s};
  prod.valence = out.valence;
  if (r > 0 && s == 0)
    prod.structure = LocalMF::Structure::FiniteParams;
  else if (r == 0 && s > 0)
    prod.structure = LocalMF::Structure::FiniteValues;
  else if (r == 0 && s == 0)
    prod.structure = LocalMF::Structure::FiniteParams;
  else
    prod.structure = LocalMF::Structure::BothInfinite;
  out.product = std::move(prod);
  return out;
}

mpz_class global_eval(const MFFamily& fam, const mpz_class& n) {
  if (n < 1) throw Error("global_eval requires n >= 1");
  mpz_class rem = n;
  mpz_class result(1);
  mpz_class p(2);
  while (rem > 1) {
    if (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
      int e = 0;
      while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
        rem /= p;
        ++e;
      }
      CoreParams t = fam.rule(p, e);
      Scalar v = gfp_values(t, e)[e];
      if (v.kind() != Scalar::Kind::BigInt)
        throw Error("global_eval expects integer local values");
      result *= v.as_int();
    }
    if (p * p > rem && rem > 1) {
      CoreParams t = fam.rule(rem, 1);
      Scalar v = gfp_values(t, 1)[1];
      result *= v.as_int();
      break;
    }
    p = (p == 2) ? mpz_class(3) : mpz_class(p + 2);
  }
  return result;
}

namespace {

std::string structure_name(LocalMF::Structure s) {
  switch (s) {
    case LocalMF::Structure::FiniteParams: return "finite-params";
    case LocalMF::Structure::FiniteValues: return "finite-values";
    case LocalMF::Structure::BothInfinite: return "both-infinite-within-horizon";
  }
  return "";
}

LocalMF::Structure structure_from_name(const std::string& s) {
  if (s == "finite-params") return LocalMF::Structure::FiniteParams;
  if (s == "finite-values") return LocalMF::Structure::FiniteValues;
  if (s == "both-infinite-within-horizon") return LocalMF::Structure::BothInfinite;
  throw Error("unknown structure: " + s);
}

nlohmann::ordered_json scalars_to_json(const std::vector<Scalar>& xs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& x : xs) arr.push_back(scalar_format(x));
  return arr;
}

std::vector<Scalar> scalars_from_json(const nlohmann::ordered_json& arr) {
  std::vector<Scalar> xs;
  for (const auto& s : arr) xs.push_back(scalar_parse(s.get<std::string>()));
  return unify_ring(std::move(xs));
}

}  // namespace

nlohmann::ordered_json localmf_to_json(const LocalMF& f) {
  nlohmann::ordered_json j;
  if (f.prime) j["prime"] = f.prime->get_str();
  j["horizon"] = f.horizon();
  j["values"] = scalars_to_json(f.values);
  if (f.params) j["params"] = scalars_to_json(f.params->params);
  if (f.inv_params) j["inv_params"] = scalars_to_json(f.inv_params->params);
  if (f.structure) j["structure"] = structure_name(*f.structure);
  if (f.valence)
    j["valence"] = nlohmann::ordered_json::array({f.valence->first, f.valence->second});
  return j;
}

LocalMF localmf_from_json(const nlohmann::ordered_json& j) {
  LocalMF f;
  if (j.contains("prime")) f.prime = mpz_class(j["prime"].get<std::string>(), 10);
  f.values = scalars_from_json(j.at("values"));
  if (f.values.empty() || !f.values[0].is_one())
    throw Error("LocalMF JSON: values must start with 1");
  auto kind = (j.contains("structure") &&
               j["structure"].get<std::string>() == "finite-params")
                  ? CoreParams::Kind::Finite
                  : CoreParams::Kind::Truncated;
  if (j.contains("params")) {
    auto ps = scalars_from_json(j["params"]);
    while (kind == CoreParams::Kind::Finite && !ps.empty() && ps.back().is_zero())
      ps.pop_back();
    f.params = CoreParams(ps, kind);
  }
  if (j.contains("inv_params"))
    f.inv_params = CoreParams(scalars_from_json(j["inv_params"]),
                              CoreParams::Kind::Truncated);
  if (j.contains("structure"))
    f.structure = structure_from_name(j["structure"].get<std::string>());
  if (j.contains("valence"))
    f.valence = {j["valence"][0].get<int>(), j["valence"][1].get<int>()};
  return f;
}

}  // namespace isomf
