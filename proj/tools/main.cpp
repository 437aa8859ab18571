#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "isomf/catalog.hpp"
#include "isomf/companion.hpp"
#include "isomf/identities.hpp"
#include "isomf/isobaric.hpp"
#include "isomf/norm.hpp"
#include "isomf/periodicity.hpp"
#include "isomf/roots.hpp"

using nlohmann::ordered_json;
using namespace isomf;

namespace {

int default_horizon() {
  if (const char* env = std::getenv("ISOMF_HORIZON")) {
    int h = std::atoi(env);
    if (h > 0) return h;
  }
  return kDefaultHorizon;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<Scalar> parse_scalars(const std::string& csv) {
  std::vector<Scalar> xs;
  for (const auto& tok : split_csv(csv)) xs.push_back(scalar_parse(tok));
  return unify_ring(std::move(xs));
}

std::vector<long> parse_longs(const std::string& csv) {
  std::vector<long> xs;
  for (const auto& tok : split_csv(csv)) xs.push_back(std::stol(tok));
  return xs;
}

CoreParams parse_core(const std::string& csv, bool truncated = false) {
  return CoreParams(parse_scalars(csv),
                    truncated ? CoreParams::Kind::Truncated : CoreParams::Kind::Finite);
}

ordered_json scalar_list(const std::vector<Scalar>& xs) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(scalar_format(x));
  return a;
}

// Render the payload. CSV and plain formats apply to the "values" sequence
// when one is present; otherwise they fall back to the principal field.
void emit(const ordered_json& payload, const std::string& format) {
  if (format == "json") {
    std::cout << payload.dump() << "\n";
    return;
  }
  if (format == "csv") {
    if (!payload.contains("values")) throw Error("csv format needs a value sequence");
    std::cout << "n,value\n";
    int n = 0;
    for (const auto& v : payload["values"]) std::cout << n++ << "," << v.get<std::string>() << "\n";
    return;
  }
  // plain
  for (const char* key : {"poly", "value"})
    if (payload.contains(key)) {
      std::cout << payload[key].get<std::string>() << "\n";
      return;
    }
  if (payload.contains("values")) {
    for (const auto& v : payload["values"]) std::cout << v.get<std::string>() << "\n";
    return;
  }
  std::cout << payload.dump() << "\n";
}

int emit_report(const CheckReport& rep, const std::string& format) {
  emit(rep.to_json(), format);
  return rep.pass ? 0 : 1;
}

int emit_reports(const std::vector<CheckReport>& reps, const std::string& format) {
  ordered_json arr = ordered_json::array();
  bool pass = true;
  for (const auto& r : reps) {
    arr.push_back(r.to_json());
    pass = pass && r.pass;
  }
  if (format == "json")
    std::cout << arr.dump() << "\n";
  else
    for (const auto& r : reps)
      std::cout << r.identity << ": " << (r.pass ? "pass" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

LocalMF input_mf(const std::string& values_csv, const std::string& t_csv,
                 bool truncated, int horizon) {
  if (!values_csv.empty()) {
    LocalMF f;
    f.values = parse_scalars(values_csv);
    if (f.values.empty() || !f.values[0].is_one()) throw Error("values must start with 1");
    return f;
  }
  if (!t_csv.empty()) return from_params(parse_core(t_csv, truncated), horizon);
  throw CLI::ValidationError("need --values or --t");
}

int trimmed_degree(const CoreParams& t) {
  for (int j = t.k(); j >= 1; --j)
    if (!t.at(j).is_zero()) return j;
  return 0;
}

std::optional<mpz_class> opt_prime(const std::string& p) {
  if (p.empty()) return std::nullopt;
  return mpz_class(p);
}

std::vector<CheckReport> norm_suite() {
  std::vector<CheckReport> reps;
  // Fibonacci: N_n = f_{2n+1}, params (3,-1)
  CheckReport fib_rep;
  fib_rep.identity = "norm-fibonacci";
  fib_rep.sweep = "N_n = f_{2n+1}, n <= 8, params (3,-1)";
  LocalMF fib = from_params(CoreParams::from_ints({1, 1}), 20);
  auto nr = km_norm(fib, 8);
  auto odd_fib = gfp_values(CoreParams::from_ints({1, 1}), 17);
  for (int n = 1; n <= 8; ++n)
    if (!(nr.values[n] == odd_fib[2 * n + 1]))
      fib_rep.fail("n=" + std::to_string(n) + " N=" + scalar_format(nr.values[n]));
  if (!(nr.params.at(1) == Scalar(3L)) || !(nr.params.at(2) == Scalar(-1L)) ||
      trimmed_degree(nr.params) != 2)
    fib_rep.fail("params");
  reps.push_back(fib_rep);
  // N(tau) = tau with params (2,-1)
  CheckReport tau_rep;
  tau_rep.identity = "norm-tau-fixed-point";
  tau_rep.sweep = "N(tau) = tau, params (2,-1)";
  LocalMF tau = from_params(CoreParams::from_ints({2, -1}), 20);
  auto nt = km_norm(tau, 8);
  for (int n = 0; n <= 8; ++n)
    if (!(nt.values[n] == tau.values[n]))
      tau_rep.fail("n=" + std::to_string(n) + " N=" + scalar_format(nt.values[n]));
  if (!(nt.params.at(1) == Scalar(2L)) || !(nt.params.at(2) == Scalar(-1L)) ||
      trimmed_degree(nt.params) != 2)
    tau_rep.fail("params");
  reps.push_back(tau_rep);
  // Theorem 14 on the exhaustive degree <= 2 grid with entries in {-2..2}
  CheckReport mult_rep;
  mult_rep.identity = "thm14-norm-multiplicative";
  mult_rep.sweep = "degree <= 2 cores, entries {-2..2}, M = 4";
  std::vector<CoreParams> grid;
  for (long a = -2; a <= 2; ++a) {
    if (a != 0) grid.push_back(CoreParams::from_ints({a}));
    for (long b = -2; b <= 2; ++b)
      if (b != 0) grid.push_back(CoreParams::from_ints({a, b}));
  }
  for (const auto& tf : grid)
    for (const auto& tg : grid) {
      auto r = check_norm_mult(from_params(tf, 8), from_params(tg, 8), 4);
      if (!r.pass) mult_rep.fail(r.witness);
    }
  reps.push_back(mult_rep);
  // Theorem 16 degree preservation, k <= 4
  CheckReport deg_rep;
  deg_rep.identity = "thm16-norm-degree";
  deg_rep.sweep = "k <= 4 cores";
  for (const auto& t : {CoreParams::from_ints({2}), CoreParams::from_ints({1, 1}),
                        CoreParams::from_ints({1, -1, 2}), CoreParams::from_ints({2, 0, -1, 1})}) {
    LocalMF f = from_params(t, 2 * (2 * t.k() + 4));
    auto r = check_norm_degree(f);
    if (!r.pass) deg_rep.fail("k=" + std::to_string(t.k()) + ": " + r.witness);
  }
  reps.push_back(deg_rep);
  return reps;
}

std::vector<CheckReport> root_suite() {
  std::vector<CheckReport> reps;
  mpz_class p2(2);
  std::vector<std::pair<std::string, LocalMF>> cat = {
      {"zeta", from_params(catalog("zeta", {}, p2, 12), 12)},
      {"tau", from_params(catalog("tau", {}, p2, 12), 12)},
      {"sigma", from_params(catalog("sigma", {}, p2, 12), 12)},
      {"phi", from_params(catalog("phi", {}, p2, 12), 12)},
      {"mu", from_params(catalog("mu", {}, p2, 12), 12)},
      {"liouville", from_params(catalog("liouville", {}, p2, 12), 12)},
  };
  CheckReport one_rep;
  one_rep.identity = "conv-power-q1-identity";
  one_rep.sweep = "catalog at p=2, horizon 12";
  for (const auto& [name, f] : cat) {
    auto h = conv_power(f, 1, 12);
    for (int n = 0; n <= 12; ++n)
      if (!(promote_to_rat(f.values[n]) == h.values[n]))
        one_rep.fail(name + " n=" + std::to_string(n));
  }
  reps.push_back(one_rep);

  CheckReport half_rep;
  half_rep.identity = "zeta-half-power-central-binomial";
  half_rep.sweep = "n <= 8";
  auto h = conv_power(from_params(CoreParams::from_ints({1}), 8), mpq_class(1, 2), 8);
  for (int n = 0; n <= 8; ++n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 4, n);
    mpq_class want(c, d);
    want.canonicalize();
    if (!(h.values[n] == Scalar(want))) half_rep.fail("n=" + std::to_string(n));
  }
  reps.push_back(half_rep);

  LocalMF fib = from_params(CoreParams::from_ints({1, 1}), 12);
  for (int m : {2, 3, 5}) {
    for (const auto& [name, f] :
         {std::pair<std::string, LocalMF>{"tau", from_params(catalog("tau", {}, p2, 12), 12)},
          {"sigma(p=2)", from_params(catalog("sigma", {}, p2, 12), 12)},
          {"fibonacci", fib}}) {
      auto r = check_root_roundtrip(f, m, 12);
      r.identity = "conv-root-roundtrip-" + name;
      reps.push_back(r);
    }
  }

  CheckReport inv_rep;
  inv_rep.identity = "conv-power-minus-one-is-inverse";
  inv_rep.sweep = "catalog at p=2, horizon 12";
  for (const auto& [name, f] : cat) {
    auto g = conv_power(f, -1, 12);
    LocalMF gi = inverse(f);
    for (int n = 0; n <= 12; ++n)
      if (!(promote_to_rat(gi.values[n]) == g.values[n]))
        inv_rep.fail(name + " n=" + std::to_string(n));
  }
  reps.push_back(inv_rep);
  return reps;
}

std::vector<CheckReport> period_suite() {
  std::vector<CheckReport> reps;
  CoreParams fib = CoreParams::from_ints({1, 1});
  CheckReport fib_rep;
  fib_rep.identity = "fibonacci-periods";
  fib_rep.sweep = "mod 2,3,7 -> 3,8,16 dividing p^2-1; mod 5 -> 20, reducible";
  struct Want { long m; int period; } wants[] = {{2, 3}, {3, 8}, {7, 16}};
  for (auto [m, want] : wants) {
    auto pr = period_mod(fib, m);
    if (pr.period != want || (m * m - 1) % pr.period != 0)
      fib_rep.fail("mod " + std::to_string(m) + " period " + std::to_string(pr.period));
  }
  auto p5 = period_mod(fib, 5);
  if (p5.period != 20 || core_irreducible_mod_p(fib, 5))
    fib_rep.fail("mod 5 period " + std::to_string(p5.period));
  reps.push_back(fib_rep);

  CheckReport sweep_rep;
  sweep_rep.identity = "thm19-sweep";
  sweep_rep.sweep = "k <= 3, p in {2,3,5,7,11,13}, t in {-2..2}^k, gcd(t_k,p)=1";
  for (int k = 1; k <= 3; ++k) {
    std::vector<long> t(k, -2);
    while (true) {
      for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        if (t[k - 1] % p != 0) {
          auto rep = check_thm19(CoreParams::from_ints(t), p);
          if (rep.irreducible && !rep.report.pass) sweep_rep.fail(rep.report.witness);
        }
      }
      int i = 0;
      while (i < k && t[i] == 2) t[i++] = -2;
      if (i == k) break;
      ++t[i];
    }
  }
  reps.push_back(sweep_rep);
  return reps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for multiplicative functions as linear recursions"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "json|csv|plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  int horizon = default_horizon();

  // shared option storage
  std::string t_csv, t2_csv, values_csv, values2_csv, omega_csv, lambda_csv,
      name, p_str, structure, q_str, check, mod_str, sweep;
  bool truncated = false, symbolic = false, integral = false, suite = false;
  int k = 0, n = 0, j = -1, r = 0, s = 0, M = 4, m = 2, N = -1;
  long n_long = 0, bound = 10000;
  std::optional<int> opt_k;

  auto add_horizon = [&](CLI::App* c) { c->add_option("--horizon", horizon); };

  auto* gfp = app.add_subcommand("gfp", "Generalized Fibonacci polynomial / values");
  gfp->add_option("--k", k);
  gfp->add_option("--n", n)->required();
  gfp->add_flag("--symbolic", symbolic);
  gfp->add_option("--t", t_csv);

  auto* glp = app.add_subcommand("glp", "Generalized Lucas polynomial / values");
  glp->add_option("--k", k);
  glp->add_option("--n", n)->required();
  glp->add_flag("--symbolic", symbolic);
  glp->add_option("--t", t_csv);

  auto* wip = app.add_subcommand("wip", "Weighted isobaric polynomial / series");
  wip->add_option("--omega", omega_csv)->required();
  std::string tail = "constant";
  wip->add_option("--tail", tail)->check(CLI::IsMember({"constant", "arithmetic"}));
  long step = 0;
  wip->add_option("--step", step);
  wip->add_option("--k", k);
  wip->add_option("--n", n)->required();
  wip->add_option("--t", t_csv);

  auto* hooks = app.add_subcommand("hooks", "Schur hooks from the companion orbit");
  hooks->add_option("--t", t_csv)->required();
  hooks->add_option("--n", n_long)->required();
  hooks->add_option("--j", j);

  auto* schur = app.add_subcommand("schur", "General Schur value via Jacobi-Trudi");
  schur->add_option("--t", t_csv)->required();
  schur->add_option("--lambda", lambda_csv)->required();

  auto* recover = app.add_subcommand("recover", "Recover core parameters from values");
  recover->add_option("--values", values_csv)->required();

  auto* convolve_cmd = app.add_subcommand("convolve", "Dirichlet convolution (local)");
  convolve_cmd->add_option("--values", values_csv);
  convolve_cmd->add_option("--t", t_csv);
  convolve_cmd->add_option("--values2", values2_csv);
  convolve_cmd->add_option("--t2", t2_csv);
  convolve_cmd->add_flag("--truncated", truncated);
  add_horizon(convolve_cmd);

  auto* invert = app.add_subcommand("invert", "Convolution inverse");
  invert->add_option("--values", values_csv);
  invert->add_option("--t", t_csv);
  invert->add_flag("--truncated", truncated);
  add_horizon(invert);

  auto* classify = app.add_subcommand("classify", "Degree / type classification");
  classify->add_option("--values", values_csv);
  classify->add_option("--t", t_csv);
  classify->add_flag("--truncated", truncated);
  classify->add_option("--structure", structure)
      ->check(CLI::IsMember({"finite-params", "finite-values", "both-infinite"}));
  add_horizon(classify);

  auto* cat = app.add_subcommand("catalog", "Classical multiplicative functions");
  cat->add_option("--name", name)->required();
  cat->add_option("--k", k);
  cat->add_option("--p", p_str);
  add_horizon(cat);

  auto* global_cmd = app.add_subcommand("global", "Evaluate a catalog function at n");
  global_cmd->add_option("--name", name)->required();
  global_cmd->add_option("--k", k);
  global_cmd->add_option("--n", n_long)->required();
  add_horizon(global_cmd);

  auto* identity_cmd = app.add_subcommand("identity", "Identity checkers and sweeps");
  identity_cmd->add_option("--sweep", sweep)
      ->check(CLI::IsMember({"br", "thm13", "prop5", "binomial", "totient", "all"}));
  identity_cmd->add_option("--check", check)
      ->check(CLI::IsMember({"br", "br-inverse", "thm13", "prop5", "binomial",
                             "totient", "cor9", "thm11", "mccarthy"}));
  identity_cmd->add_option("--t", t_csv);
  identity_cmd->add_option("--t2", t2_csv);
  identity_cmd->add_option("--values", values_csv);
  identity_cmd->add_option("--r", r);
  identity_cmd->add_option("--s", s);
  identity_cmd->add_option("--n", n);
  identity_cmd->add_option("--N", N);
  identity_cmd->add_flag("--truncated", truncated);
  add_horizon(identity_cmd);

  auto* norm_cmd = app.add_subcommand("norm", "Kesava Menon norm");
  norm_cmd->add_option("--t", t_csv);
  norm_cmd->add_option("--values", values_csv);
  norm_cmd->add_option("--M", M);
  norm_cmd->add_option("--t2", t2_csv);
  norm_cmd->add_option("--check", check)->check(CLI::IsMember({"mult", "degree", "prop12"}));
  norm_cmd->add_flag("--suite", suite);
  norm_cmd->add_flag("--truncated", truncated);
  add_horizon(norm_cmd);

  auto* root_cmd = app.add_subcommand("root", "Rational convolution powers");
  root_cmd->add_option("--t", t_csv);
  root_cmd->add_option("--values", values_csv);
  root_cmd->add_option("--q", q_str);
  root_cmd->add_option("--N", N);
  root_cmd->add_option("--m", m);
  root_cmd->add_option("--check", check)->check(CLI::IsMember({"roundtrip", "group"}));
  root_cmd->add_flag("--suite", suite);
  root_cmd->add_flag("--truncated", truncated);
  add_horizon(root_cmd);

  auto* period_cmd = app.add_subcommand("period", "Periods over Z and mod m");
  period_cmd->add_option("--t", t_csv);
  period_cmd->add_option("--mod", mod_str);
  period_cmd->add_option("--p", p_str);
  period_cmd->add_flag("--integral", integral);
  period_cmd->add_option("--bound", bound);
  period_cmd->add_flag("--suite", suite);

  auto* bench = app.add_subcommand("bench", "Time the exhaustive sweeps");

  for (CLI::App* sc : app.get_subcommands(nullptr)) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gfp) {
      ordered_json out;
      if (!t_csv.empty()) {
        auto vals = gfp_values(parse_core(t_csv), n);
        out["values"] = scalar_list(vals);
      } else {
        k = std::max({k, n, 1});  // stable range: F_{k,n} is independent of k for k >= n
        out["poly"] = gfp_poly(k, n).to_string();
      }
      emit(out, format);
      return 0;
    }
    if (*glp) {
      ordered_json out;
      if (!t_csv.empty()) {
        std::vector<Scalar> vals;
        CoreParams t = parse_core(t_csv);
        for (int i = 1; i <= n; ++i) vals.push_back(glp_trace(t, i));
        out["values"] = scalar_list(vals);
      } else {
        k = std::max({k, n, 1});  // stable range: F_{k,n} is independent of k for k >= n
        out["poly"] = glp_poly(k, n).to_string();
      }
      emit(out, format);
      return 0;
    }
    if (*wip) {
      WeightVector omega{parse_longs(omega_csv),
                         tail == "constant" ? WeightVector::Tail::Constant
                                            : WeightVector::Tail::Arithmetic,
                         step};
      ordered_json out;
      if (!t_csv.empty()) {
        auto vals = series_from_genfun(omega, parse_scalars(t_csv), n);
        out["values"] = scalar_list(vals);
      } else {
        k = std::max({k, n, 1});  // stable range: F_{k,n} is independent of k for k >= n
        out["poly"] = wip_poly(omega, k, n).to_string();
      }
      emit(out, format);
      return 0;
    }
    if (*hooks) {
      CoreParams t = parse_core(t_csv);
      ordered_json out;
      if (j >= 0) {
        out["value"] = scalar_format(hook(t, n_long, j));
      } else {
        ordered_json arr = ordered_json::array();
        for (int jj = 0; jj < t.k(); ++jj) arr.push_back(scalar_format(hook(t, n_long, jj)));
        out["hooks"] = arr;
      }
      emit(out, format);
      return 0;
    }
    if (*schur) {
      std::vector<int> lambda;
      for (long x : parse_longs(lambda_csv)) lambda.push_back(static_cast<int>(x));
      ordered_json out;
      out["value"] = scalar_format(schur_general(parse_core(t_csv), lambda));
      emit(out, format);
      return 0;
    }
    if (*recover) {
      auto vals = parse_scalars(values_csv);
      CoreParams t = recover_params(vals);
      ordered_json out;
      out["params"] = scalar_list(t.params);
      out["degree"] = trimmed_degree(t);
      emit(out, format);
      return 0;
    }
    if (*convolve_cmd) {
      LocalMF f = input_mf(values_csv, t_csv, truncated, horizon);
      LocalMF g = input_mf(values2_csv, t2_csv, truncated, horizon);
      emit(localmf_to_json(convolve(f, g)), format);
      return 0;
    }
    if (*invert) {
      emit(localmf_to_json(inverse(input_mf(values_csv, t_csv, truncated, horizon))), format);
      return 0;
    }
    if (*classify) {
      LocalMF f = input_mf(values_csv, t_csv, truncated, horizon);
      if (structure == "finite-params") f.structure = LocalMF::Structure::FiniteParams;
      if (structure == "finite-values") f.structure = LocalMF::Structure::FiniteValues;
      if (structure == "both-infinite") f.structure = LocalMF::Structure::BothInfinite;
      if (!f.structure && !t_csv.empty() && !truncated)
        f.structure = LocalMF::Structure::FiniteParams;
      DegreeResult d = degree(f);
      ordered_json out;
      out["type"] = classify_type(f);
      out["degree"] = d.finite ? ordered_json(d.degree) : ordered_json("unbounded-within-horizon");
      emit(out, format);
      return 0;
    }
    if (*cat) {
      opt_k = k > 0 ? std::optional<int>(k) : std::nullopt;
      CoreParams t = catalog(name, opt_k, opt_prime(p_str), horizon);
      LocalMF f = from_params(t, horizon);
      if (!p_str.empty()) f.prime = mpz_class(p_str);
      emit(localmf_to_json(f), format);
      return 0;
    }
    if (*global_cmd) {
      opt_k = k > 0 ? std::optional<int>(k) : std::nullopt;
      mpz_class v = global_eval(catalog_family(name, opt_k), mpz_class(n_long));
      ordered_json out;
      out["name"] = name;
      out["n"] = n_long;
      out["value"] = v.get_str();
      emit(out, format);
      return 0;
    }
    if (*identity_cmd) {
      if (!sweep.empty()) {
        std::vector<CheckReport> reps;
        if (sweep == "br" || sweep == "all") reps.push_back(sweep_br());
        if (sweep == "thm13" || sweep == "all") reps.push_back(sweep_thm13());
        if (sweep == "prop5" || sweep == "all") reps.push_back(sweep_prop5());
        if (sweep == "binomial" || sweep == "all") reps.push_back(sweep_binomial());
        if (sweep == "totient" || sweep == "all") reps.push_back(sweep_totient());
        return emit_reports(reps, format);
      }
      if (check.empty()) throw CLI::ValidationError("identity needs --check or --sweep");
      if (N < 0) N = horizon;
      if (check == "br" || check == "br-inverse" || check == "binomial") {
        CoreParams t = parse_core(t_csv);
        if (t.k() != 2) throw Error("--t must have two entries for this check");
        if (check == "br") return emit_report(check_br_product(t.at(1), t.at(2), r, s), format);
        if (check == "br-inverse")
          return emit_report(check_br_inverse(t.at(1), t.at(2), r, s), format);
        return emit_report(check_binomial(t.at(1), t.at(2), n), format);
      }
      if (check == "thm13") return emit_report(check_thm13(parse_core(t_csv), r, s), format);
      if (check == "prop5") return emit_report(params_from_F(n), format);
      if (check == "totient") {
        auto xs = unify_ring({scalar_parse(t_csv), scalar_parse(t2_csv)});
        return emit_report(check_totient_formulas(xs[0], xs[1], N), format);
      }
      if (check == "cor9")
        return emit_report(check_cor9(parse_core(t_csv), parse_core(t2_csv), N), format);
      if (check == "thm11") {
        Scalar tp = scalar_parse(t_csv);
        return emit_report(check_thm11(tp, parse_core(t2_csv), N), format);
      }
      // mccarthy
      auto mc = check_mccarthy(input_mf(values_csv, t_csv, truncated, horizon));
      ordered_json out;
      out["recursion"] = mc.recursion.to_json();
      out["b_degree_one"] = mc.b_degree_one.to_json();
      out["b_params"] = scalar_list(mc.b_params);
      emit(out, format);
      return mc.recursion.pass ? 0 : 1;
    }
    if (*norm_cmd) {
      if (suite) return emit_reports(norm_suite(), format);
      LocalMF f = input_mf(values_csv, t_csv, truncated, std::max(horizon, 2 * M));
      if (check == "mult") {
        LocalMF g = input_mf("", t2_csv, truncated, std::max(horizon, 2 * M));
        return emit_report(check_norm_mult(f, g, M), format);
      }
      if (check == "degree") return emit_report(check_norm_degree(f), format);
      if (check == "prop12") return emit_report(check_prop12(f, M), format);
      NormResult nr = km_norm(f, M);
      ordered_json out;
      out["values"] = scalar_list(nr.values);
      out["params"] = scalar_list(nr.params.params);
      emit(out, format);
      return 0;
    }
    if (*root_cmd) {
      if (suite) return emit_reports(root_suite(), format);
      if (N < 0) N = horizon;
      LocalMF f = input_mf(values_csv, t_csv, truncated, N);
      if (check == "roundtrip") return emit_report(check_root_roundtrip(f, m, N), format);
      if (check == "group") {
        std::vector<CheckReport> reps;
        for (const mpq_class& q1 : {mpq_class(1, 2), mpq_class(-1, 3), mpq_class(2)})
          reps.push_back(check_power_group_law(f, q1, mpq_class(1, 3), N));
        return emit_reports(reps, format);
      }
      if (q_str.empty()) throw CLI::ValidationError("root needs --q, --check or --suite");
      mpq_class q(q_str);
      q.canonicalize();
      ConvPowerSeq seq = conv_power(f, q, N);
      ordered_json out;
      out["q"] = q.get_str();
      out["values"] = scalar_list(seq.values);
      emit(out, format);
      return 0;
    }
    if (*period_cmd) {
      if (suite) return emit_reports(period_suite(), format);
      CoreParams t = parse_core(t_csv);
      ordered_json out;
      if (!p_str.empty()) {
        auto rep = check_thm19(t, mpz_class(p_str), bound > 10000 ? bound : 1000000);
        out = rep.report.to_json();
        out["irreducible"] = rep.irreducible;
        out["period"] = rep.period;
        emit(out, format);
        return rep.report.pass ? 0 : 1;
      }
      if (integral) {
        auto pr = detect_integral_period(t, bound);
        if (pr.periodic) {
          out["preperiod"] = pr.preperiod;
          out["period"] = pr.period;
        } else {
          out["result"] = "not-periodic-within-bound";
          out["bound"] = pr.bound;
        }
        emit(out, format);
        return 0;
      }
      if (mod_str.empty()) throw CLI::ValidationError("period needs --mod, --p, --integral or --suite");
      auto pr = period_mod(t, mpz_class(mod_str), std::max(bound, 100000L));
      out["preperiod"] = pr.preperiod;
      out["period"] = pr.period;
      emit(out, format);
      return 0;
    }
    if (*bench) {
      ordered_json arr = ordered_json::array();
      auto timeit = [&](const std::string& label, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        CheckReport r = fn();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ordered_json e;
        e["sweep"] = label;
        e["pass"] = r.pass;
        e["seconds"] = secs;
        arr.push_back(e);
      };
      timeit("br", sweep_br);
      timeit("thm13", sweep_thm13);
      timeit("binomial", sweep_binomial);
      timeit("totient", sweep_totient);
      std::cout << arr.dump() << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
