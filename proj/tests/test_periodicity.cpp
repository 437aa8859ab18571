#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isomf/periodicity.hpp"

using namespace isomf;

namespace {

CoreParams fib() { return CoreParams::from_ints({1, 1}); }

}  // namespace

TEST_CASE("Fibonacci periods modulo small primes") {
  auto r2 = period_mod(fib(), 2);
  CHECK(r2.periodic);
  CHECK(r2.preperiod == 0);
  CHECK(r2.period == 3);
  CHECK(period_mod(fib(), 3).period == 8);
  CHECK(period_mod(fib(), 5).period == 20);
  CHECK(period_mod(fib(), 7).period == 16);
  CHECK(period_mod(fib(), 10).period == 60);
}

TEST_CASE("pure periodicity whenever t_k is a unit") {
  for (long m : {2L, 3L, 4L, 5L, 9L}) {
    auto r = period_mod(CoreParams::from_ints({2, -1, 1}), mpz_class(m));
    CHECK(r.preperiod == 0);
  }
  // t_k = 2 is a zero divisor mod 4; a preperiod is allowed there
  auto r = period_mod(CoreParams::from_ints({1, 2}), mpz_class(4));
  CHECK(r.periodic);
}

TEST_CASE("period-divides-order instances") {
  auto r3 = check_thm19(fib(), mpz_class(3));
  CHECK(r3.irreducible);
  CHECK(r3.period == 8);
  CHECK(r3.report.pass);  // 8 | 3^2 - 1

  auto r7 = check_thm19(fib(), mpz_class(7));
  CHECK(r7.irreducible);
  CHECK(r7.period == 16);
  CHECK(r7.report.pass);  // 16 | 48

  // X^2 - X - 1 = (X-3)^2 mod 5: reducible, and indeed 20 does not divide 24
  auto r5 = check_thm19(fib(), mpz_class(5));
  CHECK_FALSE(r5.irreducible);
  CHECK(r5.period == 20);
  CHECK(r5.report.pass);  // no assertion made in the reducible case
}

TEST_CASE("period-divides-order input validation") {
  CHECK_THROWS_AS(check_thm19(fib(), mpz_class(6)), Error);             // not prime
  CHECK_THROWS_AS(check_thm19(CoreParams::from_ints({1, 5}), mpz_class(5)), Error);
}

TEST_CASE("period-divides-order sweep") {
  for (int k = 1; k <= 3; ++k) {
    std::vector<long> t(k, -2);
    while (true) {
      for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        if (t[k - 1] % p != 0) {
          auto rep = check_thm19(CoreParams::from_ints(t), mpz_class(p), 5000);
          INFO(rep.report.witness);
          CHECK(rep.report.pass);
        }
      }
      int i = 0;
      while (i < k && t[i] == 2) t[i++] = -2;
      if (i == k) break;
      ++t[i];
    }
  }
}

TEST_CASE("irreducibility tests") {
  CHECK(core_irreducible_mod_p(fib(), mpz_class(2)));
  CHECK_FALSE(core_irreducible_mod_p(fib(), mpz_class(5)));
  CHECK(core_irreducible_mod_p(CoreParams::from_ints({7}), mpz_class(3)));  // k=1
  // X^3 - X - 1 is irreducible mod 2 but X^3 - X + 1 = (X+1)(X^2+X+1)... mod 2
  CHECK(core_irreducible_mod_p(CoreParams::from_ints({0, 1, 1}), mpz_class(2)));
  // X^3 - 1 = (X - 1)^3 mod 3
  CHECK_FALSE(core_irreducible_mod_p(CoreParams::from_ints({0, 0, 1}), mpz_class(3)));
  // X^4 + X + 1 mod 2: irreducible (no roots, no quadratic factor)
  CHECK(core_irreducible_mod_p(CoreParams::from_ints({0, 0, -1, -1}), mpz_class(2)));
  // X^4 + X^2 + 1 = (X^2+X+1)^2 mod 2: no roots but a quadratic factor
  CHECK_FALSE(core_irreducible_mod_p(CoreParams::from_ints({0, -1, 0, -1}), mpz_class(2)));
}

TEST_CASE("integral periodicity") {
  auto r = detect_integral_period(CoreParams::from_ints({-1, -1}), 100);
  CHECK(r.periodic);
  CHECK(r.period == 3);  // 1, -1, 0 repeating
  auto s = detect_integral_period(CoreParams::from_ints({-1}), 100);
  CHECK(s.periodic);
  CHECK(s.period == 2);
  auto f = detect_integral_period(fib(), 200);
  CHECK_FALSE(f.periodic);  // Fibonacci grows; no repeat over the integers
}

TEST_CASE("cyclotomic cores are periodic with period d") {
  for (int d = 1; d <= 12; ++d) {
    CoreParams t = cyclotomic_core(d);
    auto r = detect_integral_period(t, 1000);
    CHECK(r.periodic);
    CHECK(r.period == d);
  }
}

TEST_CASE("column periods divide the F-column period") {
  std::vector<long> primes = {2, 3, 5};
  for (int k = 1; k <= 3; ++k) {
    std::vector<long> t(k, -2);
    while (true) {
      if (t[k - 1] != 0) {
        CoreParams core = CoreParams::from_ints(t);
        for (long p : primes) {
          if (t[k - 1] % p == 0) continue;  // keep t_k a unit mod p
          int fper = period_mod(core, mpz_class(p), 2000).period;
          bool irred = core_irreducible_mod_p(core, mpz_class(p));
          std::vector<WeightVector> ws = {WeightVector::ones(), WeightVector::natural()};
          for (int z = 1; z <= k - 1; ++z) ws.push_back(WeightVector::hook(z));
          for (const auto& w : ws) {
            auto r = wip_column_period_mod(core, w, mpz_class(p), 2000);
            CAPTURE(p);
            CHECK(fper % r.period == 0);
            if (irred) CHECK(r.period == fper);
          }
        }
      }
      int i = 0;
      while (i < k && t[i] == 2) t[i++] = -2;
      if (i == k) break;
      ++t[i];
    }
  }
}

TEST_CASE("weight-ones column reproduces the F period") {
  auto r = wip_column_period_mod(fib(), WeightVector::ones(), mpz_class(5), 1000);
  CHECK(r.period == 20);
  // Lucas column of the tau core mod 3 is constantly 2: period 1, while the
  // F column has period 3 -- a proper divisor.
  CoreParams tau = CoreParams::from_ints({2, -1});
  CHECK(period_mod(tau, mpz_class(3)).period == 3);
  CHECK(wip_column_period_mod(tau, WeightVector::natural(), mpz_class(3), 1000).period == 1);
}
