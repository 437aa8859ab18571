#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isomf/companion.hpp"
#include "isomf/isobaric.hpp"

using namespace isomf;

namespace {

CoreParams fib() { return CoreParams::from_ints({1, 1}); }

bool mat_eq(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("companion layout") {
  Matrix a = companion_matrix(fib());
  CHECK(a[0][0] == Scalar(0L));
  CHECK(a[0][1] == Scalar(1L));
  CHECK(a[1][0] == Scalar(1L));
  CHECK(a[1][1] == Scalar(1L));

  Matrix b = companion_matrix(CoreParams::from_ints({2, -1}));
  CHECK(b[1][0] == Scalar(-1L));
  CHECK(b[1][1] == Scalar(2L));

  CoreParams sig({scalar_parse("p+1"), scalar_parse("-p")});
  Matrix c = companion_matrix(sig);
  CHECK(c[1][0] == scalar_parse("-p"));
  CHECK(c[1][1] == scalar_parse("p+1"));

  CHECK_THROWS_AS(companion_matrix(CoreParams({Scalar(1L)}, CoreParams::Kind::Truncated)),
                  Error);
}

TEST_CASE("matrix powers, including negative") {
  Matrix a = companion_matrix(fib());
  Matrix a2 = matrix_power(a, 2);
  CHECK(a2[0][0] == Scalar(1L));
  CHECK(a2[1][1] == Scalar(2L));

  Matrix ainv = matrix_power(a, -1);
  CHECK(ainv[0][0] == Scalar(-1L));
  CHECK(ainv[0][1] == Scalar(1L));
  CHECK(ainv[1][0] == Scalar(1L));
  CHECK(ainv[1][1] == Scalar(0L));

  // t=(3,2) over BigInt promotes to BigRat for negative powers
  Matrix b = companion_matrix(CoreParams::from_ints({3, 2}));
  Matrix bm2 = matrix_power(b, -2);
  CHECK(bm2[0][0] == Scalar::rational(11, 4));
  CHECK(bm2[0][1] == Scalar::rational(-3, 4));
  CHECK(bm2[1][0] == Scalar::rational(-3, 2));
  CHECK(bm2[1][1] == Scalar::rational(1, 2));
}

TEST_CASE("negative powers need an invertible t_k") {
  CoreParams bad({scalar_parse("p")});  // t_1 = p is not a unit in PolyP
  CHECK_THROWS_AS(matrix_power(companion_matrix(bad), -1), SingularMatrix);
  CoreParams badmod({Scalar::mod(2, 4)});
  CHECK_THROWS_AS(matrix_power(companion_matrix(badmod), -1), SingularMatrix);
  CoreParams okmod({Scalar::mod(3, 4)});
  Matrix m = matrix_power(companion_matrix(okmod), -1);
  CHECK(m[0][0] == Scalar::mod(3, 4));
}

TEST_CASE("matrix power group law") {
  for (const auto& t : {fib(), CoreParams::from_ints({2, -1}), CoreParams::from_ints({1, -1, 2})}) {
    Matrix a = companion_matrix(t);
    for (long m = -4; m <= 4; ++m)
      for (long n = -4; n <= 4; ++n) {
        // powers of BigInt bases may land in BigRat; normalize before combining
        auto as_rat = [](Matrix x) {
          for (auto& row : x)
            for (auto& v : row) v = promote_to_rat(v);
          return x;
        };
        Matrix lhs = mat_mul(as_rat(matrix_power(a, m)), as_rat(matrix_power(a, n)));
        Matrix rhs = as_rat(matrix_power(a, m + n));
        CHECK(mat_eq(lhs, rhs));
      }
  }
}

TEST_CASE("gfp_values") {
  auto f = gfp_values(fib(), 7);
  long want[] = {1, 1, 2, 3, 5, 8, 13, 21};
  for (int n = 0; n <= 7; ++n) CHECK(f[n] == Scalar(want[n]));
  auto tau = gfp_values(CoreParams::from_ints({2, -1}), 4);
  for (int n = 0; n <= 4; ++n) CHECK(tau[n] == Scalar(static_cast<long>(n + 1)));
}

TEST_CASE("hook values") {
  CHECK(hook(fib(), 5, 0) == Scalar(8L));
  CHECK(hook(fib(), 2, 1) == Scalar(-1L));
  CHECK(hook(fib(), -1, 0) == Scalar(0L));
  CHECK(hook(fib(), 0, 0) == Scalar(1L));
  CHECK_THROWS_AS(hook(fib(), 1, 2), Error);  // leg must be < k
}

TEST_CASE("hook orbit vs Jacobi-Trudi, exhaustive small grid") {
  for (int k = 1; k <= 4; ++k) {
    std::vector<long> t(k, -2);
    while (true) {
      if (t[k - 1] != 0) {
        CoreParams core = CoreParams::from_ints(t);
        for (int n = 1; n <= 8; ++n)
          for (int j = 0; j < k; ++j)
            CHECK(hook(core, n, j) == hook_jt(core, n, j));
      }
      int i = 0;
      while (i < k && t[i] == 2) t[i++] = -2;
      if (i == k) break;
      ++t[i];
    }
  }
}

TEST_CASE("hook_jt examples") {
  CHECK(hook_jt(fib(), 2, 1) == Scalar(-1L));
  CHECK(hook_jt(fib(), 4, 0) == Scalar(5L));
  CHECK(hook_jt(CoreParams::from_ints({2, -1}), 3, 1) == Scalar(3L));
}

TEST_CASE("orbit columns satisfy the recursion doubly-infinitely") {
  for (const auto& t : {fib(), CoreParams::from_ints({3, 2}), CoreParams::from_ints({1, -1, 2})}) {
    int k = t.k();
    for (int j = 0; j < k; ++j)
      for (int n = -5; n + k <= 10; ++n) {
        // c_{n+k} = sum t_i c_{n+k-i}, computed in BigRat to cover negatives
        Scalar acc = Scalar::rational(0, 1);
        for (int i = 1; i <= k; ++i)
          acc = acc + promote_to_rat(t.at(i)) * promote_to_rat(hook(t, n + k - i, j));
        CHECK(acc == promote_to_rat(hook(t, n + k, j)));
      }
  }
}

TEST_CASE("schur_general") {
  CHECK(schur_general(fib(), {4}) == Scalar(5L));
  CHECK(schur_general(fib(), {1, 1}) == Scalar(-1L));
  CHECK(schur_general(CoreParams::from_ints({3, 2}), {2, 2}) == Scalar(4L));
}

TEST_CASE("glp_trace") {
  auto t = fib();
  long lucas[] = {1, 3, 4, 7};
  for (int n = 1; n <= 4; ++n) CHECK(glp_trace(t, n) == Scalar(lucas[n - 1]));
  CHECK(glp_trace(CoreParams::from_ints({2, -1}), 3) == Scalar(2L));
  CHECK(glp_trace(CoreParams::from_ints({-3, 5, 7}), 1) == Scalar(-3L));
}

TEST_CASE("negative-index magnitude law") {
  CoreParams t = CoreParams::from_ints({3, 2});
  auto r1 = check_prop1_magnitude(t, 1, 0);
  CHECK(r1.magnitude_equal);
  CHECK(r1.lhs == Scalar::rational(-3, 4));
  CHECK(r1.printed_sign_holds);

  auto r0 = check_prop1_magnitude(t, 0, 0);
  CHECK(r0.magnitude_equal);
  CHECK(r0.lhs == Scalar::rational(1, 2));
  CHECK_FALSE(r0.printed_sign_holds);

  auto r2 = check_prop1_magnitude(t, 2, 0);
  CHECK(r2.magnitude_equal);
  CHECK(scalar_abs(r2.lhs) == Scalar::rational(11, 8));
}

TEST_CASE("magnitude law sweeps k in {2,3}") {
  for (int k = 2; k <= 3; ++k) {
    std::vector<long> t(k, -2);
    while (true) {
      if (t[k - 1] != 0) {
        CoreParams core = CoreParams::from_ints(t);
        for (int j = 0; j <= 3; ++j)
          for (int s = 0; s < k; ++s)
            CHECK(check_prop1_magnitude(core, j, s).magnitude_equal);
      }
      int i = 0;
      while (i < k && t[i] == 2) t[i++] = -2;
      if (i == k) break;
      ++t[i];
    }
  }
}
