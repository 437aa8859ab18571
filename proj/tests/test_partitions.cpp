#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isomf/partitions.hpp"

using namespace isomf;

TEST_CASE("enumeration examples") {
  auto p22 = enumerate_partitions(2, 2);
  REQUIRE(p22.size() == 2);
  CHECK(p22[0].alpha == std::vector<int>{2, 0});
  CHECK(p22[1].alpha == std::vector<int>{0, 1});

  CHECK(enumerate_partitions(5, 2).size() == 3);  // (1^5), (1^3,2), (1,2^2)
  CHECK(enumerate_partitions(6, 6).size() == 11);
  CHECK(enumerate_partitions(0, 3).size() == 1);
  CHECK(enumerate_partitions(0, 3)[0].size() == 0);  // all-zero exponent vector
}

TEST_CASE("enumeration counts match the partition recurrence") {
  for (int n = 0; n <= 20; ++n)
    for (int k = 1; k <= 10; ++k)
      CHECK(mpz_class(enumerate_partitions(n, k).size()) == partition_count(n, k));
}

TEST_CASE("every enumerated vector is a partition of n with parts <= k") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 1; k <= 6; ++k)
      for (const auto& a : enumerate_partitions(n, k)) {
        CHECK(a.weight() == n);
        CHECK(static_cast<int>(a.alpha.size()) <= k);
      }
}

TEST_CASE("multinomial") {
  ExponentVector a{{2}};
  CHECK(multinomial(a) == 1);
  ExponentVector b{{1, 1}};
  CHECK(multinomial(b) == 2);  // coefficient of t1 t2 in F_3
  ExponentVector c{{3, 1}};
  CHECK(multinomial(c) == 4);  // coefficient of t1^3 t2 in F_5
}

TEST_CASE("weight vectors") {
  WeightVector ones = WeightVector::ones();
  WeightVector nat = WeightVector::natural();
  for (int j = 1; j <= 10; ++j) {
    CHECK(ones.at(j) == 1);
    CHECK(nat.at(j) == j);
  }
  WeightVector hk = WeightVector::hook(2);
  CHECK(hk.at(1) == 0);
  CHECK(hk.at(2) == 0);
  CHECK(hk.at(3) == 1);
  CHECK(hk.at(9) == 1);
}

TEST_CASE("weight_factor") {
  CHECK(weight_factor(ExponentVector{{2}}, WeightVector::ones()) == 1);
  CHECK(weight_factor(ExponentVector{{0, 1}}, WeightVector::natural()) == 2);
  CHECK(weight_factor(ExponentVector{{1, 1}}, WeightVector::hook(1)) == mpq_class(1, 2));
  CHECK(weight_factor(ExponentVector{}, WeightVector::natural()) == 1);  // P_0 = 1
}

TEST_CASE("parts_decreasing") {
  ExponentVector a{{1, 2, 0, 1}};  // 1 + 2+2 + 4 = 9
  CHECK(a.weight() == 9);
  CHECK(a.parts_decreasing() == std::vector<int>{4, 2, 2, 1});
}
