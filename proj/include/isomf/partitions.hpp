#pragma once

#include <gmpxx.h>

#include <vector>

#include "isomf/error.hpp"

namespace isomf {

// Exponent vector (alpha_1,...,alpha_k) encoding the partition
// (1^{alpha_1},...,k^{alpha_k}) of n = sum j*alpha_j.
struct ExponentVector {
  std::vector<int> alpha;

  int weight() const {  // n
    int n = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) n += static_cast<int>(j + 1) * alpha[j];
    return n;
  }
  int size() const {  // |alpha|
    int s = 0;
    for (int a : alpha) s += a;
    return s;
  }
  // Partition as a weakly decreasing list of parts.
  std::vector<int> parts_decreasing() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

// All alpha with sum j*alpha_j = n and parts <= k, in descending
// lexicographic order on alpha. n = 0 yields the single empty partition.
std::vector<ExponentVector> enumerate_partitions(int n, int k);

// |alpha|! / prod alpha_j!
mpz_class multinomial(const ExponentVector& alpha);

// Partition-counting recurrence P(n,k) = P(n-k,k) + P(n,k-1); test oracle.
mpz_class partition_count(int n, int k);

// Weight vector (omega_1, omega_2, ...). A finite prefix extended by a tail
// rule, so the infinite weights (1,1,...) and (1,2,...) need no storage.
struct WeightVector {
  enum class Tail { Constant, Arithmetic };

  std::vector<long> prefix;
  Tail tail = Tail::Constant;
  long step = 0;  // arithmetic tail increment

  static WeightVector ones() { return {{1}, Tail::Constant, 0}; }
  static WeightVector natural() { return {{1}, Tail::Arithmetic, 1}; }
  // (0,...,0,1,1,...) with `zeros` leading zeros.
  static WeightVector hook(int zeros);

  long at(int j) const;  // omega_j, 1-based
};

// (sum alpha_j omega_j) / |alpha|; 1 for the empty partition.
mpq_class weight_factor(const ExponentVector& alpha, const WeightVector& omega);

}  // namespace isomf
