#include "isomf/partitions.hpp"

#include <algorithm>
#include <map>

namespace isomf {

std::vector<int> ExponentVector::parts_decreasing() const {
  std::vector<int> parts;
  for (int j = static_cast<int>(alpha.size()); j >= 1; --j)
    for (int c = 0; c < alpha[j - 1]; ++c) parts.push_back(j);
  return parts;
}

namespace {

void enumerate_rec(int remaining, int part, std::vector<int>& alpha,
                   std::vector<ExponentVector>& out) {
  if (part == 0) {
    if (remaining == 0) {
      ExponentVector ev;
      ev.alpha = alpha;
      out.push_back(std::move(ev));
    }
    return;
  }
  // Fill parts largest-first so the resulting alpha order is descending lex
  // after we sort below; recursion itself goes over alpha_1 first.
  for (int c = remaining / part; c >= 0; --c) {
    alpha[part - 1] = c;
    enumerate_rec(remaining - c * part, part - 1, alpha, out);
  }
  alpha[part - 1] = 0;
}

}  // namespace

std::vector<ExponentVector> enumerate_partitions(int n, int k) {
  if (n < 0) throw Error("enumerate_partitions: n must be >= 0");
  if (k < 1) throw Error("enumerate_partitions: k must be >= 1");
  std::vector<ExponentVector> out;
  std::vector<int> alpha(k, 0);
  enumerate_rec(n, k, alpha, out);
  std::sort(out.begin(), out.end(),
            [](const ExponentVector& a, const ExponentVector& b) { return a > b; });
  return out;
}

mpz_class multinomial(const ExponentVector& alpha) {
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), alpha.size());
  for (int a : alpha.alpha) {
    if (a < 0) throw Error("multinomial: negative exponent");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), a);
    num /= f;
  }
  return num;
}

mpz_class partition_count(int n, int k) {
  static std::map<std::pair<int, int>, mpz_class> memo;
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  auto key = std::make_pair(n, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  mpz_class v = partition_count(n - k, k) + partition_count(n, k - 1);
  memo[key] = v;
  return v;
}

WeightVector WeightVector::hook(int zeros) {
  WeightVector w;
  w.prefix.assign(zeros, 0);
  w.prefix.push_back(1);
  w.tail = Tail::Constant;
  return w;
}

long WeightVector::at(int j) const {
  if (j < 1) throw Error("WeightVector index is 1-based");
  if (j <= static_cast<int>(prefix.size())) return prefix[j - 1];
  long last = prefix.empty() ? 0 : prefix.back();
  if (tail == Tail::Constant) return last;
  return last + step * (j - static_cast<long>(prefix.size()));
}

mpq_class weight_factor(const ExponentVector& alpha, const WeightVector& omega) {
  int size = alpha.size();
  if (size == 0) return mpq_class(1);  // P_{omega,0} = 1
  mpz_class num(0);
  for (std::size_t j = 0; j < alpha.alpha.size(); ++j)
    num += mpz_class(alpha.alpha[j]) * omega.at(static_cast<int>(j + 1));
  mpq_class q(num, mpz_class(size));
  q.canonicalize();
  return q;
}

}  // namespace isomf
