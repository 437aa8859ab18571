#pragma once

#include <string>

#include "isomf/localmf.hpp"

#include "json.hpp"

namespace isomf {

// Outcome of one executable identity check. `witness` holds the first
// counterexample (inputs and both sides) when the check fails.
struct CheckReport {
  std::string identity;
  std::string sweep;
  bool pass = true;
  std::string witness;

  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
  nlohmann::ordered_json to_json() const;
};

// Busche-Ramanujan (4.1): F_{r+s} = F_r F_s + t_2 F_{r-1} F_{s-1}.
CheckReport check_br_product(const Scalar& t1, const Scalar& t2, int r, int s);

// (4.2), Lemma 1, and their equivalence with (4.1).
CheckReport check_br_inverse(const Scalar& t1, const Scalar& t2, int r, int s);

// McCarthy: the degree-2 recursion with B = -t_2 always holds; whether the
// function n -> F_n^2 - F_{2n} is completely multiplicative usually does not.
struct McCarthyReport {
  CheckReport recursion;
  CheckReport b_degree_one;          // pass iff B has degree 1
  std::vector<Scalar> b_params;      // recovered u
};
McCarthyReport check_mccarthy(const LocalMF& f);

// Hook-coefficient generalization F_{r+s} = sum_j (-1)^j S_{(r,1^j)} F_{s-j},
// j = 0..k-1 with F vanishing at negative indices (the bottom row of A^{r+s}
// written as bottom-row-of-A^r times A^s).
CheckReport check_thm13(const CoreParams& t, int r, int s);

// Symbolic identity t_n = F_n with t_j replaced by (-1)^{j+1} F_j.
CheckReport params_from_F(int n);

// Degree-2 closed form F_n = sum_j (-1)^j C(n-j,j) t_1^{n-2j} (-t_2)^j.
CheckReport check_binomial(const Scalar& t1, const Scalar& t2, int n);

// Valence <1,1> products: F_n = t'^n - t'^{n-1} t'', t_n = -t''^n + t' t''^{n-1},
// and F_n = t'^{n-1} F_1.
CheckReport check_totient_formulas(const Scalar& tp, const Scalar& tpp, int N);

// Product-parameter formula t_n = t'_n - sum_j t'_{n-j} t''_j + t''_n.
CheckReport check_cor9(const CoreParams& tprime, const CoreParams& tsecond, int N);

// F_n = sum_{j=0}^n t'^{n-j} F''_j for beta * gamma with gamma the inverse
// of a positive degree-(k-1) function.
CheckReport check_thm11(const Scalar& tp, const CoreParams& gamma_params, int N);

// Exhaustive sweeps used by the acceptance suite.
CheckReport sweep_br();        // t1,t2 in {-3..3}^2, t2 != 0, r <= s, r+s <= 12
CheckReport sweep_thm13();     // k <= 4, t in {-2..2}^k, t_k != 0, r <= s <= 8
CheckReport sweep_prop5(int max_n = 6);
CheckReport sweep_binomial();  // n <= 10 on the BR grid
CheckReport sweep_totient();

}  // namespace isomf
