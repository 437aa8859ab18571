#include "isomf/companion.hpp"

#include <algorithm>

namespace isomf {

Matrix companion_matrix(const CoreParams& t) {
  if (t.kind != CoreParams::Kind::Finite)
    throw Error("no finite companion matrix for a truncated core");
  int k = t.k();
  if (k < 1) throw Error("companion matrix needs k >= 1");
  Scalar zero = t.ring_sample().zero_like();
  Matrix a(k, std::vector<Scalar>(k, zero));
  for (int i = 0; i + 1 < k; ++i) a[i][i + 1] = t.ring_sample().one_like();
  for (int j = 0; j < k; ++j) a[k - 1][j] = t.at(k - j);
  return a;
}

Matrix identity_matrix(int k, const Scalar& ring_sample) {
  Matrix a(k, std::vector<Scalar>(k, ring_sample.zero_like()));
  for (int i = 0; i < k; ++i) a[i][i] = ring_sample.one_like();
  return a;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  int k = static_cast<int>(a.size());
  Matrix r(k, std::vector<Scalar>(k, a[0][0].zero_like()));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (int j = 0; j < k; ++j) r[i][j] = r[i][j] + a[i][l] * b[l][j];
    }
  return r;
}

Scalar mat_trace(const Matrix& a) {
  Scalar acc = a[0][0].zero_like();
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i][i];
  return acc;
}

namespace {

// Parameters recovered from the last row: t_j = a[k-1][k-j].
Scalar last_row_param(const Matrix& a, int j) {
  int k = static_cast<int>(a.size());
  return a[k - 1][k - j];
}

Matrix promote_matrix_to_rat(const Matrix& a) {
  Matrix r = a;
  for (auto& row : r)
    for (auto& x : row) x = promote_to_rat(x);
  return r;
}

// Closed-form inverse of a companion matrix: rows 1..k-1 are identity rows
// 0..k-2; row 0 is (-t_{k-1}, ..., -t_1, 1) / t_k.
Matrix companion_inverse(const Matrix& a) {
  int k = static_cast<int>(a.size());
  Scalar tk = last_row_param(a, k);
  if (tk.is_zero()) throw SingularMatrix("A is invertible iff t_k != 0");
  switch (tk.kind()) {
    case Scalar::Kind::BigInt:
      if (!(tk.as_int() == 1 || tk.as_int() == -1))
        return companion_inverse(promote_matrix_to_rat(a));
      break;
    case Scalar::Kind::PolyP: {
      const PolyP& f = tk.as_poly();
      if (!(f.degree() == 0 && (f.coeffs[0] == 1 || f.coeffs[0] == -1)))
        throw SingularMatrix("negative powers over PolyP require a unit t_k");
      break;
    }
    case Scalar::Kind::ModInt: {
      mpz_class inv;
      if (!mpz_invert(inv.get_mpz_t(), tk.as_mod().residue.get_mpz_t(),
                      tk.as_mod().modulus.get_mpz_t()))
        throw SingularMatrix("t_k not invertible modulo m");
      break;
    }
    case Scalar::Kind::BigRat:
      break;
  }
  Scalar zero = tk.zero_like();
  Matrix b(k, std::vector<Scalar>(k, zero));
  for (int i = 1; i < k; ++i) b[i][i - 1] = tk.one_like();
  for (int c = 0; c + 1 < k; ++c)
    b[0][c] = scalar_div_exact(-last_row_param(a, k - 1 - c), tk);
  b[0][k - 1] = scalar_div_exact(tk.one_like(), tk);
  return b;
}

}  // namespace

Matrix matrix_power(const Matrix& a, long n) {
  int k = static_cast<int>(a.size());
  Matrix base = a;
  if (n < 0) {
    base = companion_inverse(a);
    n = -n;
  } else if (n == 0) {
    return identity_matrix(k, a[0][0]);
  }
  Matrix result = identity_matrix(k, base[0][0]);
  while (n > 0) {
    if (n & 1) result = mat_mul(result, base);
    base = (n >>= 1) ? mat_mul(base, base) : base;
  }
  return result;
}

std::vector<Scalar> gfp_values(const CoreParams& t, int N) {
  Scalar zero = t.ring_sample().zero_like();
  std::vector<Scalar> f(N + 1, zero);
  f[0] = t.ring_sample().one_like();
  for (int n = 1; n <= N; ++n) {
    Scalar acc = zero;
    for (int j = 1; j <= std::min(n, t.k()); ++j) acc = acc + t.at(j) * f[n - j];
    f[n] = acc;
  }
  return f;
}

Scalar hook(const CoreParams& t, long n, int j) {
  int k = t.k();
  if (j < 0 || j >= k) throw Error("hook leg must satisfy 0 <= j <= k-1");
  Matrix an = matrix_power(companion_matrix(t), n);
  Scalar v = an[k - 1][k - 1 - j];
  return (j % 2 == 0) ? v : -v;
}

namespace {

Scalar determinant(const Matrix& m) {
  int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  Scalar acc = m[0][0].zero_like();
  for (int c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    Matrix minor;
    minor.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
      std::vector<Scalar> row;
      row.reserve(n - 1);
      for (int j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    Scalar term = m[0][c] * determinant(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Scalar jt_determinant(const CoreParams& t, const std::vector<int>& lambda) {
  int len = static_cast<int>(lambda.size());
  if (len == 0) return t.ring_sample().one_like();
  for (int i = 0; i + 1 < len; ++i)
    if (lambda[i] < lambda[i + 1]) throw Error("lambda must be weakly decreasing");
  if (lambda.back() < 0) throw Error("lambda parts must be non-negative");
  int maxIdx = lambda[0] + len - 1;
  auto f = gfp_values(t, std::max(maxIdx, 0));
  auto fat = [&](int m) {
    return (m < 0) ? t.ring_sample().zero_like() : f[m];
  };
  Matrix m(len, std::vector<Scalar>(len, t.ring_sample().zero_like()));
  for (int i = 0; i < len; ++i)
    for (int c = 0; c < len; ++c) m[i][c] = fat(lambda[i] - i + c);
  return determinant(m);
}

}  // namespace

Scalar hook_jt(const CoreParams& t, int n, int j) {
  if (n < 1) throw Error("hook_jt requires n >= 1");
  if (j < 0) throw Error("hook_jt requires j >= 0");
  std::vector<int> lambda(1 + j, 1);
  lambda[0] = n;
  return jt_determinant(t, lambda);
}

Scalar schur_general(const CoreParams& t, const std::vector<int>& lambda) {
  return jt_determinant(t, lambda);
}

Scalar glp_trace(const CoreParams& t, long n) {
  return mat_trace(matrix_power(companion_matrix(t), n));
}

Scalar scalar_abs(const Scalar& x) {
  switch (x.kind()) {
    case Scalar::Kind::BigInt: return Scalar(mpz_class(abs(x.as_int())));
    case Scalar::Kind::BigRat: return Scalar(mpq_class(abs(x.as_rat())));
    default: throw Error("scalar_abs is defined for BigInt/BigRat only");
  }
}

Prop1Report check_prop1_magnitude(const CoreParams& t, int j, int s) {
  int k = t.k();
  if (s < 0 || s >= k) throw Error("prop1 column must satisfy 0 <= s <= k-1");
  if (j < 0) throw Error("prop1 shift must be non-negative");
  // Everything is done in the fraction field.
  std::vector<Scalar> tr;
  for (const auto& x : t.params) tr.push_back(promote_to_rat(x));
  CoreParams trat(tr, t.kind);

  Prop1Report rep;
  rep.lhs = hook(trat, -static_cast<long>(k) - j, s);
  std::vector<int> lambda;
  for (int i = 0; i < s; ++i) lambda.push_back(j + 1);
  for (int i = 0; i < k - s - 1; ++i) lambda.push_back(j);
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  Scalar num = schur_general(trat, lambda);
  Scalar den = trat.at(k).one_like();
  for (int i = 0; i <= j; ++i) den = den * trat.at(k);
  rep.rhs = scalar_div_exact(num, den);
  rep.magnitude_equal = scalar_abs(rep.lhs) == scalar_abs(rep.rhs);
  rep.printed_sign_holds = rep.lhs == -rep.rhs;
  return rep;
}

}  // namespace isomf
