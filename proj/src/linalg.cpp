#include "antipode/linalg.hpp"

#include <algorithm>
#include <utility>

#include "antipode/errors.hpp"

namespace antipode {

namespace {

using IntRow = std::vector<Int>;
using IntRows = std::vector<IntRow>;

IntRows to_int_rows(const RatMatrix& m, const Int& scale) {
  IntRows out(m.rows(), IntRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat v = m(i, j) * Rat(scale);
      if (!v.is_integer()) throw MathError("expected an integer matrix");
      out[i][j] = v.num();
    }
  }
  return out;
}

RatMatrix from_int_rows(const IntRows& rows, std::size_t cols, const Int& scale) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(rows[i][j], scale);
  return m;
}

IntRows identity_rows(std::size_t n) {
  IntRows id(n, IntRow(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// row[dst] -= q * row[src]
void axpy(IntRow& dst, const IntRow& src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < dst.size(); ++j) {
    if (src[j] != 0) dst[j] -= q * src[j];
  }
}

void negate(IntRow& r) {
  for (auto& x : r) x = -x;
}

Int int_dot(const IntRow& a, const IntRow& b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  }
  return acc;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int nearest_quotient(const Int& a, const Int& b) { return Rat(a, b).round_half_even(); }

// In-place row-style HNF of `a` with the same row operations applied to `u`.
std::size_t hnf_in_place(IntRows& a, IntRows& u, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (a[i][j] == 0) continue;
        if (best == rows || abs(a[i][j]) < abs(a[best][j])) best = i;
      }
      if (best == rows) break;
      std::swap(a[r], a[best]);
      std::swap(u[r], u[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][j] == 0) continue;
        const Int q = nearest_quotient(a[i][j], a[r][j]);
        axpy(a[i], a[r], q);
        axpy(u[i], u[r], q);
        if (a[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][j] == 0) continue;
    if (a[r][j] < 0) {
      negate(a[r]);
      negate(u[r]);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(a[i][j], a[r][j]);
      axpy(a[i], a[r], q);
      axpy(u[i], u[r], q);
    }
    ++r;
  }
  return r;
}

// Integral LLL with delta = 3/4 on integer row vectors. `h` receives the
// same operations. Throws MathError for dependent rows.
void integral_lll(IntRows& b, IntRows& h) {
  const std::size_t n = b.size();
  if (n == 0) return;
  // 1-based bookkeeping: d[0] = 1, d[i] = Gram determinant of b_1..b_i.
  std::vector<Int> d(n + 1);
  std::vector<std::vector<Int>> lam(n + 1, std::vector<Int>(n + 1));
  auto B = [&](std::size_t i) -> IntRow& { return b[i - 1]; };
  auto H = [&](std::size_t i) -> IntRow& { return h[i - 1]; };

  d[0] = 1;
  d[1] = int_dot(B(1), B(1));
  if (d[1] == 0) throw MathError("not a basis");
  std::size_t k = 2;
  std::size_t kmax = 1;

  auto redi = [&](std::size_t kk, std::size_t l) {
    if (2 * abs(lam[kk][l]) <= d[l]) return;
    const Int q = nearest_quotient(lam[kk][l], d[l]);
    axpy(B(kk), B(l), q);
    axpy(H(kk), H(l), q);
    lam[kk][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[kk][i] -= q * lam[l][i];
  };

  auto swapi = [&](std::size_t kk) {
    std::swap(B(kk), B(kk - 1));
    std::swap(H(kk), H(kk - 1));
    for (std::size_t j = 1; j + 2 <= kk; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
    const Int l = lam[kk][kk - 1];
    const Int bb = exact_div(d[kk - 2] * d[kk] + l * l, d[kk - 1]);
    for (std::size_t i = kk + 1; i <= kmax; ++i) {
      const Int t = lam[i][kk];
      lam[i][kk] = exact_div(d[kk] * lam[i][kk - 1] - l * t, d[kk - 1]);
      lam[i][kk - 1] = exact_div(bb * t + l * lam[i][kk], d[kk]);
    }
    d[kk - 1] = bb;
  };

  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Int u = int_dot(B(k), B(j));
        for (std::size_t i = 1; i < j; ++i) u = exact_div(d[i] * u - lam[k][i] * lam[j][i], d[i - 1]);
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
          if (d[k] == 0) throw MathError("not a basis");
        }
      }
    }
    redi(k, k - 1);
    if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
      swapi(k);
      k = std::max<std::size_t>(2, k - 1);
    } else {
      for (std::size_t l = k - 1; l-- > 1;) redi(k, l);
      ++k;
    }
  }
}

}  // namespace

EchelonForm rref(const RatMatrix& m) {
  EchelonForm out{m, {}};
  RatMatrix& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
    std::size_t p = r;
    while (p < a.rows() && a(p, j).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const Rat inv = Rat(1) / a(r, j);
    for (std::size_t c = j; c < a.cols(); ++c) a(r, c) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, j).is_zero()) continue;
      const Rat f = a(i, j);
      for (std::size_t c = j; c < a.cols(); ++c) {
        if (!a(r, c).is_zero()) a(i, c) -= f * a(r, c);
      }
    }
    out.pivot_cols.push_back(j);
    ++r;
  }
  return out;
}

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = j;
    while (p < n && a(p, j).is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != j) {
      a.swap_rows(p, j);
      det = -det;
    }
    det *= a(j, j);
    const Rat inv = Rat(1) / a(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      if (a(i, j).is_zero()) continue;
      const Rat f = a(i, j) * inv;
      for (std::size_t c = j; c < n; ++c) {
        if (!a(j, c).is_zero()) a(i, c) -= f * a(j, c);
      }
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivot_cols.size(); }

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const EchelonForm e = rref(aug);
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) throw MathError("singular matrix");
  return e.reduced.col_block(n, n);
}

RatMatrix kernel(const RatMatrix& m) {
  const EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivot_cols) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return RatMatrix::from_rows(basis, m.cols());
}

std::optional<Solution> solve(const RatMatrix& m, const RatVector& rhs) {
  if (rhs.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const EchelonForm e = rref(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Solution s;
  s.particular.assign(m.cols(), Rat(0));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) s.particular[e.pivot_cols[r]] = e.reduced(r, m.cols());
  s.kernel = kernel(m);
  return s;
}

std::optional<Solution> solve_left(const RatMatrix& m, const RatVector& rhs) {
  return solve(m.transpose(), rhs);
}

HermiteForm hnf(const RatMatrix& m) {
  if (!m.is_integral()) throw InputError("hnf requires an integer matrix");
  IntRows a = to_int_rows(m, 1);
  IntRows u = identity_rows(m.rows());
  HermiteForm out;
  out.rank = hnf_in_place(a, u, m.cols());
  out.h = from_int_rows(a, m.cols(), 1);
  out.u = from_int_rows(u, m.rows(), 1);
  return out;
}

RatMatrix lattice_basis_from_generators(const RatMatrix& generators) {
  const Int scale = generators.common_denominator();
  IntRows a = to_int_rows(generators, scale);
  IntRows u = identity_rows(generators.rows());
  const std::size_t r = hnf_in_place(a, u, generators.cols());
  a.resize(r);
  return from_int_rows(a, generators.cols(), scale);
}

RatMatrix integer_left_kernel(const RatMatrix& m) {
  const Int scale = m.common_denominator();
  IntRows a = to_int_rows(m, scale);
  IntRows u = identity_rows(m.rows());
  const std::size_t r = hnf_in_place(a, u, m.cols());
  IntRows ker(u.begin() + static_cast<std::ptrdiff_t>(r), u.end());
  if (!ker.empty()) {
    IntRows dummy = identity_rows(ker.size());
    integral_lll(ker, dummy);
  }
  return from_int_rows(ker, m.rows(), 1);
}

std::optional<RatVector> integer_solve_left(const RatMatrix& m, const RatVector& target) {
  if (target.size() != m.cols()) throw InputError("integer_solve_left: target has wrong length");
  Int scale = m.common_denominator();
  for (const auto& t : target) {
    const Int d = t.den();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
  }
  IntRows a = to_int_rows(m, scale);
  IntRows u = identity_rows(m.rows());
  const std::size_t r = hnf_in_place(a, u, m.cols());
  IntRow t(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) t[j] = (target[j] * Rat(scale)).num();

  IntRow y(r);
  IntRow residual = t;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t p = 0;
    while (a[i][p] == 0) ++p;
    if (mpz_divisible_p(residual[p].get_mpz_t(), a[i][p].get_mpz_t()) == 0) return std::nullopt;
    y[i] = exact_div(residual[p], a[i][p]);
    axpy(residual, a[i], y[i]);
  }
  for (const auto& x : residual) {
    if (x != 0) return std::nullopt;
  }
  RatVector c(m.rows(), Rat(0));
  for (std::size_t i = 0; i < r; ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < m.rows(); ++j) c[j] += Rat(Int(y[i] * u[i][j]));
  }
  return c;
}

LllResult lll_reduce_with_transform(const RatMatrix& basis, const Rat& gram_scale) {
  if (gram_scale.sign() <= 0) throw MathError("gram scale must be positive");
  const Int scale = basis.common_denominator();
  IntRows b = to_int_rows(basis, scale);
  IntRows h = identity_rows(basis.rows());
  integral_lll(b, h);
  return {from_int_rows(b, basis.cols(), scale), from_int_rows(h, basis.rows(), 1)};
}

RatMatrix lll_reduce(const RatMatrix& basis, const Rat& gram_scale) {
  return lll_reduce_with_transform(basis, gram_scale).reduced;
}

LdlDecomposition rational_cholesky(const RatMatrix& gram) {
  if (gram.rows() != gram.cols()) throw InputError("rational_cholesky: non-square matrix");
  const std::size_t n = gram.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram(i, j) != gram(j, i)) throw MathError("rational_cholesky: matrix is not symmetric");
  LdlDecomposition out{RatMatrix::identity(n), RatVector(n)};
  RatMatrix& l = out.lower;
  RatVector& d = out.diagonal;
  for (std::size_t i = 0; i < n; ++i) {
    Rat di = gram(i, i);
    for (std::size_t j = 0; j < i; ++j) di -= l(i, j) * l(i, j) * d[j];
    if (di.sign() <= 0) throw MathError("not positive definite");
    d[i] = di;
    for (std::size_t k = i + 1; k < n; ++k) {
      Rat v = gram(k, i);
      for (std::size_t j = 0; j < i; ++j) v -= l(k, j) * l(i, j) * d[j];
      l(k, i) = v / di;
    }
  }
  return out;
}

}  // namespace antipode
