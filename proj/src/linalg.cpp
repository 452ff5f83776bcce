#include "rbd/linalg.hpp"

#include <algorithm>

namespace rbd {

IntVector SnfResult::invariant_factors() const {
  IntVector out;
  const std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// Row i += k * row j, applied to both A and the row transform U.
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const Integer& k) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += k * a(j, c);
}

void add_col(IntMatrix& a, std::size_t i, std::size_t j, const Integer& k) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += k * a(r, j);
}

// Smallest nonzero |entry| in the trailing block, ties to lowest row then column.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer m = abs(a(i, j));
      if (!found || m < best) {
        found = true;
        best = m;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(a, t, pr, pc)) break;
    for (;;) {
      a.swap_rows(t, pr);
      u.swap_rows(t, pr);
      a.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row(a, i, t, -q);
        add_row(u, i, t, -q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col(a, j, t, -q);
        add_col(v, j, t, -q);
        if (a(t, j) != 0) dirty = true;
      }
      if (!dirty) {
        // Enforce divisibility of the remaining block by the pivot.
        std::size_t bad = m;
        for (std::size_t i = t + 1; i < m && bad == m; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
              bad = i;
              break;
            }
        if (bad == m) break;
        add_row(a, t, bad, Integer(1));
        add_row(u, t, bad, Integer(1));
      }
      // Re-select among row t and column t plus the trailing block.
      find_pivot(a, t, pr, pc);
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < m; ++c) u(t, c) = -u(t, c);
    }
  }
  return SnfResult{std::move(a), std::move(u), std::move(v)};
}

Integer determinant(const IntMatrix& input) {
  if (!input.square()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return Integer(0);
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer x = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& input) {
  RatMatrix a = to_rational(input);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix invert(const IntMatrix& input) {
  if (!input.square()) throw Error(Errc::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = input.rows();
  RatMatrix a = to_rational(input);
  RatMatrix inv = to_rational(IntMatrix::identity(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw Error(Errc::SingularMatrix, "matrix has determinant zero");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool is_negative_definite(const IntMatrix& a) {
  if (!a.symmetric()) throw Error(Errc::NotSymmetric, "definiteness needs a symmetric matrix");
  // (-1)^k * minor_k > 0, via Bareiss: the k-th pivot equals the k-th leading minor.
  const std::size_t n = a.rows();
  IntMatrix w = a;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& minor = w(k, k);
    const int want = (k % 2 == 0) ? -1 : 1;
    if (sgn(minor) != want) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer x = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        mpz_divexact(w(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    prev = w(k, k);
  }
  return true;
}

std::optional<IntVector> kernel_primitive(const IntMatrix& a) {
  const SnfResult snf = smith_normal_form(a);
  std::size_t r = 0;
  while (r < std::min(a.rows(), a.cols()) && snf.d(r, r) != 0) ++r;
  const std::size_t nullity = a.cols() - r;
  if (nullity == 0) return std::nullopt;
  if (nullity > 1)
    throw Error(Errc::KernelRankTooHigh, "kernel has rank " + std::to_string(nullity));
  IntVector k = snf.v.col(r);
  const Integer g = gcd_of(k);
  for (auto& x : k) x /= g;
  for (std::size_t i = k.size(); i-- > 0;) {
    if (k[i] == 0) continue;
    if (k[i] < 0)
      for (auto& x : k) x = -x;
    break;
  }
  return k;
}

std::optional<IntVector> solve_integer(const SnfResult& snf, const IntVector& b) {
  const IntVector ub = snf.u * b;
  const std::size_t n = snf.v.rows();
  IntVector y(n);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    const Integer di = i < n ? snf.d(i, i) : Integer(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(ub[i].get_mpz_t(), di.get_mpz_t())) return std::nullopt;
    y[i] = ub[i] / di;
  }
  return snf.v * y;
}

}  // namespace rbd
