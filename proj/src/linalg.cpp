#include "k3/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace k3::linalg {

namespace {

template <typename T>
T bareiss(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T sign = 1;
  T previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return T(0);
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        if constexpr (std::is_same_v<T, Integer>) {
          mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
          m(i, j) = std::move(value);
        } else {
          m(i, j) = value / previous;
        }
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Floor division for the Euclidean step; remainder has the sign of the divisor.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Integer determinant(const IntMatrix& m) { return bareiss(m); }

Rational determinant(const RatMatrix& m) { return bareiss(m); }

std::size_t rank(const IntMatrix& m) {
  RatMatrix a = to_rational(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(r, pivot);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = -a(i, c) / a(r, c);
      a.add_row_multiple(i, r, f);
    }
    ++r;
  }
  return r;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (a(i, j) != 0 && (pr == rows || abs_value(a(i, j)) < abs_value(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;  // trailing block is zero
      a.swap_rows(k, pr);
      u.swap_rows(k, pr);
      a.swap_cols(k, pc);
      v.swap_cols(k, pc);

      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a(i, k) == 0) continue;
        Integer q = floor_div(a(i, k), a(k, k));
        a.add_row_multiple(i, k, -q);
        u.add_row_multiple(i, k, -q);
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a(k, j) == 0) continue;
        Integer q = floor_div(a(k, j), a(k, k));
        a.add_col_multiple(j, k, -q);
        v.add_col_multiple(j, k, -q);
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_k | every entry of the trailing block.
      std::size_t bad_row = rows;
      for (std::size_t i = k + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a(i, j) % a(k, k) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      a.add_row_multiple(k, bad_row, Integer(1));
      u.add_row_multiple(k, bad_row, Integer(1));
    }
    if (a(k, k) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(k, j) = -a(k, j);
      for (std::size_t j = 0; j < rows; ++j) u(k, j) = -u(k, j);
    }
  }

  SmithForm out{std::move(u), std::move(v), {}};
  out.diagonal.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) out.diagonal.push_back(a(k, k));
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return IntMatrix::identity(n);
  SmithForm snf = smith_normal_form(a);
  std::size_t r = 0;
  while (r < snf.diagonal.size() && snf.diagonal[r] != 0) ++r;
  // A V = U^{-1} D, so the columns of V past the rank span the kernel.
  IntMatrix kernel(n - r, n);
  for (std::size_t k = r; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) kernel(k - r, i) = snf.right(i, k);
  return kernel;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = to_rational(m);
  RatMatrix inv = to_rational(IntMatrix::identity(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("singular matrix has no inverse");
    a.swap_rows(c, pivot);
    inv.swap_rows(c, pivot);
    Rational scale = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = -a(i, c);
      a.add_row_multiple(i, c, f);
      inv.add_row_multiple(i, c, f);
    }
  }
  auto out = to_integer(inv);
  if (!out) throw std::invalid_argument("matrix is not unimodular");
  return *out;
}

std::optional<RatMatrix> express_in_basis(const RatMatrix& targets, const RatMatrix& basis) {
  // Solve basis^T * x = target^T for each target by Gauss-Jordan on the
  // augmented system [basis^T | targets^T].
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  const std::size_t t = targets.rows();
  if (targets.cols() != n) throw std::invalid_argument("dimension mismatch in express_in_basis");
  RatMatrix aug(n, k + t);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis(j, i);
    for (std::size_t j = 0; j < t; ++j) aug(i, k + j) = targets(j, i);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) continue;
    aug.swap_rows(r, p);
    Rational scale = 1 / aug(r, c);
    for (std::size_t j = 0; j < k + t; ++j) aug(r, j) *= scale;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      Rational f = -aug(i, c);
      aug.add_row_multiple(i, r, f);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (pivot_cols.size() != k) throw std::invalid_argument("basis rows are linearly dependent");
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < t; ++j)
      if (aug(i, k + j) != 0) return std::nullopt;
  RatMatrix coeffs(t, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < t; ++j) coeffs(j, pivot_cols[i]) = aug(i, k + j);
  return coeffs;
}

std::vector<Integer> characteristic_polynomial(const IntMatrix& a) {
  // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
  // The divisions by k are exact over the integers.
  if (!a.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> coeffs(n + 1);
  coeffs[n] = 1;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = a * m;
    Integer tr = am.trace();
    Integer c = -tr;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    coeffs[n - k] = c;
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c;
  }
  return coeffs;
}

}  // namespace k3::linalg
