#pragma once

#include "matrix.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace lie2 {

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a span that must sit inside another does not, which upstream
// means D∘D ≠ 0.
class BrokenComplex : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct RowReduced {
  Matrix rref;                       // reduced row echelon form, rank rows kept
  std::vector<std::size_t> pivots;   // pivot column of each kept row
};

namespace detail {

// Fraction-free elimination on an integer copy. Rows are cleared of
// denominators first, which does not change the row space.
inline std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<mpz_class>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  mpz_class prev = 1;
  const std::size_t rows = a.size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

inline std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return a;
}

}  // namespace detail

inline RowReduced row_reduce(const Matrix& m) {
  auto a = detail::integer_rows(m);
  auto pivots = detail::bareiss_echelon(a, m.cols());
  const std::size_t r = pivots.size();
  Matrix e(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& lead = a[i][pivots[i]];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      e(i, c) = Rational(a[i][c], lead);
      e(i, c).canonicalize();
    }
  }
  for (std::size_t k = r; k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      Rational f = e(i, pivots[k]);
      if (is_zero(f)) continue;
      for (std::size_t c = pivots[k]; c < m.cols(); ++c)
        if (!is_zero(e(k, c))) e(i, c) -= f * e(k, c);
    }
  }
  return {std::move(e), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) {
  auto a = detail::integer_rows(m);
  return detail::bareiss_echelon(a, m.cols()).size();
}

inline std::vector<Vector> kernel_basis(const Matrix& m) {
  RowReduced rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zeros<Rational>(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw DimensionMismatch("solve: right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                            std::to_string(m.rows()) + " rows");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowReduced rr = row_reduce(aug);
  Vector x = zeros<Rational>(m.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;
    x[rr.pivots[i]] = rr.rref(i, m.cols());
  }
  return x;
}

inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(0, 0);
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowReduced rr = row_reduce(aug);
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.rref(r, n + c);
  return inv;
}

inline std::size_t span_dim(const std::vector<Vector>& gens, std::size_t ambient) {
  if (gens.empty()) return 0;
  return rank(Matrix::from_columns(ambient, gens).transpose());
}

inline std::size_t quotient_dim(const std::vector<Vector>& ker_gens, const std::vector<Vector>& im_gens) {
  if (ker_gens.empty() && im_gens.empty()) return 0;
  const std::size_t ambient = ker_gens.empty() ? im_gens.front().size() : ker_gens.front().size();
  const std::size_t k = span_dim(ker_gens, ambient);
  const std::size_t i = span_dim(im_gens, ambient);
  std::vector<Vector> both = ker_gens;
  both.insert(both.end(), im_gens.begin(), im_gens.end());
  if (span_dim(both, ambient) != k)
    throw BrokenComplex("image is not contained in kernel");
  return k - i;
}

}  // namespace lie2
