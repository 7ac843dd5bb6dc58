#include "walkinv/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "walkinv/error.hpp"

namespace walkinv {

namespace {

void require_square(const RationalMatrix& mat, const char* op) {
  if (!mat.is_square()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + " needs a square matrix, got " +
                                                  std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()));
  }
}

/// Bareiss elimination in place on an n x n integer matrix (row-major).
Integer bareiss_det(std::vector<Integer>& a, std::size_t n) {
  if (n == 0) return 1;
  Integer previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(a[k * n + c], a[swap_row * n + c]);
      negate = !negate;
    }
    const Integer& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer& lead = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& cell = a[i * n + j];
        cell = cell * pivot - lead * a[k * n + j];
        mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = pivot;
  }
  Integer result = a[n * n - 1];
  if (negate) result = -result;
  return result;
}

}  // namespace

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  values_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    values_.insert(values_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<Rational> RationalMatrix::operator*(std::span<const Rational> vec) const {
  if (cols_ != vec.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * vec[j];
  return out;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> ascending) : coefficients_(std::move(ascending)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational(0);
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational BivariatePoly::coefficient(std::size_t i, std::size_t j) const {
  if (i > du_ || j > dv_) return 0;
  return values_[i * (dv_ + 1) + j];
}

Rational BivariatePoly::evaluate(const Rational& u, const Rational& v) const {
  return restrict_v(v).evaluate(u);
}

Polynomial BivariatePoly::restrict_v(const Rational& v0) const {
  std::vector<Rational> in_u(du_ + 1);
  for (std::size_t i = 0; i <= du_; ++i) {
    Rational acc = 0;
    for (std::size_t j = dv_ + 1; j-- > 0;) acc = acc * v0 + coefficient(i, j);
    in_u[i] = acc;
  }
  return Polynomial(std::move(in_u));
}

Polynomial BivariatePoly::restrict_u(const Rational& u0) const {
  std::vector<Rational> in_v(dv_ + 1);
  for (std::size_t j = 0; j <= dv_; ++j) {
    Rational acc = 0;
    for (std::size_t i = du_ + 1; i-- > 0;) acc = acc * u0 + coefficient(i, j);
    in_v[j] = acc;
  }
  return Polynomial(std::move(in_v));
}

// ---------------------------------------------------------------------------

RationalMatrix adjacency_matrix(const Graph& g) {
  RationalMatrix a(g.order(), g.order());
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
  return a;
}

RationalMatrix degree_matrix(const Graph& g) {
  RationalMatrix d(g.order(), g.order());
  for (Vertex v = 0; v < g.order(); ++v) d(v, v) = static_cast<unsigned long>(g.degree(v));
  return d;
}

RationalMatrix laplacian(const Graph& g) {
  RationalMatrix l(g.order(), g.order());
  for (Vertex v = 0; v < g.order(); ++v) l(v, v) = static_cast<unsigned long>(g.degree(v));
  for (const Edge& e : g.edges()) l(e.u, e.v) = l(e.v, e.u) = -1;
  return l;
}

RationalMatrix transition(const Graph& g) {
  RationalMatrix m(g.order(), g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const Rational step(1, static_cast<unsigned long>(g.degree(v)));
    for (Vertex w : g.neighbors(v)) m(v, w) = step;
  }
  return m;
}

RationalMatrix n_matrix(const Graph& g) {
  RationalMatrix n = transition(g);
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j) n(i, j) = (i == j ? Rational(1) : Rational(0)) - n(i, j);
  return n;
}

RationalMatrix delete_rc(const RationalMatrix& mat, std::span<const std::size_t> indices) {
  require_square(mat, "delete_rc");
  std::vector<char> drop(mat.rows(), 0);
  for (std::size_t idx : indices) {
    if (idx >= mat.rows()) {
      throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(idx) + " in dimension " +
                                                  std::to_string(mat.rows()));
    }
    drop[idx] = 1;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < mat.rows(); ++i)
    if (!drop[i]) keep.push_back(i);
  if (keep.empty()) throw Error(ErrorCode::IndexOutOfRange, "cannot delete every row");
  RationalMatrix out(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = mat(keep[i], keep[j]);
  return out;
}

RationalMatrix delete_rc(const RationalMatrix& mat, std::initializer_list<std::size_t> indices) {
  return delete_rc(mat, std::span<const std::size_t>(indices.begin(), indices.size()));
}

Rational det(const RationalMatrix& mat) {
  require_square(mat, "det");
  const std::size_t n = mat.rows();
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (const Rational& x : mat.row(i)) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = mat(i, j);
      a[i * n + j] = x.get_num() * (row_lcm / x.get_den());
    }
    scale *= row_lcm;
  }
  Rational result(bareiss_det(a, n), scale);
  result.canonicalize();
  return result;
}

std::vector<Rational> solve(const RationalMatrix& mat, std::span<const Rational> rhs) {
  require_square(mat, "solve");
  const std::size_t n = mat.rows();
  if (rhs.size() != n) throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side length");
  // Augmented Gaussian elimination over Q.
  std::vector<Rational> a(n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * (n + 1) + j] = mat(i, j);
    a[i * (n + 1) + n] = rhs[i];
  }
  const std::size_t w = n + 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && a[pivot_row * w + k] == 0) ++pivot_row;
    if (pivot_row == n) throw Error(ErrorCode::SingularMatrix, "no pivot in column " + std::to_string(k));
    if (pivot_row != k)
      for (std::size_t c = k; c < w; ++c) std::swap(a[k * w + c], a[pivot_row * w + c]);
    const Rational inv_pivot = 1 / a[k * w + k];
    for (std::size_t c = k; c < w; ++c) a[k * w + c] *= inv_pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational factor = a[i * w + k];
      if (factor == 0) continue;
      for (std::size_t c = k; c < w; ++c) a[i * w + c] -= factor * a[k * w + c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = a[i * w + n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i * w + j] * x[j];
    x[i] = acc;
  }
  return x;
}

RationalMatrix inverse(const RationalMatrix& mat) {
  require_square(mat, "inverse");
  const std::size_t n = mat.rows();
  RationalMatrix a = mat;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && a(pivot_row, k) == 0) ++pivot_row;
    if (pivot_row == n) throw Error(ErrorCode::SingularMatrix, "no pivot in column " + std::to_string(k));
    if (pivot_row != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(k, c), a(pivot_row, c));
        std::swap(inv(k, c), inv(pivot_row, c));
      }
    }
    const Rational inv_pivot = 1 / a(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      a(k, c) *= inv_pivot;
      inv(k, c) *= inv_pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Rational factor = a(i, k);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a(i, c) -= factor * a(k, c);
        inv(i, c) -= factor * inv(k, c);
      }
    }
  }
  return inv;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw Error(ErrorCode::DimensionMismatch, "interpolate: point count");
  const std::size_t n = xs.size();
  if (n == 0) return Polynomial();
  // Newton divided differences, then Horner expansion into the monomial basis.
  std::vector<Rational> newton(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      const Rational gap = xs[i] - xs[i - j];
      if (gap == 0) throw Error(ErrorCode::SingularMatrix, "interpolate: repeated abscissa");
      newton[i] = (newton[i] - newton[i - 1]) / gap;
    }
  }
  std::vector<Rational> coeffs{newton[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // coeffs <- coeffs * (t - xs[i]) + newton[i]
    coeffs.push_back(0);
    for (std::size_t k = coeffs.size() - 1; k > 0; --k) coeffs[k] = coeffs[k - 1] - xs[i] * coeffs[k];
    coeffs[0] = newton[i] - xs[i] * coeffs[0];
  }
  return Polynomial(std::move(coeffs));
}

Polynomial charpoly(const RationalMatrix& mat) {
  require_square(mat, "charpoly");
  const std::size_t n = mat.rows();
  std::vector<Rational> ts(n + 1);
  std::vector<Rational> values(n + 1);
  RationalMatrix shifted(n, n);
  for (std::size_t k = 0; k <= n; ++k) {
    ts[k] = static_cast<unsigned long>(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (i == j ? ts[k] : Rational(0)) - mat(i, j);
    values[k] = det(shifted);
  }
  return interpolate(ts, values);
}

BivariatePoly bivariate_det(const Graph& g) {
  const std::size_t n = g.order();
  const RationalMatrix lap = laplacian(g);
  std::vector<Rational> grid(n + 1);
  for (std::size_t k = 0; k <= n; ++k) grid[k] = static_cast<unsigned long>(k);

  // by_v[j] holds P(u, v_j) as a polynomial in u.
  std::vector<Polynomial> by_v;
  by_v.reserve(n + 1);
  RationalMatrix m(n, n);
  std::vector<Rational> values(n + 1);
  for (std::size_t vj = 0; vj <= n; ++vj) {
    for (std::size_t ui = 0; ui <= n; ++ui) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          Rational entry = -lap(r, c);
          if (r == c) entry += grid[ui] + grid[vj] * static_cast<unsigned long>(g.degree(r));
          m(r, c) = std::move(entry);
        }
      values[ui] = det(m);
    }
    by_v.push_back(interpolate(grid, values));
  }

  BivariatePoly p(n, n);
  std::vector<Rational> column(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t vj = 0; vj <= n; ++vj) column[vj] = by_v[vj].coefficient(i);
    const Polynomial in_v = interpolate(grid, column);
    for (std::size_t j = 0; j <= n; ++j) p.at(i, j) = in_v.coefficient(j);
  }
  return p;
}

}  // namespace walkinv
