#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "walkinv/graph.hpp"
#include "walkinv/rational.hpp"

namespace walkinv {

/// Dense row-major matrix over exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), values_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {values_.data() + r * cols_, cols_}; }

  bool is_symmetric() const;

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  std::vector<Rational> operator*(std::span<const Rational> vec) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> values_;
};

/// Univariate polynomial with exact coefficients in ascending degree order;
/// trailing zeros are trimmed so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  Rational coefficient(std::size_t power) const;
  Rational evaluate(const Rational& t) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coefficients_;
};

/// Exact polynomial in (u, v); coefficient(i, j) multiplies u^i v^j.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  BivariatePoly(std::size_t max_degree_u, std::size_t max_degree_v)
      : du_(max_degree_u), dv_(max_degree_v), values_((du_ + 1) * (dv_ + 1)) {}

  std::size_t max_degree_u() const noexcept { return du_; }
  std::size_t max_degree_v() const noexcept { return dv_; }

  Rational coefficient(std::size_t i, std::size_t j) const;
  Rational& at(std::size_t i, std::size_t j) { return values_[i * (dv_ + 1) + j]; }

  Rational evaluate(const Rational& u, const Rational& v) const;
  /// Coefficients of P(u, v0) in u, or of P(u0, v) in v.
  Polynomial restrict_v(const Rational& v0) const;
  Polynomial restrict_u(const Rational& u0) const;

 private:
  std::size_t du_ = 0;
  std::size_t dv_ = 0;
  std::vector<Rational> values_;
};

// Graph matrices.
RationalMatrix adjacency_matrix(const Graph& g);
RationalMatrix degree_matrix(const Graph& g);
RationalMatrix laplacian(const Graph& g);   // L = D - A
RationalMatrix transition(const Graph& g);  // M = D^-1 A
RationalMatrix n_matrix(const Graph& g);    // N = I - M

/// Removes the rows and columns listed in indices (duplicates ignored).
RationalMatrix delete_rc(const RationalMatrix& mat, std::span<const std::size_t> indices);
RationalMatrix delete_rc(const RationalMatrix& mat, std::initializer_list<std::size_t> indices);

/// Determinant by fraction-free (Bareiss) elimination after clearing row
/// denominators. The 0x0 determinant is 1.
Rational det(const RationalMatrix& mat);

/// Unique solution of mat * x = rhs; throws SingularMatrix.
std::vector<Rational> solve(const RationalMatrix& mat, std::span<const Rational> rhs);

/// Inverse by Gauss-Jordan; throws SingularMatrix.
RationalMatrix inverse(const RationalMatrix& mat);

/// Polynomial through the points (xs[i], ys[i]); xs must be distinct.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// det(tI - mat), monic of degree dim, from dim + 1 exact determinant
/// evaluations at t = 0..dim and interpolation.
Polynomial charpoly(const RationalMatrix& mat);

/// P(u, v) = det(uI + vD - L) by exact evaluation on the grid
/// u, v in {0..n} and tensor-product interpolation.
BivariatePoly bivariate_det(const Graph& g);

}  // namespace walkinv
