#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ltu {

/// Exact rational number. GMP keeps results of arithmetic in lowest terms with
/// a positive denominator; values parsed from text are canonicalized on entry.
using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Parses "p/q", "-p/q" or an integer "p". Throws Error(ParseError) on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

/// Display-only decimal rendering, rounded half away from zero to `digits`
/// fractional digits.
std::string to_decimal(const Rational& r, int digits);

Rational sum(const Vec& v);
Rational dot(const Vec& a, const Vec& b);

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Vec row_sums() const;
  Vec col_sums() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Solves the square system `a * x = b` exactly. Returns false (leaving `x`
/// untouched) when `a` is singular.
bool solve_square(Matrix a, Vec b, Vec& x);

}  // namespace ltu
