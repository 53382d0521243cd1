#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sasakit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

IntVector make_int_vector(std::initializer_list<long long> values);
RatVector to_rational(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);

// Cross product in Z^3.
IntVector cross(const IntVector& a, const IntVector& b);

// gcd of the absolute values of the entries; 0 for the zero vector.
Integer content(const IntVector& v);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

/// Dense integer matrix, row-major, arbitrary precision.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  // Matrix whose j-th column is columns[j].
  static IntMatrix from_columns(const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;

  IntMatrix transpose() const;
  IntVector operator*(const IntVector& v) const;
  RatVector operator*(const RatVector& v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  bool is_diagonal() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::string to_string(const IntMatrix& m);

}  // namespace sasakit
