#include "sasakit/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "sasakit/errors.hpp"

namespace sasakit {

// ---- vectors -------------------------------------------------------------

IntVector make_int_vector(std::initializer_list<long long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long long x : values) v.emplace_back(x);
  return v;
}

RatVector to_rational(const IntVector& v) {
  return RatVector(v.begin(), v.end());
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector cross(const IntVector& a, const IntVector& b) {
  if (a.size() != 3 || b.size() != 3) throw PreconditionError("cross: rank 3 vectors required");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  return g;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// ---- IntMatrix -----------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("IntMatrix: ragged initializer");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
  if (columns.empty()) return {};
  IntMatrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows()) throw PreconditionError("from_columns: ragged columns");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw PreconditionError("IntMatrix * vector: size mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RatVector IntMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw PreconditionError("IntMatrix * vector: size mismatch");
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += v[j] * (*this)(i, j);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("IntMatrix product: size mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---- Smith normal form ---------------------------------------------------

std::vector<Integer> SnfDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& x : diagonal())
    if (x != 0) ++r;
  return r;
}

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = Pivot{i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  if (m.empty()) throw PreconditionError("smith_normal_form: empty matrix");
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = smallest_entry(a, t);
      if (!pivot) return {std::move(u), std::move(a), std::move(v)};
      a.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      a.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool clear = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clear = false;
      }
      if (!clear) continue;

      // Divisibility: fold an offending row into the pivot row and repeat.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < a.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            offending = i;
            break;
          }
      if (offending) {
        a.add_row_multiple(t, *offending, 1);
        u.add_row_multiple(t, *offending, 1);
        continue;
      }
      break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

CokernelInfo cokernel(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  CokernelInfo info;
  std::size_t nonzero = 0;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) info.torsion.push_back(d);
  }
  info.free_rank = m.rows() - nonzero;
  return info;
}

bool is_primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw PreconditionError("is_primitive: zero vector");
  return g == 1;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant: square matrix required");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix complete_to_unimodular(const IntVector& v) {
  if (!is_primitive(v)) throw PreconditionError("complete_to_unimodular: vector " + to_string(v) + " is not primitive");
  const std::size_t n = v.size();
  auto snf = smith_normal_form(IntMatrix::from_columns({v}));
  IntMatrix a = std::move(snf.U);
  IntVector image = a * v;
  if (image[0] == 1) a.negate_row(0);
  if (determinant(a) < 0) {
    if (n == 1) throw PreconditionError("complete_to_unimodular: no element of SL(1,Z) sends (1) to (-1)");
    a.negate_row(1);
  }
  return a;
}

bool sublattice_saturation_equal(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) throw PreconditionError("sublattice_saturation_equal: no vectors");
  auto snf = smith_normal_form(IntMatrix::from_columns(vectors));
  auto diag = snf.diagonal();
  if (vectors.size() > vectors.front().size()) return false;
  return std::all_of(diag.begin(), diag.end(), [](const Integer& d) { return d == 1; });
}

// ---- exact rational elimination ------------------------------------------

namespace {

using RatMatrix = std::vector<RatVector>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RatMatrix to_rat_matrix(const IntMatrix& m) {
  RatMatrix a(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  auto a = to_rat_matrix(m);
  return rref(a, m.cols()).size();
}

std::optional<RatVector> solve_exact(const std::vector<RatVector>& rows, const RatVector& rhs) {
  if (rows.size() != rhs.size() || rows.empty()) throw PreconditionError("solve_exact: shape mismatch");
  const std::size_t n = rows.front().size();
  RatMatrix a;
  a.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw PreconditionError("solve_exact: ragged rows");
    RatVector r = rows[i];
    r.push_back(rhs[i]);
    a.push_back(std::move(r));
  }
  auto pivots = rref(a, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  if (pivots.size() < n) throw PreconditionError("solve_exact: system is underdetermined");
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
  return x;
}

std::vector<RatVector> null_space(const IntMatrix& m) {
  auto a = to_rat_matrix(m);
  auto pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector b(m.cols());
    b[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) b[pivots[i]] = -a[i][f];
    basis.push_back(std::move(b));
  }
  return basis;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw PreconditionError("unimodular_inverse: square matrix required");
  RatMatrix a = to_rat_matrix(m);
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n);
    a[i][n + i] = 1;
  }
  auto pivots = rref(a, n);
  if (pivots.size() != n) throw PreconditionError("unimodular_inverse: singular matrix");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a[i][n + j];
      if (denominator(x) != 1) throw PreconditionError("unimodular_inverse: matrix is not unimodular");
      inv(i, j) = numerator(x);
    }
  return inv;
}

Integer lcm_of_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  return l;
}

}  // namespace sasakit
