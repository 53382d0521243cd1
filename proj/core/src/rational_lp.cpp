#include "sasakit/rational_lp.hpp"

#include "sasakit/errors.hpp"

namespace sasakit {

std::optional<RatVector> find_nonnegative_solution(const std::vector<RatVector>& rows, const RatVector& b) {
  const std::size_t m = rows.size();
  if (m != b.size()) throw PreconditionError("find_nonnegative_solution: shape mismatch");
  if (m == 0) return RatVector{};
  const std::size_t n = rows.front().size();
  const std::size_t width = n + m + 1;  // originals, artificials, rhs

  std::vector<RatVector> t(m, RatVector(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) throw PreconditionError("find_nonnegative_solution: ragged rows");
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -rows[i][j] : rows[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = flip ? -b[i] : b[i];
    basis[i] = n + i;
  }

  // Reduced costs of the phase-one objective sum(artificials).
  RatVector cost(width);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) cost[width - 1] -= t[i][width - 1];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leave == m) throw Error("find_nonnegative_solution: unbounded phase-one problem");

    Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (cost[width - 1] != 0) return std::nullopt;  // optimum -sum(artificials) < 0
  RatVector x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  return x;
}

bool in_cone(const std::vector<IntVector>& generators, const IntVector& target) {
  const std::size_t dim = target.size();
  if (generators.empty()) {
    for (const auto& x : target)
      if (x != 0) return false;
    return true;
  }
  std::vector<RatVector> rows(dim, RatVector(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) rows[i][j] = generators[j][i];
  return find_nonnegative_solution(rows, to_rational(target)).has_value();
}

bool in_open_cone(const std::vector<IntVector>& generators, const RatVector& target) {
  // target * t == sum (1 + nu_i) g_i with nu >= 0, t >= 0. For a pointed cone
  // t == 0 is impossible, and t > 0 rescales to strictly positive weights.
  const std::size_t dim = target.size();
  const std::size_t k = generators.size();
  std::vector<RatVector> rows(dim, RatVector(k + 1));
  RatVector rhs(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      rows[i][j] = generators[j][i];
      rhs[i] -= generators[j][i];
    }
    rows[i][k] = -target[i];
  }
  auto sol = find_nonnegative_solution(rows, rhs);
  return sol && (*sol)[k] > 0;
}

}  // namespace sasakit
