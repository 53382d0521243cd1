#include "support/random.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "sasakit/lattice.hpp"
#include "sasakit/reeb_volume.hpp"

namespace sasakit::testing {

std::uint64_t test_seed() {
  if (const char* env = std::getenv("SASAKIT_SEED")) return std::stoull(env);
  return 20070905;
}

std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(test_seed() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform_int(rng, -bound, bound);
  return m;
}

IntMatrix random_sl(std::mt19937_64& rng, std::size_t n, int steps, long long bound) {
  IntMatrix a = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = uniform_int(rng, 0, n - 1);
    std::size_t j = uniform_int(rng, 0, n - 2);
    if (j >= i) ++j;
    long long f = uniform_int(rng, -bound, bound);
    a.add_row_multiple(i, j, f);
    if (uniform_int(rng, 0, 3) == 0) {
      // A signed swap keeps the determinant.
      a.swap_rows(i, j);
      a.negate_row(i);
    }
  }
  return a;
}

IntMatrix random_height1_stabilizer(std::mt19937_64& rng) {
  IntMatrix m = random_sl(rng, 2, 6, 2);
  IntMatrix b(3, 3);
  b(0, 0) = 1;
  b(1, 0) = uniform_int(rng, -5, 5);
  b(2, 0) = uniform_int(rng, -5, 5);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i + 1, j + 1) = m(i, j);
  return b;
}

namespace {

long long cross(const std::pair<long long, long long>& o, const std::pair<long long, long long>& a,
                const std::pair<long long, long long>& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Monotone chain; collinear points are dropped.
std::vector<std::pair<long long, long long>> hull(std::vector<std::pair<long long, long long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<std::pair<long long, long long>> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

std::vector<LatticePoint2> random_lattice_polygon(std::mt19937_64& rng, long long bound, std::size_t min_vertices,
                                                  std::size_t max_vertices) {
  for (;;) {
    std::size_t count = uniform_int(rng, min_vertices, max_vertices + 2);
    std::vector<std::pair<long long, long long>> pts;
    for (std::size_t i = 0; i < count; ++i) pts.emplace_back(uniform_int(rng, -bound, bound), uniform_int(rng, -bound, bound));
    auto h = hull(pts);
    if (h.size() < min_vertices || h.size() > max_vertices) continue;
    std::vector<LatticePoint2> out;
    for (const auto& [p, q] : h) out.push_back({p, q});
    return out;
  }
}

Eigen::VectorXd random_positive_combination(std::mt19937_64& rng, const std::vector<IntVector>& generators) {
  std::uniform_real_distribution<double> mu(0.1, 1.0);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(generators.front().size());
  for (const auto& g : generators) v += mu(rng) * to_eigen(g);
  return v;
}

}  // namespace sasakit::testing
