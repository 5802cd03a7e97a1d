#include "dicat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace dicat {

namespace {

constexpr int kDenseCap = 4096;
constexpr long long kStepCap = 1000000000LL;

// SplitMix64 (Steele, Lea, Flood 2014); one independent stream per walker.
inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

int thread_cap() {
  const char* env = std::getenv("DICAT_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  return v > 0 ? v : 1;
}

std::vector<double> direct_solve_1d(const Stencil& stencil,
                                    const Domain& domain,
                                    const std::vector<double>& source) {
  if (domain.dimension() != 1)
    throw std::invalid_argument("direct_solve_1d needs a 1D domain");
  const int n = domain.node_count();
  // Rows: -w_xm T(i-1) + T(i) - w_xp T(i+1) = src*f; boundary rows T(i) = g.
  std::vector<double> a(n, 0.0), b(n, 1.0), c(n, 0.0), d(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (domain.is_boundary(i)) {
      d[i] = domain.boundary_value(i);
    } else {
      const StencilWeights w = stencil.weights(i);
      a[i] = -w.xm;
      c[i] = -w.xp;
      d[i] = source.empty() ? 0.0 : stencil.source_coef(i) * source[i];
    }
  }
  // Thomas elimination.
  std::vector<double> cp(n, 0.0), dp(n, 0.0);
  double beta = b[0];
  if (std::abs(beta) < 1e-300)
    throw std::runtime_error("direct_solve_1d: singular system");
  cp[0] = c[0] / beta;
  dp[0] = d[0] / beta;
  for (int i = 1; i < n; ++i) {
    beta = b[i] - a[i] * cp[i - 1];
    if (std::abs(beta) < 1e-300)
      throw std::runtime_error("direct_solve_1d: singular system");
    cp[i] = c[i] / beta;
    dp[i] = (d[i] - a[i] * dp[i - 1]) / beta;
  }
  std::vector<double> x(n, 0.0);
  x[n - 1] = dp[n - 1];
  for (int i = n - 2; i >= 0; --i) x[i] = dp[i] - cp[i] * x[i + 1];
  return x;
}

std::vector<double> direct_solve_2d_small(const Domain& domain,
                                          const Stencil& stencil,
                                          const std::vector<double>& source) {
  if (domain.dimension() != 2)
    throw std::invalid_argument("direct_solve_2d_small needs a 2D domain");
  const int count = domain.node_count();
  std::vector<int> unknown_of(count, -1);
  std::vector<int> node_of;
  for (int n = 0; n < count; ++n) {
    if (!domain.is_boundary(n)) {
      unknown_of[n] = static_cast<int>(node_of.size());
      node_of.push_back(n);
    }
  }
  const int m = static_cast<int>(node_of.size());
  if (m > kDenseCap)
    throw std::invalid_argument("direct_solve_2d_small: " + std::to_string(m) +
                                " unknowns exceed the cap of " +
                                std::to_string(kDenseCap));

  const int ny = domain.ny();
  std::vector<double> A(static_cast<size_t>(m) * m, 0.0), rhs(m, 0.0);
  for (int u = 0; u < m; ++u) {
    const int n = node_of[u];
    const int i = n / ny, j = n % ny;
    const StencilWeights w = stencil.weights(n);
    A[static_cast<size_t>(u) * m + u] = 1.0;
    rhs[u] = source.empty() ? 0.0 : stencil.source_coef(n) * source[n];
    const int nbr[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
    const double wt[4] = {w.xm, w.xp, w.ym, w.yp};
    for (int k = 0; k < 4; ++k) {
      if (!domain.contains(nbr[k][0], nbr[k][1])) continue;  // off-grid: zero
      const int nn = domain.index(nbr[k][0], nbr[k][1]);
      if (domain.is_boundary(nn))
        rhs[u] += wt[k] * domain.boundary_value(nn);
      else
        A[static_cast<size_t>(u) * m + unknown_of[nn]] -= wt[k];
    }
  }

  // Gaussian elimination with partial pivoting.
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    double best = std::abs(A[static_cast<size_t>(perm[col]) * m + col]);
    for (int r = col + 1; r < m; ++r) {
      const double v = std::abs(A[static_cast<size_t>(perm[r]) * m + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-300)
      throw std::runtime_error("direct_solve_2d_small: singular system");
    std::swap(perm[col], perm[piv]);
    const size_t prow = static_cast<size_t>(perm[col]) * m;
    const double diag = A[prow + col];
    for (int r = col + 1; r < m; ++r) {
      const size_t row = static_cast<size_t>(perm[r]) * m;
      const double factor = A[row + col] / diag;
      if (factor == 0.0) continue;
      A[row + col] = 0.0;
      for (int k = col + 1; k < m; ++k) A[row + k] -= factor * A[prow + k];
      rhs[perm[r]] -= factor * rhs[perm[col]];
    }
  }
  std::vector<double> xu(m, 0.0);
  for (int r = m - 1; r >= 0; --r) {
    const size_t row = static_cast<size_t>(perm[r]) * m;
    double v = rhs[perm[r]];
    for (int k = r + 1; k < m; ++k) v -= A[row + k] * xu[k];
    xu[r] = v / A[row + r];
  }

  std::vector<double> field(count, 0.0);
  for (int n = 0; n < count; ++n)
    field[n] = domain.is_boundary(n) ? domain.boundary_value(n)
                                     : xu[unknown_of[n]];
  return field;
}

std::vector<double> direct_solve_2d_small(const Domain& domain,
                                          const std::vector<double>& source) {
  return direct_solve_2d_small(domain, Stencil::laplacian_2d(domain), source);
}

std::vector<double> direct_solve(const Domain& domain, const Stencil& stencil,
                                 const std::vector<double>& source) {
  return domain.dimension() == 1
             ? direct_solve_1d(stencil, domain, source)
             : direct_solve_2d_small(domain, stencil, source);
}

namespace {

double walk_one(const Domain& domain, int start_i, int start_j,
                std::uint64_t stream) {
  int i = start_i, j = start_j;
  const bool two_d = domain.dimension() == 2;
  for (long long step = 0; step < kStepCap; ++step) {
    const std::uint64_t r = splitmix64(stream);
    if (two_d) {
      switch (r >> 62) {
        case 0: --i; break;
        case 1: ++i; break;
        case 2: --j; break;
        default: ++j; break;
      }
    } else {
      i += (r >> 63) ? 1 : -1;
    }
    const int n = domain.index(i, j);
    if (domain.is_boundary(n)) return domain.boundary_value(n);
  }
  throw std::runtime_error(
      "monte_carlo_harmonic: walker exceeded the step cap; "
      "domain has no reachable boundary?");
}

}  // namespace

WalkEstimate monte_carlo_harmonic(const Domain& domain, int start_i,
                                  int start_j, int walkers,
                                  std::uint64_t seed) {
  if (!domain.contains(start_i, start_j) ||
      domain.is_boundary(domain.index(start_i, start_j)))
    throw std::invalid_argument("monte_carlo_harmonic: start must be interior");
  if (walkers < 1)
    throw std::invalid_argument("monte_carlo_harmonic: walkers must be >= 1");

  std::vector<double> hits(walkers, 0.0);
  auto run_range = [&](int lo, int hi) {
    for (int k = lo; k < hi; ++k) {
      // Stream k: decorrelated SplitMix64 start, independent of threading.
      std::uint64_t stream =
          seed + static_cast<std::uint64_t>(k) * 0x9E3779B97F4A7C15ULL;
      hits[k] = walk_one(domain, start_i, start_j, stream);
    }
  };

  const int threads = std::min(thread_cap(), walkers);
  if (threads <= 1) {
    run_range(0, walkers);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (walkers + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int lo = t * chunk;
      const int hi = std::min(walkers, lo + chunk);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  // Sequential reduction in walker order keeps the result thread-invariant.
  double sum = 0.0;
  for (double v : hits) sum += v;
  const double mean = sum / walkers;
  double ss = 0.0;
  for (double v : hits) ss += (v - mean) * (v - mean);
  const double stddev = walkers > 1 ? std::sqrt(ss / (walkers - 1)) : 0.0;

  WalkEstimate est;
  est.mean = mean;
  est.standard_error = stddev / std::sqrt(static_cast<double>(walkers));
  est.walkers = walkers;
  est.seed = seed;
  return est;
}

}  // namespace dicat
