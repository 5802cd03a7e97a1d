#pragma once

#include <cstdint>
#include <vector>

#include "dicat/grid.hpp"
#include "dicat/stencil.hpp"

namespace dicat {

/**
 * Exact solution of the 1D fixed-point system
 *   T(i) = w_xm(i) T(i-1) + w_xp(i) T(i+1) + src(i) * f(i)
 * with T = g at boundary nodes, by tridiagonal elimination.
 */
std::vector<double> direct_solve_1d(const Stencil& stencil,
                                    const Domain& domain,
                                    const std::vector<double>& source = {});

/**
 * Dense elimination solution of the 2D system; refuses more than 4096
 * unknowns (this is a small-instance oracle, not a solver).
 */
std::vector<double> direct_solve_2d_small(const Domain& domain,
                                          const Stencil& stencil,
                                          const std::vector<double>& source = {});
std::vector<double> direct_solve_2d_small(const Domain& domain,
                                          const std::vector<double>& source = {});

/// Dispatches on domain dimension.
std::vector<double> direct_solve(const Domain& domain, const Stencil& stencil,
                                 const std::vector<double>& source = {});

/// Result of a random-walk estimate of a harmonic value.
struct WalkEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  int walkers = 0;
  std::uint64_t seed = 0;
};

/**
 * Uniform nearest-neighbor walk from (start_i, start_j) to the first
 * Boundary node; estimates E[g(hit)] for the f = 0 problem. Deterministic
 * for a given seed: walker k draws from its own SplitMix64 stream, so the
 * result does not depend on the thread count (DICAT_THREADS).
 */
WalkEstimate monte_carlo_harmonic(const Domain& domain, int start_i,
                                  int start_j, int walkers,
                                  std::uint64_t seed);

/// Parallelism cap from DICAT_THREADS (default 1).
int thread_cap();

}  // namespace dicat
