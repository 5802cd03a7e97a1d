#pragma once

#include <vector>

#include "dicat/errors.hpp"
#include "dicat/grid.hpp"
#include "dicat/stencil.hpp"

namespace dicat {

/**
 * One diffusion step at node (i, j).
 *
 * Interior node, or catalyst that has not diffused yet: move the node's
 * pending fluid (for a fresh catalyst, its initial fluid) into H and push
 * weighted shares to the four (two in 1D) neighbors. Shares leaving the grid
 * go to state.absorbed. Absorbing catalyst: delete the pending fluid into
 * state.absorbed, H untouched.
 */
void diffuse_node(FluidState& state, const Domain& domain, int i, int j,
                  const Stencil& stencil, CatalystPolicy& policy);

struct DiffusionSchedule {
  enum class Order { RowMajor, LargestFirst };
  Order order = Order::RowMajor;
  double skip_epsilon = 1e-300;  // visit a node unless |F| is below this
  long max_sweeps = 0;           // 0 = no cap
  int trace_stride = 64;         // sample every sweep up to 64, then every 64th
};

/**
 * Sweeps nodes until the pending fluid over non-catalyst nodes drops below
 * target (or max_sweeps is hit). Throws ConvergenceError when the fluid sum
 * stops contracting (non-contracting stencil guard).
 */
RunTrace run_diffusion(FluidState& state, const Domain& domain,
                       const Stencil& stencil, CatalystPolicy& policy,
                       const DiffusionSchedule& schedule, double target);

/// H = 0, F = boundary values at catalysts (their initial fluid), 0 inside.
FluidState make_initial_state(const Domain& domain);

/**
 * One in-place Gauss-Seidel sweep over interior nodes; boundary entries of
 * `values` are read as fixed Dirichlet data. `source` holds raw f samples,
 * scaled by the stencil's source coefficient. Returns the largest absolute
 * single-node increment.
 */
double gauss_seidel_sweep(std::vector<double>& values, const Domain& domain,
                          const Stencil& stencil,
                          const std::vector<double>& source);

/// Jacobi variant: all reads come from the previous iterate.
double jacobi_sweep(std::vector<double>& values, const Domain& domain,
                    const Stencil& stencil, const std::vector<double>& source);

}  // namespace dicat
