#pragma once

#include <cstdint>
#include <vector>

#include "dicat/grid.hpp"

namespace dicat {

/// Neighbor weights of one node. 1D stencils use xm/xp only.
struct StencilWeights {
  double xm = 0.0;  // toward i-1
  double xp = 0.0;  // toward i+1
  double ym = 0.0;  // toward j-1
  double yp = 0.0;  // toward j+1

  double sum() const { return xm + xp + ym + yp; }
};

/**
 * Per-node diffusion weights plus the coefficient that scales an injected
 * source sample f into fluid. Uniform stencils store one weight set.
 */
class Stencil {
public:
  /// w = (1/2, 1/2), source coefficient -eps^2/2.
  static Stencil laplacian_1d(const Domain& d);
  /// w = (1/4, 1/4, 1/4, 1/4), source coefficient -eps^2/4.
  static Stencil laplacian_2d(const Domain& d);
  /// Laplacian stencil matching the domain dimension.
  static Stencil laplacian(const Domain& d);

  static Stencil uniform(const Domain& d, StencilWeights w, double source_coef);
  static Stencil per_node(const Domain& d, std::vector<StencilWeights> w,
                          std::vector<double> source_coef);

  int dimension() const { return dim_; }
  bool is_uniform() const { return uniform_; }
  bool unit_sum() const { return unit_sum_; }

  StencilWeights weights(int n) const { return uniform_ ? w0_ : w_[n]; }
  double source_coef(int n) const { return uniform_ ? src0_ : src_[n]; }

private:
  int dim_ = 1;
  bool uniform_ = true;
  bool unit_sum_ = true;
  StencilWeights w0_;
  double src0_ = 0.0;
  std::vector<StencilWeights> w_;
  std::vector<double> src_;
};

/**
 * Catalyst bookkeeping for a domain: every Boundary node is a catalyst.
 * A catalyst diffuses its initial fluid (the boundary value) exactly once,
 * then absorbs everything it receives.
 */
class CatalystPolicy {
public:
  explicit CatalystPolicy(const Domain& d);

  bool is_catalyst(int n) const { return catalyst_[n] != 0; }
  bool has_initial_fluid(int n) const {
    return catalyst_[n] != 0 && diffused_[n] == 0;
  }
  bool absorbing(int n) const { return catalyst_[n] != 0 && diffused_[n] != 0; }
  double initial_fluid(int n) const { return initial_[n]; }
  void mark_diffused(int n) { diffused_[n] = 1; }
  void reset();

private:
  std::vector<std::uint8_t> catalyst_;
  std::vector<std::uint8_t> diffused_;
  std::vector<double> initial_;
};

}  // namespace dicat
