#include "dicat/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dicat {

namespace {
constexpr double kUnitSumTol = 1e-12;
}

Stencil Stencil::laplacian_1d(const Domain& d) {
  if (d.dimension() != 1)
    throw std::invalid_argument("laplacian_1d needs a 1D domain");
  const double e2 = d.eps() * d.eps();
  return uniform(d, StencilWeights{0.5, 0.5, 0.0, 0.0}, -e2 / 2.0);
}

Stencil Stencil::laplacian_2d(const Domain& d) {
  if (d.dimension() != 2)
    throw std::invalid_argument("laplacian_2d needs a 2D domain");
  const double e2 = d.eps() * d.eps();
  return uniform(d, StencilWeights{0.25, 0.25, 0.25, 0.25}, -e2 / 4.0);
}

Stencil Stencil::laplacian(const Domain& d) {
  return d.dimension() == 1 ? laplacian_1d(d) : laplacian_2d(d);
}

Stencil Stencil::uniform(const Domain& d, StencilWeights w,
                         double source_coef) {
  if (!std::isfinite(w.sum()))
    throw std::invalid_argument("stencil weights must be finite");
  Stencil s;
  s.dim_ = d.dimension();
  s.uniform_ = true;
  s.w0_ = w;
  s.src0_ = source_coef;
  s.unit_sum_ = std::abs(w.sum() - 1.0) <= kUnitSumTol;
  return s;
}

Stencil Stencil::per_node(const Domain& d, std::vector<StencilWeights> w,
                          std::vector<double> source_coef) {
  if (w.size() != static_cast<size_t>(d.node_count()) ||
      source_coef.size() != w.size())
    throw std::invalid_argument("per-node stencil shape mismatch");
  Stencil s;
  s.dim_ = d.dimension();
  s.uniform_ = false;
  s.w_ = std::move(w);
  s.src_ = std::move(source_coef);
  s.unit_sum_ = true;
  for (int n = 0; n < d.node_count(); ++n) {
    if (!std::isfinite(s.w_[n].sum()))
      throw std::invalid_argument("stencil weights must be finite");
    if (!d.is_boundary(n) && std::abs(s.w_[n].sum() - 1.0) > kUnitSumTol)
      s.unit_sum_ = false;
  }
  return s;
}

CatalystPolicy::CatalystPolicy(const Domain& d) {
  const int n = d.node_count();
  catalyst_.assign(n, 0);
  diffused_.assign(n, 0);
  initial_.assign(n, 0.0);
  for (int k = 0; k < n; ++k) {
    if (d.is_boundary(k)) {
      catalyst_[k] = 1;
      initial_[k] = d.boundary_value(k);
    }
  }
}

void CatalystPolicy::reset() {
  std::fill(diffused_.begin(), diffused_.end(), 0);
}

}  // namespace dicat
