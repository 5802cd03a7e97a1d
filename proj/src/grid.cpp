#include "dicat/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace dicat {

namespace {

void check_domain_args(int dimension, int lx, int ly, double eps) {
  if (dimension != 1 && dimension != 2)
    throw std::invalid_argument("domain dimension must be 1 or 2");
  if (lx < 3)
    throw std::invalid_argument("domain extent lx must be at least 3 nodes");
  if (dimension == 2 && ly < 3)
    throw std::invalid_argument("domain extent ly must be at least 3 nodes");
  if (eps <= 0.0) throw std::invalid_argument("grid step eps must be > 0");
}

bool on_frame(int i, int j, int nx, int ny, int dim) {
  if (dim == 1) return i == 0 || i == nx - 1;
  return i == 0 || i == nx - 1 || j == 0 || j == ny - 1;
}

}  // namespace

int Domain::interior_count() const {
  return static_cast<int>(
      std::count(kind_.begin(), kind_.end(), NodeKind::Interior));
}

int Domain::boundary_count() const {
  return node_count() - interior_count();
}

void Domain::add_boundary_node(int i, int j, double g) {
  if (!contains(i, j))
    throw std::invalid_argument("add_boundary_node: node outside domain");
  const int n = index(i, j);
  kind_[n] = NodeKind::Boundary;
  g_[n] = g;
}

Domain make_domain(int dimension, int lx, int ly,
                   const std::function<double(int, int)>& boundary_fn,
                   double eps) {
  check_domain_args(dimension, lx, ly, eps);
  Domain d;
  d.dim_ = dimension;
  d.nx_ = lx;
  d.ny_ = dimension == 2 ? ly : 1;
  d.eps_ = eps;
  d.kind_.assign(static_cast<size_t>(d.nx_) * d.ny_, NodeKind::Interior);
  d.g_.assign(d.kind_.size(), 0.0);
  for (int i = 0; i < d.nx_; ++i) {
    for (int j = 0; j < d.ny_; ++j) {
      if (on_frame(i, j, d.nx_, d.ny_, d.dim_)) {
        const int n = d.index(i, j);
        d.kind_[n] = NodeKind::Boundary;
        d.g_[n] = boundary_fn(i, j);
      }
    }
  }
  return d;
}

Domain make_domain(int dimension, int lx, int ly,
                   const std::vector<BoundaryNode>& boundary_spec,
                   double eps) {
  check_domain_args(dimension, lx, ly, eps);
  Domain d;
  d.dim_ = dimension;
  d.nx_ = lx;
  d.ny_ = dimension == 2 ? ly : 1;
  d.eps_ = eps;
  d.kind_.assign(static_cast<size_t>(d.nx_) * d.ny_, NodeKind::Interior);
  d.g_.assign(d.kind_.size(), 0.0);
  std::set<int> covered;
  for (const auto& b : boundary_spec) {
    if (!d.contains(b.i, b.j))
      throw std::invalid_argument("boundary_spec node outside domain");
    const int n = d.index(b.i, b.j);
    d.kind_[n] = NodeKind::Boundary;
    d.g_[n] = b.value;
    covered.insert(n);
  }
  for (int i = 0; i < d.nx_; ++i) {
    for (int j = 0; j < d.ny_; ++j) {
      if (on_frame(i, j, d.nx_, d.ny_, d.dim_) &&
          !covered.count(d.index(i, j))) {
        throw std::invalid_argument(
            "boundary_spec misses frame node (" + std::to_string(i) + "," +
            std::to_string(j) + ")");
      }
    }
  }
  return d;
}

double FluidState::fluid_total() const {
  double s = 0.0;
  for (double v : F) s += v;
  return s;
}

double FluidState::fluid_abs_total() const {
  double s = 0.0;
  for (double v : F) s += std::abs(v);
  return s;
}

double residual(const FluidState& state, const Domain& domain) {
  if (state.H.size() != static_cast<size_t>(domain.node_count()) ||
      state.F.size() != state.H.size())
    throw std::invalid_argument("residual: state shape does not match domain");
  double r = 0.0;
  const int n = domain.node_count();
  for (int k = 0; k < n; ++k) {
    if (domain.is_boundary(k))
      r += std::abs(domain.boundary_value(k) - state.H[k]);
    else
      r += std::abs(state.F[k]);
  }
  return r;
}

void RunTrace::add(double seconds, double residual,
                   std::optional<double> error) {
  if (!samples_.empty() && seconds <= samples_.back().seconds)
    seconds = std::nextafter(samples_.back().seconds,
                             std::numeric_limits<double>::infinity());
  samples_.push_back(TraceSample{seconds, residual, error});
}

std::optional<double> RunTrace::first_time_below_error(double tol) const {
  for (const auto& s : samples_)
    if (s.error && *s.error <= tol) return s.seconds;
  return std::nullopt;
}

}  // namespace dicat
