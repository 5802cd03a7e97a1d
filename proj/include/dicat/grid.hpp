#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dicat {

enum class NodeKind : std::uint8_t { Interior, Boundary };

/// A node of a 2D rectangular grid; 1D domains use j = 0.
struct NodeId {
  int i = 0;
  int j = 0;
};

struct BoundaryNode {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

/**
 * Rectangular grid geometry with per-node classification.
 *
 * Every node on the outer frame is Boundary; additional interior nodes may
 * be marked Boundary (they act as Dirichlet catalysts too). Boundary nodes
 * carry the prescribed value g. `eps` is the grid step used by the ODE/PDE
 * front-ends to scale source terms; it does not affect the Laplace case.
 */
class Domain {
public:
  int dimension() const { return dim_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double eps() const { return eps_; }
  int node_count() const { return nx_ * ny_; }

  int index(int i, int j = 0) const { return i * ny_ + j; }
  bool contains(int i, int j = 0) const {
    return i >= 0 && i < nx_ && j >= 0 && j < ny_;
  }
  NodeKind kind(int n) const { return kind_[n]; }
  bool is_boundary(int n) const { return kind_[n] == NodeKind::Boundary; }
  double boundary_value(int n) const { return g_[n]; }

  int interior_count() const;
  int boundary_count() const;

  /// Marks an off-frame node as Boundary with value g.
  void add_boundary_node(int i, int j, double g);

  const std::vector<NodeKind>& kinds() const { return kind_; }
  const std::vector<double>& boundary_values() const { return g_; }

  friend Domain make_domain(int dimension, int lx, int ly,
                            const std::function<double(int, int)>& boundary_fn,
                            double eps);
  friend Domain make_domain(int dimension, int lx, int ly,
                            const std::vector<BoundaryNode>& boundary_spec,
                            double eps);

private:
  int dim_ = 1;
  int nx_ = 0;
  int ny_ = 1;
  double eps_ = 1.0;
  std::vector<NodeKind> kind_;
  std::vector<double> g_;
};

/**
 * Builds a domain of lx (x ly) nodes whose frame nodes are Boundary with
 * value boundary_fn(i, j). Extents below 3 nodes are rejected: at least one
 * interior node is required.
 */
Domain make_domain(int dimension, int lx, int ly,
                   const std::function<double(int, int)>& boundary_fn,
                   double eps = 1.0);

/// Same, from an explicit node list; rejects a spec that misses a frame node.
Domain make_domain(int dimension, int lx, int ly,
                   const std::vector<BoundaryNode>& boundary_spec,
                   double eps = 1.0);

/**
 * Paired history/fluid fields of the D-iteration.
 *
 * `absorbed` counts all fluid removed from the grid: deletions at catalyst
 * nodes plus shares pushed off the frame. With unit-sum stencils,
 * sum(F) + absorbed is invariant across diffusion steps.
 * `absorbed_at` optionally tracks per-node catalyst deletions (needed for
 * return-fraction measurement); enable with track_per_node_absorption().
 */
struct FluidState {
  std::vector<double> H;
  std::vector<double> F;
  double absorbed = 0.0;
  std::vector<double> absorbed_at;  // empty unless tracking is enabled

  FluidState() = default;
  explicit FluidState(int node_count)
      : H(node_count, 0.0), F(node_count, 0.0) {}

  void track_per_node_absorption() { absorbed_at.assign(H.size(), 0.0); }
  bool tracks_per_node() const { return !absorbed_at.empty(); }

  double fluid_total() const;      // sum F
  double fluid_abs_total() const;  // sum |F|
};

/// r = sum_{interior} |F| + sum_{boundary} |g - H|. Zero certifies the limit.
double residual(const FluidState& state, const Domain& domain);

/// One timing sample of a convergence run.
struct TraceSample {
  double seconds = 0.0;
  double residual = 0.0;
  std::optional<double> error;  // max distance to a known reference, if any
};

/// Time-stamped convergence record; timestamps strictly increasing.
class RunTrace {
public:
  RunTrace() = default;
  RunTrace(std::string solver, std::string problem)
      : solver_label(std::move(solver)), problem_label(std::move(problem)) {}

  std::string solver_label;
  std::string problem_label;

  void add(double seconds, double residual,
           std::optional<double> error = std::nullopt);
  const std::vector<TraceSample>& samples() const { return samples_; }
  bool empty() const { return samples_.empty(); }
  const TraceSample& back() const { return samples_.back(); }

  /// Earliest sample time with error <= tol, if the trace ever got there.
  std::optional<double> first_time_below_error(double tol) const;

private:
  std::vector<TraceSample> samples_;
};

}  // namespace dicat
