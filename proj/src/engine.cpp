#include "dicat/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace dicat {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline void push_share(FluidState& state, const Domain& domain, int i, int j,
                       double amount) {
  if (amount == 0.0) return;
  if (domain.contains(i, j))
    state.F[domain.index(i, j)] += amount;
  else
    state.absorbed += amount;  // off-grid share is gone
}

inline void diffuse_index(FluidState& state, const Domain& domain, int i,
                          int j, int n, const Stencil& stencil,
                          CatalystPolicy& policy) {
  if (policy.absorbing(n)) {
    const double f = state.F[n];
    if (f != 0.0) {
      state.absorbed += f;
      if (state.tracks_per_node()) state.absorbed_at[n] += f;
      state.F[n] = 0.0;
    }
    return;
  }
  double push = state.F[n];
  if (policy.has_initial_fluid(n)) {
    // A catalyst diffuses its initial fluid only; anything received before
    // this first visit is already black-hole food.
    push = policy.initial_fluid(n);
    const double received = state.F[n] - push;
    if (received != 0.0) {
      state.absorbed += received;
      if (state.tracks_per_node()) state.absorbed_at[n] += received;
    }
    policy.mark_diffused(n);
  }
  state.F[n] = 0.0;
  if (push == 0.0) return;
  state.H[n] += push;
  const StencilWeights w = stencil.weights(n);
  push_share(state, domain, i - 1, j, w.xm * push);
  push_share(state, domain, i + 1, j, w.xp * push);
  if (domain.dimension() == 2) {
    push_share(state, domain, i, j - 1, w.ym * push);
    push_share(state, domain, i, j + 1, w.yp * push);
  }
}

}  // namespace

void diffuse_node(FluidState& state, const Domain& domain, int i, int j,
                  const Stencil& stencil, CatalystPolicy& policy) {
  if (!domain.contains(i, j))
    throw std::invalid_argument("diffuse_node: node outside domain");
  diffuse_index(state, domain, i, j, domain.index(i, j), stencil, policy);
}

FluidState make_initial_state(const Domain& domain) {
  FluidState state(domain.node_count());
  for (int n = 0; n < domain.node_count(); ++n)
    if (domain.is_boundary(n)) state.F[n] = domain.boundary_value(n);
  return state;
}

RunTrace run_diffusion(FluidState& state, const Domain& domain,
                       const Stencil& stencil, CatalystPolicy& policy,
                       const DiffusionSchedule& schedule, double target) {
  if (target < 0.0)
    throw std::invalid_argument("run_diffusion: target must be >= 0");
  const auto t0 = Clock::now();
  RunTrace trace("d-iteration", "");

  const int nx = domain.nx();
  const int ny = domain.ny();
  const int count = domain.node_count();

  auto pending_sum = [&] {
    double s = 0.0;
    for (int n = 0; n < count; ++n)
      if (!policy.is_catalyst(n)) s += std::abs(state.F[n]);
    return s;
  };

  std::vector<double> sums;
  double s = pending_sum();
  sums.push_back(s);
  trace.add(seconds_since(t0), s);

  std::vector<int> order;
  long sweep = 0;
  while (s >= target && s > 0.0) {
    if (schedule.max_sweeps > 0 && sweep >= schedule.max_sweeps) break;
    if (schedule.order == DiffusionSchedule::Order::RowMajor) {
      int n = 0;
      for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j, ++n) {
          if (std::abs(state.F[n]) > schedule.skip_epsilon ||
              policy.has_initial_fluid(n))
            diffuse_index(state, domain, i, j, n, stencil, policy);
        }
      }
    } else {
      order.clear();
      for (int n = 0; n < count; ++n)
        if (std::abs(state.F[n]) > schedule.skip_epsilon ||
            policy.has_initial_fluid(n))
          order.push_back(n);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::abs(state.F[a]) > std::abs(state.F[b]);
      });
      for (int n : order)
        diffuse_index(state, domain, n / ny, n % ny, n, stencil, policy);
    }
    ++sweep;
    s = pending_sum();
    sums.push_back(s);

    // Contraction guard: compare against the half-age checkpoint so that
    // slow polynomial phases (recurrent 1D/2D transients) are not flagged.
    if (sweep >= 16 && s >= target) {
      const double ref = sums[static_cast<size_t>(sweep / 2)];
      if (ref > 0.0 && s > 0.999 * ref)
        throw ConvergenceError(
            "run_diffusion: pending fluid stopped contracting (sum " +
            std::to_string(s) + " after " + std::to_string(sweep) +
            " sweeps); stencil looks non-contracting");
    }
    if (sweep <= 64 || sweep % std::max(1, schedule.trace_stride) == 0)
      trace.add(seconds_since(t0), s);
  }
  trace.add(seconds_since(t0), s);
  return trace;
}

double gauss_seidel_sweep(std::vector<double>& values, const Domain& domain,
                          const Stencil& stencil,
                          const std::vector<double>& source) {
  if (values.size() != static_cast<size_t>(domain.node_count()))
    throw std::invalid_argument("gauss_seidel_sweep: field shape mismatch");
  if (!source.empty() && source.size() != values.size())
    throw std::invalid_argument("gauss_seidel_sweep: source shape mismatch");

  const int nx = domain.nx();
  const int ny = domain.ny();
  double max_inc = 0.0;
  if (domain.dimension() == 1) {
    for (int i = 1; i < nx - 1; ++i) {
      const int n = domain.index(i);
      if (domain.is_boundary(n)) continue;
      const StencilWeights w = stencil.weights(n);
      double t = w.xm * values[n - 1] + w.xp * values[n + 1];
      if (!source.empty()) t += stencil.source_coef(n) * source[n];
      max_inc = std::max(max_inc, std::abs(t - values[n]));
      values[n] = t;
    }
  } else {
    for (int i = 1; i < nx - 1; ++i) {
      for (int j = 1; j < ny - 1; ++j) {
        const int n = i * ny + j;
        if (domain.is_boundary(n)) continue;
        const StencilWeights w = stencil.weights(n);
        double t = w.xm * values[n - ny] + w.xp * values[n + ny] +
                   w.ym * values[n - 1] + w.yp * values[n + 1];
        if (!source.empty()) t += stencil.source_coef(n) * source[n];
        max_inc = std::max(max_inc, std::abs(t - values[n]));
        values[n] = t;
      }
    }
  }
  return max_inc;
}

double jacobi_sweep(std::vector<double>& values, const Domain& domain,
                    const Stencil& stencil, const std::vector<double>& source) {
  if (values.size() != static_cast<size_t>(domain.node_count()))
    throw std::invalid_argument("jacobi_sweep: field shape mismatch");
  if (!source.empty() && source.size() != values.size())
    throw std::invalid_argument("jacobi_sweep: source shape mismatch");

  const std::vector<double> prev = values;
  const int nx = domain.nx();
  const int ny = domain.ny();
  double max_inc = 0.0;
  if (domain.dimension() == 1) {
    for (int i = 1; i < nx - 1; ++i) {
      const int n = domain.index(i);
      if (domain.is_boundary(n)) continue;
      const StencilWeights w = stencil.weights(n);
      double t = w.xm * prev[n - 1] + w.xp * prev[n + 1];
      if (!source.empty()) t += stencil.source_coef(n) * source[n];
      max_inc = std::max(max_inc, std::abs(t - values[n]));
      values[n] = t;
    }
  } else {
    for (int i = 1; i < nx - 1; ++i) {
      for (int j = 1; j < ny - 1; ++j) {
        const int n = i * ny + j;
        if (domain.is_boundary(n)) continue;
        const StencilWeights w = stencil.weights(n);
        double t = w.xm * prev[n - ny] + w.xp * prev[n + ny] +
                   w.ym * prev[n - 1] + w.yp * prev[n + 1];
        if (!source.empty()) t += stencil.source_coef(n) * source[n];
        max_inc = std::max(max_inc, std::abs(t - values[n]));
        values[n] = t;
      }
    }
  }
  return max_inc;
}

}  // namespace dicat
