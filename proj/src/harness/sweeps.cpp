#include <algorithm>
#include <cmath>
#include <numbers>

#include "vqr/channels.hpp"
#include "vqr/harness.hpp"

namespace vqr::harness {

namespace {

std::vector<MonotoneKind> kinds_for(const SweepSpec& spec) {
  return spec.kinds.empty() ? default_kinds(spec.experiment) : spec.kinds;
}

// n points spanning [0, 1], endpoints included.
double unit_grid(std::size_t i, std::size_t n) {
  return n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

Table run_werner_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::string hash = spec_hash(spec);
  const Observable a = spin_observable(0.0, 0.0, 0);
  Table table{{"spec_hash", "epsilon", "kind", "r_value", "r_max", "delta_i", "vqr_detected"}, {}};
  for (std::size_t i = 0; i < spec.eps_steps; ++i) {
    const double eps = unit_grid(i, spec.eps_steps);
    const DensityMatrix rho = werner(eps);
    for (const MonotoneKind& kind : kinds_for(spec)) {
      const RealismReport r = realism(rho, a, kind);
      table.rows.push_back({hash, eps, kind.name(), r.r_value, r.r_max, r.delta_i, r.vqr_detected});
    }
  }
  return table;
}

Table run_rmax_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::string hash = spec_hash(spec);
  Table table{{"spec_hash", "d_e", "kind", "r_max"}, {}};
  for (std::size_t d = spec.d_min; d <= spec.d_max; ++d) {
    for (const MonotoneKind& kind : kinds_for(spec)) {
      table.rows.push_back({hash, static_cast<std::int64_t>(d), kind.name(), realism_max(kind, d)});
    }
  }
  return table;
}

Table run_mu_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::string hash = spec_hash(spec);
  Table table{{"spec_hash", "mu", "phi", "kind", "r_value", "r_max", "delta_i", "theta_spread"}, {}};
  for (std::size_t i = 0; i < spec.mu_steps; ++i) {
    const double mu = unit_grid(i, spec.mu_steps);
    const DensityMatrix rho = mu_state(mu);
    for (double phi : spec.phis) {
      for (const MonotoneKind& kind : kinds_for(spec)) {
        const RealismReport r = realism(rho, spin_observable(spec.theta, phi, 0), kind);
        double lo = r.r_value, hi = r.r_value;
        for (std::size_t k = 0; k < spec.theta_points; ++k) {
          const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(spec.theta_points);
          const double v = realism(rho, spin_observable(theta, phi, 0), kind).r_value;
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        table.rows.push_back({hash, mu, phi, kind.name(), r.r_value, r.r_max, r.delta_i, hi - lo});
      }
    }
  }
  return table;
}

}  // namespace vqr::harness
