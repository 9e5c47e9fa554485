#pragma once

#include <cstddef>

#include "vqr/states.hpp"

namespace vqr {

/// sum_a (A_a x 1) rho (A_a x 1), with A_a embedded at the observable's
/// subsystem of `dims`. Accepts any operator, normalized or not.
Matrix measure_nonselective(const Matrix& rho, const Observable& a, const Dims& dims);
DensityMatrix measure_nonselective(const DensityMatrix& rho, const Observable& a);

/// (1 - eps) rho + eps Phi_A(rho).
DensityMatrix monitor(const DensityMatrix& rho, const Observable& a, double epsilon);

/// True iff d_Tr(rho, Phi_A(rho)) <= tol.
bool has_reality(const DensityMatrix& rho, const Observable& a, double tol = 1e-9);

/// System-environment coupling that realizes Phi_A on the system:
/// U = sum_a (A_a x 1_rest) x X^a, X the cyclic shift |e_k> -> |e_{k+1 mod d_E}>.
/// The environment is appended as the last subsystem and starts in |e_0>.
class DilationSetup {
 public:
  /// Throws DimensionMismatch unless every projector is rank one
  /// (d_E = d_A) and the observable fits the state.
  DilationSetup(DensityMatrix system_state, Observable observable);

  const DensityMatrix& system_state() const noexcept { return system_; }
  const Observable& observable() const noexcept { return observable_; }
  std::size_t environment_dim() const noexcept { return env_dim_; }
  std::size_t env_ground() const noexcept { return 0; }
  const Matrix& unitary() const noexcept { return unitary_; }
  /// System dims followed by d_E.
  Dims global_dims() const;

  /// ||Tr_E[U (rho x |e0><e0|) U^dag] - Phi_A(rho)||_2.
  double reduction_residual() const;
  /// ||U (Phi_A(rho) x 1/d_E) U^dag - Phi_A(rho) x 1/d_E||_2.
  double invariance_residual() const;
  double unitarity_residual() const;

 private:
  DensityMatrix system_;
  Observable observable_;
  std::size_t env_dim_;
  Matrix unitary_;
};

DilationSetup build_dilation(const DensityMatrix& rho, const Observable& a);

struct Evolution {
  DensityMatrix omega0;  // rho x |e0><e0|
  DensityMatrix omega_t; // U omega0 U^dag
};

Evolution evolve(const DilationSetup& setup);

/// A CPTP map given by a Stinespring isometry V: C^in -> C^out x C^env,
/// Lambda(rho) = Tr_env(V rho V^dag).
class StinespringChannel {
 public:
  StinespringChannel(Matrix isometry, std::size_t out_dim, std::size_t env_dim);

  Matrix apply(const Matrix& rho) const;
  std::size_t in_dim() const noexcept { return static_cast<std::size_t>(isometry_.cols()); }
  std::size_t out_dim() const noexcept { return out_dim_; }

 private:
  Matrix isometry_;
  std::size_t out_dim_;
  std::size_t env_dim_;
};

/// Haar-random isometry truncated from a (out*env)-dimensional unitary.
StinespringChannel random_channel(std::size_t in_dim, std::size_t out_dim, std::size_t env_dim, Rng& rng);

}  // namespace vqr
