#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vqr/linalg.hpp"

namespace vqr {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kProjectorTol = 1e-9;

/// A validated quantum state: Hermitian within kHermitianTol, eigenvalues
/// >= -kPsdTol and unit trace within kTraceTol. Basis ordering over
/// subsystems is row-major (|00>, |01>, |10>, |11> for two qubits).
class DensityMatrix {
 public:
  /// Throws NotHermitian, NotPSD (magnitude = most negative eigenvalue),
  /// TraceNotOne or DimensionMismatch.
  DensityMatrix(Matrix matrix, Dims dims);
  /// Single-system shorthand, dims = {matrix.rows()}.
  explicit DensityMatrix(Matrix matrix);

  const Matrix& matrix() const noexcept { return matrix_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  double purity() const;

  operator const Matrix&() const noexcept { return matrix_; }

 private:
  Matrix matrix_;
  Dims dims_;
};

DensityMatrix validate_state(const Matrix& m, const Dims& dims);

/// A projective decomposition sum_a a A_a on one subsystem of a composite
/// system. Projectors are local (dimension = local_dim); they are embedded
/// into whatever state the observable is applied to.
class Observable {
 public:
  /// Throws NonProjective when the projectors are not Hermitian, idempotent,
  /// mutually orthogonal and complete, or when eigenvalues are not distinct.
  Observable(std::vector<Matrix> projectors, std::vector<double> eigenvalues,
             std::size_t subsystem = 0);

  const std::vector<Matrix>& projectors() const noexcept { return projectors_; }
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  std::size_t subsystem() const noexcept { return subsystem_; }
  std::size_t local_dim() const noexcept { return local_dim_; }
  std::size_t outcomes() const noexcept { return projectors_.size(); }
  bool rank_one() const noexcept { return outcomes() == local_dim_; }

  /// sum_a a A_a on the local space.
  Matrix local_operator() const;
  /// Same projectors acting on a different subsystem index.
  Observable on_subsystem(std::size_t subsystem) const;
  /// Throws DimensionMismatch unless dims[subsystem] == local_dim.
  void require_compatible(const Dims& dims) const;

 private:
  std::vector<Matrix> projectors_;
  std::vector<double> eigenvalues_;
  std::size_t subsystem_;
  std::size_t local_dim_;
};

// --- named states ---------------------------------------------------------

/// (1 - eps) I/4 + eps |phi+><phi+|, eps in [0, 1].
DensityMatrix werner(double epsilon);
/// I/4 + mu/4 (XX - YY) + (2mu - 1)/4 ZZ, mu in [0, 1].
DensityMatrix mu_state(double mu);
/// Projector onto sum_a |aa>/sqrt(d) over dims {d, d}.
DensityMatrix max_entangled(std::size_t d);
DensityMatrix maximally_mixed(const Dims& dims);
DensityMatrix product(const DensityMatrix& a, const DensityMatrix& b);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

// --- observables ----------------------------------------------------------

/// Eigenprojectors of u.sigma with u = (cos t sin p, sin t sin p, cos p).
/// The +1 projector comes first.
Observable spin_observable(double theta, double phi, std::size_t subsystem = 0);
/// {|a><a|} on subsystem `subsystem` of `dims`; dims[subsystem] must be d.
Observable computational_observable(std::size_t d, std::size_t subsystem, const Dims& dims);
Observable computational_observable(std::size_t d);

// --- sampling -------------------------------------------------------------

using Rng = std::mt19937_64;

/// Ginibre: G (d x rank) with iid standard complex normal entries,
/// rho = G G^dagger / Tr(G G^dagger).
DensityMatrix random_density(std::size_t d, std::size_t rank, Rng& rng);
DensityMatrix random_density(std::size_t d, std::size_t rank, std::uint64_t seed);
DensityMatrix random_density(const Dims& dims, std::size_t rank, Rng& rng);
/// Haar unitary: QR of a complex Ginibre matrix with R's diagonal phases
/// moved into Q.
Matrix haar_unitary(std::size_t d, Rng& rng);
/// Haar-random pure state U|0...0>.
DensityMatrix random_pure(const Dims& dims, Rng& rng);
DensityMatrix random_pure(const Dims& dims, std::uint64_t seed);
/// Eigenprojectors of a GUE matrix, labelled by its eigenvalues.
Observable random_observable(std::size_t d, Rng& rng, std::size_t subsystem = 0);
Observable random_observable(std::size_t d, std::uint64_t seed, std::size_t subsystem = 0);

}  // namespace vqr
