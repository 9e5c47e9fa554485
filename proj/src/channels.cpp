#include "vqr/channels.hpp"

#include <string>

#include "vqr/error.hpp"
#include "vqr/metrics.hpp"

namespace vqr {

namespace {

Matrix cyclic_shift_power(std::size_t d, std::size_t power) {
  Matrix x = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) {
    x(static_cast<Eigen::Index>((k + power) % d), static_cast<Eigen::Index>(k)) = 1.0;
  }
  return x;
}

}  // namespace

Matrix measure_nonselective(const Matrix& rho, const Observable& a, const Dims& dims) {
  a.require_compatible(dims);
  if (static_cast<std::size_t>(rho.rows()) != dims_product(dims) || rho.rows() != rho.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "operator does not match the declared subsystems");
  }
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  // P rho P = (P (P rho)^dag)^dag for Hermitian P.
  for (const Matrix& p : a.projectors()) {
    const Matrix left = apply_local(p, a.subsystem(), dims, rho);
    out += apply_local(p, a.subsystem(), dims, left.adjoint()).adjoint();
  }
  return out;
}

DensityMatrix measure_nonselective(const DensityMatrix& rho, const Observable& a) {
  return DensityMatrix(measure_nonselective(rho.matrix(), a, rho.dims()), rho.dims());
}

DensityMatrix monitor(const DensityMatrix& rho, const Observable& a, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "monitoring strength must lie in [0, 1]", epsilon);
  }
  const Matrix measured = measure_nonselective(rho.matrix(), a, rho.dims());
  return DensityMatrix((1.0 - epsilon) * rho.matrix() + epsilon * measured, rho.dims());
}

bool has_reality(const DensityMatrix& rho, const Observable& a, double tol) {
  return trace_distance(rho, measure_nonselective(rho.matrix(), a, rho.dims())) <= tol;
}

DilationSetup::DilationSetup(DensityMatrix system_state, Observable observable)
    : system_(std::move(system_state)), observable_(std::move(observable)), env_dim_(0) {
  observable_.require_compatible(system_.dims());
  if (!observable_.rank_one()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dilation needs d_E = d_A: observable has " + std::to_string(observable_.outcomes()) +
                    " outcomes on a " + std::to_string(observable_.local_dim()) + "-dimensional subsystem");
  }
  env_dim_ = observable_.outcomes();
  const std::size_t sys_dim = system_.dim();
  unitary_ = Matrix::Zero(static_cast<Eigen::Index>(sys_dim * env_dim_),
                          static_cast<Eigen::Index>(sys_dim * env_dim_));
  for (std::size_t a = 0; a < env_dim_; ++a) {
    const Matrix proj = embed(observable_.projectors()[a], observable_.subsystem(), system_.dims());
    unitary_ += kron(proj, cyclic_shift_power(env_dim_, a));
  }
  const double defect = unitarity_residual();
  if (defect > 1e-9) {
    throw Error(ErrorCode::NotUnitary, "constructed coupling is not unitary", defect);
  }
}

Dims DilationSetup::global_dims() const {
  Dims dims = system_.dims();
  dims.push_back(env_dim_);
  return dims;
}

double DilationSetup::reduction_residual() const {
  const Matrix omega0 = kron(system_.matrix(), basis_projector(env_dim_, 0));
  const Matrix omega_t = unitary_ * omega0 * unitary_.adjoint();
  const Dims dims = global_dims();
  std::vector<std::size_t> keep(system_.dims().size());
  for (std::size_t s = 0; s < keep.size(); ++s) keep[s] = s;
  const Matrix reduced = partial_trace(omega_t, dims, keep);
  return (reduced - measure_nonselective(system_.matrix(), observable_, system_.dims())).norm();
}

double DilationSetup::invariance_residual() const {
  const Matrix measured = measure_nonselective(system_.matrix(), observable_, system_.dims());
  const Matrix fixed = kron(measured, identity(env_dim_) / static_cast<double>(env_dim_));
  return (unitary_ * fixed * unitary_.adjoint() - fixed).norm();
}

double DilationSetup::unitarity_residual() const {
  return (unitary_.adjoint() * unitary_ - Matrix::Identity(unitary_.rows(), unitary_.cols())).norm();
}

DilationSetup build_dilation(const DensityMatrix& rho, const Observable& a) { return DilationSetup(rho, a); }

Evolution evolve(const DilationSetup& setup) {
  const Dims dims = setup.global_dims();
  const Matrix omega0 = kron(setup.system_state().matrix(), basis_projector(setup.environment_dim(), 0));
  const Matrix omega_t = setup.unitary() * omega0 * setup.unitary().adjoint();
  return {DensityMatrix(omega0, dims), DensityMatrix(omega_t, dims)};
}

StinespringChannel::StinespringChannel(Matrix isometry, std::size_t out_dim, std::size_t env_dim)
    : isometry_(std::move(isometry)), out_dim_(out_dim), env_dim_(env_dim) {
  if (static_cast<std::size_t>(isometry_.rows()) != out_dim_ * env_dim_) {
    throw Error(ErrorCode::DimensionMismatch, "isometry rows must equal out_dim * env_dim");
  }
  const double defect =
      (isometry_.adjoint() * isometry_ - Matrix::Identity(isometry_.cols(), isometry_.cols())).norm();
  if (defect > 1e-9) throw Error(ErrorCode::NotUnitary, "Stinespring operator is not an isometry", defect);
}

Matrix StinespringChannel::apply(const Matrix& rho) const {
  if (rho.rows() != isometry_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "channel input has the wrong dimension");
  }
  const Matrix big = isometry_ * rho * isometry_.adjoint();
  return partial_trace(big, Dims{out_dim_, env_dim_}, {0});
}

StinespringChannel random_channel(std::size_t in_dim, std::size_t out_dim, std::size_t env_dim, Rng& rng) {
  if (in_dim > out_dim * env_dim) {
    throw Error(ErrorCode::DimensionMismatch, "input space does not fit into output x environment");
  }
  const Matrix u = haar_unitary(out_dim * env_dim, rng);
  return StinespringChannel(u.leftCols(static_cast<Eigen::Index>(in_dim)), out_dim, env_dim);
}

}  // namespace vqr
