#include "vqr/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vqr/error.hpp"

namespace vqr {

namespace {

void require_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::OutOfRange,
                std::string(name) + " must lie in [0, 1], got " + std::to_string(value), value);
  }
}

Vector phi_plus_ket(std::size_t d) {
  Vector ket = Vector::Zero(static_cast<Eigen::Index>(d * d));
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t a = 0; a < d; ++a) ket(static_cast<Eigen::Index>(a * d + a)) = amp;
  return ket;
}

Matrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index c = 0; c < g.cols(); ++c) {
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return g;
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix matrix, Dims dims) : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix must be square and non-empty");
  }
  if (dims_.empty() || dims_product(dims_) != dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "subsystem dimensions multiply to " + std::to_string(dims_product(dims_)) +
                    ", matrix is " + std::to_string(dim()) + "-dimensional");
  }
  const double defect = hermiticity_defect(matrix_);
  if (defect > kHermitianTol) {
    throw Error(ErrorCode::NotHermitian, "state deviates from its adjoint by " + std::to_string(defect),
                defect);
  }
  const double tr = trace_real(matrix_);
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error(ErrorCode::TraceNotOne, "trace is " + std::to_string(tr), tr - 1.0);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (matrix_ + matrix_.adjoint()),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  }
  const double lowest = solver.eigenvalues()(0);
  if (lowest < -kPsdTol) {
    throw Error(ErrorCode::NotPSD, "most negative eigenvalue is " + std::to_string(lowest), lowest);
  }
  // Remove the anti-Hermitian roundoff so downstream spectral code sees an
  // exactly Hermitian matrix.
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
}

DensityMatrix::DensityMatrix(Matrix matrix)
    : DensityMatrix(matrix, Dims{static_cast<std::size_t>(matrix.rows())}) {}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

DensityMatrix validate_state(const Matrix& m, const Dims& dims) { return DensityMatrix(m, dims); }

Observable::Observable(std::vector<Matrix> projectors, std::vector<double> eigenvalues,
                       std::size_t subsystem)
    : projectors_(std::move(projectors)), eigenvalues_(std::move(eigenvalues)), subsystem_(subsystem) {
  if (projectors_.empty() || projectors_.size() != eigenvalues_.size()) {
    throw Error(ErrorCode::NonProjective, "need one eigenvalue per projector");
  }
  local_dim_ = static_cast<std::size_t>(projectors_.front().rows());
  Matrix sum = Matrix::Zero(projectors_.front().rows(), projectors_.front().cols());
  for (std::size_t a = 0; a < projectors_.size(); ++a) {
    const Matrix& p = projectors_[a];
    if (p.rows() != p.cols() || static_cast<std::size_t>(p.rows()) != local_dim_) {
      throw Error(ErrorCode::DimensionMismatch, "projectors must share one square dimension");
    }
    const double herm = hermiticity_defect(p);
    const double idem = (p * p - p).cwiseAbs().maxCoeff();
    if (herm > kProjectorTol || idem > kProjectorTol) {
      throw Error(ErrorCode::NonProjective,
                  "projector " + std::to_string(a) + " is not a Hermitian idempotent",
                  std::max(herm, idem));
    }
    if (trace_real(p) < 0.5) {
      throw Error(ErrorCode::NonProjective, "projector " + std::to_string(a) + " is zero");
    }
    for (std::size_t b = 0; b < a; ++b) {
      const double overlap = (p * projectors_[b]).cwiseAbs().maxCoeff();
      if (overlap > kProjectorTol) {
        throw Error(ErrorCode::NonProjective,
                    "projectors " + std::to_string(b) + " and " + std::to_string(a) +
                        " are not orthogonal",
                    overlap);
      }
      if (eigenvalues_[a] == eigenvalues_[b]) {
        throw Error(ErrorCode::NonProjective, "eigenvalues must be distinct");
      }
    }
    sum += p;
  }
  const double completeness = (sum - identity(local_dim_)).cwiseAbs().maxCoeff();
  if (completeness > kProjectorTol) {
    throw Error(ErrorCode::NonProjective, "projectors do not sum to the identity", completeness);
  }
}

Matrix Observable::local_operator() const {
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(local_dim_), static_cast<Eigen::Index>(local_dim_));
  for (std::size_t a = 0; a < projectors_.size(); ++a) out += eigenvalues_[a] * projectors_[a];
  return out;
}

Observable Observable::on_subsystem(std::size_t subsystem) const {
  Observable copy = *this;
  copy.subsystem_ = subsystem;
  return copy;
}

void Observable::require_compatible(const Dims& dims) const {
  if (subsystem_ >= dims.size() || dims[subsystem_] != local_dim_) {
    throw Error(ErrorCode::DimensionMismatch,
                "observable of dimension " + std::to_string(local_dim_) + " on subsystem " +
                    std::to_string(subsystem_) + " does not fit the state's subsystems");
  }
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

DensityMatrix werner(double epsilon) {
  require_unit_interval(epsilon, "epsilon");
  const Matrix m = (1.0 - epsilon) * identity(4) / 4.0 + epsilon * outer(phi_plus_ket(2));
  return DensityMatrix(m, Dims{2, 2});
}

DensityMatrix mu_state(double mu) {
  require_unit_interval(mu, "mu");
  const Matrix m = identity(4) / 4.0 + (mu / 4.0) * (kron(pauli_x(), pauli_x()) - kron(pauli_y(), pauli_y())) +
                   ((2.0 * mu - 1.0) / 4.0) * kron(pauli_z(), pauli_z());
  return DensityMatrix(m, Dims{2, 2});
}

DensityMatrix max_entangled(std::size_t d) {
  if (d < 2) {
    throw Error(ErrorCode::OutOfRange, "local dimension must be >= 2, got " + std::to_string(d),
                static_cast<double>(d));
  }
  return DensityMatrix(outer(phi_plus_ket(d)), Dims{d, d});
}

DensityMatrix maximally_mixed(const Dims& dims) {
  const std::size_t d = dims_product(dims);
  return DensityMatrix(identity(d) / static_cast<double>(d), dims);
}

DensityMatrix product(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(dims));
}

Observable spin_observable(double theta, double phi, std::size_t subsystem) {
  const double ux = std::cos(theta) * std::sin(phi);
  const double uy = std::sin(theta) * std::sin(phi);
  const double uz = std::cos(phi);
  const Matrix u_sigma = ux * pauli_x() + uy * pauli_y() + uz * pauli_z();
  const Matrix plus = 0.5 * (identity(2) + u_sigma);
  const Matrix minus = 0.5 * (identity(2) - u_sigma);
  return Observable({plus, minus}, {1.0, -1.0}, subsystem);
}

Observable computational_observable(std::size_t d, std::size_t subsystem, const Dims& dims) {
  if (subsystem >= dims.size() || dims[subsystem] != d) {
    throw Error(ErrorCode::DimensionMismatch,
                "subsystem " + std::to_string(subsystem) + " does not have dimension " +
                    std::to_string(d));
  }
  std::vector<Matrix> projectors;
  std::vector<double> labels;
  for (std::size_t a = 0; a < d; ++a) {
    projectors.push_back(basis_projector(d, a));
    labels.push_back(static_cast<double>(a));
  }
  return Observable(std::move(projectors), std::move(labels), subsystem);
}

Observable computational_observable(std::size_t d) { return computational_observable(d, 0, Dims{d}); }

DensityMatrix random_density(std::size_t d, std::size_t rank, Rng& rng) {
  return random_density(Dims{d}, rank, rng);
}

DensityMatrix random_density(std::size_t d, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(d, rank, rng);
}

DensityMatrix random_density(const Dims& dims, std::size_t rank, Rng& rng) {
  const std::size_t d = dims_product(dims);
  if (d == 0 || rank < 1 || rank > d) {
    throw Error(ErrorCode::OutOfRange,
                "rank must lie in [1, " + std::to_string(d) + "], got " + std::to_string(rank),
                static_cast<double>(rank));
  }
  const Matrix g = ginibre(d, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= trace_real(rho);
  return DensityMatrix(rho, dims);
}

Matrix haar_unitary(std::size_t d, Rng& rng) {
  const Matrix z = ginibre(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const Complex diag = r(i, i);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(i) *= diag / mag;
  }
  return q;
}

DensityMatrix random_pure(const Dims& dims, Rng& rng) {
  const Matrix u = haar_unitary(dims_product(dims), rng);
  const Vector ket = u.col(0);
  return DensityMatrix(outer(ket), dims);
}

DensityMatrix random_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(dims, rng);
}

Observable random_observable(std::size_t d, Rng& rng, std::size_t subsystem) {
  if (d < 1) throw Error(ErrorCode::OutOfRange, "observable dimension must be >= 1");
  const Matrix g = ginibre(d, d, rng);
  const EigenDecomposition eig = hermitian_eig(0.5 * (g + g.adjoint()));
  std::vector<Matrix> projectors;
  std::vector<double> labels;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    projectors.push_back(outer(eig.eigenvectors.col(i)));
    labels.push_back(eig.eigenvalues(i));
  }
  return Observable(std::move(projectors), std::move(labels), subsystem);
}

Observable random_observable(std::size_t d, std::uint64_t seed, std::size_t subsystem) {
  Rng rng(seed);
  return random_observable(d, rng, subsystem);
}

}  // namespace vqr
