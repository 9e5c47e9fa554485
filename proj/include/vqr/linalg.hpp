#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace vqr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Dims = std::vector<std::size_t>;

// Max entrywise deviation of m - m^dagger allowed for "Hermitian" inputs.
inline constexpr double kHermitianTol = 1e-9;
// Eigenvalues in [-kPsdTol, 0) are treated as roundoff and clipped to zero.
inline constexpr double kPsdTol = 1e-10;
// Eigenvalues closer than this are treated as one degenerate cluster.
inline constexpr double kDegeneracyGap = 1e-9;

Matrix from_row_major(std::size_t dim, std::span<const Complex> entries);
std::vector<Complex> to_row_major(const Matrix& m);

Matrix identity(std::size_t dim);
Matrix basis_projector(std::size_t dim, std::size_t index);
Matrix outer(const Vector& ket);
Matrix dagger(const Matrix& m);
Matrix commutator(const Matrix& a, const Matrix& b);
double trace_real(const Matrix& m);

std::size_t dims_product(const Dims& dims);

// Max |m_ij - conj(m_ji)|; throws DimensionMismatch for non-square input.
double hermiticity_defect(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = kHermitianTol);
bool is_unitary(const Matrix& m, double tol = 1e-9);

struct EigenDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns, unitary

  Matrix reconstruct() const;
};

/// Eigendecomposition of a Hermitian matrix.
///
/// Output is deterministic for a fixed input: inside each degenerate cluster
/// the basis is rebuilt by Gram-Schmidt over the cluster projector's columns
/// in index order, and every column is phased so that its first component of
/// non-negligible size is real and positive.
EigenDecomposition hermitian_eig(const Matrix& m);

/// Which eigenvalues a spectral function accepts.
enum class SpectralDomain {
  Real,        // any real eigenvalue
  NonNegative  // PSD clip: [-kPsdTol, 0) -> 0, below -kPsdTol is an error
};

/// V diag(f(lambda)) V^dagger for Hermitian m.
Matrix matrix_function(const Matrix& m, const std::function<double(double)>& f,
                       SpectralDomain domain = SpectralDomain::Real);

/// Spectrum of a nominally PSD matrix after clipping. Besides the kPsdTol
/// clip, eigenvalues below the roundoff floor of the decomposition itself
/// (64 * dim * eps * max(1, lambda_max)) are set to exactly zero so that
/// fractional powers do not amplify roundoff on rank-deficient inputs.
EigenDecomposition psd_eig(const Matrix& m);
double roundoff_floor(std::size_t dim, double scale);

Matrix sqrt_psd(const Matrix& m);
/// m^alpha on the support of m; 0^alpha := 0 for every alpha.
Matrix power_psd(const Matrix& m, double alpha);

/// [Tr |X|^p]^(1/p). Hermitian inputs use |eigenvalues|, others singular
/// values. Throws InvalidOrder for p < 1.
double schatten_norm(const Matrix& m, double p);
/// Tr |X|^p without the outer root.
double schatten_power(const Matrix& m, double p);
RealVector singular_values(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_all(std::span<const Matrix> factors);

/// Traces out every subsystem not listed in `keep`. Kept subsystems stay in
/// their original order.
Matrix partial_trace(const Matrix& m, const Dims& dims, const std::vector<std::size_t>& keep);

/// I x ... x op x ... x I with op on `subsystem`.
Matrix embed(const Matrix& op, std::size_t subsystem, const Dims& dims);
/// embed(op, subsystem, dims) * m without forming the embedded operator.
Matrix apply_local(const Matrix& op, std::size_t subsystem, const Dims& dims, const Matrix& m);

}  // namespace vqr
