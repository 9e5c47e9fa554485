#include "vqr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "vqr/error.hpp"

namespace vqr {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": expected a non-empty square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void fix_phase(Eigen::Ref<Vector> v) {
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= 0.5 * peak) {
      v *= std::conj(v(i)) / std::abs(v(i));
      return;
    }
  }
}

// Deterministic orthonormal basis of the range of the projector V V^dagger.
Matrix canonical_cluster_basis(const Matrix& cluster) {
  const Eigen::Index n = cluster.rows();
  const Eigen::Index k = cluster.cols();
  const Matrix projector = cluster * cluster.adjoint();
  Matrix basis(n, k);
  Eigen::Index accepted = 0;
  const double threshold = 0.5 / static_cast<double>(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto residual_of = [&](Eigen::Index j) {
    Vector r = projector.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index c = 0; c < accepted; ++c) {
        r -= basis.col(c) * basis.col(c).dot(r);
      }
    }
    return r;
  };

  for (Eigen::Index j = 0; j < n && accepted < k; ++j) {
    Vector r = residual_of(j);
    if (r.squaredNorm() >= threshold) {
      basis.col(accepted++) = r.normalized();
      used[static_cast<std::size_t>(j)] = true;
    }
  }
  // Index-order scan can stall on badly aligned clusters; fall back to the
  // largest remaining residual.
  while (accepted < k) {
    Eigen::Index best = -1;
    double best_norm = -1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double norm = residual_of(j).squaredNorm();
      if (norm > best_norm) {
        best_norm = norm;
        best = j;
      }
    }
    if (best < 0 || best_norm <= 0.0) {
      throw Error(ErrorCode::NumericalFailure, "degenerate eigenspace basis collapsed");
    }
    basis.col(accepted++) = residual_of(best).normalized();
    used[static_cast<std::size_t>(best)] = true;
  }
  return basis;
}

}  // namespace

Matrix from_row_major(std::size_t dim, std::span<const Complex> entries) {
  if (dim == 0 || entries.size() != dim * dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "row-major data of length " + std::to_string(entries.size()) +
                    " does not describe a " + std::to_string(dim) + "x" + std::to_string(dim) +
                    " matrix");
  }
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entries[r * dim + c];
    }
  }
  return m;
}

std::vector<Complex> to_row_major(const Matrix& m) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  }
  return out;
}

Matrix identity(std::size_t dim) {
  return Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

Matrix basis_projector(std::size_t dim, std::size_t index) {
  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  p(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
  return p;
}

Matrix outer(const Vector& ket) { return ket * ket.adjoint(); }

Matrix dagger(const Matrix& m) { return m.adjoint(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double trace_real(const Matrix& m) { return m.trace().real(); }

std::size_t dims_product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

double hermiticity_defect(const Matrix& m) {
  require_square(m, "hermiticity check");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) { return hermiticity_defect(m) <= tol; }

bool is_unitary(const Matrix& m, double tol) {
  require_square(m, "unitarity check");
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

Matrix EigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

EigenDecomposition hermitian_eig(const Matrix& m) {
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    throw Error(ErrorCode::NotHermitian,
                "matrix deviates from its adjoint by " + std::to_string(defect), defect);
  }
  const Matrix symmetric = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  }
  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};

  const Eigen::Index n = out.eigenvalues.size();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && out.eigenvalues(end) - out.eigenvalues(end - 1) < kDegeneracyGap) ++end;
    const Eigen::Index size = end - start;
    if (size > 1) {
      out.eigenvectors.middleCols(start, size) =
          canonical_cluster_basis(out.eigenvectors.middleCols(start, size));
    } else {
      fix_phase(out.eigenvectors.col(start));
    }
    start = end;
  }
  return out;
}

double roundoff_floor(std::size_t dim, double scale) {
  return 64.0 * static_cast<double>(dim) * std::numeric_limits<double>::epsilon() *
         std::max(1.0, scale);
}

EigenDecomposition psd_eig(const Matrix& m) {
  EigenDecomposition eig = hermitian_eig(m);
  const Eigen::Index n = eig.eigenvalues.size();
  const double lowest = eig.eigenvalues(0);
  if (lowest < -kPsdTol) {
    throw Error(ErrorCode::DomainError,
                "eigenvalue " + std::to_string(lowest) + " is below the PSD tolerance", lowest);
  }
  const double floor = roundoff_floor(static_cast<std::size_t>(n), eig.eigenvalues(n - 1));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (eig.eigenvalues(i) <= floor) eig.eigenvalues(i) = 0.0;
  }
  return eig;
}

Matrix matrix_function(const Matrix& m, const std::function<double(double)>& f,
                       SpectralDomain domain) {
  EigenDecomposition eig = domain == SpectralDomain::NonNegative ? psd_eig(m) : hermitian_eig(m);
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double value = f(eig.eigenvalues(i));
    if (!std::isfinite(value)) {
      throw Error(ErrorCode::DomainError,
                  "spectral function is undefined at eigenvalue " +
                      std::to_string(eig.eigenvalues(i)),
                  eig.eigenvalues(i));
    }
    eig.eigenvalues(i) = value;
  }
  return eig.reconstruct();
}

Matrix sqrt_psd(const Matrix& m) {
  return matrix_function(m, [](double x) { return std::sqrt(x); }, SpectralDomain::NonNegative);
}

Matrix power_psd(const Matrix& m, double alpha) {
  return matrix_function(
      m, [alpha](double x) { return x == 0.0 ? 0.0 : std::pow(x, alpha); },
      SpectralDomain::NonNegative);
}

RealVector singular_values(const Matrix& m) {
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues();
}

double schatten_power(const Matrix& m, double p) {
  if (!(p >= 1.0)) {
    throw Error(ErrorCode::InvalidOrder, "Schatten order must be >= 1, got " + std::to_string(p), p);
  }
  require_square(m, "schatten norm");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  RealVector values;
  if (hermiticity_defect(m) <= 1e-12 * scale) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
    }
    values = solver.eigenvalues().cwiseAbs();
  } else {
    values = singular_values(m);
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) total += std::pow(values(i), p);
  return total;
}

double schatten_norm(const Matrix& m, double p) {
  return std::pow(schatten_power(m, p), 1.0 / p);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix kron_all(std::span<const Matrix> factors) {
  Matrix out = Matrix::Ones(1, 1);
  for (const Matrix& f : factors) out = kron(out, f);
  return out;
}

Matrix partial_trace(const Matrix& m, const Dims& dims, const std::vector<std::size_t>& keep) {
  require_square(m, "partial trace");
  const std::size_t total = dims_product(dims);
  if (dims.empty() || total != static_cast<std::size_t>(m.rows())) {
    throw Error(ErrorCode::DimensionMismatch,
                "subsystem dimensions multiply to " + std::to_string(total) + " but matrix is " +
                    std::to_string(m.rows()) + "-dimensional");
  }
  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (kept.empty() || std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
      kept.back() >= dims.size()) {
    throw Error(ErrorCode::DimensionMismatch, "invalid set of kept subsystems");
  }

  const std::size_t n = dims.size();
  std::vector<bool> is_kept(n, false);
  for (std::size_t k : kept) is_kept[k] = true;

  // Row-major strides of the full space.
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t s = n - 1; s-- > 0;) stride[s] = stride[s + 1] * dims[s + 1];

  std::size_t kept_dim = 1;
  for (std::size_t k : kept) kept_dim *= dims[k];
  std::vector<std::size_t> kept_stride(n, 0);
  {
    std::size_t acc = 1;
    for (std::size_t s = n; s-- > 0;) {
      if (is_kept[s]) {
        kept_stride[s] = acc;
        acc *= dims[s];
      }
    }
  }

  // For every full index: position in the reduced space and the offset that
  // the kept digits contribute to the full index.
  std::vector<std::size_t> reduced(total), kept_offset(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = 0, off = 0;
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t digit = (idx / stride[s]) % dims[s];
      if (is_kept[s]) {
        r += digit * kept_stride[s];
        off += digit * stride[s];
      }
    }
    reduced[idx] = r;
    kept_offset[idx] = off;
  }
  // Full index of each reduced basis state with all traced digits zero.
  std::vector<std::size_t> kept_full(kept_dim);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (kept_offset[idx] == idx) kept_full[reduced[idx]] = idx;
  }

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(kept_dim), static_cast<Eigen::Index>(kept_dim));
  for (std::size_t row = 0; row < total; ++row) {
    const std::size_t traced_part = row - kept_offset[row];
    for (std::size_t c = 0; c < kept_dim; ++c) {
      const std::size_t col = kept_full[c] + traced_part;
      out(static_cast<Eigen::Index>(reduced[row]), static_cast<Eigen::Index>(c)) +=
          m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
  }
  return out;
}

Matrix embed(const Matrix& op, std::size_t subsystem, const Dims& dims) {
  if (subsystem >= dims.size() || static_cast<std::size_t>(op.rows()) != dims[subsystem] ||
      op.rows() != op.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator does not match subsystem " + std::to_string(subsystem));
  }
  std::size_t before = 1, after = 1;
  for (std::size_t s = 0; s < subsystem; ++s) before *= dims[s];
  for (std::size_t s = subsystem + 1; s < dims.size(); ++s) after *= dims[s];
  return kron(kron(identity(before), op), identity(after));
}

Matrix apply_local(const Matrix& op, std::size_t subsystem, const Dims& dims, const Matrix& m) {
  if (subsystem >= dims.size() || static_cast<std::size_t>(op.rows()) != dims[subsystem] ||
      op.rows() != op.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator does not match subsystem " + std::to_string(subsystem));
  }
  if (static_cast<std::size_t>(m.rows()) != dims_product(dims)) {
    throw Error(ErrorCode::DimensionMismatch, "operand does not match the declared subsystems");
  }
  const Eigen::Index d = op.rows();
  Eigen::Index before = 1, after = 1;
  for (std::size_t s = 0; s < subsystem; ++s) before *= static_cast<Eigen::Index>(dims[s]);
  for (std::size_t s = subsystem + 1; s < dims.size(); ++s) after *= static_cast<Eigen::Index>(dims[s]);
  // Rows of m split as (l, j, r); contract j with op one (l, r) slab at a time.
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  Matrix slab(d, m.cols());
  for (Eigen::Index l = 0; l < before; ++l) {
    for (Eigen::Index r = 0; r < after; ++r) {
      const Eigen::Index base = l * d * after + r;
      for (Eigen::Index j = 0; j < d; ++j) slab.row(j) = m.row(base + j * after);
      const Matrix mixed = op * slab;
      for (Eigen::Index i = 0; i < d; ++i) out.row(base + i * after) = mixed.row(i);
    }
  }
  return out;
}

}  // namespace vqr
