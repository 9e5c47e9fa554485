#include "vqr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "vqr/error.hpp"

namespace vqr {

namespace {

// Weight of rho outside supp(sigma) above which a divergence is infinite.
constexpr double kSupportTol = 1e-10;

void require_same_shape(const Matrix& rho, const Matrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols() || rho.rows() != rho.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "operands have shapes " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                    " and " + std::to_string(sigma.rows()) + "x" + std::to_string(sigma.cols()));
  }
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidAlpha, "alpha must lie in (0,1) or (1,inf), got " + std::to_string(alpha),
                alpha);
  }
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

// rho's weight on the kernel of sigma.
double weight_outside_support(const Matrix& rho, const EigenDecomposition& sigma) {
  double weight = 0.0;
  for (Eigen::Index j = 0; j < sigma.eigenvalues.size(); ++j) {
    if (sigma.eigenvalues(j) == 0.0) {
      const auto w = sigma.eigenvectors.col(j);
      weight += std::max(0.0, (w.adjoint() * rho * w)(0, 0).real());
    }
  }
  return weight;
}

DivergenceValue finish_renyi(double q, double trace_rho, double alpha) {
  if (q <= 0.0) return DivergenceValue::infinite();
  return {std::log(q / trace_rho) / (alpha - 1.0), false};
}

}  // namespace

DistanceKind DistanceKind::trace(double exponent) { return {DistanceFamily::Trace, 1.0, exponent}; }
DistanceKind DistanceKind::hilbert_schmidt(double exponent) {
  return {DistanceFamily::HilbertSchmidt, 2.0, exponent};
}
DistanceKind DistanceKind::lp(double p, double exponent) {
  if (!(p >= 1.0)) throw Error(ErrorCode::InvalidOrder, "L_p order must be >= 1", p);
  return {DistanceFamily::Lp, p, exponent};
}
DistanceKind DistanceKind::bures(double exponent) { return {DistanceFamily::Bures, 0.0, exponent}; }
DistanceKind DistanceKind::hellinger(double exponent) { return {DistanceFamily::Hellinger, 0.0, exponent}; }

double DistanceKind::order() const {
  switch (family) {
    case DistanceFamily::Trace: return 1.0;
    case DistanceFamily::HilbertSchmidt: return 2.0;
    default: return p;
  }
}

bool DistanceKind::is_schatten() const {
  return family == DistanceFamily::Trace || family == DistanceFamily::HilbertSchmidt ||
         family == DistanceFamily::Lp;
}

std::string DistanceKind::name() const {
  std::string base;
  switch (family) {
    case DistanceFamily::Trace: base = "tr"; break;
    case DistanceFamily::HilbertSchmidt: base = "hs"; break;
    case DistanceFamily::Lp: base = "lp" + format_number(p); break;
    case DistanceFamily::Bures: base = "bu"; break;
    case DistanceFamily::Hellinger: base = "he"; break;
  }
  if (exponent != 1.0) base += "^" + format_number(exponent);
  return base;
}

DivergenceKind DivergenceKind::von_neumann() { return {DivergenceFamily::VonNeumann, 1.0}; }
DivergenceKind DivergenceKind::renyi(double alpha) {
  require_alpha(alpha);
  return {DivergenceFamily::Renyi, alpha};
}
DivergenceKind DivergenceKind::sandwiched_renyi(double alpha) {
  require_alpha(alpha);
  return {DivergenceFamily::SandwichedRenyi, alpha};
}

std::string DivergenceKind::name() const {
  switch (family) {
    case DivergenceFamily::VonNeumann: return "vn";
    case DivergenceFamily::Renyi: return "renyi" + format_number(alpha);
    case DivergenceFamily::SandwichedRenyi: return "srenyi" + format_number(alpha);
  }
  return "?";
}

double lp_distance(const Matrix& rho, const Matrix& sigma, double p) {
  require_same_shape(rho, sigma);
  return schatten_norm(sigma - rho, p);
}

double trace_distance(const Matrix& rho, const Matrix& sigma) { return lp_distance(rho, sigma, 1.0); }

double hs_distance(const Matrix& rho, const Matrix& sigma) { return lp_distance(rho, sigma, 2.0); }

double fidelity(const Matrix& rho, const Matrix& sigma) {
  require_same_shape(rho, sigma);
  const RealVector sv = singular_values(sqrt_psd(sigma) * sqrt_psd(rho));
  const double nuclear = sv.sum();
  return nuclear * nuclear;
}

double bures_distance_sq(const Matrix& rho, const Matrix& sigma) {
  return 2.0 - 2.0 * std::sqrt(fidelity(rho, sigma));
}

double hellinger_distance_sq(const Matrix& rho, const Matrix& sigma) {
  require_same_shape(rho, sigma);
  return 2.0 - 2.0 * (sqrt_psd(sigma) * sqrt_psd(rho)).trace().real();
}

double distance(const DistanceKind& kind, const Matrix& rho, const Matrix& sigma) {
  switch (kind.family) {
    case DistanceFamily::Trace:
    case DistanceFamily::HilbertSchmidt:
    case DistanceFamily::Lp: {
      require_same_shape(rho, sigma);
      const double power = schatten_power(sigma - rho, kind.order());
      return std::pow(power, kind.exponent / kind.order());
    }
    case DistanceFamily::Bures:
      return std::pow(std::max(0.0, bures_distance_sq(rho, sigma)), kind.exponent / 2.0);
    case DistanceFamily::Hellinger:
      return std::pow(std::max(0.0, hellinger_distance_sq(rho, sigma)), kind.exponent / 2.0);
  }
  throw Error(ErrorCode::DomainError, "unknown distance family");
}

double von_neumann_entropy(const Matrix& rho) {
  const EigenDecomposition eig = psd_eig(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double x = eig.eigenvalues(i);
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

DivergenceValue relative_entropy(const Matrix& rho, const Matrix& sigma) {
  require_same_shape(rho, sigma);
  const EigenDecomposition r = psd_eig(rho);
  const EigenDecomposition s = psd_eig(sigma);
  if (weight_outside_support(rho, s) > kSupportTol) return DivergenceValue::infinite();

  double rho_log_rho = 0.0;
  for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
    const double x = r.eigenvalues(i);
    if (x > 0.0) rho_log_rho += x * std::log(x);
  }
  double rho_log_sigma = 0.0;
  for (Eigen::Index j = 0; j < s.eigenvalues.size(); ++j) {
    const double mu = s.eigenvalues(j);
    if (mu == 0.0) continue;
    const auto w = s.eigenvectors.col(j);
    rho_log_sigma += std::log(mu) * (w.adjoint() * rho * w)(0, 0).real();
  }
  return {rho_log_rho - rho_log_sigma, false};
}

DivergenceValue relative_entropy_variance(const Matrix& rho, const Matrix& sigma) {
  require_same_shape(rho, sigma);
  const EigenDecomposition r = psd_eig(rho);
  const EigenDecomposition s = psd_eig(sigma);
  if (weight_outside_support(rho, s) > kSupportTol) return DivergenceValue::infinite();
  const Eigen::MatrixXd overlap = (r.eigenvectors.adjoint() * s.eigenvectors).cwiseAbs2();
  double first = 0.0, second = 0.0;
  for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
    const double l = r.eigenvalues(i);
    if (l == 0.0) continue;
    for (Eigen::Index j = 0; j < s.eigenvalues.size(); ++j) {
      const double m = s.eigenvalues(j);
      if (m == 0.0) continue;
      const double gap = std::log(l) - std::log(m);
      first += l * overlap(i, j) * gap;
      second += l * overlap(i, j) * gap * gap;
    }
  }
  return {second - first * first, false};
}

// Spectral-overlap form: Tr(rho^a sigma^(1-a)) = sum_ij l_i^a m_j^(1-a) |<v_i|w_j>|^2.
DivergenceValue renyi_divergence(const Matrix& rho, const Matrix& sigma, double alpha) {
  require_alpha(alpha);
  require_same_shape(rho, sigma);
  const EigenDecomposition r = psd_eig(rho);
  const EigenDecomposition s = psd_eig(sigma);
  if (alpha > 1.0 && weight_outside_support(rho, s) > kSupportTol) return DivergenceValue::infinite();

  const Eigen::MatrixXd overlap = (r.eigenvectors.adjoint() * s.eigenvectors).cwiseAbs2();
  double q = 0.0;
  for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
    const double l = r.eigenvalues(i);
    if (l == 0.0) continue;
    for (Eigen::Index j = 0; j < s.eigenvalues.size(); ++j) {
      const double m = s.eigenvalues(j);
      if (m == 0.0) continue;
      q += std::pow(l, alpha) * std::pow(m, 1.0 - alpha) * overlap(i, j);
    }
  }
  return finish_renyi(q, trace_real(rho), alpha);
}

DivergenceValue sandwiched_renyi_divergence(const Matrix& rho, const Matrix& sigma, double alpha) {
  require_alpha(alpha);
  require_same_shape(rho, sigma);
  const EigenDecomposition s = psd_eig(sigma);
  if (alpha > 1.0 && weight_outside_support(rho, s) > kSupportTol) return DivergenceValue::infinite();

  const double power = (1.0 - alpha) / (2.0 * alpha);
  RealVector scaled = s.eigenvalues;
  for (Eigen::Index j = 0; j < scaled.size(); ++j) {
    scaled(j) = scaled(j) == 0.0 ? 0.0 : std::pow(scaled(j), power);
  }
  const Matrix sigma_pow = s.eigenvectors * scaled.cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
  const Matrix inner = sigma_pow * rho * sigma_pow;
  const EigenDecomposition m = psd_eig(0.5 * (inner + inner.adjoint()));
  double q = 0.0;
  for (Eigen::Index i = 0; i < m.eigenvalues.size(); ++i) {
    if (m.eigenvalues(i) > 0.0) q += std::pow(m.eigenvalues(i), alpha);
  }
  return finish_renyi(q, trace_real(rho), alpha);
}

DivergenceValue divergence(const DivergenceKind& kind, const Matrix& rho, const Matrix& sigma) {
  switch (kind.family) {
    case DivergenceFamily::VonNeumann: return relative_entropy(rho, sigma);
    case DivergenceFamily::Renyi: return renyi_divergence(rho, sigma, kind.alpha);
    case DivergenceFamily::SandwichedRenyi: return sandwiched_renyi_divergence(rho, sigma, kind.alpha);
  }
  throw Error(ErrorCode::DomainError, "unknown divergence family");
}

}  // namespace vqr
