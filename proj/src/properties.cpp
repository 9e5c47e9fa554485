#include "vqr/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "vqr/channels.hpp"
#include "vqr/states.hpp"

namespace vqr {

namespace {

constexpr double kIdentityTol = 1e-10;
constexpr double kDistinctFloor = 1e-12;
constexpr double kInvarianceTol = 1e-9;
constexpr double kSymmetryTol = 1e-10;
constexpr double kInequalityTol = 1e-9;

std::size_t trial_dim(std::size_t t) { return 2 + t % 3; }

std::size_t trial_rank(std::size_t t, std::size_t d) { return 1 + (t / 3) % d; }

// Runs `trial` for each index; the callback returns the signed excess over
// its bound (positive means violated).
PropertyReport run_trials(const DistanceKind& kind, DistanceProperty property, std::size_t trials,
                          std::uint64_t seed, const std::function<double(std::size_t, Rng&)>& trial) {
  PropertyReport report;
  report.kind = kind;
  report.property = property;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + t;
    Rng rng(trial_seed);
    const double excess = trial(t, rng);
    if (excess > 0.0) {
      ++report.violations;
      if (excess > report.worst_case || !report.example_seed) {
        report.worst_case = std::max(report.worst_case, excess);
        report.example_seed = trial_seed;
      }
    }
  }
  return report;
}

// Bu/He identity is judged on the squared value: the square root lifts
// roundoff of order 1e-16 to 1e-8.
double identity_value(const DistanceKind& kind, const Matrix& rho) {
  if (kind.family == DistanceFamily::Bures || kind.family == DistanceFamily::Hellinger) {
    DistanceKind squared = kind;
    squared.exponent = 2.0;
    return distance(squared, rho, rho);
  }
  return distance(kind, rho, rho);
}

double positive_definiteness(const DistanceKind& kind, std::size_t t, Rng& rng) {
  const std::size_t d = trial_dim(t);
  const DensityMatrix rho = random_density(d, trial_rank(t, d), rng);
  const DensityMatrix sigma = random_density(d, trial_rank(t + 1, d), rng);
  const double same = identity_value(kind, rho) - kIdentityTol;
  const double apart = kDistinctFloor - distance(kind, rho, sigma);
  return std::max(same, apart);
}

double unitary_invariance(const DistanceKind& kind, std::size_t t, Rng& rng) {
  const std::size_t d = trial_dim(t);
  const DensityMatrix rho = random_density(d, trial_rank(t, d), rng);
  const DensityMatrix sigma = random_density(d, d, rng);
  const Matrix u = haar_unitary(d, rng);
  const double before = distance(kind, rho, sigma);
  const double after = distance(kind, u * rho.matrix() * u.adjoint(), u * sigma.matrix() * u.adjoint());
  return std::abs(after - before) - kInvarianceTol;
}

double metric_axioms(const DistanceKind& kind, std::size_t t, Rng& rng) {
  const std::size_t d = trial_dim(t);
  const DensityMatrix a = random_density(d, trial_rank(t, d), rng);
  const DensityMatrix b = random_density(d, d, rng);
  const DensityMatrix c = random_density(d, trial_rank(t + 2, d), rng);
  const double ab = distance(kind, a, b);
  const double symmetry = std::abs(ab - distance(kind, b, a)) - kSymmetryTol;
  const double triangle = distance(kind, a, c) - (ab + distance(kind, b, c)) - kInequalityTol;
  return std::max(symmetry, triangle);
}

double joint_convexity(const DistanceKind& kind, std::size_t t, Rng& rng) {
  const std::size_t d = trial_dim(t);
  Matrix rho1, rho2, sigma1, sigma2;
  double w = 0.5;
  if (t % 2 == 0) {
    rho1 = random_density(d, trial_rank(t, d), rng);
    rho2 = random_density(d, d, rng);
    sigma1 = random_density(d, d, rng);
    sigma2 = random_density(d, trial_rank(t + 1, d), rng);
    w = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  } else {
    rho1 = random_density(d, d, rng);
    sigma1 = rho1;
    rho2 = random_pure(Dims{d}, rng);
    sigma2 = random_pure(Dims{d}, rng);
  }
  const double mixed = distance(kind, w * rho1 + (1.0 - w) * rho2, w * sigma1 + (1.0 - w) * sigma2);
  const double bound = w * distance(kind, rho1, sigma1) + (1.0 - w) * distance(kind, rho2, sigma2);
  return mixed - bound - kInequalityTol;
}

double contractivity(const DistanceKind& kind, std::size_t t, Rng& rng) {
  const std::size_t d = trial_dim(t);
  const DensityMatrix rho = random_density(d, trial_rank(t, d), rng);
  const DensityMatrix sigma = random_density(d, d, rng);
  Matrix in_rho, in_sigma, out_rho, out_sigma;
  switch (t % 3) {
    case 0: {
      const StinespringChannel channel = random_channel(d, d, 2, rng);
      in_rho = rho;
      in_sigma = sigma;
      out_rho = channel.apply(rho);
      out_sigma = channel.apply(sigma);
      break;
    }
    case 1: {
      const Matrix half = identity(2) / 2.0;
      in_rho = kron(rho.matrix(), half);
      in_sigma = kron(sigma.matrix(), half);
      out_rho = rho;
      out_sigma = sigma;
      break;
    }
    default: {
      const Observable a = random_observable(d, rng);
      in_rho = rho;
      in_sigma = sigma;
      out_rho = measure_nonselective(rho.matrix(), a, Dims{d});
      out_sigma = measure_nonselective(sigma.matrix(), a, Dims{d});
      break;
    }
  }
  return distance(kind, out_rho, out_sigma) - distance(kind, in_rho, in_sigma) - kInequalityTol;
}

}  // namespace

std::string to_string(DistanceProperty property) {
  switch (property) {
    case DistanceProperty::PositiveDefiniteness: return "positive_definiteness";
    case DistanceProperty::UnitaryInvariance: return "unitary_invariance";
    case DistanceProperty::Metric: return "metric_axioms";
    case DistanceProperty::JointConvexity: return "joint_convexity";
    case DistanceProperty::Contractivity: return "contractivity";
  }
  return "?";
}

bool expected_property(const DistanceKind& kind, DistanceProperty property) {
  const bool fidelity_based = kind.family == DistanceFamily::Bures || kind.family == DistanceFamily::Hellinger;
  switch (property) {
    case DistanceProperty::PositiveDefiniteness:
    case DistanceProperty::UnitaryInvariance:
      return true;
    case DistanceProperty::Metric:
      return kind.exponent == 1.0;
    case DistanceProperty::JointConvexity:
      return !(fidelity_based && kind.exponent < 2.0);
    case DistanceProperty::Contractivity:
      return !kind.is_schatten() || kind.order() == 1.0;
  }
  return false;
}

std::vector<PropertyReport> check_distance_properties(const DistanceKind& kind, std::size_t trials,
                                                      std::uint64_t seed) {
  std::vector<PropertyReport> out;
  out.push_back(run_trials(kind, DistanceProperty::PositiveDefiniteness, trials, seed,
                           [&](std::size_t t, Rng& rng) { return positive_definiteness(kind, t, rng); }));
  out.push_back(run_trials(kind, DistanceProperty::UnitaryInvariance, trials, seed,
                           [&](std::size_t t, Rng& rng) { return unitary_invariance(kind, t, rng); }));
  if (kind.exponent == 1.0) {
    out.push_back(run_trials(kind, DistanceProperty::Metric, trials, seed,
                             [&](std::size_t t, Rng& rng) { return metric_axioms(kind, t, rng); }));
  }
  out.push_back(run_trials(kind, DistanceProperty::JointConvexity, trials, seed,
                           [&](std::size_t t, Rng& rng) { return joint_convexity(kind, t, rng); }));
  out.push_back(run_trials(kind, DistanceProperty::Contractivity, trials, seed,
                           [&](std::size_t t, Rng& rng) { return contractivity(kind, t, rng); }));
  return out;
}

}  // namespace vqr
