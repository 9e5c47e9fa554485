#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "vqr/channels.hpp"
#include "vqr/error.hpp"
#include "vqr/harness.hpp"

namespace vqr::harness {

namespace {

struct RandomSystem {
  DensityMatrix rho;
  Observable a;
};

// d_A cycles through 2..4; every other instance carries a bystander of
// dimension 3 or 2, placed before or after A.
RandomSystem random_system(std::size_t t, Rng& rng) {
  const std::size_t d_a = 2 + t % 3;
  Dims dims;
  std::size_t sub = 0;
  switch ((t / 3) % 4) {
    case 0: dims = {d_a}; break;
    case 1: dims = {d_a, 3}; break;
    case 2: dims = {3, d_a}; sub = 1; break;
    default: dims = {d_a, 2}; break;
  }
  const std::size_t n = dims_product(dims);
  const std::size_t rank = 1 + (t / 12) % n;
  DensityMatrix rho = random_density(dims, rank, rng);
  return {std::move(rho), random_observable(d_a, rng, sub)};
}

VerifyRow max_over(const std::string& identity, std::size_t trials, std::uint64_t seed, double tol,
                   const std::function<double(std::size_t, Rng&)>& residual) {
  VerifyRow row{identity, trials, 0.0, tol};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(seed + t);
    const double r = residual(t, rng);
    // NaN must fail the row rather than vanish in std::max.
    row.max_residual = std::isnan(r) ? std::numeric_limits<double>::infinity() : std::max(row.max_residual, r);
  }
  return row;
}

struct PinchingFunction {
  const char* name;
  double (*f)(double);
};

double f_x(double x) { return x; }
double f_x2(double x) { return x * x; }
double f_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }
double f_exp(double x) { return std::exp(x); }

}  // namespace

bool VerifyResult::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass(); });
}

const VerifyRow& VerifyResult::row(const std::string& identity) const {
  for (const VerifyRow& r : rows) {
    if (r.identity == identity) return r;
  }
  throw Error(ErrorCode::OutOfRange, "no verify row named '" + identity + "'");
}

VerifyResult run_verify(const SweepSpec& spec) {
  spec.validate();
  VerifyResult result;
  result.hash = spec_hash(spec);
  const std::size_t n = spec.trials;
  const std::uint64_t seed = spec.seed;

  for (const PinchingFunction& pf : {PinchingFunction{"x", f_x}, PinchingFunction{"x2", f_x2},
                                     PinchingFunction{"sqrt", f_sqrt}, PinchingFunction{"exp", f_exp}}) {
    result.rows.push_back(max_over("pinching_trace_invariance_" + std::string(pf.name), n, seed, 1e-9,
                                   [&](std::size_t t, Rng& rng) {
                                     RandomSystem s = random_system(t, rng);
                                     const DensityMatrix sigma = random_density(s.rho.dims(), s.rho.dim(), rng);
                                     const Matrix measured_sigma =
                                         measure_nonselective(sigma.matrix(), s.a, sigma.dims());
                                     const Matrix g = matrix_function(measured_sigma, pf.f);
                                     const Matrix measured_rho = measure_nonselective(s.rho.matrix(), s.a, s.rho.dims());
                                     return std::abs((s.rho.matrix() * g).trace() - (measured_rho * g).trace());
                                   }));
  }

  result.rows.push_back(max_over("hs_pythagoras", n, seed, 1e-10, [](std::size_t t, Rng& rng) {
    RandomSystem s = random_system(t, rng);
    const Matrix m = measure_nonselective(s.rho.matrix(), s.a, s.rho.dims());
    const double lhs = s.rho.matrix().squaredNorm() - m.squaredNorm();
    return std::abs(lhs - (s.rho.matrix() - m).squaredNorm());
  }));

  for (const MonotoneKind& kind : parse_monotone_kinds("tr,hs,lp1.5,lp3,bu,he,vn")) {
    result.rows.push_back(max_over("closed_form_vs_dilation_" + kind.name(), n, seed, 1e-9,
                                   [&](std::size_t t, Rng& rng) {
                                     RandomSystem s = random_system(t, rng);
                                     return std::abs(delta_information_closed_form(s.rho, s.a, kind) -
                                                     delta_information_full_space(s.rho, s.a, kind));
                                   }));
  }

  result.rows.push_back(max_over("dilation_reduction", n, seed, 1e-10, [](std::size_t t, Rng& rng) {
    RandomSystem s = random_system(t, rng);
    return build_dilation(s.rho, s.a).reduction_residual();
  }));
  result.rows.push_back(max_over("dilation_fixed_point", n, seed, 1e-10, [](std::size_t t, Rng& rng) {
    RandomSystem s = random_system(t, rng);
    return build_dilation(s.rho, s.a).invariance_residual();
  }));

  // Pairs of full-rank and rank-deficient states; generic pairs do not commute.
  const auto random_pair = [](std::size_t t, Rng& rng) {
    const std::size_t d = 2 + t % 3;
    const std::size_t rank = t % 4 == 3 ? 1 + (t / 4) % d : d;
    DensityMatrix rho = random_density(d, rank, rng);
    DensityMatrix sigma = random_density(d, d, rng);
    return std::pair{std::move(rho), std::move(sigma)};
  };
  result.rows.push_back(max_over("bures_sandwiched_renyi", n, seed, 1e-9, [&](std::size_t t, Rng& rng) {
    const auto [rho, sigma] = random_pair(t, rng);
    const double d = sandwiched_renyi_divergence(rho, sigma, 0.5).value;
    return std::abs(bures_distance_sq(rho, sigma) - (2.0 - 2.0 * std::exp(-0.5 * d)));
  }));
  result.rows.push_back(max_over("hellinger_petz_renyi", n, seed, 1e-9, [&](std::size_t t, Rng& rng) {
    const auto [rho, sigma] = random_pair(t, rng);
    const double d = renyi_divergence(rho, sigma, 0.5).value;
    return std::abs(hellinger_distance_sq(rho, sigma) - (2.0 - 2.0 * std::exp(-0.5 * d)));
  }));

  const auto full_rank_pair = [](std::size_t t, Rng& rng) {
    const std::size_t d = 2 + t % 3;
    DensityMatrix rho = random_density(d, d, rng);
    DensityMatrix sigma = random_density(d, d, rng);
    return std::pair{std::move(rho), std::move(sigma)};
  };
  for (const bool sandwiched : {false, true}) {
    result.rows.push_back(max_over(sandwiched ? "sandwiched_renyi_alpha_limit" : "renyi_alpha_limit", n, seed,
                                   1e-3, [&](std::size_t t, Rng& rng) {
                                     const auto [rho, sigma] = full_rank_pair(t, rng);
                                     const double s = relative_entropy(rho, sigma).value;
                                     double worst = 0.0;
                                     for (double alpha : {1.0 - 1e-4, 1.0 + 1e-4}) {
                                       const double d = sandwiched ? sandwiched_renyi_divergence(rho, sigma, alpha).value
                                                                   : renyi_divergence(rho, sigma, alpha).value;
                                       worst = std::max(worst, std::abs(d - s));
                                     }
                                     return worst;
                                   }));
  }

  // The limit rows above see the first-order term (alpha - 1) V / 2; these
  // check that slope directly by central differences.
  for (const bool sandwiched : {false, true}) {
    result.rows.push_back(max_over(sandwiched ? "sandwiched_renyi_alpha_slope" : "renyi_alpha_slope", n, seed,
                                   1e-4, [&](std::size_t t, Rng& rng) {
                                     const auto [rho, sigma] = full_rank_pair(t, rng);
                                     const double h = 1e-4;
                                     const auto d = [&](double alpha) {
                                       return sandwiched ? sandwiched_renyi_divergence(rho, sigma, alpha).value
                                                         : renyi_divergence(rho, sigma, alpha).value;
                                     };
                                     const double slope = (d(1.0 + h) - d(1.0 - h)) / (2.0 * h);
                                     const double half_variance = 0.5 * relative_entropy_variance(rho, sigma).value;
                                     return std::abs(slope - half_variance) / std::max(1.0, half_variance);
                                   }));
  }

  result.rows.push_back(max_over("relative_entropy_irrealism", n, seed, 1e-9, [](std::size_t t, Rng& rng) {
    RandomSystem s = random_system(t, rng);
    const Matrix m = measure_nonselective(s.rho.matrix(), s.a, s.rho.dims());
    return std::abs(relative_entropy(s.rho, m).value - irrealism(s.rho, s.a));
  }));
  result.rows.push_back(max_over("irrealism_coherence_discord", n, seed, 1e-9, [](std::size_t t, Rng& rng) {
    RandomSystem s = random_system(t, rng);
    const IrrealismDecomposition parts = irrealism_decomposition(s.rho, s.a);
    return std::abs(parts.coherence + parts.discord - irrealism(s.rho, s.a));
  }));
  result.rows.push_back(max_over("conditional_information_split", n, seed, 1e-9, [](std::size_t t, Rng& rng) {
    const std::size_t d_s = 2 + t % 3;
    const std::size_t d_e = 2 + (t / 3) % 3;
    const DensityMatrix omega = random_density(Dims{d_s, d_e}, 1 + (t / 9) % (d_s * d_e), rng);
    const double local = std::log(static_cast<double>(d_e)) - von_neumann_entropy(partial_trace(omega, omega.dims(), {1}));
    const double correlations = mutual_information(omega, omega.dims(), {0});
    return std::abs(conditional_information_entropic(omega) - (local + correlations));
  }));
  return result;
}

Json to_json(const VerifyResult& result) {
  Json rows = Json::array();
  for (const VerifyRow& r : result.rows) {
    Json j;
    j["identity"] = r.identity;
    j["trials"] = r.trials;
    j["max_residual"] = r.max_residual;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass();
    rows.push_back(std::move(j));
  }
  Json out;
  out["spec_hash"] = result.hash;
  out["all_pass"] = result.all_pass();
  out["rows"] = std::move(rows);
  return out;
}

std::vector<DistanceKind> table_distance_kinds() {
  return {DistanceKind::trace(),          DistanceKind::hilbert_schmidt(), DistanceKind::hilbert_schmidt(2.0),
          DistanceKind::lp(1.5),          DistanceKind::lp(1.5, 1.5),      DistanceKind::lp(3.0),
          DistanceKind::lp(3.0, 3.0),     DistanceKind::bures(),           DistanceKind::bures(2.0),
          DistanceKind::hellinger(),      DistanceKind::hellinger(2.0)};
}

bool PropertiesResult::all_match() const {
  return std::all_of(reports.begin(), reports.end(), [this](const PropertyReport& r) { return matches(r); });
}

PropertiesResult run_properties(const SweepSpec& spec) {
  spec.validate();
  PropertiesResult result;
  result.hash = spec_hash(spec);
  for (const DistanceKind& kind : table_distance_kinds()) {
    for (PropertyReport& r : check_distance_properties(kind, spec.trials, spec.seed)) {
      result.reports.push_back(std::move(r));
    }
  }
  return result;
}

Json to_json(const PropertiesResult& result) {
  Json reports = Json::array();
  for (const PropertyReport& r : result.reports) {
    Json j = property_report_to_json(r);
    j["expected"] = expected_property(r.kind, r.property) ? "holds" : "fails";
    j["matches"] = result.matches(r);
    reports.push_back(std::move(j));
  }
  Json out;
  out["spec_hash"] = result.hash;
  out["all_match"] = result.all_match();
  out["reports"] = std::move(reports);
  return out;
}

}  // namespace vqr::harness
