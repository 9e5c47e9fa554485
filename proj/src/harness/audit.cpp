#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "vqr/channels.hpp"
#include "vqr/error.hpp"
#include "vqr/harness.hpp"

namespace vqr::harness {

namespace {

constexpr double kChainTol = 1e-10;
constexpr double kBoundTol = 1e-9;
// Below this distance from its measured image a state counts as nearly real
// and is not used to judge faithfulness or equality conditions.
constexpr double kFaithfulGap = 1e-3;
constexpr double kStructureTol = 1e-6;

double realism_of(const DensityMatrix& rho, const Observable& a, const MonotoneKind& kind) {
  return realism(rho, a, kind).r_value;
}

DensityMatrix diag_qubit(double p) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = p;
  m(1, 1) = 1.0 - p;
  return DensityMatrix(m);
}

std::size_t rank_for(std::size_t t, std::size_t dim) { return 1 + (t / 2) % dim; }

// Axiom trial: signed excess over the allowed bound, positive = violated.
using Trial = std::function<double(const MonotoneKind&, std::size_t, Rng&)>;
using Structured = std::function<double(const MonotoneKind&)>;

double measurement_check(const MonotoneKind& kind, const DensityMatrix& rho, const Observable& a, double eps) {
  const double r_max = realism_max(kind, a.outcomes());
  const double r0 = realism_of(rho, a, kind);
  const double r1 = realism_of(monitor(rho, a, eps), a, kind);
  const double r2 = realism_of(measure_nonselective(rho, a), a, kind);
  double excess = std::max({r0 - r1, r1 - r2, std::abs(r2 - r_max)}) - kChainTol;
  const double gap = trace_distance(rho, measure_nonselective(rho.matrix(), a, rho.dims()));
  if (gap > kFaithfulGap && r_max - r0 <= kVqrTol) excess = std::max(excess, gap);
  return excess;
}

double measurement_trial(const MonotoneKind& kind, std::size_t t, Rng& rng) {
  const std::size_t d_a = 2 + t % 2;
  const DensityMatrix rho = random_density(Dims{d_a, 2}, rank_for(t, 2 * d_a), rng);
  const Observable a = random_observable(d_a, rng, 0);
  const double eps = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return measurement_check(kind, rho, a, eps);
}

double part_discard_check(const MonotoneKind& kind, const DensityMatrix& rho, const Observable& a) {
  Dims kept_dims(rho.dims().begin(), rho.dims().end() - 1);
  std::vector<std::size_t> keep(kept_dims.size());
  for (std::size_t s = 0; s < keep.size(); ++s) keep[s] = s;
  const DensityMatrix reduced(partial_trace(rho, rho.dims(), keep), kept_dims);
  return realism_of(rho, a, kind) - realism_of(reduced, a, kind) - kChainTol;
}

double part_discard_trial(const MonotoneKind& kind, std::size_t t, Rng& rng) {
  const DensityMatrix rho = random_density(Dims{2, 2, 2}, 1 + t % 8, rng);
  return part_discard_check(kind, rho, random_observable(2, rng, 0));
}

double uncorrelated_check(const MonotoneKind& kind, const DensityMatrix& rho, const DensityMatrix& sigma,
                          const Observable& a) {
  return std::abs(realism_of(product(rho, sigma), a, kind) - realism_of(rho, a, kind)) - kChainTol;
}

double uncorrelated_trial(const MonotoneKind& kind, std::size_t t, Rng& rng) {
  const DensityMatrix rho = random_density(Dims{2, 2}, 1 + t % 4, rng);
  const DensityMatrix sigma = random_density(2, 2, rng);
  return uncorrelated_check(kind, rho, sigma, random_observable(2, rng, 0));
}

double uncertainty_check(const MonotoneKind& kind, const DensityMatrix& rho, const Observable& x,
                         const Observable& y) {
  const double r_max = realism_max(kind, 2);
  const double sum = realism_of(rho, x, kind) + realism_of(rho, y, kind);
  double excess = sum - 2.0 * r_max - kBoundTol;
  if (std::abs(sum - 2.0 * r_max) <= kBoundTol) {
    // Saturation is only allowed for commuting observables or a maximally
    // mixed first qubit uncorrelated with the rest.
    const double noncommuting = commutator(x.local_operator(), y.local_operator()).norm();
    const Matrix rest = partial_trace(rho, rho.dims(), {1});
    const double correlated = trace_distance(rho, kron(identity(2) / 2.0, rest));
    if (noncommuting > kStructureTol && correlated > kStructureTol) {
      excess = std::max(excess, std::min(noncommuting, correlated));
    }
  }
  return excess;
}

double uncertainty_trial(const MonotoneKind& kind, std::size_t t, Rng& rng) {
  const DensityMatrix rho = random_density(Dims{2, 2}, 1 + t % 4, rng);
  const Observable x = random_observable(2, rng, 0);
  const Observable y = random_observable(2, rng, 0);
  return uncertainty_check(kind, rho, x, y);
}

double mixing_check(const MonotoneKind& kind, const std::vector<DensityMatrix>& states,
                    const std::vector<double>& weights, const Observable& a) {
  Matrix mix = Matrix::Zero(states[0].matrix().rows(), states[0].matrix().cols());
  double average = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    mix += weights[i] * states[i].matrix();
    average += weights[i] * realism_of(states[i], a, kind);
  }
  return average - realism_of(DensityMatrix(mix, states[0].dims()), a, kind) - kBoundTol;
}

double mixing_trial(const MonotoneKind& kind, std::size_t t, Rng& rng) {
  const std::size_t n = 2 + t % 3;
  std::exponential_distribution<double> draw(1.0);
  std::vector<DensityMatrix> states;
  std::vector<double> weights;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    states.push_back(random_density(Dims{2, 2}, 1 + (t + i) % 4, rng));
    weights.push_back(draw(rng));
    total += weights.back();
  }
  for (double& w : weights) w /= total;
  return mixing_check(kind, states, weights, random_observable(2, rng, 0));
}

struct AxiomPlan {
  Axiom axiom;
  Trial trial;
  std::string label;
  Structured structured;
};

std::vector<AxiomPlan> plans() {
  const Observable z = spin_observable(0.0, 0.0, 0);
  const Observable x = spin_observable(0.0, std::numbers::pi / 2.0, 0);
  return {
      {Axiom::Measurement, measurement_trial, "werner(0.2), sigma_z, monitoring eps=0.5",
       [z](const MonotoneKind& k) { return measurement_check(k, werner(0.2), z, 0.5); }},
      {Axiom::PartDiscard, part_discard_trial, "werner(0.7) x diag(0.7,0.3), discard the last qubit",
       [z](const MonotoneKind& k) { return part_discard_check(k, product(werner(0.7), diag_qubit(0.7)), z); }},
      {Axiom::UncorrelatedPart, uncorrelated_trial, "werner(0.7) x diag(0.7,0.3)",
       [z](const MonotoneKind& k) { return uncorrelated_check(k, werner(0.7), diag_qubit(0.7), z); }},
      {Axiom::Uncertainty, uncertainty_trial, "werner(0.2), sigma_z and sigma_x",
       [z, x](const MonotoneKind& k) { return uncertainty_check(k, werner(0.2), z, x); }},
      {Axiom::Mixing, mixing_trial, "werner(0.2) and werner(1) at equal weights",
       [z](const MonotoneKind& k) { return mixing_check(k, {werner(0.2), werner(1.0)}, {0.5, 0.5}, z); }},
  };
}

}  // namespace

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::Measurement: return "measurement";
    case Axiom::PartDiscard: return "part_discard";
    case Axiom::UncorrelatedPart: return "uncorrelated_part";
    case Axiom::Uncertainty: return "uncertainty";
    case Axiom::Mixing: return "mixing";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::Unverified: return "unverified";
  }
  return "?";
}

Verdict expected_axiom(const MonotoneKind& kind, Axiom axiom) {
  using F = MonotoneKind::Family;
  F family = kind.family;
  if (family == F::Lp && kind.p == 1.0) family = F::Trace;
  if (family == F::Lp && kind.p == 2.0) family = F::HilbertSchmidt;
  switch (family) {
    case F::Trace:
      return axiom == Axiom::Measurement || axiom == Axiom::Uncertainty ? Verdict::Counterexample : Verdict::Pass;
    case F::HilbertSchmidt:
      return axiom == Axiom::UncorrelatedPart ? Verdict::Counterexample : Verdict::Pass;
    case F::Lp:
      if (axiom == Axiom::UncorrelatedPart) return Verdict::Counterexample;
      if (axiom == Axiom::Mixing) return Verdict::Pass;
      return Verdict::Unverified;
    case F::Bures:
    case F::Hellinger:
    case F::VonNeumann:
      return Verdict::Pass;
  }
  return Verdict::Unverified;
}

bool AuditResult::all_match() const {
  return std::all_of(cells.begin(), cells.end(), [](const AuditCell& c) { return c.matches; });
}

AuditResult run_axiom_audit(const SweepSpec& spec) {
  spec.validate();
  AuditResult result;
  result.hash = spec_hash(spec);
  const std::vector<MonotoneKind> kinds = spec.kinds.empty() ? default_kinds(Experiment::AxiomAudit) : spec.kinds;
  const std::vector<AxiomPlan> all = plans();
  for (const MonotoneKind& kind : kinds) {
    for (const AxiomPlan& plan : all) {
      AuditCell cell;
      cell.kind = kind;
      cell.axiom = plan.axiom;
      cell.expected = expected_axiom(kind, plan.axiom);
      cell.trials = spec.trials + 1;
      for (std::size_t t = 0; t < spec.trials; ++t) {
        const std::uint64_t trial_seed = spec.seed + t;
        Rng rng(trial_seed);
        const double excess = plan.trial(kind, t, rng);
        if (excess > 0.0) {
          ++cell.violations;
          if (!cell.witness_seed || excess > cell.worst_case) {
            cell.worst_case = std::max(cell.worst_case, excess);
            cell.witness_seed = trial_seed;
          }
        }
      }
      const double structured = plan.structured(kind);
      if (structured > 0.0) {
        ++cell.violations;
        cell.worst_case = std::max(cell.worst_case, structured);
        cell.witness = plan.label;
      }
      cell.empirical = cell.violations > 0 ? Verdict::Counterexample : Verdict::Pass;
      cell.verdict = cell.expected == Verdict::Unverified ? Verdict::Unverified : cell.empirical;
      cell.matches = cell.expected == Verdict::Unverified || cell.expected == cell.empirical;
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

Json to_json(const AuditResult& result) {
  Json cells = Json::array();
  for (const AuditCell& c : result.cells) {
    Json j;
    j["kind"] = c.kind.name();
    j["axiom"] = to_string(c.axiom);
    j["verdict"] = to_string(c.verdict);
    j["empirical"] = to_string(c.empirical);
    j["expected"] = to_string(c.expected);
    j["trials"] = c.trials;
    j["violations"] = c.violations;
    j["worst_case"] = c.worst_case;
    j["witness_seed"] = c.witness_seed ? Json(*c.witness_seed) : Json(nullptr);
    j["witness"] = c.witness.empty() ? Json(nullptr) : Json(c.witness);
    j["matches"] = c.matches;
    cells.push_back(std::move(j));
  }
  Json out;
  out["spec_hash"] = result.hash;
  out["all_match"] = result.all_match();
  out["cells"] = std::move(cells);
  return out;
}

}  // namespace vqr::harness
