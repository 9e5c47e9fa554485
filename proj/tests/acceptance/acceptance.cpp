// Acceptance criteria: one PASS/FAIL line each, with the measured quantity
// and wall time. Exit status is the number of failed criteria (capped).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vqr/channels.hpp"
#include "vqr/harness.hpp"

using namespace vqr;
using namespace vqr::harness;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(double x) { return format_number(x); }

const Observable& sigma_z() {
  static const Observable z = spin_observable(0.0, 0.0, 0);
  return z;
}

// Shared by criteria 4-7 so the suite runs once.
const VerifyResult& verify_result() {
  static const VerifyResult result = [] {
    SweepSpec spec;
    spec.experiment = Experiment::Verify;
    spec.trials = 100;
    spec.seed = 1;
    return run_verify(spec);
  }();
  return result;
}

Outcome rows_below(const std::vector<std::string>& names) {
  Outcome o{true, ""};
  std::ostringstream s;
  for (const std::string& n : names) {
    const VerifyRow& r = verify_result().row(n);
    o.pass = o.pass && r.pass();
    s << n << "=" << fmt(r.max_residual) << (r.pass() ? "" : "(>=" + fmt(r.tolerance) + ")") << " ";
  }
  o.detail = s.str();
  return o;
}

Outcome werner_plateau() {
  const MonotoneKind tr = MonotoneKind::trace();
  double plateau = 0.0;
  std::vector<double> grid;
  for (int i = 0; i <= 6; ++i) grid.push_back(0.05 * i);
  grid.push_back(1.0 / 3.0);
  for (double e : grid) {
    const RealismReport r = realism(werner(e), sigma_z(), tr);
    plateau = std::max(plateau, std::abs(r.r_value - r.r_max));
  }
  double weakest = 1.0;
  for (double e : {0.4, 0.7, 1.0}) {
    const RealismReport r = realism(werner(e), sigma_z(), tr);
    weakest = std::min(weakest, r.r_max - r.r_value);
  }
  return {plateau < 1e-10 && weakest > 1e-3,
          "plateau max |R-R_max|=" + fmt(plateau) + ", smallest drop above onset=" + fmt(weakest)};
}

Outcome bures_hellinger() {
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const DensityMatrix w = werner(i / 100.0);
    worst = std::max(worst, std::abs(realism(w, sigma_z(), MonotoneKind::bures()).r_value -
                                     realism(w, sigma_z(), MonotoneKind::hellinger()).r_value));
  }
  const DensityMatrix mu = mu_state(0.8);
  const Observable a = spin_observable(0.0, std::numbers::pi / 4.0, 0);
  const double gap =
      std::abs(realism(mu, a, MonotoneKind::bures()).r_value - realism(mu, a, MonotoneKind::hellinger()).r_value);
  return {worst < 1e-10 && gap > 1e-6, "commuting max gap=" + fmt(worst) + ", mu=0.8 phi=pi/4 gap=" + fmt(gap)};
}

Outcome rmax_values() {
  SweepSpec spec;
  spec.experiment = Experiment::RmaxSweep;
  spec.d_min = 2;
  spec.d_max = 16;
  spec.kinds = parse_monotone_kinds("tr,hs,bu,he,vn");
  const Table t = run_rmax_sweep(spec);
  // curve[kind][d_E - 2]
  std::map<std::string, std::vector<double>> curve;
  for (const auto& row : t.rows) curve[std::get<std::string>(row[2])].push_back(std::get<double>(row[3]));

  const std::vector<std::pair<std::string, double>> pins{
      {"tr", 0.5}, {"hs", 0.25}, {"bu", std::sqrt(2.0) - 1.0}, {"he", std::sqrt(2.0) - 1.0}, {"vn", std::log(2.0)}};
  double worst = 0.0;
  for (const auto& [name, expected] : pins) worst = std::max(worst, std::abs(curve[name][0] - expected));
  for (std::size_t i = 0; i < 15; ++i) {
    const double x = static_cast<double>(i + 2);
    worst = std::max({worst, std::abs(curve["tr"][i] - oracle::rmax_trace(x)),
                      std::abs(curve["hs"][i] - oracle::rmax_hs(x)), std::abs(curve["bu"][i] - oracle::rmax_bures(x)),
                      std::abs(curve["he"][i] - oracle::rmax_bures(x)), std::abs(curve["vn"][i] - oracle::rmax_vn(x))});
  }
  const bool values = worst < 1e-9;

  std::ostringstream bad;
  for (const std::string name : {"tr", "hs", "bu", "he"}) {
    const std::vector<double>& c = curve[name];
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (!(c[i + 1] < c[i])) {
        bad << name << " rises " << fmt(c[i]) << "->" << fmt(c[i + 1]) << " at d_E=" << i + 2 << "->" << i + 3
            << "; ";
        break;
      }
    }
  }
  bool log_growth = true;
  for (std::size_t i = 0; i + 1 < curve["vn"].size(); ++i) log_growth = log_growth && curve["vn"][i + 1] > curve["vn"][i];
  const std::string decay = bad.str();
  return {values && decay.empty() && log_growth,
          "max pin/oracle error=" + fmt(worst) + (decay.empty() ? ", geometric decay ok" : ", not decaying: " + decay) +
              (log_growth ? "ln d_E grows" : "ln d_E does not grow")};
}

Outcome closed_form_equivalence() {
  return rows_below({"closed_form_vs_dilation_tr", "closed_form_vs_dilation_hs", "closed_form_vs_dilation_bu",
                     "closed_form_vs_dilation_he", "closed_form_vs_dilation_lp1.5", "closed_form_vs_dilation_lp3"});
}

Outcome identity_suite() {
  return rows_below({"pinching_trace_invariance_x", "pinching_trace_invariance_x2", "pinching_trace_invariance_sqrt",
                     "pinching_trace_invariance_exp", "hs_pythagoras"});
}

Outcome dilation_contracts() {
  // 50 setups with d_A in {2, 3, 4}, some with a bystander.
  Rng rng(2026);
  double reduction = 0.0, invariance = 0.0;
  for (std::size_t t = 0; t < 50; ++t) {
    const std::size_t da = 2 + t % 3;
    const Dims dims = t % 2 ? Dims{da, 3} : Dims{da};
    const DensityMatrix rho = random_density(dims, 1 + t % dims_product(dims), rng);
    const DilationSetup setup(rho, random_observable(da, rng, 0));
    reduction = std::max(reduction, setup.reduction_residual());
    invariance = std::max(invariance, setup.invariance_residual());
  }
  return {reduction < 1e-10 && invariance < 1e-10,
          "reduction=" + fmt(reduction) + " invariance=" + fmt(invariance)};
}

Outcome renyi_identities() {
  return rows_below({"bures_sandwiched_renyi", "hellinger_petz_renyi", "renyi_alpha_limit",
                     "sandwiched_renyi_alpha_limit"});
}

Outcome axiom_audit() {
  SweepSpec spec;
  spec.experiment = Experiment::AxiomAudit;
  spec.trials = 200;
  spec.seed = 7;
  const AuditResult a = run_axiom_audit(spec);
  const AuditResult again = run_axiom_audit(spec);
  const bool reproducible = dump_json(to_json(a)) == dump_json(to_json(again));
  std::ostringstream s;
  bool witnesses = true;
  for (const AuditCell& c : a.cells) {
    if (!c.matches) {
      s << c.kind.name() << "/" << to_string(c.axiom) << " expected " << to_string(c.expected) << " found "
        << to_string(c.empirical) << " (worst " << fmt(c.worst_case) << "); ";
    }
    if (c.expected == Verdict::Counterexample && !c.witness_seed && c.witness.empty()) witnesses = false;
  }
  const std::string mismatches = s.str();
  return {a.all_match() && witnesses && reproducible,
          (mismatches.empty() ? std::string("pattern matches") : "mismatches: " + mismatches) +
              (witnesses ? " witnesses present" : " missing witnesses") +
              (reproducible ? ", reproducible" : ", NOT reproducible")};
}

Outcome property_suite() {
  SweepSpec spec;
  spec.experiment = Experiment::Properties;
  spec.trials = 500;
  spec.seed = 1;
  const PropertiesResult r = run_properties(spec);
  std::ostringstream s;
  for (const PropertyReport& p : r.reports) {
    if (!r.matches(p)) s << p.kind.name() << "/" << to_string(p.property) << "; ";
  }
  std::size_t contractive_breaks = 0;
  for (const PropertyReport& p : r.reports) {
    if (p.property == DistanceProperty::Contractivity && !p.holds()) ++contractive_breaks;
  }
  const std::string bad = s.str();
  return {r.all_match(), bad.empty() ? "table matches, " + std::to_string(contractive_breaks) +
                                           " non-contractive columns found"
                                     : "mismatches: " + bad};
}

Outcome symmetry_checks() {
  SweepSpec spec;
  spec.experiment = Experiment::MuSweep;
  spec.mu_steps = 11;
  const Table t = run_mu_sweep(spec);
  double theta_spread = 0.0;
  for (const auto& row : t.rows) theta_spread = std::max(theta_spread, std::get<double>(row[7]));

  // Werner: realism must not depend on the measured direction.
  Rng rng(5);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  std::vector<Observable> directions{sigma_z()};
  for (int i = 0; i < 12; ++i) directions.push_back(spin_observable(2.0 * angle(rng), angle(rng), 0));
  double direction_spread = 0.0;
  for (double e : {0.1, 0.3, 0.5, 0.8, 1.0}) {
    for (const MonotoneKind& k : parse_monotone_kinds("tr,hs,lp1.5,lp3,bu,he,vn")) {
      double lo = 1e300, hi = -1e300;
      for (const Observable& a : directions) {
        const double v = realism(werner(e), a, k).r_value;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      direction_spread = std::max(direction_spread, hi - lo);
    }
  }
  return {theta_spread < 1e-9 && direction_spread < 1e-9,
          "theta spread=" + fmt(theta_spread) + ", Werner direction spread=" + fmt(direction_spread)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Werner trace plateau", 1.0, werner_plateau},
      {2, "Bures/Hellinger coincidence and gap", 1.0, bures_hellinger},
      {3, "R_max values and shape", 5.0, rmax_values},
      {4, "closed form vs dilation", 60.0, closed_form_equivalence},
      {5, "pinching and Pythagoras identities", 10.0, identity_suite},
      {6, "dilation contracts", 10.0, dilation_contracts},
      {7, "Renyi identities and alpha limits", 10.0, renyi_identities},
      {8, "axiom audit pattern", 120.0, axiom_audit},
      {9, "distance property table", 120.0, property_suite},
      {10, "symmetry checks", 5.0, symmetry_checks},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < c.budget_s;
    const bool pass = o.pass && in_budget;
    failed += pass ? 0 : 1;
    std::printf("%s [%d] %s: %s (%.3f s, budget %g s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs, c.budget_s, in_budget ? "" : ", OVER BUDGET");
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return std::min(failed, 100);
}
