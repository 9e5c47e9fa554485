#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vqr/properties.hpp"
#include "vqr/realism.hpp"
#include "vqr/serialize.hpp"

namespace vqr::harness {

enum class Experiment { WernerSweep, RmaxSweep, MuSweep, AxiomAudit, Verify, Properties };
enum class Format { CSV, JSON };

std::string to_string(Experiment e);

struct SweepSpec {
  Experiment experiment = Experiment::WernerSweep;
  std::size_t eps_steps = 101;
  std::size_t mu_steps = 101;
  std::size_t d_min = 2;
  std::size_t d_max = 16;
  std::vector<double> phis{0.0, 0.7853981633974483, 1.5707963267948966};
  double theta = 0.0;
  std::size_t theta_points = 8;
  std::vector<MonotoneKind> kinds;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string output_path;
  Format format = Format::CSV;

  /// Throws OutOfRange for grids outside their domains.
  void validate() const;
};

/// Default kinds per experiment, used when spec.kinds is empty.
std::vector<MonotoneKind> default_kinds(Experiment e);

/// FNV-1a over a canonical rendering of every field except output_path;
/// 16 lowercase hex digits.
std::string spec_hash(const SweepSpec& spec);

using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Rows {spec_hash, epsilon, kind, r_value, r_max, delta_i, vqr_detected};
/// sigma_z on the first qubit.
Table run_werner_sweep(const SweepSpec& spec);
/// Rows {spec_hash, d_e, kind, r_max}.
Table run_rmax_sweep(const SweepSpec& spec);
/// Rows {spec_hash, mu, phi, kind, r_value, r_max, delta_i, theta_spread};
/// theta_spread is max - min of r_value over theta_points angles in [0, 2pi).
Table run_mu_sweep(const SweepSpec& spec);

enum class Axiom { Measurement, PartDiscard, UncorrelatedPart, Uncertainty, Mixing };
enum class Verdict { Pass, Counterexample, Unverified };

std::string to_string(Axiom a);
std::string to_string(Verdict v);

/// Tabulated status of (kind, axiom); Unverified marks an open cell.
Verdict expected_axiom(const MonotoneKind& kind, Axiom axiom);

struct AuditCell {
  MonotoneKind kind;
  Axiom axiom = Axiom::Measurement;
  Verdict expected = Verdict::Pass;
  Verdict empirical = Verdict::Pass;  // what the trials found
  Verdict verdict = Verdict::Pass;    // reported: Unverified for open cells
  std::size_t trials = 0;
  std::size_t violations = 0;
  double worst_case = 0.0;
  std::optional<std::uint64_t> witness_seed;
  std::string witness;  // structured witness label, empty if a seeded trial
  bool matches = true;
};

struct AuditResult {
  std::string hash;
  std::vector<AuditCell> cells;
  bool all_match() const;
};

/// spec.trials random trials per cell (trial t uses Rng(seed + t)) followed
/// by one structured instance per axiom.
AuditResult run_axiom_audit(const SweepSpec& spec);

struct VerifyRow {
  std::string identity;
  std::size_t trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return max_residual < tolerance; }
};

struct VerifyResult {
  std::string hash;
  std::vector<VerifyRow> rows;
  bool all_pass() const;
  const VerifyRow& row(const std::string& identity) const;
};

VerifyResult run_verify(const SweepSpec& spec);

struct PropertiesResult {
  std::string hash;
  std::vector<PropertyReport> reports;
  bool matches(const PropertyReport& r) const { return r.holds() == expected_property(r.kind, r.property); }
  bool all_match() const;
};

/// Every column of the distance-property table: d_Tr, d_HS, d_HS^2, d_p,
/// d_p^p (p = 1.5, 3), d_Bu, d_Bu^2, d_He, d_He^2.
std::vector<DistanceKind> table_distance_kinds();
PropertiesResult run_properties(const SweepSpec& spec);

/// %.12g, "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double x);
std::string to_csv(const Table& table);

Json to_json(const Table& table, const std::string& hash);
Json to_json(const AuditResult& result);
Json to_json(const VerifyResult& result);
Json to_json(const PropertiesResult& result);

/// Writes `content` to `path` ("-" is stdout); throws IoError.
void write_text(const std::string& path, const std::string& content);
/// JSON with two-space indent and a trailing newline.
std::string dump_json(const Json& j);

/// gnuplot script plotting r_value (r_max for the d_E sweep) per kind, and
/// per phi for the mu sweep, from the CSV that `spec` produced.
std::string gnuplot_script(const SweepSpec& spec, const std::string& csv_path);

}  // namespace vqr::harness
