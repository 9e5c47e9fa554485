#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vqr/metrics.hpp"
#include "vqr/states.hpp"

namespace vqr {

// Threshold on Delta I above which a violation of realism is reported.
inline constexpr double kVqrTol = 1e-9;
// Closed-form and dilation routes for Delta I must agree within this.
inline constexpr double kRouteTol = 1e-9;

/// Quantifier family a realism monotone is built from. Distances carry their
/// canonical power: d_Tr, d_HS^2, d_p^p, d_Bu^2, d_He^2.
struct MonotoneKind {
  enum class Family { Trace, HilbertSchmidt, Lp, Bures, Hellinger, VonNeumann };

  Family family = Family::Trace;
  double p = 1.0;

  static MonotoneKind trace() { return {Family::Trace, 1.0}; }
  static MonotoneKind hilbert_schmidt() { return {Family::HilbertSchmidt, 2.0}; }
  static MonotoneKind lp(double p);
  static MonotoneKind bures() { return {Family::Bures, 0.0}; }
  static MonotoneKind hellinger() { return {Family::Hellinger, 0.0}; }
  static MonotoneKind von_neumann() { return {Family::VonNeumann, 0.0}; }

  bool geometric() const { return family != Family::VonNeumann; }
  /// Throws DomainError for VonNeumann.
  DistanceKind distance_kind() const;
  /// "tr", "hs", "lp1.5", "bu", "he", "vn".
  std::string name() const;

  friend bool operator==(const MonotoneKind&, const MonotoneKind&) = default;
};

/// Parses one name as produced by MonotoneKind::name(); throws ParseError.
MonotoneKind parse_monotone_kind(std::string_view text);
/// Comma-separated list.
std::vector<MonotoneKind> parse_monotone_kinds(std::string_view text);

/// S(Phi_A(rho)) - S(rho), nats.
double irrealism(const DensityMatrix& rho, const Observable& a);

struct IrrealismDecomposition {
  double coherence = 0.0;  // irrealism of the reduced state on A
  double discord = 0.0;    // I(A:B)_rho - I(A:B)_{Phi_A(rho)}
};

/// A is the observable's subsystem, B everything else.
IrrealismDecomposition irrealism_decomposition(const DensityMatrix& rho, const Observable& a);

/// S(rho_X) + S(rho_Y) - S(rho) for the split X = part, Y = the rest.
double mutual_information(const Matrix& rho, const Dims& dims, const std::vector<std::size_t>& part);

/// S(Omega || Omega_S x 1/d_E) for Omega on C^system_dim x C^env_dim.
double conditional_information_entropic(const Matrix& omega, std::size_t system_dim, std::size_t env_dim);
/// Environment = last subsystem of omega.
double conditional_information_entropic(const DensityMatrix& omega);

enum class InfoMethod { FullSpace, ClosedForm };

struct ConditionalInfoResult {
  double value = 0.0;
  MonotoneKind kind;
  InfoMethod method = InfoMethod::FullSpace;
};

/// d^n(Omega, Omega_S x 1/d_E) with the kind's canonical power.
ConditionalInfoResult conditional_information_geometric(const Matrix& omega, std::size_t system_dim,
                                                        std::size_t env_dim, const MonotoneKind& kind);
ConditionalInfoResult conditional_information_geometric(const DensityMatrix& omega, const MonotoneKind& kind);

/// Change of conditional information across the measurement dilation, from
/// the reduced closed forms (d_E = number of outcomes of a).
double delta_information_closed_form(const DensityMatrix& rho, const Observable& a, const MonotoneKind& kind);
/// Same quantity evaluated on the global states Omega_0 and Omega_t.
double delta_information_full_space(const DensityMatrix& rho, const Observable& a, const MonotoneKind& kind);

/// Both routes; throws NumericalFailure if they differ by more than kRouteTol.
/// Returns the closed form.
double delta_conditional_information(const DensityMatrix& rho, const Observable& a, const MonotoneKind& kind);

/// Delta I at the maximally entangled state of two d_E-level systems with the
/// computational observable; ln d_E for VonNeumann.
double realism_max(const MonotoneKind& kind, std::size_t d_e);

struct RealismReport {
  MonotoneKind kind;
  double r_value = 0.0;
  double r_max = 0.0;
  double delta_i = 0.0;
  bool vqr_detected = false;
  /// Set for L_p with p not in {1, 2}: the measurement, part-discard and
  /// uncertainty axioms are open for it.
  bool unverified_axioms = false;
};

RealismReport realism(const DensityMatrix& rho, const Observable& a, const MonotoneKind& kind,
                      double vqr_tol = kVqrTol);

}  // namespace vqr
