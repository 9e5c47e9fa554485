#pragma once

#include <limits>
#include <string>

#include "vqr/linalg.hpp"

namespace vqr {

// All entropic quantities are in nats.
inline constexpr double kLogBase = 2.718281828459045;

enum class DistanceFamily { Trace, HilbertSchmidt, Lp, Bures, Hellinger };

/// A distance d together with the power d^exponent that is actually used.
/// Trace and HilbertSchmidt are Lp(1) and Lp(2) under other names.
struct DistanceKind {
  DistanceFamily family = DistanceFamily::Trace;
  double p = 1.0;         // Schatten order, meaningful for the L_p family
  double exponent = 1.0;  // n in d^n

  static DistanceKind trace(double exponent = 1.0);
  static DistanceKind hilbert_schmidt(double exponent = 1.0);
  static DistanceKind lp(double p, double exponent = 1.0);
  static DistanceKind bures(double exponent = 1.0);
  static DistanceKind hellinger(double exponent = 1.0);

  /// Schatten order for the L_p-type families (1 for Trace, 2 for HS).
  double order() const;
  bool is_schatten() const;
  /// e.g. "tr", "hs^2", "lp3^3", "bu^2".
  std::string name() const;
};

enum class DivergenceFamily { VonNeumann, Renyi, SandwichedRenyi };

struct DivergenceKind {
  DivergenceFamily family = DivergenceFamily::VonNeumann;
  double alpha = 1.0;

  static DivergenceKind von_neumann();
  /// Throw InvalidAlpha unless alpha > 0 and alpha != 1.
  static DivergenceKind renyi(double alpha);
  static DivergenceKind sandwiched_renyi(double alpha);

  std::string name() const;
};

/// Divergence value; +inf with support_violation set when the first argument
/// is not supported inside the second.
struct DivergenceValue {
  double value = 0.0;
  bool support_violation = false;

  static DivergenceValue infinite() {
    return {std::numeric_limits<double>::infinity(), true};
  }
};

// Second arguments may be sub-normalized (e.g. Phi_A(rho)/d_E) everywhere in
// this header unless noted.

/// (Tr |sigma - rho|^p)^(1/p).
double lp_distance(const Matrix& rho, const Matrix& sigma, double p);
double trace_distance(const Matrix& rho, const Matrix& sigma);
double hs_distance(const Matrix& rho, const Matrix& sigma);

/// Uhlmann fidelity [Tr (sqrt(rho) sigma sqrt(rho))^(1/2)]^2, evaluated as the
/// squared nuclear norm of sqrt(sigma) sqrt(rho).
double fidelity(const Matrix& rho, const Matrix& sigma);
/// 2 - 2 sqrt(F).
double bures_distance_sq(const Matrix& rho, const Matrix& sigma);
/// 2 - 2 Tr(sqrt(sigma) sqrt(rho)).
double hellinger_distance_sq(const Matrix& rho, const Matrix& sigma);

/// d^exponent for the selected distance.
double distance(const DistanceKind& kind, const Matrix& rho, const Matrix& sigma);

double von_neumann_entropy(const Matrix& rho);
/// Tr(rho ln rho - rho ln sigma).
DivergenceValue relative_entropy(const Matrix& rho, const Matrix& sigma);
/// Tr rho (ln rho - ln sigma)^2 - S(rho||sigma)^2; the slope of both Renyi
/// families at alpha = 1 is half of it. +inf on support violation.
DivergenceValue relative_entropy_variance(const Matrix& rho, const Matrix& sigma);
/// Petz: (alpha-1)^-1 ln[Tr(rho^alpha sigma^(1-alpha)) / Tr rho].
DivergenceValue renyi_divergence(const Matrix& rho, const Matrix& sigma, double alpha);
/// (alpha-1)^-1 ln{Tr[(sigma^s rho sigma^s)^alpha] / Tr rho}, s = (1-alpha)/(2 alpha).
DivergenceValue sandwiched_renyi_divergence(const Matrix& rho, const Matrix& sigma, double alpha);
DivergenceValue divergence(const DivergenceKind& kind, const Matrix& rho, const Matrix& sigma);

}  // namespace vqr
