#include "vqr/realism.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "vqr/channels.hpp"
#include "vqr/error.hpp"

namespace vqr {

namespace {

std::vector<std::size_t> complement(std::size_t count, const std::vector<std::size_t>& part) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < count; ++s) {
    bool in_part = false;
    for (std::size_t p : part) in_part = in_part || p == s;
    if (!in_part) out.push_back(s);
  }
  return out;
}

Matrix system_marginal(const Matrix& omega, std::size_t system_dim, std::size_t env_dim) {
  return partial_trace(omega, Dims{system_dim, env_dim}, {0});
}

}  // namespace

MonotoneKind MonotoneKind::lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::InvalidOrder, "L_p order must be a finite number >= 1", p);
  }
  return {Family::Lp, p};
}

DistanceKind MonotoneKind::distance_kind() const {
  switch (family) {
    case Family::Trace: return DistanceKind::trace(1.0);
    case Family::HilbertSchmidt: return DistanceKind::hilbert_schmidt(2.0);
    case Family::Lp: return DistanceKind::lp(p, p);
    case Family::Bures: return DistanceKind::bures(2.0);
    case Family::Hellinger: return DistanceKind::hellinger(2.0);
    case Family::VonNeumann: break;
  }
  throw Error(ErrorCode::DomainError, "the von Neumann monotone has no distance kind");
}

std::string MonotoneKind::name() const {
  switch (family) {
    case Family::Trace: return "tr";
    case Family::HilbertSchmidt: return "hs";
    case Family::Lp: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "lp%g", p);
      return buf;
    }
    case Family::Bures: return "bu";
    case Family::Hellinger: return "he";
    case Family::VonNeumann: return "vn";
  }
  return "?";
}

MonotoneKind parse_monotone_kind(std::string_view text) {
  if (text == "tr" || text == "trace") return MonotoneKind::trace();
  if (text == "hs" || text == "hilbert-schmidt") return MonotoneKind::hilbert_schmidt();
  if (text == "bu" || text == "bures") return MonotoneKind::bures();
  if (text == "he" || text == "hellinger") return MonotoneKind::hellinger();
  if (text == "vn" || text == "von-neumann") return MonotoneKind::von_neumann();
  if (text.starts_with("lp")) {
    std::string number(text.substr(text.size() > 2 && text[2] == ':' ? 3 : 2));
    char* end = nullptr;
    const double p = std::strtod(number.c_str(), &end);
    if (!number.empty() && end == number.c_str() + number.size()) return MonotoneKind::lp(p);
  }
  throw Error(ErrorCode::ParseError, "unknown monotone kind '" + std::string(text) + "'");
}

std::vector<MonotoneKind> parse_monotone_kinds(std::string_view text) {
  std::vector<MonotoneKind> kinds;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!item.empty()) kinds.push_back(parse_monotone_kind(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (kinds.empty()) throw Error(ErrorCode::ParseError, "empty list of monotone kinds");
  return kinds;
}

double irrealism(const DensityMatrix& rho, const Observable& a) {
  const Matrix measured = measure_nonselective(rho.matrix(), a, rho.dims());
  return von_neumann_entropy(measured) - von_neumann_entropy(rho);
}

double mutual_information(const Matrix& rho, const Dims& dims, const std::vector<std::size_t>& part) {
  const std::vector<std::size_t> rest = complement(dims.size(), part);
  if (part.empty() || rest.empty()) return 0.0;
  return von_neumann_entropy(partial_trace(rho, dims, part)) + von_neumann_entropy(partial_trace(rho, dims, rest)) -
         von_neumann_entropy(rho);
}

IrrealismDecomposition irrealism_decomposition(const DensityMatrix& rho, const Observable& a) {
  a.require_compatible(rho.dims());
  if (rho.dims().size() == 1) return {irrealism(rho, a), 0.0};
  const std::size_t sub = a.subsystem();
  const DensityMatrix local(partial_trace(rho, rho.dims(), {sub}), Dims{a.local_dim()});
  const double coherence = irrealism(local, a.on_subsystem(0));
  const Matrix measured = measure_nonselective(rho.matrix(), a, rho.dims());
  const double discord =
      mutual_information(rho, rho.dims(), {sub}) - mutual_information(measured, rho.dims(), {sub});
  return {coherence, discord};
}

double conditional_information_entropic(const Matrix& omega, std::size_t system_dim, std::size_t env_dim) {
  const Matrix reference =
      kron(system_marginal(omega, system_dim, env_dim), identity(env_dim) / static_cast<double>(env_dim));
  return relative_entropy(omega, reference).value;
}

double conditional_information_entropic(const DensityMatrix& omega) {
  const std::size_t env_dim = omega.dims().back();
  return conditional_information_entropic(omega.matrix(), omega.dim() / env_dim, env_dim);
}

ConditionalInfoResult conditional_information_geometric(const Matrix& omega, std::size_t system_dim,
                                                        std::size_t env_dim, const MonotoneKind& kind) {
  if (static_cast<std::size_t>(omega.rows()) != system_dim * env_dim) {
    throw Error(ErrorCode::DimensionMismatch, "global state does not match the system/environment split");
  }
  if (!kind.geometric()) {
    return {conditional_information_entropic(omega, system_dim, env_dim), kind, InfoMethod::FullSpace};
  }
  const Matrix reference =
      kron(system_marginal(omega, system_dim, env_dim), identity(env_dim) / static_cast<double>(env_dim));
  return {distance(kind.distance_kind(), omega, reference), kind, InfoMethod::FullSpace};
}

ConditionalInfoResult conditional_information_geometric(const DensityMatrix& omega, const MonotoneKind& kind) {
  const std::size_t env_dim = omega.dims().back();
  return conditional_information_geometric(omega.matrix(), omega.dim() / env_dim, env_dim, kind);
}

double delta_information_closed_form(const DensityMatrix& rho, const Observable& a, const MonotoneKind& kind) {
  a.require_compatible(rho.dims());
  const double d = static_cast<double>(a.outcomes());
  const Matrix& r = rho.matrix();
  const Matrix measured = measure_nonselective(r, a, rho.dims());
  switch (kind.family) {
    case MonotoneKind::Family::Trace:
      return trace_distance(r, measured / d) - (d - 1.0) / d;
    case MonotoneKind::Family::HilbertSchmidt: {
      const double hs = hs_distance(r, measured);
      return hs * hs / d;
    }
    case MonotoneKind::Family::Lp: {
      const double p = kind.p;
      const double rho_p = schatten_power(r, p);
      return schatten_power(r - measured / d, p) +
             (d - 1.0) / std::pow(d, p) * (schatten_power(measured, p) - rho_p) -
             rho_p * std::pow((d - 1.0) / d, p);
    }
    case MonotoneKind::Family::Bures:
      return bures_distance_sq(r, measured) / std::sqrt(d);
    case MonotoneKind::Family::Hellinger:
      return hellinger_distance_sq(r, measured) / std::sqrt(d);
    case MonotoneKind::Family::VonNeumann:
      return von_neumann_entropy(measured) - von_neumann_entropy(r);
  }
  throw Error(ErrorCode::DomainError, "unknown monotone family");
}

double delta_information_full_space(const DensityMatrix& rho, const Observable& a, const MonotoneKind& kind) {
  const DilationSetup setup = build_dilation(rho, a);
  const Evolution ev = evolve(setup);
  const std::size_t sys_dim = rho.dim();
  const std::size_t env_dim = setup.environment_dim();
  const double after = conditional_information_geometric(ev.omega_t.matrix(), sys_dim, env_dim, kind).value;
  const double before = conditional_information_geometric(ev.omega0.matrix(), sys_dim, env_dim, kind).value;
  return after - before;
}

double delta_conditional_information(const DensityMatrix& rho, const Observable& a, const MonotoneKind& kind) {
  const double closed = delta_information_closed_form(rho, a, kind);
  const double full = delta_information_full_space(rho, a, kind);
  if (std::abs(closed - full) > kRouteTol) {
    throw Error(ErrorCode::NumericalFailure,
                kind.name() + ": closed form " + std::to_string(closed) + " and dilation " +
                    std::to_string(full) + " disagree",
                closed - full);
  }
  return closed;
}

double realism_max(const MonotoneKind& kind, std::size_t d_e) {
  if (d_e < 2) {
    throw Error(ErrorCode::OutOfRange, "environment dimension must be >= 2", static_cast<double>(d_e));
  }
  if (!kind.geometric()) return std::log(static_cast<double>(d_e));
  const DensityMatrix phi = max_entangled(d_e);
  return delta_information_closed_form(phi, computational_observable(d_e, 0, phi.dims()), kind);
}

RealismReport realism(const DensityMatrix& rho, const Observable& a, const MonotoneKind& kind, double vqr_tol) {
  RealismReport report;
  report.kind = kind;
  report.r_max = realism_max(kind, a.outcomes());
  report.delta_i = delta_information_closed_form(rho, a, kind);
  report.r_value = report.r_max - report.delta_i;
  report.vqr_detected = report.delta_i > vqr_tol;
  report.unverified_axioms = kind.family == MonotoneKind::Family::Lp && kind.p != 1.0 && kind.p != 2.0;
  return report;
}

}  // namespace vqr
