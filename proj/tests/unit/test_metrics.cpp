#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "vqr/channels.hpp"
#include "vqr/metrics.hpp"
#include "vqr/properties.hpp"
#include "vqr/states.hpp"

using namespace vqr;
using testing::error_code_of;

namespace {

Matrix ket_plus() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return outer(v);
}

Matrix diag(std::initializer_list<double> values) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) m(i, i) = v, ++i;
  return m;
}

}  // namespace

TEST_CASE("distances on reference pairs") {
  const Matrix zero = basis_projector(2, 0), one = basis_projector(2, 1);
  CHECK(lp_distance(zero, one, 1.0) == doctest::Approx(2.0));
  CHECK(trace_distance(zero, one) == doctest::Approx(2.0));
  CHECK(hs_distance(zero, one) == doctest::Approx(std::sqrt(2.0)));
  CHECK(lp_distance(zero, zero, 3.0) == 0.0);
  CHECK(error_code_of([&] { lp_distance(zero, one, 0.9); }) == ErrorCode::InvalidOrder);
  CHECK(error_code_of([&] { trace_distance(zero, identity(3)); }) == ErrorCode::DimensionMismatch);

  CHECK(fidelity(zero, ket_plus()) == doctest::Approx(0.5));
  CHECK(fidelity(zero, zero) == doctest::Approx(1.0));
  CHECK(bures_distance_sq(zero, one) == doctest::Approx(2.0));
  CHECK(hellinger_distance_sq(zero, identity(2) / 2.0) == doctest::Approx(2.0 - std::sqrt(2.0)));
}

TEST_CASE("Werner trace plateau against the eigenvalue oracle") {
  const Observable z = spin_observable(0.0, 0.0);
  for (int i = 0; i <= 20; ++i) {
    const double e = i / 20.0;
    const DensityMatrix rho = werner(e);
    const Matrix half = measure_nonselective(rho.matrix(), z, rho.dims()) / 2.0;
    CHECK(trace_distance(rho, half) == doctest::Approx(oracle::werner_delta_trace(e) + 0.5));
  }
}

TEST_CASE("maximally entangled state against its measured image") {
  const DensityMatrix phi = max_entangled(2);
  const Matrix measured = measure_nonselective(phi.matrix(), computational_observable(2, 0, phi.dims()), phi.dims());
  CHECK(fidelity(phi, measured) == doctest::Approx(0.5));
  CHECK(bures_distance_sq(phi, measured) == doctest::Approx(2.0 - std::sqrt(2.0)));
}

TEST_CASE("fidelity on pure states and symmetry") {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const Vector a = haar_unitary(3, rng).col(0), b = haar_unitary(3, rng).col(0);
    const double overlap = std::norm(a.dot(b));
    CHECK(fidelity(outer(a), outer(b)) == doctest::Approx(overlap).epsilon(1e-9));
    const DensityMatrix r = random_density(3, 2, rng), s = random_density(3, 3, rng);
    CHECK(std::abs(fidelity(r, s) - fidelity(s, r)) < 1e-9);
    CHECK(fidelity(r, s) <= 1.0 + 1e-12);
  }
}

TEST_CASE("Bures and Hellinger agree exactly on commuting pairs only") {
  Rng rng(43);
  const Matrix u = haar_unitary(3, rng);
  const Matrix r = u * diag({0.2, 0.3, 0.5}) * u.adjoint(), s = u * diag({0.6, 0.1, 0.3}) * u.adjoint();
  CHECK(std::abs(bures_distance_sq(r, s) - hellinger_distance_sq(r, s)) < 1e-10);

  const DensityMatrix mu = mu_state(0.8);
  const Observable a = spin_observable(0.0, std::numbers::pi / 4.0);
  const Matrix measured = measure_nonselective(mu.matrix(), a, mu.dims());
  CHECK(std::abs(bures_distance_sq(mu, measured) - hellinger_distance_sq(mu, measured)) > 1e-6);
}

TEST_CASE("Schatten family names and special orders") {
  Rng rng(47);
  const DensityMatrix r = random_density(4, 3, rng), s = random_density(4, 4, rng);
  CHECK(std::abs(lp_distance(r, s, 1.0) - schatten_norm(s.matrix() - r.matrix(), 1.0)) < 1e-12);
  CHECK(std::abs(lp_distance(r, s, 2.0) - (s.matrix() - r.matrix()).norm()) < 1e-12);
  CHECK(std::abs(distance(DistanceKind::lp(1.0), r, s) - distance(DistanceKind::trace(), r, s)) < 1e-12);
  CHECK(std::abs(distance(DistanceKind::lp(2.0, 2.0), r, s) - distance(DistanceKind::hilbert_schmidt(2.0), r, s)) <
        1e-12);
  CHECK(DistanceKind::lp(3.0, 3.0).name() == "lp3^3");
  CHECK(DistanceKind::bures(2.0).name() == "bu^2");
  CHECK(DistanceKind::trace().name() == "tr");
  CHECK(error_code_of([] { DistanceKind::lp(0.5); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("entropies") {
  CHECK(von_neumann_entropy(basis_projector(3, 1)) == 0.0);
  CHECK(von_neumann_entropy(identity(4) / 4.0) == doctest::Approx(std::log(4.0)));
  CHECK(relative_entropy(ket_plus(), identity(2) / 2.0).value == doctest::Approx(std::log(2.0)));
  const DivergenceValue inf = relative_entropy(identity(2) / 2.0, basis_projector(2, 0));
  CHECK(inf.support_violation);
  CHECK(std::isinf(inf.value));

  Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix r = random_density(3, 1 + t % 3, rng);
    const Observable a = random_observable(3, rng);
    const Matrix m = measure_nonselective(r.matrix(), a, r.dims());
    CHECK(relative_entropy(r, m).value ==
          doctest::Approx(von_neumann_entropy(m) - von_neumann_entropy(r)).epsilon(1e-9));
    CHECK(relative_entropy(r, r).value == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("Renyi divergences") {
  const std::vector<double> p{0.5, 0.3, 0.2}, q{0.2, 0.2, 0.6};
  const Matrix r = diag({0.5, 0.3, 0.2}), s = diag({0.2, 0.2, 0.6});
  for (double alpha : {0.3, 0.5, 2.0, 3.5}) {
    CHECK(renyi_divergence(r, s, alpha).value == doctest::Approx(oracle::classical_renyi(p, q, alpha)));
    CHECK(sandwiched_renyi_divergence(r, s, alpha).value == doctest::Approx(oracle::classical_renyi(p, q, alpha)));
  }
  CHECK(relative_entropy(r, s).value == doctest::Approx(oracle::classical_kl(p, q)));
  CHECK(renyi_divergence(r, r, 0.7).value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(error_code_of([&] { renyi_divergence(r, s, 1.0); }) == ErrorCode::InvalidAlpha);
  CHECK(error_code_of([&] { sandwiched_renyi_divergence(r, s, -1.0); }) == ErrorCode::InvalidAlpha);
  CHECK(error_code_of([] { DivergenceKind::renyi(1.0); }) == ErrorCode::InvalidAlpha);
  CHECK(renyi_divergence(identity(2) / 2.0, basis_projector(2, 0), 2.0).support_violation);
  // Below alpha = 1 a missing support is not infinite.
  CHECK_FALSE(renyi_divergence(identity(2) / 2.0, basis_projector(2, 0), 0.5).support_violation);

  Rng rng(59);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix a = random_density(3, 3, rng), b = random_density(3, 3, rng);
    // Sandwiched never exceeds Petz.
    CHECK(sandwiched_renyi_divergence(a, b, 2.0).value <= renyi_divergence(a, b, 2.0).value + 1e-10);
    CHECK(std::abs(bures_distance_sq(a, b) - (2.0 - 2.0 * std::exp(-0.5 * sandwiched_renyi_divergence(a, b, 0.5).value))) <
          1e-9);
    CHECK(std::abs(hellinger_distance_sq(a, b) - (2.0 - 2.0 * std::exp(-0.5 * renyi_divergence(a, b, 0.5).value))) <
          1e-9);
  }
}

TEST_CASE("relative entropy variance is the alpha slope") {
  const Matrix r = diag({0.5, 0.3, 0.2}), s = diag({0.2, 0.2, 0.6});
  const std::vector<double> p{0.5, 0.3, 0.2}, q{0.2, 0.2, 0.6};
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double l = std::log(p[i] / q[i]);
    m1 += p[i] * l;
    m2 += p[i] * l * l;
  }
  CHECK(relative_entropy_variance(r, s).value == doctest::Approx(m2 - m1 * m1));
}

TEST_CASE("tabulated property pattern") {
  for (const DistanceKind& kind : {DistanceKind::trace(), DistanceKind::hilbert_schmidt(2.0), DistanceKind::bures(),
                                   DistanceKind::bures(2.0), DistanceKind::hellinger(), DistanceKind::lp(3.0, 3.0)}) {
    for (const PropertyReport& r : check_distance_properties(kind, 150, 5)) {
      INFO(kind.name(), " ", to_string(r.property));
      CHECK(r.holds() == expected_property(kind, r.property));
      CHECK(r.trials == 150);
      if (!r.holds()) CHECK(r.example_seed.has_value());
    }
  }
  CHECK_FALSE(expected_property(DistanceKind::hilbert_schmidt(), DistanceProperty::Contractivity));
  CHECK_FALSE(expected_property(DistanceKind::hellinger(), DistanceProperty::JointConvexity));
  CHECK(expected_property(DistanceKind::hellinger(2.0), DistanceProperty::JointConvexity));
}

TEST_CASE("joint convexity fails for the unsquared Bures distance on a qutrit") {
  // rho1 = sigma1 = |0><0|, rho2 = |1><1|, sigma2 = |2><2|, weights 1/2.
  const Matrix e0 = basis_projector(3, 0), e1 = basis_projector(3, 1), e2 = basis_projector(3, 2);
  const double lhs = std::sqrt(bures_distance_sq(0.5 * (e0 + e1), 0.5 * (e0 + e2)));
  const double rhs = 0.5 * std::sqrt(bures_distance_sq(e1, e2));
  CHECK(lhs == doctest::Approx(1.0));
  CHECK(rhs == doctest::Approx(std::sqrt(2.0) / 2.0));
}
