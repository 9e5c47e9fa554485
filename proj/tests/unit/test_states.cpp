#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "vqr/states.hpp"

using namespace vqr;
using testing::error_code_of;

TEST_CASE("density matrix validation") {
  Matrix m = identity(2) / 2.0;
  CHECK_NOTHROW(DensityMatrix{m});
  CHECK(error_code_of([&] { DensityMatrix(identity(2)); }) == ErrorCode::TraceNotOne);
  Matrix bad = m;
  bad(0, 1) = 0.3;
  CHECK(error_code_of([&] { DensityMatrix{bad}; }) == ErrorCode::NotHermitian);
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.2;
  neg(1, 1) = -0.2;
  try {
    DensityMatrix{neg};
    FAIL("negative state accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPSD);
    CHECK(e.magnitude() == doctest::Approx(-0.2));
  }
  CHECK(error_code_of([&] { DensityMatrix(identity(4) / 4.0, Dims{2, 3}); }) == ErrorCode::DimensionMismatch);
  CHECK(error_code_of([&] { validate_state(Matrix::Zero(2, 3), Dims{2}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("named states") {
  const DensityMatrix w1 = werner(1.0);
  CHECK(w1.purity() == doctest::Approx(1.0));
  CHECK(w1.matrix()(0, 3).real() == doctest::Approx(0.5));
  CHECK((werner(0.0).matrix() - identity(4) / 4.0).norm() < 1e-15);
  CHECK(error_code_of([] { werner(1.5); }) == ErrorCode::OutOfRange);

  // mu = 1: (|01> - |10>) style correlations; a pure maximally entangled state.
  CHECK(mu_state(1.0).purity() == doctest::Approx(1.0));
  CHECK(mu_state(0.5).dims() == Dims{2, 2});
  CHECK(error_code_of([] { mu_state(-0.1); }) == ErrorCode::OutOfRange);

  const DensityMatrix phi3 = max_entangled(3);
  CHECK(phi3.purity() == doctest::Approx(1.0));
  CHECK((partial_trace(phi3, phi3.dims(), {0}) - identity(3) / 3.0).norm() < 1e-14);
  CHECK(error_code_of([] { max_entangled(1); }) == ErrorCode::OutOfRange);

  const DensityMatrix p = product(maximally_mixed(Dims{2}), werner(0.3));
  CHECK(p.dims() == Dims{2, 2, 2});
}

TEST_CASE("observables") {
  const Observable z = spin_observable(0.0, 0.0);
  CHECK((z.local_operator() - pauli_z()).norm() < 1e-15);
  const Observable x = spin_observable(0.0, std::numbers::pi / 2.0);
  CHECK((x.local_operator() - pauli_x()).norm() < 1e-15);
  const Observable y = spin_observable(std::numbers::pi / 2.0, std::numbers::pi / 2.0);
  CHECK((y.local_operator() - pauli_y()).norm() < 1e-15);
  CHECK(z.rank_one());
  CHECK(z.outcomes() == 2);

  SUBCASE("projective checks") {
    CHECK(error_code_of([] { Observable({basis_projector(2, 0)}, {1.0}); }) == ErrorCode::NonProjective);
    CHECK(error_code_of([] {
            Observable({basis_projector(2, 0), basis_projector(2, 0)}, {1.0, 2.0});
          }) == ErrorCode::NonProjective);
    CHECK(error_code_of([] {
            Observable({basis_projector(2, 0), basis_projector(2, 1)}, {1.0, 1.0});
          }) == ErrorCode::NonProjective);
    CHECK(error_code_of([] {
            Observable({0.5 * identity(2), 0.5 * identity(2)}, {1.0, -1.0});
          }) == ErrorCode::NonProjective);
  }

  SUBCASE("degenerate observable") {
    Matrix p = basis_projector(3, 0) + basis_projector(3, 1);
    const Observable a({p, basis_projector(3, 2)}, {0.0, 1.0});
    CHECK_FALSE(a.rank_one());
    CHECK(a.local_dim() == 3);
  }

  const Observable c = computational_observable(3, 1, Dims{2, 3});
  CHECK(c.subsystem() == 1);
  CHECK_NOTHROW(c.require_compatible(Dims{2, 3}));
  CHECK(error_code_of([&] { c.require_compatible(Dims{3, 2}); }) == ErrorCode::DimensionMismatch);
  CHECK(error_code_of([] { computational_observable(3, 0, Dims{2, 3}); }) == ErrorCode::DimensionMismatch);
  CHECK(c.on_subsystem(0).subsystem() == 0);
}

TEST_CASE("sampling is seeded, normalized and of the requested rank") {
  const DensityMatrix a = random_density(4, 2, 99);
  const DensityMatrix b = random_density(4, 2, 99);
  CHECK((a.matrix() - b.matrix()).norm() == 0.0);
  CHECK(std::abs(a.matrix().trace() - Complex(1.0)) < 1e-14);
  const EigenDecomposition e = psd_eig(a);
  CHECK(e.eigenvalues(0) == 0.0);
  CHECK(e.eigenvalues(1) == 0.0);
  CHECK(e.eigenvalues(2) > 1e-6);
  CHECK(error_code_of([] { random_density(3, 0, 1); }) == ErrorCode::OutOfRange);
  CHECK(error_code_of([] { random_density(3, 4, 1); }) == ErrorCode::OutOfRange);

  Rng rng(4);
  const Matrix u = haar_unitary(5, rng);
  CHECK(is_unitary(u, 1e-12));
  CHECK(random_pure(Dims{2, 3}, 7).purity() == doctest::Approx(1.0));

  const Observable o = random_observable(4, 12);
  CHECK(o.rank_one());
  Matrix sum = Matrix::Zero(4, 4);
  for (const Matrix& p : o.projectors()) sum += p;
  CHECK((sum - identity(4)).norm() < 1e-12);
}

TEST_CASE("Ginibre spectrum statistics") {
  // Mean purity of rank-d Ginibre states on C^d is 2d/(d^2+1).
  Rng rng(2024);
  const std::size_t d = 3;
  double total = 0.0;
  const int n = 4000;
  for (int i = 0; i < n; ++i) total += random_density(d, d, rng).purity();
  CHECK(total / n == doctest::Approx(2.0 * d / (d * d + 1.0)).epsilon(0.02));
}
