#pragma once

#include <doctest.h>

#include "oracles.hpp"
#include "vqr/error.hpp"
#include "vqr/linalg.hpp"

namespace testing {

inline oracle::Dense to_dense(const vqr::Matrix& m) {
  oracle::Dense d(static_cast<std::size_t>(m.rows()));
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.n; ++j) d(i, j) = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return d;
}

inline double max_diff(const vqr::Matrix& m, const oracle::Dense& d) {
  REQUIRE(static_cast<std::size_t>(m.rows()) == d.n);
  double worst = 0.0;
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.n; ++j)
      worst = std::max(worst, std::abs(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - d(i, j)));
  return worst;
}

template <typename F>
vqr::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const vqr::Error& e) {
    return e.code();
  }
  FAIL("expected a vqr::Error");
  return vqr::ErrorCode::NumericalFailure;
}

}  // namespace testing
