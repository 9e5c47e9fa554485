#include "vqr/serialize.hpp"

#include <cmath>
#include <string>

#include "vqr/error.hpp"

namespace vqr {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_fail(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t to_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) parse_fail(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

// Spectral projectors of a Hermitian operator, one per eigenvalue cluster.
Observable observable_from_operator(const Matrix& op, std::size_t subsystem) {
  const EigenDecomposition eig = hermitian_eig(op);
  std::vector<Matrix> projectors;
  std::vector<double> labels;
  const Eigen::Index n = eig.eigenvalues.size();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && eig.eigenvalues(end) - eig.eigenvalues(end - 1) < kDegeneracyGap) ++end;
    const auto block = eig.eigenvectors.middleCols(start, end - start);
    projectors.push_back(block * block.adjoint());
    labels.push_back(eig.eigenvalues.segment(start, end - start).mean());
    start = end;
  }
  return Observable(std::move(projectors), std::move(labels), subsystem);
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (const Complex& z : to_row_major(m)) entries.push_back({z.real(), z.imag()});
  return entries;
}

Matrix matrix_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim * dim) {
    parse_fail("entries must hold " + std::to_string(dim * dim) + " [re, im] pairs");
  }
  std::vector<Complex> values;
  values.reserve(j.size());
  for (const Json& z : j) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      parse_fail("matrix entry must be a [re, im] pair of numbers");
    }
    values.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return from_row_major(dim, values);
}

Json state_to_json(const DensityMatrix& rho) {
  Json j;
  j["dims"] = rho.dims();
  j["entries"] = matrix_to_json(rho.matrix());
  return j;
}

DensityMatrix state_from_json(const Json& j) {
  const Json& dims_json = field(j, "dims");
  if (!dims_json.is_array() || dims_json.empty()) parse_fail("dims must be a non-empty list");
  Dims dims;
  for (const Json& d : dims_json) dims.push_back(to_size(d, "dimension"));
  return DensityMatrix(matrix_from_json(field(j, "entries"), dims_product(dims)), dims);
}

Json observable_to_json(const Observable& a) {
  Json j;
  j["subsystem"] = a.subsystem();
  j["local_dim"] = a.local_dim();
  j["eigenvalues"] = a.eigenvalues();
  Json projectors = Json::array();
  for (const Matrix& p : a.projectors()) projectors.push_back(matrix_to_json(p));
  j["projectors"] = std::move(projectors);
  return j;
}

Observable observable_from_json(const Json& j) {
  const std::size_t subsystem = j.contains("subsystem") ? to_size(j.at("subsystem"), "subsystem") : 0;
  if (j.contains("projectors")) {
    const std::size_t d = to_size(field(j, "local_dim"), "local_dim");
    const Json& labels = field(j, "eigenvalues");
    const Json& list = field(j, "projectors");
    if (!labels.is_array() || !list.is_array()) parse_fail("eigenvalues and projectors must be lists");
    std::vector<Matrix> projectors;
    for (const Json& p : list) projectors.push_back(matrix_from_json(p, d));
    std::vector<double> values;
    for (const Json& v : labels) {
      if (!v.is_number()) parse_fail("eigenvalues must be numbers");
      values.push_back(v.get<double>());
    }
    return Observable(std::move(projectors), std::move(values), subsystem);
  }
  const Json& dims = field(j, "dims");
  if (!dims.is_array() || dims.size() != 1) parse_fail("an operator observable needs dims = [d]");
  const std::size_t d = to_size(dims[0], "dimension");
  return observable_from_operator(matrix_from_json(field(j, "entries"), d), subsystem);
}

Json realism_report_to_json(const RealismReport& report, const Json& params) {
  Json j;
  j["kind"] = report.kind.name();
  j["params"] = params;
  j["r_value"] = report.r_value;
  j["r_max"] = report.r_max;
  j["delta_i"] = report.delta_i;
  j["vqr_detected"] = report.vqr_detected;
  if (report.kind.family == MonotoneKind::Family::Lp) j["unverified_axioms"] = report.unverified_axioms;
  return j;
}

Json property_report_to_json(const PropertyReport& report) {
  Json j;
  j["kind"] = report.kind.name();
  j["property"] = to_string(report.property);
  j["trials"] = report.trials;
  j["violations"] = report.violations;
  j["worst_case"] = report.worst_case;
  j["example_seed"] = report.example_seed ? Json(*report.example_seed) : Json(nullptr);
  return j;
}

}  // namespace vqr
