#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vqr/error.hpp"
#include "vqr/harness.hpp"

namespace vqr::harness {

namespace {

std::string render(const Cell& cell) {
  struct Visitor {
    std::string operator()(double x) const { return format_number(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

Json cell_json(const Cell& cell) {
  return std::visit([](const auto& v) { return Json(v); }, cell);
}

std::string canonical(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::WernerSweep: return "werner";
    case Experiment::RmaxSweep: return "rmax";
    case Experiment::MuSweep: return "mu";
    case Experiment::AxiomAudit: return "audit";
    case Experiment::Verify: return "verify";
    case Experiment::Properties: return "properties";
  }
  return "?";
}

void SweepSpec::validate() const {
  if (eps_steps < 1 || mu_steps < 1) throw Error(ErrorCode::OutOfRange, "grid needs at least one point");
  if (d_min < 2 || d_max < d_min) {
    throw Error(ErrorCode::OutOfRange, "dimension grid must satisfy 2 <= d_min <= d_max",
                static_cast<double>(d_min));
  }
  if (theta_points < 1) throw Error(ErrorCode::OutOfRange, "theta grid needs at least one point");
  if (trials < 1) throw Error(ErrorCode::OutOfRange, "trials must be positive");
  for (double phi : phis) {
    if (!std::isfinite(phi)) throw Error(ErrorCode::OutOfRange, "angles must be finite", phi);
  }
  if (!std::isfinite(theta)) throw Error(ErrorCode::OutOfRange, "angles must be finite", theta);
}

std::vector<MonotoneKind> default_kinds(Experiment e) {
  switch (e) {
    case Experiment::WernerSweep:
    case Experiment::RmaxSweep:
      return parse_monotone_kinds("tr,hs,bu,he,vn");
    case Experiment::MuSweep:
      return parse_monotone_kinds("bu,he");
    case Experiment::AxiomAudit:
      return parse_monotone_kinds("tr,hs,lp1.5,lp3,bu,he,vn");
    default:
      return {};
  }
}

std::string spec_hash(const SweepSpec& spec) {
  std::ostringstream text;
  text << "experiment=" << to_string(spec.experiment) << ";eps_steps=" << spec.eps_steps
       << ";mu_steps=" << spec.mu_steps << ";d_min=" << spec.d_min << ";d_max=" << spec.d_max << ";phis=";
  for (double phi : spec.phis) text << canonical(phi) << ',';
  text << ";theta=" << canonical(spec.theta) << ";theta_points=" << spec.theta_points << ";kinds=";
  for (const MonotoneKind& k : spec.kinds) text << k.name() << ',';
  text << ";trials=" << spec.trials << ";seed=" << spec.seed
       << ";format=" << (spec.format == Format::CSV ? "csv" : "json");

  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += render(row[c]);
    }
    out += '\n';
  }
  return out;
}

Json to_json(const Table& table, const std::string& hash) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = cell_json(row[c]);
    rows.push_back(std::move(obj));
  }
  Json j;
  j["spec_hash"] = hash;
  j["rows"] = std::move(rows);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::IoError, "failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << content;
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

std::string gnuplot_script(const SweepSpec& spec, const std::string& csv_path) {
  const std::vector<MonotoneKind> kinds = spec.kinds.empty() ? default_kinds(spec.experiment) : spec.kinds;
  std::ostringstream s;
  s << "set datafile separator ','\n"
    << "set key outside\n";
  std::vector<std::string> curves;
  for (const MonotoneKind& k : kinds) {
    const std::string name = k.name();
    const std::string src = "'" + csv_path + "' every ::1 using 2:";
    switch (spec.experiment) {
      case Experiment::WernerSweep:
      case Experiment::RmaxSweep:
        curves.push_back(src + "(strcol(3) eq '" + name + "' ? $4 : NaN) with lines title '" + name + "'");
        break;
      case Experiment::MuSweep:
        for (double phi : spec.phis) {
          const std::string p = canonical(phi);
          curves.push_back(src + "(strcol(4) eq '" + name + "' && abs($3 - " + p + ") < 1e-9 ? $5 : NaN)" +
                           " with lines title '" + name + " phi=" + format_number(phi) + "'");
        }
        break;
      default:
        throw Error(ErrorCode::DomainError, "no plot for experiment " + to_string(spec.experiment));
    }
  }
  switch (spec.experiment) {
    case Experiment::WernerSweep: s << "set xlabel 'epsilon'\nset ylabel 'R'\n"; break;
    case Experiment::RmaxSweep: s << "set xlabel 'd_E'\nset ylabel 'R_max'\n"; break;
    default: s << "set xlabel 'mu'\nset ylabel 'R'\n"; break;
  }
  s << "plot ";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (i) s << ", \\\n     ";
    s << curves[i];
  }
  s << "\n";
  return s.str();
}

}  // namespace vqr::harness
