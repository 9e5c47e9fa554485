// vqr: sweeps, axiom audit and identity checks for realism monotones.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "vqr/error.hpp"
#include "vqr/harness.hpp"

namespace {

using namespace vqr;
using namespace vqr::harness;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct Options {
  std::string out = "-";
  std::string format = "csv";
  std::string gnuplot;
  std::string kinds;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 0;
  std::size_t eps_steps = 101;
  std::size_t mu_steps = 101;
  std::size_t d_min = 2;
  std::size_t d_max = 16;
  std::vector<double> phis{0.0, 0.7853981633974483, 1.5707963267948966};
  double theta = 0.0;
  std::string state_path;
  std::string observable_path;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("VQR_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw Error(ErrorCode::ParseError, std::string("VQR_SEED is not an integer: ") + env);
    return v;
  }
  return 1;
}

SweepSpec make_spec(Experiment e, const Options& o) {
  SweepSpec spec;
  spec.experiment = e;
  spec.eps_steps = o.eps_steps;
  spec.mu_steps = o.mu_steps;
  spec.d_min = o.d_min;
  spec.d_max = o.d_max;
  spec.phis = o.phis;
  spec.theta = o.theta;
  if (!o.kinds.empty()) spec.kinds = parse_monotone_kinds(o.kinds);
  if (o.trials) spec.trials = o.trials;
  spec.seed = resolve_seed(o.seed);
  spec.output_path = o.out;
  if (o.format == "json") {
    spec.format = Format::JSON;
  } else if (o.format != "csv") {
    throw Error(ErrorCode::ParseError, "format must be csv or json, got '" + o.format + "'");
  }
  return spec;
}

int emit_table(const SweepSpec& spec, const Table& table, const Options& o) {
  write_text(spec.output_path,
             spec.format == Format::CSV ? to_csv(table) : dump_json(to_json(table, spec_hash(spec))));
  if (!o.gnuplot.empty()) write_text(o.gnuplot, gnuplot_script(spec, spec.output_path));
  return kExitOk;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

int run_eval(const Options& o) {
  const DensityMatrix rho = state_from_json(read_json_file(o.state_path));
  const Observable a = observable_from_json(read_json_file(o.observable_path));
  const std::vector<MonotoneKind> kinds = parse_monotone_kinds(o.kinds.empty() ? "tr,hs,bu,he,vn" : o.kinds);
  Json out = Json::array();
  for (const MonotoneKind& kind : kinds) {
    Json params;
    params["state"] = o.state_path;
    params["observable"] = o.observable_path;
    Json j = realism_report_to_json(realism(rho, a, kind), params);
    if (a.rank_one()) j["delta_i_dilation"] = delta_information_full_space(rho, a, kind);
    out.push_back(std::move(j));
  }
  write_text(o.out, dump_json(out));
  return kExitOk;
}

void add_output(CLI::App* cmd, Options& o, bool tabular) {
  cmd->add_option("--out", o.out, "Output file, '-' for stdout");
  if (tabular) {
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--gnuplot", o.gnuplot, "Also write a gnuplot script for the output");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realism monotone sweeps, axiom audit and identity verification"};
  app.require_subcommand(1);
  Options o;

  auto* werner_cmd = app.add_subcommand("werner", "Realism of the Werner family against epsilon");
  werner_cmd->add_option("--eps-steps", o.eps_steps, "Grid points on [0, 1]")->check(CLI::PositiveNumber);
  werner_cmd->add_option("--kinds", o.kinds, "Comma-separated kinds (tr,hs,lpP,bu,he,vn)");
  add_output(werner_cmd, o, true);

  auto* rmax_cmd = app.add_subcommand("rmax", "Maximal realism against the environment dimension");
  rmax_cmd->add_option("--dmin", o.d_min, "Smallest d_E");
  rmax_cmd->add_option("--dmax", o.d_max, "Largest d_E");
  rmax_cmd->add_option("--kinds", o.kinds, "Comma-separated kinds");
  add_output(rmax_cmd, o, true);

  auto* mu_cmd = app.add_subcommand("mu", "Bures and Hellinger realism of the mu family");
  mu_cmd->add_option("--phi", o.phis, "Comma-separated polar angles")->delimiter(',');
  mu_cmd->add_option("--theta", o.theta, "Azimuthal angle of the reported rows");
  mu_cmd->add_option("--mu-steps", o.mu_steps, "Grid points on [0, 1]")->check(CLI::PositiveNumber);
  mu_cmd->add_option("--kinds", o.kinds, "Comma-separated kinds");
  add_output(mu_cmd, o, true);

  auto* audit_cmd = app.add_subcommand("audit", "Axiom audit of every kind");
  audit_cmd->add_option("--trials", o.trials, "Random trials per cell (default 200)");
  audit_cmd->add_option("--seed", o.seed, "Base seed (falls back to VQR_SEED)");
  audit_cmd->add_option("--kinds", o.kinds, "Comma-separated kinds");
  add_output(audit_cmd, o, false);

  auto* verify_cmd = app.add_subcommand("verify", "Identity verification suite");
  verify_cmd->add_option("--trials", o.trials, "Random trials per identity (default 100)");
  verify_cmd->add_option("--seed", o.seed, "Base seed (falls back to VQR_SEED)");
  add_output(verify_cmd, o, false);

  auto* props_cmd = app.add_subcommand("properties", "Distance property table");
  props_cmd->add_option("--trials", o.trials, "Random trials per property (default 500)");
  props_cmd->add_option("--seed", o.seed, "Base seed (falls back to VQR_SEED)");
  add_output(props_cmd, o, false);

  auto* eval_cmd = app.add_subcommand("eval", "Realism of a state and observable given as JSON files");
  eval_cmd->add_option("--state", o.state_path, "State JSON {dims, entries}")->required();
  eval_cmd->add_option("--observable", o.observable_path, "Observable JSON")->required();
  eval_cmd->add_option("--kinds", o.kinds, "Comma-separated kinds");
  add_output(eval_cmd, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*werner_cmd) {
      const SweepSpec spec = make_spec(Experiment::WernerSweep, o);
      return emit_table(spec, run_werner_sweep(spec), o);
    }
    if (*rmax_cmd) {
      const SweepSpec spec = make_spec(Experiment::RmaxSweep, o);
      return emit_table(spec, run_rmax_sweep(spec), o);
    }
    if (*mu_cmd) {
      const SweepSpec spec = make_spec(Experiment::MuSweep, o);
      return emit_table(spec, run_mu_sweep(spec), o);
    }
    if (*audit_cmd) {
      if (!o.trials) o.trials = 200;
      const AuditResult result = run_axiom_audit(make_spec(Experiment::AxiomAudit, o));
      write_text(o.out, dump_json(to_json(result)));
      for (const AuditCell& c : result.cells) {
        if (!c.matches) {
          std::cerr << "mismatch: " << c.kind.name() << " " << to_string(c.axiom) << " expected "
                    << to_string(c.expected) << ", found " << to_string(c.empirical) << "\n";
        }
      }
      return result.all_match() ? kExitOk : kExitMismatch;
    }
    if (*verify_cmd) {
      if (!o.trials) o.trials = 100;
      const VerifyResult result = run_verify(make_spec(Experiment::Verify, o));
      write_text(o.out, dump_json(to_json(result)));
      for (const VerifyRow& r : result.rows) {
        if (!r.pass()) {
          std::cerr << "failed: " << r.identity << " residual " << format_number(r.max_residual) << " >= "
                    << format_number(r.tolerance) << "\n";
        }
      }
      return result.all_pass() ? kExitOk : kExitMismatch;
    }
    if (*props_cmd) {
      if (!o.trials) o.trials = 500;
      const PropertiesResult result = run_properties(make_spec(Experiment::Properties, o));
      write_text(o.out, dump_json(to_json(result)));
      return result.all_match() ? kExitOk : kExitMismatch;
    }
    if (*eval_cmd) return run_eval(o);
  } catch (const Error& e) {
    std::cerr << "vqr: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
