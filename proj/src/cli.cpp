#include "aqw/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "aqw/angles.hpp"
#include "aqw/canonical.hpp"
#include "aqw/csv.hpp"
#include "aqw/density.hpp"
#include "aqw/entanglement.hpp"
#include "aqw/reproduce.hpp"
#include "aqw/spectra.hpp"
#include "aqw/sweep.hpp"

namespace aqw {

namespace {

double angle_of(const std::string& text) { return parse_angle(text).value; }

CoinParams coin_of(const std::string& text) {
  if (auto named = coins::by_name(text)) return *named;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3)
    throw std::invalid_argument("coin must be a name (M1..M4, G1..G4, H) or 'alpha,beta,gamma'");
  return {angle_of(parts[0]), angle_of(parts[1]), angle_of(parts[2])};
}

SweepParam sweep_param_of(const std::string& name) {
  if (name == "phi") return SweepParam::Phi;
  if (name == "alpha") return SweepParam::Alpha;
  if (name == "beta") return SweepParam::Beta;
  if (name == "gamma") return SweepParam::Gamma;
  throw std::invalid_argument("unknown sweep parameter '" + name + "'");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
  os << content;
}

std::ostream& out_stream(const std::string& path, std::ofstream& file) {
  if (path == "-" || path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  return file;
}

// Cross-route agreement: the Schmidt fast path for one-vs-rest negativities
// against the materialized density + partial transpose + trace norm route,
// on seeded random walk states.
CheckReport oracle_report(int samples, int t_max, unsigned long long seed) {
  CheckReport rep;
  rep.title = "fast path vs dense partial-transpose agreement";
  rep.meta = "samples=" + std::to_string(samples) + " t_max=" + std::to_string(t_max) +
             " seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int k = 0; k < samples; ++k) {
    const CoinParams coin(2 * M_PI * u01(rng), 2 * M_PI * u01(rng), 2 * M_PI * u01(rng));
    const InitParams init(M_PI * u01(rng), 2 * M_PI * u01(rng));
    const int t = 1 + static_cast<int>(u01(rng) * t_max);
    const StateTensor s = to_tensor(evolve(init, constant_sequence(coin, t), t));
    const DensityMatrix full = pure_density(s);
    double worst = 0.0;
    for (Dof i : {Dof::X, Dof::Y, Dof::C}) {
      const double fast = negativity_full(s, i);
      const double dense = trace_norm(partial_transpose(full, i).mat) - 1.0;
      worst = std::max(worst, std::abs(fast - dense));
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    rep.rows.push_back({"oracle", "sample " + std::to_string(k) + " t=" + std::to_string(t),
                        "<= 1e-8", buf, worst <= 1e-8});
  }
  return rep;
}

struct CliOptions {
  // evolve/measure
  std::string coin = "H";
  std::string theta = "pi/2";
  std::string phi = "0";
  int steps = 1;
  std::string measure = "N";
  int n_theta = 33;
  std::string out = "-";
  // sweep
  int table = 0;
  std::string vary;
  std::string fix;
  bool include_endpoints = false;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  // verify
  std::string suite = "gme";
  int samples = 100;
  int tmax = 4;
  unsigned long long seed = 7;
  int lu_samples = 50;
  // reproduce
  std::string target;
  std::string out_dir = ".";
  int max_t = -1;
};

int cmd_evolve(const CliOptions& o) {
  const WalkState s =
      evolve(InitParams(angle_of(o.theta), angle_of(o.phi)), constant_sequence(coin_of(o.coin), o.steps), o.steps);
  std::ofstream file;
  write_state_csv(out_stream(o.out, file), s);
  return 0;
}

int cmd_measure(const CliOptions& o) {
  const CoinParams coin = coin_of(o.coin);
  const double theta = angle_of(o.theta);
  const double phi = angle_of(o.phi);
  const EvolutionSequence seq = constant_sequence(coin, o.steps);

  std::function<double(const StateTensor&)> f;
  bool averaged = false;
  if (o.measure == "N") f = [](const StateTensor& s) { return negativity_half(s); };
  else if (o.measure == "Nav") { averaged = true; f = [](const StateTensor& s) { return negativity_half(s); }; }
  else if (o.measure == "pi") f = [](const StateTensor& s) { return pi_tangle(s).pi_xyc; };
  else if (o.measure == "piav") { averaged = true; f = [](const StateTensor& s) { return pi_tangle(s).pi_xyc; }; }
  else if (o.measure == "pix") f = [](const StateTensor& s) { return residual_pi(s, Dof::X); };
  else if (o.measure == "piy") f = [](const StateTensor& s) { return residual_pi(s, Dof::Y); };
  else if (o.measure == "pic") f = [](const StateTensor& s) { return residual_pi(s, Dof::C); };
  else throw std::invalid_argument("unknown measure '" + o.measure + "' (N, Nav, pi, piav, pix, piy, pic)");

  const std::vector<double> values =
      averaged ? averaged_series(f, phi, seq, o.steps, o.n_theta)
               : measure_series(f, InitParams(theta, phi), seq, o.steps);

  std::vector<MeasureRow> rows;
  for (int t = 1; t <= o.steps; ++t) {
    MeasureRow row;
    row.t = t;
    row.has_theta = !averaged;
    row.theta = theta;
    row.phi = phi;
    row.measure = o.measure;
    row.value = values[static_cast<std::size_t>(t - 1)];
    rows.push_back(row);
  }
  std::ofstream file;
  write_measure_csv(out_stream(o.out, file), rows);
  return 0;
}

int cmd_sweep(const CliOptions& o) {
  if (o.table != 0) {
    const TableMatchReport rep = reproduce_table(o.table, o.n_theta, o.workers);
    std::cout << rep.to_text();
    return rep.all_pass() ? 0 : 1;
  }
  if (o.vary.empty()) throw std::invalid_argument("sweep needs --table or --vary");

  SweepGrid grid;
  {
    std::stringstream ss(o.vary);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("--vary expects name:count entries");
      grid.varied.push_back(
          {sweep_param_of(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
    }
  }
  if (!o.fix.empty()) {
    std::stringstream ss(o.fix);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--fix expects name=angle entries");
      grid.fixed[sweep_param_of(item.substr(0, eq))] = angle_of(item.substr(eq + 1));
    }
  }
  grid.T = o.steps;
  grid.measure = o.measure == "piav" ? Measure::PiTangle : Measure::NegativityHalf;
  if (o.measure != "piav" && o.measure != "Nav")
    throw std::invalid_argument("sweep measure must be Nav or piav");
  grid.n_theta = o.n_theta;
  grid.include_endpoints = o.include_endpoints;
  grid.workers = o.workers;

  const SweepResult r = run_sweep(grid);
  std::ofstream file;
  write_sweep_csv(out_stream(o.out, file), r);

  double mx = r.rows.front().value;
  for (const auto& row : r.rows) mx = std::max(mx, row.value);
  std::cerr << "sweep: " << r.rows.size() << " points, max " << format_double(mx) << "\n";
  return 0;
}

int cmd_verify(const CliOptions& o) {
  CheckReport rep;
  if (o.suite == "gme") rep = gme_axiom_report(o.lu_samples, o.seed);
  else if (o.suite == "ckw") rep = ckw_report(o.samples, o.tmax, o.seed);
  else if (o.suite == "oracle") rep = oracle_report(std::min(o.samples, 50), o.tmax, o.seed);
  else throw std::invalid_argument("unknown suite '" + o.suite + "' (gme, ckw, oracle)");

  std::cout << rep.to_text();
  if (o.out != "-" && !o.out.empty()) write_file(o.out, rep.to_csv());
  return rep.all_pass() ? 0 : 1;
}

int cmd_reproduce(const CliOptions& o) {
  if (o.target == "table1" || o.target == "table2") {
    const int which = o.target == "table1" ? 1 : 2;
    const TableMatchReport rep = reproduce_table(which, o.n_theta, o.workers);
    std::cout << rep.to_text();
    std::ostringstream csv;
    csv << "row,description,expected_size,actual_size,max_value,pass\n";
    for (const auto& r : rep.rows)
      csv << r.row << "," << r.description << "," << r.expected.size() << "," << r.actual.size()
          << "," << format_double(r.max_value) << "," << (r.pass ? 1 : 0) << "\n";
    write_file(o.out_dir + "/" + o.target + ".csv", csv.str());
    return rep.all_pass() ? 0 : 1;
  }

  const FigureData fig = reproduce_figure(o.target, o.max_t, o.n_theta);
  write_file(o.out_dir + "/" + fig.target + ".csv", fig.to_csv());
  write_file(o.out_dir + "/" + fig.target + ".dat", fig.to_plot_data());
  std::cout << fig.target << ": " << fig.series.size() << " series written to " << o.out_dir
            << "/" << fig.target << ".{csv,dat}\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CliOptions o;
  CLI::App app{"2D alternate quantum walk simulator: single-particle entanglement generation"};
  app.set_config("--config", "", "flat key=value config file; command-line flags override");
  app.require_subcommand(1);

  auto* evolve_cmd = app.add_subcommand("evolve", "evolve a walk and dump the state as CSV");
  evolve_cmd->add_option("--coin", o.coin, "coin name or 'alpha,beta,gamma'");
  evolve_cmd->add_option("--theta", o.theta, "initial-state theta");
  evolve_cmd->add_option("--phi", o.phi, "initial-state phi");
  evolve_cmd->add_option("--steps", o.steps, "number of time steps")->check(CLI::NonNegativeNumber);
  evolve_cmd->add_option("--out", o.out, "output path ('-' for stdout)");

  auto* measure_cmd = app.add_subcommand("measure", "entanglement measures for t in [1, steps]");
  measure_cmd->add_option("--measure", o.measure, "N, Nav, pi, piav, pix, piy or pic");
  measure_cmd->add_option("--coin", o.coin, "coin name or 'alpha,beta,gamma'");
  measure_cmd->add_option("--theta", o.theta, "theta for point measures");
  measure_cmd->add_option("--phi", o.phi, "initial-state phi");
  measure_cmd->add_option("--steps", o.steps, "number of time steps")->check(CLI::NonNegativeNumber);
  measure_cmd->add_option("--n-theta", o.n_theta, "theta samples for averaged measures");
  measure_cmd->add_option("--out", o.out, "output path ('-' for stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "parameter-grid sweep of averaged measures");
  sweep_cmd->add_option("--table", o.table, "reproduce argmax table 1 or 2")->check(CLI::Range(1, 2));
  sweep_cmd->add_option("--vary", o.vary, "varied parameters, e.g. phi:32,alpha:32");
  sweep_cmd->add_option("--fix", o.fix, "fixed parameters, e.g. beta=pi/2,gamma=pi/2");
  sweep_cmd->add_option("--measure", o.measure, "Nav or piav");
  sweep_cmd->add_option("--steps", o.steps, "time step of the sweep")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--n-theta", o.n_theta, "theta samples per grid point");
  sweep_cmd->add_flag("--include-endpoints", o.include_endpoints,
                      "sample [0, 2pi] inclusive instead of excluding 2pi");
  sweep_cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", o.out, "output path ('-' for stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", o.suite, "gme, ckw or oracle");
  verify_cmd->add_option("--samples", o.samples, "random samples for ckw/oracle");
  verify_cmd->add_option("--tmax", o.tmax, "maximum time step for ckw/oracle");
  verify_cmd->add_option("--seed", o.seed, "rng seed");
  verify_cmd->add_option("--lu-samples", o.lu_samples, "local-unitary samples for gme");
  verify_cmd->add_option("--out", o.out, "also write the report CSV to this path");

  bool list_targets = false;
  auto* repro_cmd = app.add_subcommand("reproduce", "emit the data behind a named figure or table");
  repro_cmd->add_option("target", o.target, "figure/table name (see --list)");
  repro_cmd->add_flag("--list", list_targets, "list available targets");
  repro_cmd->add_option("--out-dir", o.out_dir, "output directory");
  repro_cmd->add_option("--max-t", o.max_t, "truncate time-series targets at this t");
  repro_cmd->add_option("--n-theta", o.n_theta, "theta samples");
  repro_cmd->add_option("--workers", o.workers, "worker threads for table targets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(evolve_cmd)) return cmd_evolve(o);
    if (app.got_subcommand(measure_cmd)) return cmd_measure(o);
    if (app.got_subcommand(sweep_cmd)) return cmd_sweep(o);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(o);
    if (app.got_subcommand(repro_cmd)) {
      if (list_targets) {
        for (const auto& t : figure_targets()) std::cout << t << "\n";
        std::cout << "table1\ntable2\n";
        return 0;
      }
      if (o.target.empty()) {
        std::cerr << "reproduce: missing target\n";
        return 2;
      }
      return cmd_reproduce(o);
    }
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace aqw
