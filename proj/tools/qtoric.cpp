// qtoric: command-line front end for the deformed toric-variety toolkit.
//
// Subcommands:
//   fan <file>          validate a fan and list its cones, dual generators,
//                       and relation lattices
//   chart <file> <id>   emit the deformed chart presentation of one cone
//   verify <suite>      run a named verification suite        (see suites)
//   specialize          numeric re-check of symbolic suites   (see suites)
//
// Exit codes: 0 success / all identities pass, 1 identity failure,
// 2 input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qtoric/fans.hpp"
#include "qtoric/presentation.hpp"
#include "qtoric/scalars.hpp"
#include "qtoric/suites.hpp"
#include "qtoric/torus.hpp"

namespace {

using nlohmann::json;
using namespace qtoric;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string vec_text(const fans::Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// Deterministic cone listing shared by `fan` and `chart`: the face closure
// of the fan, largest dimension first (the zero cone is always last).
int cmd_fan(const std::string& path, const std::string& format) {
  fans::Fan fan = fans::Fan::from_json_text(read_file(path));
  const auto& cones = fan.cones();
  if (format == "json") {
    json j;
    j["n"] = fan.ambient();
    j["rays"] = fan.rays();
    j["cones"] = json::array();
    for (std::size_t id = 0; id < cones.size(); ++id) {
      const auto& entry = cones[id];
      json c;
      c["id"] = id;
      c["dim"] = entry.dim;
      c["rays"] = entry.ray_indices;
      c["dual_generators"] = fans::hilbert_basis(entry.cone.dual());
      c["relation_lattice"] = fans::relation_lattice(fans::hilbert_basis(entry.cone.dual()));
      j["cones"].push_back(c);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "fan: n = " << fan.ambient() << ", " << fan.rays().size() << " rays, "
            << fan.max_cones().size() << " maximal cones, " << cones.size()
            << " cones in the face closure\n";
  std::cout << "rays:\n";
  for (std::size_t s = 0; s < fan.rays().size(); ++s)
    std::cout << "  v" << s << " = " << vec_text(fan.rays()[s]) << "\n";
  for (std::size_t id = 0; id < cones.size(); ++id) {
    const auto& entry = cones[id];
    std::cout << "cone " << id << ": dim " << entry.dim << ", rays {";
    for (std::size_t k = 0; k < entry.ray_indices.size(); ++k)
      std::cout << (k ? "," : "") << "v" << entry.ray_indices[k];
    std::cout << "}\n";
    fans::Mat gens = fans::hilbert_basis(entry.cone.dual());
    std::cout << "  dual generators:";
    for (const auto& m : gens) std::cout << " " << vec_text(m);
    std::cout << "\n";
    fans::Mat rels = fans::relation_lattice(gens);
    if (!rels.empty()) {
      std::cout << "  relation lattice:";
      for (const auto& r : rels) std::cout << " " << vec_text(r);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_chart(const std::string& path, int cone_id, const std::string& format) {
  fans::Fan fan = fans::Fan::from_json_text(read_file(path));
  const auto& cones = fan.cones();
  if (cone_id < 0 || std::size_t(cone_id) >= cones.size())
    throw std::runtime_error("unknown cone id " + std::to_string(cone_id) + " (fan has " +
                             std::to_string(cones.size()) + " cones)");
  torus::ChartAlgebra alg = torus::chart_algebra(cones[std::size_t(cone_id)].cone);
  if (format == "json") {
    std::cout << alg.pres.json_text(2);
  } else {
    std::cout << alg.pres.text();
  }
  return 0;
}

// --theta accepts inline JSON (leading '{') or a file path.
scalars::ThetaSpec load_theta(const std::string& arg) {
  std::string text = arg;
  if (text.find('{') == std::string::npos) text = read_file(arg);
  return scalars::ThetaSpec::from_json_text(text);
}

// Shared driver for `verify` (symbolic unless --theta given) and
// `specialize` (numeric theta mandatory).
int cmd_verify(const std::string& suite, const std::string& theta_arg, bool theta_required,
               int n, int d, int deg, int box, int jobs, const std::string& format) {
  suites::RunConfig cfg;
  if (!theta_arg.empty()) {
    cfg.theta = load_theta(theta_arg);
    if (!cfg.theta->is_numeric())
      throw std::invalid_argument("theta must be numeric for specialization");
  } else if (theta_required) {
    throw std::invalid_argument("specialize requires --theta with a numeric matrix");
  }
  cfg.n = n;
  cfg.d = d;
  cfg.deg = deg;
  cfg.box = box;
  cfg.jobs = jobs;
  suites::VerificationReport rep = suites::run_suite(suite, cfg);
  if (format == "json") {
    std::cout << rep.json_text();
  } else {
    std::cout << rep.text();
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformed toric varieties: charts, gluing, and identity verification"};
  app.require_subcommand(1);

  std::string fan_path;
  std::string format = "text";
  int cone_id = 0;

  CLI::App* fan_cmd = app.add_subcommand("fan", "validate a fan file and list its cones");
  fan_cmd->add_option("file", fan_path, "fan JSON file")->required();
  fan_cmd->add_option("--format", format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* chart_cmd =
      app.add_subcommand("chart", "emit the deformed chart presentation of a cone");
  chart_cmd->add_option("file", fan_path, "fan JSON file")->required();
  chart_cmd->add_option("cone", cone_id, "cone id from `fan` listing")->required();
  chart_cmd->add_option("--format", format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string suite;
  std::string theta_arg;
  int n = 0, d = 0, deg = 0, box = 0, jobs = 1;
  const std::string suite_help =
      "suite: star-assoc|det|laplace|minors|pluecker|young|classify|"
      "chart-iso|hilbert|koszul|eta|ideals|kaehler|examples";

  auto add_suite_flags = [&](CLI::App* cmd) {
    cmd->add_option("suite", suite, suite_help)->required();
    cmd->add_option("--n", n, "ambient size / torus rank (suite default if omitted)");
    cmd->add_option("--d", d, "minor / block size (suite default if omitted)");
    cmd->add_option("--deg", deg, "maximum graded degree (suite default if omitted)");
    cmd->add_option("--box", box, "semigroup enumeration box (suite default if omitted)");
    cmd->add_option("--jobs", jobs, "worker threads (default 1)");
    cmd->add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a named verification suite (symbolic by default)");
  add_suite_flags(verify_cmd);
  verify_cmd->add_option("--theta", theta_arg,
                         "numeric theta (JSON file or inline) for a numeric run");

  CLI::App* spec_cmd = app.add_subcommand(
      "specialize", "re-run a suite under numeric specialization, reporting max |Delta|");
  add_suite_flags(spec_cmd);
  spec_cmd->add_option("--theta", theta_arg, "numeric theta (JSON file or inline), required")
      ->required();

  try {
    app.parse(argc, argv);
    if (fan_cmd->parsed()) return cmd_fan(fan_path, format);
    if (chart_cmd->parsed()) return cmd_chart(fan_path, cone_id, format);
    if (verify_cmd->parsed())
      return cmd_verify(suite, theta_arg, false, n, d, deg, box, jobs, format);
    if (spec_cmd->parsed())
      return cmd_verify(suite, theta_arg, true, n, d, deg, box, jobs, format);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
