#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "format.hpp"
#include "gyro/gyro.hpp"
#include "scene.hpp"

namespace gyroball {

namespace {

using nlohmann::json;

struct Common {
  std::string model = "einstein";
  double radius = 1.0;
};

struct EvalArgs : Common {
  std::string op;
  double r = 2.0;
  std::vector<std::string> points;
};

struct CheckArgs : Common {
  std::string suite = "all";
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  double cap = 0.9;
  double rel_tol = gyro::TolerancePolicy{}.rel_tol;
  int dim = 2;
  unsigned threads = 0;
};

struct FigureArgs {
  std::string scene;
  std::string format = "csv";
  std::string out;
  std::string to;
  std::uint64_t seed = 1;
};

struct ConvertArgs {
  std::string to;
  double radius = 1.0;
  std::vector<std::string> points;
};

/// A usage problem detected after CLI11 accepted the arguments.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

gyro::BallPoint parse_point(const std::string& literal, const gyro::BallParams& params) {
  gyro::Vector v;
  try {
    v = parse_point_literal(literal);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (v.size() != params.dim()) {
    throw UsageError("point '" + literal + "' has " + std::to_string(v.size()) +
                     " coordinates, expected " + std::to_string(params.dim()));
  }
  return gyro::BallPoint(params, v);
}

int infer_dim(const std::vector<std::string>& literals) {
  if (literals.empty()) throw UsageError("no points given");
  try {
    return static_cast<int>(parse_point_literal(literals.front()).size());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require_count(const std::vector<std::string>& points, std::size_t lo, std::size_t hi,
                   const std::string& op) {
  if (points.size() < lo || points.size() > hi) {
    throw UsageError("--op " + op + " takes " + std::to_string(lo) +
                     (lo == hi ? "" : " to " + std::to_string(hi)) + " point(s)");
  }
}

json matrix_json(const gyro::Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i).transpose()));
  return rows;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const gyro::BallParams params(infer_dim(a.points), a.radius);
  const gyro::GyroModel model(gyro::parse_model(a.model), params);
  std::vector<gyro::BallPoint> pts;
  for (const std::string& p : a.points) pts.push_back(parse_point(p, params));

  json result;
  if (a.op == "add") {
    require_count(a.points, 2, 2, a.op);
    result = to_json(model.add(pts[0], pts[1]).coords());
  } else if (a.op == "coadd") {
    require_count(a.points, 2, 64, a.op);
    result = to_json(pts.size() == 2 ? model.coadd_closed(pts[0], pts[1]).coords()
                                     : model.coadd_k(pts).coords());
  } else if (a.op == "gyr") {
    require_count(a.points, 2, 3, a.op);
    const gyro::GyrationMap g = model.gyration(pts[0], pts[1]);
    result = pts.size() == 3 ? to_json(g.apply(pts[2].coords())) : matrix_json(g.coeffs());
  } else if (a.op == "scalar") {
    require_count(a.points, 1, 1, a.op);
    result = to_json(model.scalar_mul(a.r, pts[0]).coords());
  } else if (a.op == "distance") {
    require_count(a.points, 2, 2, a.op);
    result = gyro::gyrodistance(model, pts[0], pts[1]);
  } else if (a.op == "midpoint") {
    require_count(a.points, 2, 2, a.op);
    result = to_json(gyro::gyromidpoint(model, pts[0], pts[1]).point.coords());
  } else {
    throw UsageError("unknown --op '" + a.op + "'");
  }
  out << result.dump() << '\n';
  return kExitOk;
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const gyro::GyroModel model(gyro::parse_model(a.model), gyro::BallParams(a.dim, a.radius));
  gyro::SuiteOptions options;
  options.samples = a.samples;
  options.seed = a.seed;
  options.radius_cap = a.cap;
  options.policy.rel_tol = a.rel_tol;
  options.threads = a.threads;
  options.policy.validate();

  std::vector<gyro::IdentityReport> reports;
  try {
    reports = gyro::run_check_suite(model, a.suite, options);
  } catch (const gyro::Error& e) {
    if (e.code() == gyro::ErrorCode::UnknownIdentity) throw UsageError(e.what());
    throw;
  }

  const std::string title = a.suite == "broken-model" ? "broken-einstein" : model.name();
  out << "model " << title << "  dim " << a.dim << "  c " << format_number(a.radius) << "  seed "
      << a.seed << "  cap " << format_number(a.cap) << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%-30s %8s %12s %12s  %s\n", "identity", "samples", "max_resid",
                "tolerance", "result");
  out << line;
  bool all = true;
  for (const gyro::IdentityReport& r : reports) {
    std::snprintf(line, sizeof line, "%-30s %8zu %12.3e %12.3e  %s", r.name.c_str(), r.samples,
                  r.max_residual, r.tolerance, r.passed ? "pass" : "FAIL");
    out << line;
    if (r.errors) out << "  (" << r.errors << " errors)";
    if (r.skipped) out << "  (" << r.skipped << " outside domain)";
    out << '\n';
    all = all && r.passed;
  }
  out << (all ? "all passed" : "FAILED") << '\n';
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_figure(const FigureArgs& a, std::ostream& out) {
  const Scene scene = load_scene(a.scene);
  std::optional<gyro::ModelTag> to;
  if (!a.to.empty()) to = gyro::parse_model(a.to);
  const std::uint64_t seed = a.seed;
  const Figure fig = build_figure(scene, seed, to);

  std::ostringstream buf;
  if (a.format == "csv") {
    write_csv(fig, buf);
  } else if (a.format == "json") {
    write_json(fig, buf);
  } else if (a.format == "svg") {
    write_svg(fig, buf);
  } else {
    throw UsageError("unknown --format '" + a.format + "'");
  }
  if (a.out.empty() || a.out == "-") {
    out << buf.str();
  } else {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + a.out + "'");
    file << buf.str();
  }
  return kExitOk;
}

int cmd_endpoints(const EvalArgs& a, std::ostream& out) {
  require_count(a.points, 2, 2, "endpoints");
  const gyro::BallParams params(infer_dim(a.points), a.radius);
  const gyro::GyroModel model(gyro::parse_model(a.model), params);
  const gyro::Endpoints e =
      gyro::gyroline_endpoints(model, parse_point(a.points[0], params), parse_point(a.points[1], params));
  json result{{"e1", to_json(e.e1)},
              {"e2", to_json(e.e2)},
              {"norms", {e.e1.norm(), e.e2.norm()}}};
  out << result.dump() << '\n';
  return kExitOk;
}

int cmd_convert(const ConvertArgs& a, std::ostream& out) {
  const gyro::BallParams params(infer_dim(a.points), a.radius);
  const gyro::ModelTag target = gyro::parse_model(a.to);
  json result = json::array();
  for (const std::string& lit : a.points) {
    const gyro::BallPoint p = parse_point(lit, params);
    result.push_back(
        to_json((target == gyro::ModelTag::Einstein ? gyro::m_to_e(p) : gyro::e_to_m(p)).coords()));
  }
  out << result.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Einstein and Mobius gyrovector spaces in the n-ball", "gyroball"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gyroball 0.1.0");

  const auto model_check = CLI::IsMember({"einstein", "mobius"});

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate one operation and print the result as JSON");
  eval_cmd->add_option("--model", eval.model, "einstein | mobius")->check(model_check);
  eval_cmd->add_option("--op", eval.op, "add | coadd | gyr | scalar | distance | midpoint")
      ->required()
      ->check(CLI::IsMember({"add", "coadd", "gyr", "scalar", "distance", "midpoint"}));
  eval_cmd->add_option("--c", eval.radius, "Ball radius")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--r", eval.r, "Scalar for --op scalar");
  eval_cmd->add_option("points", eval.points, "Point literals such as 0.5,0")->required();

  CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand("check", "Run identity and property suites");
  check_cmd->add_option("--model", check.model, "einstein | mobius")->check(model_check);
  check_cmd->add_option("--suite", check.suite,
                        "Identity name, gyrogroup, cancellation, cooperation, scalar, geometry, "
                        "barycentric, isomorphism, broken-model or all");
  check_cmd->add_option("--samples", check.samples, "Random samples per identity")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
  CLI::Option* check_seed = check_cmd->add_option("--seed", check.seed, "Sampler seed");
  check_cmd->add_option("--cap", check.cap, "Sample radius cap as a fraction of c")
      ->check(CLI::Range(0.0, 1.0));
  check_cmd->add_option("--rel-tol", check.rel_tol, "Relative tolerance")->check(CLI::PositiveNumber);
  check_cmd->add_option("--c", check.radius, "Ball radius")->check(CLI::PositiveNumber);
  check_cmd->add_option("--dim", check.dim, "Ambient dimension")->check(CLI::Range(1, 64));
  check_cmd->add_option("--threads", check.threads, "Worker threads (0 = all cores)");

  FigureArgs figure;
  CLI::App* figure_cmd = app.add_subcommand("figure", "Sample the constructions of a scene file");
  figure_cmd->add_option("scene", figure.scene, "Scene JSON file")->required();
  figure_cmd->add_option("--format", figure.format, "csv | json | svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  figure_cmd->add_option("--out", figure.out, "Output path (default: standard output)");
  figure_cmd->add_option("--to", figure.to, "Carry every point to this model")->check(model_check);
  CLI::Option* figure_seed = figure_cmd->add_option("--seed", figure.seed, "Seed for random_points");

  EvalArgs ends;
  CLI::App* ends_cmd = app.add_subcommand("endpoints", "Boundary endpoints of the gyroline through two points");
  ends_cmd->add_option("--model", ends.model, "einstein | mobius")->check(model_check);
  ends_cmd->add_option("--c", ends.radius, "Ball radius")->check(CLI::PositiveNumber);
  ends_cmd->add_option("points", ends.points, "Two point literals")->required();

  ConvertArgs convert;
  CLI::App* convert_cmd = app.add_subcommand("convert", "Carry points across the Einstein-Mobius isomorphism");
  convert_cmd->add_option("--to", convert.to, "Target model")->required()->check(model_check);
  convert_cmd->add_option("--c", convert.radius, "Ball radius")->check(CLI::PositiveNumber);
  convert_cmd->add_option("points", convert.points, "Point literals")->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  // An explicit --seed wins; otherwise GYROBALL_SEED; otherwise the default.
  std::optional<std::uint64_t> env_seed;
  if (const char* env = std::getenv("GYROBALL_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      env_seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      err << "error: GYROBALL_SEED must be a non-negative integer\n";
      return kExitUsage;
    }
  }

  try {
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*check_cmd) {
      if (check_seed->count() == 0 && env_seed) check.seed = *env_seed;
      return cmd_check(check, out);
    }
    if (*figure_cmd) {
      if (figure_seed->count() == 0) {
        if (env_seed) {
          figure.seed = *env_seed;
        } else {
          // Without a flag or environment override the scene's own seed applies.
          const Scene scene = load_scene(figure.scene);
          if (scene.seed) figure.seed = *scene.seed;
        }
      }
      return cmd_figure(figure, out);
    }
    if (*ends_cmd) return cmd_endpoints(ends, out);
    if (*convert_cmd) return cmd_convert(convert, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SceneError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SvgDimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSvgDimension;
  } catch (const gyro::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace gyroball
