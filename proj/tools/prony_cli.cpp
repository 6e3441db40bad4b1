// Command-line front end: moment generation with optional noise, the three
// solve modes, stratum classification, collision sweeps, and perturbation
// bound reports. File formats are JSON (signals, moments, solutions) and CSV
// (sweeps); numbers round-trip at full double precision.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prony/collision.hpp"
#include "prony/errors.hpp"
#include "prony/serialization.hpp"
#include "prony/solver.hpp"

namespace {

using namespace prony;

// Exit codes: 0 solvable/ok, 2 unsolvable stratum, 3 degenerate or
// ill-conditioned data, 4 I/O or schema problems.
constexpr int kExitUnsolvable = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitIo = 4;

// JSON configuration files: top-level objects per subcommand, plain keys for
// that subcommand's flags. Command-line flags win over the file.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    nlohmann::json j;
    for (const CLI::Option* opt : app->get_options({})) {
      if (!opt->get_lnames().empty() && opt->get_configurable()) {
        const std::string name = opt->get_lnames()[0];
        if (opt->count() == 1)
          j[name] = opt->results().at(0);
        else if (opt->count() > 1)
          j[name] = opt->results();
        else if (default_also && !opt->get_default_str().empty())
          j[name] = opt->get_default_str();
      }
    }
    for (const CLI::App* sub : app->get_subcommands({}))
      j[sub->get_name()] =
          nlohmann::json::parse(to_config(sub, default_also, false, ""));
    return j.dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      input >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::FileError(std::string("config is not valid JSON: ") + e.what());
    }
    return collect(j, "", {});
  }

 private:
  static std::vector<CLI::ConfigItem> collect(const nlohmann::json& j, const std::string& name,
                                              std::vector<std::string> parents) {
    std::vector<CLI::ConfigItem> results;
    if (j.is_object()) {
      if (!name.empty()) parents.push_back(name);
      for (const auto& item : j.items()) {
        auto sub = collect(item.value(), item.key(), parents);
        results.insert(results.end(), sub.begin(), sub.end());
      }
    } else {
      results.emplace_back();
      CLI::ConfigItem& res = results.back();
      res.name = name;
      res.parents = std::move(parents);
      if (j.is_array())
        for (const auto& element : j)
          res.inputs.push_back(element.is_string() ? element.get<std::string>() : element.dump());
      else if (j.is_string())
        res.inputs = {j.get<std::string>()};
      else
        res.inputs = {j.dump()};
    }
    return results;
  }
};

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex noise_sample(std::mt19937_64& rng, double radius) {
  while (true) {
    const Complex z(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
    if (std::abs(z) <= 1.0) return radius * z;
  }
}

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    write_file(path, content);
}

// ---- generate ----

struct GenerateArgs {
  std::string signal_path;
  Index count = 0;
  std::string output_path;
  std::vector<double> noise;
  std::uint64_t seed = 0;
};

int run_generate(const GenerateArgs& args) {
  const Signal f = signal_from_json(read_file(args.signal_path));
  const MomentVector clean = moments(f, args.count);
  if (args.noise.empty()) {
    emit(args.output_path, moments_to_json(clean));
    return 0;
  }
  std::vector<double> radii = args.noise;
  if (radii.size() == 1) radii.assign(static_cast<std::size_t>(args.count), radii[0]);
  if (radii.size() != static_cast<std::size_t>(args.count))
    throw std::invalid_argument("generate: --noise needs one radius or one per moment");
  std::mt19937_64 rng(args.seed);
  MomentVector noisy = clean;
  for (Index k = 0; k < args.count; ++k)
    noisy(k) += noise_sample(rng, radii[static_cast<std::size_t>(k)]);
  emit(args.output_path, moments_to_json(noisy, clean));
  return 0;
}

// ---- solve ----

struct SolveArgs {
  std::string input_path;
  std::string output_path;
  std::string initial_path;
  Index order = 0;
  Index rank = 0;
  std::vector<Index> multiplicity;
  double tol = kRankTol;
  double cluster_tol = -1.0;
  bool collisions = false;
};

int run_solve(const SolveArgs& args) {
  const MomentVector mu = moments_from_json(read_file(args.input_path));
  SolveResult result;
  if (args.order > 0) {
    if (mu.size() != 2 * args.order)
      throw std::invalid_argument("solve: --order d needs exactly 2d moments");
    result = invert_prony(mu, args.order, {args.tol, args.cluster_tol});
  } else if (args.rank > 0) {
    if (mu.size() != 2 * args.rank)
      throw std::invalid_argument("solve: --rank r needs exactly 2r moments");
    RankRestrictedOptions options;
    options.cluster_tol = args.cluster_tol;
    options.collision_tolerant = args.collisions;
    result = invert_rank_restricted(mu, args.rank, options);
  } else {
    Index r0 = 0;
    for (Index dj : args.multiplicity) r0 += dj;
    const Index needed = r0 + static_cast<Index>(args.multiplicity.size());
    if (mu.size() < needed)
      throw std::invalid_argument("solve: --multiplicity needs the first s0+r0 moments");
    if (args.initial_path.empty())
      throw std::invalid_argument("solve: --multiplicity mode needs --initial");
    const Signal initial = signal_from_json(read_file(args.initial_path));
    result = invert_multiplicity_restricted(mu.head(needed), args.multiplicity, initial);
  }
  emit(args.output_path, solution_to_json(result));
  return 0;
}

// ---- classify ----

struct ClassifyArgs {
  std::string input_path;
  std::string output_path;
  Index order = 0;
  double tol = kRankTol;
};

int run_classify(const ClassifyArgs& args) {
  const MomentVector mu = moments_from_json(read_file(args.input_path));
  const SolvabilityReport report = classify(mu, args.order, args.tol);
  emit(args.output_path, classification_to_json(report));
  return report.solvable() ? 0 : kExitUnsolvable;
}

// ---- collide-study ----

struct CollideArgs {
  double t = 1.0;
  double eps_start = 0.1;
  double eps_stop = 1e-4;
  Index count = 2;
  std::string scale = "log";
  double cluster_radius = -1.0;
  std::string output_path;
};

MomentVector colliding_pair_moments(double t, double eps) {
  MomentVector m(4);
  for (Index k = 0; k < 4; ++k)
    m(k) = (std::pow(Complex(t + eps), static_cast<double>(k)) -
            std::pow(Complex(t), static_cast<double>(k))) /
           eps;
  return m;
}

int run_collide_study(const CollideArgs& args) {
  if (args.count < 2) throw std::invalid_argument("collide-study: --count must be >= 2");
  std::vector<double> grid(static_cast<std::size_t>(args.count));
  for (Index i = 0; i < args.count; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(args.count - 1);
    grid[static_cast<std::size_t>(i)] =
        args.scale == "log"
            ? args.eps_start * std::pow(args.eps_stop / args.eps_start, s)
            : args.eps_start + s * (args.eps_stop - args.eps_start);
  }
  double radius = args.cluster_radius;
  if (radius < 0.0) {
    double max_eps = 0.0;
    for (double e : grid) max_eps = std::max(max_eps, std::abs(e));
    radius = 3.0 * max_eps;
  }

  std::ostringstream csv;
  csv << "eps,status,node_error,beta0_error,beta1_error,standard_amp_magnitude,basis_condition\n";
  std::optional<CVector> previous_centroids;
  for (double eps : grid) {
    csv << format_double(eps) << ',';
    try {
      CollisionSolveResult res =
          solve_with_collisions(colliding_pair_moments(args.t, eps), 2, radius);

      // keep cluster labels consistent along the sweep
      if (previous_centroids && previous_centroids->size() == res.cluster_centroids.size()) {
        const std::vector<Index> perm = match_clusters(*previous_centroids, res.cluster_centroids);
        std::vector<std::vector<Index>> blocks;
        CVector beta(res.beta.size());
        CVector centroids(res.cluster_centroids.size());
        std::vector<Index> offsets(res.configuration.blocks().size() + 1, 0);
        for (std::size_t b = 0; b < res.configuration.blocks().size(); ++b)
          offsets[b + 1] =
              offsets[b] + static_cast<Index>(res.configuration.blocks()[b].size());
        Index pos = 0;
        for (Index target = 0; target < res.cluster_centroids.size(); ++target) {
          const Index src = perm[static_cast<std::size_t>(target)];
          blocks.push_back(res.configuration.blocks()[static_cast<std::size_t>(src)]);
          const Index len = offsets[static_cast<std::size_t>(src) + 1] -
                            offsets[static_cast<std::size_t>(src)];
          beta.segment(pos, len) = res.beta.segment(offsets[static_cast<std::size_t>(src)], len);
          centroids(target) = res.cluster_centroids(src);
          pos += len;
        }
        res.beta = beta;
        res.cluster_centroids = centroids;
      }
      previous_centroids = res.cluster_centroids;

      const Complex expected_lo(args.t), expected_hi(args.t + eps);
      const double node_error = std::min(
          std::max(std::abs(res.w(0) - expected_lo), std::abs(res.w(1) - expected_hi)),
          std::max(std::abs(res.w(1) - expected_lo), std::abs(res.w(0) - expected_hi)));
      double amp = 0.0;
      for (const Spike& s : res.signal.support())
        amp = std::max(amp, s.amplitudes.cwiseAbs().maxCoeff());

      csv << "ok," << format_double(node_error) << ','
          << format_double(std::abs(res.beta(0))) << ','
          << format_double(std::abs(res.beta(1) - Complex(1.0))) << ','
          << format_double(amp) << ',' << format_double(res.basis_condition) << '\n';
    } catch (const Error& e) {
      csv << "error:" << e.what() << ",,,,,\n";
    }
  }
  emit(args.output_path, csv.str());
  return 0;
}

// ---- bounds ----

struct BoundsArgs {
  std::string signal_path;
  std::string output_path;
  double eps = 0.0;
};

int run_bounds(const BoundsArgs& args) {
  const Signal f = signal_from_json(read_file(args.signal_path));
  const ErrorBoundReport report = error_bounds(f, args.eps);
  nlohmann::json j{{"eps", report.eps},
                   {"separation", report.separation},
                   {"support_size", report.support_size},
                   {"rank", report.rank},
                   {"node_bounds", report.node_bounds},
                   {"amplitude_bounds", report.amplitude_bounds}};
  emit(args.output_path, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prony system solver: spike-train recovery from power moments"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON configuration file (flags win over the file)");

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "forward moments of a signal file");
  generate->add_option("--signal", gen.signal_path, "signal JSON file")->required();
  generate->add_option("--count", gen.count, "number of moments")
      ->required()
      ->check(CLI::PositiveNumber);
  generate->add_option("--output", gen.output_path, "moments JSON file")->required();
  generate->add_option("--noise", gen.noise,
                       "uniform complex-disc noise radius, one value or one per moment")
      ->delimiter(',');
  generate->add_option("--seed", gen.seed, "noise seed")->capture_default_str();

  SolveArgs sol;
  CLI::App* solve = app.add_subcommand("solve", "invert a moment vector");
  solve->add_option("--input", sol.input_path, "moments JSON file")->required();
  solve->add_option("--output", sol.output_path, "solution JSON file (stdout when omitted)");
  CLI::Option_group* mode = solve->add_option_group("mode", "inversion formulation");
  mode->add_option("--order", sol.order, "full solve of order d")->check(CLI::PositiveNumber);
  mode->add_option("--rank", sol.rank, "rank-restricted solve from 2r moments")
      ->check(CLI::PositiveNumber);
  mode->add_option("--multiplicity", sol.multiplicity,
                   "multiplicity-restricted solve, comma-separated d_j")
      ->delimiter(',');
  mode->require_option(1);
  solve->add_option("--initial", sol.initial_path, "initial-guess signal (multiplicity mode)");
  solve->add_option("--tol", sol.tol, "relative rank tolerance")->capture_default_str();
  solve->add_option("--cluster-tol", sol.cluster_tol,
                    "pole clustering radius (negative selects a scale-aware default)")
      ->capture_default_str();
  solve->add_flag("--collisions", sol.collisions,
                  "rank mode: solve in a divided-difference basis tolerant of node collisions");

  ClassifyArgs cls;
  CLI::App* classify_cmd = app.add_subcommand("classify", "solvability stratum of a moment vector");
  classify_cmd->add_option("--input", cls.input_path, "moments JSON file")->required();
  classify_cmd->add_option("--order", cls.order, "order d (needs 2d moments)")
      ->required()
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("--tol", cls.tol, "relative rank tolerance")->capture_default_str();
  classify_cmd->add_option("--output", cls.output_path, "report JSON file (stdout when omitted)");

  CollideArgs col;
  CLI::App* collide = app.add_subcommand(
      "collide-study",
      "sweep a colliding pair towards its collision and record the basis coefficients");
  collide->add_option("--t", col.t, "collision location")->capture_default_str();
  collide->add_option("--eps-start", col.eps_start, "first separation")->required();
  collide->add_option("--eps-stop", col.eps_stop, "last separation")->required();
  collide->add_option("--count", col.count, "number of sweep points")->required();
  collide->add_option("--scale", col.scale, "grid spacing")
      ->check(CLI::IsMember({"log", "linear"}))
      ->capture_default_str();
  collide->add_option("--cluster-radius", col.cluster_radius,
                      "root grouping radius (default: 3x the largest separation)")
      ->capture_default_str();
  collide->add_option("--output", col.output_path, "CSV file (stdout when omitted)");

  BoundsArgs bnd;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "perturbation bounds for a signal");
  bounds_cmd->add_option("--signal", bnd.signal_path, "signal JSON file")->required();
  bounds_cmd->add_option("--eps", bnd.eps, "measurement perturbation size")->required();
  bounds_cmd->add_option("--output", bnd.output_path, "report JSON file (stdout when omitted)");

  try {
    app.parse(argc, argv);
    if (generate->parsed()) return run_generate(gen);
    if (solve->parsed()) return run_solve(sol);
    if (classify_cmd->parsed()) return run_classify(cls);
    if (collide->parsed()) return run_collide_study(col);
    if (bounds_cmd->parsed()) return run_bounds(bnd);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const UnsolvableError& e) {
    std::cout << error_to_json("unsolvable", e.what());
    return kExitUnsolvable;
  } catch (const DegenerateLeadingMinorError& e) {
    std::cout << error_to_json("degenerate_leading_minor", e.what());
    return kExitDegenerate;
  } catch (const NotIrreducibleError& e) {
    std::cout << error_to_json("not_irreducible", e.what());
    return kExitDegenerate;
  } catch (const DegenerateBasisError& e) {
    std::cout << error_to_json("degenerate_basis", e.what());
    return kExitDegenerate;
  } catch (const DegenerateJacobianError& e) {
    std::cout << error_to_json("degenerate_jacobian", e.what());
    return kExitDegenerate;
  } catch (const NoConvergenceError& e) {
    std::cout << error_to_json("no_convergence", e.what());
    return kExitDegenerate;
  } catch (const ConditioningError& e) {
    std::cout << error_to_json("conditioning", e.what());
    return kExitDegenerate;
  } catch (const UndefinedSeparationError& e) {
    std::cout << error_to_json("undefined_separation", e.what());
    return kExitDegenerate;
  } catch (const IoError& e) {
    std::cout << error_to_json("io", e.what());
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cout << error_to_json("invalid_argument", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::cout << error_to_json("internal", e.what());
    return 1;
  }
}
