#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hitchin/field_io.hpp"
#include "hitchin/parallel.hpp"
#include "hitchin/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

json default_config() {
  json cfg;
  cfg["grid"] = {{"N", 16}, {"Lx", 1.0}, {"Ly", 1.0}, {"n", 2}, {"scheme", "spectral"}};
  cfg["seed"] = 1;
  cfg["pairs"] = 100;
  cfg["threads"] = 1;
  cfg["out"] = ".";
  cfg["input"] = "";
  cfg["fixture"] = "diag-higgs-perturbed";
  cfg["tolerances"] = json::object();
  cfg["solver"] = {{"max_iters", 5000}, {"tol", 1e-12}, {"step0", 0.1}};
  cfg["family"] = {{"K", 16}, {"tol", 1e-11}};
  return cfg;
}

hitchin::Grid grid_from(const json& cfg) {
  hitchin::Grid g;
  const json& jg = cfg.at("grid");
  g.N = jg.at("N").get<int>();
  g.Lx = jg.at("Lx").get<double>();
  g.Ly = jg.at("Ly").get<double>();
  g.n = jg.at("n").get<int>();
  const std::string scheme = jg.at("scheme").get<std::string>();
  if (scheme == "spectral")
    g.scheme = hitchin::DerivScheme::spectral;
  else if (scheme == "central2")
    g.scheme = hitchin::DerivScheme::central2;
  else
    throw std::invalid_argument("unknown scheme: " + scheme);
  g.validate();
  return g;
}

hitchin::Configuration starting_point(const json& cfg, const hitchin::Grid& g) {
  const std::string input = cfg.at("input").get<std::string>();
  if (!input.empty()) {
    if (!std::filesystem::exists(input))
      throw std::invalid_argument("input path does not exist: " + input);
    return hitchin::read_configuration(input, g);
  }
  const std::string fixture = cfg.at("fixture").get<std::string>();
  const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();
  if (fixture == "zero") return hitchin::fixture_zero(g);
  if (fixture == "diag-higgs") return hitchin::fixture_diag_higgs(g);
  if (fixture == "diag-higgs-perturbed") return hitchin::fixture_diag_higgs_perturbed(g, seed);
  throw std::invalid_argument("unknown fixture: " + fixture);
}

std::filesystem::path out_path(const json& cfg, const std::string& name) {
  const std::filesystem::path dir = cfg.at("out").get<std::string>();
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_json(const std::filesystem::path& p, const json& j) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << j.dump(2) << "\n";
}

int cmd_verify(const json& cfg) {
  hitchin::VerifyOptions opts;
  opts.grid = grid_from(cfg);
  opts.seed = cfg.at("seed").get<std::uint64_t>();
  opts.pairs = cfg.at("pairs").get<int>();
  for (auto it = cfg.at("tolerances").begin(); it != cfg.at("tolerances").end(); ++it)
    opts.tol_overrides[it.key()] = it.value().get<double>();

  const hitchin::VerifyReport rep = hitchin::run_verify_suite(opts);
  write_json(out_path(cfg, "report.json"), hitchin::to_json(rep, opts));

  for (const hitchin::CheckResult& c : rep.checks)
    std::printf("%s %s measured=%.3e tolerance=%.3e\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.measured, c.tolerance);
  std::printf("overall: %s\n", rep.overall_pass ? "pass" : "fail");
  return rep.overall_pass ? kExitOk : kExitNumerical;
}

int cmd_solve(const json& cfg) {
  const hitchin::Grid g = grid_from(cfg);
  const std::string input = cfg.at("input").get<std::string>();
  if (!input.empty() &&
      std::filesystem::weakly_canonical(input) ==
          std::filesystem::weakly_canonical(out_path(cfg, "configuration.json")))
    throw std::invalid_argument("input path coincides with the output configuration: " + input);
  const hitchin::Configuration c0 = starting_point(cfg, g);
  hitchin::SolveOptions sopts;
  sopts.max_iters = cfg.at("solver").at("max_iters").get<int>();
  sopts.tol = cfg.at("solver").at("tol").get<double>();
  sopts.step0 = cfg.at("solver").at("step0").get<double>();

  const hitchin::SolveResult res = hitchin::solve(c0, sopts);
  hitchin::write_configuration(out_path(cfg, "configuration.json").string(), res.config);
  hitchin::write_trace_jsonl(out_path(cfg, "trace.jsonl").string(), res.trace);

  const double final_energy = res.trace.records.back().energy;
  std::printf("status=%s iterations=%d energy=%.17g\n", to_string(res.trace.status),
              res.trace.records.back().iter, final_energy);
  return res.trace.status == hitchin::SolveStatus::converged ? kExitOk : kExitNumerical;
}

int cmd_family(const json& cfg) {
  const hitchin::Grid g = grid_from(cfg);
  const hitchin::Configuration c = starting_point(cfg, g);
  const int K = cfg.at("family").at("K").get<int>();
  const double tol = cfg.at("family").at("tol").get<double>();

  const hitchin::LambdaScanReport rep = hitchin::flatness_scan(c, K);
  write_json(out_path(cfg, "family.json"), hitchin::to_json(rep));

  double worst = 0.0;
  for (double r : rep.decomposition_residuals) worst = std::max(worst, r);
  double max_norm = 0.0;
  for (double v : rep.flatness_norms) max_norm = std::max(max_norm, v);
  std::printf("K=%d max_flatness_norm=%.17g max_decomposition_residual=%.17g\n", K, max_norm, worst);
  return worst <= tol ? kExitOk : kExitNumerical;
}

int cmd_report(const json& cfg) {
  const hitchin::Grid g = grid_from(cfg);
  const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();
  const std::uint64_t base = seed * 1000003ULL;
  const hitchin::TangentVector x = hitchin::random_tangent(g, base, g.N / 4);
  const hitchin::TangentVector y = hitchin::random_tangent(g, base + 1, g.N / 4);
  const hitchin::BilinearReport rep = hitchin::make_bilinear_report(x, y);
  write_json(out_path(cfg, "report.json"), hitchin::to_json(rep));

  bool ok = true;
  for (const auto& [name, value] : rep.identity_residuals) ok = ok && value <= 1e-10;
  std::printf("g=%.17g omega=%.17g q1=%.17g q2=%.17g identities=%s\n", rep.g, rep.omega, rep.q1,
              rep.q2, ok ? "pass" : "fail");
  return ok ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-duality equations on a flat periodic surface: solver and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_dir, input_path, fixture, scheme;
  std::uint64_t seed = 0;
  int threads = 0, grid_N = 0, grid_n = 0, pairs = 0, family_K = 0, solver_iters = 0;
  double grid_Lx = 0, grid_Ly = 0, solver_tol = 0, solver_step0 = 0, family_tol = 0;
  std::vector<std::string> tol_overrides;

  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--threads", threads, "worker threads for per-site maps");
  app.add_option("--pairs", pairs, "random pair count");
  app.add_option("--input", input_path, "input configuration file");
  app.add_option("--fixture", fixture, "starting fixture: zero | diag-higgs | diag-higgs-perturbed");
  app.add_option("--grid.N", grid_N, "sites per side (power of two)");
  app.add_option("--grid.Lx", grid_Lx, "period length in x");
  app.add_option("--grid.Ly", grid_Ly, "period length in y");
  app.add_option("--grid.n", grid_n, "matrix rank");
  app.add_option("--grid.scheme", scheme, "derivative scheme: spectral | central2");
  app.add_option("--solver.max_iters", solver_iters, "gradient flow iteration cap");
  app.add_option("--solver.tol", solver_tol, "energy convergence target");
  app.add_option("--solver.step0", solver_step0, "initial step size");
  app.add_option("--family.K", family_K, "number of roots of unity in the scan");
  app.add_option("--family.tol", family_tol, "decomposition residual gate");
  app.add_option("--tol", tol_overrides, "check tolerance override NAME=VALUE (repeatable)");

  CLI::App* verify = app.add_subcommand("verify", "run the identity suites and write report.json");
  CLI::App* solve = app.add_subcommand("solve", "run the gradient flow and write trace.jsonl");
  CLI::App* family = app.add_subcommand("family", "scan flatness over roots of unity");
  CLI::App* report = app.add_subcommand("report", "evaluate one seeded bilinear report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  json cfg = default_config();
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot open config: " + config_path);
      json user;
      in >> user;
      cfg.merge_patch(user);
    }
    if (app.count("--seed")) cfg["seed"] = seed;
    if (app.count("--out")) cfg["out"] = out_dir;
    if (app.count("--threads")) cfg["threads"] = threads;
    if (app.count("--pairs")) cfg["pairs"] = pairs;
    if (app.count("--input")) cfg["input"] = input_path;
    if (app.count("--fixture")) cfg["fixture"] = fixture;
    if (app.count("--grid.N")) cfg["grid"]["N"] = grid_N;
    if (app.count("--grid.Lx")) cfg["grid"]["Lx"] = grid_Lx;
    if (app.count("--grid.Ly")) cfg["grid"]["Ly"] = grid_Ly;
    if (app.count("--grid.n")) cfg["grid"]["n"] = grid_n;
    if (app.count("--grid.scheme")) cfg["grid"]["scheme"] = scheme;
    if (app.count("--solver.max_iters")) cfg["solver"]["max_iters"] = solver_iters;
    if (app.count("--solver.tol")) cfg["solver"]["tol"] = solver_tol;
    if (app.count("--solver.step0")) cfg["solver"]["step0"] = solver_step0;
    if (app.count("--family.K")) cfg["family"]["K"] = family_K;
    if (app.count("--family.tol")) cfg["family"]["tol"] = family_tol;
    for (const std::string& kv : tol_overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--tol expects NAME=VALUE: " + kv);
      cfg["tolerances"][kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    for (const auto& [name, value] : cfg.at("tolerances").items())
      if (!(value.get<double>() > 0.0))
        throw std::invalid_argument("tolerance for " + name + " must be positive");

    hitchin::set_threads(cfg.at("threads").get<int>());

    if (verify->parsed()) return cmd_verify(cfg);
    if (solve->parsed()) return cmd_solve(cfg);
    if (family->parsed()) return cmd_family(cfg);
    if (report->parsed()) return cmd_report(cfg);
    std::fprintf(stderr, "no command given\n");
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
}
