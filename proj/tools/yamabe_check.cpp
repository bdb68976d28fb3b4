#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "yamabe/catalog.hpp"
#include "yamabe/report.hpp"
#include "yamabe/run_config.hpp"

namespace {

constexpr int kExitConfig = 2;

int list_surfaces() {
  for (const yamabe::SurfaceSpec& s : yamabe::catalog()) {
    std::printf("%-22s %s\n", s.name.c_str(), yamabe::describe(s).c_str());
  }
  return 0;
}

int explain_surface(const std::string& name) {
  const auto spec = yamabe::find_catalog_entry(name);
  if (!spec) {
    std::cerr << "unknown surface '" << name << "'; see list-surfaces\n";
    return kExitConfig;
  }
  std::cout << yamabe::explain(*spec);
  return 0;
}

struct Overrides {
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> checks;
};

int run_config(const std::string& path, const Overrides& o) {
  yamabe::RunConfig cfg;
  try {
    cfg = yamabe::load_config(path);
    if (o.tol) cfg.tol.exact = *o.tol;
    if (o.seed) cfg.seed = *o.seed;
    if (o.out) cfg.output = *o.out;
    if (o.checks) cfg.checks = yamabe::parse_check_list(*o.checks);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  const yamabe::RunResult result = yamabe::run(cfg);
  const std::string text = yamabe::to_json_text(result.report);
  const std::string summary = yamabe::summary_text(result);
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    std::cerr << summary;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!(out << text)) {
      std::cerr << "cannot write report to '" << cfg.output << "'\n";
      return kExitConfig;
    }
    std::cout << summary << "report written to " << cfg.output << "\n";
  }
  return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks Yamabe and quasi-Yamabe soliton structure of x^T on sampled submanifolds"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides overrides;
  auto* run = app.add_subcommand("run", "run the checks described by a config file");
  run->add_option("config", config_path, "config file")->required();
  run->add_option("--tol", overrides.tol, "tolerance for exact (jet) residuals")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", overrides.seed, "random sampling seed");
  run->add_option("--out", overrides.out, "report path, '-' for stdout");
  run->add_option("--checks", overrides.checks,
                  "comma-separated subset of identities,yamabe,quasi_yamabe,classify,torse,weyl "
                  "(or all / none)");

  auto* list = app.add_subcommand("list-surfaces", "list catalog surfaces");

  std::string surface;
  auto* explain = app.add_subcommand("explain", "print a catalog surface and its expectations");
  explain->add_option("surface", surface, "catalog name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*list) return list_surfaces();
  if (*explain) return explain_surface(surface);
  return run_config(config_path, overrides);
}
