#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hessgkm/cli.hpp"
#include "hessgkm/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of regular semisimple Hessenberg varieties via GKM graphs"};
  std::string config, type, theta, xi, ideal, mode, tasks, cache_dir, out;
  int rank = 0;
  std::uint64_t seed = 0;
  app.add_option("--config", config, "JSON case specification; flags override its fields");
  app.add_option("--type", type, "Lie type: A, B, C, D or G");
  app.add_option("--rank", rank, "rank");
  app.add_option("--theta", theta, "comma-separated 1-based simple roots of Theta, or all");
  app.add_option("--xi", xi, "comma-separated 1-based simple roots of Xi, or all");
  app.add_option("--ideal", ideal, "full, simple, minimal or a list such as [[1,0],[0,1],[1,1]]");
  app.add_option("--mode", mode, "full, partial or both");
  app.add_option("--tasks", tasks, "comma-separated tasks");
  app.add_option("--seed", seed, "seed for the Lefschetz element search");
  app.add_option("--cache-dir", cache_dir, "cache directory (default $HESSGKM_CACHE_DIR)");
  auto* no_cache = app.add_flag("--no-cache", "do not read or write the cache");
  auto* verbose = app.add_flag("--verbose", "include matrices and witnesses in the report");
  app.add_option("--out", out, "output directory (default .)");
  CLI11_PARSE(app, argc, argv);

  using hessgkm::CaseSpec;
  try {
    CaseSpec spec;
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) throw hessgkm::InvalidSpec("config: cannot read " + config);
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw hessgkm::InvalidSpec(std::string("config: ") + e.what());
      }
      spec = hessgkm::spec_from_json(j);
    }
    if (app.count("--type")) spec.type = type;
    if (app.count("--rank")) spec.rank = rank;
    if (app.count("--theta")) spec.theta = hessgkm::parse_index_list(theta, spec.rank, "theta");
    if (app.count("--xi")) spec.xi = hessgkm::parse_index_list(xi, spec.rank, "xi");
    if (app.count("--ideal")) hessgkm::set_ideal(spec, ideal);
    if (app.count("--mode")) spec.mode = mode;
    if (app.count("--tasks")) {
      spec.tasks.clear();
      std::stringstream ss(tasks);
      std::string t;
      while (std::getline(ss, t, ','))
        if (!t.empty()) spec.tasks.push_back(t);
    }
    if (app.count("--seed")) spec.seed = seed;
    if (app.count("--cache-dir")) spec.cache_dir = cache_dir;
    if (*no_cache) spec.no_cache = true;
    if (*verbose) spec.verbose = true;
    if (app.count("--out")) spec.out_dir = out;
    return hessgkm::run_and_write(spec, std::cout, std::cerr);
  } catch (const hessgkm::InvalidSpec& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
