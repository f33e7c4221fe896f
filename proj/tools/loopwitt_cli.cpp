// loopwitt: exact verification of tensor-field modules for (A x| Der A) (x) B.
#include "loopwitt/config.hpp"
#include "loopwitt/element_syntax.hpp"
#include "loopwitt/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace loopwitt;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::vector<std::string> suites;
  bool json_out = false;
  bool matrices = false;
  unsigned threads = 1;
  std::string x, y;
};

RunConfig load(const Options& opt) {
  RunConfig cfg = opt.config_path.empty() ? default_config() : load_config(opt.config_path);
  if (opt.seed) cfg.seed = *opt.seed;
  if (!opt.suites.empty()) {
    cfg.suites = opt.suites;
    validate(cfg);
  }
  return cfg;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json irrep_json(const Irrep& rep, bool matrices) {
  json weights = json::array();
  std::map<std::vector<int>, std::size_t> first;
  for (std::size_t b = 0; b < rep.dim(); ++b) first.try_emplace(rep.basis_contents()[b], b);
  for (const auto& [content, dim] : weight_dimensions(rep)) {
    json ev = json::array();
    for (const auto& x : rep.weight_of(first.at(content))) ev.push_back(x.str());
    weights.push_back({{"content", content}, {"eigenvalues", ev}, {"dim", dim}});
  }
  json j{{"n", rep.n()},
         {"mu", rep.mu().coords()},
         {"c", rep.c().str()},
         {"dim", rep.dim()},
         {"weyl_dim", weyl_dim(rep.mu(), rep.n())},
         {"burnside_dim", burnside_dim(rep.generators())},
         {"weights", weights}};
  if (matrices) {
    json mats = json::object();
    for (int i = 0; i < rep.n(); ++i)
      for (int k = 0; k < rep.n(); ++k)
        mats["E" + std::to_string(i + 1) + "," + std::to_string(k + 1)] = matrix_json(rep.E(i, k));
    j["matrices"] = mats;
  }
  return j;
}

json module_json(const RunConfig& cfg) {
  const TensorModule mod = module_of(cfg);
  json slices = json::array();
  for (const auto& s : weight_decomposition(mod)) slices.push_back({{"m", s.m}, {"dim", s.dim}});
  json alpha = json::array();
  for (const auto& a : mod.alpha()) alpha.push_back(a.str());

  const LoopSpace space = mod.space();
  const Degree zero = space.zero_degree();
  Degree e1 = zero, en = zero;
  e1.front() = 1;
  en.back() = 1;
  std::vector<std::pair<LoopElem, Degree>> samples;
  for (int i = 0; i < mod.n(); ++i) samples.emplace_back(space.D(space.unit(i), zero), zero);
  samples.emplace_back(space.t(e1), e1);
  samples.emplace_back(space.D(space.unit(0), en), en);
  json mats = json::array();
  for (const auto& [x, dst] : samples)
    mats.push_back({{"x", format_element(x)},
                    {"src", zero},
                    {"dst", dst},
                    {"matrix", matrix_json(mod.op_matrix(x, {zero}, {dst}))}});

  return {{"slices", slices},
          {"alpha", alpha},
          {"mu", cfg.mu},
          {"c", cfg.c.str()},
          {"B", presentation_to_json(*cfg.B)},
          {"window_radius", cfg.window_radius},
          {"sample_matrices", mats}};
}

int verify_all(const Options& opt) {
  const RunConfig cfg = load(opt);
  const auto reports = run_suites(cfg, opt.threads);
  bool ok = true;
  json all = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    all.push_back(r.to_json());
  }
  if (opt.json_out) {
    std::cout << all.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << "  cases=" << r.cases
                << "  failures=" << r.failures.size() << "  " << static_cast<long>(r.wall_time_ms) << " ms\n";
      for (const auto& note : r.notes) std::cout << "     note: " << note << "\n";
      if (!r.passed()) std::cout << "     first failure: " << r.failures.front().dump() << "\n";
    }
  }
  return ok ? 0 : kExitFailure;
}

int bracket_cmd(const Options& opt) {
  std::optional<int> rank;
  BPresPtr pres = BPresentation::trivial();
  if (!opt.config_path.empty()) {
    const RunConfig cfg = load(opt);
    rank = cfg.n;
    pres = cfg.B;
  }
  const LoopElem x = parse_element(opt.x, rank, pres);
  const LoopElem y = parse_element(opt.y, x.rank(), pres);
  const LoopElem z = bracket(x, y);
  if (opt.json_out) {
    std::cout << json{{"x", format_element(x)}, {"y", format_element(y)}, {"bracket", format_element(z)}}.dump(2)
              << "\n";
  } else {
    std::cout << format_element(z) << "\n";
  }
  return 0;
}

int irrep_info(const Options& opt) {
  const RunConfig cfg = load(opt);
  const Irrep rep = irrep_of(cfg);
  if (opt.json_out) {
    std::cout << irrep_json(rep, opt.matrices).dump(2) << "\n";
    return 0;
  }
  std::cout << "gl_" << rep.n() << " module V(mu, c), mu = " << json(rep.mu().coords()).dump()
            << ", c = " << rep.c().str() << "\n"
            << "dim " << rep.dim() << " (Weyl formula " << weyl_dim(rep.mu(), rep.n()) << ")\n"
            << "burnside dimension " << burnside_dim(rep.generators()) << "\n";
  for (const auto& [content, dim] : weight_dimensions(rep))
    std::cout << "  weight " << json(content).dump() << "  multiplicity " << dim << "\n";
  if (opt.matrices)
    for (int i = 0; i < rep.n(); ++i)
      for (int k = 0; k < rep.n(); ++k)
        std::cout << "E" << i + 1 << k + 1 << " = " << matrix_json(rep.E(i, k)).dump() << "\n";
  return 0;
}

int module_info(const Options& opt) {
  std::cout << module_json(load(opt)).dump(2) << "\n";
  return 0;
}

int export_cmd(const Options& opt) {
  const RunConfig cfg = load(opt);
  namespace fs = std::filesystem;
  const fs::path dir(opt.out_dir);
  fs::create_directories(dir / "reports");
  auto write = [](const fs::path& p, const json& j) {
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << j.dump(2) << "\n";
  };
  write(dir / "config.json", config_to_json(cfg));
  write(dir / "irrep.json", irrep_json(irrep_of(cfg), true));
  write(dir / "module.json", module_json(cfg));
  bool ok = true;
  for (const auto& r : run_suites(cfg, opt.threads)) {
    ok = ok && r.passed();
    write(dir / "reports" / (r.suite + ".json"), r.to_json());
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << " -> " << (dir / "reports" / (r.suite + ".json")).string()
              << "\n";
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for tensor-field modules of loop Witt algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--config", opt.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", opt.seed, "override the configured seed");
  app.add_option("--suite", opt.suites, "run only this suite (repeatable)");
  app.add_flag("--json", opt.json_out, "JSON output");

  auto* verify = app.add_subcommand("verify-all", "run every configured suite");
  verify->add_option("--threads", opt.threads, "suites run concurrently")->check(CLI::Range(1u, 64u));
  auto* br = app.add_subcommand("bracket", "bracket of two algebra elements");
  br->add_option("x", opt.x)->required();
  br->add_option("y", opt.y)->required();
  auto* irrep = app.add_subcommand("irrep-info", "gl_n module V(mu,c)");
  irrep->add_flag("--matrices", opt.matrices, "print every E_ij");
  auto* module = app.add_subcommand("module-info", "weight table and sample action matrices as JSON");
  auto* exp = app.add_subcommand("export", "write config, irrep, module and suite reports to a directory");
  exp->add_option("--out", opt.out_dir, "output directory")->required();
  exp->add_option("--threads", opt.threads, "suites run concurrently")->check(CLI::Range(1u, 64u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (*verify) return verify_all(opt);
    if (*br) return bracket_cmd(opt);
    if (*irrep) return irrep_info(opt);
    if (*module) return module_info(opt);
    if (*exp) return export_cmd(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
