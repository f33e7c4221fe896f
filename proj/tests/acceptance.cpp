// Acceptance gate: one PASS/FAIL line per criterion, exact residuals, wall-clock limits.
#include "loopwitt/config.hpp"
#include "loopwitt/opcheck.hpp"
#include "loopwitt/suites.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace loopwitt;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::size_t configs = 0;
  std::size_t cases = 0;
  std::vector<std::string> problems;

  void fail(const std::string& why) {
    ok = false;
    if (problems.size() < 5) problems.push_back(why);
  }
};

std::vector<BPresPtr> b_kinds() {
  return {BPresentation::trivial(), BPresentation::poly_quot(LaurentPoly::linear_power(2, 3), 2),
          BPresentation::laurent(3)};
}

std::string b_name(const BPresPtr& B) {
  switch (B->kind()) {
    case BKind::Trivial:
      return "trivial";
    case BKind::PolyQuot:
      return "polyquot(x-2)^3";
    case BKind::Laurent:
      return "laurent@3";
  }
  return "?";
}

struct GlCase {
  int n;
  std::vector<int> mu;
  std::size_t weyl;  // expected dimension
};

// mu = (1), (2) for n = 2; (1,0), (1,1) for n = 3.
const std::vector<GlCase> kGlCases{{2, {1}, 2}, {2, {2}, 3}, {3, {1, 0}, 3}, {3, {1, 1}, 8}};

std::vector<GaussRat> c_values() { return {GaussRat(0), GaussRat(1), GaussRat(mpq_class(5, 2))}; }

RunConfig make_config(int n, std::vector<int> mu, GaussRat c, BPresPtr B, int R, std::vector<std::string> suites,
                      int cases) {
  RunConfig cfg;
  cfg.n = n;
  cfg.mu = std::move(mu);
  cfg.c = std::move(c);
  cfg.B = std::move(B);
  cfg.window_radius = R;
  cfg.suites = std::move(suites);
  cfg.cases_per_suite = cases;
  validate(cfg);
  return cfg;
}

std::string label(const RunConfig& cfg) {
  std::ostringstream os;
  os << "n=" << cfg.n << " mu=" << config_to_json(cfg)["mu"].dump() << " c=" << cfg.c.str() << " B=" << b_name(cfg.B);
  return os.str();
}

// Runs the suites of cfg; every report must pass and reach min_cases.
void run_and_check(const RunConfig& cfg, std::size_t min_cases, Outcome& out) {
  ++out.configs;
  for (const auto& r : run_suites(cfg)) {
    out.cases += r.cases;
    if (!r.passed()) out.fail(label(cfg) + " " + r.suite + ": " + r.failures.front().dump().substr(0, 300));
    if (r.cases < min_cases)
      out.fail(label(cfg) + " " + r.suite + ": only " + std::to_string(r.cases) + " cases");
  }
}

bool report(const std::string& id, const std::string& title, const Outcome& out, double seconds, double limit) {
  const bool ok = out.ok && seconds < limit;
  std::printf("%s %s %s: %zu configs, %zu cases, %.2f s (limit %.0f s)\n", ok ? "PASS" : "FAIL", id.c_str(),
              title.c_str(), out.configs, out.cases, seconds, limit);
  for (const auto& p : out.problems) std::printf("     %s\n", p.c_str());
  if (seconds >= limit) std::printf("     time limit exceeded\n");
  std::fflush(stdout);
  return ok;
}

template <typename F>
bool criterion(const std::string& id, const std::string& title, double limit, F body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return report(id, title, out, secs, limit);
}

}  // namespace

int main() {
  bool all = true;

  all &= criterion("C1", "bracket antisymmetry and Jacobi", 10, [](Outcome& out) {
    for (int n = 1; n <= 3; ++n)
      for (const auto& B : b_kinds()) {
        RunConfig cfg = default_config(n);
        cfg.B = B;
        cfg.suites = {"bracket"};
        cfg.cases_per_suite = 200;
        validate(cfg);
        run_and_check(cfg, 200, out);
      }
  });

  all &= criterion("C2", "gl_n relations, Weyl dimension, trace, Burnside", 30, [](Outcome& out) {
    for (const auto& gc : kGlCases)
      for (const auto& c : c_values()) {
        const RunConfig cfg = make_config(gc.n, gc.mu, c, BPresentation::trivial(), 1, {"gl"}, 1);
        run_and_check(cfg, static_cast<std::size_t>(gc.n * gc.n * gc.n * gc.n + 3), out);
        const Irrep rep = irrep_of(cfg);
        if (rep.dim() != gc.weyl)
          out.fail(label(cfg) + ": dim " + std::to_string(rep.dim()) + " expected " + std::to_string(gc.weyl));
      }
  });

  all &= criterion("C3", "module axiom and associativity", 60, [](Outcome& out) {
    for (const auto& gc : kGlCases)
      for (const auto& c : c_values())
        for (const auto& B : b_kinds()) {
          RunConfig cfg = make_config(gc.n, gc.mu, c, B, 3, {"module_axiom"}, 200);
          run_and_check(cfg, 200, out);
          cfg.suites = {"assoc_unital"};
          cfg.cases_per_suite = 100;
          run_and_check(cfg, 100, out);
        }
    for (const auto& B : b_kinds()) {
      RunConfig cfg = make_config(1, {}, 1, B, 3, {"module_axiom"}, 200);
      run_and_check(cfg, 200, out);
      cfg.suites = {"assoc_unital"};
      cfg.cases_per_suite = 100;
      run_and_check(cfg, 100, out);
    }
  });

  all &= criterion("C4", "operator identities of the T, T1 and I families", 60, [](Outcome& out) {
    const std::vector<std::string> suites{"lemma21", "prop21", "prop21_5", "prop21_6", "lemma23", "thm22"};
    for (const auto& gc : kGlCases)
      for (const auto& c : c_values())
        for (const auto& B : b_kinds()) run_and_check(make_config(gc.n, gc.mu, c, B, 3, suites, 50), 50, out);
    for (const auto& B : b_kinds()) run_and_check(make_config(1, {}, 1, B, 3, suites, 50), 50, out);
  });

  all &= criterion("C5", "rank one identities", 30, [](Outcome& out) {
    run_and_check(make_config(1, {}, 0, BPresentation::trivial(), 5, {"lemma24", "lemma25"}, 1), 121, out);
    for (const GaussRat& c : {GaussRat(0), GaussRat(1), GaussRat(mpq_class(3, 2))})
      for (const auto& B : {BPresentation::trivial(), BPresentation::laurent(3)})
        run_and_check(make_config(1, {}, c, B, 5, {"n1"}, 1), 20, out);
  });

  all &= criterion("C6", "irreducibility of the zero weight space", 30, [](Outcome& out) {
    for (const auto& gc : kGlCases)
      for (const auto& c : c_values()) {
        const RunConfig cfg = make_config(gc.n, gc.mu, c, BPresentation::trivial(), 1, {"burnside_valpha"}, 1);
        run_and_check(cfg, 1, out);
        const std::size_t dim = burnside_Valpha(module_of(cfg));
        if (dim != gc.weyl * gc.weyl)
          out.fail(label(cfg) + ": burnside " + std::to_string(dim) + " expected " + std::to_string(gc.weyl * gc.weyl));
      }
  });

  all &= criterion("C7", "byte-identical reports for identical config and seed", 60, [](Outcome& out) {
    std::vector<RunConfig> cfgs;
    {
      RunConfig cfg = default_config(2);
      cfg.B = BPresentation::poly_quot(LaurentPoly::linear_power(2, 3), 2);
      cfg.cases_per_suite = 20;
      cfg.suites.clear();
      validate(cfg);
      cfgs.push_back(cfg);
    }
    cfgs.push_back(make_config(1, {}, GaussRat(mpq_class(3, 2)), BPresentation::laurent(3), 4, {}, 20));
    for (const auto& cfg : cfgs) {
      ++out.configs;
      const auto a = run_suites(cfg, 1), b = run_suites(cfg, 1), c = run_suites(cfg, 2);
      for (std::size_t k = 0; k < a.size(); ++k) {
        ++out.cases;
        const std::string ja = a[k].to_json(false).dump();
        if (ja != b[k].to_json(false).dump()) out.fail(label(cfg) + " " + a[k].suite + ": repeated run differs");
        if (ja != c[k].to_json(false).dump()) out.fail(label(cfg) + " " + a[k].suite + ": threaded run differs");
      }
    }
  });

  return all ? 0 : 1;
}
