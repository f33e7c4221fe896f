#include "loopwitt/config.hpp"

#include "loopwitt/element_syntax.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace loopwitt {

using nlohmann::json;

namespace {

// "p/q+r/s i", imaginary part omitted when zero.
std::string scalar_text(const GaussRat& x) { return x.str(); }

GaussRat scalar_from(const json& j, const std::string& field) {
  try {
    if (j.is_string()) return GaussRat::parse(j.get<std::string>());
    if (j.is_number_integer()) return GaussRat(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field + ": " + e.what());
  }
  throw ConfigError(field + ": expected an exact number string such as \"1/2\" (floats are not accepted)");
}

template <typename T>
T get_field(const json& j, const char* key, const char* what) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string(key) + ": expected " + what);
  }
}

// Line and column of a byte offset.
std::string position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const std::vector<std::string> kKnownKeys{"n",    "mu",   "c",     "alpha",          "B",
                                          "window_radius", "seed", "suites", "cases_per_suite"};

}  // namespace

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names{
      "coeffalg", "bracket", "gl",     "module_axiom", "assoc_unital", "weights",         "lemma21", "prop21",
      "prop21_5", "prop21_6", "lemma23", "thm22",       "burnside_valpha", "lemma24", "lemma25", "n1"};
  return names;
}

std::vector<std::string> default_suites(const RunConfig& cfg) {
  std::vector<std::string> out;
  for (const auto& s : all_suites())
    if (s != "n1" || (cfg.n == 1 && cfg.window_radius >= 4)) out.push_back(s);
  return out;
}

RunConfig default_config(int n) {
  RunConfig cfg;
  cfg.n = n;
  cfg.mu.assign(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
  if (n >= 2) cfg.mu[0] = 1;
  validate(cfg);
  return cfg;
}

void validate(RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 8) throw ConfigError("n: must be between 1 and 8");
  if (cfg.mu.size() != static_cast<std::size_t>(cfg.n - 1))
    throw ConfigError("mu: must have n-1 = " + std::to_string(cfg.n - 1) + " entries");
  for (int m : cfg.mu)
    if (m < 0) throw ConfigError("mu: entries must be nonnegative integers");
  if (cfg.alpha.empty()) cfg.alpha.assign(static_cast<std::size_t>(cfg.n), GaussRat(mpq_class(1, 2)));
  if (cfg.alpha.size() != static_cast<std::size_t>(cfg.n)) throw ConfigError("alpha: must have n entries");
  if (!cfg.B) throw ConfigError("B: missing presentation");
  if (cfg.window_radius < 1 || cfg.window_radius > 12) throw ConfigError("window_radius: must be between 1 and 12");
  if (cfg.cases_per_suite < 1 || cfg.cases_per_suite > 100000)
    throw ConfigError("cases_per_suite: must be between 1 and 100000");

  const DominantWeight mu(cfg.mu);
  const auto lambda = mu.partition();
  const IrrepLimits limits;
  if (std::accumulate(lambda.begin(), lambda.end(), 0) > limits.max_boxes)
    throw ConfigError("mu: |lambda| exceeds the supported " + std::to_string(limits.max_boxes) + " boxes");
  if (weyl_dim(mu, cfg.n) > limits.max_dim)
    throw ConfigError("mu: irrep dimension exceeds the supported " + std::to_string(limits.max_dim));

  if (cfg.suites.empty()) cfg.suites = default_suites(cfg);
  for (const auto& s : cfg.suites) {
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
      throw ConfigError("suites: unknown suite '" + s + "'");
    if (s == "n1" && cfg.n != 1) throw ConfigError("suites: n1 requires n = 1");
    if (s == "n1" && cfg.window_radius < 4) throw ConfigError("suites: n1 requires window_radius >= 4");
  }
}

BPresPtr presentation_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("B: expected an object");
  const auto kind = get_field<std::string>(j, "kind", "one of \"trivial\", \"polyquot\", \"laurent\"");
  try {
    if (kind == "trivial") return BPresentation::trivial();
    if (!j.contains("eval_point")) throw ConfigError("B.eval_point: required for kind " + kind);
    const GaussRat a = scalar_from(j.at("eval_point"), "B.eval_point");
    if (kind == "laurent") return BPresentation::laurent(a);
    if (kind == "polyquot") {
      if (!j.contains("modulus")) throw ConfigError("B.modulus: required for kind polyquot");
      const json& m = j.at("modulus");
      LaurentPoly f;
      if (m.is_string()) {
        f = parse_belem(m.get<std::string>(), BPresentation::laurent(GaussRat(1))).rep();
      } else if (m.is_array()) {
        std::vector<GaussRat> coeffs;
        for (const auto& c : m) coeffs.push_back(scalar_from(c, "B.modulus"));
        f = LaurentPoly::from_coefficients(coeffs);
      } else {
        throw ConfigError("B.modulus: expected a polynomial string or coefficient list (constant term first)");
      }
      return BPresentation::poly_quot(f, a);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("B: ") + e.what());
  }
  throw ConfigError("B.kind: unknown kind '" + kind + "'");
}

json presentation_to_json(const BPresentation& pres) {
  switch (pres.kind()) {
    case BKind::Trivial:
      return {{"kind", "trivial"}};
    case BKind::Laurent:
      return {{"kind", "laurent"}, {"eval_point", scalar_text(pres.eval_point())}};
    case BKind::PolyQuot: {
      json coeffs = json::array();
      for (int e = 0; e <= pres.modulus().degree(); ++e) coeffs.push_back(scalar_text(pres.modulus().coefficient(e)));
      return {{"kind", "polyquot"}, {"modulus", coeffs}, {"eval_point", scalar_text(pres.eval_point())}};
    }
  }
  return {};
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON at " + position_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
      throw ConfigError("config: unknown key '" + key + "'");

  RunConfig cfg;
  if (j.contains("n")) cfg.n = get_field<int>(j, "n", "an integer");
  cfg.mu.assign(static_cast<std::size_t>(std::max(cfg.n - 1, 0)), 0);
  if (cfg.n >= 2) cfg.mu[0] = 1;
  if (j.contains("mu")) cfg.mu = get_field<std::vector<int>>(j, "mu", "a list of nonnegative integers");
  if (j.contains("c")) cfg.c = scalar_from(j.at("c"), "c");
  if (j.contains("alpha")) {
    if (!j.at("alpha").is_array()) throw ConfigError("alpha: expected a list");
    for (const auto& a : j.at("alpha")) cfg.alpha.push_back(scalar_from(a, "alpha"));
  }
  if (j.contains("B")) cfg.B = presentation_from_json(j.at("B"));
  if (j.contains("window_radius")) cfg.window_radius = get_field<int>(j, "window_radius", "an integer");
  if (j.contains("seed")) cfg.seed = get_field<std::uint64_t>(j, "seed", "a nonnegative integer");
  if (j.contains("suites")) cfg.suites = get_field<std::vector<std::string>>(j, "suites", "a list of suite names");
  if (j.contains("cases_per_suite")) cfg.cases_per_suite = get_field<int>(j, "cases_per_suite", "an integer");
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

json config_to_json(const RunConfig& cfg) {
  json alpha = json::array();
  for (const auto& a : cfg.alpha) alpha.push_back(scalar_text(a));
  return {{"n", cfg.n},
          {"mu", cfg.mu},
          {"c", scalar_text(cfg.c)},
          {"alpha", alpha},
          {"B", presentation_to_json(*cfg.B)},
          {"window_radius", cfg.window_radius},
          {"seed", cfg.seed},
          {"suites", cfg.suites},
          {"cases_per_suite", cfg.cases_per_suite}};
}

Irrep irrep_of(const RunConfig& cfg) { return build_irrep(DominantWeight(cfg.mu), cfg.c, cfg.n); }

TensorModule module_of(const RunConfig& cfg) {
  return TensorModule(std::make_shared<const Irrep>(irrep_of(cfg)), cfg.alpha, cfg.B,
                      Window(cfg.n, cfg.window_radius));
}

}  // namespace loopwitt
