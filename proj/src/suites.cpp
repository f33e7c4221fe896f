#include "loopwitt/suites.hpp"

#include "loopwitt/element_syntax.hpp"
#include "loopwitt/sampling.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <mutex>
#include <optional>

namespace loopwitt {

using nlohmann::json;

namespace {

constexpr std::size_t kWitnessCap = 12;

std::string text(const GaussRat& x) { return x.str(); }

json vec_json(const std::vector<GaussRat>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(text(x));
  return out;
}

json spec_json(const OpSpec& s) {
  return {{"op", to_string(s)}};
}

}  // namespace

json matrix_witness(const Matrix& m) {
  json out = json::array();
  for (const auto& [r, c] : m.nonzero_entries()) {
    if (out.size() == kWitnessCap) break;
    out.push_back({{"row", r}, {"col", c}, {"value", text(m(r, c))}});
  }
  return out;
}

json modvector_witness(const ModVector& v) {
  json out = json::array();
  for (const auto& [m, vec] : v)
    for (std::size_t k = 0; k < vec.size(); ++k) {
      if (vec[k].is_zero()) continue;
      if (out.size() == kWitnessCap) return out;
      out.push_back({{"m", m}, {"k", k}, {"value", text(vec[k])}});
    }
  return out;
}

json IdentityReport::to_json(bool timing) const {
  json j{{"suite", suite}, {"config", config}, {"cases", cases}, {"failures", failures}, {"seed", seed}};
  if (!notes.empty()) j["notes"] = notes;
  if (timing) j["wall_time_ms"] = wall_time_ms;
  return j;
}

namespace {

class Context {
 public:
  explicit Context(const RunConfig& c) : cfg(c), mod(module_of(c)) {}

  const Subspace& W() {
    std::call_once(w_once_, [this] { w_.emplace(W_basis(mod)); });
    return *w_;
  }

  const RunConfig& cfg;
  const TensorModule mod;

 private:
  std::once_flag w_once_;
  std::optional<Subspace> w_;
};

class Recorder {
 public:
  explicit Recorder(IdentityReport& r) : rep_(r) {}

  void check(bool ok, const json& spec, const json& residual) {
    ++rep_.cases;
    if (!ok) rep_.failures.push_back({{"spec", spec}, {"residual_nonzero_entries", residual}});
  }
  void matrix(const Matrix& m, const json& spec) { check(m.is_zero(), spec, matrix_witness(m)); }
  void opmatrix(const OpMatrix& m, const json& spec) { check(m.is_zero(), spec, matrix_witness(m.matrix)); }
  void vector(const ModVector& v, const json& spec) { check(v.empty(), spec, modvector_witness(v)); }
  void element(const LoopElem& x, const json& spec) {
    check(x.is_zero(), spec, x.is_zero() ? json::array() : json::array({format_element(x)}));
  }

  // Runs one case; an exception counts as a failure carrying its message.
  void guarded(const json& spec, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++rep_.cases;
      rep_.failures.push_back({{"spec", spec}, {"error", e.what()}, {"residual_nonzero_entries", json::array()}});
    }
  }

  void note(std::string s) { rep_.notes.push_back(std::move(s)); }

 private:
  IdentityReport& rep_;
};

int half_radius(const RunConfig& cfg) { return cfg.window_radius / 2; }

Degree zero_deg(int n) { return Degree(static_cast<std::size_t>(n), 0); }

// Slice 0 plus one random slice of the interior at the given margin.
std::vector<Degree> test_slices(Sampler& rng, const TensorModule& mod, int margin) {
  std::vector<Degree> out{zero_deg(mod.n())};
  const auto interior = mod.window().interior(margin);
  const Degree& m = interior[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(interior.size()) - 1))];
  if (m != out.front()) out.push_back(m);
  return out;
}

OpSpec random_spec(Sampler& rng, const TensorModule& mod, OpFamily family, int bound) {
  const auto& B = mod.presentation();
  return OpSpec{family, rng.nonzero_vector(mod.n()), rng.degree(mod.n(), bound), rng.belem(B), rng.belem(B)};
}

void suite_coeffalg(Context& ctx, Sampler& rng, Recorder& rec) {
  const auto& B = ctx.cfg.B;
  const auto nil = nilpotency_index(*B);
  for (int c = 0; c < ctx.cfg.cases_per_suite; ++c) {
    const BElem b = rng.belem(B), bp = rng.belem(B);
    const json spec{{"b", b.str()}, {"b'", bp.str()}};
    rec.guarded(spec, [&] {
      const GaussRat pb = eval_psi(b), pbp = eval_psi(bp);
      const BElem m1 = rng.ideal_element(B), m2 = rng.ideal_element(B);
      bool ok = eval_psi(b + bp) == pb + pbp && eval_psi(b * bp) == pb * pbp &&
                eval_psi(BElem::one(B)) == GaussRat(1) && ideal_membership(b, 1) == pb.is_zero() &&
                ideal_membership(m1, 1) && ideal_membership(m1 * m2, 2);
      if (nil) {
        BElem prod = BElem::one(B);
        for (int k = 0; k < *nil; ++k) prod *= rng.ideal_element(B);
        ok = ok && prod.is_zero();
      }
      rec.check(ok, spec, json::array({(b * bp).str()}));
    });
  }
}

void suite_bracket(Context& ctx, Sampler& rng, Recorder& rec) {
  const LoopSpace space(ctx.cfg.n, ctx.cfg.B);
  BracketTable table;
  for (int c = 0; c < ctx.cfg.cases_per_suite; ++c) {
    const LoopElem x = rng.element(space, 3, 2), y = rng.element(space, 3, 2), z = rng.element(space, 3, 2);
    const json spec{{"x", format_element(x)}, {"y", format_element(y)}, {"z", format_element(z)}};
    rec.guarded(spec, [&] {
      LoopElem anti = table.bracket(x, y) + table.bracket(y, x);
      LoopElem jac = table.bracket(x, table.bracket(y, z)) + table.bracket(y, table.bracket(z, x)) +
                     table.bracket(z, table.bracket(x, y));
      rec.element(anti + jac, spec);
    });
  }
}

void suite_gl(Context& ctx, Sampler&, Recorder& rec) {
  const Irrep& rep = ctx.mod.rep();
  const int n = rep.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          rec.matrix(gl_relations_residual(rep, i, j, k, l), {{"relation", {i + 1, j + 1, k + 1, l + 1}}});
  const std::size_t weyl = weyl_dim(rep.mu(), n);
  rec.check(rep.dim() == weyl, {{"check", "weyl_dim"}}, json::array({rep.dim(), weyl}));
  Matrix trace(rep.dim(), rep.dim());
  for (int i = 0; i < n; ++i) trace += rep.E(i, i);
  rec.matrix(trace - Matrix::scalar(rep.dim(), rep.c()), {{"check", "sum E_ii = c Id"}});
  const std::size_t bd = burnside_dim(rep.generators());
  rec.check(bd == rep.dim() * rep.dim(), {{"check", "burnside"}}, json::array({bd}));
}

void suite_module_axiom(Context& ctx, Sampler& rng, Recorder& rec) {
  const LoopSpace space = ctx.mod.space();
  const int bound = half_radius(ctx.cfg);
  for (int c = 0; c < ctx.cfg.cases_per_suite; ++c) {
    const Degree r = rng.degree(ctx.cfg.n, bound), s = rng.degree(ctx.cfg.n, bound);
    const LoopElem x = rng.homogeneous(space, r), y = rng.homogeneous(space, s);
    const ModVector v = rng.mod_vector(ctx.mod, pair_margin(r, s));
    const json spec{{"x", format_element(x)}, {"y", format_element(y)}, {"v", modvector_witness(v)}};
    rec.guarded(spec, [&] {
      const bool degrees_ok = ad_weight(x) == r && ad_weight(y) == s;
      rec.check(degrees_ok, spec, json::array({"ad_weight"}));
      rec.vector(module_axiom_residual(ctx.mod, x, y, v), spec);
    });
  }
}

void suite_assoc_unital(Context& ctx, Sampler& rng, Recorder& rec) {
  const int bound = half_radius(ctx.cfg);
  for (int c = 0; c < ctx.cfg.cases_per_suite; ++c) {
    const Degree r = rng.degree(ctx.cfg.n, bound), s = rng.degree(ctx.cfg.n, bound);
    const BElem b = rng.belem(ctx.cfg.B), bp = rng.belem(ctx.cfg.B);
    const ModVector v = rng.mod_vector(ctx.mod, pair_margin(r, s));
    const json spec{{"r", r}, {"s", s}, {"b", b.str()}, {"b'", bp.str()}};
    rec.guarded(spec, [&] {
      const auto res = assoc_unital_check(ctx.mod, r, s, b, bp, v);
      rec.vector(res.assoc, spec);
      rec.vector(res.unit, {{"check", "unit"}, {"v", modvector_witness(v)}});
    });
  }
}

void suite_weights(Context& ctx, Sampler& rng, Recorder& rec) {
  rec.guarded({{"check", "weight_decomposition"}}, [&] {
    const auto slices = weight_decomposition(ctx.mod);
    bool ok = slices.size() == ctx.mod.window().size();
    for (const auto& s : slices) ok = ok && s.dim == ctx.mod.d();
    rec.check(ok, {{"check", "weight_decomposition"}}, json::array({slices.size()}));
  });
  const LoopSpace space = ctx.mod.space();
  const int R = ctx.cfg.window_radius;
  for (int c = 0; c < ctx.cfg.cases_per_suite; ++c) {
    const Degree r = rng.degree(ctx.cfg.n, R);
    const auto interior = ctx.mod.window().interior(pair_margin(r, zero_deg(ctx.cfg.n)));
    const Degree m = interior[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(interior.size()) - 1))];
    const json spec{{"t^r", r}, {"m", m}};
    rec.guarded(spec, [&] {
      // Degree shift and injectivity of t^r.
      const Matrix block = ctx.mod.op_matrix(space.t(r), {m}, {m + r});
      rec.matrix(block - Matrix::identity(ctx.mod.d()), spec);
      const LoopElem x = rng.homogeneous(space, r);
      const ModVector image = ctx.mod.act(x, ctx.mod.basis_vector(m, 0));
      bool shift_ok = true;
      for (const auto& [deg, vec] : image) shift_ok = shift_ok && deg == m + r;
      rec.check(shift_ok, {{"x", format_element(x)}, {"m", m}}, modvector_witness(image));
    });
  }
}

void suite_lemma21(Context& ctx, Sampler& rng, Recorder& rec) {
  const int bound = half_radius(ctx.cfg);
  for (int c = 0; c < ctx.cfg.cases_per_suite; ++c) {
    const OpSpec s1 = random_spec(rng, ctx.mod, OpFamily::T, bound);
    const OpSpec s2 = random_spec(rng, ctx.mod, OpFamily::T, bound);
    const auto slices = test_slices(rng, ctx.mod, pair_margin(s1.r, s2.r));
    const json spec{{"s1", spec_json(s1)}, {"s2", spec_json(s2)}, {"slices", slices}};
    rec.guarded(spec, [&] { rec.opmatrix(lemma21_residual(s1, s2, ctx.mod, slices), spec); });
  }
}

void suite_prop21(Context& ctx, Sampler& rng, Recorder& rec) {
  const int bound = half_radius(ctx.cfg);
  const LoopSpace space = ctx.mod.space();
  for (int c = 0; c < ctx.cfg.cases_per_suite; ++c) {
    const OpSpec s1 = random_spec(rng, ctx.mod, OpFamily::T1, bound);
    const OpSpec s2 = random_spec(rng, ctx.mod, OpFamily::T1, bound);
    const auto slices = test_slices(rng, ctx.mod, pair_margin(s1.r, s2.r));
    for (Prop21Kind kind : {Prop21Kind::T1Bracket, Prop21Kind::I2Bracket, Prop21Kind::DDinD1}) {
      const json spec{{"kind", to_string(kind)}, {"s1", spec_json(s1)}, {"s2", spec_json(s2)}, {"slices", slices}};
      rec.guarded(spec, [&] { rec.opmatrix(prop21_residual(kind, s1, s2, ctx.mod, slices), spec); });
    }
    const json lie{{"kind", "I2bracket (algebra)"}, {"s1", spec_json(s1)}, {"s2", spec_json(s2)}};
    rec.guarded(lie, [&] { rec.element(i2_bracket_residual_lie(space, s1, s2), lie); });
  }
}

void suite_prop21_5(Context& ctx, Sampler& rng, Recorder& rec) {
  const Subspace& W = ctx.W();
  const int bound = half_radius(ctx.cfg);
  for (int c = 0; c < ctx.cfg.cases_per_suite; ++c) {
    const OpSpec spec = random_spec(rng, ctx.mod, OpFamily::I2, bound);
    const json j = spec_json(spec);
    rec.guarded(j, [&] {
      const auto res = prop21_5_check(spec, ctx.mod, W);
      rec.check(res.holds, j, modvector_witness(res.witness));
    });
  }
}

void suite_prop21_6(Context& ctx, Sampler& rng, Recorder& rec) {
  const Subspace& W = ctx.W();
  rec.check(W.codim() == ctx.mod.d(), {{"check", "codim W"}}, json::array({W.codim()}));
  for (int c = 0; c < ctx.cfg.cases_per_suite; ++c) {
    const OpSpec spec = random_spec(rng, ctx.mod, OpFamily::T1, ctx.cfg.window_radius);
    const json j = spec_json(spec);
    rec.guarded(j, [&] {
      const auto res = prop21_6_check({spec}, ctx.mod, W);
      rec.check(res.intertwines && res.bijective, j, modvector_witness(res.witness));
    });
  }
}

void suite_lemma23(Context& ctx, Sampler& rng, Recorder& rec) {
  for (int c = 0; c < ctx.cfg.cases_per_suite; ++c) {
    const auto u = rng.vector(ctx.cfg.n);
    const BElem b = c % 4 == 3 ? rng.ideal_element(ctx.cfg.B) : rng.belem(ctx.cfg.B);
    const json spec{{"u", vec_json(u)}, {"b", b.str()}};
    rec.guarded(spec, [&] { rec.matrix(lemma23_scalar_check(u, b, ctx.mod), spec); });
  }
}

void suite_thm22(Context& ctx, Sampler& rng, Recorder& rec) {
  const int bound = half_radius(ctx.cfg);
  const int n = ctx.cfg.n;
  for (int c = 0; c < ctx.cfg.cases_per_suite; ++c) {
    const auto u = rng.vector(n);
    const Degree r = rng.degree(n, bound);
    const BElem b = rng.belem(ctx.cfg.B);
    const auto slices = test_slices(rng, ctx.mod, pair_margin(r, zero_deg(n)));
    const json collapse{{"check", "collapse"}, {"u", vec_json(u)}, {"r", r}, {"b", b.str()}, {"m", slices.back()}};
    rec.guarded(collapse, [&] { rec.matrix(thm22_collapse_check(u, r, b, ctx.mod, slices.back()), collapse); });

    const auto v = rng.vector(n);
    const Degree s = rng.degree(n, bound);
    const BElem bp = rng.belem(ctx.cfg.B);
    const auto tb_slices = test_slices(rng, ctx.mod, pair_margin(r, s));
    const json tb{{"check", "T_B relation"}, {"v", vec_json(v)}, {"s", s}, {"b", b.str()},
                  {"u", vec_json(u)},        {"r", r},           {"b'", bp.str()}, {"slices", tb_slices}};
    rec.guarded(tb, [&] { rec.opmatrix(tb_relation_residual(v, s, b, u, r, bp, ctx.mod, tb_slices), tb); });
  }
}

void suite_burnside(Context& ctx, Sampler&, Recorder& rec) {
  const std::size_t d = ctx.mod.d();
  const std::size_t dim = burnside_Valpha(ctx.mod);
  bool generic = true;
  for (const auto& a : ctx.cfg.alpha) generic = generic && !a.is_integer();
  if (generic) {
    rec.check(dim == d * d, {{"check", "burnside_Valpha"}, {"d", d}}, json::array({dim}));
  } else {
    rec.check(true, {{"check", "burnside_Valpha"}, {"d", d}}, json::array());
    rec.note("alpha is not generic; burnside dimension " + std::to_string(dim) + " reported, d^2 = " +
             std::to_string(d * d));
  }
}

void suite_lemma24(Context& ctx, Sampler&, Recorder& rec) {
  const LoopSpace space(1, ctx.cfg.B);
  for (int r = -5; r <= 5; ++r)
    for (int s = -5; s <= 5; ++s) rec.element(lemma24_residual(space, r, s), {{"r", r}, {"s", s}});
}

void suite_lemma25(Context& ctx, Sampler&, Recorder& rec) {
  const LoopSpace space(1, ctx.cfg.B);
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l)
      for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j)
          rec.element(lemma25_1_residual(space, k, l, i, j), {{"k", k}, {"l", l}, {"i", i}, {"j", j}});
}

void suite_n1(Context& ctx, Sampler&, Recorder& rec) {
  const TensorModule& mod = ctx.mod;
  const Subspace& W = ctx.W();
  const LoopSpace space = mod.space();
  const int R = ctx.cfg.window_radius;

  // (a) d_r acts on slice s by r c + s + alpha; I(r) induces r c = c phi(I(r)) on the quotient.
  for (int r = -2; r <= 2; ++r)
    for (int s = -R; s <= R; ++s) {
      if (std::abs(r + s) > R) continue;
      rec.matrix(n1_scalar_action_residual(mod, r, s), {{"item", "a"}, {"r", r}, {"s", s}});
    }
  for (int r = -R; r <= R; ++r) {
    const json spec{{"item", "a"}, {"I", r}};
    rec.vector(n1_induced_I_residual(mod, W, r), spec);
    rec.check(phi_md(shifted_derivation(space, r)) == GaussRat(r), spec, json::array({"phi"}));
  }

  // (b) f(X - k) Y = Y f(X) with X = d_0 - d_-1, Y = (t-1)^(k+1) d_-1.
  const LoopElem X = space.d(0) - space.d(-1);
  for (int k = 0; k <= 2; ++k) {
    const LoopElem Y = poly_derivation(space, k + 1, -1);
    rec.element(bracket(X, Y) - Y * GaussRat(k), {{"item", "b"}, {"k", k}, {"check", "[X,Y] = kY"}});
    for (int p = 1; p <= 3; ++p)
      for (int s : n1_lemma25_2_slices(mod, k, p))
        rec.vector(n1_lemma25_2_residual(mod, k, p, s), {{"item", "b"}, {"k", k}, {"f", "lambda^" + std::to_string(p)}, {"s", s}});
  }

  // (c) (t-1)^2 t^i d maps the 0-slice into W.
  for (int i = -1; i <= 1; ++i) rec.vector(n1_prop23_1_residual(mod, W, i), {{"item", "c"}, {"i", i}});
}

using SuiteFn = void (*)(Context&, Sampler&, Recorder&);

SuiteFn suite_fn(const std::string& name) {
  static const std::map<std::string, SuiteFn> table{
      {"coeffalg", suite_coeffalg},     {"bracket", suite_bracket},
      {"gl", suite_gl},                 {"module_axiom", suite_module_axiom},
      {"assoc_unital", suite_assoc_unital}, {"weights", suite_weights},
      {"lemma21", suite_lemma21},       {"prop21", suite_prop21},
      {"prop21_5", suite_prop21_5},     {"prop21_6", suite_prop21_6},
      {"lemma23", suite_lemma23},       {"thm22", suite_thm22},
      {"burnside_valpha", suite_burnside}, {"lemma24", suite_lemma24},
      {"lemma25", suite_lemma25},       {"n1", suite_n1}};
  auto it = table.find(name);
  if (it == table.end()) throw ConfigError("unknown suite '" + name + "'");
  return it->second;
}

IdentityReport run_one(Context& ctx, const std::string& name) {
  IdentityReport rep;
  rep.suite = name;
  rep.config = config_to_json(ctx.cfg);
  rep.seed = ctx.cfg.seed;
  Sampler rng(Sampler::suite_seed(ctx.cfg.seed, name));
  Recorder rec(rep);
  const auto start = std::chrono::steady_clock::now();
  rec.guarded({{"suite", name}}, [&] { suite_fn(name)(ctx, rng, rec); });
  rep.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

std::vector<IdentityReport> run_suites(const RunConfig& cfg, unsigned threads) {
  for (const auto& name : cfg.suites) suite_fn(name);
  Context ctx(cfg);
  std::vector<IdentityReport> out(cfg.suites.size());
  if (threads <= 1) {
    for (std::size_t k = 0; k < cfg.suites.size(); ++k) out[k] = run_one(ctx, cfg.suites[k]);
    return out;
  }
  std::mutex m;
  std::size_t next = 0;
  auto worker = [&] {
    for (;;) {
      std::size_t k;
      {
        std::lock_guard lock(m);
        if (next == cfg.suites.size()) return;
        k = next++;
      }
      out[k] = run_one(ctx, cfg.suites[k]);
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return out;
}

}  // namespace loopwitt
