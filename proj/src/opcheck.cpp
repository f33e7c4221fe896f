#include "loopwitt/opcheck.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace loopwitt {

ModuleOperator ModuleOperator::identity() {
  return ModuleOperator([](const ModVector& v) { return v; });
}

ModuleOperator ModuleOperator::rho(const TensorModule& mod, LoopElem x) {
  const TensorModule* m = &mod;
  return ModuleOperator([m, a = mod.compile(x)](const ModVector& v) { return m->apply(a, v); });
}

ModuleOperator operator*(ModuleOperator a, ModuleOperator b) {
  return ModuleOperator([a = std::move(a.f_), b = std::move(b.f_)](const ModVector& v) { return a(b(v)); });
}

ModuleOperator operator+(ModuleOperator a, ModuleOperator b) {
  return ModuleOperator([a = std::move(a.f_), b = std::move(b.f_)](const ModVector& v) {
    ModVector out = a(v);
    add_scaled(out, GaussRat(1), b(v));
    return out;
  });
}

ModuleOperator operator-(ModuleOperator a, ModuleOperator b) {
  return ModuleOperator([a = std::move(a.f_), b = std::move(b.f_)](const ModVector& v) {
    ModVector out = a(v);
    add_scaled(out, GaussRat(-1), b(v));
    return out;
  });
}

ModuleOperator operator*(GaussRat c, ModuleOperator a) {
  return ModuleOperator([c = std::move(c), a = std::move(a.f_)](const ModVector& v) {
    ModVector out;
    add_scaled(out, c, a(v));
    return out;
  });
}

ModuleOperator commutator(const ModuleOperator& a, const ModuleOperator& b) { return a * b - b * a; }

OpMatrix operator_matrix(const ModuleOperator& op, const TensorModule& mod, const std::vector<Degree>& src) {
  const std::size_t d = mod.d();
  std::vector<ModVector> images;
  std::set<Degree> reached;
  for (const Degree& m : src)
    for (std::size_t k = 0; k < d; ++k) {
      images.push_back(op(mod.basis_vector(m, k)));
      for (const auto& [deg, vec] : images.back()) reached.insert(deg);
    }
  OpMatrix out{Matrix(reached.size() * d, src.size() * d), src, {reached.begin(), reached.end()}};
  std::map<Degree, std::size_t> block;
  for (std::size_t q = 0; q < out.dst.size(); ++q) block.emplace(out.dst[q], q);
  for (std::size_t col = 0; col < images.size(); ++col)
    for (const auto& [deg, vec] : images[col]) {
      const std::size_t base = block.at(deg) * d;
      for (std::size_t r = 0; r < d; ++r) out.matrix(base + r, col) = vec[r];
    }
  return out;
}

namespace {

std::string vec_str(const std::vector<GaussRat>& u) {
  std::string out = "(";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) out += ",";
    out += u[i].compact();
  }
  return out + ")";
}

std::vector<GaussRat> combine(const GaussRat& a, const std::vector<GaussRat>& x, const GaussRat& b,
                              const std::vector<GaussRat>& y) {
  std::vector<GaussRat> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

ModuleOperator T_op(const TensorModule& mod, const std::vector<GaussRat>& u, const Degree& r, const BElem& b1,
                    const BElem& b2) {
  const LoopSpace space = mod.space();
  return ModuleOperator::rho(mod, space.t(-r, b1)) * ModuleOperator::rho(mod, space.D(u, r, b2));
}

ModuleOperator T1_op(const TensorModule& mod, const std::vector<GaussRat>& u, const Degree& r, const BElem& b1,
                     const BElem& b2) {
  const LoopSpace space = mod.space();
  return T_op(mod, u, r, b1, b2) - ModuleOperator::rho(mod, space.D(u, space.zero_degree(), b1 * b2));
}

ModuleOperator I2_op(const TensorModule& mod, const std::vector<GaussRat>& u, const Degree& r, const BElem& b1,
                     const BElem& b2) {
  return ModuleOperator::rho(mod, i2_element(mod.space(), u, r, b1, b2));
}

using Family = ModuleOperator (*)(const TensorModule&, const std::vector<GaussRat>&, const Degree&, const BElem&,
                                  const BElem&);

}  // namespace

std::string to_string(const OpSpec& spec) {
  const char* name = spec.family == OpFamily::T ? "T" : spec.family == OpFamily::T1 ? "T1" : "I2";
  return std::string(name) + "(u=" + vec_str(spec.u) + ", r=" + degree_str(spec.r) + ", b1=" + spec.b1.str() +
         ", b2=" + spec.b2.str() + ")";
}

LoopElem i2_element(const LoopSpace& space, const std::vector<GaussRat>& u, const Degree& r, const BElem& b1,
                    const BElem& b2) {
  return space.D(u, r, b2) * eval_psi(b1) - space.D(u, space.zero_degree(), b1 * b2);
}

ModuleOperator make_operator(const OpSpec& spec, const TensorModule& mod) {
  switch (spec.family) {
    case OpFamily::T:
      return T_op(mod, spec.u, spec.r, spec.b1, spec.b2);
    case OpFamily::T1:
      return T1_op(mod, spec.u, spec.r, spec.b1, spec.b2);
    case OpFamily::I2:
      return I2_op(mod, spec.u, spec.r, spec.b1, spec.b2);
  }
  throw std::invalid_argument("unknown operator family");
}

OpMatrix op_matrix_of(const OpSpec& spec, const TensorModule& mod, const std::vector<Degree>& slices) {
  return operator_matrix(make_operator(spec, mod), mod, slices);
}

int pair_margin(const Degree& r, const Degree& s) {
  int margin = 0;
  for (std::size_t i = 0; i < r.size(); ++i) margin = std::max(margin, std::abs(r[i]) + std::abs(s[i]));
  return margin;
}

OpMatrix lemma21_residual(const OpSpec& s1, const OpSpec& s2, const TensorModule& mod,
                          const std::vector<Degree>& slices) {
  const auto& [f1, u, r, b1, b2] = s1;
  const auto& [f2, v, s, b3, b4] = s2;
  const GaussRat us = pairing(u, s), vr = pairing(v, r);
  const auto w = combine(us, v, -vr, u);
  ModuleOperator res = commutator(T_op(mod, u, r, b1, b2), T_op(mod, v, s, b3, b4)) -
                       T_op(mod, w, r + s, b1 * b3, b2 * b4) + us * T_op(mod, v, s, b1 * b2 * b3, b4) -
                       vr * T_op(mod, u, r, b1 * b3 * b4, b2);
  return operator_matrix(res, mod, slices);
}

std::string to_string(Prop21Kind kind) {
  switch (kind) {
    case Prop21Kind::T1Bracket:
      return "T1bracket";
    case Prop21Kind::I2Bracket:
      return "I2bracket";
    case Prop21Kind::DDinD1:
      return "DDinD1";
  }
  return "?";
}

OpMatrix prop21_residual(Prop21Kind kind, const OpSpec& s1, const OpSpec& s2, const TensorModule& mod,
                         const std::vector<Degree>& slices) {
  const auto& [f1, u, r, b1, b2] = s1;
  const auto& [f2, v, s, b3, b4] = s2;
  const GaussRat us = pairing(u, s), vr = pairing(v, r);
  const auto w = combine(us, v, -vr, u);

  if (kind == Prop21Kind::DDinD1) {
    ModuleOperator res = commutator(T_op(mod, u, r, b1, b2), T_op(mod, v, s, b3, b4)) -
                         T1_op(mod, w, r + s, b1 * b3, b2 * b4) + us * T1_op(mod, v, s, b1 * b2 * b3, b4) -
                         vr * T1_op(mod, u, r, b1 * b3 * b4, b2);
    return operator_matrix(res, mod, slices);
  }
  const Family op = kind == Prop21Kind::T1Bracket ? Family(&T1_op) : Family(&I2_op);
  ModuleOperator res = commutator(op(mod, u, r, b1, b2), op(mod, v, s, b3, b4)) -
                       op(mod, w, r + s, b1 * b3, b2 * b4) + us * op(mod, v, s, b3, b1 * b2 * b4) -
                       vr * op(mod, u, r, b1, b2 * b3 * b4);
  return operator_matrix(res, mod, slices);
}

LoopElem i2_bracket_residual_lie(const LoopSpace& space, const OpSpec& s1, const OpSpec& s2) {
  const auto& [f1, u, r, b1, b2] = s1;
  const auto& [f2, v, s, b3, b4] = s2;
  const GaussRat us = pairing(u, s), vr = pairing(v, r);
  const auto w = combine(us, v, -vr, u);
  LoopElem res = bracket(i2_element(space, u, r, b1, b2), i2_element(space, v, s, b3, b4));
  res -= i2_element(space, w, r + s, b1 * b3, b2 * b4);
  res += i2_element(space, v, s, b3, b1 * b2 * b4) * us;
  res -= i2_element(space, u, r, b1, b2 * b3 * b4) * vr;
  return res;
}

Subspace W_basis(const TensorModule& mod) {
  Subspace W{EchelonBasis(), mod.ambient_dim()};
  const Degree origin(static_cast<std::size_t>(mod.n()), 0);
  // Descending order keeps every insertion to a single reduction step.
  const auto degrees = mod.window().degrees();
  for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
    const Degree& r = *it;
    if (r == origin) continue;
    for (std::size_t k = 0; k < mod.d(); ++k) {
      ModVector g = mod.basis_vector(r, k);
      add_scaled(g, GaussRat(-1), mod.basis_vector(origin, k));
      W.basis.insert(mod.flatten(g));
    }
  }
  W.basis.make_reduced();
  return W;
}

ModVector reduce_mod(const Subspace& W, const TensorModule& mod, const ModVector& v) {
  return mod.unflatten(W.basis.reduce(mod.flatten(v)));
}

SubspaceCheck prop21_5_check(const OpSpec& spec, const TensorModule& mod, const Subspace& W) {
  SubspaceCheck out;
  const ModuleOperator I2 = I2_op(mod, spec.u, spec.r, spec.b1, spec.b2);
  const Degree origin(static_cast<std::size_t>(mod.n()), 0);
  const int margin = pair_margin(spec.r, origin);
  if (!mod.window().contains(spec.r)) throw WindowError("I2 degree " + degree_str(spec.r) + " leaves the window");
  // I2(v(x)t^s - v(x)t^0) reduces to rem(s) - rem(0), so each slice is reduced once.
  std::vector<ModVector> base;
  for (std::size_t k = 0; k < mod.d(); ++k) base.push_back(reduce_mod(W, mod, I2(mod.basis_vector(origin, k))));
  for (const Degree& s : mod.window().interior(margin)) {
    if (s == origin) continue;
    for (std::size_t k = 0; k < mod.d(); ++k) {
      ++out.tested;
      ModVector rem = reduce_mod(W, mod, I2(mod.basis_vector(s, k)));
      add_scaled(rem, GaussRat(-1), base[k]);
      if (!rem.empty()) {
        out.holds = false;
        out.witness = std::move(rem);
        return out;
      }
    }
  }
  return out;
}

QuotientCheck prop21_6_check(const std::vector<OpSpec>& specs, const TensorModule& mod, const Subspace& W) {
  QuotientCheck out;
  const Degree origin(static_cast<std::size_t>(mod.n()), 0);
  for (const OpSpec& spec : specs) {
    const ModuleOperator diff =
        T1_op(mod, spec.u, spec.r, spec.b1, spec.b2) - I2_op(mod, spec.u, spec.r, spec.b1, spec.b2);
    for (std::size_t k = 0; k < mod.d(); ++k) {
      ++out.tested;
      ModVector rem = reduce_mod(W, mod, diff(mod.basis_vector(origin, k)));
      if (!rem.empty() && out.intertwines) {
        out.intertwines = false;
        out.witness = std::move(rem);
      }
    }
  }
  EchelonBasis image;
  for (std::size_t k = 0; k < mod.d(); ++k) image.insert(W.basis.reduce(mod.flatten(mod.basis_vector(origin, k))));
  out.bijective = image.rank() == mod.d() && W.codim() == mod.d();
  return out;
}

Matrix lemma23_scalar_check(const std::vector<GaussRat>& u, const BElem& b, const TensorModule& mod) {
  const LoopSpace space = mod.space();
  const std::vector<Degree> slice{space.zero_degree()};
  return mod.op_matrix(space.D(u, space.zero_degree(), b), slice, slice) -
         Matrix::scalar(mod.d(), eval_psi(b) * pairing(u, mod.alpha()));
}

Matrix thm22_collapse_check(const std::vector<GaussRat>& u, const Degree& r, const BElem& b, const TensorModule& mod,
                            const Degree& m) {
  const LoopSpace space = mod.space();
  const std::vector<Degree> src{m}, dst{m + r};
  return mod.op_matrix(space.D(u, r, b), src, dst) - mod.op_matrix(space.D(u, r), src, dst) * eval_psi(b);
}

OpMatrix tb_relation_residual(const std::vector<GaussRat>& v, const Degree& s, const BElem& b,
                              const std::vector<GaussRat>& u, const Degree& r, const BElem& bp,
                              const TensorModule& mod, const std::vector<Degree>& slices) {
  const BElem one = BElem::one(mod.presentation());
  const GaussRat us = pairing(u, s), vr = pairing(v, r);
  const auto w = combine(vr, u, -us, v);
  ModuleOperator res = commutator(T_op(mod, v, s, one, b), T_op(mod, u, r, one, bp)) -
                       T_op(mod, w, r + s, one, b * bp) - us * T_op(mod, v, s, one, b * bp) +
                       vr * T_op(mod, u, r, one, b * bp);
  return operator_matrix(res, mod, slices);
}

std::size_t burnside_Valpha(const TensorModule& mod) {
  const LoopSpace space = mod.space();
  const BElem one = space.one();
  const std::vector<Degree> slice{space.zero_degree()};
  std::vector<Matrix> gens;
  for (int i = 0; i < mod.n(); ++i)
    for (int j = 0; j < mod.n(); ++j) {
      Degree ej = space.zero_degree();
      ej[static_cast<std::size_t>(j)] = 1;
      gens.push_back(op_matrix_of(OpSpec{OpFamily::T, space.unit(i), ej, one, one}, mod, slice).matrix);
    }
  return burnside_dim(gens);
}

namespace {

void require_n1(const TensorModule& mod) {
  if (mod.n() != 1) throw std::invalid_argument("rank-one check on a module of rank " + std::to_string(mod.n()));
}

}  // namespace

Matrix n1_scalar_action_residual(const TensorModule& mod, int r, int s) {
  require_n1(mod);
  const LoopSpace space = mod.space();
  const GaussRat expected = GaussRat(r) * mod.rep().c() + GaussRat(s) + mod.alpha()[0];
  return mod.op_matrix(space.d(r), {Degree{s}}, {Degree{r + s}}) - Matrix::scalar(mod.d(), expected);
}

ModVector n1_induced_I_residual(const TensorModule& mod, const Subspace& W, int r) {
  require_n1(mod);
  const LoopSpace space = mod.space();
  ModVector out;
  for (std::size_t k = 0; k < mod.d(); ++k) {
    const ModVector v = mod.basis_vector(Degree{0}, k);
    ModVector img = mod.act(shifted_derivation(space, r), v);
    add_scaled(img, -(GaussRat(r) * mod.rep().c()), v);
    add_scaled(out, GaussRat(1), reduce_mod(W, mod, img));
  }
  return out;
}

std::vector<int> n1_lemma25_2_slices(const TensorModule& mod, int k, int power) {
  // Y shifts by -1..k, each factor of X by -1..0.
  std::vector<int> out;
  const int R = mod.window().radius();
  for (int s = -R + 1 + power; s + k <= R; ++s) out.push_back(s);
  return out;
}

ModVector n1_lemma25_2_residual(const TensorModule& mod, int k, int power, int s) {
  require_n1(mod);
  const LoopSpace space = mod.space();
  const ModuleOperator X = ModuleOperator::rho(mod, space.d(0) - space.d(-1));
  const ModuleOperator Y = ModuleOperator::rho(mod, poly_derivation(space, k + 1, -1));
  const ModuleOperator shifted = X - GaussRat(k) * ModuleOperator::identity();
  ModuleOperator lhs = Y, rhs = Y;
  for (int p = 0; p < power; ++p) {
    lhs = shifted * lhs;
    rhs = rhs * X;
  }
  ModVector out;
  for (std::size_t j = 0; j < mod.d(); ++j) {
    const ModVector v = mod.basis_vector(Degree{s}, j);
    add_scaled(out, GaussRat(1), lhs(v));
    add_scaled(out, GaussRat(-1), rhs(v));
  }
  return out;
}

ModVector n1_prop23_1_residual(const TensorModule& mod, const Subspace& W, int i) {
  require_n1(mod);
  const LoopElem x = poly_derivation(mod.space(), 2, i);
  ModVector out;
  for (std::size_t k = 0; k < mod.d(); ++k)
    add_scaled(out, GaussRat(1), reduce_mod(W, mod, mod.act(x, mod.basis_vector(Degree{0}, k))));
  return out;
}

}  // namespace loopwitt
