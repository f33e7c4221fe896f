#include "loopwitt/tensmod.hpp"

#include <algorithm>
#include <cstdlib>

namespace loopwitt {

Window::Window(int n, int radius) : n_(n), radius_(radius) {
  if (n < 1) throw std::invalid_argument("window rank must be >= 1");
  if (radius < 0) throw std::invalid_argument("window radius must be >= 0");
}

bool Window::contains(const Degree& m, int margin) const {
  if (m.size() != static_cast<std::size_t>(n_)) return false;
  for (int x : m)
    if (std::abs(x) > radius_ - margin) return false;
  return true;
}

std::vector<Degree> Window::interior(int margin) const {
  const int b = radius_ - margin;
  std::vector<Degree> out;
  if (b < 0) return out;
  Degree m(static_cast<std::size_t>(n_), -b);
  for (;;) {
    out.push_back(m);
    int p = n_ - 1;
    while (p >= 0 && m[static_cast<std::size_t>(p)] == b) m[static_cast<std::size_t>(p--)] = -b;
    if (p < 0) return out;
    ++m[static_cast<std::size_t>(p)];
  }
}

std::size_t Window::size() const {
  std::size_t s = 1;
  for (int i = 0; i < n_; ++i) s *= static_cast<std::size_t>(2 * radius_ + 1);
  return s;
}

std::size_t Window::index_of(const Degree& m) const {
  if (!contains(m)) throw WindowError("degree " + degree_str(m) + " outside window of radius " + std::to_string(radius_));
  std::size_t idx = 0;
  for (int x : m) idx = idx * static_cast<std::size_t>(2 * radius_ + 1) + static_cast<std::size_t>(x + radius_);
  return idx;
}

Degree Window::degree_at(std::size_t index) const {
  const auto side = static_cast<std::size_t>(2 * radius_ + 1);
  if (index >= size()) throw WindowError("slice index out of range");
  Degree m(static_cast<std::size_t>(n_));
  for (int p = n_ - 1; p >= 0; --p) {
    m[static_cast<std::size_t>(p)] = static_cast<int>(index % side) - radius_;
    index /= side;
  }
  return m;
}

void add_scaled(ModVector& y, const GaussRat& a, const ModVector& x) {
  if (a.is_zero()) return;
  for (const auto& [m, vec] : x) {
    auto [it, inserted] = y.try_emplace(m, vec.size());
    auto& dst = it->second;
    bool nonzero = false;
    for (std::size_t k = 0; k < vec.size(); ++k) {
      if (!vec[k].is_zero()) dst[k] += a * vec[k];
      nonzero = nonzero || !dst[k].is_zero();
    }
    if (!nonzero) y.erase(it);
  }
}

bool is_zero(const ModVector& v) { return v.empty(); }

TensorModule::TensorModule(std::shared_ptr<const Irrep> rep, std::vector<GaussRat> alpha, BPresPtr bpres,
                           Window window)
    : rep_(std::move(rep)), alpha_(std::move(alpha)), bpres_(std::move(bpres)), window_(window) {
  if (!rep_) throw std::invalid_argument("tensor module without irrep");
  if (!bpres_) throw std::invalid_argument("tensor module without B presentation");
  if (rep_->n() != window_.n()) throw std::invalid_argument("irrep rank differs from window rank");
  if (alpha_.size() != static_cast<std::size_t>(window_.n()))
    throw std::invalid_argument("alpha must have n entries");

  const int n = rep_->n();
  const std::size_t d = rep_->dim();
  columns_.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& cols = columns_[static_cast<std::size_t>(i * n + j)];
      cols.resize(d);
      const Matrix& E = rep_->E(i, j);
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r)
          if (!E(r, c).is_zero()) cols[c].emplace_back(r, E(r, c));
    }
}

ModVector TensorModule::basis_vector(const Degree& m, std::size_t k) const {
  if (!window_.contains(m)) throw WindowError("basis vector outside window: " + degree_str(m));
  if (k >= d()) throw std::out_of_range("irrep basis index out of range");
  std::vector<GaussRat> v(d());
  v[k] = 1;
  return ModVector{{m, std::move(v)}};
}

void TensorModule::check_vector(const ModVector& v) const {
  for (const auto& [m, vec] : v) {
    if (!window_.contains(m)) throw WindowError("vector supported outside window at " + degree_str(m));
    if (vec.size() != d()) throw std::invalid_argument("slice vector has wrong length");
  }
}

CompiledAction TensorModule::compile(const LoopElem& x) const {
  if (x.rank() != n()) throw std::invalid_argument("element rank differs from module rank");
  if (!same_presentation(x.presentation(), bpres_))
    throw PresentationMismatch("element and module use different B presentations");

  std::map<Degree, std::size_t> slot;
  CompiledAction out;
  for (const auto& [key, b] : x.terms()) {
    const GaussRat psi = eval_psi(b);
    if (psi.is_zero()) continue;
    auto [it, fresh] = slot.try_emplace(key.degree, out.pieces.size());
    if (fresh) {
      out.pieces.push_back({key.degree, GaussRat(), std::vector<GaussRat>(static_cast<std::size_t>(n())), {}});
      out.pieces.back().rho.resize(d());
    }
    auto& piece = out.pieces[it->second];
    if (key.is_apart()) {
      piece.shift += psi;
      continue;
    }
    const int i = key.component();
    piece.cartan[static_cast<std::size_t>(i)] += psi;
    for (int j = 0; j < n(); ++j) {
      const int rj = key.degree[static_cast<std::size_t>(j)];
      if (rj == 0) continue;
      const GaussRat coef = psi * GaussRat(rj);
      const auto& cols = columns_[static_cast<std::size_t>(j * n() + i)];
      for (std::size_t c = 0; c < d(); ++c)
        for (const auto& [r, e] : cols[c]) {
          auto& col = piece.rho[c];
          auto hit = std::find_if(col.begin(), col.end(), [r = r](const auto& p) { return p.first == r; });
          if (hit == col.end()) {
            col.emplace_back(r, coef * e);
          } else {
            hit->second += coef * e;
          }
        }
    }
  }
  for (auto& piece : out.pieces)
    for (auto& col : piece.rho) std::erase_if(col, [](const auto& p) { return p.second.is_zero(); });
  return out;
}

ModVector TensorModule::apply(const CompiledAction& a, const ModVector& v, ActMode mode) const {
  check_vector(v);
  ModVector out;
  for (const auto& piece : a.pieces)
    for (const auto& [m, vec] : v) {
      Degree target = m + piece.r;
      if (!window_.contains(target)) {
        if (mode == ActMode::Strict)
          throw WindowError("action leaves window: " + degree_str(m) + " -> " + degree_str(target));
        continue;
      }
      GaussRat scalar = piece.shift;
      for (int i = 0; i < n(); ++i) {
        const auto& ci = piece.cartan[static_cast<std::size_t>(i)];
        if (!ci.is_zero()) scalar += ci * (GaussRat(m[static_cast<std::size_t>(i)]) + alpha_[static_cast<std::size_t>(i)]);
      }
      auto& dst = out.try_emplace(std::move(target), d()).first->second;
      for (std::size_t c = 0; c < d(); ++c) {
        if (vec[c].is_zero()) continue;
        if (!scalar.is_zero()) dst[c] += scalar * vec[c];
        for (const auto& [r, e] : piece.rho[c]) dst[r] += e * vec[c];
      }
    }
  std::erase_if(out, [](const auto& slice) {
    return std::all_of(slice.second.begin(), slice.second.end(), [](const GaussRat& x) { return x.is_zero(); });
  });
  return out;
}

ModVector TensorModule::act(const LoopElem& x, const ModVector& v, ActMode mode) const {
  return apply(compile(x), v, mode);
}

Matrix TensorModule::op_matrix(const LoopElem& x, const std::vector<Degree>& src,
                               const std::vector<Degree>& dst) const {
  std::map<Degree, std::size_t> row_block;
  for (std::size_t q = 0; q < dst.size(); ++q) row_block.emplace(dst[q], q);
  Matrix out(dst.size() * d(), src.size() * d());
  for (std::size_t p = 0; p < src.size(); ++p)
    for (std::size_t k = 0; k < d(); ++k)
      for (const auto& [m, vec] : act(x, basis_vector(src[p], k))) {
        auto it = row_block.find(m);
        if (it == row_block.end()) throw WindowError("image reaches slice " + degree_str(m) + " outside the block");
        for (std::size_t r = 0; r < d(); ++r) out(it->second * d() + r, p * d() + k) = vec[r];
      }
  return out;
}

SparseVec TensorModule::flatten(const ModVector& v) const {
  check_vector(v);
  SparseVec out;
  for (const auto& [m, vec] : v) {
    const std::size_t base = window_.index_of(m) * d();
    for (std::size_t k = 0; k < vec.size(); ++k)
      if (!vec[k].is_zero()) out.emplace(base + k, vec[k]);
  }
  return out;
}

ModVector TensorModule::unflatten(const SparseVec& v) const {
  ModVector out;
  for (const auto& [idx, x] : v) {
    auto& slice = out.try_emplace(window_.degree_at(idx / d()), d()).first->second;
    slice[idx % d()] = x;
  }
  return out;
}

ModVector module_axiom_residual(const TensorModule& mod, const LoopElem& x, const LoopElem& y, const ModVector& v) {
  ModVector res = mod.act(bracket(x, y), v);
  add_scaled(res, GaussRat(-1), mod.act(x, mod.act(y, v)));
  add_scaled(res, GaussRat(1), mod.act(y, mod.act(x, v)));
  return res;
}

AssocUnitalResidual assoc_unital_check(const TensorModule& mod, const Degree& r, const Degree& s, const BElem& b,
                                       const BElem& bp, const ModVector& v) {
  const LoopSpace space = mod.space();
  AssocUnitalResidual out;
  out.assoc = mod.act(space.t(r, b), mod.act(space.t(s, bp), v));
  add_scaled(out.assoc, GaussRat(-1), mod.act(space.t(r + s, b * bp), v));
  out.unit = mod.act(space.t(space.zero_degree()), v);
  add_scaled(out.unit, GaussRat(-1), v);
  return out;
}

std::vector<WeightSlice> weight_decomposition(const TensorModule& mod) {
  const LoopSpace space = mod.space();
  std::vector<WeightSlice> out;
  for (const Degree& m : mod.window().degrees()) {
    const std::vector<Degree> slice{m};
    if (mod.op_matrix(space.t(space.zero_degree()), slice, slice) != Matrix::identity(mod.d()))
      throw std::logic_error("t^0 does not act as the identity on slice " + degree_str(m));
    for (int i = 0; i < mod.n(); ++i) {
      const GaussRat ev = GaussRat(m[static_cast<std::size_t>(i)]) + mod.alpha()[static_cast<std::size_t>(i)];
      if (mod.op_matrix(space.D(space.unit(i), space.zero_degree()), slice, slice) != Matrix::scalar(mod.d(), ev))
        throw std::logic_error("Cartan element " + std::to_string(i + 1) + " is not diagonal on slice " + degree_str(m));
    }
    out.push_back({m, mod.d()});
  }
  return out;
}

}  // namespace loopwitt
