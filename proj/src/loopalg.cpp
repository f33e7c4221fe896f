#include "loopwitt/loopalg.hpp"

#include <stdexcept>

namespace loopwitt {

Degree operator+(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("degree rank mismatch");
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Degree operator-(const Degree& a) {
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

std::string degree_str(const Degree& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m[i]);
  }
  return out + ")";
}

GaussRat pairing(const std::vector<GaussRat>& u, const Degree& r) {
  if (u.size() != r.size()) throw std::invalid_argument("pairing: rank mismatch");
  GaussRat acc;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (r[i] != 0) acc += u[i] * GaussRat(r[i]);
  return acc;
}

GaussRat pairing(const std::vector<GaussRat>& u, const std::vector<GaussRat>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("pairing: rank mismatch");
  GaussRat acc;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

LoopElem::LoopElem(int rank, BPresPtr pres) : rank_(rank), pres_(std::move(pres)) {
  if (rank_ < 1) throw std::invalid_argument("loop algebra rank must be >= 1");
  if (!pres_) throw std::invalid_argument("loop element without B presentation");
}

bool LoopElem::is_apart_only() const {
  for (const auto& [key, b] : terms_)
    if (!key.is_apart()) return false;
  return true;
}

void LoopElem::check_key(const BasisKey& key) const {
  if (key.kind < 0 || key.kind > rank_ || key.degree.size() != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("basis key does not match rank " + std::to_string(rank_));
}

void LoopElem::require_compatible(const LoopElem& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("loop elements of different rank");
  if (!same_presentation(pres_, o.pres_))
    throw PresentationMismatch("loop elements over different B presentations");
}

void LoopElem::add_term(const BasisKey& key, const BElem& coef) {
  check_key(key);
  if (!same_presentation(pres_, coef.presentation()))
    throw PresentationMismatch("coefficient from a different B presentation");
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coef);
  if (inserted) return;
  it->second += coef;
  if (it->second.is_zero()) terms_.erase(it);
}

LoopElem& LoopElem::operator+=(const LoopElem& o) {
  require_compatible(o);
  for (const auto& [k, b] : o.terms_) add_term(k, b);
  return *this;
}

LoopElem& LoopElem::operator-=(const LoopElem& o) {
  require_compatible(o);
  for (const auto& [k, b] : o.terms_) add_term(k, -b);
  return *this;
}

LoopElem& LoopElem::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, b] : terms_) b *= c;
  return *this;
}

LoopElem& LoopElem::operator*=(const BElem& c) {
  if (!same_presentation(pres_, c.presentation()))
    throw PresentationMismatch("scaling by a B element of a different presentation");
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const LoopElem& a, const LoopElem& b) {
  return a.rank_ == b.rank_ && same_presentation(a.pres_, b.pres_) && a.terms_ == b.terms_;
}

LoopSpace::LoopSpace(int rank, BPresPtr pres) : rank_(rank), pres_(std::move(pres)) {
  if (rank_ < 1) throw std::invalid_argument("loop algebra rank must be >= 1");
  if (!pres_) throw std::invalid_argument("loop space without B presentation");
}

std::vector<GaussRat> LoopSpace::unit(int i) const {
  std::vector<GaussRat> u(static_cast<std::size_t>(rank_));
  u.at(static_cast<std::size_t>(i)) = 1;
  return u;
}

LoopElem LoopSpace::t(const Degree& r, const BElem& b) const {
  LoopElem x = zero();
  x.add_term(BasisKey{0, r}, b);
  return x;
}

LoopElem LoopSpace::D(const std::vector<GaussRat>& u, const Degree& r, const BElem& b) const {
  if (u.size() != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("D(u,r): u has wrong length");
  LoopElem x = zero();
  for (int i = 0; i < rank_; ++i) x.add_term(BasisKey{i + 1, r}, u[static_cast<std::size_t>(i)] * b);
  return x;
}

LoopElem LoopSpace::d(int m) const {
  if (rank_ != 1) throw std::invalid_argument("d_m is defined for rank one only");
  return D({GaussRat(1)}, Degree{m});
}

std::vector<StructureTerm> basis_bracket(const BasisKey& a, const BasisKey& b) {
  if (a.degree.size() != b.degree.size()) throw std::invalid_argument("basis keys of different rank");
  std::vector<StructureTerm> out;
  const Degree sum = a.degree + b.degree;
  auto emit = [&](long c, int kind) {
    if (c == 0) return;
    for (auto& [coef, key] : out)
      if (key.kind == kind) {
        coef += c;
        return;
      }
    out.emplace_back(c, BasisKey{kind, sum});
  };
  if (a.is_apart() && b.is_apart()) return out;
  if (!a.is_apart() && b.is_apart()) {
    // [D^i(r), t^s] = s_i t^(r+s)
    emit(b.degree[static_cast<std::size_t>(a.component())], 0);
  } else if (a.is_apart() && !b.is_apart()) {
    emit(-a.degree[static_cast<std::size_t>(b.component())], 0);
  } else {
    // [D^i(r), D^j(s)] = s_i D^j(r+s) - r_j D^i(r+s)
    emit(b.degree[static_cast<std::size_t>(a.component())], b.kind);
    emit(-a.degree[static_cast<std::size_t>(b.component())], a.kind);
  }
  std::erase_if(out, [](const StructureTerm& t) { return t.first == 0; });
  return out;
}

namespace {

template <typename Lookup>
LoopElem bracket_with(const LoopElem& x, const LoopElem& y, Lookup&& lookup) {
  x.require_compatible(y);
  LoopElem out(x.rank(), x.presentation());
  for (const auto& [kx, bx] : x.terms())
    for (const auto& [ky, by] : y.terms()) {
      const auto& terms = lookup(kx, ky);
      if (terms.empty()) continue;
      BElem prod = bx * by;
      for (const auto& [c, key] : terms) out.add_term(key, prod * GaussRat(c));
    }
  return out;
}

}  // namespace

LoopElem bracket(const LoopElem& x, const LoopElem& y) {
  return bracket_with(x, y, [](const BasisKey& a, const BasisKey& b) { return basis_bracket(a, b); });
}

const std::vector<StructureTerm>& BracketTable::lookup(const BasisKey& a, const BasisKey& b) {
  auto key = std::make_pair(a, b);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(std::move(key), basis_bracket(a, b)).first;
  return it->second;
}

LoopElem BracketTable::bracket(const LoopElem& x, const LoopElem& y) {
  return bracket_with(x, y,
                      [this](const BasisKey& a, const BasisKey& b) -> const std::vector<StructureTerm>& {
                        return lookup(a, b);
                      });
}

LoopElem jacobi_residual(const LoopElem& x, const LoopElem& y, const LoopElem& z) {
  return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
}

Degree ad_weight(const LoopElem& x) {
  if (x.is_zero()) throw std::invalid_argument("ad_weight of the zero element");
  const Degree m = x.terms().begin()->first.degree;
  for (const auto& [key, b] : x.terms())
    if (key.degree != m) throw std::invalid_argument("ad_weight: element is not homogeneous");
  LoopSpace space(x.rank(), x.presentation());
  for (int i = 0; i < x.rank(); ++i) {
    LoopElem lhs = bracket(space.D(space.unit(i), space.zero_degree()), x);
    if (lhs != x * GaussRat(m[static_cast<std::size_t>(i)]))
      throw std::logic_error("ad_weight: Cartan bracket disagrees with degree " + degree_str(m));
  }
  return m;
}

namespace {

void require_rank_one(const LoopSpace& space, const char* what) {
  if (space.rank() != 1) throw std::invalid_argument(std::string(what) + " requires rank one");
}

}  // namespace

LoopElem poly_derivation(const LoopSpace& space, int k, int i) {
  require_rank_one(space, "poly_derivation");
  if (k < 0) throw std::invalid_argument("poly_derivation: k must be >= 0");
  LoopElem out = space.zero();
  mpz_class binom = 1;  // C(k, j)
  for (int j = 0; j <= k; ++j) {
    if (j > 0) binom = binom * (k - j + 1) / j;
    GaussRat c = ((k - j) % 2 == 0) ? GaussRat(mpq_class(binom)) : -GaussRat(mpq_class(binom));
    out += space.d(i + j) * c;
  }
  return out;
}

LoopElem lemma25_1_residual(const LoopSpace& space, int k, int l, int i, int j) {
  require_rank_one(space, "lemma25_1_residual");
  if (k < 0 || l < 0) throw std::invalid_argument("lemma25_1_residual: k, l must be >= 0");
  LoopElem res = bracket(poly_derivation(space, k, i), poly_derivation(space, l, j));
  res -= poly_derivation(space, k + l, i + j) * GaussRat(l - k + j - i);
  if (l != k) res -= poly_derivation(space, k + l - 1, i + j) * GaussRat(l - k);
  return res;
}

LoopElem shifted_derivation(const LoopSpace& space, int m) {
  require_rank_one(space, "I(m)");
  return space.d(m) - space.d(0);
}

LoopElem lemma24_residual(const LoopSpace& space, int r, int s) {
  require_rank_one(space, "lemma24_residual");
  LoopElem res = bracket(shifted_derivation(space, r), shifted_derivation(space, s));
  res -= shifted_derivation(space, r + s) * GaussRat(s - r);
  res -= shifted_derivation(space, r) * GaussRat(r);
  res += shifted_derivation(space, s) * GaussRat(s);
  return res;
}

GaussRat phi_md(const LoopElem& x) {
  if (x.rank() != 1) throw std::invalid_argument("phi_md requires rank one");
  GaussRat total, weighted;
  for (const auto& [key, b] : x.terms()) {
    if (key.is_apart()) throw std::invalid_argument("phi_md: element has a t^r part");
    auto c = b.as_scalar();
    if (!c) throw std::invalid_argument("phi_md: coefficients must be scalars");
    total += *c;
    weighted += *c * GaussRat(key.degree[0]);
  }
  if (!total.is_zero()) throw std::invalid_argument("phi_md: element is not in (t-1)C[t,t^-1]d");
  return weighted;
}

}  // namespace loopwitt
