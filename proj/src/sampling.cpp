#include "loopwitt/sampling.hpp"

#include <array>

namespace loopwitt {

namespace {

const std::array<GaussRat, 8>& pool() {
  static const std::array<GaussRat, 8> p{GaussRat(0),
                                         GaussRat(1),
                                         GaussRat(-1),
                                         GaussRat(2),
                                         GaussRat(mpq_class(1, 2)),
                                         GaussRat(mpq_class(-3, 2)),
                                         GaussRat::i(),
                                         GaussRat(1, 1)};
  return p;
}

}  // namespace

std::uint64_t Sampler::suite_seed(std::uint64_t seed, std::string_view suite) {
  // FNV-1a over the name, folded into the seed with a splitmix64 finaliser.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : suite) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Sampler::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
  return lo + static_cast<int>(gen_() % span);
}

GaussRat Sampler::scalar() { return pool()[static_cast<std::size_t>(uniform_int(0, pool().size() - 1))]; }

GaussRat Sampler::nonzero_scalar() { return pool()[static_cast<std::size_t>(uniform_int(1, pool().size() - 1))]; }

std::vector<GaussRat> Sampler::vector(int n) {
  std::vector<GaussRat> v;
  for (int i = 0; i < n; ++i) v.push_back(scalar());
  return v;
}

std::vector<GaussRat> Sampler::nonzero_vector(int n) {
  for (;;) {
    auto v = vector(n);
    for (const auto& x : v)
      if (!x.is_zero()) return v;
  }
}

Degree Sampler::degree(int n, int bound) {
  Degree r;
  for (int i = 0; i < n; ++i) r.push_back(uniform_int(-bound, bound));
  return r;
}

BElem Sampler::belem(const BPresPtr& pres) {
  switch (pres->kind()) {
    case BKind::Trivial:
      return BElem::scalar(pres, scalar());
    case BKind::PolyQuot: {
      LaurentPoly p;
      for (int e = 0; e <= 2; ++e) p = p + LaurentPoly::monomial(scalar(), e);
      return BElem(pres, p);
    }
    case BKind::Laurent: {
      LaurentPoly p;
      const int terms = uniform_int(1, 2);
      for (int t = 0; t < terms; ++t) p = p + LaurentPoly::monomial(scalar(), uniform_int(-2, 2));
      return BElem(pres, p);
    }
  }
  throw std::logic_error("unknown B kind");
}

BElem Sampler::ideal_element(const BPresPtr& pres) {
  BElem b = belem(pres);
  return b - BElem::scalar(pres, eval_psi(b));
}

LoopElem Sampler::homogeneous(const LoopSpace& space, const Degree& r) {
  LoopElem x = space.zero();
  if (coin()) x += space.t(r, belem(space.presentation()));
  for (int i = 0; i < space.rank(); ++i)
    if (coin()) x += space.D(space.unit(i), r, belem(space.presentation()));
  if (x.is_zero()) x = space.D(space.unit(uniform_int(0, space.rank() - 1)), r);
  return x;
}

LoopElem Sampler::element(const LoopSpace& space, int bound, int pieces) {
  LoopElem x = space.zero();
  for (int p = 0; p < pieces; ++p) x += homogeneous(space, degree(space.rank(), bound));
  return x;
}

ModVector Sampler::mod_vector(const TensorModule& mod, int margin) {
  const auto slices = mod.window().interior(margin);
  if (slices.empty()) throw WindowError("no interior slices at margin " + std::to_string(margin));
  ModVector v;
  const int count = uniform_int(1, 2);
  for (int c = 0; c < count; ++c) {
    const Degree& m = slices[static_cast<std::size_t>(uniform_int(0, static_cast<int>(slices.size()) - 1))];
    std::vector<GaussRat> coords;
    for (std::size_t k = 0; k < mod.d(); ++k) coords.push_back(scalar());
    add_scaled(v, GaussRat(1), ModVector{{m, coords}});
  }
  if (v.empty()) return mod.basis_vector(slices.front(), 0);
  return v;
}

}  // namespace loopwitt
