#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loopwitt/linalg.hpp"
#include "loopwitt/sampling.hpp"

using namespace loopwitt;

namespace {

Matrix random_matrix(Sampler& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.scalar();
  return m;
}

// Determinant by cofactor expansion; tiny sizes only.
GaussRat det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  GaussRat out;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const GaussRat term = m(0, j) * det(minor);
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

// Rank as the largest nonvanishing minor.
std::size_t rank_by_minors(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t best = 0;
  for (std::size_t rm = 1; rm < (1u << R); ++rm)
    for (std::size_t cm = 1; cm < (1u << C); ++cm) {
      if (__builtin_popcountll(rm) != __builtin_popcountll(cm)) continue;
      const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(rm));
      if (k <= best) continue;
      Matrix sub(k, k);
      std::size_t i = 0;
      for (std::size_t r = 0; r < R; ++r) {
        if (!(rm >> r & 1)) continue;
        std::size_t j = 0;
        for (std::size_t c = 0; c < C; ++c)
          if (cm >> c & 1) sub(i, j++) = m(r, c);
        ++i;
      }
      if (!det(sub).is_zero()) best = k;
    }
  return best;
}

}  // namespace

TEST_CASE("rank agrees with the minors oracle") {
  Sampler rng(3);
  for (int c = 0; c < 40; ++c) {
    const auto r = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto k = static_cast<std::size_t>(rng.uniform_int(1, 4));
    Matrix m = random_matrix(rng, r, k);
    if (rng.coin() && r > 1)
      for (std::size_t j = 0; j < k; ++j) m(r - 1, j) = m(0, j) * GaussRat(2) - m(r - 2, j);
    CHECK(rank(m) == rank_by_minors(m));
  }
}

TEST_CASE("nullspace vectors are annihilated and complete") {
  Sampler rng(5);
  for (int c = 0; c < 30; ++c) {
    const Matrix m = random_matrix(rng, 3, 5);
    const auto ns = nullspace(m);
    CHECK(ns.size() + rank(m) == 5);
    for (const auto& v : ns)
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
  }
}

TEST_CASE("rref is reduced") {
  Matrix m(2, 3);
  m(0, 0) = 2;
  m(0, 1) = 4;
  m(0, 2) = 6;
  m(1, 0) = 1;
  m(1, 1) = 3;
  m(1, 2) = GaussRat::i();
  const auto e = rref(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced(0, 0) == GaussRat(1));
  CHECK(e.reduced(0, 1).is_zero());
  CHECK(e.reduced(1, 0).is_zero());
  CHECK(e.reduced(1, 1) == GaussRat(1));
}

TEST_CASE("echelon basis membership and coordinates") {
  EchelonBasis eb(true);
  const SparseVec a{{0, 1}, {2, 3}}, b{{1, 2}, {2, 1}}, c{{0, 2}, {1, 2}, {2, 7}};
  CHECK(eb.insert(a));
  CHECK(eb.insert(b));
  CHECK_FALSE(eb.insert(c));
  CHECK(eb.rank() == 2);
  SparseVec probe = a;
  axpy(probe, GaussRat(mpq_class(1, 2)), b);
  const auto coords = eb.coordinates(probe);
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == GaussRat(1));
  CHECK((*coords)[1] == GaussRat(mpq_class(1, 2)));
  CHECK_FALSE(eb.contains(SparseVec{{1, 1}}));
  eb.make_reduced();
  CHECK(eb.is_reduced());
  CHECK(eb.contains(probe));
}

TEST_CASE("echelon reduce is a canonical normal form") {
  Sampler rng(9);
  EchelonBasis eb;
  std::vector<SparseVec> gens;
  for (int k = 0; k < 4; ++k) {
    SparseVec v;
    for (std::size_t j = 0; j < 7; ++j) {
      const GaussRat x = rng.scalar();
      if (!x.is_zero()) v.emplace(j, x);
    }
    gens.push_back(v);
    eb.insert(v);
  }
  eb.make_reduced();
  for (int c = 0; c < 20; ++c) {
    SparseVec v{{static_cast<std::size_t>(rng.uniform_int(0, 6)), rng.nonzero_scalar()}};
    SparseVec w = v;
    for (const auto& g : gens) axpy(w, rng.scalar(), g);
    CHECK(eb.reduce(v) == eb.reduce(w));
  }
}

TEST_CASE("burnside dimension") {
  CHECK(burnside_dim(std::vector<Matrix>{Matrix::identity(3)}) == 1);
  Matrix diag(2, 2);
  diag(0, 0) = 1;
  diag(1, 1) = 2;
  CHECK(burnside_dim(std::vector<Matrix>{diag}) == 2);
  Matrix e12(2, 2), e21(2, 2);
  e12(0, 1) = 1;
  e21(1, 0) = 1;
  CHECK(burnside_dim(std::vector<Matrix>{e12}) == 2);
  CHECK(burnside_dim(std::vector<Matrix>{e12, e21}) == 4);
  // upper triangular 3x3 algebra
  Matrix a(3, 3), b(3, 3);
  a(0, 1) = 1;
  b(1, 2) = 1;
  Matrix d3(3, 3);
  d3(0, 0) = 1;
  d3(1, 1) = 2;
  d3(2, 2) = 3;
  CHECK(burnside_dim(std::vector<Matrix>{a, b, d3}) == 6);
}

TEST_CASE("matrix products") {
  Sampler rng(13);
  const Matrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3), c = random_matrix(rng, 3, 3);
  CHECK((a * b) * c == a * (b * c));
  CHECK(commutator(a, b) == a * b - b * a);
  CHECK(det(a * b) == det(a) * det(b));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
}
