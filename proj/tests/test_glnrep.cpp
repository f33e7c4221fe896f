#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loopwitt/glnrep.hpp"

#include <algorithm>
#include <functional>

using namespace loopwitt;

namespace {

// Semistandard tableaux of shape lambda with entries in 1..n, tallied by content.
std::map<std::vector<int>, std::size_t> ssyt_contents(const std::vector<int>& lambda, int n) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::map<std::pair<int, int>, int> fill;
  std::map<std::vector<int>, std::size_t> out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      std::vector<int> content(static_cast<std::size_t>(n), 0);
      for (const auto& [cell, v] : fill) ++content[static_cast<std::size_t>(v - 1)];
      ++out[content];
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, fill[{r - 1, c}] + 1);
    for (int v = lo; v <= n; ++v) {
      fill[{r, c}] = v;
      rec(k + 1);
    }
    fill.erase({r, c});
  };
  rec(0);
  return out;
}

std::size_t ssyt_count(const DominantWeight& mu, int n) {
  std::size_t total = 0;
  for (const auto& [content, k] : ssyt_contents(mu.partition(), n)) total += k;
  return total;
}

Matrix power(const Matrix& m, int k) {
  Matrix out = Matrix::identity(m.rows());
  for (int j = 0; j < k; ++j) out = out * m;
  return out;
}

struct Case {
  int n;
  std::vector<int> mu;
};

const std::vector<Case> kCases{{1, {}},     {2, {0}},    {2, {1}},       {2, {2}},      {2, {3}},
                               {3, {1, 0}}, {3, {0, 1}}, {3, {1, 1}},    {3, {2, 0}},   {3, {2, 1}},
                               {4, {1, 0, 0}}, {4, {0, 1, 0}}, {4, {1, 0, 1}}};

}  // namespace

TEST_CASE("weyl dimension") {
  CHECK(weyl_dim(DominantWeight({1}), 2) == 2);
  CHECK(weyl_dim(DominantWeight({1, 1}), 3) == 8);
  CHECK(weyl_dim(DominantWeight({0, 0, 0}), 4) == 1);
  CHECK(weyl_dim(DominantWeight({2}), 2) == 3);
  CHECK(weyl_dim(DominantWeight({1, 0}), 3) == 3);
  for (int n = 2; n <= 4; ++n)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        std::vector<int> mu(static_cast<std::size_t>(n - 1), 0);
        mu[0] = a;
        mu.back() += b;
        CHECK(weyl_dim(DominantWeight(mu), n) == ssyt_count(DominantWeight(mu), n));
      }
}

TEST_CASE("built irreps satisfy the gl_n relations") {
  for (const auto& [n, mu] : kCases)
    for (const GaussRat& c : {GaussRat(0), GaussRat(1), GaussRat(mpq_class(5, 2))}) {
      CAPTURE(n);
      const Irrep rep = build_irrep(DominantWeight(mu), c, n);
      CHECK(rep.dim() == ssyt_count(DominantWeight(mu), n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) CHECK(gl_relations_residual(rep, i, j, k, l).is_zero());
      Matrix trace(rep.dim(), rep.dim());
      for (int i = 0; i < n; ++i) trace += rep.E(i, i);
      CHECK(trace == Matrix::scalar(rep.dim(), c));
      CHECK(burnside_dim(rep.generators()) == rep.dim() * rep.dim());
    }
}

TEST_CASE("highest weight vector") {
  for (const auto& [n, mu] : kCases) {
    const Irrep rep = build_irrep(DominantWeight(mu), 1, n);
    const std::size_t h = rep.hw_index();
    std::vector<GaussRat> e(rep.dim());
    e[h] = 1;
    for (int i = 0; i + 1 < n; ++i)
      for (const auto& x : rep.E(i, i + 1).apply(e)) CHECK(x.is_zero());
    for (int i = 0; i < n; ++i) {
      const auto img = rep.E(i, i).apply(e);
      for (std::size_t b = 0; b < rep.dim(); ++b)
        if (b != h) CHECK(img[b].is_zero());
    }
    std::vector<int> lambda = DominantWeight(mu).partition();
    lambda.resize(static_cast<std::size_t>(n), 0);
    CHECK(rep.basis_contents()[h] == lambda);
  }
}

TEST_CASE("weight multiplicities are kostka numbers") {
  for (const auto& [n, mu] : kCases) {
    const DominantWeight w(mu);
    const Irrep rep = build_irrep(w, 0, n);
    CHECK(weight_dimensions(rep) == ssyt_contents(w.partition(), n));
  }
}

TEST_CASE("weight multiplicities are permutation invariant") {
  for (const auto& [n, mu] : kCases) {
    const auto dims = weight_dimensions(build_irrep(DominantWeight(mu), 0, n));
    for (const auto& [content, k] : dims) {
      std::vector<int> p = content;
      std::sort(p.begin(), p.end());
      do {
        auto it = dims.find(p);
        REQUIRE(it != dims.end());
        CHECK(it->second == k);
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
}

TEST_CASE("weight_of matches the diagonal") {
  const Irrep rep = build_irrep(DominantWeight({2, 1}), GaussRat(mpq_class(7, 3)), 3);
  for (std::size_t b = 0; b < rep.dim(); ++b) {
    std::vector<GaussRat> e(rep.dim());
    e[b] = 1;
    const auto w = rep.weight_of(b);
    for (int i = 0; i < 3; ++i) CHECK(rep.E(i, i).apply(e)[b] == w[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("natural representation is matrix units") {
  const Irrep rep = build_irrep(DominantWeight({1}), 1, 2);
  REQUIRE(rep.dim() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix unit(2, 2);
      unit(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
      CHECK(rep.E(i, j) == unit);
    }
  CHECK(rep.E(0, 0) + rep.E(1, 1) == Matrix::identity(2));
  CHECK(commutator(rep.E(0, 1), rep.E(1, 0)) == rep.E(0, 0) - rep.E(1, 1));
}

TEST_CASE("spin one lowering chain") {
  for (const GaussRat& c : {GaussRat(0), GaussRat(4), GaussRat::i()}) {
    const Irrep rep = build_irrep(DominantWeight({2}), c, 2);
    REQUIRE(rep.dim() == 3);
    CHECK(power(rep.E(1, 0), 3).is_zero());
    CHECK_FALSE(power(rep.E(1, 0), 2).is_zero());
  }
}

TEST_CASE("trivial module") {
  for (int n = 1; n <= 4; ++n) {
    const Irrep rep = build_irrep(DominantWeight(std::vector<int>(static_cast<std::size_t>(n - 1), 0)), 0, n);
    CHECK(rep.dim() == 1);
    for (const auto& m : rep.generators()) CHECK(m.is_zero());
  }
}

TEST_CASE("dimension caps") {
  CHECK_THROWS_AS(build_irrep(DominantWeight({3, 3}), 0, 3), DimensionCapExceeded);
  CHECK_THROWS_AS(build_irrep(DominantWeight({2, 2}), 0, 3, IrrepLimits{20, 6}), DimensionCapExceeded);
  CHECK_THROWS(build_irrep(DominantWeight({1}), 0, 3));
}

TEST_CASE("relations residual detects a broken matrix") {
  Irrep rep = build_irrep(DominantWeight({1, 0}), 1, 3);
  std::vector<Matrix> gens = rep.generators();
  gens[1](0, 0) += 1;  // perturb E_12
  const Matrix lhs = commutator(gens[1], gens[3]);  // [E_12, E_21]
  CHECK_FALSE((lhs - (gens[0] - gens[4])).is_zero());
  CHECK((commutator(rep.E(0, 1), rep.E(1, 0)) - (rep.E(0, 0) - rep.E(1, 1))).is_zero());
}
