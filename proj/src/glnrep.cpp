#include "loopwitt/glnrep.hpp"

#include <deque>
#include <numeric>

namespace loopwitt {

DominantWeight::DominantWeight(std::vector<int> mu) : mu_(std::move(mu)) {
  for (int m : mu_)
    if (m < 0) throw std::invalid_argument("dominant weight entries must be >= 0");
}

std::vector<int> DominantWeight::partition() const {
  std::vector<int> lambda(mu_.size() + 1, 0);
  for (std::size_t i = mu_.size(); i-- > 0;) lambda[i] = lambda[i + 1] + mu_[i];
  return lambda;
}

std::size_t weyl_dim(const DominantWeight& mu, int n) {
  if (mu.rank() != n) throw std::invalid_argument("dominant weight length must be n-1");
  const auto lambda = mu.partition();
  mpq_class d = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d *= mpq_class(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i, j - i);
  d.canonicalize();
  if (d.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return d.get_num().get_ui();
}

std::vector<GaussRat> Irrep::weight_of(std::size_t b) const {
  std::vector<GaussRat> w;
  const GaussRat shift = (c_ - GaussRat(boxes_)) / GaussRat(n_);
  for (int x : contents_.at(b)) w.push_back(GaussRat(x) + shift);
  return w;
}

namespace {

// Words in {0..n-1}^k encoded base n, position p having weight n^p.
class TensorPower {
 public:
  TensorPower(int n, int k) : n_(n), k_(k) {
    place_.resize(static_cast<std::size_t>(k));
    std::size_t w = 1;
    for (int p = 0; p < k; ++p) {
      place_[static_cast<std::size_t>(p)] = w;
      w *= static_cast<std::size_t>(n);
    }
    size_ = w;
  }

  std::size_t size() const { return size_; }

  int digit(std::size_t code, int p) const {
    return static_cast<int>((code / place_[static_cast<std::size_t>(p)]) % static_cast<std::size_t>(n_));
  }

  std::vector<int> content(std::size_t code) const {
    std::vector<int> c(static_cast<std::size_t>(n_), 0);
    for (int p = 0; p < k_; ++p) ++c[static_cast<std::size_t>(digit(code, p))];
    return c;
  }

  // E_ab acting on the tensor power: replace one e_b factor by e_a, summed over factors.
  SparseVec apply(int a, int b, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [code, x] : v)
      for (int p = 0; p < k_; ++p) {
        if (digit(code, p) != b) continue;
        const std::size_t target = code + static_cast<std::size_t>(a) * place_[static_cast<std::size_t>(p)] -
                                   static_cast<std::size_t>(b) * place_[static_cast<std::size_t>(p)];
        axpy(out, x, SparseVec{{target, GaussRat(1)}});
      }
    return out;
  }

 private:
  int n_;
  int k_;
  std::size_t size_ = 1;
  std::vector<std::size_t> place_;
};

SparseVec highest_weight_vector(const TensorPower& tp, const std::vector<int>& lambda, int n) {
  std::vector<std::size_t> words;
  for (std::size_t code = 0; code < tp.size(); ++code)
    if (tp.content(code) == lambda) words.push_back(code);

  // Rows: one per (raising operator, image word).
  std::map<std::pair<int, std::size_t>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, GaussRat>>> entries(words.size());
  for (std::size_t col = 0; col < words.size(); ++col)
    for (int i = 0; i + 1 < n; ++i)
      for (const auto& [img, x] : tp.apply(i, i + 1, SparseVec{{words[col], GaussRat(1)}})) {
        auto [it, _] = row_of.try_emplace({i, img}, row_of.size());
        entries[col].emplace_back(it->second, x);
      }
  Matrix system(row_of.size(), words.size());
  for (std::size_t col = 0; col < words.size(); ++col)
    for (const auto& [row, x] : entries[col]) system(row, col) += x;

  auto kernel = nullspace(system);
  if (kernel.empty()) throw std::logic_error("no highest-weight vector of the requested weight");
  SparseVec v;
  for (std::size_t col = 0; col < words.size(); ++col)
    if (!kernel.front()[col].is_zero()) v.emplace(words[col], kernel.front()[col]);
  return v;
}

}  // namespace

Irrep build_irrep(const DominantWeight& mu, const GaussRat& c, int n, const IrrepLimits& limits) {
  if (n < 1) throw std::invalid_argument("gl_n rank must be >= 1");
  if (mu.rank() != n) throw std::invalid_argument("dominant weight must have n-1 entries");
  const auto lambda = mu.partition();
  const int boxes = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (boxes > limits.max_boxes)
    throw DimensionCapExceeded("weight needs " + std::to_string(boxes) + " tensor factors, cap is " +
                               std::to_string(limits.max_boxes));
  const std::size_t expected = weyl_dim(mu, n);
  if (expected > limits.max_dim)
    throw DimensionCapExceeded("dimension " + std::to_string(expected) + " exceeds cap " +
                               std::to_string(limits.max_dim));

  TensorPower tp(n, boxes);
  std::vector<SparseVec> basis{highest_weight_vector(tp, lambda, n)};
  std::vector<std::vector<int>> contents{lambda};
  EchelonBasis span(/*track_coordinates=*/true);
  span.insert(basis.front());

  // Close under the lowering operators E_{i+1,i}.
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t q = queue.front();
    queue.pop_front();
    for (int i = 0; i + 1 < n; ++i) {
      SparseVec y = tp.apply(i + 1, i, basis[q]);
      if (y.empty() || !span.insert(y)) continue;
      if (basis.size() >= limits.max_dim)
        throw DimensionCapExceeded("closure exceeds dimension cap " + std::to_string(limits.max_dim));
      auto w = contents[q];
      --w[static_cast<std::size_t>(i)];
      ++w[static_cast<std::size_t>(i) + 1];
      basis.push_back(std::move(y));
      contents.push_back(std::move(w));
      queue.push_back(basis.size() - 1);
    }
  }
  if (basis.size() != expected)
    throw std::logic_error("cyclic span has dimension " + std::to_string(basis.size()) +
                           ", Weyl formula gives " + std::to_string(expected));

  Irrep rep;
  rep.n_ = n;
  rep.dim_ = basis.size();
  rep.mu_ = mu;
  rep.c_ = c;
  rep.boxes_ = boxes;
  rep.contents_ = std::move(contents);
  const GaussRat shift = (c - GaussRat(boxes)) / GaussRat(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Matrix m(rep.dim_, rep.dim_);
      for (std::size_t l = 0; l < rep.dim_; ++l) {
        auto coords = span.coordinates(tp.apply(a, b, basis[l]));
        if (!coords) throw std::logic_error("cyclic span is not gl_n-stable");
        for (std::size_t r = 0; r < rep.dim_; ++r) m(r, l) = (*coords)[r];
      }
      if (a == b) m += Matrix::scalar(rep.dim_, shift);
      rep.E_.push_back(std::move(m));
    }
  return rep;
}

Matrix gl_relations_residual(const Irrep& rep, int i, int j, int k, int l) {
  Matrix res = commutator(rep.E(i, j), rep.E(k, l));
  if (j == k) res -= rep.E(i, l);
  if (l == i) res += rep.E(k, j);
  return res;
}

std::map<std::vector<int>, std::size_t> weight_dimensions(const Irrep& rep) {
  std::map<std::vector<int>, std::size_t> dims;
  for (const auto& w : rep.basis_contents()) ++dims[w];
  return dims;
}

}  // namespace loopwitt
