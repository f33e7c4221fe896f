#pragma once

#include "loopwitt/tensmod.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace loopwitt {

/// Deterministic sampler. Integers are drawn by reducing raw mt19937_64 output
/// modulo the range, so streams agree across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Seed for one named suite derived from the run seed.
  static std::uint64_t suite_seed(std::uint64_t seed, std::string_view suite);

  int uniform_int(int lo, int hi);
  bool coin() { return uniform_int(0, 1) == 1; }

  /// Drawn from a fixed pool of small Gaussian rationals, zero included.
  GaussRat scalar();
  GaussRat nonzero_scalar();
  std::vector<GaussRat> vector(int n);
  std::vector<GaussRat> nonzero_vector(int n);
  Degree degree(int n, int bound);

  /// Random element of B: a short polynomial (Laurent polynomial for Laurent B).
  BElem belem(const BPresPtr& pres);
  /// Random element of ker psi.
  BElem ideal_element(const BPresPtr& pres);

  /// Random element homogeneous of degree r.
  LoopElem homogeneous(const LoopSpace& space, const Degree& r);
  /// Sum of a few homogeneous pieces with |r_i| <= bound.
  LoopElem element(const LoopSpace& space, int bound, int pieces);

  /// Random module vector supported on up to two slices of interior(margin).
  ModVector mod_vector(const TensorModule& mod, int margin);

 private:
  std::mt19937_64 gen_;
};

}  // namespace loopwitt
