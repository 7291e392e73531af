#pragma once

// Seeded sampling of scalars, elements and matrices. Draws depend only on the
// raw mt19937_64 stream, so results are identical across standard libraries.

#include <cstdint>
#include <random>

#include "cuntz/algebra.hpp"
#include "cuntz/matrix.hpp"

namespace cuntz {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [lo, hi].
  int uniform(int lo, int hi);
  // p/q with |p| <= 4, 1 <= q <= 3.
  Rational small_rational();
  // Real with probability 1/2, otherwise both parts from small_rational.
  Gaussian small_gaussian();

  Word word(int rank, int min_length, int max_length);
  // `terms` random monomials with word lengths <= max_length.
  Element element(int rank, int max_length, int terms);
  // Weight-0 monomials only, with |mu| = |nu| <= max_length.
  Element balanced(int rank, int max_length, int terms);
  Matrix hermitian(int dim);

 private:
  std::mt19937_64 rng_;
};

}  // namespace cuntz
