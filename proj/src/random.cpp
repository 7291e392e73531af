#include "cuntz/random.hpp"

namespace cuntz {

int Sampler::uniform(int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

Rational Sampler::small_rational() {
  int p = uniform(-4, 4);
  int q = uniform(1, 3);
  return {BigInt(p), BigInt(q)};
}

Gaussian Sampler::small_gaussian() {
  if (uniform(0, 1) == 0) return small_rational();
  Rational re = small_rational();
  return {re, small_rational()};
}

Word Sampler::word(int rank, int min_length, int max_length) {
  int length = uniform(min_length, max_length);
  std::vector<int> letters;
  for (int k = 0; k < length; ++k) letters.push_back(uniform(1, rank));
  return Word(rank, std::move(letters));
}

Element Sampler::element(int rank, int max_length, int terms) {
  Element out(rank);
  for (int t = 0; t < terms; ++t) {
    Word mu = word(rank, 0, max_length);
    Word nu = word(rank, 0, max_length);
    out.add_term({mu, nu}, small_gaussian());
  }
  return out;
}

Element Sampler::balanced(int rank, int max_length, int terms) {
  Element out(rank);
  for (int t = 0; t < terms; ++t) {
    int length = uniform(0, max_length);
    Word mu = word(rank, length, length);
    Word nu = word(rank, length, length);
    out.add_term({mu, nu}, small_gaussian());
  }
  return out;
}

Matrix Sampler::hermitian(int dim) {
  Matrix m(dim);
  for (int r = 0; r < dim; ++r) {
    m(r, r) = Gaussian(small_rational());
    for (int c = r + 1; c < dim; ++c) {
      m(r, c) = small_gaussian();
      m(c, r) = m(r, c).conj();
    }
  }
  return m;
}

}  // namespace cuntz
