#include "cuntz/bridge.hpp"

#include <algorithm>

#include "cuntz/errors.hpp"
#include "cuntz/state.hpp"

namespace cuntz {

int word_index(const Word& mu) {
  int index = 0;
  for (int letter : mu.letters()) index = index * mu.rank() + (letter - 1);
  return index;
}

Matrix embed_balanced(const Element& x, int k) {
  if (k < 0) throw DomainError("negative embedding level");
  for (const auto& [key, c] : x.terms()) {
    if (key.weight() != 0) {
      throw OutOfBalancedScope("term " + key.to_string() + " has nonzero weight");
    }
    if (static_cast<int>(key.right.size()) > k) {
      throw DomainError("term " + key.to_string() + " is longer than level " + std::to_string(k));
    }
  }
  int dim = 1;
  for (int step = 0; step < k; ++step) dim *= x.rank();
  Matrix m(dim);
  const Element leveled = level_normalize(x, k);
  for (const auto& [key, c] : leveled.terms()) {
    m(word_index(key.left), word_index(key.right)) = c;
  }
  return m;
}

bool trace_cross_check(const Element& x, int k) {
  Matrix m = embed_balanced(x, k);
  return phi(x) == m.trace() / Gaussian(m.dim());
}

bool kadison_schwartz_check(const MapExpr& f, const Element& x, int k) {
  Element fx = apply(f, x);
  Element diff = level_by_weight(apply(f, x.adjoint() * x) - fx.adjoint() * fx);
  for (const auto& [key, c] : diff.terms()) {
    if (key.weight() != 0) {
      throw OutOfBalancedScope("Kadison-Schwartz difference has a term of weight " +
                               std::to_string(key.weight()));
    }
  }
  Matrix m = embed_balanced(diff, std::max(k, max_word_length(diff)));
  if (!m.is_hermitian()) return false;
  return is_psd(HermitianMatrix(std::move(m)));
}

}  // namespace cuntz
