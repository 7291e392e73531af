#pragma once

// The balanced words of length k span a copy of the n^k x n^k matrix algebra:
// S_mu S_nu^* with |mu| = |nu| = k corresponds to the matrix unit E_{mu nu},
// with words enumerated lexicographically.

#include "cuntz/algebra.hpp"
#include "cuntz/maps.hpp"
#include "cuntz/matrix.hpp"

namespace cuntz {

// Row/column index of a length-k word in the lexicographic enumeration.
int word_index(const Word& mu);

// Throws OutOfBalancedScope on a term of nonzero weight and DomainError on a
// word longer than k.
Matrix embed_balanced(const Element& x, int k);

// phi(x) equals the normalized trace Tr(embed_balanced(x, k)) / n^k.
bool trace_cross_check(const Element& x, int k);

// f(x^* x) - f(x)^* f(x) is positive in the matrix picture. The embedding
// level is the larger of k and the longest word in the difference. Throws
// OutOfBalancedScope when the difference leaves the balanced subalgebra.
bool kadison_schwartz_check(const MapExpr& f, const Element& x, int k);

}  // namespace cuntz
