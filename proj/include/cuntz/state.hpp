#pragma once

// The state phi_n and the inner product <x, y> = phi_n(y^* x).

#include <optional>
#include <string>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/maps.hpp"

namespace cuntz {

// phi_n(S_mu S_nu^*) = delta_{mu nu} n^{-|mu|}, extended linearly.
Gaussian phi(const Element& x);

Gaussian inner(const Element& x, const Element& y);

// One failing comparison. `y` is absent for single-word checks.
struct Mismatch {
  TermKey x;
  std::optional<TermKey> y;
  Gaussian lhs;
  Gaussian rhs;

  // `x=S[1] y=S[2]' lhs=1/2 rhs=0`
  std::string to_string() const;
};

using MismatchReport = std::vector<Mismatch>;

// One record per line.
std::string to_text(const MismatchReport& report);

// <f(x), y> = <x, g(y)> for every pair of basis monomials with all four word
// lengths <= level. An empty report means the pair is adjoint at this level.
MismatchReport verify_adjoint(const MapExpr& f, const MapExpr& g, int level);

// phi(f(b)) = phi(b) for every basis monomial b up to `level`.
MismatchReport preserves_phi(const MapExpr& f, int level);

}  // namespace cuntz
