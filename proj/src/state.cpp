#include "cuntz/state.hpp"

#include "cuntz/errors.hpp"

namespace cuntz {

Gaussian phi(const Element& x) {
  Gaussian out;
  for (const auto& [key, c] : x.terms()) {
    if (key.left != key.right) continue;
    out += c * Gaussian(Rational::inverse_power(x.rank(), static_cast<int>(key.left.size())));
  }
  return out;
}

Gaussian inner(const Element& x, const Element& y) {
  if (x.rank() != y.rank()) throw RankMismatch(x.rank(), y.rank());
  return phi(y.adjoint() * x);
}

std::string Mismatch::to_string() const {
  std::string out = "x=" + x.to_string();
  if (y) out += " y=" + y->to_string();
  return out + " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
}

std::string to_text(const MismatchReport& report) {
  std::string out;
  for (const auto& m : report) out += m.to_string() + "\n";
  return out;
}

MismatchReport verify_adjoint(const MapExpr& f, const MapExpr& g, int level) {
  if (f.rank() != g.rank()) throw RankMismatch(f.rank(), g.rank());
  const auto keys = basis_keys(f.rank(), level);
  std::vector<Element> f_images;
  std::vector<Element> g_images_adj;
  f_images.reserve(keys.size());
  g_images_adj.reserve(keys.size());
  for (const auto& key : keys) {
    Element b = Element::monomial(key);
    f_images.push_back(apply(f, b));
    g_images_adj.push_back(apply(g, b).adjoint());
  }

  MismatchReport report;
  for (std::size_t xi = 0; xi < keys.size(); ++xi) {
    Element x = Element::monomial(keys[xi]);
    for (std::size_t yi = 0; yi < keys.size(); ++yi) {
      // <f(x), y> = phi(y^* f(x)),  <x, g(y)> = phi(g(y)^* x)
      Element y_adj = Element::monomial(keys[yi].right, keys[yi].left);
      Gaussian lhs = phi(y_adj * f_images[xi]);
      Gaussian rhs = phi(g_images_adj[yi] * x);
      if (lhs != rhs) report.push_back({keys[xi], keys[yi], lhs, rhs});
    }
  }
  return report;
}

MismatchReport preserves_phi(const MapExpr& f, int level) {
  MismatchReport report;
  for (const auto& key : basis_keys(f.rank(), level)) {
    Element b = Element::monomial(key);
    Gaussian lhs = phi(apply(f, b));
    Gaussian rhs = phi(b);
    if (lhs != rhs) report.push_back({key, std::nullopt, lhs, rhs});
  }
  return report;
}

}  // namespace cuntz
