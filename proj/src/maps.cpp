#include "cuntz/maps.hpp"

#include <map>

#include "cuntz/bridge.hpp"
#include "cuntz/errors.hpp"

namespace cuntz {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_rank(int a, int b) {
  if (a != b) throw RankMismatch(a, b);
}

// Image of S_mu under a homomorphism, memoized per word.
class WordImages {
 public:
  explicit WordImages(const std::vector<Element>& images) : images_(images) {}

  const Element& of(const Word& mu) {
    auto it = cache_.find(mu);
    if (it != cache_.end()) return it->second;
    Element out = Element::unit(mu.rank());
    for (int letter : mu.letters()) out = out * images_[static_cast<std::size_t>(letter - 1)];
    return cache_.emplace(mu, std::move(out)).first->second;
  }

 private:
  const std::vector<Element>& images_;
  std::map<Word, Element> cache_;
};

template <class F>
bool all_basis(int rank, int level, F&& pred) {
  for (const auto& key : basis_keys(rank, level)) {
    if (!pred(Element::monomial(key))) return false;
  }
  return true;
}

}  // namespace

MapExpr MapExpr::identity(int rank) {
  if (rank < 2) throw DomainError("rank must be at least 2");
  return MapExpr(rank, std::make_shared<MapNode>(MapNode{IdentityMap{}}));
}

MapExpr MapExpr::kraus(std::vector<std::pair<Rational, Element>> pairs) {
  if (pairs.empty()) throw DomainError("a Kraus family needs at least one operator");
  const int rank = pairs.front().second.rank();
  for (const auto& [w, op] : pairs) {
    if (w.sign() <= 0) throw DomainError("Kraus weight " + w.to_string() + " is not positive");
    check_rank(rank, op.rank());
  }
  return MapExpr(rank, std::make_shared<MapNode>(MapNode{WeightedKraus{std::move(pairs)}}));
}

MapExpr MapExpr::ad(const Element& v) { return kraus({{Rational(1), v}}); }

MapExpr MapExpr::homomorphism(std::vector<Element> images) {
  if (!cuntz_relations_check(images)) {
    throw DomainError("homomorphism images do not satisfy the Cuntz relations");
  }
  const int rank = images.front().rank();
  return MapExpr(rank,
                 std::make_shared<MapNode>(MapNode{Homomorphism{std::move(images), true}}));
}

MapExpr MapExpr::unchecked_homomorphism(std::vector<Element> images) {
  if (images.empty()) throw DomainError("a homomorphism needs generator images");
  const int rank = images.front().rank();
  for (const auto& e : images) check_rank(rank, e.rank());
  return MapExpr(rank,
                 std::make_shared<MapNode>(MapNode{Homomorphism{std::move(images), false}}));
}

MapExpr MapExpr::compose(const MapExpr& outer, const MapExpr& inner) {
  check_rank(outer.rank(), inner.rank());
  return MapExpr(outer.rank(), std::make_shared<MapNode>(MapNode{Compose{outer, inner}}));
}

MapExpr MapExpr::sum(std::vector<MapExpr> parts) {
  if (parts.empty()) throw DomainError("a sum of maps needs at least one part");
  const int rank = parts.front().rank();
  for (const auto& p : parts) check_rank(rank, p.rank());
  return MapExpr(rank, std::make_shared<MapNode>(MapNode{Sum{std::move(parts)}}));
}

MapExpr MapExpr::named(std::string label) const {
  MapExpr out = *this;
  out.label_ = std::move(label);
  return out;
}

std::string MapExpr::to_string() const {
  if (label_) return *label_;
  return std::visit(
      overloaded{
          [](const IdentityMap&) -> std::string { return "id"; },
          [](const WeightedKraus& k) -> std::string {
            if (k.pairs.size() == 1 && k.pairs.front().first == Rational(1)) {
              return "ad(" + k.pairs.front().second.to_string() + ")";
            }
            std::string out = "kraus(";
            for (std::size_t i = 0; i < k.pairs.size(); ++i) {
              if (i) out += ", ";
              out += "(" + k.pairs[i].first.to_string() + ", " + k.pairs[i].second.to_string() + ")";
            }
            return out + ")";
          },
          [](const Homomorphism& h) -> std::string {
            std::string out = "hom(";
            for (std::size_t i = 0; i < h.images.size(); ++i) {
              if (i) out += ", ";
              out += h.images[i].to_string();
            }
            return out + ")";
          },
          [](const Compose& c) -> std::string {
            return "compose(" + c.outer.to_string() + ", " + c.inner.to_string() + ")";
          },
          [](const Sum& s) -> std::string {
            std::string out = "sum(";
            for (std::size_t i = 0; i < s.parts.size(); ++i) {
              if (i) out += ", ";
              out += s.parts[i].to_string();
            }
            return out + ")";
          },
      },
      node_->value);
}

MapExpr canonical_endomorphism(int n) {
  std::vector<std::pair<Rational, Element>> pairs;
  for (int i = 1; i <= n; ++i) pairs.emplace_back(Rational(1), Element::generator(n, i));
  return MapExpr::kraus(std::move(pairs)).named("Phi");
}

MapExpr standard_left_inverse(int n) {
  std::vector<std::pair<Rational, Element>> pairs;
  for (int i = 1; i <= n; ++i) {
    pairs.emplace_back(Rational(BigInt(1), BigInt(n)), Element::generator(n, i).adjoint());
  }
  return MapExpr::kraus(std::move(pairs)).named("Psi");
}

Element apply(const MapExpr& f, const Element& x) {
  check_rank(f.rank(), x.rank());
  return std::visit(
      overloaded{
          [&](const IdentityMap&) { return x; },
          [&](const WeightedKraus& k) {
            Element out(x.rank());
            for (const auto& [w, v] : k.pairs) out += (v * x * v.adjoint()) * Gaussian(w);
            return out;
          },
          [&](const Homomorphism& h) {
            if (!h.validated) throw Error("homomorphism was not validated against the Cuntz relations");
            WordImages images(h.images);
            Element out(x.rank());
            for (const auto& [key, c] : x.terms()) {
              out += (images.of(key.left) * images.of(key.right).adjoint()) * c;
            }
            return out;
          },
          [&](const Compose& c) { return apply(c.outer, apply(c.inner, x)); },
          [&](const Sum& s) {
            Element out(x.rank());
            for (const auto& part : s.parts) out += apply(part, x);
            return out;
          },
      },
      f.node().value);
}

bool cuntz_relations_check(const std::vector<Element>& images) {
  if (images.size() < 2) throw DomainError("the Cuntz relations need at least two images");
  const int rank = images.front().rank();
  for (const auto& e : images) check_rank(rank, e.rank());
  if (static_cast<int>(images.size()) != rank) {
    throw DomainError("expected " + std::to_string(rank) + " images, got " +
                      std::to_string(images.size()));
  }
  Element range_sum(rank);
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      Element expected = i == j ? Element::unit(rank) : Element::zero(rank);
      if (!equals(images[i].adjoint() * images[j], expected)) return false;
    }
    range_sum += images[i] * images[i].adjoint();
  }
  return equals(range_sum, Element::unit(rank));
}

bool is_operational_partition(const std::vector<Element>& ops) {
  if (ops.empty()) throw DomainError("an operational partition needs at least one element");
  const int rank = ops.front().rank();
  Element total(rank);
  for (const auto& v : ops) {
    check_rank(rank, v.rank());
    if (is_zero(v)) throw DomainError("operational partition contains a zero element");
    total += v * v.adjoint();
  }
  return equals(total, Element::unit(rank));
}

OperationalPartition::OperationalPartition(std::vector<Element> ops) : ops_(std::move(ops)) {
  if (!is_operational_partition(ops_)) {
    throw DomainError("sum of v_i v_i^* is not the unit");
  }
}

MapExpr operational_convex(const OperationalPartition& parts, const std::vector<MapExpr>& maps) {
  if (parts.size() != maps.size()) {
    throw DomainError("operational combination has " + std::to_string(parts.size()) +
                      " coefficients but " + std::to_string(maps.size()) + " maps");
  }
  std::vector<MapExpr> terms;
  terms.reserve(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    terms.push_back(MapExpr::compose(MapExpr::ad(parts.ops()[i]), maps[i]));
  }
  if (terms.size() == 1) return terms.front();
  return MapExpr::sum(std::move(terms));
}

bool is_unital(const MapExpr& f) {
  return equals(apply(f, Element::unit(f.rank())), Element::unit(f.rank()));
}

MapExpr quasi_free(const Matrix& u) {
  if (u.dim() < 2) throw DomainError("quasi-free maps need a matrix of size at least 2");
  if (!u.is_unitary()) throw DomainError("matrix is not unitary");
  const int n = u.dim();
  std::vector<Element> images;
  for (int i = 0; i < n; ++i) {
    Element img(n);
    for (int j = 0; j < n; ++j) img += Element::generator(n, j + 1) * u(j, i);
    images.push_back(std::move(img));
  }
  return MapExpr::homomorphism(std::move(images));
}

bool maps_agree(const MapExpr& f, const MapExpr& g, int level) {
  check_rank(f.rank(), g.rank());
  return all_basis(f.rank(), level, [&](const Element& w) { return equals(apply(f, w), apply(g, w)); });
}

std::optional<Gaussian> find_scalar_ratio(const MapExpr& f, const MapExpr& g, int level) {
  check_rank(f.rank(), g.rank());
  std::optional<Gaussian> lambda;
  for (const auto& key : basis_keys(f.rank(), level)) {
    Element w = Element::monomial(key);
    Element fw = apply(f, w);
    Element gw = apply(g, w);
    if (!lambda) {
      if (is_zero(gw)) {
        if (!is_zero(fw)) return std::nullopt;
        continue;
      }
      // On one common right-length the coordinates of both images are unique.
      const int common = std::max(max_word_length(fw), max_word_length(gw));
      Element g_coords = level_normalize(gw, common);
      Element f_coords = level_normalize(fw, common);
      const auto& [gkey, gc] = *g_coords.terms().begin();
      auto it = f_coords.terms().find(gkey);
      lambda = (it == f_coords.terms().end() ? Gaussian(0) : it->second) / gc;
    }
    if (!equals(fw, gw * *lambda)) return std::nullopt;
  }
  return lambda;
}

bool commutes_with_range(const Element& z, const MapExpr& f, int level) {
  check_rank(z.rank(), f.rank());
  return all_basis(f.rank(), level, [&](const Element& w) {
    Element fw = apply(f, w);
    return equals(z * fw, fw * z);
  });
}

bool check_component_factorization(const MapExpr& component, const MapExpr& phi,
                                   const Element& z, int level) {
  check_rank(component.rank(), phi.rank());
  bool factors = all_basis(phi.rank(), level, [&](const Element& w) {
    return equals(apply(component, w), z * apply(phi, w));
  });
  return factors && commutes_with_range(z, phi, level);
}

bool check_commutant_partition(const std::vector<Element>& zs, const MapExpr& phi, int level) {
  if (zs.empty()) throw DomainError("empty commutant partition");
  Element total(phi.rank());
  for (const auto& z : zs) {
    for (const auto& [weight, part] : weight_split(z)) {
      if (weight != 0 && !is_zero(part)) {
        throw OutOfBalancedScope("positivity undecidable here: element has weight " +
                                 std::to_string(weight) + " component");
      }
    }
    total += z;
  }
  if (!equals(total, Element::unit(phi.rank()))) return false;
  for (const auto& z : zs) {
    if (!commutes_with_range(z, phi, level)) return false;
    Matrix m = embed_balanced(level_by_weight(z), max_word_length(level_by_weight(z)));
    if (!m.is_hermitian() || !is_psd(HermitianMatrix(std::move(m)))) return false;
  }
  return true;
}

}  // namespace cuntz
