#pragma once

// Linear maps on the Cuntz algebra, kept as expression trees so that they can
// be printed, compared and named in reports.
//
//   WeightedKraus   x -> sum_i w_i v_i x v_i^*      (Ad v, Phi_n, Psi_n)
//   Homomorphism    S_i -> images[i]                (quasi-free maps)
//   Compose         outer(inner(x))
//   Sum             sum_k part_k(x)                 (operational combinations)
//   Identity

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/matrix.hpp"

namespace cuntz {

struct MapNode;

class MapExpr {
 public:
  static MapExpr identity(int rank);
  // Weights must be positive.
  static MapExpr kraus(std::vector<std::pair<Rational, Element>> pairs);
  // Ad v : x -> v x v^*
  static MapExpr ad(const Element& v);
  // Validates the images with cuntz_relations_check; throws DomainError if
  // they do not satisfy the Cuntz relations.
  static MapExpr homomorphism(std::vector<Element> images);
  // Builds the node without validation. `apply` refuses such a map.
  static MapExpr unchecked_homomorphism(std::vector<Element> images);
  static MapExpr compose(const MapExpr& outer, const MapExpr& inner);
  static MapExpr sum(std::vector<MapExpr> parts);

  int rank() const { return rank_; }
  const MapNode& node() const { return *node_; }

  // Attaches a display name, e.g. `Phi`. Behavior is unchanged.
  MapExpr named(std::string label) const;
  const std::optional<std::string>& label() const { return label_; }

  // Map syntax accepted by the expression parser.
  std::string to_string() const;

 private:
  MapExpr(int rank, std::shared_ptr<const MapNode> node) : rank_(rank), node_(std::move(node)) {}

  int rank_;
  std::shared_ptr<const MapNode> node_;
  std::optional<std::string> label_;
};

struct IdentityMap {};

struct WeightedKraus {
  std::vector<std::pair<Rational, Element>> pairs;
};

struct Homomorphism {
  std::vector<Element> images;
  bool validated = false;
};

struct Compose {
  MapExpr outer;
  MapExpr inner;
};

struct Sum {
  std::vector<MapExpr> parts;
};

struct MapNode {
  std::variant<IdentityMap, WeightedKraus, Homomorphism, Compose, Sum> value;
};

// Phi_n(x) = sum_i S_i x S_i^*
MapExpr canonical_endomorphism(int n);
// Psi_n(x) = (1/n) sum_i S_i^* x S_i, carried with weights 1/n so every
// scalar stays in Q(i).
MapExpr standard_left_inverse(int n);

Element apply(const MapExpr& f, const Element& x);

// Checks images[i]^* images[j] = delta_ij 1 and sum_i images[i] images[i]^* = 1.
// Throws DomainError unless there are exactly `rank` images, rank >= 2.
bool cuntz_relations_check(const std::vector<Element>& images);

// Throws DomainError on a zero element; RankMismatch on mixed ranks.
bool is_operational_partition(const std::vector<Element>& ops);

// A family {v_i} with sum_i v_i v_i^* = 1, validated on construction.
class OperationalPartition {
 public:
  explicit OperationalPartition(std::vector<Element> ops);

  const std::vector<Element>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

 private:
  std::vector<Element> ops_;
};

// x -> sum_i v_i maps_i(x) v_i^*
MapExpr operational_convex(const OperationalPartition& parts, const std::vector<MapExpr>& maps);

bool is_unital(const MapExpr& f);

// The quasi-free endomorphism S_i -> sum_j u_ji S_j. Throws DomainError unless
// u is exactly unitary.
MapExpr quasi_free(const Matrix& u);

// True iff f(S_mu S_nu^*) and g(S_mu S_nu^*) agree for every |mu|, |nu| <= level.
bool maps_agree(const MapExpr& f, const MapExpr& g, int level);

// The scalar lambda with f(w) = lambda g(w) on every basis word up to
// `level`. Lambda is read off the first word whose g-image is nonzero, then
// verified everywhere. Returns nothing if every g-image vanishes or if the
// candidate fails anywhere.
std::optional<Gaussian> find_scalar_ratio(const MapExpr& f, const MapExpr& g, int level);

bool commutes_with_range(const Element& z, const MapExpr& f, int level);

// component(w) = z phi(w) on every basis word, and z commutes with the range of phi.
bool check_component_factorization(const MapExpr& component, const MapExpr& phi,
                                   const Element& z, int level);

// sum z_i = 1, every z_i commutes with the range of phi and every z_i is a
// positive element. Throws OutOfBalancedScope when some z_i has a nonzero
// weight component, since positivity is only decided on balanced elements.
bool check_commutant_partition(const std::vector<Element>& zs, const MapExpr& phi, int level);

}  // namespace cuntz
