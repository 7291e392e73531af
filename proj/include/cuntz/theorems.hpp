#pragma once

// Runnable checks for the structural claims about the canonical endomorphism
// Phi_n, its left inverse Psi_n and related completely positive maps. Every
// check sweeps basis monomials up to a level (or seeded random samples) and
// records each comparison it makes as a witness.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/maps.hpp"
#include "cuntz/matrix.hpp"

namespace cuntz {

// Fault injection for the theorem suite. Each mutation corrupts Phi_n or
// Psi_n so that some check must fail.
enum class Mutation {
  none,
  psi_weight,       // Psi_n weights 1/(n+1)
  psi_unit_weight,  // Psi_n weights 1
  phi_drop_term,    // Phi_n without its last Kraus operator
};

std::optional<Mutation> parse_mutation(std::string_view name);
std::string to_string(Mutation m);

// The pair (Phi_n, Psi_n) the checks run against.
struct Model {
  int n;
  MapExpr canonical;
  MapExpr left_inverse;

  static Model standard(int n) { return mutated(n, Mutation::none); }
  static Model mutated(int n, Mutation m);
};

struct Witness {
  std::string claim;
  std::string lhs;
  std::string rhs;
  bool holds;
};

struct CheckParams {
  int n = 2;
  int level = 1;
  std::uint64_t seed = 0;
};

struct CheckReport {
  std::string name;
  CheckParams params;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;

  bool passed() const;
  void add(std::string claim, std::string lhs, std::string rhs, bool holds);
};

// Limit of Psi^m(x) when it is a scalar multiple of 1. Terms of the iterates
// that are not scalar must eventually repeat their word pattern with a
// shrinking factor; the limit is then their scalar part. Returns nothing if
// no such pattern shows up within `max_steps`.
std::optional<Gaussian> psi_limit(const MapExpr& psi, const Element& x, int max_steps);

// Phi_n o Ad S_1^* on S_alpha S_beta^*, written out branch by branch without
// going through `apply`.
Element prop10_case_formula(const Word& alpha, const Word& beta);

// Unitaries used for the quasi-free automorphism checks at rank n: the
// identity, the swap of S_1 and S_2, a rational rotation in the (1,2) plane
// and a complex Hadamard-type block.
std::vector<Matrix> lemma5_instances(int n);

// S_i^* S_j = delta_ij 1 and sum_i S_i S_i^* = 1.
CheckReport check_relations(int n);
// Closed-form phi against the limit of Psi iterates on basis words.
CheckReport check_state_limit(const Model& model, int level);
// phi(ab) = phi(ba) for basis a and balanced basis b.
CheckReport check_trace_like(int n, int level);
// phi o Phi_n = phi and <Phi_n x, y> = <x, Psi_n y>.
CheckReport check_prop6(const Model& model, int level);
inline CheckReport check_prop6(int n, int level) { return check_prop6(Model::standard(n), level); }
// Psi_n o Phi_n = id on basis words.
CheckReport check_left_inverse(const Model& model, int level);
CheckReport check_prop8(const Model& model, int level);
inline CheckReport check_prop8(int n, int level) { return check_prop8(Model::standard(n), level); }
// The map Ad S_i^* for generator i.
CheckReport check_prop9(int n, int i, int level);
CheckReport check_prop10(const Model& model, int level, std::uint64_t seed);
inline CheckReport check_prop10(int n, int level, std::uint64_t seed = 0) {
  return check_prop10(Model::standard(n), level, seed);
}
// Throws DomainError if u is not unitary.
CheckReport check_lemma5(const Matrix& u, int level);
// Scaled maps lambda F are recognized with 0 <= lambda <= 1.
CheckReport check_extremal_remark(const Model& model, int level);
// Seeded algebraic laws: ring and *-algebra axioms, multiplicativity of
// Phi_n and of quasi-free maps, Cauchy-Schwarz, Kadison-Schwartz.
CheckReport check_properties(const Model& model, int level, std::uint64_t seed);
// Seeded matrix-picture laws on balanced elements of length <= 2.
CheckReport check_matrix_bridge(int n, std::uint64_t seed);

std::vector<CheckReport> run_all(const Model& model, int level, std::uint64_t seed);
inline std::vector<CheckReport> run_all(int n, int level, std::uint64_t seed) {
  return run_all(Model::standard(n), level, seed);
}

// Human readable table, one row per check.
std::string summary_table(const std::vector<CheckReport>& reports);

}  // namespace cuntz
