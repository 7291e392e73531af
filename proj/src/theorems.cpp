#include "cuntz/theorems.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "cuntz/bridge.hpp"
#include "cuntz/errors.hpp"
#include "cuntz/random.hpp"
#include "cuntz/state.hpp"

namespace cuntz {

namespace {

Element gen(int n, int i) { return Element::generator(n, i); }
Element gen_adj(int n, int i) { return Element::generator(n, i).adjoint(); }
Element proj(int n, int i) { return Element::projection(Word(n, {i})); }
Element unit(int n) { return Element::unit(n); }

Rational one_over(int n) { return {BigInt(1), BigInt(n)}; }

std::string level_suffix(int level) { return " (level " + std::to_string(level) + ")"; }

// Compares lhs(w) with rhs(w) on every basis monomial and records a single
// witness: the first counterexample, or a summary when all agree.
template <class Lhs, class Rhs>
void sweep(CheckReport& report, const std::string& claim, const std::string& lhs_text,
           const std::string& rhs_text, int n, int level, Lhs&& lhs, Rhs&& rhs) {
  const auto keys = basis_keys(n, level);
  for (const auto& key : keys) {
    Element w = Element::monomial(key);
    Element l = lhs(w);
    Element r = rhs(w);
    if (!equals(l, r)) {
      report.add(claim + " [w = " + key.to_string() + "]", l.to_string(), r.to_string(), false);
      return;
    }
  }
  report.add(claim + " on " + std::to_string(keys.size()) + " basis words" + level_suffix(level),
             lhs_text, rhs_text, true);
}

void add_equals(CheckReport& report, const std::string& claim, const Element& lhs,
                const Element& rhs) {
  report.add(claim, lhs.to_string(), rhs.to_string(), equals(lhs, rhs));
}

void add_mismatches(CheckReport& report, const std::string& claim, const std::string& lhs_text,
                    const std::string& rhs_text, const MismatchReport& mismatches,
                    std::size_t checked) {
  if (mismatches.empty()) {
    report.add(claim + " on " + std::to_string(checked) + " cases", lhs_text, rhs_text, true);
    return;
  }
  constexpr std::size_t kShown = 5;
  for (std::size_t k = 0; k < std::min(kShown, mismatches.size()); ++k) {
    const auto& m = mismatches[k];
    std::string at = "x = " + m.x.to_string();
    if (m.y) at += ", y = " + m.y->to_string();
    report.add(claim + " [" + at + "]", m.lhs.to_string(), m.rhs.to_string(), false);
  }
  if (mismatches.size() > kShown) {
    report.notes.push_back(std::to_string(mismatches.size() - kShown) +
                           " further failures of '" + claim + "' not listed");
  }
}

std::size_t basis_count(int n, int level) {
  std::size_t words = words_up_to(n, level).size();
  return words * words;
}

std::string lambda_text(const std::optional<Gaussian>& lambda) {
  return lambda ? lambda->to_string() : "none";
}

}  // namespace

std::optional<Mutation> parse_mutation(std::string_view name) {
  if (name == "none") return Mutation::none;
  if (name == "psi-weight") return Mutation::psi_weight;
  if (name == "psi-unit-weight") return Mutation::psi_unit_weight;
  if (name == "phi-drop-term") return Mutation::phi_drop_term;
  return std::nullopt;
}

std::string to_string(Mutation m) {
  switch (m) {
    case Mutation::none:
      return "none";
    case Mutation::psi_weight:
      return "psi-weight";
    case Mutation::psi_unit_weight:
      return "psi-unit-weight";
    case Mutation::phi_drop_term:
      return "phi-drop-term";
  }
  return "none";
}

Model Model::mutated(int n, Mutation m) {
  Model model{n, canonical_endomorphism(n), standard_left_inverse(n)};
  switch (m) {
    case Mutation::none:
      break;
    case Mutation::psi_weight:
    case Mutation::psi_unit_weight: {
      Rational w = m == Mutation::psi_weight ? one_over(n + 1) : Rational(1);
      std::vector<std::pair<Rational, Element>> pairs;
      for (int i = 1; i <= n; ++i) pairs.emplace_back(w, gen_adj(n, i));
      model.left_inverse = MapExpr::kraus(std::move(pairs)).named("Psi");
      break;
    }
    case Mutation::phi_drop_term: {
      std::vector<std::pair<Rational, Element>> pairs;
      for (int i = 1; i < n; ++i) pairs.emplace_back(Rational(1), gen(n, i));
      model.canonical = MapExpr::kraus(std::move(pairs)).named("Phi");
      break;
    }
  }
  return model;
}

bool CheckReport::passed() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const Witness& w) { return w.holds; });
}

void CheckReport::add(std::string claim, std::string lhs, std::string rhs, bool holds) {
  witnesses.push_back({std::move(claim), std::move(lhs), std::move(rhs), holds});
}

std::optional<Gaussian> psi_limit(const MapExpr& psi, const Element& x, int max_steps) {
  const int n = x.rank();
  const TermKey unit_key{Word(n), Word(n)};
  struct Split {
    Gaussian scalar;
    Element rest;
    std::vector<TermKey> pattern;
  };
  auto split = [&](const Element& e) {
    Split s{Gaussian(0), Element(n), {}};
    for (const auto& [key, c] : e.terms()) {
      if (key == unit_key) {
        s.scalar = c;
      } else {
        s.rest.add_term(key, c);
        s.pattern.push_back(key);
      }
    }
    return s;
  };

  std::vector<Split> history;
  Element current = x;
  for (int step = 0; step <= max_steps; ++step) {
    Split s = split(current);
    if (s.rest.empty()) return s.scalar;
    for (const Split& earlier : history) {
      if (earlier.pattern != s.pattern || earlier.scalar != s.scalar) continue;
      // The non-scalar part came back to the same words: it is a fixed
      // multiple r of an earlier iterate and vanishes in the limit iff |r| < 1.
      const Gaussian r = s.rest.terms().begin()->second / earlier.rest.terms().begin()->second;
      if (s.rest == earlier.rest * r && r.norm_squared() < Rational(1)) return s.scalar;
      return std::nullopt;
    }
    history.push_back(std::move(s));
    current = apply(psi, current);
  }
  return std::nullopt;
}

Element prop10_case_formula(const Word& alpha, const Word& beta) {
  const int n = alpha.rank();
  const Word w1(n, {1});
  auto letter = [n](int i) { return Word(n, {i}); };
  Element out(n);

  if ((!alpha.empty() && alpha.front() != 1) || (!beta.empty() && beta.front() != 1)) return out;
  if (alpha.empty() && beta.empty()) {
    // Phi_n(Ad S_1^*(1)) = Phi_n(1) = sum_i S_i S_i^*.
    for (int i = 1; i <= n; ++i) out.add_term({letter(i), letter(i)}, Gaussian(1));
    return out;
  }
  if (!alpha.empty() && !beta.empty()) {
    // S_a S_b^* + sum_{i>=2} S_i S_a' S_b'^* S_i^*
    const Word a_tail = alpha.drop_front(1);
    const Word b_tail = beta.drop_front(1);
    out.add_term({alpha, beta}, Gaussian(1));
    for (int i = 2; i <= n; ++i) {
      out.add_term({letter(i).concat(a_tail), letter(i).concat(b_tail)}, Gaussian(1));
    }
    return out;
  }
  if (beta.empty()) {
    // S_a S_1 S_1^* + sum_{i>=2} S_i S_a' S_1 S_i^*
    const Word a_tail = alpha.drop_front(1);
    out.add_term({alpha.concat(w1), w1}, Gaussian(1));
    for (int i = 2; i <= n; ++i) {
      out.add_term({letter(i).concat(a_tail).concat(w1), letter(i)}, Gaussian(1));
    }
    return out;
  }
  // S_1 S_1^* S_b^* + sum_{i>=2} S_i S_1^* S_b'^* S_i^*
  const Word b_tail = beta.drop_front(1);
  out.add_term({w1, beta.concat(w1)}, Gaussian(1));
  for (int i = 2; i <= n; ++i) {
    out.add_term({letter(i), letter(i).concat(b_tail).concat(w1)}, Gaussian(1));
  }
  return out;
}

std::vector<Matrix> lemma5_instances(int n) {
  std::vector<Matrix> out{Matrix::identity(n)};

  Matrix swap = Matrix::identity(n);
  swap(0, 0) = swap(1, 1) = Gaussian(0);
  swap(0, 1) = swap(1, 0) = Gaussian(1);
  out.push_back(swap);

  Matrix rotation = Matrix::identity(n);
  rotation(0, 0) = rotation(1, 1) = Gaussian(Rational(3) / Rational(5));
  rotation(0, 1) = Gaussian(Rational(4) / Rational(5));
  rotation(1, 0) = Gaussian(Rational(-4) / Rational(5));
  out.push_back(rotation);

  Matrix hadamard = Matrix::identity(n);
  const Gaussian plus(Rational(1) / Rational(2), Rational(1) / Rational(2));
  const Gaussian minus = plus.conj();
  hadamard(0, 0) = hadamard(1, 1) = plus;
  hadamard(0, 1) = hadamard(1, 0) = minus;
  out.push_back(hadamard);
  return out;
}

CheckReport check_relations(int n) {
  CheckReport r{"relations", {n, 0, 0}, {}, {}};
  Element range_sum(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Element expected = i == j ? unit(n) : Element::zero(n);
      add_equals(r,
                 "S_" + std::to_string(i) + "^* S_" + std::to_string(j) + " = " +
                     (i == j ? "1" : "0"),
                 gen_adj(n, i) * gen(n, j), expected);
    }
    range_sum += gen(n, i) * gen_adj(n, i);
  }
  add_equals(r, "sum_i S_i S_i^* = 1", range_sum, unit(n));
  return r;
}

CheckReport check_state_limit(const Model& model, int level) {
  const int n = model.n;
  CheckReport r{"state_limit", {n, level, 0}, {}, {}};
  const auto keys = basis_keys(n, level);
  const int max_steps = 4 * (level + 2);
  for (const auto& key : keys) {
    Element w = Element::monomial(key);
    Gaussian closed = phi(w);
    auto limit = psi_limit(model.left_inverse, w, max_steps);
    if (!limit || *limit != closed) {
      r.add("phi(w) = lim_m Psi^m(w) [w = " + key.to_string() + "]", closed.to_string(),
            limit ? limit->to_string() : "no scalar limit", false);
      return r;
    }
  }
  r.add("phi(w) = lim_m Psi^m(w) on " + std::to_string(keys.size()) + " basis words" +
            level_suffix(level),
        "delta_{mu nu} n^{-|mu|}", "stabilized Psi iterates", true);
  return r;
}

CheckReport check_trace_like(int n, int level) {
  CheckReport r{"trace_like", {n, level, 0}, {}, {}};
  std::size_t checked = 0;
  for (const auto& a_key : basis_keys(n, level)) {
    Element a = Element::monomial(a_key);
    for (int k = 0; k <= level; ++k) {
      for (const Word& mu : words_of_length(n, k)) {
        for (const Word& nu : words_of_length(n, k)) {
          Element b = Element::monomial(mu, nu);
          Gaussian ab = phi(a * b);
          Gaussian ba = phi(b * a);
          ++checked;
          if (ab != ba) {
            r.add("phi(ab) = phi(ba) [a = " + a_key.to_string() + ", b = " +
                      TermKey{mu, nu}.to_string() + "]",
                  ab.to_string(), ba.to_string(), false);
            return r;
          }
        }
      }
    }
  }
  r.add("phi(ab) = phi(ba) for basis a and balanced b on " + std::to_string(checked) + " pairs" +
            level_suffix(level),
        "phi(ab)", "phi(ba)", true);
  return r;
}

CheckReport check_prop6(const Model& model, int level) {
  const int n = model.n;
  CheckReport r{"prop6", {n, level, 0}, {}, {}};
  const std::size_t words = basis_count(n, level);
  add_mismatches(r, "(i) phi(Phi_n(w)) = phi(w)", "phi(Phi_n(w))", "phi(w)",
                 preserves_phi(model.canonical, level), words);
  add_mismatches(r, "(ii) <Phi_n(x), y> = <x, Psi_n(y)>", "<Phi_n(x), y>", "<x, Psi_n(y)>",
                 verify_adjoint(model.canonical, model.left_inverse, level), words * words);
  return r;
}

CheckReport check_left_inverse(const Model& model, int level) {
  const int n = model.n;
  CheckReport r{"left_inverse", {n, level, 0}, {}, {}};
  MapExpr both = MapExpr::compose(model.left_inverse, model.canonical);
  sweep(r, "Psi_n(Phi_n(w)) = w", "Psi_n(Phi_n(w))", "w", n, level,
        [&](const Element& w) { return apply(both, w); }, [](const Element& w) { return w; });
  return r;
}

CheckReport check_prop8(const Model& model, int level) {
  const int n = model.n;
  const MapExpr& phi_n = model.canonical;
  const MapExpr& psi_n = model.left_inverse;
  CheckReport r{"prop8", {n, level, 0}, {}, {}};

  std::vector<Element> zs;
  for (int i = 1; i <= n; ++i) {
    const std::string si = std::to_string(i);
    Element p = proj(n, i);
    zs.push_back(p);
    r.add("(i) S_" + si + "S_" + si + "^* lies in the commutant of Phi_n's range" +
              level_suffix(level),
          p.to_string(), "commutes with Phi_n(w) for every basis w",
          commutes_with_range(p, phi_n, level));
    auto scalar = as_scalar(p);
    r.add("(i) S_" + si + "S_" + si + "^* is not a scalar, so Phi_n is not irreducible",
          p.to_string(), "lambda*1 for lambda = " + lambda_text(scalar), !scalar.has_value());

    MapExpr component = MapExpr::ad(gen(n, i));
    r.add("(ii) Ad S_" + si + " = S_" + si + "S_" + si + "^* Phi_n with the projection in the commutant" +
              level_suffix(level),
          "Ad S_" + si + "(w)", "S_" + si + "S_" + si + "^* Phi_n(w)",
          check_component_factorization(component, phi_n, p, level));
    auto lambda = find_scalar_ratio(component, phi_n, level);
    r.add("(ii) no scalar lambda with Ad S_" + si + " = lambda Phi_n" + level_suffix(level),
          "lambda", lambda_text(lambda), !lambda.has_value());
  }
  r.add("(ii) {S_i S_i^*} is a commutant partition of unity for Phi_n (sum 1, commuting, positive)",
        "{S_i S_i^*}", "partition of 1 in Phi_n(O_n)'", check_commutant_partition(zs, phi_n, level));
  r.notes.push_back(
      "operational extremality of Phi_n is witness-verified only: the factorizations "
      "Ad S_i = S_iS_i^* Phi_n are checked, not every decomposition");

  // Ad S_i^* and Psi_n disagree on S_jS_j^*, j != i.
  const Element inv_n = Element::scalar(n, Gaussian(one_over(n)));
  add_equals(r, "(iii) S_1^* S_2S_2^* S_1 = 0", gen_adj(n, 1) * proj(n, 2) * gen(n, 1),
             Element::zero(n));
  add_equals(r, "(iii) Psi_n(S_2S_2^*) = (1/n) 1", apply(psi_n, proj(n, 2)), inv_n);

  const Element p1 = proj(n, 1);
  const Element lhs = apply(psi_n, p1 * p1);
  const Element psi_p1 = apply(psi_n, p1);
  const Element rhs = psi_p1 * psi_p1;
  const Element inv_n2 = Element::scalar(n, Gaussian(one_over(n * n)));
  add_equals(r, "(iii) Psi_n(p_1^2) = (1/n) 1", lhs, inv_n);
  add_equals(r, "(iii) Psi_n(p_1)^2 = (1/n^2) 1", rhs, inv_n2);
  r.add("(iii) Psi_n(p_1^2) != Psi_n(p_1)^2, so Psi_n is not a Jordan homomorphism", lhs.to_string(),
        rhs.to_string(), !equals(lhs, rhs));
  return r;
}

CheckReport check_prop9(int n, int i, int level) {
  if (i < 1 || i > n) throw DomainError("generator index outside 1..n");
  CheckReport r{"prop9", {n, level, 0}, {}, {}};
  const std::string si = std::to_string(i);
  r.notes.push_back("generator i = " + si);
  const Element s = gen(n, i);
  const Element s_adj = gen_adj(n, i);
  const MapExpr f = MapExpr::ad(s_adj);

  r.add("(i) Ad S_" + si + "^* is unital", "Ad S_" + si + "^*(1)", "1", is_unital(f));
  const Element a = s + s_adj;
  r.add("(i) S + S^* is self-adjoint", a.to_string(), a.adjoint().to_string(),
        equals(a, a.adjoint()));

  const Element s2 = s * s;
  const Element s_adj2 = s_adj * s_adj;
  const Element image_of_square = apply(f, a * a);
  add_equals(r, "(i) Phi((S+S^*)^2) = S^2 + 2 1 + S^*^2", image_of_square,
             s2 + Element::scalar(n, Gaussian(2)) + s_adj2);
  const Element fa = apply(f, a);
  const Element square_of_image = fa * fa;
  add_equals(r, "(i) Phi(S+S^*)^2 = S^2 + S^*^2 + SS^* + 1", square_of_image,
             s2 + s_adj2 + s * s_adj + unit(n));
  const Element diff = image_of_square - square_of_image;
  add_equals(r, "(i) difference = 1 - SS^*", diff, unit(n) - s * s_adj);
  r.add("(i) difference is nonzero, so Ad S^* is not a Jordan homomorphism", diff.to_string(), "0",
        !is_zero(diff));

  r.add("Ad S_" + si + "^* is a size-1 operational combination: S_" + si + "^* (S_" + si +
            "^*)^* = 1",
        "{S_" + si + "^*}", "operational partition", is_operational_partition({s_adj}));
  r.add("(ii) the trivial decomposition has the scalar factor z = 1" + level_suffix(level),
        "Ad S_" + si + "^*(w)", "1 * Ad S_" + si + "^*(w)",
        check_component_factorization(f, f, unit(n), level));
  return r;
}

CheckReport check_prop10(const Model& model, int level, std::uint64_t seed) {
  const int n = model.n;
  CheckReport r{"prop10", {n, level, seed}, {}, {}};
  const MapExpr ad_s1 = MapExpr::ad(gen(n, 1));
  const MapExpr ad_s1_adj = MapExpr::ad(gen_adj(n, 1));
  const MapExpr f = MapExpr::compose(model.canonical, ad_s1_adj);

  sweep(r, "(i) Phi^2 = Phi", "Phi(Phi(w))", "Phi(w)", n, level,
        [&](const Element& w) { return apply(f, apply(f, w)); },
        [&](const Element& w) { return apply(f, w); });
  sweep(r, "(i) Phi o Ad S_1 = Phi_n", "Phi(S_1 w S_1^*)", "Phi_n(w)", n, level,
        [&](const Element& w) { return apply(f, apply(ad_s1, w)); },
        [&](const Element& w) { return apply(model.canonical, w); });

  std::size_t cases = 0;
  bool formula_ok = true;
  for (const Word& alpha : words_up_to(n, level)) {
    for (const Word& beta : words_up_to(n, level)) {
      ++cases;
      Element direct = apply(f, Element::monomial(alpha, beta));
      Element formula = prop10_case_formula(alpha, beta);
      if (!equals(direct, formula)) {
        r.add("(ii) case formula for Phi(S_a S_b^*) [a = " + alpha.to_string() +
                  ", b = " + beta.to_string() + "]",
              direct.to_string(), formula.to_string(), false);
        formula_ok = false;
        break;
      }
    }
    if (!formula_ok) break;
  }
  if (formula_ok) {
    r.add("(ii) case formula for Phi(S_a S_b^*) on " + std::to_string(cases) + " word pairs" +
              level_suffix(level),
          "Phi(S_a S_b^*)", "branch formula", true);
  }

  Sampler sampler(seed);
  constexpr int kSamples = 20;
  int ks_ok = 0;
  std::string first_bad;
  for (int s = 0; s < kSamples; ++s) {
    Element x = sampler.balanced(n, 2, 3);
    if (kadison_schwartz_check(f, x, 2)) {
      ++ks_ok;
    } else if (first_bad.empty()) {
      first_bad = x.to_string();
    }
  }
  r.add("(ii) Kadison-Schwartz: Phi(x^*x) - Phi(x)^*Phi(x) >= 0 on " + std::to_string(kSamples) +
            " random balanced x of length <= 2",
        first_bad.empty() ? "Phi(x^*x) - Phi(x)^*Phi(x)" : first_bad,
        std::to_string(ks_ok) + "/" + std::to_string(kSamples) + " positive", ks_ok == kSamples);

  std::vector<Element> partition;
  std::vector<MapExpr> inner_maps;
  for (int i = 1; i <= n; ++i) {
    const std::string si = std::to_string(i);
    const Element p = proj(n, i);
    partition.push_back(gen(n, i));
    inner_maps.push_back(ad_s1_adj);
    const MapExpr component = MapExpr::compose(MapExpr::ad(gen(n, i)), ad_s1_adj);
    auto lambda = find_scalar_ratio(component, f, level);
    r.add("(iii) no scalar lambda with Ad S_" + si + " o Ad S_1^* = lambda Phi" + level_suffix(level),
          "lambda", lambda_text(lambda), !lambda.has_value());
    auto scalar = as_scalar(p);
    r.add("(iii) S_" + si + "S_" + si + "^* is not a scalar", p.to_string(),
          "lambda*1 for lambda = " + lambda_text(scalar), !scalar.has_value());
    r.add("(iii) Ad S_" + si + " o Ad S_1^* = S_" + si + "S_" + si + "^* Phi" + level_suffix(level),
          "S_" + si + " S_1^* w S_1 S_" + si + "^*", "S_" + si + "S_" + si + "^* Phi(w)",
          check_component_factorization(component, f, p, level));
  }
  const MapExpr combination = operational_convex(OperationalPartition(partition), inner_maps);
  r.add("(iii) Phi = sum_i Ad S_i o Ad S_1^* over the partition {S_i}" + level_suffix(level),
        combination.to_string(), "Phi_n o Ad S_1^*", maps_agree(combination, f, level));
  return r;
}

CheckReport check_lemma5(const Matrix& u, int level) {
  const int n = u.dim();
  CheckReport r{"lemma5", {n, level, 0}, {}, {}};
  const MapExpr theta = quasi_free(u);
  const MapExpr theta_inv = quasi_free(u.adjoint());
  std::string u_text = u.to_string();
  std::replace(u_text.begin(), u_text.end(), '\n', ';');
  r.notes.push_back("u = " + u_text);

  const std::size_t words = basis_count(n, level);
  add_mismatches(r, "phi(Theta(w)) = phi(w)", "phi(Theta(w))", "phi(w)",
                 preserves_phi(theta, level), words);
  add_mismatches(r, "<Theta(x), y> = <x, Theta^{-1}(y)>", "<Theta(x), y>", "<x, Theta^{-1}(y)>",
                 verify_adjoint(theta, theta_inv, level), words * words);
  const MapExpr back = MapExpr::compose(theta_inv, theta);
  sweep(r, "Theta^{-1}(Theta(w)) = w", "Theta^{-1}(Theta(w))", "w", n, level,
        [&](const Element& w) { return apply(back, w); }, [](const Element& w) { return w; });
  const MapExpr forth = MapExpr::compose(theta, theta_inv);
  sweep(r, "Theta(Theta^{-1}(w)) = w", "Theta(Theta^{-1}(w))", "w", n, level,
        [&](const Element& w) { return apply(forth, w); }, [](const Element& w) { return w; });
  return r;
}

CheckReport check_extremal_remark(const Model& model, int level) {
  const int n = model.n;
  CheckReport r{"extremal_remark", {n, level, 0}, {}, {}};
  const std::vector<Rational> lambdas{Rational(BigInt(1), BigInt(3)),
                                      Rational(BigInt(1), BigInt(2)), Rational(1)};
  for (const Rational& lambda : lambdas) {
    std::vector<std::pair<Rational, Element>> phi_pairs;
    for (int i = 1; i <= n; ++i) phi_pairs.emplace_back(lambda, gen(n, i));
    auto found = find_scalar_ratio(MapExpr::kraus(std::move(phi_pairs)), model.canonical, level);
    bool in_range = found && found->is_real() && found->re().sign() >= 0 &&
                    found->re() <= Rational(1);
    r.add("lambda Phi_n is recognized as lambda times Phi_n with 0 <= lambda <= 1" +
              level_suffix(level),
          lambda.to_string(), lambda_text(found), in_range && *found == Gaussian(lambda));

    auto found_ad = find_scalar_ratio(MapExpr::kraus({{lambda, gen_adj(n, 1)}}),
                                      MapExpr::ad(gen_adj(n, 1)), level);
    r.add("lambda Ad S_1^* is recognized as lambda times Ad S_1^*" + level_suffix(level),
          lambda.to_string(), lambda_text(found_ad), found_ad && *found_ad == Gaussian(lambda));
  }
  return r;
}

CheckReport check_properties(const Model& model, int level, std::uint64_t seed) {
  const int n = model.n;
  CheckReport r{"properties", {n, level, seed}, {}, {}};
  Sampler sampler(seed);
  constexpr int kSamples = 10;
  const int len = std::max(1, std::min(level, 2));

  auto tally = [&](const std::string& claim, auto&& trial) {
    int ok = 0;
    std::string first_bad;
    for (int s = 0; s < kSamples; ++s) {
      auto [holds, sample] = trial();
      if (holds) {
        ++ok;
      } else if (first_bad.empty()) {
        first_bad = sample;
      }
    }
    r.add(claim + " on " + std::to_string(kSamples) + " seeded samples",
          first_bad.empty() ? "all samples" : first_bad,
          std::to_string(ok) + "/" + std::to_string(kSamples), ok == kSamples);
  };

  tally("ring: (xy)z = x(yz), x(y+z) = xy + xz", [&] {
    Element x = sampler.element(n, len, 3);
    Element y = sampler.element(n, len, 3);
    Element z = sampler.element(n, len, 3);
    bool ok = equals((x * y) * z, x * (y * z)) && equals(x * (y + z), x * y + x * z);
    return std::pair{ok, x.to_string()};
  });
  tally("*-algebra: (xy)^* = y^*x^*, x^** = x", [&] {
    Element x = sampler.element(n, len, 3);
    Element y = sampler.element(n, len, 3);
    bool ok = equals((x * y).adjoint(), y.adjoint() * x.adjoint()) && x.adjoint().adjoint() == x;
    return std::pair{ok, x.to_string()};
  });
  tally("equals is compatible with products: x = canonical_reduce(x) implies xz = reduce(x)z", [&] {
    Element x = sampler.element(n, len, 3);
    Element z = sampler.element(n, len, 2);
    Element rx = canonical_reduce(x);
    Element lx = level_by_weight(x);
    bool ok = equals(x, rx) && equals(x * z, rx * z) && equals(z * x, z * lx);
    return std::pair{ok, x.to_string()};
  });
  tally("Phi_n(xy) = Phi_n(x)Phi_n(y), Phi_n(x^*) = Phi_n(x)^*", [&] {
    Element x = sampler.element(n, len, 3);
    Element y = sampler.element(n, len, 3);
    const MapExpr& f = model.canonical;
    bool ok = equals(apply(f, x * y), apply(f, x) * apply(f, y)) &&
              equals(apply(f, x.adjoint()), apply(f, x).adjoint());
    return std::pair{ok, x.to_string()};
  });
  tally("Phi_n is a Jordan homomorphism: Phi_n(a^2) = Phi_n(a)^2 for a = a^*", [&] {
    Element x = sampler.element(n, len, 2);
    Element a = x + x.adjoint();
    Element fa = apply(model.canonical, a);
    return std::pair{equals(apply(model.canonical, a * a), fa * fa), a.to_string()};
  });
  const auto unitaries = lemma5_instances(n);
  tally("quasi-free maps are unital and multiplicative", [&] {
    const Matrix& u = unitaries[static_cast<std::size_t>(sampler.uniform(0, static_cast<int>(unitaries.size()) - 1))];
    MapExpr theta = quasi_free(u);
    Element x = sampler.element(n, len, 2);
    Element y = sampler.element(n, len, 2);
    bool ok = is_unital(theta) && equals(apply(theta, x * y), apply(theta, x) * apply(theta, y));
    return std::pair{ok, x.to_string()};
  });
  tally("Cauchy-Schwarz: |<x,y>|^2 <= <x,x><y,y>", [&] {
    Element x = sampler.element(n, len, 3);
    Element y = sampler.element(n, len, 3);
    Gaussian xy = inner(x, y);
    Gaussian xx = inner(x, x);
    Gaussian yy = inner(y, y);
    bool ok = xx.is_real() && yy.is_real() && xx.re().sign() >= 0 &&
              xy.norm_squared() <= (xx * yy).re();
    return std::pair{ok, x.to_string()};
  });
  tally("Kadison-Schwartz for Phi_n and Psi_n on balanced x", [&] {
    Element x = sampler.balanced(n, len, 3);
    bool ok = kadison_schwartz_check(model.canonical, x, len) &&
              kadison_schwartz_check(model.left_inverse, x, len);
    return std::pair{ok, x.to_string()};
  });
  return r;
}

CheckReport check_matrix_bridge(int n, std::uint64_t seed) {
  CheckReport r{"matrix_bridge", {n, 2, seed}, {}, {}};
  Sampler sampler(seed);
  constexpr int kSamples = 50;
  constexpr int k = 2;
  int mult_ok = 0;
  int trace_ok = 0;
  int star_ok = 0;
  int gram_ok = 0;
  for (int s = 0; s < kSamples; ++s) {
    Element x = sampler.balanced(n, k, 3);
    Element y = sampler.balanced(n, k, 3);
    Matrix ex = embed_balanced(x, k);
    mult_ok += embed_balanced(x * y, k) == ex * embed_balanced(y, k);
    trace_ok += trace_cross_check(x, k);
    star_ok += embed_balanced(x.adjoint(), k) == ex.adjoint();
    gram_ok += is_psd(HermitianMatrix(embed_balanced(x.adjoint() * x, k)));
  }
  auto add = [&](const std::string& claim, int ok) {
    r.add(claim + " on " + std::to_string(kSamples) + " random balanced elements of length <= 2",
          claim, std::to_string(ok) + "/" + std::to_string(kSamples), ok == kSamples);
  };
  add("embed(xy) = embed(x) embed(y)", mult_ok);
  add("phi(x) = Tr(embed(x)) / n^k", trace_ok);
  add("embed(x^*) = embed(x)^*", star_ok);
  add("embed(x^*x) is positive semidefinite", gram_ok);
  r.add("embed(1) is the identity", "embed(1)", "I",
        embed_balanced(Element::unit(n), k) == Matrix::identity(n * n));
  return r;
}

std::vector<CheckReport> run_all(const Model& model, int level, std::uint64_t seed) {
  const int n = model.n;
  std::vector<CheckReport> out;
  out.push_back(check_relations(n));
  out.push_back(check_state_limit(model, level));
  out.push_back(check_trace_like(n, level));
  out.push_back(check_prop6(model, level));
  out.push_back(check_left_inverse(model, level));
  out.push_back(check_prop8(model, level));
  for (int i = 1; i <= n; ++i) out.push_back(check_prop9(n, i, level));
  out.push_back(check_prop10(model, level, seed));
  for (const Matrix& u : lemma5_instances(n)) out.push_back(check_lemma5(u, level));
  out.push_back(check_extremal_remark(model, level));
  out.push_back(check_properties(model, level, seed));
  out.push_back(check_matrix_bridge(n, seed));
  for (auto& report : out) report.params.seed = seed;
  return out;
}

std::string summary_table(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  int width = 5;
  for (const auto& r : reports) width = std::max(width, static_cast<int>(r.name.size()));
  os << std::left << std::setw(width + 2) << "check" << std::setw(4) << "n" << std::setw(7)
     << "level" << std::setw(9) << "claims"
     << "verdict\n";
  std::size_t failed = 0;
  for (const auto& r : reports) {
    auto holds = std::count_if(r.witnesses.begin(), r.witnesses.end(),
                               [](const Witness& w) { return w.holds; });
    std::string claims = std::to_string(holds) + "/" + std::to_string(r.witnesses.size());
    os << std::setw(width + 2) << r.name << std::setw(4) << r.params.n << std::setw(7)
       << r.params.level << std::setw(9) << claims << (r.passed() ? "pass" : "FAIL") << "\n";
    if (!r.passed()) ++failed;
  }
  if (failed == 0) {
    os << "all " << reports.size() << " checks pass\n";
  } else {
    os << failed << " of " << reports.size() << " checks fail\n";
  }
  return os.str();
}

}  // namespace cuntz
