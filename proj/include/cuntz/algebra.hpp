#pragma once

// Words, terms and elements of the dense *-subalgebra of the Cuntz algebra
// O_n, spanned by the monomials S_mu S_nu^* over words mu, nu in {1..n}.
//
// Representations are not unique because 1 = sum_i S_i S_i^*. Equality is
// decided by bringing each weight group (|mu| - |nu| fixed) to a common
// right-length, where the monomials are linearly independent.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/scalar.hpp"

namespace cuntz {

// A multi-index mu = (mu_1, ..., mu_k) over {1..rank}. The empty word indexes
// the unit, S_() = 1.
class Word {
 public:
  explicit Word(int rank, std::vector<int> letters = {});
  Word(int rank, std::initializer_list<int> letters) : Word(rank, std::vector<int>(letters)) {}

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<int>& letters() const { return letters_; }
  int operator[](std::size_t k) const { return letters_[k]; }
  int front() const { return letters_.front(); }
  int back() const { return letters_.back(); }

  Word concat(const Word& tail) const;
  bool starts_with(const Word& prefix) const;
  // Drops the first `count` letters.
  Word drop_front(std::size_t count) const;
  Word drop_back(std::size_t count) const;

  // `[1,2]`; the empty word prints as `[]`.
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  int rank_;
  std::vector<int> letters_;
};

// The slice (beta_i, ..., beta_j), 1-based and inclusive.
Word subword(const Word& beta, int i, int j);

// All words of length exactly k, in lexicographic order.
std::vector<Word> words_of_length(int rank, int k);
// All words of length <= max_length, by length then lexicographically.
std::vector<Word> words_up_to(int rank, int max_length);

// The (mu, nu) index of a monomial S_mu S_nu^*.
struct TermKey {
  Word left;
  Word right;

  int weight() const { return static_cast<int>(left.size()) - static_cast<int>(right.size()); }
  // `S[1]S[2]'` or `1` for the unit monomial.
  std::string to_string() const;

  friend bool operator==(const TermKey&, const TermKey&) = default;
};

// Ordering by weight, then left word, then right word.
struct TermKeyLess {
  bool operator()(const TermKey& a, const TermKey& b) const;
};

class Element {
 public:
  using TermMap = std::map<TermKey, Gaussian, TermKeyLess>;

  explicit Element(int rank);

  static Element zero(int rank) { return Element(rank); }
  static Element unit(int rank) { return scalar(rank, Gaussian(1)); }
  static Element scalar(int rank, const Gaussian& c);
  // c * S_mu S_nu^*
  static Element monomial(const Word& left, const Word& right, const Gaussian& c = Gaussian(1));
  static Element monomial(const TermKey& key, const Gaussian& c = Gaussian(1)) {
    return monomial(key.left, key.right, c);
  }
  // S_i
  static Element generator(int rank, int i);
  // S_mu
  static Element isometry(const Word& mu);
  // S_mu S_mu^*
  static Element projection(const Word& mu);

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  // True only for the stored empty sum; use `equals` for the algebraic test.
  bool empty() const { return terms_.empty(); }

  // Adds c * S_mu S_nu^*, merging keys and dropping zero coefficients.
  void add_term(const TermKey& key, const Gaussian& c);

  Element adjoint() const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Gaussian& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Gaussian& c) { return a *= c; }
  friend Element operator*(const Gaussian& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);

  // Structural comparison of stored terms. Two different representations
  // of one algebra element compare unequal here; see `equals`.
  friend bool operator==(const Element& a, const Element& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  // Terms joined by ` + `, each `(c)*S[mu]S[nu]'` with the coefficient
  // omitted when it is 1. The zero element prints as `0`.
  std::string to_string() const;

 private:
  int rank_;
  TermMap terms_;
};

inline Element multiply(const Element& x, const Element& y) { return x * y; }
inline Element adjoint(const Element& x) { return x.adjoint(); }

// Rewrites every term to right-length `level` using
// S_mu S_nu^* = sum_{|g| = t} S_{mu g} S_{nu g}^*.
Element level_normalize(const Element& x, int level);

// Levels each weight group to the largest right-length it contains. In this
// form the coordinates of an element are unique.
Element level_by_weight(const Element& x);

// Display form: levels each weight group, then collapses complete sibling
// families {(mu i, nu i) : i = 1..n} with one shared coefficient, bottom up.
Element canonical_reduce(const Element& x);

bool equals(const Element& x, const Element& y);
inline bool is_zero(const Element& x) { return equals(x, Element::zero(x.rank())); }

std::map<int, Element> weight_split(const Element& x);

// The scalar c with x = c * 1, if there is one.
std::optional<Gaussian> as_scalar(const Element& x);

// Longest left or right word appearing in x.
int max_word_length(const Element& x);

// Every monomial S_mu S_nu^* with |mu|, |nu| <= level, in canonical order.
std::vector<TermKey> basis_keys(int rank, int level);

}  // namespace cuntz
