#include "cuntz/algebra.hpp"

#include <algorithm>

#include "cuntz/errors.hpp"

namespace cuntz {

namespace {

void check_rank(int a, int b) {
  if (a != b) throw RankMismatch(a, b);
}

// Product of two monomials: (S_mu S_nu^*)(S_a S_b^*).
std::optional<TermKey> multiply_keys(const TermKey& x, const TermKey& y) {
  if (y.left.starts_with(x.right)) {
    return TermKey{x.left.concat(y.left.drop_front(x.right.size())), y.right};
  }
  if (x.right.starts_with(y.left)) {
    return TermKey{x.left, y.right.concat(x.right.drop_front(y.left.size()))};
  }
  return std::nullopt;
}

void add_leveled(Element& out, const TermKey& key, const Gaussian& c, int level) {
  int extra = level - static_cast<int>(key.right.size());
  if (extra < 0) {
    throw DomainError("level " + std::to_string(level) + " is below right-length " +
                      std::to_string(key.right.size()));
  }
  if (extra == 0) {
    out.add_term(key, c);
    return;
  }
  for (const Word& g : words_of_length(out.rank(), extra)) {
    out.add_term({key.left.concat(g), key.right.concat(g)}, c);
  }
}

Element level_group(const Element& group) {
  int level = 0;
  for (const auto& [key, c] : group.terms()) {
    level = std::max(level, static_cast<int>(key.right.size()));
  }
  return level_normalize(group, level);
}

}  // namespace

Word::Word(int rank, std::vector<int> letters) : rank_(rank), letters_(std::move(letters)) {
  if (rank_ < 2) throw DomainError("rank must be at least 2, got " + std::to_string(rank_));
  for (int l : letters_) {
    if (l < 1 || l > rank_) {
      throw DomainError("letter " + std::to_string(l) + " outside 1.." + std::to_string(rank_));
    }
  }
}

Word Word::concat(const Word& tail) const {
  check_rank(rank_, tail.rank_);
  std::vector<int> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(rank_, std::move(out));
}

bool Word::starts_with(const Word& prefix) const {
  return prefix.size() <= size() &&
         std::equal(prefix.letters_.begin(), prefix.letters_.end(), letters_.begin());
}

Word Word::drop_front(std::size_t count) const {
  count = std::min(count, size());
  return Word(rank_, std::vector<int>(letters_.begin() + static_cast<std::ptrdiff_t>(count),
                                      letters_.end()));
}

Word Word::drop_back(std::size_t count) const {
  count = std::min(count, size());
  return Word(rank_, std::vector<int>(letters_.begin(),
                                      letters_.end() - static_cast<std::ptrdiff_t>(count)));
}

std::string Word::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(letters_[k]);
  }
  return out + "]";
}

Word subword(const Word& beta, int i, int j) {
  if (i < 1 || j < i || j > static_cast<int>(beta.size())) {
    throw DomainError("subword(" + std::to_string(i) + ", " + std::to_string(j) +
                      ") out of range for a word of length " + std::to_string(beta.size()));
  }
  const auto& l = beta.letters();
  return Word(beta.rank(), std::vector<int>(l.begin() + (i - 1), l.begin() + j));
}

std::vector<Word> words_of_length(int rank, int k) {
  std::vector<Word> out{Word(rank)};
  for (int step = 0; step < k; ++step) {
    std::vector<Word> next;
    next.reserve(out.size() * static_cast<std::size_t>(rank));
    for (const Word& w : out) {
      for (int letter = 1; letter <= rank; ++letter) {
        next.push_back(w.concat(Word(rank, {letter})));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Word> words_up_to(int rank, int max_length) {
  std::vector<Word> out;
  for (int k = 0; k <= max_length; ++k) {
    auto layer = words_of_length(rank, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string TermKey::to_string() const {
  if (left.empty() && right.empty()) return "1";
  std::string out;
  if (!left.empty()) out += "S" + left.to_string();
  if (!right.empty()) out += "S" + right.to_string() + "'";
  return out;
}

bool TermKeyLess::operator()(const TermKey& a, const TermKey& b) const {
  if (int wa = a.weight(), wb = b.weight(); wa != wb) return wa < wb;
  if (auto c = a.left <=> b.left; c != 0) return c < 0;
  return a.right < b.right;
}

Element::Element(int rank) : rank_(rank) {
  if (rank_ < 2) throw DomainError("rank must be at least 2, got " + std::to_string(rank_));
}

Element Element::scalar(int rank, const Gaussian& c) {
  Element e(rank);
  e.add_term({Word(rank), Word(rank)}, c);
  return e;
}

Element Element::monomial(const Word& left, const Word& right, const Gaussian& c) {
  check_rank(left.rank(), right.rank());
  Element e(left.rank());
  e.add_term({left, right}, c);
  return e;
}

Element Element::generator(int rank, int i) { return isometry(Word(rank, {i})); }

Element Element::isometry(const Word& mu) { return monomial(mu, Word(mu.rank())); }

Element Element::projection(const Word& mu) { return monomial(mu, mu); }

void Element::add_term(const TermKey& key, const Gaussian& c) {
  check_rank(rank_, key.left.rank());
  check_rank(rank_, key.right.rank());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::adjoint() const {
  Element out(rank_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(TermKey{key.right, key.left}, c.conj());
  return out;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

Element& Element::operator+=(const Element& o) {
  check_rank(rank_, o.rank_);
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_rank(rank_, o.rank_);
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

Element& Element::operator*=(const Gaussian& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  check_rank(a.rank_, b.rank_);
  Element out(a.rank_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if (auto key = multiply_keys(ka, kb)) out.add_term(*key, ca * cb);
    }
  }
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    if (c == Gaussian(1)) {
      out += key.to_string();
    } else {
      out += "(" + c.to_string() + ")*" + key.to_string();
    }
  }
  return out;
}

Element level_normalize(const Element& x, int level) {
  Element out(x.rank());
  for (const auto& [key, c] : x.terms()) add_leveled(out, key, c, level);
  return out;
}

Element level_by_weight(const Element& x) {
  Element out(x.rank());
  for (const auto& [weight, group] : weight_split(x)) out += level_group(group);
  return out;
}

Element canonical_reduce(const Element& x) {
  const int n = x.rank();
  Element out(n);
  for (const auto& [weight, group] : weight_split(x)) {
    // After leveling every term of the group sits on one right-length, so
    // sibling families can only form among the current frontier.
    Element frontier = level_group(group);
    while (!frontier.empty()) {
      std::map<TermKey, std::vector<std::pair<int, Gaussian>>, TermKeyLess> families;
      Element next(n);
      for (const auto& [key, c] : frontier.terms()) {
        if (key.left.empty() || key.right.empty() || key.left.back() != key.right.back()) {
          out.add_term(key, c);
          continue;
        }
        families[TermKey{key.left.drop_back(1), key.right.drop_back(1)}].emplace_back(
            key.left.back(), c);
      }
      for (const auto& [parent, members] : families) {
        bool complete = static_cast<int>(members.size()) == n &&
                        std::all_of(members.begin(), members.end(),
                                    [&](const auto& m) { return m.second == members.front().second; });
        if (complete) {
          next.add_term(parent, members.front().second);
        } else {
          for (const auto& [letter, c] : members) {
            out.add_term({parent.left.concat(Word(n, {letter})),
                          parent.right.concat(Word(n, {letter}))},
                         c);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return out;
}

bool equals(const Element& x, const Element& y) {
  check_rank(x.rank(), y.rank());
  Element diff = x - y;
  if (diff.empty()) return true;
  return level_by_weight(diff).empty();
}

std::map<int, Element> weight_split(const Element& x) {
  std::map<int, Element> parts;
  for (const auto& [key, c] : x.terms()) {
    parts.try_emplace(key.weight(), x.rank()).first->second.add_term(key, c);
  }
  return parts;
}

std::optional<Gaussian> as_scalar(const Element& x) {
  Element leveled = level_by_weight(x);
  if (leveled.empty()) return Gaussian(0);
  const auto& [key, c] = *leveled.terms().begin();
  if (key.weight() != 0) return std::nullopt;
  // The candidate is the coefficient on the first diagonal unit S_g S_g^*.
  Gaussian candidate = key.left == key.right &&
                               std::all_of(key.left.letters().begin(), key.left.letters().end(),
                                           [](int l) { return l == 1; })
                           ? c
                           : Gaussian(0);
  if (equals(x, Element::scalar(x.rank(), candidate))) return candidate;
  return std::nullopt;
}

int max_word_length(const Element& x) {
  int out = 0;
  for (const auto& [key, c] : x.terms()) {
    out = std::max({out, static_cast<int>(key.left.size()), static_cast<int>(key.right.size())});
  }
  return out;
}

std::vector<TermKey> basis_keys(int rank, int level) {
  auto words = words_up_to(rank, level);
  std::vector<TermKey> keys;
  keys.reserve(words.size() * words.size());
  for (const Word& mu : words) {
    for (const Word& nu : words) keys.push_back({mu, nu});
  }
  std::sort(keys.begin(), keys.end(), TermKeyLess{});
  return keys;
}

}  // namespace cuntz
