#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gtc {

struct Generator {
  std::string name;
  auto operator<=>(const Generator&) const = default;
};

// One signed letter g^{+1} or g^{-1}.
struct Letter {
  Generator gen;
  int sign = 1;
  auto operator<=>(const Letter&) const = default;
  Letter inverse() const { return Letter{gen, -sign}; }
};

// A freely reduced word over a named alphabet. The empty word is the group
// identity. Reduction happens on construction and is preserved by every
// operation, so two words are equal in the free group iff they compare equal.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> raw);

  // Text form: a lowercase letter names a generator, the matching uppercase
  // letter its inverse; whitespace is ignored, anything else rejected.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(long long exponent) const;

  // Inverse letters render uppercase; the empty word renders as "1".
  std::string str() const;

  auto operator<=>(const Word&) const = default;

private:
  std::vector<Letter> letters_;
};

// Concatenate, then freely reduce: the free-group product.
Word operator*(const Word& lhs, const Word& rhs);

Word reduce(std::vector<Letter> raw);
Word invert(const Word& w);

// x^{-1} g x
Word conjugate(const Word& g, const Word& x);

// g^{-1} h^{-1} g h
Word commutator(const Word& g, const Word& h);

// Homomorphic image of w under generator -> word assignments. Every
// generator appearing in w must have an image.
Word substitute(const Word& w, const std::map<Generator, Word>& images);

long long exponent_sum(const Word& w, const Generator& g);

} // namespace gtc
