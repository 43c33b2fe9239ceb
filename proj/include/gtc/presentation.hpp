#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtc/word.hpp"

namespace gtc {

// Surgery coefficient m/n with gcd(|m|, n) = 1. Ordinary slopes have n >= 1;
// n = 0 encodes the slope 1/0 (accepted only by the second filling, where it
// kills the meridian outright).
struct Slope {
  long long m = 0;
  long long n = 1;

  Slope(long long m, long long n);
  static Slope parse(std::string_view text); // "p/q", or "p" meaning p/1
  std::string str() const;

  auto operator<=>(const Slope&) const = default;
};

class Presentation {
public:
  Presentation(std::vector<Generator> generators, std::vector<Word> relators);

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  std::optional<std::size_t> generator_index(const Generator& g) const;
  bool uses_known_generators(const Word& w) const;

  auto operator<=>(const Presentation&) const = default;

private:
  std::vector<Generator> generators_;
  std::vector<Word> relators_;
};

// Wirtinger presentation of the Whitehead link exterior: meridians a, b and
// the single relator abaBAbab * (babABaba)^-1.
Presentation whitehead_exterior();

// Longitude of the a-component written in the meridians; null-homologous.
Word longitude_word();

// Longitude of the b-component. The two components are interchangeable, so
// this is longitude_word() with a and b swapped.
Word longitude_word_b();

// Exterior plus the filling relator (longitude)^n * a^m. Requires n >= 1.
Presentation whitehead_filled(const Slope& slope);

// Fill the a-component with `first`, then the b-component with `second`.
// `second` may be 1/0, in which case the extra relator is just b.
Presentation double_filled(const Slope& first, const Slope& second);

// One-relator presentation of the group of the pretzel link with three bands
// of -2, 3 and 2n half-twists. n = 0 is rejected (the link splits into a
// connected sum with a different presentation).
Presentation pretzel(long long n);

} // namespace gtc
