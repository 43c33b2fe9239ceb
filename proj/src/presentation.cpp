#include "gtc/presentation.hpp"

#include <charconv>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "gtc/errors.hpp"

namespace gtc {

namespace {

long long parse_integer(std::string_view text, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(std::string("invalid ") + what + " in slope: '" + std::string(text) + "'");
  }
  return value;
}

} // namespace

Slope::Slope(long long m_, long long n_) : m(m_), n(n_) {
  if (n < 0) {
    throw HypothesisError("slope denominator must be non-negative");
  }
  if (m == LLONG_MIN) {
    throw HypothesisError("slope numerator out of range");
  }
  if (std::gcd(m < 0 ? -m : m, n) != 1) {
    throw HypothesisError("slope " + std::to_string(m) + "/" + std::to_string(n) +
                          " requires gcd(|m|, n) = 1");
  }
}

Slope Slope::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Slope(parse_integer(text, "numerator"), 1);
  }
  return Slope(parse_integer(text.substr(0, slash), "numerator"),
               parse_integer(text.substr(slash + 1), "denominator"));
}

std::string Slope::str() const {
  return std::to_string(m) + "/" + std::to_string(n);
}

Presentation::Presentation(std::vector<Generator> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  std::set<std::string> seen;
  for (const Generator& g : generators_) {
    if (g.name.empty()) {
      throw std::invalid_argument("generator name must not be empty");
    }
    if (!seen.insert(g.name).second) {
      throw std::invalid_argument("duplicate generator '" + g.name + "'");
    }
  }
  for (const Word& r : relators_) {
    if (r.empty()) {
      throw std::invalid_argument("empty relator not allowed");
    }
    if (!uses_known_generators(r)) {
      throw std::invalid_argument("relator '" + r.str() + "' uses a generator outside the alphabet");
    }
  }
}

std::optional<std::size_t> Presentation::generator_index(const Generator& g) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == g) {
      return i;
    }
  }
  return std::nullopt;
}

bool Presentation::uses_known_generators(const Word& w) const {
  for (const Letter& l : w.letters()) {
    if (!generator_index(l.gen)) {
      return false;
    }
  }
  return true;
}

Presentation whitehead_exterior() {
  Word lhs = Word::parse("abaBAbab");
  Word rhs = Word::parse("babABaba");
  return Presentation({Generator{"a"}, Generator{"b"}}, {lhs * rhs.inverse()});
}

Word longitude_word() {
  // The b-meridian, pushed off along the a-component: conjugate of the
  // inverse meridian times the meridian itself.
  return conjugate(Word::parse("B"), Word::parse("abAB")) * Word::parse("b");
}

Word longitude_word_b() {
  return substitute(longitude_word(),
                    {{Generator{"a"}, Word::parse("b")}, {Generator{"b"}, Word::parse("a")}});
}

Presentation whitehead_filled(const Slope& slope) {
  if (slope.n < 1) {
    throw HypothesisError("filling the a-component needs a slope m/n with n >= 1");
  }
  Presentation base = whitehead_exterior();
  Word filling = longitude_word().pow(slope.n) * Word::parse("a").pow(slope.m);
  std::vector<Word> relators = base.relators();
  relators.push_back(std::move(filling));
  return Presentation(base.generators(), std::move(relators));
}

Presentation double_filled(const Slope& first, const Slope& second) {
  Presentation base = whitehead_filled(first);
  Word filling = longitude_word_b().pow(second.n) * Word::parse("b").pow(second.m);
  std::vector<Word> relators = base.relators();
  relators.push_back(std::move(filling));
  return Presentation(base.generators(), std::move(relators));
}

Presentation pretzel(long long n) {
  if (n == 0) {
    throw HypothesisError("the pretzel link with 0 half-twists in the last band splits as a "
                          "connected sum; no one-relator presentation is built for it");
  }
  Word a = Word::parse("a");
  Word b = Word::parse("b");
  Word bbar = Word::parse("B");
  Word u = a * bbar.pow(n - 1) * a;
  Word lhs = u * bbar * a * b;
  Word rhs = b * a * bbar * u;
  return Presentation({Generator{"a"}, Generator{"b"}}, {lhs * rhs.inverse()});
}

} // namespace gtc
