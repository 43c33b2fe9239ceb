#include "gtc/word.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "gtc/errors.hpp"

namespace gtc {

namespace {

std::vector<Letter> free_reduce(std::vector<Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter& l : raw) {
    if (l.sign != 1 && l.sign != -1) {
      throw std::invalid_argument("letter sign must be +1 or -1");
    }
    if (l.gen.name.empty()) {
      throw std::invalid_argument("generator name must not be empty");
    }
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(std::move(l));
    }
  }
  return out;
}

} // namespace

Word::Word(std::vector<Letter> raw) : letters_(free_reduce(std::move(raw))) {}

Word Word::parse(std::string_view text) {
  std::vector<Letter> raw;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      raw.push_back(Letter{Generator{std::string(1, c)}, +1});
    } else if (c >= 'A' && c <= 'Z') {
      raw.push_back(Letter{Generator{std::string(1, static_cast<char>(c - 'A' + 'a'))}, -1});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in word text");
    }
  }
  return Word(std::move(raw));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  Word w;
  w.letters_ = std::move(out); // inverse of a reduced word is reduced
  return w;
}

Word Word::pow(long long exponent) const {
  const Word& base = *this;
  Word out;
  long long reps = exponent < 0 ? -exponent : exponent;
  for (long long i = 0; i < reps; ++i) {
    out = out * base;
  }
  return exponent < 0 ? out.inverse() : out;
}

std::string Word::str() const {
  if (letters_.empty()) {
    return "1";
  }
  bool compact = true;
  for (const Letter& l : letters_) {
    if (l.gen.name.size() != 1 || l.gen.name[0] < 'a' || l.gen.name[0] > 'z') {
      compact = false;
      break;
    }
  }
  std::string out;
  for (const Letter& l : letters_) {
    if (compact) {
      char c = l.gen.name[0];
      out += l.sign > 0 ? c : static_cast<char>(c - 'a' + 'A');
    } else {
      if (!out.empty()) {
        out += ' ';
      }
      out += l.gen.name;
      if (l.sign < 0) {
        out += "^-1";
      }
    }
  }
  return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<Letter> raw = lhs.letters();
  raw.insert(raw.end(), rhs.letters().begin(), rhs.letters().end());
  return Word(std::move(raw));
}

Word reduce(std::vector<Letter> raw) { return Word(std::move(raw)); }

Word invert(const Word& w) { return w.inverse(); }

Word conjugate(const Word& g, const Word& x) { return x.inverse() * g * x; }

Word commutator(const Word& g, const Word& h) {
  return g.inverse() * h.inverse() * g * h;
}

Word substitute(const Word& w, const std::map<Generator, Word>& images) {
  std::vector<Letter> raw;
  for (const Letter& l : w.letters()) {
    auto it = images.find(l.gen);
    if (it == images.end()) {
      throw std::invalid_argument("substitute: no image for generator '" + l.gen.name + "'");
    }
    const Word img = l.sign > 0 ? it->second : it->second.inverse();
    raw.insert(raw.end(), img.letters().begin(), img.letters().end());
  }
  return Word(std::move(raw));
}

long long exponent_sum(const Word& w, const Generator& g) {
  long long sum = 0;
  for (const Letter& l : w.letters()) {
    if (l.gen == g) {
      sum += l.sign;
    }
  }
  return sum;
}

} // namespace gtc
