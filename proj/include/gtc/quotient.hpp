#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gtc/presentation.hpp"

namespace gtc {

// Permutation of {0..degree-1} in one-line notation.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  bool is_identity() const;
  Permutation inverse() const;
  const std::vector<int>& images() const { return images_; }

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

// Apply a first, then b; matches word concatenation order.
Permutation compose(const Permutation& a, const Permutation& b);

// A homomorphism into a symmetric group that sends every relator to the
// identity but the witnessed element to something else.
struct QuotientWitness {
  std::size_t degree = 0;
  std::map<Generator, Permutation> images;

  bool operator==(const QuotientWitness&) const = default;
};

Permutation evaluate_word(const Word& w, const std::map<Generator, Permutation>& images);

// True iff every relator of p evaluates to the identity permutation.
bool check_homomorphism(const Presentation& p, const std::map<Generator, Permutation>& images);

struct SearchStats {
  // (degree, number of generator-image tuples examined at that degree)
  std::vector<std::pair<std::size_t, std::uint64_t>> candidates_per_degree;
};

// Deterministic search: degrees 2..max_degree in order, generator-image
// tuples in lexicographic one-line-notation order, first hit returned.
std::optional<QuotientWitness> find_quotient_witness(const Presentation& p, const Word& element,
                                                     std::size_t max_degree,
                                                     SearchStats* stats = nullptr);

} // namespace gtc
