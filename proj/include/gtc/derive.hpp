#pragma once

#include <cstddef>
#include <vector>

#include "gtc/certificate.hpp"

namespace gtc {

// Product of conjugates base^{c_1} * ... * base^{c_k}.
struct ConjugateProduct {
  Word base;
  std::vector<Word> conjugators;

  // The spelled-out product, freely reduced.
  Word expansion() const;
};

// Filling relation of the a-component: (longitude)^n * a^m, reduced.
// Requires n >= 1.
Word filling_relator_word(long long m, long long n);

// The same relation rearranged into a product of exactly m conjugates of the
// meridian a. Requires m >= 2n >= 2; the rearrangement is a free-group
// identity, no relators involved.
ConjugateProduct meridian_conjugate_product(long long m, long long n);

// Certificate that a is a generalized torsion element in the m/n-filled
// Whitehead link exterior. Requires m >= 2n, n >= 1, gcd(m, n) = 1.
GtCertificate whitehead_certificate(long long m, long long n);

// The same certificate carried into the further r-filling of the b-component
// (any r, 1/0 included); the identity proof transfers verbatim and only the
// homology witness is recomputed.
GtCertificate filled_quotient_certificate(long long m, long long n, const Slope& r);

// Conjugators c_1..c_j with [a, w] = [a,b]^{c_1} * ... * [a,b]^{c_j} as a
// free-group identity. w must use only the letters A and b; there is one
// factor per b in w, conjugated by the suffix after that b, last letter
// first.
std::vector<Word> decompose_commutator(const Word& w);

// The word v = b A b^{n-1} A b that commutes with a in the pretzel link
// group. Requires n >= 1.
Word pretzel_relation_word(long long n);

// Certificate that [a, b] is a generalized torsion element in the pretzel
// link group, with exactly n+1 conjugators and a finite-quotient witness.
// Requires n >= 1; throws SearchExhausted if no witness exists up to
// max_degree.
GtCertificate pretzel_certificate(long long n, std::size_t max_degree = 6);

} // namespace gtc
