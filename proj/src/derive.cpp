#include "gtc/derive.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "gtc/errors.hpp"

namespace gtc {

namespace {

// t must be a cyclic rotation of relator or of its inverse (both are
// cyclically reduced here, so every length-preserving conjugate is a
// rotation). Returns (conjugator, sign) with t == conjugate(relator^sign,
// conjugator).
std::pair<Word, int> match_rotated_relator(const Word& t, const Word& relator) {
  for (int sign : {+1, -1}) {
    const Word r = sign > 0 ? relator : relator.inverse();
    if (r.size() != t.size()) {
      continue;
    }
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::vector<Letter> rotated(r.letters().begin() + static_cast<long>(k), r.letters().end());
      rotated.insert(rotated.end(), r.letters().begin(), r.letters().begin() + static_cast<long>(k));
      if (Word(rotated) == t) {
        std::vector<Letter> prefix(r.letters().begin(), r.letters().begin() + static_cast<long>(k));
        return {Word(std::move(prefix)), sign};
      }
    }
  }
  throw std::logic_error("internal: expected a rotation of the defining relator");
}

void require_valid(const GtCertificate& cert, const char* what) {
  if (!verify_certificate(cert).valid()) {
    throw std::logic_error(std::string("internal: generated ") + what +
                           " certificate failed verification");
  }
}

} // namespace

Word ConjugateProduct::expansion() const {
  Word out;
  for (const Word& c : conjugators) {
    out = out * conjugate(base, c);
  }
  return out;
}

Word filling_relator_word(long long m, long long n) {
  if (n < 1) {
    throw HypothesisError("filling relation requires n >= 1");
  }
  return longitude_word().pow(n) * Word::parse("a").pow(m);
}

ConjugateProduct meridian_conjugate_product(long long m, long long n) {
  if (n < 1 || m < 2 * n) {
    throw HypothesisError("rewriting the filling relation as conjugates of a requires m >= 2n "
                          "and n >= 1 (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  ConjugateProduct cp;
  cp.base = Word::parse("a");
  const Word front = Word::parse("BA");
  const Word back = Word::parse("b");
  const Word a = Word::parse("a");
  for (long long j = 0; j < n; ++j) {
    const Word tail = a.pow(2 * j);
    cp.conjugators.push_back(front * tail);
    cp.conjugators.push_back(back * tail);
  }
  for (long long i = 0; i < m - 2 * n; ++i) {
    cp.conjugators.emplace_back();
  }
  return cp;
}

GtCertificate whitehead_certificate(long long m, long long n) {
  if (n < 1 || m < 2 * n) {
    throw HypothesisError("whitehead derivation requires m >= 2n and n >= 1 (got m=" +
                          std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  const Slope slope(m, n);
  const Presentation p = whitehead_filled(slope);
  const ConjugateProduct cp = meridian_conjugate_product(m, n);

  const Word a = Word::parse("a");
  const Word lambda = longitude_word();
  // The longitude block with its trailing A cancelled against one meridian,
  // and the conjugate form it rewrites into under the defining relator.
  const Word block = lambda * a;
  const Word rewritten = conjugate(a, Word::parse("BA")) * conjugate(a, Word::parse("b")) * a.inverse();
  auto [rotation, rotation_sign] = match_rotated_relator(block * rewritten.inverse(), p.relators()[0]);

  // Peel conjugated copies of the defining relator off the expansion until
  // only the filling relator remains, then cancel that against its inverse.
  // Every insertion lands at the end of the current word.
  IdentityProof proof;
  proof.start = cp.expansion();
  Word current = proof.start;
  auto append_step = [&](std::size_t relator_index, int sign, Word conj) {
    ProofStep step{current.size(), relator_index, sign, std::move(conj)};
    Word relator = p.relators()[relator_index];
    if (sign < 0) {
      relator = relator.inverse();
    }
    current = current * conjugate(relator, step.conjugator);
    proof.steps.push_back(std::move(step));
  };

  const Word meridians = a.pow(m);
  for (long long j = n - 1; j >= 0; --j) {
    append_step(0, rotation_sign, rotation * lambda.pow(n - j) * meridians);
  }
  if (current != p.relators()[1]) {
    throw std::logic_error("internal: rewriting did not reach the filling relator");
  }
  append_step(1, -1, Word());
  if (!current.empty()) {
    throw std::logic_error("internal: derivation did not close");
  }

  GtCertificate cert{p, a, cp.conjugators, std::move(proof),
                     AbelianWitness{abelian_image(a, p), homology(p)}};
  require_valid(cert, "whitehead");
  return cert;
}

GtCertificate filled_quotient_certificate(long long m, long long n, const Slope& r) {
  GtCertificate base = whitehead_certificate(m, n);
  const Presentation p = double_filled(Slope(m, n), r);
  AbelianImage image = abelian_image(base.element, p);
  if (image.zero()) {
    throw HypothesisError("filling " + r.str() +
                          " kills the image of a in homology; no abelian witness exists");
  }
  GtCertificate cert{p, base.element, std::move(base.conjugators), std::move(base.triviality),
                     AbelianWitness{std::move(image), homology(p)}};
  require_valid(cert, "double-filling");
  return cert;
}

std::vector<Word> decompose_commutator(const Word& w) {
  const Letter abar{Generator{"a"}, -1};
  const Letter b{Generator{"b"}, +1};
  for (const Letter& l : w.letters()) {
    if (l != abar && l != b) {
      throw HypothesisError("commutator decomposition requires a word containing only A and b");
    }
  }
  // [a, l w'] = [a, w'] * [a, l]^{w'}; the A-factors vanish, each b leaves
  // one factor conjugated by the suffix after it.
  std::vector<Word> conjugators;
  const auto& letters = w.letters();
  for (std::size_t i = letters.size(); i-- > 0;) {
    if (letters[i] == b) {
      conjugators.push_back(
          Word(std::vector<Letter>(letters.begin() + static_cast<long>(i) + 1, letters.end())));
    }
  }
  return conjugators;
}

Word pretzel_relation_word(long long n) {
  if (n < 1) {
    throw HypothesisError("pretzel relation word requires n >= 1");
  }
  const Word b = Word::parse("b");
  const Word abar = Word::parse("A");
  return b * abar * b.pow(n - 1) * abar * b;
}

GtCertificate pretzel_certificate(long long n, std::size_t max_degree) {
  if (n < 1) {
    throw HypothesisError("pretzel derivation requires n >= 1 (got n=" + std::to_string(n) +
                          "; n = 0 gives a connected sum and negative n is not covered)");
  }
  const Presentation p = pretzel(n);
  const Word a = Word::parse("a");
  const Word b = Word::parse("b");
  const Word element = commutator(a, b);
  const Word w = pretzel_relation_word(n);

  std::vector<Word> conjugators = decompose_commutator(w);

  IdentityProof proof;
  {
    Word expansion;
    for (const Word& c : conjugators) {
      expansion = expansion * conjugate(element, c);
    }
    proof.start = std::move(expansion);
  }
  if (proof.start != commutator(a, w)) {
    throw std::logic_error("internal: commutator decomposition mismatch");
  }
  // The whole commutator is one conjugate of the defining relator, so a
  // single insertion of its inverse closes the proof.
  const Word shift = b * a;
  if (proof.start != conjugate(p.relators()[0], shift)) {
    throw std::logic_error("internal: commutator is not the expected conjugate of the relator");
  }
  proof.steps.push_back(ProofStep{proof.start.size(), 0, -1, shift});

  auto witness = find_quotient_witness(p, element, max_degree);
  if (!witness) {
    throw SearchExhausted("no symmetric-group quotient of degree <= " +
                          std::to_string(max_degree) + " separates [a,b] in the pretzel group (n=" +
                          std::to_string(n) + ")");
  }

  GtCertificate cert{p, element, std::move(conjugators), std::move(proof), std::move(*witness)};
  require_valid(cert, "pretzel");
  return cert;
}

} // namespace gtc
