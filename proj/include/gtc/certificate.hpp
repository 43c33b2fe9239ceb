#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "gtc/abelian.hpp"
#include "gtc/presentation.hpp"
#include "gtc/quotient.hpp"

namespace gtc {

// One rewriting move: splice conjugator^-1 * relator^sign * conjugator into
// the current word at `position`, then freely reduce. Positions refer to the
// reduced word produced by the previous step.
struct ProofStep {
  std::size_t position = 0;
  std::size_t relator_index = 0;
  int sign = 1;
  Word conjugator;

  bool operator==(const ProofStep&) const = default;
};

// A proof that `start` is trivial in the presented group: replaying the
// steps must end at the empty word.
struct IdentityProof {
  Word start;
  std::vector<ProofStep> steps;

  bool operator==(const IdentityProof&) const = default;
};

// Final word after all insertions and reductions; throws ProofError on an
// index that cannot be resolved, reporting the step number.
Word replay(const IdentityProof& proof, const Presentation& p);

// True iff replay ends at the empty word. Malformed proofs throw; they are
// not reported as a plain `false`.
bool verify_identity(const IdentityProof& proof, const Presentation& p);

struct AbelianWitness {
  AbelianImage image;
  AbelianGroup group;

  bool operator==(const AbelianWitness&) const = default;
};

using NontrivialityWitness = std::variant<AbelianWitness, QuotientWitness>;

// Re-derives the witness content and checks it certifies element != 1.
// Structural defects (mismatched dimensions, foreign generators) throw.
bool verify_witness(const NontrivialityWitness& witness, const Word& element,
                    const Presentation& p);

// Certifies that `element` is a generalized torsion element: the product of
// its conjugates by the listed conjugators is provably trivial while the
// element itself provably is not.
struct GtCertificate {
  Presentation presentation;
  Word element;
  std::vector<Word> conjugators;
  IdentityProof triviality;
  NontrivialityWitness nontriviality;

  Word conjugate_product() const;

  bool operator==(const GtCertificate&) const = default;
};

struct VerificationReport {
  bool nonempty_product = false;
  bool start_matches = false;
  bool proof_valid = false;
  bool witness_valid = false;
  std::size_t replay_steps = 0;
  std::vector<std::string> failures; // one entry per failed check, check name first

  bool valid() const {
    return nonempty_product && start_matches && proof_valid && witness_valid;
  }
};

// Runs the three independent checks plus the non-emptiness requirement.
// Never throws: structural defects become report entries.
VerificationReport verify_certificate(const GtCertificate& c);

} // namespace gtc
