#include "gtc/certificate.hpp"

#include <exception>
#include <stdexcept>
#include <string>

#include "gtc/errors.hpp"

namespace gtc {

Word replay(const IdentityProof& proof, const Presentation& p) {
  Word current = proof.start;
  std::size_t step_number = 0;
  for (const ProofStep& step : proof.steps) {
    ++step_number;
    auto fail = [step_number](const std::string& why) {
      throw ProofError("step " + std::to_string(step_number) + ": " + why);
    };
    if (step.relator_index >= p.relators().size()) {
      fail("relator index " + std::to_string(step.relator_index) + " out of range");
    }
    if (step.sign != 1 && step.sign != -1) {
      fail("sign must be +1 or -1");
    }
    if (step.position > current.size()) {
      fail("position " + std::to_string(step.position) + " exceeds current word length " +
           std::to_string(current.size()));
    }
    if (!p.uses_known_generators(step.conjugator)) {
      fail("conjugator uses a generator outside the presentation");
    }
    Word relator = p.relators()[step.relator_index];
    if (step.sign < 0) {
      relator = relator.inverse();
    }
    const Word insertion = conjugate(relator, step.conjugator);
    std::vector<Letter> raw;
    raw.reserve(current.size() + insertion.size());
    raw.insert(raw.end(), current.letters().begin(),
               current.letters().begin() + static_cast<long>(step.position));
    raw.insert(raw.end(), insertion.letters().begin(), insertion.letters().end());
    raw.insert(raw.end(), current.letters().begin() + static_cast<long>(step.position),
               current.letters().end());
    current = Word(std::move(raw));
  }
  return current;
}

bool verify_identity(const IdentityProof& proof, const Presentation& p) {
  return replay(proof, p).empty();
}

bool verify_witness(const NontrivialityWitness& witness, const Word& element,
                    const Presentation& p) {
  if (const auto* abelian = std::get_if<AbelianWitness>(&witness)) {
    if (abelian->image.free_coords.size() != abelian->group.free_rank ||
        abelian->image.torsion_coords.size() != abelian->group.torsion.size()) {
      throw std::invalid_argument(
          "abelian witness: image coordinates do not match the group decomposition");
    }
    if (abelian->group != homology(p)) {
      return false;
    }
    AbelianImage image = abelian_image(element, p);
    return image == abelian->image && !image.zero();
  }
  const auto& quotient = std::get<QuotientWitness>(witness);
  if (quotient.degree < 1) {
    throw std::invalid_argument("quotient witness: degree must be >= 1");
  }
  for (const auto& [gen, perm] : quotient.images) {
    if (perm.degree() != quotient.degree) {
      throw std::invalid_argument("quotient witness: permutation degree mismatch");
    }
  }
  if (!check_homomorphism(p, quotient.images)) {
    return false;
  }
  return !evaluate_word(element, quotient.images).is_identity();
}

Word GtCertificate::conjugate_product() const {
  Word product;
  for (const Word& c : conjugators) {
    product = product * conjugate(element, c);
  }
  return product;
}

VerificationReport verify_certificate(const GtCertificate& c) {
  VerificationReport report;

  report.nonempty_product = !c.conjugators.empty();
  if (!report.nonempty_product) {
    report.failures.push_back("nonempty-product: a certificate needs at least one conjugate");
  }

  report.start_matches = c.triviality.start == c.conjugate_product();
  if (!report.start_matches) {
    report.failures.push_back(
        "start-word: the stated proof start differs from the conjugate product");
  }

  report.replay_steps = c.triviality.steps.size();
  try {
    report.proof_valid = verify_identity(c.triviality, c.presentation);
    if (!report.proof_valid) {
      report.failures.push_back("identity-proof: replay ended at a non-trivial word");
    }
  } catch (const std::exception& e) {
    report.proof_valid = false;
    report.failures.push_back(std::string("identity-proof: ") + e.what());
  }

  try {
    report.witness_valid = verify_witness(c.nontriviality, c.element, c.presentation);
    if (!report.witness_valid) {
      report.failures.push_back("witness: non-triviality witness rejected");
    }
  } catch (const std::exception& e) {
    report.witness_valid = false;
    report.failures.push_back(std::string("witness: ") + e.what());
  }

  return report;
}

} // namespace gtc
