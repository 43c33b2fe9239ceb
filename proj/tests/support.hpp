#pragma once

// Test-only helpers: randomized generators, independent oracles for free
// reduction and integer linear algebra, a certificate mutation harness, and
// a runner for the command-line tool. Oracles here deliberately avoid the
// library code paths they are used to check.

#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gtc/abelian.hpp"
#include "gtc/certificate.hpp"
#include "gtc/word.hpp"

namespace support {

// ---------------------------------------------------------------------------
// random words

inline std::vector<gtc::Letter> random_raw_letters(std::mt19937& rng, std::size_t max_len,
                                                   const std::vector<std::string>& alphabet) {
  std::size_t len = rng() % (max_len + 1);
  std::vector<gtc::Letter> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(gtc::Letter{gtc::Generator{alphabet[rng() % alphabet.size()]},
                              (rng() % 2) ? +1 : -1});
  }
  return out;
}

inline gtc::Word random_word(std::mt19937& rng, std::size_t max_len,
                             const std::vector<std::string>& alphabet = {"a", "b"}) {
  return gtc::Word(random_raw_letters(rng, max_len, alphabet));
}

// Oracle for reduction confluence: cancel adjacent inverse pairs in a random
// order until none remain.
inline std::vector<gtc::Letter> reduce_random_order(std::vector<gtc::Letter> letters,
                                                    std::mt19937& rng) {
  for (;;) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i].gen == letters[i + 1].gen && letters[i].sign == -letters[i + 1].sign) {
        sites.push_back(i);
      }
    }
    if (sites.empty()) {
      return letters;
    }
    std::size_t pick = sites[rng() % sites.size()];
    letters.erase(letters.begin() + static_cast<long>(pick),
                  letters.begin() + static_cast<long>(pick) + 2);
  }
}

// ---------------------------------------------------------------------------
// exact linear algebra oracles

inline gtc::IntMatrix minor_matrix(const gtc::IntMatrix& m, std::size_t drop_row,
                                   std::size_t drop_col) {
  gtc::IntMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == drop_row) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == drop_col) continue;
      out.at(oi, oj) = m.at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

// Cofactor expansion along the first row.
inline gtc::Int det_cofactor(const gtc::IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("det of a non-square matrix");
  }
  if (m.rows() == 0) {
    return 1;
  }
  if (m.rows() == 1) {
    return m.at(0, 0);
  }
  gtc::Int sum = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m.at(0, j) == 0) continue;
    gtc::Int term = m.at(0, j) * det_cofactor(minor_matrix(m, 0, j));
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

// Membership in the row lattice of a nonsingular square matrix, decided with
// the adjugate: x lies in the lattice iff x * adj(m) is divisible by det(m).
struct RowLattice {
  gtc::IntMatrix adj;
  gtc::Int det;

  explicit RowLattice(const gtc::IntMatrix& m) : adj(m.cols(), m.cols()), det(det_cofactor(m)) {
    if (m.rows() != m.cols() || det == 0) {
      throw std::invalid_argument("row lattice oracle needs a nonsingular square matrix");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        gtc::Int c = det_cofactor(minor_matrix(m, j, i));
        adj.at(i, j) = ((i + j) % 2 == 0) ? c : -c;
      }
    }
  }

  bool contains(const std::vector<gtc::Int>& x) const {
    for (std::size_t j = 0; j < adj.cols(); ++j) {
      gtc::Int dot = 0;
      for (std::size_t i = 0; i < adj.rows(); ++i) {
        dot += x[i] * adj.at(i, j);
      }
      if (dot % det != 0) {
        return false;
      }
    }
    return true;
  }
};

// Brute-force enumeration of Z^cols / rowspace(m): breadth-first closure of
// the generators with adjugate-based membership for deduplication. Returns
// the multiset of element orders, which determines a finite abelian group up
// to isomorphism.
inline std::multiset<long long> cokernel_order_stats(const gtc::IntMatrix& m, std::size_t bound) {
  RowLattice lattice(m);
  const std::size_t g = m.cols();
  std::vector<std::vector<gtc::Int>> reps;
  reps.push_back(std::vector<gtc::Int>(g, 0));
  for (std::size_t scan = 0; scan < reps.size(); ++scan) {
    for (std::size_t i = 0; i < g; ++i) {
      std::vector<gtc::Int> cand = reps[scan];
      cand[i] += 1;
      bool known = false;
      for (const auto& rep : reps) {
        std::vector<gtc::Int> diff(g);
        for (std::size_t k = 0; k < g; ++k) {
          diff[k] = cand[k] - rep[k];
        }
        if (lattice.contains(diff)) {
          known = true;
          break;
        }
      }
      if (!known) {
        reps.push_back(std::move(cand));
        if (reps.size() > bound) {
          throw std::runtime_error("cokernel enumeration exceeded its bound");
        }
      }
    }
  }
  std::multiset<long long> orders;
  for (const auto& rep : reps) {
    bool found = false;
    for (std::size_t t = 1; t <= bound; ++t) {
      std::vector<gtc::Int> scaled(g);
      for (std::size_t k = 0; k < g; ++k) {
        scaled[k] = rep[k] * static_cast<long long>(t);
      }
      if (lattice.contains(scaled)) {
        orders.insert(static_cast<long long>(t));
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::runtime_error("element order exceeded the enumeration bound");
    }
  }
  return orders;
}

// Order multiset of the direct sum of Z/d_i described by a canonical
// AbelianGroup value (free rank must be zero).
inline std::multiset<long long> group_order_stats(const gtc::AbelianGroup& g) {
  if (g.free_rank != 0) {
    throw std::invalid_argument("order statistics need a finite group");
  }
  std::vector<long long> ds;
  for (const gtc::Int& d : g.torsion) {
    ds.push_back(d.convert_to<long long>());
  }
  std::multiset<long long> orders;
  std::vector<long long> tuple(ds.size(), 0);
  for (;;) {
    long long order = 1;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      long long d = ds[i];
      long long x = tuple[i];
      long long cyc = d / std::gcd(x, d);
      order = std::lcm(order, cyc);
    }
    orders.insert(order);
    std::size_t slot = ds.size();
    while (slot > 0) {
      if (++tuple[slot - 1] < ds[slot - 1]) {
        break;
      }
      tuple[slot - 1] = 0;
      --slot;
    }
    if (slot == 0) {
      break;
    }
  }
  return orders;
}

// ---------------------------------------------------------------------------
// certificate mutation harness

struct Mutant {
  std::string description;
  gtc::GtCertificate cert;
  std::string expected_check; // prefix of the failure entry the verifier must name
};

// Single-field mutations with a deterministic expected failing check. Where
// a mutation could accidentally leave the certificate valid (for example
// appending a letter that commutes through a conjugator) it is filtered out
// with free-group arithmetic, independent of the verifier.
inline std::vector<Mutant> make_mutants(const gtc::GtCertificate& base) {
  std::vector<Mutant> out;
  const std::vector<gtc::Word> letters = {gtc::Word::parse("a"), gtc::Word::parse("b"),
                                          gtc::Word::parse("A"), gtc::Word::parse("B")};

  for (std::size_t i = 0; i < base.conjugators.size(); ++i) {
    for (const gtc::Word& l : letters) {
      gtc::GtCertificate c = base;
      c.conjugators[i] = c.conjugators[i] * l;
      if (c.conjugate_product() == base.triviality.start) {
        continue;
      }
      out.push_back({"conjugator " + std::to_string(i) + " times " + l.str(), std::move(c),
                     "start-word"});
    }
    if (!base.conjugators[i].empty()) {
      gtc::GtCertificate c = base;
      c.conjugators[i] = c.conjugators[i].inverse();
      if (c.conjugate_product() != base.triviality.start) {
        out.push_back({"conjugator " + std::to_string(i) + " inverted", std::move(c),
                       "start-word"});
      }
    }
  }

  for (std::size_t j = 0; j < base.triviality.steps.size(); ++j) {
    {
      gtc::GtCertificate c = base;
      c.triviality.steps.erase(c.triviality.steps.begin() + static_cast<long>(j));
      out.push_back({"step " + std::to_string(j) + " dropped", std::move(c), "identity-proof"});
    }
    {
      gtc::GtCertificate c = base;
      c.triviality.steps[j].relator_index += 1;
      out.push_back({"step " + std::to_string(j) + " relator index bumped", std::move(c),
                     "identity-proof"});
    }
    {
      gtc::GtCertificate c = base;
      c.triviality.steps[j].sign = -c.triviality.steps[j].sign;
      out.push_back({"step " + std::to_string(j) + " sign flipped", std::move(c),
                     "identity-proof"});
    }
  }

  if (const auto* abelian = std::get_if<gtc::AbelianWitness>(&base.nontriviality)) {
    if (!abelian->image.torsion_coords.empty()) {
      gtc::GtCertificate c = base;
      std::get<gtc::AbelianWitness>(c.nontriviality).image.torsion_coords[0] += 1;
      out.push_back({"witness torsion coordinate bumped", std::move(c), "witness"});
    }
    if (!abelian->image.free_coords.empty()) {
      gtc::GtCertificate c = base;
      std::get<gtc::AbelianWitness>(c.nontriviality).image.free_coords[0] += 1;
      out.push_back({"witness free coordinate bumped", std::move(c), "witness"});
    }
    if (!abelian->group.torsion.empty()) {
      gtc::GtCertificate c = base;
      std::get<gtc::AbelianWitness>(c.nontriviality).group.torsion[0] += 1;
      out.push_back({"witness group torsion altered", std::move(c), "witness"});
    }
    {
      gtc::GtCertificate c = base;
      std::get<gtc::AbelianWitness>(c.nontriviality).group.free_rank += 1;
      out.push_back({"witness group rank altered", std::move(c), "witness"});
    }
  } else {
    const auto& quotient = std::get<gtc::QuotientWitness>(base.nontriviality);
    for (const auto& [gen, perm] : quotient.images) {
      (void)perm;
      gtc::GtCertificate c = base;
      auto& images = std::get<gtc::QuotientWitness>(c.nontriviality).images;
      images.erase(gen);
      images.emplace(gen, gtc::Permutation::identity(quotient.degree));
      // keep only if the doctored images genuinely stop witnessing
      bool still_witnesses = false;
      try {
        still_witnesses =
            gtc::check_homomorphism(base.presentation, images) &&
            !gtc::evaluate_word(base.element, images).is_identity();
      } catch (const std::exception&) {
        still_witnesses = false;
      }
      if (!still_witnesses) {
        out.push_back({"witness image of " + gen.name + " replaced by identity", std::move(c),
                       "witness"});
      }
    }
    {
      gtc::GtCertificate c = base;
      std::get<gtc::QuotientWitness>(c.nontriviality).degree += 1;
      out.push_back({"witness degree bumped", std::move(c), "witness"});
    }
  }

  {
    gtc::GtCertificate c = base;
    c.conjugators.clear();
    out.push_back({"conjugators cleared", std::move(c), "nonempty-product"});
  }

  for (const gtc::Word& l : letters) {
    gtc::GtCertificate c = base;
    c.element = c.element * l;
    if (c.conjugate_product() == base.triviality.start) {
      continue;
    }
    out.push_back({"element times " + l.str(), std::move(c), "start-word"});
  }

  for (const gtc::Word& l : letters) {
    gtc::GtCertificate c = base;
    c.triviality.start = c.triviality.start * l; // always a different word
    out.push_back({"proof start times " + l.str(), std::move(c), "start-word"});
  }

  return out;
}

// ---------------------------------------------------------------------------
// command-line runner

struct CliResult {
  int exit_code = -1;
  std::string output; // stdout and stderr combined
};

inline CliResult run_cli(const std::string& cli_path, const std::string& args) {
  std::string cmd = cli_path + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    throw std::runtime_error("popen failed for: " + cmd);
  }
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::filesystem::path fresh_temp_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             (tag + "-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace support
