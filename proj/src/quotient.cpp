#include "gtc/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gtc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw std::invalid_argument("permutation degree must be >= 1");
  }
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation in one-line notation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    img[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("cannot compose permutations of different degrees");
  }
  std::vector<int> img(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) {
    img[i] = b(a(static_cast<int>(i)));
  }
  return Permutation(std::move(img));
}

Permutation evaluate_word(const Word& w, const std::map<Generator, Permutation>& images) {
  if (images.empty()) {
    throw std::invalid_argument("evaluate_word: no generator images");
  }
  const std::size_t degree = images.begin()->second.degree();
  Permutation cur = Permutation::identity(degree);
  for (const Letter& l : w.letters()) {
    auto it = images.find(l.gen);
    if (it == images.end()) {
      throw std::invalid_argument("evaluate_word: no image for generator '" + l.gen.name + "'");
    }
    if (it->second.degree() != degree) {
      throw std::invalid_argument("evaluate_word: permutation degree mismatch");
    }
    cur = compose(cur, l.sign > 0 ? it->second : it->second.inverse());
  }
  return cur;
}

bool check_homomorphism(const Presentation& p, const std::map<Generator, Permutation>& images) {
  std::size_t degree = 0;
  for (const Generator& g : p.generators()) {
    auto it = images.find(g);
    if (it == images.end()) {
      throw std::invalid_argument("check_homomorphism: no image for generator '" + g.name + "'");
    }
    if (degree == 0) {
      degree = it->second.degree();
    } else if (it->second.degree() != degree) {
      throw std::invalid_argument("check_homomorphism: permutation degree mismatch");
    }
  }
  for (const Word& r : p.relators()) {
    if (!evaluate_word(r, images).is_identity()) {
      return false;
    }
  }
  return true;
}

namespace {

// Words precompiled to (generator slot, sign) pairs for the inner loop.
using CompiledWord = std::vector<std::pair<std::size_t, int>>;

CompiledWord compile_word(const Word& w, const Presentation& p) {
  CompiledWord out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) {
    out.push_back({*p.generator_index(l.gen), l.sign});
  }
  return out;
}

bool evaluates_to_identity_only(const CompiledWord& w, const std::vector<const std::vector<int>*>& fwd,
                                const std::vector<const std::vector<int>*>& inv, std::size_t degree,
                                std::vector<int>& scratch) {
  std::iota(scratch.begin(), scratch.begin() + static_cast<long>(degree), 0);
  for (auto [slot, sign] : w) {
    const std::vector<int>& q = sign > 0 ? *fwd[slot] : *inv[slot];
    for (std::size_t x = 0; x < degree; ++x) {
      scratch[x] = q[static_cast<std::size_t>(scratch[x])];
    }
  }
  for (std::size_t x = 0; x < degree; ++x) {
    if (scratch[x] != static_cast<int>(x)) {
      return false;
    }
  }
  return true;
}

} // namespace

std::optional<QuotientWitness> find_quotient_witness(const Presentation& p, const Word& element,
                                                     std::size_t max_degree, SearchStats* stats) {
  if (max_degree < 2) {
    throw std::invalid_argument("find_quotient_witness: max_degree must be >= 2");
  }
  if (!p.uses_known_generators(element)) {
    throw std::invalid_argument("find_quotient_witness: element uses a generator outside the presentation");
  }
  const std::size_t ngens = p.generators().size();
  if (ngens == 0) {
    return std::nullopt;
  }

  std::vector<CompiledWord> relators;
  relators.reserve(p.relators().size());
  for (const Word& r : p.relators()) {
    relators.push_back(compile_word(r, p));
  }
  CompiledWord target = compile_word(element, p);

  for (std::size_t degree = 2; degree <= max_degree; ++degree) {
    // all degree! permutations in lexicographic one-line order
    std::vector<std::vector<int>> perms;
    std::vector<int> line(degree);
    std::iota(line.begin(), line.end(), 0);
    do {
      perms.push_back(line);
    } while (std::next_permutation(line.begin(), line.end()));
    std::vector<std::vector<int>> inverses(perms.size(), std::vector<int>(degree));
    for (std::size_t k = 0; k < perms.size(); ++k) {
      for (std::size_t i = 0; i < degree; ++i) {
        inverses[k][static_cast<std::size_t>(perms[k][i])] = static_cast<int>(i);
      }
    }

    std::vector<std::size_t> assignment(ngens, 0);
    std::vector<const std::vector<int>*> fwd(ngens), inv(ngens);
    std::vector<int> scratch(degree);
    std::uint64_t examined = 0;

    for (;;) {
      ++examined;
      for (std::size_t g = 0; g < ngens; ++g) {
        fwd[g] = &perms[assignment[g]];
        inv[g] = &inverses[assignment[g]];
      }
      bool hom = true;
      for (const CompiledWord& r : relators) {
        if (!evaluates_to_identity_only(r, fwd, inv, degree, scratch)) {
          hom = false;
          break;
        }
      }
      if (hom && !evaluates_to_identity_only(target, fwd, inv, degree, scratch)) {
        if (stats) {
          stats->candidates_per_degree.push_back({degree, examined});
        }
        QuotientWitness w;
        w.degree = degree;
        for (std::size_t g = 0; g < ngens; ++g) {
          w.images.emplace(p.generators()[g], Permutation(perms[assignment[g]]));
        }
        return w;
      }
      // lexicographic successor of the assignment tuple, last slot fastest
      std::size_t slot = ngens;
      while (slot > 0) {
        if (++assignment[slot - 1] < perms.size()) {
          break;
        }
        assignment[slot - 1] = 0;
        --slot;
      }
      if (slot == 0) {
        break;
      }
    }
    if (stats) {
      stats->candidates_per_degree.push_back({degree, examined});
    }
  }
  return std::nullopt;
}

} // namespace gtc
