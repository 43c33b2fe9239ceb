#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gtc/presentation.hpp"

namespace gtc {

// Exact arbitrary-precision integer; diagonalization blows entries up even
// on small matrices, and a silently wrapped witness would be worthless.
using Int = boost::multiprecision::cpp_int;

class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

private:
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);

// d = u * m * v with u, v unimodular and d diagonal, the nonzero diagonal
// entries nonnegative and forming a divisibility chain d1 | d2 | ...
struct SmithForm {
  IntMatrix d, u, v;
};

SmithForm smith_normal_form(IntMatrix m);

// Canonical form of a finitely generated abelian group: no torsion
// coefficient equals 1 and each divides the next.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const; // e.g. "Z + Z/5", "Z/5 + Z/5", "0"

  bool operator==(const AbelianGroup&) const = default;
};

// Coordinates of an element in a fixed canonical decomposition; torsion
// coordinates are reduced into [0, d_i).
struct AbelianImage {
  std::vector<Int> free_coords;
  std::vector<Int> torsion_coords;

  bool zero() const;

  bool operator==(const AbelianImage&) const = default;
};

// Exponent-sum matrix, one row per relator, one column per generator.
IntMatrix relation_matrix(const Presentation& p);

// Cokernel of the row lattice of m inside Z^cols, in canonical form.
AbelianGroup cokernel(const IntMatrix& m);

AbelianGroup homology(const Presentation& p);

AbelianImage abelian_image(const Word& w, const Presentation& p);

} // namespace gtc
