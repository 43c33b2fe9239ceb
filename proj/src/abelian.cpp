#include "gtc/abelian.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gtc {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw std::invalid_argument("matrix dimension mismatch in product");
  }
  IntMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Int& l = lhs.at(i, k);
      if (l == 0) {
        continue;
      }
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        out.at(i, j) += l * rhs.at(k, j);
      }
    }
  }
  return out;
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Row and column operations are mirrored onto u and v so that
// a == u * input * v stays true throughout.
struct SnfWorker {
  IntMatrix a, u, v;

  explicit SnfWorker(IntMatrix m)
      : a(std::move(m)), u(IntMatrix::identity(a.rows())), v(IntMatrix::identity(a.cols())) {}

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }

  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }

  // row i += q * row j
  void row_addmul(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) += q * a.at(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) += q * u.at(j, c);
  }

  // col i += q * col j
  void col_addmul(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, i) += q * a.at(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) += q * v.at(r, j);
  }

  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }

  // Move a nonzero entry of smallest absolute value in a[t.., t..] to (t, t).
  bool place_pivot(std::size_t t) {
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i) {
      for (std::size_t j = t; j < a.cols(); ++j) {
        const Int& e = a.at(i, j);
        if (e == 0) continue;
        Int mag = abs_int(e);
        if (!found || mag < best) {
          found = true;
          best = std::move(mag);
          pi = i;
          pj = j;
        }
      }
    }
    if (!found) return false;
    row_swap(t, pi);
    col_swap(t, pj);
    return true;
  }
};

} // namespace

SmithForm smith_normal_form(IntMatrix m) {
  SnfWorker w(std::move(m));
  const std::size_t limit = std::min(w.a.rows(), w.a.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    if (!w.place_pivot(t)) {
      break; // remaining submatrix is zero
    }
    bool dirty = true;
    while (dirty) {
      dirty = false;
      // clear the pivot column; a nonzero remainder is strictly smaller than
      // the pivot, so swapping it up makes progress
      for (std::size_t i = t + 1; i < w.a.rows(); ++i) {
        if (w.a.at(i, t) == 0) continue;
        Int q = w.a.at(i, t) / w.a.at(t, t);
        if (q != 0) w.row_addmul(i, t, -q);
        if (w.a.at(i, t) != 0) {
          w.row_swap(t, i);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      // clear the pivot row
      for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
        if (w.a.at(t, j) == 0) continue;
        Int q = w.a.at(t, j) / w.a.at(t, t);
        if (q != 0) w.col_addmul(j, t, -q);
        if (w.a.at(t, j) != 0) {
          w.col_swap(t, j);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      // the pivot must divide everything that comes after it; folding an
      // offending row into row t forces a smaller pivot on the next pass
      for (std::size_t i = t + 1; i < w.a.rows() && !dirty; ++i) {
        for (std::size_t j = t + 1; j < w.a.cols() && !dirty; ++j) {
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.row_addmul(t, i, 1);
            dirty = true;
          }
        }
      }
    }
    if (w.a.at(t, t) < 0) {
      w.row_negate(t);
    }
  }
  return SmithForm{std::move(w.a), std::move(w.u), std::move(w.v)};
}

std::string AbelianGroup::str() const {
  if (trivial()) {
    return "0";
  }
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  for (std::size_t i = 0; i < free_rank; ++i) {
    append("Z");
  }
  for (const Int& d : torsion) {
    append("Z/" + d.str());
  }
  return out;
}

bool AbelianImage::zero() const {
  auto all_zero = [](const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
  };
  return all_zero(free_coords) && all_zero(torsion_coords);
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generators().size());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    for (std::size_t j = 0; j < p.generators().size(); ++j) {
      m.at(i, j) = exponent_sum(p.relators()[i], p.generators()[j]);
    }
  }
  return m;
}

AbelianGroup cokernel(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(snf.d.rows(), snf.d.cols()); ++i) {
    const Int& d = snf.d.at(i, i);
    if (d == 0) break;
    ++nonzero;
    if (d >= 2) {
      g.torsion.push_back(d);
    }
  }
  g.free_rank = m.cols() - nonzero;
  return g;
}

AbelianGroup homology(const Presentation& p) { return cokernel(relation_matrix(p)); }

AbelianImage abelian_image(const Word& w, const Presentation& p) {
  if (!p.uses_known_generators(w)) {
    throw std::invalid_argument("abelian_image: word uses a generator outside the presentation");
  }
  const std::size_t gens = p.generators().size();
  SmithForm snf = smith_normal_form(relation_matrix(p));

  // Exponent row vector, moved into diagonal coordinates by v.
  IntMatrix x(1, gens);
  for (std::size_t j = 0; j < gens; ++j) {
    x.at(0, j) = exponent_sum(w, p.generators()[j]);
  }
  IntMatrix y = x * snf.v;

  AbelianImage img;
  std::size_t i = 0;
  for (; i < std::min(snf.d.rows(), snf.d.cols()); ++i) {
    const Int& d = snf.d.at(i, i);
    if (d == 0) break;
    if (d >= 2) {
      Int coord = y.at(0, i) % d;
      if (coord < 0) coord += d;
      img.torsion_coords.push_back(std::move(coord));
    }
    // coordinates over a unit diagonal entry die
  }
  for (; i < gens; ++i) {
    img.free_coords.push_back(y.at(0, i));
  }
  return img;
}

} // namespace gtc
