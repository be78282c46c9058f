#pragma once

// Exact integer matrix algorithms: Hermite and Smith normal forms, saturated
// kernels, determinants, ranks, and signatures of symmetric forms.

#include <cstddef>
#include <utility>
#include <vector>

#include "toricdual/matrix.hpp"

namespace toricdual {

struct HnfResult {
  IntMatrix h;  // row HNF
  IntMatrix u;  // unimodular, h = u * m
};

// Row-style Hermite normal form: echelon, positive pivots, entries above a
// pivot reduced into [0, pivot).
inline HnfResult hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && h(piv, c) == 0) ++piv;
    if (piv == nr) continue;
    h.swap_rows(r, piv);
    u.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < nr; ++i) {
      while (h(i, c) != 0) {
        Int q = fdiv(h(r, c), h(i, c));
        h.add_row(r, i, -q);
        u.add_row(r, i, -q);
        h.swap_rows(r, i);
        u.swap_rows(r, i);
      }
    }
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = fdiv(h(i, c), h(r, c));
      if (q != 0) {
        h.add_row(i, r, -q);
        u.add_row(i, r, -q);
      }
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

struct SnfResult {
  IntMatrix s;  // diagonal, nonnegative, s[i] | s[i+1]
  IntMatrix u;  // unimodular
  IntMatrix v;  // unimodular, s = u * m * v
};

inline SnfResult snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t nr = m.rows(), nc = m.cols();
  const std::size_t k = nr < nc ? nr : nc;

  auto clear_at = [&](std::size_t t) {
    for (;;) {
      bool done = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        while (s(i, t) != 0) {
          Int q = s(i, t) / s(t, t);
          s.add_row(i, t, -q);
          u.add_row(i, t, -q);
          if (s(i, t) != 0) {
            s.swap_rows(t, i);
            u.swap_rows(t, i);
            done = false;
          }
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        while (s(t, j) != 0) {
          Int q = s(t, j) / s(t, t);
          s.add_col(j, t, -q);
          v.add_col(j, t, -q);
          if (s(t, j) != 0) {
            s.swap_cols(t, j);
            v.swap_cols(t, j);
            done = false;
          }
        }
      }
      if (done) break;
    }
  };

  for (std::size_t t = 0; t < k; ++t) {
    // move a nonzero entry to (t, t)
    std::size_t pi = nr, pj = nc;
    for (std::size_t i = t; i < nr && pi == nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (s(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == nr) break;
    s.swap_rows(t, pi);
    u.swap_rows(t, pi);
    s.swap_cols(t, pj);
    v.swap_cols(t, pj);
    clear_at(t);
  }

  // enforce divisibility chain
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const Int &a = s(i, i), &b = s(i + 1, i + 1);
      if (a == 0 && b != 0) {
        s.swap_rows(i, i + 1);
        u.swap_rows(i, i + 1);
        s.swap_cols(i, i + 1);
        v.swap_cols(i, i + 1);
        changed = true;
        continue;
      }
      if (a != 0 && b % a != 0) {
        s.add_col(i, i + 1, 1);
        v.add_col(i, i + 1, 1);
        clear_at(i);
        changed = true;
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    if (s(i, i) < 0) {
      s.negate_col(i);
      v.negate_col(i);
    }
  return {std::move(s), std::move(u), std::move(v)};
}

inline std::size_t rank(const IntMatrix& m) {
  IntMatrix h = hnf(m).h;
  std::size_t r = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        nz = true;
        break;
      }
    if (nz) ++r;
  }
  return r;
}

// Exact determinant, fraction-free (Bareiss).
inline Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquareMatrix();
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// Columns form a saturated (primitive) basis of {x : m x = 0}.
inline IntMatrix kernel_basis(const IntMatrix& m) {
  HnfResult t = hnf(m.transposed());
  std::vector<std::size_t> zero_rows;
  for (std::size_t i = 0; i < t.h.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < t.h.cols(); ++j)
      if (t.h(i, j) != 0) {
        nz = true;
        break;
      }
    if (!nz) zero_rows.push_back(i);
  }
  IntMatrix k(m.cols(), zero_rows.size());
  for (std::size_t c = 0; c < zero_rows.size(); ++c)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, c) = t.u(zero_rows[c], i);
  return k;
}

struct Signature {
  std::size_t pos = 0, neg = 0, zero = 0;
  bool operator==(const Signature&) const = default;
};

// Sylvester signature of a symmetric integer matrix by exact rational
// congruence diagonalization.
inline Signature signature(const IntMatrix& g) {
  if (!g.is_symmetric()) throw DimensionMismatch("signature needs symmetric input");
  const std::size_t n = g.rows();
  RatMatrix a = to_rational(g);
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (a(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // no nonzero diagonal: look for off-diagonal entry and merge rows
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        sig.zero += n - k;
        return sig;
      }
      a.add_row(oi, oj, Rat(1));
      a.add_col(oi, oj, Rat(1));  // now a(oi,oi) = 2*a(oi,oj) != 0
      piv = oi;
    }
    if (piv != k) {
      a.swap_rows(k, piv);
      a.swap_cols(k, piv);
    }
    const Rat d = a(k, k);
    if (d > 0)
      ++sig.pos;
    else
      ++sig.neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / d;
      a.add_row(i, k, -f);
      a.add_col(i, k, -f);
    }
  }
  return sig;
}

// Exact inverse of a nonsingular rational matrix.
inline RatMatrix rat_inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquareMatrix();
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw DegenerateLattice("singular matrix");
    a.swap_rows(c, piv);
    inv.swap_rows(c, piv);
    Rat pv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pv;
      inv(c, j) /= pv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      a.add_row(i, c, -f);
      inv.add_row(i, c, -f);
    }
  }
  return inv;
}

inline bool is_unimodular(const IntMatrix& m) {
  return m.rows() == m.cols() && abs(det(m)) == 1;
}

}  // namespace toricdual
