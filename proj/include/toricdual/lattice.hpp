#pragma once

// Integer quadratic lattices: named ADE/hyperbolic Grams, discriminant groups
// and forms, Nikulin's primitivity and orthogonality criteria, basis
// certificates, U-splitting, root complements in E8.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toricdual/linalg.hpp"

namespace toricdual {

class IntLattice {
 public:
  IntLattice() = default;
  explicit IntLattice(IntMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric()) throw DimensionMismatch("Gram must be symmetric");
  }

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  Int discriminant() const { return det(gram_); }
  Signature sig() const { return signature(gram_); }
  bool nondegenerate() const { return discriminant() != 0; }

  bool even() const {
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      if (gram_(i, i) % 2 != 0) return false;
    return true;
  }

 private:
  IntMatrix gram_;
};

// ---------------------------------------------------------------------------
// Named lattice expressions: formal direct sums of U, A_n, E6/E7/E8, <k>, and
// explicit Gram blocks. Text syntax: "U+A1+E8", "U+U+E8^2", "<2>",
// "gram:[[2,1],[1,-2]]"; whitespace-insensitive, '^' for multiplicity.

struct LatticeAtom {
  enum class Kind { U, A, E, Diag, Gram } kind;
  int n = 0;          // A_n index or E rank (6,7,8)
  Int k = 0;          // <k>
  IntMatrix block;    // explicit Gram
};

struct NamedLatticeExpr {
  std::vector<LatticeAtom> atoms;
};

inline IntMatrix gram_U() { return IntMatrix{{Int(0), Int(1)}, {Int(1), Int(0)}}; }

// Negative-definite root lattices (diagonal -2, +1 on Dynkin edges).
inline IntMatrix gram_A(int n) {
  if (n < 1) throw ParseError("A_n needs n >= 1");
  const std::size_t un = std::size_t(n);
  IntMatrix g(un, un);
  for (std::size_t i = 0; i < un; ++i) {
    g(i, i) = -2;
    if (i + 1 < un) {
      g(i, i + 1) = 1;
      g(i + 1, i) = 1;
    }
  }
  return g;
}

// E6/E7/E8 in Bourbaki numbering: chain 1-3-4-5-...-n with node 2 joined to 4.
inline IntMatrix gram_E(int n) {
  if (n < 6 || n > 8) throw ParseError("E_n needs n in {6,7,8}");
  const std::size_t un = std::size_t(n);
  IntMatrix g(un, un);
  for (std::size_t i = 0; i < un; ++i) g(i, i) = -2;
  auto join = [&](int a, int b) {
    g(std::size_t(a - 1), std::size_t(b - 1)) = 1;
    g(std::size_t(b - 1), std::size_t(a - 1)) = 1;
  };
  join(1, 3);
  join(3, 4);
  join(2, 4);
  for (int a = 4; a < n; ++a) join(a, a + 1);
  return g;
}

inline IntMatrix named_gram(const NamedLatticeExpr& e) {
  IntMatrix g(0, 0);
  for (const auto& a : e.atoms) {
    IntMatrix b;
    switch (a.kind) {
      case LatticeAtom::Kind::U: b = gram_U(); break;
      case LatticeAtom::Kind::A: b = gram_A(a.n); break;
      case LatticeAtom::Kind::E: b = gram_E(a.n); break;
      case LatticeAtom::Kind::Diag:
        if (a.k == 0) throw ParseError("<k> needs k nonzero");
        b = IntMatrix(1, 1);
        b(0, 0) = a.k;
        break;
      case LatticeAtom::Kind::Gram: b = a.block; break;
    }
    g = direct_sum(g, b);
  }
  return g;
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline Int parse_int(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw ParseError("expected integer in lattice expression");
  return Int(s.substr(start, i - start));
}

inline IntMatrix parse_gram_block(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != '[') throw ParseError("expected [[..]] after gram:");
  ++i;
  std::vector<std::vector<Int>> rows;
  for (;;) {
    skip_ws(s, i);
    if (i < s.size() && s[i] == ']') {
      ++i;
      break;
    }
    if (i >= s.size() || s[i] != '[') throw ParseError("expected row in gram block");
    ++i;
    std::vector<Int> row;
    for (;;) {
      row.push_back(parse_int(s, i));
      skip_ws(s, i);
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ']') {
        ++i;
        break;
      }
      throw ParseError("bad gram row");
    }
    rows.push_back(std::move(row));
    skip_ws(s, i);
    if (i < s.size() && s[i] == ',') ++i;
  }
  if (rows.empty()) throw ParseError("empty gram block");
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw ParseError("ragged gram block");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace detail

inline NamedLatticeExpr parse_lattice_expr(const std::string& text) {
  NamedLatticeExpr e;
  std::size_t i = 0;
  for (;;) {
    detail::skip_ws(text, i);
    if (i >= text.size()) break;
    LatticeAtom atom;
    if (text[i] == 'U') {
      atom.kind = LatticeAtom::Kind::U;
      ++i;
    } else if (text[i] == 'A') {
      ++i;
      atom.kind = LatticeAtom::Kind::A;
      atom.n = int(detail::parse_int(text, i));
    } else if (text[i] == 'E') {
      ++i;
      atom.kind = LatticeAtom::Kind::E;
      atom.n = int(detail::parse_int(text, i));
    } else if (text[i] == '<') {
      ++i;
      atom.kind = LatticeAtom::Kind::Diag;
      atom.k = detail::parse_int(text, i);
      detail::skip_ws(text, i);
      if (i >= text.size() || text[i] != '>') throw ParseError("expected '>'");
      ++i;
    } else if (text.compare(i, 5, "gram:") == 0) {
      i += 5;
      atom.kind = LatticeAtom::Kind::Gram;
      atom.block = detail::parse_gram_block(text, i);
      if (!atom.block.is_symmetric()) throw ParseError("gram block not symmetric");
    } else {
      throw ParseError("unknown lattice atom at '" + text.substr(i) + "'");
    }
    int mult = 1;
    detail::skip_ws(text, i);
    if (i < text.size() && text[i] == '^') {
      ++i;
      mult = int(detail::parse_int(text, i));
      if (mult < 1) throw ParseError("multiplicity must be positive");
    }
    for (int m = 0; m < mult; ++m) e.atoms.push_back(atom);
    detail::skip_ws(text, i);
    if (i >= text.size()) break;
    if (text[i] != '+') throw ParseError("expected '+' between atoms");
    ++i;
  }
  if (e.atoms.empty()) throw ParseError("empty lattice expression");
  return e;
}

inline std::string lattice_expr_string(const NamedLatticeExpr& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.atoms.size(); ++i) {
    if (i) os << "+";
    const auto& a = e.atoms[i];
    switch (a.kind) {
      case LatticeAtom::Kind::U: os << "U"; break;
      case LatticeAtom::Kind::A: os << "A" << a.n; break;
      case LatticeAtom::Kind::E: os << "E" << a.n; break;
      case LatticeAtom::Kind::Diag: os << "<" << a.k << ">"; break;
      case LatticeAtom::Kind::Gram: {
        os << "gram:[";
        for (std::size_t r = 0; r < a.block.rows(); ++r) {
          if (r) os << ",";
          os << "[";
          for (std::size_t c = 0; c < a.block.cols(); ++c) {
            if (c) os << ",";
            os << a.block(r, c);
          }
          os << "]";
        }
        os << "]";
        break;
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Discriminant group and form

// Nontrivial invariant factors of A_L = L*/L.
inline std::vector<Int> discriminant_group(const IntLattice& l) {
  if (!l.nondegenerate()) throw DegenerateLattice();
  SnfResult s = snf(l.gram());
  std::vector<Int> inv;
  for (std::size_t i = 0; i < s.s.rows(); ++i)
    if (s.s(i, i) > 1) inv.push_back(s.s(i, i));
  return inv;
}

inline Rat mod_frac(const Rat& x, int modulus) {
  // reduce into [0, modulus)
  Int num = numerator(x), den = denominator(x);
  Int m = Int(modulus) * den;
  Int r = num % m;
  if (r < 0) r += m;
  return Rat(r, den);
}

// Finite quadratic form on A_L: generator orders n_1 | ... | n_k plus the
// matrix of q-values (diagonal, mod 2Z) and bilinear values (mod Z).
class DiscriminantForm {
 public:
  DiscriminantForm() = default;
  DiscriminantForm(std::vector<Int> orders, RatMatrix q) : orders_(std::move(orders)), q_(std::move(q)) {
    normalize();
  }

  static DiscriminantForm of(const IntLattice& l) {
    if (!l.even()) throw OddLattice();
    if (!l.nondegenerate()) throw DegenerateLattice();
    const IntMatrix& g = l.gram();
    SnfResult s = snf(g);
    // generators of L*/L are the columns of (U G)^{-1} with order s_i > 1
    RatMatrix w = rat_inverse(to_rational(s.u * g));
    RatMatrix full = w.transposed() * to_rational(g) * w;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < s.s.rows(); ++i)
      if (s.s(i, i) > 1) keep.push_back(i);
    std::vector<Int> orders;
    RatMatrix q(keep.size(), keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) {
      orders.push_back(s.s(keep[a], keep[a]));
      for (std::size_t b = 0; b < keep.size(); ++b) q(a, b) = full(keep[a], keep[b]);
    }
    return DiscriminantForm(std::move(orders), std::move(q));
  }

  const std::vector<Int>& orders() const { return orders_; }
  std::size_t generator_count() const { return orders_.size(); }

  Int group_order() const {
    Int n = 1;
    for (const auto& o : orders_) n *= o;
    return n;
  }

  Rat q_value(std::size_t i) const { return q_(i, i); }
  Rat b_value(std::size_t i, std::size_t j) const { return q_(i, j); }

  DiscriminantForm negated() const {
    RatMatrix q = q_;
    for (std::size_t i = 0; i < q.rows(); ++i)
      for (std::size_t j = 0; j < q.cols(); ++j) q(i, j) = -q(i, j);
    return DiscriminantForm(orders_, std::move(q));
  }

  DiscriminantForm direct_sum_with(const DiscriminantForm& o) const {
    std::vector<Int> orders = orders_;
    orders.insert(orders.end(), o.orders_.begin(), o.orders_.end());
    std::size_t n = orders.size();
    RatMatrix q(n, n);
    for (std::size_t i = 0; i < orders_.size(); ++i)
      for (std::size_t j = 0; j < orders_.size(); ++j) q(i, j) = q_(i, j);
    for (std::size_t i = 0; i < o.orders_.size(); ++i)
      for (std::size_t j = 0; j < o.orders_.size(); ++j)
        q(orders_.size() + i, orders_.size() + j) = o.q_(i, j);
    return DiscriminantForm(std::move(orders), std::move(q));
  }

  // q of an arbitrary element given by generator coefficients, mod 2Z.
  Rat q_of(const std::vector<Int>& c) const {
    Rat v = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      v += Rat(c[i] * c[i]) * q_(i, i);
      for (std::size_t j = i + 1; j < orders_.size(); ++j)
        v += Rat(2 * c[i] * c[j]) * q_(i, j);
    }
    return mod_frac(v, 2);
  }

  Rat b_of(const std::vector<Int>& c, const std::vector<Int>& d) const {
    Rat v = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i)
      for (std::size_t j = 0; j < orders_.size(); ++j) v += Rat(c[i] * d[j]) * q_(i, j);
    return mod_frac(v, 1);
  }

 private:
  void normalize() {
    for (std::size_t i = 0; i < q_.rows(); ++i)
      for (std::size_t j = 0; j < q_.cols(); ++j) q_(i, j) = mod_frac(q_(i, j), i == j ? 2 : 1);
  }

  std::vector<Int> orders_;
  RatMatrix q_;  // diagonal: q mod 2Z; off-diagonal: b mod Z
};

inline DiscriminantForm discriminant_form(const IntLattice& l) { return DiscriminantForm::of(l); }

namespace detail {

inline std::vector<std::vector<Int>> group_elements(const std::vector<Int>& orders) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(orders.size(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < orders.size()) {
      if (++cur[i] < orders[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == orders.size()) break;
    if (out.size() > 100000) throw InvariantViolation("discriminant group too large");
  }
  return out;
}

inline Int element_order(const std::vector<Int>& c, const std::vector<Int>& orders) {
  Int o = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Int oi = orders[i] / gcd(orders[i], c[i]);
    o = o / gcd(o, oi) * oi;
  }
  return o;
}

}  // namespace detail

// Brute-force isomorphism of finite quadratic forms: match generator images
// preserving element orders, q-values, and pairwise bilinear values, then
// check the images generate. Discriminant groups in scope are tiny.
inline bool forms_isomorphic(const DiscriminantForm& f1, const DiscriminantForm& f2) {
  if (f1.group_order() != f2.group_order()) return false;
  auto o1 = f1.orders();
  auto o2 = f2.orders();
  if (o1 != o2) return false;  // invariant factors are canonical
  if (o1.empty()) return true;

  auto els = detail::group_elements(o2);
  const std::size_t k = o1.size();
  std::vector<std::vector<std::vector<Int>>> cands(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> gen(k, 0);
    gen[i] = 1;
    Rat qi = f1.q_of(gen);
    for (const auto& e : els) {
      if (detail::element_order(e, o2) != o1[i]) continue;
      if (f2.q_of(e) == qi) cands[i].push_back(e);
    }
    if (cands[i].empty()) return false;
  }

  std::vector<std::vector<Int>> img(k);
  std::vector<std::size_t> pick(k, 0);

  auto bilinear_ok = [&](std::size_t upto) {
    std::vector<Int> gi(k, 0), gj(k, 0);
    for (std::size_t j = 0; j < upto; ++j) {
      gi.assign(k, 0);
      gi[upto] = 1;
      gj.assign(k, 0);
      gj[j] = 1;
      if (f2.b_of(img[upto], img[j]) != f1.b_of(gi, gj)) return false;
    }
    return true;
  };

  std::size_t level = 0;
  for (;;) {
    if (pick[level] == cands[level].size()) {
      if (level == 0) return false;
      pick[level] = 0;
      --level;
      ++pick[level];
      continue;
    }
    img[level] = cands[level][pick[level]];
    if (!bilinear_ok(level)) {
      ++pick[level];
      continue;
    }
    if (level + 1 < k) {
      ++level;
      continue;
    }
    // full candidate: check the images generate the group
    std::vector<std::vector<Int>> seen;
    for (const auto& coef : detail::group_elements(o1)) {
      std::vector<Int> e(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t t = 0; t < k; ++t) e[t] = (e[t] + coef[i] * img[i][t]) % o2[t];
      seen.push_back(e);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    if (Int(seen.size()) == f2.group_order()) return true;
    ++pick[level];
  }
}

// ---------------------------------------------------------------------------
// Nikulin criteria in the K3 lattice (signature (3,19), rank 22)

struct NikulinReport {
  Signature sig;
  std::size_t rank = 0;
  std::size_t l_a = 0;       // minimal generator count of A_L
  Int cond_neg = 0;          // 19 - t_-
  Int cond_pos = 0;          // 3 - t_+
  Int corank = 0;            // 22 - rank
  bool ok = false;

  std::string render() const {
    std::ostringstream os;
    os << "19-t_-=" << cond_neg << (cond_neg >= 0 ? ">=0" : "<0") << ", 3-t_+=" << cond_pos
       << (cond_pos >= 0 ? ">=0" : "<0") << ", 22-rk=" << corank
       << (corank > Int(l_a) ? ">" : "<=") << l_a << "=l(A)";
    return os.str();
  }
};

// Corollary 1.12.3 conditions for a primitive embedding into the K3 lattice;
// condition (1) holds automatically since 3 - 19 = -16 = 0 mod 8.
inline NikulinReport nikulin_primitive_check(const IntLattice& l) {
  NikulinReport r;
  r.sig = l.sig();
  r.rank = l.rank();
  r.l_a = discriminant_group(l).size();
  r.cond_neg = Int(19) - Int(r.sig.neg);
  r.cond_pos = Int(3) - Int(r.sig.pos);
  r.corank = Int(22) - Int(r.rank);
  r.ok = r.cond_neg >= 0 && r.cond_pos >= 0 && r.corank > Int(r.l_a);
  return r;
}

// Certifies t = orthogonal complement of s in the K3 lattice: both primitive
// (Nikulin), ranks sum to 22, signatures sum to (3,19), q_s = -q_t.
inline bool orthogonal_pair_check(const IntLattice& s, const IntLattice& t) {
  if (!s.even() || !t.even()) return false;
  if (!nikulin_primitive_check(s).ok || !nikulin_primitive_check(t).ok) return false;
  if (s.rank() + t.rank() != 22) return false;
  Signature ss = s.sig(), st = t.sig();
  if (ss.pos + st.pos != 3 || ss.neg + st.neg != 19) return false;
  return forms_isomorphic(discriminant_form(s), discriminant_form(t).negated());
}

// ---------------------------------------------------------------------------
// Certificates

struct BasisCertificate {
  IntMatrix p;  // columns express the new basis in the source basis
  NamedLatticeExpr target;
};

inline bool verify_certificate(const IntLattice& l, const BasisCertificate& cert) {
  if (cert.p.rows() != l.rank() || cert.p.cols() != l.rank())
    throw DimensionMismatch("certificate shape");
  if (abs(det(cert.p)) != 1) return false;
  return congruence(l.gram(), cert.p) == named_gram(cert.target);
}

inline bool invariants_match(const IntLattice& l, const NamedLatticeExpr& expr) {
  IntLattice named{named_gram(expr)};
  if (l.rank() != named.rank()) return false;
  if (l.sig() != named.sig()) return false;
  if (l.discriminant() != named.discriminant()) return false;
  if (l.even() != named.even()) return false;
  if (!l.even()) return true;  // discriminant form only defined for even lattices
  return forms_isomorphic(discriminant_form(l), discriminant_form(named));
}

// ---------------------------------------------------------------------------
// U-splitting by bounded isotropic search

struct USplit {
  IntMatrix p;             // unimodular: columns e, f, then complement basis
  IntMatrix complement;    // Gram of the orthogonal complement of U
};

// Finds a hyperbolic pair (e,f) with e^2 = f^2 = 0, e.f = 1 and splits
// L = U + U^perp. Deterministic search over vectors of growing support with
// coefficients in [-bound, bound]; returns nothing when the search exhausts.
inline std::optional<USplit> split_off_U(const IntLattice& l, int bound = 5,
                                         std::size_t max_support = 3) {
  const IntMatrix& g = l.gram();
  const std::size_t n = l.rank();
  if (n < 3) return std::nullopt;

  auto try_vector = [&](const std::vector<Int>& e) -> std::optional<USplit> {
    // e isotropic & primitive, with gcd of pairings 1 so e.f = 1 is solvable
    std::vector<Int> ge = g * e;
    Int content = 0;
    for (const auto& x : ge) content = gcd(content, abs(x));
    if (content != 1) return std::nullopt;
    // find f0 with <e, f0> = 1 by extended gcd over the pairing vector:
    // solve ge . f0 = 1 via HNF of the row
    IntMatrix row(1, n);
    for (std::size_t i = 0; i < n; ++i) row(0, i) = ge[i];
    HnfResult h = hnf(row.transposed());  // h.h = h.u * ge^T, pivot = gcd = 1
    std::vector<Int> f0(n);
    for (std::size_t i = 0; i < n; ++i) f0[i] = h.u(0, i);
    Int pair = 0;
    for (std::size_t i = 0; i < n; ++i) pair += ge[i] * f0[i];
    if (pair == -1)
      for (auto& x : f0) x = -x;
    else if (pair != 1)
      return std::nullopt;
    // adjust f = f0 + t e so f^2 = 0 (even lattice: f0^2 is even)
    Int f0sq = 0;
    std::vector<Int> gf0 = g * f0;
    for (std::size_t i = 0; i < n; ++i) f0sq += gf0[i] * f0[i];
    if (f0sq % 2 != 0) return std::nullopt;
    Int t = -f0sq / 2;
    std::vector<Int> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = f0[i] + t * e[i];
    // complement = kernel of the two pairing rows
    IntMatrix rows(2, n);
    std::vector<Int> gf = g * f;
    for (std::size_t i = 0; i < n; ++i) {
      rows(0, i) = ge[i];
      rows(1, i) = gf[i];
    }
    IntMatrix k = kernel_basis(rows);
    if (k.cols() != n - 2) return std::nullopt;
    IntMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      p(i, 0) = e[i];
      p(i, 1) = f[i];
      for (std::size_t c = 0; c + 2 < n; ++c) p(i, c + 2) = k(i, c);
    }
    if (abs(det(p)) != 1) return std::nullopt;
    IntMatrix full = congruence(g, p);
    IntMatrix comp(n - 2, n - 2);
    for (std::size_t i = 0; i + 2 < n; ++i)
      for (std::size_t j = 0; j + 2 < n; ++j) comp(i, j) = full(i + 2, j + 2);
    USplit out{std::move(p), std::move(comp)};
    return out;
  };

  auto isotropic = [&](const std::vector<Int>& e) {
    Int v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (e[j] == 0) continue;
        v += e[i] * g(i, j) * e[j];
      }
    }
    return v == 0;
  };

  std::vector<Int> e(n, 0);
  std::vector<std::size_t> support;
  std::optional<USplit> found;

  auto enumerate_support = [&](auto&& self, std::size_t pos) -> bool {
    if (found) return true;
    if (pos == support.size()) {
      // leading nonzero coefficient positive to halve the search
      if (e[support[0]] <= 0) return false;
      if (!isotropic(e)) return false;
      Int c = 0;
      for (auto s : support) c = gcd(c, abs(e[s]));
      if (c != 1) return false;
      found = try_vector(e);
      return found.has_value();
    }
    for (int v = -bound; v <= bound; ++v) {
      if (v == 0) continue;
      e[support[pos]] = v;
      if (self(self, pos + 1)) return true;
    }
    e[support[pos]] = 0;
    return false;
  };

  auto choose = [&](auto&& self, std::size_t start, std::size_t left) -> bool {
    if (left == 0) return enumerate_support(enumerate_support, 0);
    for (std::size_t i = start; i + left <= n; ++i) {
      support.push_back(i);
      if (self(self, i + 1, left - 1)) return true;
      support.pop_back();
      e[i] = 0;
    }
    return false;
  };

  for (std::size_t sz = 1; sz <= std::min(max_support, n); ++sz) {
    support.clear();
    std::fill(e.begin(), e.end(), 0);
    if (choose(choose, 0, sz)) break;
  }
  return found;
}

// ---------------------------------------------------------------------------
// Root complements in E8 (Nishiyama Lemma 4.3 style)

enum class RootType { A1, A2 };

// Orthogonal complement of a primitive A1 / A2 embedded in E8 (simple-root
// span), computed via the saturated kernel of the pairing rows.
inline IntLattice e8_complement(RootType root) {
  IntMatrix g = gram_E(8);
  // Bourbaki adjacency: nodes 3 and 4 are joined, so (e3, e4) spans an A2.
  std::size_t count = root == RootType::A1 ? 1 : 2;
  IntMatrix rows(count, 8);
  std::vector<std::size_t> idx = root == RootType::A1 ? std::vector<std::size_t>{0}
                                                      : std::vector<std::size_t>{2, 3};
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < 8; ++c) rows(r, c) = g(idx[r], c);
  IntMatrix k = kernel_basis(rows);
  return IntLattice{congruence(g, k)};
}

}  // namespace toricdual
