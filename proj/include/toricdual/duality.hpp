#pragma once

// Coupling-pair pipeline: weight-system/monomial ingestion, polytope duality,
// Picard lattices on both sides, the lattice-duality verdict, and the pair
// file format.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "toricdual/lattice.hpp"
#include "toricdual/toric.hpp"

namespace toricdual {

struct WeightSystem {
  std::array<Int, 4> a;
  Int d;
};

// Spec of one side's polytope: either monomials over a weight system with a
// chosen lattice basis, or raw vertices.
struct SideSpec {
  std::optional<WeightSystem> weights;
  std::vector<std::array<Int, 4>> basis;      // three 4-vectors spanning M_w
  std::vector<std::array<Int, 4>> monomials;  // exponent quadruples
  std::vector<Point3> vertices;               // alternative direct input

  bool from_monomials() const { return weights.has_value(); }
};

// Maps monomials W^e0 X^e1 Y^e2 Z^e3 of weighted degree d to lattice points
// (e_i - 1) expressed in the given basis of {x : sum a_i x_i = 0}.
inline Polytope3 monomials_to_polytope(const SideSpec& s) {
  if (!s.weights) return Polytope3::hull(s.vertices);
  const WeightSystem& w = *s.weights;
  if (s.basis.size() != 3) throw ParseError("basis must have three vectors");
  for (const auto& b : s.basis) {
    Int t = 0;
    for (int i = 0; i < 4; ++i) t += w.a[std::size_t(i)] * b[std::size_t(i)];
    if (t != 0) throw InvariantViolation("basis vector not in the weight lattice");
  }
  // solve B c = m over Z for each monomial point m (B is 4x3 of rank 3)
  RatMatrix B(4, 3);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 3; ++c) B(r, c) = Rat(s.basis[c][r]);

  std::vector<Point3> pts;
  pts.reserve(s.monomials.size());
  for (const auto& mono : s.monomials) {
    Int deg = 0;
    for (int i = 0; i < 4; ++i) deg += w.a[std::size_t(i)] * mono[std::size_t(i)];
    if (deg != w.d) throw MonomialDegreeMismatch();
    std::array<Int, 4> m;
    for (int i = 0; i < 4; ++i) m[std::size_t(i)] = mono[std::size_t(i)] - 1;

    // pick three independent rows, solve, then verify all four
    Point3 sol{};
    bool solved = false;
    for (std::size_t r0 = 0; r0 < 4 && !solved; ++r0)
      for (std::size_t r1 = r0 + 1; r1 < 4 && !solved; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < 4 && !solved; ++r2) {
          RatMatrix sq(3, 3);
          std::array<std::size_t, 3> rows{r0, r1, r2};
          for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) sq(i, j) = B(rows[i], j);
          RatMatrix inv;
          try {
            inv = rat_inverse(sq);
          } catch (const DegenerateLattice&) {
            continue;
          }
          std::vector<Rat> rhs{Rat(m[rows[0]]), Rat(m[rows[1]]), Rat(m[rows[2]])};
          std::vector<Rat> c = inv * rhs;
          bool ok = true;
          for (std::size_t r = 0; r < 4 && ok; ++r) {
            Rat lhs = 0;
            for (std::size_t j = 0; j < 3; ++j) lhs += B(r, j) * c[j];
            if (lhs != Rat(m[r])) ok = false;
          }
          for (std::size_t j = 0; j < 3 && ok; ++j)
            if (denominator(c[j]) != 1) ok = false;
          if (!ok) throw PointNotInBasisSpan();
          for (std::size_t j = 0; j < 3; ++j) sol[j] = numerator(c[j]);
          solved = true;
        }
    if (!solved) throw PointNotInBasisSpan();
    pts.push_back(sol);
  }
  return Polytope3::hull(pts);
}

// Expected identification of one side: a closed-form expression where Table 1
// prints one, otherwise the invariant tuple the paper establishes.
struct ExpectedSide {
  std::optional<NamedLatticeExpr> expr;
  std::size_t rank = 0;
  Int abs_disc = 0;
  std::optional<Signature> sig;
  std::vector<Int> inv_factors;
};

struct PairSide {
  SideSpec spec;
  ExpectedSide expected;
  std::vector<Point3> paper_rays;  // section-3 ray list (deduplicated), may be empty
  int ray_duplicates = 0;          // how many duplicates were dropped
  bool rays_usable = true;         // false when the printed list is inconsistent
  bool rays_repaired = false;      // true when obvious misprints were fixed
  std::vector<std::optional<Int>> d2;  // expected D_i^2 per printed ray
};

struct PairCertificate {
  std::string side;  // "delta" | "delta_prime"
  std::vector<std::size_t> basis_rays;  // 1-based indices into the paper ray list
  IntMatrix p;
  NamedLatticeExpr target;
};

struct CouplingPair {
  std::string id;
  PairSide delta, delta_prime;
  std::vector<PairCertificate> certificates;

  const PairSide& side(const std::string& name) const {
    if (name == "delta") return delta;
    if (name == "delta_prime") return delta_prime;
    throw ParseError("side must be delta or delta_prime");
  }
};

// ---------------------------------------------------------------------------

struct USplitInfo {
  std::size_t complement_rank = 0;
  Int complement_disc = 0;
  IntMatrix complement;
};

struct PicardReport {
  Int l0 = 0;
  bool l0_trivial = false;
  Int rho = 0;
  Int rho_formula = 0;  // the printed edge/vertex formula, reported verbatim
  IntMatrix gram_basis;
  Signature sig;
  Int disc = 0;
  std::vector<Int> disc_group;
  std::optional<NamedLatticeExpr> matched;
  std::optional<USplitInfo> u_split;

  std::size_t rank() const { return gram_basis.rows(); }
  IntLattice lattice() const { return IntLattice{gram_basis}; }
};

// Catalog of closed forms appearing in Table 1.
inline const std::vector<std::string>& named_catalog() {
  static const std::vector<std::string> cat = {
      "U",          "U+A1",        "U+A2",          "U+E6",        "U+E7",
      "U+A1+E7",    "U+A1+E8",     "U+A2+E8",       "U+E6+E8",     "U+E7+E8",
      "U+U+E8+E8",  "U+<2>+E8+E8", "U+<-2>+E8+E8",  "U+<4>+E8+E8", "U+<-4>+E8+E8",
      "<2>",        "<4>",         "gram:[[2,1],[1,-2]]"};
  return cat;
}

inline PicardReport analyze_family(const Polytope3& delta, int search_bound = 5) {
  if (!delta.is_reflexive()) throw NotReflexive();
  PicardReport rep;
  rep.l0 = toric_contribution(delta);
  rep.l0_trivial = rep.l0 == 0;
  if (!rep.l0_trivial) return rep;

  Fan3 fan = mpcp_fan(delta);
  RestrictedIntersection ri = picard_gram(fan, delta);
  PicardNumberCheck pn = picard_number_check(fan, delta);
  rep.rho = pn.rho_rays;
  rep.rho_formula = pn.rho_formula;
  rep.gram_basis = std::move(ri.gram_basis);
  IntLattice lat{rep.gram_basis};
  rep.sig = lat.sig();
  rep.disc = lat.discriminant();
  rep.disc_group = discriminant_group(lat);

  for (const auto& name : named_catalog()) {
    NamedLatticeExpr e = parse_lattice_expr(name);
    if (invariants_match(lat, e)) {
      rep.matched = e;
      break;
    }
  }
  if (rep.sig.pos == 1 && rep.rank() > 12) {
    if (auto split = split_off_U(lat, search_bound)) {
      USplitInfo info;
      info.complement = split->complement;
      info.complement_rank = info.complement.rows();
      info.complement_disc = det(info.complement);
      rep.u_split = std::move(info);
    }
  }
  return rep;
}

inline bool expected_matches(const PicardReport& rep, const ExpectedSide& exp) {
  IntLattice lat = rep.lattice();
  if (exp.expr) return invariants_match(lat, *exp.expr);
  if (lat.rank() != exp.rank) return false;
  if (abs(lat.discriminant()) != exp.abs_disc) return false;
  if (exp.sig && lat.sig() != *exp.sig) return false;
  if (!exp.inv_factors.empty() && discriminant_group(lat) != exp.inv_factors) return false;
  return true;
}

struct DualityVerdict {
  bool polytope_dual_ok = false;
  bool l0_trivial_ok = false;
  bool expected_match_ok = false;
  bool lattice_duality_ok = false;
  std::optional<bool> certificates_ok;
  PicardReport delta, delta_prime;

  bool all_ok() const {
    return polytope_dual_ok && l0_trivial_ok && expected_match_ok && lattice_duality_ok &&
           certificates_ok.value_or(true);
  }
};

// The intersection lattice over a paper ray list, in the paper's numbering.
// Duplicated printed entries collapse onto their first occurrence; the index
// map sends printed positions (0-based) to rows of gram_full.
struct PaperRoute {
  Fan3 fan;
  Polytope3 delta;
  RestrictedIntersection ri;
  std::vector<std::size_t> printed_to_row;
};

inline PaperRoute paper_route(const PairSide& side) {
  if (side.paper_rays.empty() || !side.rays_usable)
    throw InvariantViolation("paper ray list unusable");
  std::vector<Point3> dedup;
  std::vector<std::size_t> printed_to_row;
  for (const auto& r : side.paper_rays) {
    auto it = std::find(dedup.begin(), dedup.end(), r);
    if (it == dedup.end()) {
      printed_to_row.push_back(dedup.size());
      dedup.push_back(r);
    } else {
      printed_to_row.push_back(std::size_t(it - dedup.begin()));
    }
  }
  Polytope3 q = Polytope3::hull(dedup);
  for (const auto& r : dedup)
    if (q.classify(r) == PointClass::facet_interior)
      throw InvariantViolation("paper ray is facet-interior");
  Fan3 fan = Fan3::over(q, dedup);
  Polytope3 delta = q.polar_dual();
  RestrictedIntersection ri = picard_gram(fan, delta);
  for (std::size_t i = 0; i < dedup.size(); ++i)
    if (ri.rays[i] != i) throw InvariantViolation("paper rays not leading the gram");
  return {std::move(fan), std::move(delta), std::move(ri), std::move(printed_to_row)};
}

inline bool verify_pair_certificate(const PaperRoute& route, const PairCertificate& cert) {
  const std::size_t n = cert.basis_rays.size();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g(i, j) = route.ri.gram_full(route.printed_to_row.at(cert.basis_rays[i] - 1),
                                   route.printed_to_row.at(cert.basis_rays[j] - 1));
  return verify_certificate(IntLattice{g}, {cert.p, cert.target});
}

inline bool verify_pair_certificate(const CouplingPair& pair, const PairCertificate& cert) {
  PaperRoute route = paper_route(pair.side(cert.side));
  return verify_pair_certificate(route, cert);
}

inline DualityVerdict check_pair(const CouplingPair& pair, int search_bound = 5) {
  DualityVerdict v;
  Polytope3 d = monomials_to_polytope(pair.delta.spec);
  Polytope3 dp = monomials_to_polytope(pair.delta_prime.spec);

  v.polytope_dual_ok =
      d.is_reflexive() && dp.is_reflexive() && iso_gl3z(d.polar_dual(), dp).has_value();

  v.delta = analyze_family(d, search_bound);
  v.delta_prime = analyze_family(dp, search_bound);
  v.l0_trivial_ok = v.delta.l0_trivial && v.delta_prime.l0_trivial;
  if (!v.l0_trivial_ok) return v;

  v.expected_match_ok = expected_matches(v.delta, pair.delta.expected) &&
                        expected_matches(v.delta_prime, pair.delta_prime.expected);

  IntLattice s = v.delta.lattice();
  IntLattice t{direct_sum(gram_U(), v.delta_prime.gram_basis)};
  v.lattice_duality_ok = orthogonal_pair_check(s, t);

  if (!pair.certificates.empty()) {
    bool ok = true;
    std::optional<PaperRoute> routes[2];
    for (const auto& c : pair.certificates) {
      auto& route = routes[c.side == "delta" ? 0 : 1];
      if (!route) route = paper_route(pair.side(c.side));
      ok = verify_pair_certificate(*route, c) && ok;
    }
    v.certificates_ok = ok;
  }
  return v;
}

}  // namespace toricdual
