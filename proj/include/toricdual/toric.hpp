#pragma once

// Fans from maximal triangulations of reflexive polytopes, toric intersection
// products restricted to the anticanonical K3, and Picard Gram extraction.

#include <algorithm>
#include <map>
#include <vector>

#include "toricdual/polytope.hpp"

namespace toricdual {

class Fan3 {
 public:
  // Fan whose rays are all nonzero lattice points of `ray_poly` (reflexive),
  // with each facet maximally triangulated. `preferred_order` fixes the
  // leading ray indices (used to pin a paper's numbering); remaining rays
  // follow in lexicographic order.
  static Fan3 over(const Polytope3& ray_poly,
                   std::span<const Point3> preferred_order = {}) {
    return Fan3(ray_poly, preferred_order);
  }

  const std::vector<Point3>& rays() const { return rays_; }
  const Polytope3& ray_polytope() const { return poly_; }
  const std::vector<std::array<std::size_t, 3>>& cones3() const { return cones3_; }

  bool has_cone2(std::size_t i, std::size_t j) const {
    return walls_.count(key(i, j)) != 0;
  }

  std::vector<std::array<std::size_t, 2>> cones2() const {
    std::vector<std::array<std::size_t, 2>> out;
    out.reserve(walls_.size());
    for (const auto& [k, v] : walls_) out.push_back(k);
    return out;
  }

  std::size_t ray_index(const Point3& p) const {
    auto it = std::find(rays_.begin(), rays_.end(), p);
    if (it == rays_.end()) throw InvariantViolation("ray not in fan");
    return std::size_t(it - rays_.begin());
  }

  bool smooth() const {
    for (const auto& c : cones3_)
      if (abs(det3(rays_[c[0]], rays_[c[1]], rays_[c[2]])) != 1) return false;
    return true;
  }

  // Dual-basis covector of ray i inside a smooth 3-cone containing it.
  Point3 cone_covector(const std::array<std::size_t, 3>& cone, std::size_t i) const {
    std::array<std::size_t, 2> others{};
    int t = 0;
    for (auto r : cone)
      if (r != i) others[t++] = r;
    Point3 c = cross(rays_[others[0]], rays_[others[1]]);
    Int s = dot(c, rays_[i]);
    if (abs(s) != 1) throw NotSimplicialOrSmooth();
    if (s < 0) c = {-c[0], -c[1], -c[2]};
    return c;
  }

  const std::array<std::size_t, 3>& any_cone_with(std::size_t i) const {
    for (const auto& c : cones3_)
      if (c[0] == i || c[1] == i || c[2] == i) return c;
    throw InvariantViolation("ray in no cone");
  }

  // The two 3-cones glued along the wall {i, j}.
  const std::array<std::array<std::size_t, 3>, 2>& wall_cones(std::size_t i,
                                                              std::size_t j) const {
    auto it = walls_.find(key(i, j));
    if (it == walls_.end()) throw InvariantViolation("not a wall");
    return it->second;
  }

 private:
  static std::array<std::size_t, 2> key(std::size_t i, std::size_t j) {
    return i < j ? std::array<std::size_t, 2>{i, j} : std::array<std::size_t, 2>{j, i};
  }

  Fan3(const Polytope3& ray_poly, std::span<const Point3> preferred_order) : poly_(ray_poly) {
    std::vector<Point3> pts;
    for (const auto& p : poly_.lattice_points())
      if (p != Point3{0, 0, 0}) pts.push_back(p);
    if (!preferred_order.empty()) {
      for (const auto& p : preferred_order) {
        if (std::find(pts.begin(), pts.end(), p) == pts.end())
          throw InvariantViolation("preferred ray not a lattice point");
        if (std::find(rays_.begin(), rays_.end(), p) != rays_.end())
          throw InvariantViolation("duplicate preferred ray");
        rays_.push_back(p);
      }
    }
    for (const auto& p : pts)
      if (std::find(rays_.begin(), rays_.end(), p) == rays_.end()) rays_.push_back(p);

    for (std::size_t f = 0; f < poly_.facets().size(); ++f) {
      auto tris = triangulate_facet(f);
      for (const auto& t : tris) {
        std::array<std::size_t, 3> c{ray_index(t[0]), ray_index(t[1]), ray_index(t[2])};
        std::sort(c.begin(), c.end());
        cones3_.push_back(c);
      }
    }
    std::sort(cones3_.begin(), cones3_.end());

    std::map<std::array<std::size_t, 2>, std::vector<std::array<std::size_t, 3>>> acc;
    for (const auto& c : cones3_) {
      acc[key(c[0], c[1])].push_back(c);
      acc[key(c[0], c[2])].push_back(c);
      acc[key(c[1], c[2])].push_back(c);
    }
    for (auto& [k, v] : acc) {
      if (v.size() != 2) throw InvariantViolation("wall not shared by exactly two cones");
      walls_[k] = {v[0], v[1]};
    }
  }

  // Full triangulation of one facet by placing insertion: every lattice point
  // of the facet becomes a vertex, so each triangle is empty, hence
  // unimodular in its plane (the facet sits at lattice distance 1).
  std::vector<std::array<Point3, 3>> triangulate_facet(std::size_t f) const {
    const auto& hs = poly_.facets()[f];
    std::vector<Point3> fp;
    for (const auto& p : rays_)
      if (dot(hs.normal, p) == -hs.offset) fp.push_back(p);
    std::sort(fp.begin(), fp.end());

    auto orient = [&](const Point3& a, const Point3& b, const Point3& c) {
      return det3(sub(b, a), sub(c, a), hs.normal);
    };

    std::vector<std::array<Point3, 3>> tris;
    std::vector<Point3> collinear_prefix;
    for (const auto& p : fp) {
      if (tris.empty()) {
        if (collinear_prefix.size() < 2) {
          collinear_prefix.push_back(p);
          continue;
        }
        if (orient(collinear_prefix[0], collinear_prefix[1], p) == 0) {
          collinear_prefix.push_back(p);
          continue;
        }
        // order the collinear chain along the line, then fan from p
        std::sort(collinear_prefix.begin(), collinear_prefix.end());
        for (std::size_t i = 0; i + 1 < collinear_prefix.size(); ++i) {
          const Point3 &a = collinear_prefix[i], &b = collinear_prefix[i + 1];
          if (orient(a, b, p) > 0)
            tris.push_back({a, b, p});
          else
            tris.push_back({a, p, b});
        }
        continue;
      }
      insert_point(tris, p, orient);
    }
    if (tris.empty()) throw InvariantViolation("facet triangulation failed");
    return tris;
  }

  template <typename Orient>
  static void insert_point(std::vector<std::array<Point3, 3>>& tris, const Point3& p,
                           Orient orient) {
    // interior / on-edge / outside cases
    for (std::size_t t = 0; t < tris.size(); ++t) {
      auto [a, b, c] = tris[t];
      Int o1 = orient(a, b, p), o2 = orient(b, c, p), o3 = orient(c, a, p);
      if (o1 > 0 && o2 > 0 && o3 > 0) {
        tris.erase(tris.begin() + long(t));
        tris.push_back({a, b, p});
        tris.push_back({b, c, p});
        tris.push_back({c, a, p});
        return;
      }
    }
    bool split = false;
    for (std::size_t t = 0; t < tris.size();) {
      auto [a, b, c] = tris[t];
      Int o1 = orient(a, b, p), o2 = orient(b, c, p), o3 = orient(c, a, p);
      if (o1 == 0 && o2 > 0 && o3 > 0 && between(a, b, p)) {
        tris.erase(tris.begin() + long(t));
        tris.push_back({a, p, c});
        tris.push_back({p, b, c});
        split = true;
        continue;
      }
      if (o2 == 0 && o1 > 0 && o3 > 0 && between(b, c, p)) {
        tris.erase(tris.begin() + long(t));
        tris.push_back({b, p, a});
        tris.push_back({p, c, a});
        split = true;
        continue;
      }
      if (o3 == 0 && o1 > 0 && o2 > 0 && between(c, a, p)) {
        tris.erase(tris.begin() + long(t));
        tris.push_back({c, p, b});
        tris.push_back({p, a, b});
        split = true;
        continue;
      }
      ++t;
    }
    if (split) return;
    // outside: cone over visible boundary edges
    std::map<std::pair<Point3, Point3>, int> edge_count;
    std::vector<std::pair<Point3, Point3>> oriented;
    for (const auto& t : tris)
      for (int k = 0; k < 3; ++k) {
        Point3 a = t[std::size_t(k)], b = t[std::size_t((k + 1) % 3)];
        oriented.push_back({a, b});
        auto lo = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        edge_count[lo] += 1;
      }
    for (const auto& [a, b] : oriented) {
      auto lo = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      if (edge_count[lo] != 1) continue;
      if (orient(a, b, p) < 0) tris.push_back({b, a, p});
    }
  }

  static bool between(const Point3& a, const Point3& b, const Point3& p) {
    Point3 d1 = sub(b, a), d2 = sub(p, a);
    if (cross(d1, d2) != Point3{0, 0, 0}) return false;
    Int t = dot(d2, d1);
    return t > 0 && t < dot(d1, d1);
  }

  Polytope3 poly_;
  std::vector<Point3> rays_;
  std::vector<std::array<std::size_t, 3>> cones3_;
  std::map<std::array<std::size_t, 2>, std::array<std::array<std::size_t, 3>, 2>> walls_;
};

// MPCP fan of the Fano toric 3-fold of a reflexive polytope: rays are all
// nonzero lattice points of the polar dual, facets maximally triangulated.
inline Fan3 mpcp_fan(const Polytope3& delta) {
  if (!delta.is_reflexive()) throw NotReflexive();
  return Fan3::over(delta.polar_dual());
}

inline bool check_smooth(const Fan3& fan) { return fan.smooth(); }

// The three relations sum_i <v_i, e_j> D_i = 0 (coefficients = ray coords).
inline std::array<std::vector<Int>, 3> divisor_relations(const Fan3& fan) {
  std::array<std::vector<Int>, 3> rel;
  for (int j = 0; j < 3; ++j) {
    rel[std::size_t(j)].reserve(fan.rays().size());
    for (const auto& v : fan.rays()) rel[std::size_t(j)].push_back(v[std::size_t(j)]);
  }
  return rel;
}

// Triple products D_i.D_j.D_k on the smooth toric 3-fold. Distinct rays give
// cone indicators; repeated indices are reduced with a dual-basis covector.
class TripleProducts {
 public:
  explicit TripleProducts(const Fan3& fan) : fan_(fan) {
    if (!fan.smooth()) throw NotSimplicialOrSmooth();
  }

  Int operator()(std::size_t i, std::size_t j, std::size_t k) const {
    std::array<std::size_t, 3> s{i, j, k};
    std::sort(s.begin(), s.end());
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    Int v = compute(s);
    memo_.emplace(s, v);
    return v;
  }

  // D_i . D_j restricted to the anticanonical K3 = D_i D_j (sum_k D_k).
  Int restricted(std::size_t i, std::size_t j) const {
    if (i == j) return restricted_self(i);
    if (!fan_.has_cone2(i, j)) return 0;
    return 2 + (*this)(i, i, j) + (*this)(i, j, j);
  }

  Int restricted_self(std::size_t i) const {
    Int total = 0;
    for (std::size_t k = 0; k < fan_.rays().size(); ++k) total += (*this)(i, i, k);
    return total;
  }

 private:
  Int compute(std::array<std::size_t, 3> s) const {
    const auto& rays = fan_.rays();
    if (s[0] != s[1] && s[1] != s[2]) {
      const auto& c3 = fan_.cones3();
      return std::binary_search(c3.begin(), c3.end(), s) ? 1 : 0;
    }
    if (s[0] == s[2]) {  // all equal
      std::size_t x = s[0];
      auto cone = fan_.any_cone_with(x);
      Point3 m = fan_.cone_covector(cone, x);
      Int total = 0;
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (r == x) continue;
        Int cf = dot(m, rays[r]);
        if (cf != 0) total -= cf * (*this)(r, x, x);
      }
      return total;
    }
    std::size_t x = (s[0] == s[1]) ? s[0] : s[1];
    std::size_t y = (s[0] == s[1]) ? s[2] : s[0];
    if (!fan_.has_cone2(x, y)) return 0;
    const auto& wc = fan_.wall_cones(x, y);
    Point3 m = fan_.cone_covector(wc[0], x);
    std::size_t opp = 0;
    for (auto r : wc[1])
      if (r != x && r != y) opp = r;
    return -dot(m, rays[opp]);
  }

  const Fan3& fan_;
  mutable std::map<std::array<std::size_t, 3>, Int> memo_;
};

// Self-intersection from the dual-face formula D^2 = 2 l(F) - 2, where F is
// the face of `delta` dual to the minimal face of delta* containing ray i.
inline Int self_intersection(const Fan3& fan, std::size_t i, const Polytope3& delta) {
  const Polytope3& P = fan.ray_polytope();
  const Point3& v = fan.rays()[i];
  switch (P.classify(v)) {
    case PointClass::vertex:
      return 2 * dual_facet_interior_count(delta, v) - 2;
    case PointClass::edge_interior: {
      // endpoints of the edge of P containing v
      for (const auto& e : P.edges()) {
        const Point3 &a = P.vertices()[e.a], &b = P.vertices()[e.b];
        Point3 d1 = sub(b, a), d2 = sub(v, a);
        if (cross(d1, d2) == Point3{0, 0, 0}) {
          Int t = dot(d2, d1);
          if (t > 0 && t < dot(d1, d1))
            return 2 * dual_edge_interior_count(delta, a, b) - 2;
        }
      }
      throw InvariantViolation("edge containing ray not found");
    }
    default:
      throw FacetInteriorRay();
  }
}

inline Int pairwise_intersection(const Fan3& fan, std::size_t i, std::size_t j) {
  if (i == j) throw InvariantViolation("pairwise_intersection needs distinct rays");
  return TripleProducts(fan).restricted(i, j);
}

struct RestrictedIntersection {
  std::vector<std::size_t> rays;   // fan ray indices that are not facet-interior
  IntMatrix gram_full;             // intersection form over those rays
  std::vector<std::size_t> basis;  // indices into `rays` of the chosen basis
  IntMatrix gram_basis;            // rho x rho
};

// Intersection lattice of the toric divisors restricted to the anticanonical
// K3. Facet-interior rays restrict to zero and are excluded; the basis drops
// the lexicographically first triple of rays forming a unimodular matrix
// (those three are eliminated by the divisor relations).
inline RestrictedIntersection picard_gram(const Fan3& fan, const Polytope3& delta) {
  if (toric_contribution(delta) != 0) throw NontrivialToricContribution();
  const Polytope3& P = fan.ray_polytope();
  RestrictedIntersection out;
  for (std::size_t i = 0; i < fan.rays().size(); ++i)
    if (P.classify(fan.rays()[i]) != PointClass::facet_interior) out.rays.push_back(i);

  TripleProducts tp(fan);
  const std::size_t n = out.rays.size();
  out.gram_full = IntMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    out.gram_full(a, a) = self_intersection(fan, out.rays[a], delta);
    for (std::size_t b = a + 1; b < n; ++b) {
      Int x = tp.restricted(out.rays[a], out.rays[b]);
      out.gram_full(a, b) = x;
      out.gram_full(b, a) = x;
    }
  }

  const std::size_t rho = n - 3;
  bool picked = false;
  for (std::size_t i = 0; i < n && !picked; ++i)
    for (std::size_t j = i + 1; j < n && !picked; ++j)
      for (std::size_t k = j + 1; k < n && !picked; ++k) {
        IntMatrix M(3, 3);
        for (int c = 0; c < 3; ++c) {
          M(0, std::size_t(c)) = fan.rays()[out.rays[i]][std::size_t(c)];
          M(1, std::size_t(c)) = fan.rays()[out.rays[j]][std::size_t(c)];
          M(2, std::size_t(c)) = fan.rays()[out.rays[k]][std::size_t(c)];
        }
        if (abs(det(M)) == 1) {
          for (std::size_t t = 0; t < n; ++t)
            if (t != i && t != j && t != k) out.basis.push_back(t);
          picked = true;
        }
      }
  if (!picked) throw NoUnimodularComplement();

  out.gram_basis = IntMatrix(rho, rho);
  for (std::size_t a = 0; a < rho; ++a)
    for (std::size_t b = 0; b < rho; ++b)
      out.gram_basis(a, b) = out.gram_full(out.basis[a], out.basis[b]);
  return out;
}

struct PicardNumberCheck {
  Int rho_rays;     // #(non-facet-interior rays) - 3 + L0
  Int rho_formula;  // the edge/vertex count formula as printed
};

inline PicardNumberCheck picard_number_check(const Fan3& fan, const Polytope3& delta) {
  const Polytope3& P = fan.ray_polytope();
  Int nfi = 0;
  for (const auto& r : fan.rays())
    if (P.classify(r) != PointClass::facet_interior) ++nfi;
  Int l0 = toric_contribution(delta);
  Int edge_pts = 0;
  for (const auto& e : delta.edges()) edge_pts += e.interior_points;
  return {nfi - 3 + l0, edge_pts + Int(delta.vertices().size()) + l0 - 3};
}

}  // namespace toricdual
