#pragma once

// Integral 3-polytopes with exact arithmetic: hulls, polar duals, face data,
// lattice-point enumeration, reflexivity, GL(3,Z) isomorphism.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <vector>

#include "toricdual/linalg.hpp"

namespace toricdual {

using Point3 = std::array<Int, 3>;

inline Int dot(const Point3& a, const Point3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Point3 sub(const Point3& a, const Point3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Point3 cross(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Int det3(const Point3& a, const Point3& b, const Point3& c) {
  return dot(a, cross(b, c));
}

inline Int content(const Point3& v) {
  return gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
}

inline Point3 primitive(const Point3& v) {
  Int g = content(v);
  if (g <= 1) return v;
  return {v[0] / g, v[1] / g, v[2] / g};
}

// Closed half-space <normal, x> >= -offset.
struct Halfspace {
  Point3 normal;
  Int offset;
  bool operator==(const Halfspace&) const = default;
  bool operator<(const Halfspace& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

struct Edge {
  std::size_t a, b;       // vertex indices, a < b
  Int interior_points;    // gcd(difference) - 1
};

enum class PointClass { vertex, edge_interior, facet_interior, body_interior };

class Polytope3 {
 public:
  // Convex hull of integer points; requires a full-dimensional span.
  static Polytope3 hull(std::span<const Point3> points) { return Polytope3(points); }
  static Polytope3 hull(const std::vector<Point3>& points) {
    return Polytope3(std::span<const Point3>(points));
  }

  const std::vector<Point3>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(const Point3& p) const {
    for (const auto& f : facets_)
      if (dot(f.normal, p) < -f.offset) return false;
    return true;
  }

  std::vector<std::size_t> active_facets(const Point3& p) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < facets_.size(); ++k)
      if (dot(facets_[k].normal, p) == -facets_[k].offset) out.push_back(k);
    return out;
  }

  PointClass classify(const Point3& p) const {
    auto af = active_facets(p);
    if (af.empty()) return PointClass::body_interior;
    if (af.size() == 1) return PointClass::facet_interior;
    for (std::size_t i = 0; i < af.size(); ++i)
      for (std::size_t j = i + 1; j < af.size(); ++j)
        for (std::size_t k = j + 1; k < af.size(); ++k)
          if (det3(facets_[af[i]].normal, facets_[af[j]].normal, facets_[af[k]].normal) != 0)
            return PointClass::vertex;
    return PointClass::edge_interior;
  }

  // All lattice points, lexicographically ordered (bounding-box scan).
  const std::vector<Point3>& lattice_points() const {
    if (!points_cached_) {
      Point3 lo = vertices_[0], hi = vertices_[0];
      for (const auto& v : vertices_)
        for (int i = 0; i < 3; ++i) {
          lo[i] = std::min(lo[i], v[i]);
          hi[i] = std::max(hi[i], v[i]);
        }
      for (Int x = lo[0]; x <= hi[0]; ++x)
        for (Int y = lo[1]; y <= hi[1]; ++y)
          for (Int z = lo[2]; z <= hi[2]; ++z) {
            Point3 p{x, y, z};
            if (contains(p)) points_.push_back(p);
          }
      points_cached_ = true;
    }
    return points_;
  }

  bool origin_interior() const {
    for (const auto& f : facets_)
      if (f.offset <= 0) return false;
    return true;
  }

  // Reflexive: origin is the unique interior lattice point and the polar dual
  // is integral (equivalently every facet lies at lattice distance 1).
  bool is_reflexive() const {
    if (!origin_interior()) return false;
    for (const auto& f : facets_)
      if (f.offset != 1) return false;
    for (const auto& p : lattice_points())
      if (classify(p) == PointClass::body_interior && p != Point3{0, 0, 0}) return false;
    return true;
  }

  struct DualResult {
    Polytope3 dual;
    bool integral;  // false when some dual vertex had to be scaled
  };

  // {y : <y,x> >= -1 for all x}; integral flag reports whether the raw dual
  // vertices n/offset were already integral.
  DualResult polar_dual_checked() const {
    if (!origin_interior()) throw OriginNotInterior();
    bool integral = true;
    std::vector<Point3> dv;
    dv.reserve(facets_.size());
    for (const auto& f : facets_) {
      // vertex of the dual is normal/offset
      if (f.offset == 1) {
        dv.push_back(f.normal);
      } else {
        integral = false;
        Point3 n = f.normal;
        if (content(n) % f.offset == 0)
          dv.push_back({n[0] / f.offset, n[1] / f.offset, n[2] / f.offset});
        else
          dv.push_back(n);  // placeholder; caller must treat as non-integral
      }
    }
    return {Polytope3(std::span<const Point3>(dv)), integral};
  }

  Polytope3 polar_dual() const {
    auto r = polar_dual_checked();
    if (!r.integral) throw NotReflexive("polar dual not integral");
    return std::move(r.dual);
  }

  bool operator==(const Polytope3& o) const { return vertices_ == o.vertices_; }

 private:
  explicit Polytope3(std::span<const Point3> points) {
    std::vector<Point3> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 4) throw DegenerateInput("need at least 4 distinct points");

    // facet candidates from all point triples, keyed by supporting plane
    std::vector<Halfspace> planes;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        for (std::size_t k = j + 1; k < pts.size(); ++k) {
          Point3 n = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
          if (n == Point3{0, 0, 0}) continue;
          n = primitive(n);
          Int off = dot(n, pts[i]);
          Halfspace key{n, off};
          planes.push_back(key);
        }
    std::sort(planes.begin(), planes.end());
    planes.erase(std::unique(planes.begin(), planes.end()), planes.end());

    std::vector<Halfspace> fs;
    for (const auto& pl : planes) {
      bool lo = true, hi = true;
      for (const auto& p : pts) {
        Int v = dot(pl.normal, p) - pl.offset;
        if (v < 0) lo = false;
        if (v > 0) hi = false;
        if (!lo && !hi) break;
      }
      // <n,x> >= offset for all points: store as (n, -offset)
      if (lo) fs.push_back({pl.normal, -pl.offset});
      // <n,x> <= offset: store as (-n, offset)
      if (hi) fs.push_back({{-pl.normal[0], -pl.normal[1], -pl.normal[2]}, pl.offset});
    }
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    facets_ = std::move(fs);
    if (facets_.size() < 4) throw DegenerateInput("affine span below dimension 3");

    for (const auto& p : pts)
      if (classify(p) == PointClass::vertex) vertices_.push_back(p);

    // edges: vertex pairs whose common active facets span rank 2, with no
    // third vertex in the open segment
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      auto ai = active_facets(vertices_[i]);
      for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
        auto aj = active_facets(vertices_[j]);
        std::vector<std::size_t> common;
        std::set_intersection(ai.begin(), ai.end(), aj.begin(), aj.end(),
                              std::back_inserter(common));
        if (common.size() < 2) continue;
        bool indep = false;
        for (std::size_t a = 0; a < common.size() && !indep; ++a)
          for (std::size_t b = a + 1; b < common.size() && !indep; ++b) {
            Point3 c = cross(facets_[common[a]].normal, facets_[common[b]].normal);
            if (c != Point3{0, 0, 0}) indep = true;
          }
        if (!indep) continue;
        bool blocked = false;
        Point3 d1 = sub(vertices_[j], vertices_[i]);
        for (std::size_t k = 0; k < vertices_.size() && !blocked; ++k) {
          if (k == i || k == j) continue;
          Point3 d2 = sub(vertices_[k], vertices_[i]);
          if (cross(d1, d2) == Point3{0, 0, 0}) {
            Int t = dot(d2, d1);
            if (t > 0 && t < dot(d1, d1)) blocked = true;
          }
        }
        if (!blocked) edges_.push_back({i, j, content(d1) - 1});
      }
    }
  }

  std::vector<Point3> vertices_;  // lexicographic
  std::vector<Halfspace> facets_;
  std::vector<Edge> edges_;
  mutable std::vector<Point3> points_;
  mutable bool points_cached_ = false;
};

// Interior lattice-point count of the facet with the given index.
inline Int facet_interior_count(const Polytope3& p, std::size_t facet) {
  const auto& f = p.facets()[facet];
  Int n = 0;
  for (const auto& q : p.lattice_points())
    if (dot(f.normal, q) == -f.offset && p.active_facets(q).size() == 1) ++n;
  return n;
}

// The dual face of a face of a reflexive polytope, reported as interior
// lattice-point count l(F*) (all the toric formulas need).
//
// vertex v of p        <-> facet {x in p* : <v,x> = -1}
// edge (a,b) of p      <-> edge of p* on facets a,b of p*
inline Int dual_facet_interior_count(const Polytope3& dual, const Point3& vertex) {
  Int n = 0;
  for (const auto& q : dual.lattice_points())
    if (dot(vertex, q) == -1 && dual.active_facets(q).size() == 1) ++n;
  return n;
}

inline Int dual_edge_interior_count(const Polytope3& dual, const Point3& a, const Point3& b) {
  std::vector<Point3> on;
  for (const auto& q : dual.lattice_points())
    if (dot(a, q) == -1 && dot(b, q) == -1) on.push_back(q);
  if (on.size() < 2) throw InvariantViolation("dual edge not found");
  return Int(on.size()) - 2;
}

// Toric contribution L0 = sum over edges G of l(G) * l(G*) (dual edge).
inline Int toric_contribution(const Polytope3& p) {
  if (!p.is_reflexive()) throw NotReflexive();
  Polytope3 dual = p.polar_dual();
  Int total = 0;
  for (const auto& e : p.edges()) {
    if (e.interior_points == 0) continue;
    total += e.interior_points *
             dual_edge_interior_count(dual, p.vertices()[e.a], p.vertices()[e.b]);
  }
  return total;
}

// Unimodular map sending the vertex set of p onto the vertex set of q, if one
// exists. Brute force over ordered vertex triples of q.
inline std::optional<IntMatrix> iso_gl3z(const Polytope3& p, const Polytope3& q) {
  const auto& vp = p.vertices();
  const auto& vq = q.vertices();
  if (vp.size() != vq.size()) return std::nullopt;

  std::array<std::size_t, 3> base{};
  Int dbase = 0;
  bool found = false;
  for (std::size_t i = 0; i < vp.size() && !found; ++i)
    for (std::size_t j = i + 1; j < vp.size() && !found; ++j)
      for (std::size_t k = j + 1; k < vp.size() && !found; ++k) {
        dbase = det3(vp[i], vp[j], vp[k]);
        if (dbase != 0) {
          base = {i, j, k};
          found = true;
        }
      }
  if (!found) return std::nullopt;

  IntMatrix A(3, 3);
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r) A(r, c) = vp[base[c]][r];
  RatMatrix Ainv = rat_inverse(to_rational(A));

  std::vector<Point3> sorted_vq = vq;  // already lex-sorted
  for (std::size_t i = 0; i < vq.size(); ++i)
    for (std::size_t j = 0; j < vq.size(); ++j)
      for (std::size_t k = 0; k < vq.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        if (abs(det3(vq[i], vq[j], vq[k])) != abs(dbase)) continue;
        RatMatrix B(3, 3);
        for (int r = 0; r < 3; ++r) {
          B(r, 0) = Rat(vq[i][r]);
          B(r, 1) = Rat(vq[j][r]);
          B(r, 2) = Rat(vq[k][r]);
        }
        RatMatrix Um = B * Ainv;
        bool integral = true;
        IntMatrix U(3, 3);
        for (int r = 0; r < 3 && integral; ++r)
          for (int c = 0; c < 3; ++c) {
            if (denominator(Um(r, c)) != 1) {
              integral = false;
              break;
            }
            U(r, c) = numerator(Um(r, c));
          }
        if (!integral || abs(det(U)) != 1) continue;
        std::vector<Point3> image;
        image.reserve(vp.size());
        for (const auto& v : vp) {
          Point3 w{};
          for (int r = 0; r < 3; ++r) w[r] = U(r, 0) * v[0] + U(r, 1) * v[1] + U(r, 2) * v[2];
          image.push_back(w);
        }
        std::sort(image.begin(), image.end());
        if (image == sorted_vq) return U;
      }
  return std::nullopt;
}

}  // namespace toricdual
