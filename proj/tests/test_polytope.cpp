#include <catch2/catch_amalgamated.hpp>

#include "toricdual/polytope.hpp"

using namespace toricdual;

namespace {

std::vector<Point3> cube_corners() {
  std::vector<Point3> pts;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) pts.push_back({Int(x), Int(y), Int(z)});
  return pts;
}

std::vector<Point3> octahedron() {
  return {{Int(1), Int(0), Int(0)},  {Int(-1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)},
          {Int(0), Int(-1), Int(0)}, {Int(0), Int(0), Int(1)},  {Int(0), Int(0), Int(-1)}};
}

std::vector<Point3> pts3(std::initializer_list<std::array<int, 3>> raw) {
  std::vector<Point3> out;
  for (const auto& p : raw) out.push_back({Int(p[0]), Int(p[1]), Int(p[2])});
  return out;
}

}  // namespace

TEST_CASE("hull of the cube") {
  Polytope3 cube = Polytope3::hull(cube_corners());
  CHECK(cube.vertices().size() == 8);
  CHECK(cube.facets().size() == 6);
  CHECK(cube.edges().size() == 12);

  auto with_origin = cube_corners();
  with_origin.push_back({Int(0), Int(0), Int(0)});
  CHECK(Polytope3::hull(with_origin) == cube);
}

TEST_CASE("hull rejects degenerate input") {
  CHECK_THROWS_AS(Polytope3::hull(pts3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}})),
                  DegenerateInput);
  CHECK_THROWS_AS(Polytope3::hull(pts3({{0, 0, 0}, {3, 0, 0}})), DegenerateInput);
}

TEST_CASE("five-vertex hull from a section-3 ray list") {
  // the five rays of the rank-2 family in the 35-37 row
  Polytope3 p =
      Polytope3::hull(pts3({{-1, 0, 0}, {0, 0, 1}, {2, 4, -1}, {1, -1, 0}, {1, 2, 0}}));
  CHECK(p.vertices().size() == 5);
  CHECK(p.is_reflexive());
}

TEST_CASE("polar dual cube <-> octahedron") {
  Polytope3 cube = Polytope3::hull(cube_corners());
  Polytope3 octa = Polytope3::hull(octahedron());
  CHECK(cube.polar_dual() == octa);
  CHECK(octa.polar_dual() == cube);
}

TEST_CASE("polar dual of the fundamental simplex") {
  Polytope3 p = Polytope3::hull(pts3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}));
  Polytope3 d = p.polar_dual();
  // all dual vertex coordinates are -1 or 3
  for (const auto& v : d.vertices())
    for (const auto& c : v) CHECK((c == -1 || c == 3));
  CHECK(d.vertices().size() == 4);
}

TEST_CASE("polar dual requires interior origin") {
  std::vector<Point3> shifted;
  for (const auto& p : cube_corners()) shifted.push_back({p[0] + 2, p[1], p[2]});
  CHECK_THROWS_AS(Polytope3::hull(shifted).polar_dual(), OriginNotInterior);
}

TEST_CASE("non-integral polar dual is reported, not thrown") {
  // doubled cube: dual vertices would be (+-1/2, ...)
  std::vector<Point3> doubled;
  for (const auto& p : cube_corners()) doubled.push_back({2 * p[0], 2 * p[1], 2 * p[2]});
  Polytope3 p = Polytope3::hull(doubled);
  auto r = p.polar_dual_checked();
  CHECK_FALSE(r.integral);
  CHECK_FALSE(p.is_reflexive());
  CHECK_THROWS_AS(p.polar_dual(), NotReflexive);
}

TEST_CASE("reflexivity") {
  CHECK(Polytope3::hull(cube_corners()).is_reflexive());
  // an extra interior point also breaks reflexivity
  Polytope3 big = Polytope3::hull(
      pts3({{3, 0, 0}, {-3, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
  CHECK_FALSE(big.is_reflexive());
}

TEST_CASE("lattice point classification") {
  Polytope3 cube = Polytope3::hull(cube_corners());
  const auto& pts = cube.lattice_points();
  CHECK(pts.size() == 27);
  int vertex = 0, edge = 0, facet = 0, body = 0;
  for (const auto& p : pts) {
    switch (cube.classify(p)) {
      case PointClass::vertex: ++vertex; break;
      case PointClass::edge_interior: ++edge; break;
      case PointClass::facet_interior: ++facet; break;
      case PointClass::body_interior: ++body; break;
    }
  }
  CHECK(vertex == 8);
  CHECK(edge == 12);
  CHECK(facet == 6);
  CHECK(body == 1);
}

TEST_CASE("edge and facet interior counts") {
  // box with edges (0,0,0)-(3,0,0) etc: gcd 3 means two interior points
  Polytope3 box = Polytope3::hull(pts3({{0, 0, 0},
                                        {3, 0, 0},
                                        {0, 1, 0},
                                        {3, 1, 0},
                                        {0, 0, 1},
                                        {3, 0, 1},
                                        {0, 1, 1},
                                        {3, 1, 1}}));
  int long_edges = 0;
  for (const auto& e : box.edges()) {
    if (e.interior_points == 2)
      ++long_edges;
    else
      CHECK(e.interior_points == 0);
  }
  CHECK(long_edges == 4);

  Polytope3 cube = Polytope3::hull(cube_corners());
  for (std::size_t f = 0; f < cube.facets().size(); ++f)
    CHECK(facet_interior_count(cube, f) == 1);
  for (const auto& e : cube.edges()) CHECK(e.interior_points == 0);  // all primitive
}

TEST_CASE("dual faces of the cube") {
  Polytope3 cube = Polytope3::hull(cube_corners());
  Polytope3 octa = cube.polar_dual();
  // cube vertex <-> unimodular octahedron facet
  for (const auto& v : cube.vertices()) CHECK(dual_facet_interior_count(octa, v) == 0);
  // cube edge <-> octahedron edge, both primitive
  for (const auto& e : cube.edges())
    CHECK(dual_edge_interior_count(octa, cube.vertices()[e.a], cube.vertices()[e.b]) == 0);
  // octahedron vertex <-> cube facet with one interior point
  for (const auto& v : octa.vertices()) CHECK(dual_facet_interior_count(cube, v) == 1);
}

TEST_CASE("toric contribution") {
  CHECK(toric_contribution(Polytope3::hull(cube_corners())) == 0);
  CHECK(toric_contribution(Polytope3::hull(octahedron())) == 0);

  // reflexive example with an edge interior point whose dual edge also has one
  Polytope3 p = Polytope3::hull(
      pts3({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {1, 1, -1}, {-1, -1, -1}}));
  REQUIRE(p.is_reflexive());
  CHECK(toric_contribution(p) == 1);

  Polytope3 q = Polytope3::hull(
      pts3({{2, 1, 0}, {-2, -1, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
  REQUIRE(q.is_reflexive());
  CHECK(toric_contribution(q) == 4);
}

TEST_CASE("GL(3,Z) polytope isomorphism") {
  Polytope3 cube = Polytope3::hull(cube_corners());
  auto self_iso = iso_gl3z(cube, cube);
  REQUIRE(self_iso.has_value());
  CHECK(*self_iso == IntMatrix::identity(3));

  Polytope3 octa = Polytope3::hull(octahedron());
  CHECK_FALSE(iso_gl3z(cube, octa).has_value());

  IntMatrix shear{{Int(1), Int(1), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}};
  std::vector<Point3> sheared;
  for (const auto& p : cube_corners()) {
    std::vector<Int> v = shear * std::vector<Int>{p[0], p[1], p[2]};
    sheared.push_back({v[0], v[1], v[2]});
  }
  Polytope3 q = Polytope3::hull(sheared);
  auto iso = iso_gl3z(cube, q);
  REQUIRE(iso.has_value());
  CHECK(iso_gl3z(q, cube).has_value());
  // the found map really carries vertices onto vertices
  std::vector<Point3> image;
  for (const auto& p : cube.vertices()) {
    std::vector<Int> v = *iso * std::vector<Int>{p[0], p[1], p[2]};
    image.push_back({v[0], v[1], v[2]});
  }
  std::sort(image.begin(), image.end());
  CHECK(image == q.vertices());
}

TEST_CASE("dual involution and counts on assorted reflexives") {
  std::vector<std::vector<Point3>> shapes = {
      cube_corners(),
      octahedron(),
      pts3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}),
      pts3({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {1, 1, -1}, {-1, -1, -1}}),
  };
  for (const auto& pts : shapes) {
    Polytope3 p = Polytope3::hull(pts);
    REQUIRE(p.is_reflexive());
    Polytope3 d = p.polar_dual();
    CHECK(d.polar_dual() == p);
    CHECK(p.vertices().size() == d.facets().size());
    CHECK(d.vertices().size() == p.facets().size());
    CHECK(p.edges().size() == d.edges().size());
    CHECK(toric_contribution(p) == toric_contribution(d));

    // classification partitions the enumeration
    std::size_t count = 0;
    for (const auto& q : p.lattice_points()) {
      (void)p.classify(q);
      ++count;
    }
    CHECK(count == p.lattice_points().size());
  }
}
