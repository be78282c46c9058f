#pragma once

// JSON (de)serialization for polytope files and coupling-pair files.

#include <fstream>
#include <limits>
#include <string>

#include <json.hpp>

#include "toricdual/duality.hpp"

namespace toricdual {

using json = nlohmann::json;

inline json int_to_json(const Int& v) {
  if (v > Int(std::numeric_limits<std::int64_t>::max()) ||
      v < Int(std::numeric_limits<std::int64_t>::min()))
    return v.str();  // decimal string fallback for out-of-range values
  return static_cast<std::int64_t>(v);
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("expected integer");
}

inline json point_to_json(const Point3& p) {
  return json::array({int_to_json(p[0]), int_to_json(p[1]), int_to_json(p[2])});
}

inline Point3 point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("point must be [x,y,z]");
  return {int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2])};
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array");
  IntMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != m.cols()) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = int_from_json(j[i][c]);
  }
  return m;
}

// ---- polytope files: {"vertices": [[x,y,z],...]} ----

inline Polytope3 polytope_from_json(const json& j) {
  if (!j.contains("vertices")) throw ParseError("polytope file needs \"vertices\"");
  std::vector<Point3> pts;
  for (const auto& p : j.at("vertices")) pts.push_back(point_from_json(p));
  return Polytope3::hull(pts);
}

inline json polytope_to_json(const Polytope3& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(point_to_json(v));
  return json{{"vertices", verts}};
}

inline Polytope3 load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return polytope_from_json(j);
}

// ---- pair files ----

inline json side_spec_to_json(const SideSpec& s) {
  json j;
  if (s.weights) {
    json w = json::array();
    for (int i = 0; i < 4; ++i) w.push_back(int_to_json(s.weights->a[std::size_t(i)]));
    w.push_back(int_to_json(s.weights->d));
    j["weights"] = std::move(w);
    json basis = json::array();
    for (const auto& b : s.basis) {
      json row = json::array();
      for (const auto& x : b) row.push_back(int_to_json(x));
      basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
    json monos = json::array();
    for (const auto& m : s.monomials) {
      json row = json::array();
      for (const auto& x : m) row.push_back(int_to_json(x));
      monos.push_back(std::move(row));
    }
    j["monomials"] = std::move(monos);
  } else {
    json verts = json::array();
    for (const auto& v : s.vertices) verts.push_back(point_to_json(v));
    j["vertices"] = std::move(verts);
  }
  return j;
}

inline SideSpec side_spec_from_json(const json& j) {
  SideSpec s;
  if (j.contains("weights")) {
    const auto& w = j.at("weights");
    if (!w.is_array() || w.size() != 5) throw ParseError("weights must be [a0,a1,a2,a3,d]");
    WeightSystem ws;
    for (std::size_t i = 0; i < 4; ++i) ws.a[i] = int_from_json(w[i]);
    ws.d = int_from_json(w[4]);
    for (const auto& ai : ws.a)
      if (ai <= 0) throw ParseError("weights must be positive");
    s.weights = ws;
    for (const auto& b : j.at("basis")) {
      if (b.size() != 4) throw ParseError("basis vectors are 4-vectors");
      std::array<Int, 4> v;
      for (std::size_t i = 0; i < 4; ++i) v[i] = int_from_json(b[i]);
      s.basis.push_back(v);
    }
    for (const auto& m : j.at("monomials")) {
      if (m.size() != 4) throw ParseError("monomials are exponent quadruples");
      std::array<Int, 4> v;
      for (std::size_t i = 0; i < 4; ++i) v[i] = int_from_json(m[i]);
      s.monomials.push_back(v);
    }
  } else if (j.contains("vertices")) {
    for (const auto& p : j.at("vertices")) s.vertices.push_back(point_from_json(p));
  } else {
    throw ParseError("side needs weights+basis+monomials or vertices");
  }
  return s;
}

inline json expected_to_json(const ExpectedSide& e) {
  if (e.expr) return lattice_expr_string(*e.expr);
  json j;
  j["rank"] = e.rank;
  j["abs_disc"] = int_to_json(e.abs_disc);
  if (e.sig) j["signature"] = json::array({e.sig->pos, e.sig->neg});
  if (!e.inv_factors.empty()) {
    json f = json::array();
    for (const auto& x : e.inv_factors) f.push_back(int_to_json(x));
    j["inv_factors"] = std::move(f);
  }
  return j;
}

inline ExpectedSide expected_from_json(const json& j) {
  ExpectedSide e;
  if (j.is_string()) {
    e.expr = parse_lattice_expr(j.get<std::string>());
    IntLattice l{named_gram(*e.expr)};
    e.rank = l.rank();
    e.abs_disc = abs(l.discriminant());
    e.sig = l.sig();
    return e;
  }
  e.rank = j.at("rank").get<std::size_t>();
  e.abs_disc = int_from_json(j.at("abs_disc"));
  if (j.contains("signature")) {
    Signature s;
    s.pos = j.at("signature")[0].get<std::size_t>();
    s.neg = j.at("signature")[1].get<std::size_t>();
    s.zero = 0;
    e.sig = s;
  }
  if (j.contains("inv_factors"))
    for (const auto& x : j.at("inv_factors")) e.inv_factors.push_back(int_from_json(x));
  return e;
}

inline json pair_to_json(const CouplingPair& p) {
  json j;
  j["id"] = p.id;
  j["delta"] = side_spec_to_json(p.delta.spec);
  j["delta_prime"] = side_spec_to_json(p.delta_prime.spec);
  j["expected"] = {{"pic_delta", expected_to_json(p.delta.expected)},
                   {"pic_delta_prime", expected_to_json(p.delta_prime.expected)}};

  auto side_extras = [&](const PairSide& s, const std::string& name) {
    if (!s.paper_rays.empty()) {
      json rays = json::array();
      for (const auto& r : s.paper_rays) rays.push_back(point_to_json(r));
      j["rays"][name] = std::move(rays);
      json notes;
      notes["duplicates"] = s.ray_duplicates;
      notes["usable"] = s.rays_usable;
      notes["repaired"] = s.rays_repaired;
      j["ray_notes"][name] = std::move(notes);
    }
    if (!s.d2.empty()) {
      json d2 = json::array();
      for (const auto& v : s.d2)
        d2.push_back(v ? int_to_json(*v) : json(nullptr));
      j["d2"][name] = std::move(d2);
    }
  };
  side_extras(p.delta, "delta");
  side_extras(p.delta_prime, "delta_prime");

  if (!p.certificates.empty()) {
    json certs = json::array();
    for (const auto& c : p.certificates) {
      json jc;
      jc["side"] = c.side;
      json br = json::array();
      for (auto i : c.basis_rays) br.push_back(i);
      jc["basis_rays"] = std::move(br);
      jc["p"] = matrix_to_json(c.p);
      jc["target"] = lattice_expr_string(c.target);
      certs.push_back(std::move(jc));
    }
    j["certificates"] = std::move(certs);
  }
  return j;
}

inline CouplingPair pair_from_json(const json& j) {
  CouplingPair p;
  p.id = j.at("id").get<std::string>();
  p.delta.spec = side_spec_from_json(j.at("delta"));
  p.delta_prime.spec = side_spec_from_json(j.at("delta_prime"));
  if (j.contains("expected")) {
    p.delta.expected = expected_from_json(j.at("expected").at("pic_delta"));
    p.delta_prime.expected = expected_from_json(j.at("expected").at("pic_delta_prime"));
  }
  auto side_extras = [&](PairSide& s, const std::string& name) {
    if (j.contains("rays") && j.at("rays").contains(name))
      for (const auto& r : j.at("rays").at(name)) s.paper_rays.push_back(point_from_json(r));
    if (j.contains("ray_notes") && j.at("ray_notes").contains(name)) {
      const auto& n = j.at("ray_notes").at(name);
      s.ray_duplicates = n.value("duplicates", 0);
      s.rays_usable = n.value("usable", true);
      s.rays_repaired = n.value("repaired", false);
    }
    if (j.contains("d2") && j.at("d2").contains(name))
      for (const auto& v : j.at("d2").at(name))
        s.d2.push_back(v.is_null() ? std::optional<Int>{} : std::optional<Int>{int_from_json(v)});
  };
  side_extras(p.delta, "delta");
  side_extras(p.delta_prime, "delta_prime");
  if (j.contains("certificates")) {
    for (const auto& jc : j.at("certificates")) {
      PairCertificate c;
      c.side = jc.at("side").get<std::string>();
      if (c.side != "delta" && c.side != "delta_prime")
        throw ParseError("certificate side must be delta or delta_prime");
      for (const auto& i : jc.at("basis_rays")) c.basis_rays.push_back(i.get<std::size_t>());
      c.p = matrix_from_json(jc.at("p"));
      c.target = parse_lattice_expr(jc.at("target").get<std::string>());
      p.certificates.push_back(std::move(c));
    }
  }
  // structural invariants
  auto validate_side = [](const PairSide& s) {
    if (s.spec.from_monomials()) {
      const auto& w = *s.spec.weights;
      for (const auto& m : s.spec.monomials) {
        Int deg = 0;
        for (std::size_t i = 0; i < 4; ++i) deg += w.a[i] * m[i];
        if (deg != w.d) throw MonomialDegreeMismatch();
      }
    }
  };
  validate_side(p.delta);
  validate_side(p.delta_prime);
  return p;
}

inline CouplingPair load_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return pair_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad pair file: ") + e.what());
  }
}

}  // namespace toricdual
