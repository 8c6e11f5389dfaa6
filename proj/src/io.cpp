#include "topmin/io.hpp"

#include <fstream>
#include <sstream>

namespace topmin {

namespace {

Json vertex_json(const Vertex& v) { return v.is_integer() ? Json(v.as_integer()) : Json(v.as_string()); }

Json simplex_json(const Simplex& s) {
  Json a = Json::array();
  for (const auto& v : s.vertices()) a.push_back(vertex_json(v));
  return a;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_at(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<int>();
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimplicialComplex complex_from_json(const Json& doc) {
  std::string name;
  if (doc.is_object() && doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("field \"name\": expected a string");
    name = doc["name"].get<std::string>();
  }
  const Json& facets = field(doc, "facets");
  if (!facets.is_array()) throw ParseError("field \"facets\": expected an array");
  std::vector<std::vector<Vertex>> faces;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string where = "facets[" + std::to_string(i) + "]";
    if (!facets[i].is_array() || facets[i].empty()) throw ParseError(where + ": expected a nonempty array of vertices");
    std::vector<Vertex> face;
    for (std::size_t j = 0; j < facets[i].size(); ++j) {
      const auto& v = facets[i][j];
      if (v.is_number_integer()) {
        face.emplace_back(v.get<std::int64_t>());
      } else if (v.is_string()) {
        face.emplace_back(v.get<std::string>());
      } else {
        throw ParseError(where + "[" + std::to_string(j) + "]: vertex must be an integer or a string");
      }
    }
    try {
      faces.push_back(Simplex(face).vertices());
    } catch (const TopologyError&) {
      throw ParseError(where + ": malformed facet " + facets[i].dump() + " (repeated vertex)");
    }
  }
  return SimplicialComplex::from_facets(faces, name);
}

Json complex_to_json(const SimplicialComplex& k) {
  Json doc;
  doc["name"] = k.name();
  Json facets = Json::array();
  for (const auto& f : k.facets()) facets.push_back(simplex_json(f));
  doc["facets"] = facets;
  return doc;
}

std::string serialize_complex(const SimplicialComplex& k) { return complex_to_json(k).dump() + "\n"; }

SimplicialComplex parse_complex_text(const std::string& text) { return complex_from_json(parse_text(text)); }

SimplicialComplex parse_complex(const std::filesystem::path& path) {
  try {
    return parse_complex_text(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_complex(const SimplicialComplex& k, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << serialize_complex(k);
}

SurfaceConfiguration configuration_from_json(const Json& doc) {
  SurfaceConfiguration c;
  c.skeleton.tetrahedra = int_at(field(doc, "tets"), "tets");
  const Json& gluings = doc.contains("gluings") ? doc["gluings"] : Json::array();
  if (!gluings.is_array()) throw ParseError("field \"gluings\": expected an array");
  for (std::size_t i = 0; i < gluings.size(); ++i) {
    const std::string where = "gluings[" + std::to_string(i) + "]";
    const auto& g = gluings[i];
    if (!g.is_array() || g.size() != 5 || !g[4].is_array() || g[4].size() != 3)
      throw ParseError(where + ": expected [tA, fA, tB, fB, [p0, p1, p2]]");
    FaceGluing fg;
    fg.tet_a = int_at(g[0], where + "[0]");
    fg.face_a = int_at(g[1], where + "[1]");
    fg.tet_b = int_at(g[2], where + "[2]");
    fg.face_b = int_at(g[3], where + "[3]");
    for (int j = 0; j < 3; ++j) fg.perm[j] = int_at(g[4][j], where + "[4]");
    c.skeleton.gluings.push_back(fg);
  }
  const Json& pieces = field(doc, "pieces");
  if (!pieces.is_array()) throw ParseError("field \"pieces\": expected an array");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string where = "pieces[" + std::to_string(i) + "]";
    const auto& p = pieces[i];
    if (!p.is_array() || p.size() != 3 || !p[1].is_string()) throw ParseError(where + ": expected [tet, \"KIND\", multiplicity]");
    auto kind = parse_kind(p[1].get<std::string>());
    if (!kind) throw ParseError(where + ": unknown piece kind " + p[1].dump());
    c.pieces.push_back({int_at(p[0], where + "[0]"), *kind, int_at(p[2], where + "[2]")});
  }
  try {
    c.validate();
  } catch (const TopologyError& e) {
    throw ParseError(e.what());
  }
  return c;
}

Json configuration_to_json(const SurfaceConfiguration& config) {
  Json doc;
  doc["tets"] = config.skeleton.tetrahedra;
  Json gl = Json::array();
  for (const auto& g : config.skeleton.gluings)
    gl.push_back(Json::array({g.tet_a, g.face_a, g.tet_b, g.face_b, Json::array({g.perm[0], g.perm[1], g.perm[2]})}));
  doc["gluings"] = gl;
  Json ps = Json::array();
  for (const auto& p : config.pieces) ps.push_back(Json::array({p.tet, std::string(kind_name(p.kind)), p.multiplicity}));
  doc["pieces"] = ps;
  return doc;
}

SurfaceConfiguration parse_configuration(const std::filesystem::path& path) {
  try {
    return configuration_from_json(parse_text(read_file(path)));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json to_json(const AbelianGroup& g) {
  Json t = Json::array();
  for (const auto& d : g.torsion) t.push_back(d.str());
  return Json{{"rank", g.rank}, {"torsion", t}};
}

Json to_json(const HomologyProfile& p) {
  Json groups = Json::array();
  for (const auto& g : p.groups()) groups.push_back(to_json(g));
  return Json{{"empty_complex", p.is_empty_marker()}, {"groups", groups}};
}

Json to_json(const HomologyIndex& idx) {
  Json j{{"tag", idx.is_zero() ? "ZERO" : idx.is_index() ? "INDEX" : "ACYCLIC"}};
  if (idx.is_index()) j["n"] = *idx.value();
  return j;
}

Json to_json(const MilnorReport& r) {
  Json agrees = Json::array();
  for (bool a : r.agrees) agrees.push_back(a);
  return Json{{"left", r.left_name},       {"right", r.right_name},
              {"direct", to_json(r.direct)}, {"via_formula", to_json(r.via_formula)},
              {"identity_rule", r.identity_rule}, {"agrees", agrees},
              {"pass", r.pass}};
}

Json to_json(const LocalPiece& piece) {
  Json arcs = Json::array();
  for (const auto& f : piece.face_arcs)
    arcs.push_back(Json{{"normal", Json::array({f.normal[0], f.normal[1], f.normal[2]})},
                        {"returning", f.returning},
                        {"loops", f.loops}});
  Json weights = Json::array();
  for (int w : piece.edge_weights) weights.push_back(w);
  return Json{{"kind", std::string(piece.name())},
              {"edge_weights", weights},
              {"weight", piece.weight()},
              {"face_arcs", arcs},
              {"euler", piece.euler},
              {"declared_index", to_json(piece.declared_index)},
              {"model_complex", complex_to_json(piece.model_complex)}};
}

Json to_json(const IndexSumReport& r) {
  Json local = Json::array();
  for (const auto& i : r.local) local.push_back(to_json(i));
  return Json{{"global", to_json(r.global)}, {"summed", to_json(r.summed)}, {"local", local}, {"pass", r.pass}};
}

Json to_json(const MatchingVerdict& v) {
  Json res = Json::array();
  for (const auto& r : v.residuals) res.push_back(Json::array({r[0], r[1], r[2]}));
  return Json{{"pass", v.pass}, {"residuals", res}};
}

Json to_json(const DichotomyWitness& w) {
  Json j{{"verdict", std::string(verdict_name(w.verdict))},
         {"index_x", to_json(w.index_x)},
         {"index_y", to_json(w.index_y)},
         {"candidates_examined", w.candidates_examined},
         {"monotonicity_violations", w.monotonicity_violations}};
  if (w.tau) {
    j["tau"] = simplex_json(*w.tau);
    j["tau_dimension"] = w.tau_dimension;
    j["index_v"] = to_json(*w.index_v);
  }
  j["profile_x"] = to_json(w.profile_x);
  j["profile_y"] = to_json(w.profile_y);
  return j;
}

Json to_json(const Width& w) {
  Json a = Json::array();
  for (const auto& p : w.pairs()) a.push_back(Json::array({p.neg_chi, p.weight}));
  return a;
}

Json to_json(const CubicalComplex& k) {
  Json cells = Json::array();
  for (const auto& b : k.cells()) cells.push_back(Json{{"dim", b.dimension()}, {"lo", b.lo}, {"hi", b.hi}});
  Json counts = Json::array();
  for (auto c : k.cell_counts()) counts.push_back(c);
  return Json{{"ambient_dimension", k.ambient_dimension()},
              {"denominators", k.denominators()},
              {"cell_counts", counts},
              {"cells", cells}};
}

Json to_json(const CellPoset& p) {
  Json cells = Json::array();
  for (const auto& c : p.cells) cells.push_back(Json{{"dim", c.dimension}, {"label", c.label}, {"facets", c.facets}});
  Json counts = Json::array();
  for (auto c : p.cell_counts()) counts.push_back(c);
  return Json{{"cell_counts", counts}, {"cells", cells}};
}

}  // namespace topmin
