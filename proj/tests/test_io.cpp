#include <catch_amalgamated.hpp>

#include <unistd.h>

#include <fstream>

#include "topmin/io.hpp"
#include "topmin/random_corpus.hpp"

using namespace topmin;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_complex_text(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::string config_error(const std::string& text) {
  try {
    configuration_from_json(Json::parse(text));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / ("topmin_io_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("complex parse example") {
  auto k = parse_complex_text(R"({"name":"s0","facets":[[1],[2]]})");
  CHECK(k.name() == "s0");
  CHECK(k == SimplicialComplex::from_facets({{1}, {2}}));
  CHECK(homology_index(k) == HomologyIndex::index(1));
}

TEST_CASE("canonical text sorts vertices and facets") {
  auto k = parse_complex_text(R"({"name":"k","facets":[["b",2],[3,1],["a"]]})");
  CHECK(serialize_complex(k) == "{\"name\":\"k\",\"facets\":[[1,3],[2,\"b\"],[\"a\"]]}\n");
  CHECK(parse_complex_text(serialize_complex(k)) == k);
}

TEST_CASE("malformed complexes name the offending field") {
  CHECK(parse_error(R"({"name":"k","facets":[[1,1]]})").find("[1,1]") != std::string::npos);
  CHECK(parse_error("not json").find("invalid JSON") != std::string::npos);
  CHECK(parse_error(R"({"name":"k"})").find("\"facets\"") != std::string::npos);
  CHECK(parse_error(R"({"name":"k","facets":[[1.5]]})").find("vertex must be") != std::string::npos);
  CHECK(parse_error(R"({"name":"k","facets":[[]]})").find("nonempty") != std::string::npos);
  CHECK(parse_error(R"([1,2])").find("object") != std::string::npos);
  CHECK_THROWS_AS(parse_complex("/nonexistent/topmin.json"), ParseError);
}

TEST_CASE("write then parse round-trips random complexes") {
  TempDir dir;
  Rng rng(81);
  for (int i = 0; i < 50; ++i) {
    auto k = random_shaped_complex(rng, 7, 3, "r" + std::to_string(i));
    auto file = dir.path / ("k" + std::to_string(i) + ".json");
    write_complex(k, file);
    auto back = parse_complex(file);
    CHECK(back == k);
    CHECK(back.name() == k.name());
    CHECK(serialize_complex(back) == serialize_complex(k));
  }
}

TEST_CASE("configuration parse and round trip") {
  auto c = configuration_from_json(Json::parse(
      R"({"tets":2,"gluings":[[0,3,1,3,[0,2,1]]],"pieces":[[0,"QUAD_1",1],[1,"QUAD_2",2],[1,"OCT_1",1]]})"));
  CHECK(c.skeleton.tetrahedra == 2);
  REQUIRE(c.skeleton.gluings.size() == 1);
  CHECK(c.skeleton.gluings[0].perm == std::array<int, 3>{0, 2, 1});
  REQUIRE(c.pieces.size() == 3);
  CHECK(c.pieces[1].kind == PieceKind::Quad2);
  CHECK(c.pieces[1].multiplicity == 2);
  auto again = configuration_from_json(configuration_to_json(c));
  CHECK(configuration_to_json(again) == configuration_to_json(c));
}

TEST_CASE("malformed configurations are rejected with the field named") {
  CHECK(config_error(R"({"tets":1,"gluings":[],"pieces":[[0,"HEPTAGON",1]]})").find("unknown piece kind") !=
        std::string::npos);
  CHECK(config_error(R"({"tets":1,"gluings":[[0,1]],"pieces":[]})").find("gluings") != std::string::npos);
  CHECK(config_error(R"({"tets":1,"gluings":[]})").find("\"pieces\"") != std::string::npos);
  // A lone tetrahedron needs no gluings.
  CHECK(config_error(R"({"tets":1,"pieces":[[0,"TRI_0",1]]})").empty());
  CHECK(config_error(R"({"tets":1,"gluings":[],"pieces":[[0,"TRI_0"]]})").find("pieces") != std::string::npos);
  CHECK_FALSE(config_error(R"({"tets":1,"gluings":[[0,1,0,1,[0,1,2]]],"pieces":[]})").empty());
}

TEST_CASE("report JSON carries the documented keys") {
  auto idx = to_json(HomologyIndex::index(2));
  CHECK(idx["tag"] == "INDEX");
  auto grp = to_json(AbelianGroup::make(1, {BigInt(2)}));
  CHECK(grp["rank"] == 1);
  CHECK(grp["torsion"].size() == 1);
  auto milnor = to_json(verify_milnor(sphere(0), sphere(0)));
  for (const char* key : {"direct", "via_formula", "agrees", "pass"}) CHECK(milnor.contains(key));
  SurfaceConfiguration c;
  c.skeleton.tetrahedra = 1;
  c.pieces = {{0, PieceKind::Oct1, 1}};
  auto sum = to_json(verify_index_sum(c));
  for (const char* key : {"global", "summed", "local", "pass"}) CHECK(sum.contains(key));
  auto dual = to_json(dual_cells(simplex_complex(Simplex{1, 2})));
  CHECK(dual["cell_counts"] == Json::array({1}));
  auto cube = to_json(subdivide_cube(1, {1}));
  for (const char* key : {"ambient_dimension", "denominators", "cell_counts", "cells"}) CHECK(cube.contains(key));
  CHECK(to_json(Width({{2, 5}, {0, 4}})) == Json::parse("[[2,5],[0,4]]"));
}
