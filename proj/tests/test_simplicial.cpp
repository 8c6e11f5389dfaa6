#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "topmin/homology.hpp"
#include "topmin/random_corpus.hpp"
#include "topmin/simplicial_complex.hpp"

using namespace topmin;

namespace {

std::vector<Simplex> facets_of(std::initializer_list<std::initializer_list<Vertex>> list) {
  std::vector<Simplex> out;
  for (auto f : list) out.emplace_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex triangle_boundary() { return simplex_boundary(Simplex{1, 2, 3}); }

}  // namespace

TEST_CASE("from_facets drops duplicates and dominated faces") {
  auto k = SimplicialComplex::from_facets({{1, 2}, {2, 1}, {1}});
  CHECK(k.facets() == facets_of({{1, 2}}));
  CHECK(SimplicialComplex::from_facets({}).empty());
  auto a = SimplicialComplex::from_facets({{1, 2, 3}, {3, 4}});
  CHECK(a.facets() == facets_of({{1, 2, 3}, {3, 4}}));
}

TEST_CASE("from_facets rejects a repeated vertex and names the face") {
  try {
    SimplicialComplex::from_facets({{1, 2}, {3, 3}});
    FAIL("expected rejection");
  } catch (const TopologyError& e) {
    CHECK(std::string(e.what()).find("[3,3]") != std::string::npos);
  }
}

TEST_CASE("empty complex differs from a point") {
  SimplicialComplex empty;
  auto pt = point(1);
  CHECK(empty.empty());
  CHECK(empty.dimension() == -1);
  CHECK(empty.vertex_count() == 0);
  CHECK(empty != pt);
  CHECK(pt.dimension() == 0);
  CHECK(empty.euler_characteristic() == 0);
  CHECK(pt.euler_characteristic() == 1);
}

TEST_CASE("vertices are opaque tokens; integers sort before strings") {
  auto k = SimplicialComplex::from_facets({{"b", 2}, {"a", 10}});
  auto vs = k.vertices();
  REQUIRE(vs.size() == 4);
  CHECK(vs[0] == Vertex(2));
  CHECK(vs[1] == Vertex(10));
  CHECK(vs[2] == Vertex("a"));
  CHECK(vs[3] == Vertex("b"));
  CHECK(Simplex({"x", 1}).to_string() == "[1 x]");
}

TEST_CASE("join of two S0 is the 4-cycle") {
  auto a = SimplicialComplex::from_facets({{1}, {2}});
  auto b = SimplicialComplex::from_facets({{3}, {4}});
  CHECK(join(a, b).facets() == facets_of({{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
}

TEST_CASE("join with the empty complex is the identity") {
  auto a = SimplicialComplex::from_facets({{1, 2}, {2, 3, 4}});
  CHECK(join(a, SimplicialComplex{}).facets() == a.facets());
  CHECK(join(SimplicialComplex{}, a).facets() == a.facets());
}

TEST_CASE("join with a point is the cone") {
  auto a = triangle_boundary();
  CHECK(join(point("z"), a) == cone(a, "z"));
}

TEST_CASE("join rejects shared vertices; disjoint_join namespaces them") {
  auto a = SimplicialComplex::from_facets({{1}, {2}}, "a");
  try {
    join(a, a);
    FAIL("expected rejection");
  } catch (const TopologyError& e) {
    CHECK(std::string(e.what()).find("share vertex 1") != std::string::npos);
  }
  auto j = disjoint_join(a, a);
  CHECK(j.vertex_count() == 4);
  CHECK(j.facets().size() == 4);
  CHECK(j.name().find("relabeled") != std::string::npos);
}

TEST_CASE("cone examples") {
  auto solid = cone(triangle_boundary(), "z");
  CHECK(solid.facets().size() == 3);
  CHECK(homology_index(solid).is_acyclic());
  CHECK(cone(SimplicialComplex{}, "z") == point("z"));
  auto two = SimplicialComplex::from_facets({{1}, {2}});
  CHECK(cone(two, 3).facets() == facets_of({{1, 3}, {2, 3}}));
  CHECK_THROWS_AS(cone(two, 1), TopologyError);
}

TEST_CASE("link and star examples") {
  auto k = triangle_boundary();
  CHECK(link(k, Simplex{1}).facets() == facets_of({{2}, {3}}));
  CHECK(star(k, Simplex{1}).facets() == facets_of({{1, 2}, {1, 3}}));
  auto cycle = SimplicialComplex::from_facets({{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(link(cycle, Simplex{1, 3}).empty());
  CHECK_THROWS_AS(link(cycle, Simplex{1, 2}), TopologyError);
  CHECK_THROWS_AS(star(cycle, Simplex{9}), TopologyError);
}

TEST_CASE("closed star is the simplex joined with its link") {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    auto k = random_complex(rng, 7, 4, 6);
    for (const auto& f : k.facets()) {
      for (const auto& s : f.faces()) {
        CHECK(star(k, s) == join(simplex_complex(s), link(k, s)));
      }
    }
  }
}

TEST_CASE("barycentric subdivision examples") {
  auto sd = barycentric_subdivision(simplex_complex(Simplex{1, 2, 3}));
  CHECK(sd.f_vector() == std::vector<std::size_t>{7, 12, 6});
  auto pt = barycentric_subdivision(point(5));
  CHECK(pt.vertex_count() == 1);
  CHECK(pt.dimension() == 0);
  auto hexagon = barycentric_subdivision(triangle_boundary());
  CHECK(hexagon.f_vector() == std::vector<std::size_t>{6, 6});
  CHECK(oracle::components(hexagon) == 1);
  for (const auto& v : hexagon.vertices()) CHECK(link(hexagon, Simplex{v}).vertex_count() == 2);
}

TEST_CASE("subdivision preserves the Euler characteristic") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    auto k = random_complex(rng, 7, 4, 6);
    CHECK(barycentric_subdivision(k).euler_characteristic() == k.euler_characteristic());
  }
}

TEST_CASE("Euler characteristic matches an independent face count") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    auto k = random_complex(rng, 8, 5, 6);
    std::int64_t chi = 0;
    auto fs = oracle::faces(k);
    for (std::size_t d = 0; d < fs.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(fs[d].size());
    CHECK(k.euler_characteristic() == chi);
  }
}

TEST_CASE("facets form an antichain") {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    auto k = random_complex(rng, 8, 5, 8);
    for (const auto& a : k.facets())
      for (const auto& b : k.facets())
        if (a != b) CHECK_FALSE(a.is_face_of(b));
  }
}

TEST_CASE("join is commutative and associative on homology") {
  Rng rng(15);
  for (int i = 0; i < 25; ++i) {
    auto a = random_shaped_complex(rng, 4, 2, "a").relabeled("a");
    auto b = random_shaped_complex(rng, 4, 2, "b").relabeled("b");
    auto c = random_shaped_complex(rng, 4, 2, "c").relabeled("c");
    CHECK(join(a, b) == join(b, a));
    CHECK(reduced_homology(join(join(a, b), c)) == reduced_homology(join(a, join(b, c))));
  }
}

TEST_CASE("adjacency subcomplex examples") {
  auto x = SimplicialComplex::from_facets({{1}, {2}});
  auto path = SimplicialComplex::from_facets({{1, 3}, {3, 2}});
  CHECK(adjacency_subcomplex(x, path, Simplex{3}) == x);
  CHECK(adjacency_subcomplex(x, path, Simplex{1}) == x);
  auto one_sided = SimplicialComplex::from_facets({{1, 3}, {2}});
  CHECK(adjacency_subcomplex(x, one_sided, Simplex{3}) == point(1));
  CHECK_THROWS_AS(adjacency_subcomplex(path, x, Simplex{1}), TopologyError);
  CHECK_THROWS_AS(adjacency_subcomplex(x, path, Simplex{1, 2}), TopologyError);
}

TEST_CASE("adjacency subcomplex is monotone under faces") {
  Rng rng(16);
  for (int i = 0; i < 60; ++i) {
    auto [x, y] = random_full_pair(rng, 8, 3);
    for (const auto& f : y.facets()) {
      for (const auto& tau : f.faces()) {
        auto vt = adjacency_subcomplex(x, y, tau);
        for (const auto& sigma : tau.faces()) CHECK(vt.is_subcomplex_of(adjacency_subcomplex(x, y, sigma)));
      }
    }
  }
}

TEST_CASE("full subcomplex and induced subcomplex") {
  auto y = SimplicialComplex::from_facets({{1, 2, 3}, {3, 4}});
  CHECK(y.induced({1, 2}).is_full_subcomplex_of(y));
  auto not_full = SimplicialComplex::from_facets({{1}, {2}});
  CHECK(not_full.is_subcomplex_of(y));
  CHECK_FALSE(not_full.is_full_subcomplex_of(y));
}

TEST_CASE("spheres and the projective plane have the expected face counts") {
  CHECK(sphere(0).f_vector() == std::vector<std::size_t>{2});
  CHECK(sphere(2).f_vector() == std::vector<std::size_t>{4, 6, 4});
  CHECK(real_projective_plane().f_vector() == std::vector<std::size_t>{6, 15, 10});
  CHECK_THROWS_AS(sphere(-1), TopologyError);
}
