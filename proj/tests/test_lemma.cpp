#include <catch_amalgamated.hpp>

#include "topmin/lemma_lab.hpp"
#include "topmin/random_corpus.hpp"

using namespace topmin;

using Verdict = DichotomyWitness::Verdict;

TEST_CASE("dichotomy examples") {
  auto x = SimplicialComplex::from_facets({{1}, {2}});
  auto coned = SimplicialComplex::from_facets({{1, 3}, {2, 3}});
  auto w = check_dichotomy(x, coned);
  CHECK(w.verdict == Verdict::TauFound);
  REQUIRE(w.tau);
  CHECK(*w.tau == Simplex{3});
  CHECK(w.tau_dimension == 0);
  CHECK(w.index_x == HomologyIndex::index(1));
  CHECK(w.index_y.is_acyclic());
  CHECK(w.index_v == HomologyIndex::index(1));

  auto isolated = SimplicialComplex::from_facets({{1}, {2}, {3}});
  auto s = check_dichotomy(x, isolated);
  CHECK(s.verdict == Verdict::YSmall);
  CHECK_FALSE(s.tau);
  CHECK(s.index_y == HomologyIndex::index(1));
}

TEST_CASE("dichotomy with an empty X") {
  auto w = check_dichotomy(SimplicialComplex{}, SimplicialComplex::from_facets({{5, 6}}));
  CHECK(w.index_x == HomologyIndex::zero());
  CHECK(w.verdict == Verdict::TauFound);
  REQUIRE(w.tau);
  CHECK(*w.tau == Simplex{5});
  CHECK(w.index_v == HomologyIndex::zero());
  CHECK(check_dichotomy(SimplicialComplex{}, SimplicialComplex{}).verdict == Verdict::YSmall);
}

TEST_CASE("the search prefers low-dimensional tau") {
  // Y is the octahedron boundary with X = two opposite vertices; every
  // vertex of the equator is adjacent to both, so a vertex is the witness.
  auto y = join(join(SimplicialComplex::from_facets({{1}, {2}}), SimplicialComplex::from_facets({{3}, {4}})),
                SimplicialComplex::from_facets({{5}, {6}}));
  auto x = y.induced({1, 2});
  auto w = check_dichotomy(x, y);
  CHECK(w.index_y == HomologyIndex::index(3));
  CHECK(w.verdict == Verdict::TauFound);
  CHECK(w.tau_dimension == 0);
  CHECK(*w.tau == Simplex{3});
}

TEST_CASE("dichotomy input errors") {
  auto y = SimplicialComplex::from_facets({{1, 2, 3}});
  CHECK_THROWS_AS(check_dichotomy(SimplicialComplex::from_facets({{1}, {2}}), y), TopologyError);
  CHECK_THROWS_AS(check_dichotomy(SimplicialComplex::from_facets({{1, 4}}), y), TopologyError);
  CHECK_THROWS_AS(check_dichotomy(SimplicialComplex::from_facets({{1, 2}}), y), TopologyError);
}

TEST_CASE("verdict names") {
  CHECK(verdict_name(Verdict::YSmall) == "Y_SMALL");
  CHECK(verdict_name(Verdict::TauFound) == "TAU_FOUND");
  CHECK(verdict_name(Verdict::Failure) == "FAILURE");
}

TEST_CASE("random full pairs never fail and witnesses recheck") {
  Rng rng(71);
  int small = 0, found = 0;
  for (int i = 0; i < 200; ++i) {
    auto [x, y] = random_full_pair(rng, 8, 3);
    REQUIRE(x.is_full_subcomplex_of(y));
    REQUIRE(y.dimension() <= 3);
    REQUIRE(y.vertex_count() <= 8);
    auto w = check_dichotomy(x, y);
    CHECK(w.verdict != Verdict::Failure);
    CHECK(w.monotonicity_violations == 0);
    const auto ix = homology_index(x), iy = homology_index(y);
    CHECK(w.index_x == ix);
    CHECK(w.index_y == iy);
    const int n = *ix.value();
    CHECK((w.verdict == Verdict::YSmall) == iy.at_most(n));
    if (w.verdict == Verdict::YSmall) ++small;
    if (w.verdict == Verdict::TauFound) {
      ++found;
      REQUIRE(w.tau);
      CHECK(y.contains(*w.tau));
      for (const auto& v : w.tau->vertices()) CHECK_FALSE(x.has_vertex(v));
      CHECK(w.tau_dimension == w.tau->dimension());
      auto v = adjacency_subcomplex(x, y, *w.tau);
      CHECK(homology_index(v) == *w.index_v);
      CHECK(homology_index(v).at_most(n - w.tau_dimension));
    }
  }
  CHECK(small > 20);
  CHECK(found > 20);
}
