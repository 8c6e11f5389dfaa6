#include <catch_amalgamated.hpp>

#include <chrono>

#include "oracles.hpp"
#include "topmin/homology.hpp"
#include "topmin/random_corpus.hpp"
#include "topmin/smith.hpp"

using namespace topmin;

namespace {

IntegerMatrix dense(const oracle::Dense& m) {
  IntegerMatrix out(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.empty() ? 0 : m[0].size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m[r][c];
  return out;
}

bool same(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

// Number of cyclic summands of g whose order is divisible by p.
long long torsion_divisible_by(const AbelianGroup& g, long long p) {
  long long n = 0;
  for (const auto& d : g.torsion) n += d % p == 0 ? 1 : 0;
  return n;
}

void check_against_oracle(const SimplicialComplex& k) {
  auto h = reduced_homology(k);
  auto q = oracle::reduced_betti(k, 0);
  for (std::size_t d = 0; d < q.size(); ++d) CHECK(h[static_cast<int>(d)].rank == q[d]);
  CHECK(h.length() <= static_cast<int>(q.size()));
  // Universal coefficients: dim H~_d(K; F_p) = rank + p-torsion in degrees d and d-1.
  for (long long p : {2LL, 3LL, 5LL}) {
    auto fp = oracle::reduced_betti(k, p);
    for (std::size_t d = 0; d < fp.size(); ++d) {
      const int i = static_cast<int>(d);
      long long expected = h[i].rank + torsion_divisible_by(h[i], p) + (i > 0 ? torsion_divisible_by(h[i - 1], p) : 0);
      CHECK(fp[d] == expected);
    }
  }
}

}  // namespace

TEST_CASE("boundary matrix examples") {
  auto edge = boundary_matrices(simplex_complex(Simplex{1, 2}));
  REQUIRE(edge.size() == 2);
  CHECK(edge[0].rows() == 1);
  CHECK(edge[0].cols() == 2);
  IntegerMatrix d1 = IntegerMatrix(edge[1]);
  REQUIRE(d1.rows() == 2);
  REQUIRE(d1.cols() == 1);
  CHECK(d1(0, 0) == -1);
  CHECK(d1(1, 0) == 1);

  auto pt = boundary_matrices(point(1));
  REQUIRE(pt.size() == 1);
  CHECK(same(IntegerMatrix(pt[0]), IntegerMatrix::Constant(1, 1, BigInt(1))));
  CHECK_THROWS_AS(boundary_matrices(SimplicialComplex{}), TopologyError);
}

TEST_CASE("boundary of a boundary vanishes") {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    auto k = random_complex(rng, 8, 5, 6);
    auto b = boundary_matrices(k);
    for (std::size_t d = 1; d < b.size(); ++d) {
      SparseIntegerMatrix product = b[d - 1] * b[d];
      for (int o = 0; o < product.outerSize(); ++o)
        for (SparseIntegerMatrix::InnerIterator it(product, o); it; ++it) CHECK(it.value() == 0);
    }
  }
}

TEST_CASE("boundary matrices match an independent construction") {
  Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    auto k = random_complex(rng, 7, 4, 6);
    auto b = boundary_matrices(k);
    auto fs = oracle::faces(k);
    REQUIRE(b.size() == fs.size());
    for (std::size_t d = 0; d < b.size(); ++d) CHECK(same(IntegerMatrix(b[d]), dense(oracle::boundary(fs, d))));
  }
}

TEST_CASE("Smith normal form examples") {
  oracle::Dense diag = {{2, 0}, {0, 3}};
  CHECK(smith_normal_form(dense(diag)) == big({1, 6}));
  CHECK(smith_normal_form(IntegerMatrix::Zero(3, 4)).empty());
  CHECK(smith_normal_form(dense({{2, 0}, {0, 2}})) == big({2, 2}));
  CHECK(smith_normal_form(dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) == big({2, 6, 12}));
  CHECK(smith_normal_form(IntegerMatrix(0, 0)).empty());
}

TEST_CASE("Smith normal form agrees with determinantal divisors") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const int rows = uniform_int(rng, 1, 4), cols = uniform_int(rng, 1, 4);
    oracle::Dense m(static_cast<std::size_t>(rows), std::vector<long long>(static_cast<std::size_t>(cols)));
    for (auto& row : m)
      for (auto& x : row) x = uniform_int(rng, 0, 3) == 0 ? 0 : uniform_int(rng, -9, 9);
    auto expected = oracle::invariant_factors(m);
    auto got = smith_normal_form(dense(m));
    REQUIRE(got.size() == expected.size());
    for (std::size_t j = 0; j < got.size(); ++j) CHECK(got[j] == BigInt(expected[j]));
    for (std::size_t j = 1; j < got.size(); ++j) CHECK(got[j] % got[j - 1] == 0);
    SparseIntegerMatrix sparse = dense(m).sparseView();
    CHECK(smith_normal_form(sparse) == got);
  }
}

TEST_CASE("Smith normal form stays exact beyond 64 bits") {
  BigInt huge = BigInt(1) << 100;
  IntegerMatrix m(2, 2);
  m << huge, BigInt(0), BigInt(0), huge * 3;
  auto f = smith_normal_form(m);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == huge);
  CHECK(f[1] == huge * 3);
}

TEST_CASE("abelian group normalization") {
  auto g = AbelianGroup::make(1, big({4, 6, 1, 0}));
  CHECK(g.rank == 2);
  CHECK(g.torsion == big({2, 12}));
  CHECK(g.to_string() == "Z^2 + Z/2 + Z/12");
  CHECK(AbelianGroup{}.to_string() == "0");
  CHECK(direct_sum(AbelianGroup::cyclic(2), AbelianGroup::cyclic(3)) == AbelianGroup::cyclic(6));
}

TEST_CASE("reduced homology examples") {
  auto s2 = reduced_homology(simplex_boundary(Simplex{1, 2, 3, 4}));
  CHECK(s2.length() == 3);
  CHECK(s2[2] == AbelianGroup::free(1));
  CHECK(s2[0].trivial());
  CHECK(s2[1].trivial());

  auto rp2 = reduced_homology(real_projective_plane());
  CHECK(rp2.length() == 2);
  CHECK(rp2[0].trivial());
  CHECK(rp2[1] == AbelianGroup::cyclic(2));
  CHECK(rp2[2].trivial());

  CHECK(reduced_homology(cone(real_projective_plane(), "z")).acyclic());
  CHECK(reduced_homology(SimplicialComplex{}).is_empty_marker());
}

TEST_CASE("projective plane against rational and mod-p ranks") {
  auto k = real_projective_plane();
  CHECK(oracle::reduced_betti(k, 0) == std::vector<long long>{0, 0, 0});
  CHECK(oracle::reduced_betti(k, 2) == std::vector<long long>{0, 1, 1});
  CHECK(oracle::reduced_betti(k, 3) == std::vector<long long>{0, 0, 0});
  check_against_oracle(k);
}

TEST_CASE("reduced homology agrees with the rank oracle on random complexes") {
  Rng rng(24);
  for (int i = 0; i < 120; ++i) check_against_oracle(random_shaped_complex(rng, 7, 3));
}

TEST_CASE("homology index examples") {
  CHECK(homology_index(SimplicialComplex{}) == HomologyIndex::zero());
  CHECK(homology_index(SimplicialComplex::from_facets({{1}, {2}})) == HomologyIndex::index(1));
  CHECK(homology_index(point(1)).is_acyclic());
  CHECK(homology_index(real_projective_plane()) == HomologyIndex::index(2));
  CHECK_THROWS_AS(HomologyIndex::index(0), TopologyError);
}

TEST_CASE("homology index tags") {
  CHECK(HomologyIndex::zero().at_most(0));
  CHECK(HomologyIndex::index(3).at_most(3));
  CHECK_FALSE(HomologyIndex::index(3).at_most(2));
  CHECK_FALSE(HomologyIndex::acyclic().at_most(100));
  CHECK(HomologyIndex::index(3).to_string() == "INDEX(3)");
  CHECK(HomologyIndex::acyclic().to_string() == "ACYCLIC");
  CHECK(HomologyIndex::zero().to_string() == "ZERO");
}

TEST_CASE("sphere ladder") {
  for (int k = 1; k <= 4; ++k) {
    auto start = std::chrono::steady_clock::now();
    auto idx = homology_index(sphere(k));
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(idx == HomologyIndex::index(k + 1));
    CHECK(elapsed < 1.0);
    auto h = reduced_homology(sphere(k));
    CHECK(h.length() == k + 1);
    CHECK(h[k] == AbelianGroup::free(1));
  }
}

TEST_CASE("joining with a point gives an acyclic complex") {
  Rng rng(25);
  for (int i = 0; i < 40; ++i) {
    auto k = random_shaped_complex(rng, 6, 2);
    CHECK(homology_index(join(k, point("apex"))).is_acyclic());
  }
}

TEST_CASE("rank of reduced H0 counts components minus one") {
  Rng rng(26);
  for (int i = 0; i < 100; ++i) {
    auto k = random_shaped_complex(rng, 8, 3);
    CHECK(reduced_homology(k)[0].rank == static_cast<std::int64_t>(oracle::components(k)) - 1);
  }
}

TEST_CASE("alternating sum of ranks plus one is the Euler characteristic") {
  Rng rng(27);
  for (int i = 0; i < 100; ++i) {
    auto k = random_complex(rng, 8, 5, 6);
    auto h = reduced_homology(k);
    std::int64_t sum = 1;
    for (int d = 0; d < h.length(); ++d) sum += (d % 2 == 0 ? 1 : -1) * h[d].rank;
    CHECK(sum == k.euler_characteristic());
  }
}

TEST_CASE("homology is invariant under subdivision") {
  Rng rng(28);
  for (int i = 0; i < 30; ++i) {
    auto k = random_shaped_complex(rng, 7, 2);
    CHECK(reduced_homology(barycentric_subdivision(k)) == reduced_homology(k));
  }
  CHECK(reduced_homology(barycentric_subdivision(real_projective_plane())) == reduced_homology(real_projective_plane()));
}

TEST_CASE("profile formatting") {
  CHECK(format_profile(reduced_homology(real_projective_plane())) == "H~0 = 0\nH~1 = Z/2\n");
  CHECK(format_profile(reduced_homology(SimplicialComplex{})) == "H~-1 = Z (empty complex)\n");
}
