#include "topmin/additivity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "topmin/join_calculus.hpp"

namespace topmin {

namespace {

std::string face_ref(int tet, int face) { return "tet " + std::to_string(tet) + " face " + std::to_string(face); }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

void TetGluing::validate() const {
  if (tetrahedra < 0) throw TopologyError("negative tetrahedron count");
  std::set<std::pair<int, int>> used;
  for (const auto& g : gluings) {
    for (auto [t, f] : {std::pair{g.tet_a, g.face_a}, std::pair{g.tet_b, g.face_b}}) {
      if (t < 0 || t >= tetrahedra) throw TopologyError("gluing references missing tetrahedron " + std::to_string(t));
      if (f < 0 || f > 3) throw TopologyError("gluing references missing face " + std::to_string(f));
    }
    if (g.tet_a == g.tet_b && g.face_a == g.face_b)
      throw TopologyError(face_ref(g.tet_a, g.face_a) + " is glued to itself");
    for (auto key : {std::pair{g.tet_a, g.face_a}, std::pair{g.tet_b, g.face_b}})
      if (!used.insert(key).second) throw TopologyError(face_ref(key.first, key.second) + " is glued more than once");
    auto sorted = g.perm;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2}) throw TopologyError("gluing permutation is not a bijection on {0,1,2}");
  }
}

void SurfaceConfiguration::validate() const {
  skeleton.validate();
  for (const auto& p : pieces) {
    if (p.tet < 0 || p.tet >= skeleton.tetrahedra)
      throw TopologyError("piece references missing tetrahedron " + std::to_string(p.tet));
    if (p.multiplicity < 0) throw TopologyError("negative piece multiplicity");
  }
}

FaceArcs face_arc_totals(const SurfaceConfiguration& config, int tet, int face) {
  FaceArcs total;
  for (const auto& p : config.pieces) {
    if (p.tet != tet) continue;
    const auto& arcs = catalog_piece(p.kind).face_arcs[static_cast<std::size_t>(face)];
    for (int i = 0; i < 3; ++i) total.normal[i] += p.multiplicity * arcs.normal[i];
    total.returning += p.multiplicity * arcs.returning;
    total.loops += p.multiplicity * arcs.loops;
  }
  return total;
}

MatchingVerdict check_matching(const SurfaceConfiguration& config) {
  config.validate();
  MatchingVerdict v;
  for (const auto& g : config.skeleton.gluings) {
    auto a = face_arc_totals(config, g.tet_a, g.face_a);
    auto b = face_arc_totals(config, g.tet_b, g.face_b);
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) r[i] = a.normal[i] - b.normal[g.perm[i]];
    if (r != std::array<int, 3>{0, 0, 0}) v.pass = false;
    v.residuals.push_back(r);
  }
  return v;
}

std::vector<std::vector<int>> edge_classes(const TetGluing& skeleton) {
  skeleton.validate();
  UnionFind uf(static_cast<std::size_t>(skeleton.tetrahedra) * 6);
  for (const auto& g : skeleton.gluings) {
    auto fa = face_vertices(g.face_a);
    auto fb = face_vertices(g.face_b);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        int ea = g.tet_a * 6 + edge_index(fa[i], fa[j]);
        int eb = g.tet_b * 6 + edge_index(fb[g.perm[i]], fb[g.perm[j]]);
        uf.unite(ea, eb);
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int e = 0; e < skeleton.tetrahedra * 6; ++e) groups[uf.find(e)].push_back(e);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::int64_t euler_characteristic(const SurfaceConfiguration& config) {
  if (!check_matching(config).pass) throw TopologyError("matching equations fail; Euler characteristic undefined");
  const auto& sk = config.skeleton;

  std::vector<std::int64_t> edge_points(static_cast<std::size_t>(sk.tetrahedra) * 6, 0);
  std::int64_t faces = 0;
  for (const auto& p : config.pieces) {
    const auto& piece = catalog_piece(p.kind);
    for (int e = 0; e < 6; ++e) edge_points[static_cast<std::size_t>(p.tet * 6 + e)] += p.multiplicity * piece.edge_weights[e];
    faces += static_cast<std::int64_t>(p.multiplicity) * piece.euler;
  }
  std::int64_t vertices = 0;
  for (const auto& cls : edge_classes(sk)) vertices += edge_points[static_cast<std::size_t>(cls.front())];

  std::set<std::pair<int, int>> second_side;
  for (const auto& g : sk.gluings) second_side.insert({g.tet_b, g.face_b});
  std::int64_t arcs = 0;
  for (int t = 0; t < sk.tetrahedra; ++t) {
    for (int f = 0; f < 4; ++f) {
      if (second_side.count({t, f})) continue;  // counted on the other side
      auto a = face_arc_totals(config, t, f);
      arcs += a.normal[0] + a.normal[1] + a.normal[2];
    }
  }
  return vertices - arcs + faces;
}

SimplicialComplex global_complex(const SurfaceConfiguration& config) {
  config.validate();
  SimplicialComplex total;
  for (std::size_t i = 0; i < config.pieces.size(); ++i) {
    const auto& p = config.pieces[i];
    const auto& model = catalog_piece(p.kind).model_complex;
    if (model.empty()) continue;
    for (int c = 0; c < p.multiplicity; ++c) {
      std::string prefix = "t" + std::to_string(p.tet) + ".p" + std::to_string(i) + ".c" + std::to_string(c) + ":";
      total = join(total, model.relabeled(prefix));
    }
  }
  return total.renamed("global");
}

std::vector<HomologyIndex> local_indices(const SurfaceConfiguration& config) {
  std::vector<HomologyIndex> out;
  for (const auto& p : config.pieces)
    for (int c = 0; c < p.multiplicity; ++c) out.push_back(catalog_piece(p.kind).declared_index);
  return out;
}

IndexSumReport verify_index_sum(const SurfaceConfiguration& config) {
  if (!check_matching(config).pass) throw TopologyError("matching equations fail; configuration is not a surface");
  IndexSumReport r;
  r.local = local_indices(config);
  r.summed = index_sum_law(r.local);
  r.global = homology_index(global_complex(config));
  r.pass = r.global == r.summed;
  return r;
}

}  // namespace topmin
