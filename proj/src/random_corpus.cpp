#include "topmin/random_corpus.hpp"

#include <algorithm>
#include <array>

#include "topmin/homology.hpp"

namespace topmin {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

SimplicialComplex random_complex(Rng& rng, int max_vertices, int max_facet_size, int max_facets,
                                 const std::string& name) {
  const int v = uniform_int(rng, 1, max_vertices);
  const int count = uniform_int(rng, 1, max_facets);
  std::vector<int> pool(static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<Vertex>> faces;
  for (int f = 0; f < count; ++f) {
    const int size = uniform_int(rng, 1, std::min(max_facet_size, v));
    std::shuffle(pool.begin(), pool.end(), rng);
    faces.emplace_back(pool.begin(), pool.begin() + size);
  }
  return SimplicialComplex::from_facets(faces, name);
}

SimplicialComplex random_shaped_complex(Rng& rng, int max_vertices, int max_dim, const std::string& name) {
  const int top = std::min(max_dim + 1, max_vertices);
  std::vector<std::vector<Vertex>> faces;
  auto subset = [&](int v, int size) {
    std::vector<int> pool(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    return std::vector<Vertex>(pool.begin(), pool.begin() + size);
  };
  switch (uniform_int(rng, 0, 3)) {
    case 0: {  // graph: cycles and components
      const int v = uniform_int(rng, 2, max_vertices);
      for (int a = 1; a <= v; ++a) {
        faces.push_back({a});
        for (int b = a + 1; b <= v; ++b)
          if (uniform_int(rng, 0, 2) == 0) faces.push_back({a, b});
      }
      break;
    }
    case 1: {  // many small faces: higher cycles appear
      const int v = uniform_int(rng, std::min(3, max_vertices), max_vertices);
      const int count = uniform_int(rng, v, 3 * v);
      for (int f = 0; f < count; ++f) faces.push_back(subset(v, uniform_int(rng, std::min(2, top), top)));
      break;
    }
    case 2: {  // part of the projective plane, possibly all of it
      if (max_vertices >= 6 && max_dim >= 2) {
        std::vector<Vertex> keep = subset(6, uniform_int(rng, 4, 6));
        if (uniform_int(rng, 0, 1) == 0) keep = subset(6, 6);
        return real_projective_plane().induced(keep).renamed(name);
      }
      [[fallthrough]];
    }
    default: {  // sphere with some facets removed
      const int v = uniform_int(rng, 2, std::min(max_vertices, max_dim + 2));
      std::vector<Vertex> all = subset(v, v);
      for (const auto& f : Simplex(all).boundary_faces())
        if (uniform_int(rng, 0, 3) != 0) faces.push_back(f.vertices());
      if (faces.empty()) faces.push_back(all);
      break;
    }
  }
  return SimplicialComplex::from_facets(faces, name);
}

std::pair<SimplicialComplex, SimplicialComplex> random_full_pair(Rng& rng, int max_vertices, int max_dim) {
  for (;;) {
    auto y = uniform_int(rng, 0, 1) == 0
                 ? random_shaped_complex(rng, max_vertices, max_dim, "Y")
                 : random_complex(rng, max_vertices, max_dim + 1, 2 * max_vertices, "Y");
    auto verts = y.vertices();
    if (verts.size() < 3 || y.dimension() < 1) continue;
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.erase(verts.begin() + uniform_int(rng, 1, static_cast<int>(verts.size()) - 1), verts.end());
    auto x = y.induced(verts).renamed("X");
    if (homology_index(x).is_acyclic()) continue;
    return {x, y};
  }
}

namespace {

constexpr std::array<PieceKind, 7> kNormalKinds = {PieceKind::Tri0,  PieceKind::Tri1,  PieceKind::Tri2, PieceKind::Tri3,
                                                   PieceKind::Quad1, PieceKind::Quad2, PieceKind::Quad3};
constexpr std::array<PieceKind, 8> kIndexedKinds = {PieceKind::Oct1,         PieceKind::Oct2,       PieceKind::Oct3,
                                                    PieceKind::Tube,         PieceKind::Helical12Gon,
                                                    PieceKind::TripleTube,   PieceKind::OctTubeDisk,
                                                    PieceKind::OctTubeSelf};

}  // namespace

SurfaceConfiguration random_configuration(Rng& rng, int max_tets, int max_indexed) {
  SurfaceConfiguration c;
  const int n = uniform_int(rng, 1, max_tets);
  c.skeleton.tetrahedra = n;
  for (int t = 0; t < n; ++t) {
    const int normals = uniform_int(rng, 0, 2);
    for (int i = 0; i < normals; ++i)
      c.pieces.push_back({t, kNormalKinds[static_cast<std::size_t>(uniform_int(rng, 0, 6))], uniform_int(rng, 1, 2)});
  }
  const int indexed = uniform_int(rng, 0, max_indexed);
  for (int i = 0; i < indexed; ++i)
    c.pieces.push_back({uniform_int(rng, 0, n - 1), kIndexedKinds[static_cast<std::size_t>(uniform_int(rng, 0, 7))], 1});

  std::vector<std::pair<int, int>> free_faces;
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) free_faces.push_back({t, f});
  std::shuffle(free_faces.begin(), free_faces.end(), rng);

  std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<bool> used(free_faces.size(), false);
  for (std::size_t i = 0; i < free_faces.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < free_faces.size(); ++j) {
      if (used[j] || uniform_int(rng, 0, 2) != 0) continue;
      auto [ta, fa] = free_faces[i];
      auto [tb, fb] = free_faces[j];
      auto a = face_arc_totals(c, ta, fa);
      auto b = face_arc_totals(c, tb, fb);
      std::shuffle(perms.begin(), perms.end(), rng);
      for (const auto& p : perms) {
        if (a.normal[0] == b.normal[p[0]] && a.normal[1] == b.normal[p[1]] && a.normal[2] == b.normal[p[2]]) {
          c.skeleton.gluings.push_back({ta, fa, tb, fb, p});
          used[i] = used[j] = true;
          break;
        }
      }
      if (used[i]) break;
    }
  }
  return c;
}

Surface random_surface(Rng& rng, int max_components, int max_abs_chi, int max_weight) {
  Surface s;
  const int n = uniform_int(rng, 1, max_components);
  for (int i = 0; i < n; ++i) s.push_back({uniform_int(rng, -max_abs_chi, 2), uniform_int(rng, 0, max_weight), false});
  return s;
}

std::vector<int> random_cut_counts(Rng& rng, int max_dim, int max_cuts) {
  std::vector<int> counts(static_cast<std::size_t>(uniform_int(rng, 1, max_dim)));
  for (auto& c : counts) c = uniform_int(rng, 0, max_cuts);
  return counts;
}

}  // namespace topmin
