#include "topmin/piece_catalog.hpp"

#include <algorithm>
#include <numeric>

namespace topmin {

namespace {

struct KindInfo {
  PieceKind kind;
  std::string_view name;
};

constexpr std::array<KindInfo, 15> kKindNames = {{
    {PieceKind::Tri0, "TRI_0"},
    {PieceKind::Tri1, "TRI_1"},
    {PieceKind::Tri2, "TRI_2"},
    {PieceKind::Tri3, "TRI_3"},
    {PieceKind::Quad1, "QUAD_1"},
    {PieceKind::Quad2, "QUAD_2"},
    {PieceKind::Quad3, "QUAD_3"},
    {PieceKind::Oct1, "OCT_1"},
    {PieceKind::Oct2, "OCT_2"},
    {PieceKind::Oct3, "OCT_3"},
    {PieceKind::Tube, "TUBE"},
    {PieceKind::Helical12Gon, "HELICAL_12GON"},
    {PieceKind::TripleTube, "TRIPLE_TUBE"},
    {PieceKind::OctTubeDisk, "OCT_TUBE_DISK"},
    {PieceKind::OctTubeSelf, "OCT_TUBE_SELF"},
}};

int position_in_face(int f, int v) {
  auto fv = face_vertices(f);
  return static_cast<int>(std::find(fv.begin(), fv.end(), v) - fv.begin());
}

// Vertex-linking triangle at v: one arc around v on each face containing v.
FaceArcTable triangle_arcs(int v) {
  FaceArcTable t{};
  for (int f = 0; f < 4; ++f)
    if (f != v) t[f].normal[position_in_face(f, v)] = 1;
  return t;
}

// Quadrilateral k separates {0,k} from the other two vertices.
int quad_partner(int k, int v) {
  std::array<int, 4> p{};
  std::array<int, 2> rest{};
  int r = 0;
  for (int x = 1; x < 4; ++x)
    if (x != k) rest[r++] = x;
  p[0] = k;
  p[k] = 0;
  p[rest[0]] = rest[1];
  p[rest[1]] = rest[0];
  return p[v];
}

// On the face opposite x the quad cuts off x's partner.
FaceArcTable quad_arcs(int k) {
  FaceArcTable t{};
  for (int f = 0; f < 4; ++f) t[f].normal[position_in_face(f, quad_partner(k, f))] = 1;
  return t;
}

// Octagon k runs twice over each of the two edges the quad k misses ({0,k}
// and its opposite edge). Each face holds exactly one of those edges and gets
// one arc at each of its endpoints.
FaceArcTable octagon_arcs(int k) {
  FaceArcTable t{};
  for (int f = 0; f < 4; ++f) {
    int partner = quad_partner(k, f);
    for (int v : face_vertices(f))
      if (v != partner) t[f].normal[position_in_face(f, v)] = 1;
  }
  return t;
}

// The helical 12-gon crosses every edge twice, so each face carries one arc
// of each normal type.
FaceArcTable helical_arcs() {
  FaceArcTable t{};
  for (auto& f : t) f.normal = {1, 1, 1};
  return t;
}

FaceArcTable add(FaceArcTable a, const FaceArcTable& b) {
  for (int f = 0; f < 4; ++f) {
    for (int i = 0; i < 3; ++i) a[f].normal[i] += b[f].normal[i];
    a[f].returning += b[f].returning;
    a[f].loops += b[f].loops;
  }
  return a;
}

SimplicialComplex model_for(int index) {
  switch (index) {
    case 0:
      return SimplicialComplex{}.renamed("empty");
    case 1:
      return SimplicialComplex::from_facets({{0}, {1}}, "S0");
    default:
      return SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, "S1");
  }
}

HomologyIndex index_for(int index) { return index == 0 ? HomologyIndex::zero() : HomologyIndex::index(index); }

LocalPiece make_piece(PieceKind kind, EdgeWeights weights, FaceArcTable arcs, int euler, int index) {
  LocalPiece p;
  p.kind = kind;
  p.edge_weights = weights;
  p.face_arcs = arcs;
  p.euler = euler;
  p.declared_index = index_for(index);
  p.model_complex = model_for(index);
  return p;
}

// Edge weights are frozen constants (order 01 02 03 12 13 23). They are
// cross-checked against the face arcs at load time.
//   TRI_v  : the three edges at v, once each.                     weight 3,  chi 1
//   QUAD_k : the four edges between {0,k} and its complement.      weight 4,  chi 1
//   OCT_k  : {0,k} and its opposite edge twice, the other four once. weight 8, chi 1
//            (8 boundary points, 8 arcs, 1 disk: chi = 8 - 8 + 1)
//   TUBE   : TRI_0 and TRI_1 joined by an unknotted tube.           weight 6,  chi 1 + 1 - 2 = 0
//   HELICAL_12GON : every edge twice.                               weight 12, chi 1
//   TRIPLE_TUBE   : TRI_0, TRI_1, TRI_2 joined by two tubes.        weight 9,  chi 3 - 4 = -1
//   OCT_TUBE_DISK : OCT_1 tubed to TRI_0 (pushed toward vertex 0).  weight 11, chi 2 - 2 = 0
//   OCT_TUBE_SELF : OCT_1 tubed to itself.                          weight 8,  chi 1 - 2 = -1
std::vector<LocalPiece> build_catalog() {
  std::vector<LocalPiece> c;
  c.push_back(make_piece(PieceKind::Tri0, {1, 1, 1, 0, 0, 0}, triangle_arcs(0), 1, 0));
  c.push_back(make_piece(PieceKind::Tri1, {1, 0, 0, 1, 1, 0}, triangle_arcs(1), 1, 0));
  c.push_back(make_piece(PieceKind::Tri2, {0, 1, 0, 1, 0, 1}, triangle_arcs(2), 1, 0));
  c.push_back(make_piece(PieceKind::Tri3, {0, 0, 1, 0, 1, 1}, triangle_arcs(3), 1, 0));
  c.push_back(make_piece(PieceKind::Quad1, {0, 1, 1, 1, 1, 0}, quad_arcs(1), 1, 0));
  c.push_back(make_piece(PieceKind::Quad2, {1, 0, 1, 1, 0, 1}, quad_arcs(2), 1, 0));
  c.push_back(make_piece(PieceKind::Quad3, {1, 1, 0, 0, 1, 1}, quad_arcs(3), 1, 0));
  c.push_back(make_piece(PieceKind::Oct1, {2, 1, 1, 1, 1, 2}, octagon_arcs(1), 1, 1));
  c.push_back(make_piece(PieceKind::Oct2, {1, 2, 1, 1, 2, 1}, octagon_arcs(2), 1, 1));
  c.push_back(make_piece(PieceKind::Oct3, {1, 1, 2, 2, 1, 1}, octagon_arcs(3), 1, 1));
  c.push_back(make_piece(PieceKind::Tube, {2, 1, 1, 1, 1, 0}, add(triangle_arcs(0), triangle_arcs(1)), 0, 1));
  c.push_back(make_piece(PieceKind::Helical12Gon, {2, 2, 2, 2, 2, 2}, helical_arcs(), 1, 2));
  c.push_back(make_piece(PieceKind::TripleTube, {2, 2, 1, 2, 1, 1},
                         add(add(triangle_arcs(0), triangle_arcs(1)), triangle_arcs(2)), -1, 2));
  c.push_back(make_piece(PieceKind::OctTubeDisk, {3, 2, 2, 1, 1, 2}, add(octagon_arcs(1), triangle_arcs(0)), 0, 2));
  c.push_back(make_piece(PieceKind::OctTubeSelf, {2, 1, 1, 1, 1, 2}, octagon_arcs(1), -1, 2));
  return c;
}

int expected_index(PieceKind kind) {
  switch (kind) {
    case PieceKind::Tri0:
    case PieceKind::Tri1:
    case PieceKind::Tri2:
    case PieceKind::Tri3:
    case PieceKind::Quad1:
    case PieceKind::Quad2:
    case PieceKind::Quad3:
      return 0;
    case PieceKind::Oct1:
    case PieceKind::Oct2:
    case PieceKind::Oct3:
    case PieceKind::Tube:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

std::string_view kind_name(PieceKind kind) {
  for (const auto& k : kKindNames)
    if (k.kind == kind) return k.name;
  return "?";
}

std::optional<PieceKind> parse_kind(std::string_view name) {
  for (const auto& k : kKindNames)
    if (k.name == name) return k.kind;
  return std::nullopt;
}

int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e)
    if (kTetEdges[e][0] == a && kTetEdges[e][1] == b) return e;
  throw TopologyError("no tetrahedron edge " + std::to_string(a) + std::to_string(b));
}

std::array<int, 3> face_vertices(int f) {
  if (f < 0 || f > 3) throw TopologyError("face index out of range: " + std::to_string(f));
  std::array<int, 3> out{};
  int i = 0;
  for (int v = 0; v < 4; ++v)
    if (v != f) out[i++] = v;
  return out;
}

int LocalPiece::weight() const { return std::accumulate(edge_weights.begin(), edge_weights.end(), 0); }

bool check_normal_arcs(const FaceArcTable& face_arcs) {
  return std::all_of(face_arcs.begin(), face_arcs.end(), [](const FaceArcs& f) {
    return f.returning == 0 && f.loops == 0 &&
           std::all_of(f.normal.begin(), f.normal.end(), [](int n) { return n >= 0; });
  });
}

HomologyIndex local_index(const LocalPiece& piece) {
  auto idx = homology_index(piece.model_complex);
  if (idx != piece.declared_index) {
    throw TopologyError(std::string(piece.name()) + ": declared " + piece.declared_index.to_string() +
                        " but model complex has " + idx.to_string());
  }
  return idx;
}

std::vector<std::string> catalog_violations(std::span<const LocalPiece> pieces) {
  std::vector<std::string> out;
  for (const auto& p : pieces) {
    const std::string name(p.name());
    if (!check_normal_arcs(p.face_arcs)) out.push_back(name + ": face data contains non-normal arcs");
    auto idx = homology_index(p.model_complex);
    if (idx != p.declared_index)
      out.push_back(name + ": declared " + p.declared_index.to_string() + " but model complex has " + idx.to_string());
    if (p.declared_index != index_for(expected_index(p.kind)))
      out.push_back(name + ": declared " + p.declared_index.to_string() + " but the piece has local index " +
                    index_for(expected_index(p.kind)).to_string());
    if (expected_index(p.kind) == 0 && !p.model_complex.empty())
      out.push_back(name + ": normal disk with nonempty model complex");
    if (expected_index(p.kind) > 0 && p.model_complex.empty())
      out.push_back(name + ": exceptional piece with empty model complex");
    for (int e = 0; e < 6; ++e) {
      if (p.edge_weights[e] < 0) out.push_back(name + ": negative edge weight");
      const int a = kTetEdges[e][0];
      const int b = kTetEdges[e][1];
      // The edge ab lies on the two faces opposite the other vertices.
      for (int f = 0; f < 4; ++f) {
        if (f == a || f == b) continue;
        const auto& arcs = p.face_arcs[f];
        int on_edge = arcs.normal[position_in_face(f, a)] + arcs.normal[position_in_face(f, b)];
        if (on_edge != p.edge_weights[e]) {
          out.push_back(name + ": edge " + std::to_string(a) + std::to_string(b) + " weight " +
                        std::to_string(p.edge_weights[e]) + " disagrees with " + std::to_string(on_edge) +
                        " arc endpoints on face " + std::to_string(f));
        }
      }
    }
  }
  return out;
}

const std::vector<LocalPiece>& catalog() {
  static const std::vector<LocalPiece> pieces = [] {
    auto c = build_catalog();
    auto bad = catalog_violations(c);
    if (!bad.empty()) throw TopologyError("catalog validation failed: " + bad.front());
    return c;
  }();
  return pieces;
}

const LocalPiece& catalog_piece(PieceKind kind) {
  for (const auto& p : catalog())
    if (p.kind == kind) return p;
  throw TopologyError("unknown piece kind");
}

}  // namespace topmin
