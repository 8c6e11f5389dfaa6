// Surface pieces in a single tetrahedron: normal disks, almost normal pieces,
// and the index-2 exceptional pieces, each with a model disk complex.
//
// Tetrahedron conventions: vertices 0..3; edges ordered 01, 02, 03, 12, 13, 23;
// face f is the face opposite vertex f. A normal arc on a face is named by the
// face vertex it cuts off, and FaceArcs::normal[i] counts arcs cutting off the
// i-th smallest vertex of the face.
//
// The model complexes are homology-faithful stand-ins for the true local disk
// complexes: index 0 -> empty, index 1 -> S^0 (two vertices), index 2 -> S^1
// (a 4-cycle). Additivity only sees their homology through the join, so any
// complex with the right homology index gives the same global behavior.
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topmin/homology.hpp"
#include "topmin/simplicial_complex.hpp"

namespace topmin {

enum class PieceKind {
  Tri0, Tri1, Tri2, Tri3,
  Quad1, Quad2, Quad3,
  Oct1, Oct2, Oct3,
  Tube,
  Helical12Gon,
  TripleTube,
  OctTubeDisk,
  OctTubeSelf,
};

inline constexpr std::array<PieceKind, 15> kAllPieceKinds = {
    PieceKind::Tri0,  PieceKind::Tri1, PieceKind::Tri2,         PieceKind::Tri3,       PieceKind::Quad1,
    PieceKind::Quad2, PieceKind::Quad3, PieceKind::Oct1,        PieceKind::Oct2,       PieceKind::Oct3,
    PieceKind::Tube,  PieceKind::Helical12Gon, PieceKind::TripleTube, PieceKind::OctTubeDisk,
    PieceKind::OctTubeSelf};

/// "TRI_0", "QUAD_2", "OCT_TUBE_SELF", ...
std::string_view kind_name(PieceKind kind);
std::optional<PieceKind> parse_kind(std::string_view name);

inline constexpr std::array<std::array<int, 2>, 6> kTetEdges = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
int edge_index(int a, int b);
/// The three vertices of the face opposite `f`, ascending.
std::array<int, 3> face_vertices(int f);

struct FaceArcs {
  std::array<int, 3> normal{};
  int returning = 0;  // arcs with both ends on one edge (not normal)
  int loops = 0;      // closed curves in the face interior (not normal)

  friend bool operator==(const FaceArcs&, const FaceArcs&) = default;
};

using EdgeWeights = std::array<int, 6>;
using FaceArcTable = std::array<FaceArcs, 4>;

struct LocalPiece {
  PieceKind kind{};
  EdgeWeights edge_weights{};
  FaceArcTable face_arcs{};
  int euler = 0;
  HomologyIndex declared_index = HomologyIndex::zero();
  SimplicialComplex model_complex;

  /// Total intersection with the 1-skeleton.
  int weight() const;
  std::string_view name() const { return kind_name(kind); }
};

/// A connected surface component reduced to width bookkeeping.
struct SurfaceComponentModel {
  int chi = 0;
  int weight = 0;
  bool in_ball = false;  // lies in a ball; eligible for discard

  friend bool operator==(const SurfaceComponentModel&, const SurfaceComponentModel&) = default;
};

/// All fifteen pieces, in kAllPieceKinds order, validated.
const std::vector<LocalPiece>& catalog();
const LocalPiece& catalog_piece(PieceKind kind);

/// True iff every arc on every face is one of the three normal types.
bool check_normal_arcs(const FaceArcTable& face_arcs);

/// homology_index(model_complex); throws TopologyError naming the piece if
/// it disagrees with the declared index.
HomologyIndex local_index(const LocalPiece& piece);

/// Human-readable invariant violations ("OCT_1: declared INDEX(1) but model has ZERO").
/// Empty when the pieces are consistent.
std::vector<std::string> catalog_violations(std::span<const LocalPiece> pieces);

}  // namespace topmin
