// Surface configurations over glued tetrahedra: normal-arc matching, Euler
// characteristic, the global disk complex as a join of local models, and the
// two-way check of index additivity.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "topmin/homology.hpp"
#include "topmin/piece_catalog.hpp"

namespace topmin {

/// Face `face_a` of tetrahedron `tet_a` glued to face `face_b` of `tet_b`.
/// The i-th smallest vertex of face_a goes to the perm[i]-th smallest vertex
/// of face_b, so normal arc type i on face_a is identified with type perm[i].
struct FaceGluing {
  int tet_a = 0;
  int face_a = 0;
  int tet_b = 0;
  int face_b = 0;
  std::array<int, 3> perm{0, 1, 2};
};

struct TetGluing {
  int tetrahedra = 0;
  std::vector<FaceGluing> gluings;

  /// Throws TopologyError on out-of-range references, a face glued to itself,
  /// a face glued twice, or a non-bijective permutation.
  void validate() const;
};

struct PiecePlacement {
  int tet = 0;
  PieceKind kind = PieceKind::Tri0;
  int multiplicity = 1;
};

struct SurfaceConfiguration {
  TetGluing skeleton;
  std::vector<PiecePlacement> pieces;

  /// Skeleton validation plus piece references.
  void validate() const;
};

/// Arc counts on one face of one tetrahedron, summed over its pieces.
FaceArcs face_arc_totals(const SurfaceConfiguration& config, int tet, int face);

struct MatchingVerdict {
  bool pass = true;
  /// One entry per gluing: arcs on face_a minus the matched arcs on face_b.
  std::vector<std::array<int, 3>> residuals;
};

MatchingVerdict check_matching(const SurfaceConfiguration& config);

/// Classes of tetrahedron edges (tet * 6 + edge) under the face gluings.
std::vector<std::vector<int>> edge_classes(const TetGluing& skeleton);

/// V - E + F over the cell structure the 2-skeleton induces on the surface:
/// V = points on edge classes, E = arcs on face classes, F = sum of piece
/// Euler characteristics (a disk contributes 1). Throws if matching fails.
std::int64_t euler_characteristic(const SurfaceConfiguration& config);

/// Join of the model complexes of all pieces (each copy namespaced
/// "t<tet>.p<i>.c<copy>:"), with empty models acting as identities.
SimplicialComplex global_complex(const SurfaceConfiguration& config);

/// Declared local indices, one per piece copy.
std::vector<HomologyIndex> local_indices(const SurfaceConfiguration& config);

struct IndexSumReport {
  HomologyIndex global = HomologyIndex::zero();  // homology_index(global_complex)
  HomologyIndex summed = HomologyIndex::zero();  // index_sum_law(local indices)
  std::vector<HomologyIndex> local;
  bool pass = false;
};

IndexSumReport verify_index_sum(const SurfaceConfiguration& config);

}  // namespace topmin
