// Cubical complexes on integer lattices: the cube realizing a cone on a
// simplex, product subdivisions of a cube, and dual cell decompositions.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "topmin/simplicial_complex.hpp"

namespace topmin {

using LatticePoint = std::vector<int>;

/// Axis-aligned box [lo_1, hi_1] x ... x [lo_n, hi_n] with lo_i <= hi_i.
/// Its dimension is the number of axes with lo_i < hi_i.
struct Box {
  LatticePoint lo;
  LatticePoint hi;

  int dimension() const;
  bool is_face_of(const Box& other) const;
  /// The codimension-one faces.
  std::vector<Box> facets() const;
  /// Corner lattice points, lexicographic.
  std::vector<LatticePoint> corners() const;

  auto operator<=>(const Box&) const = default;
};

/// Closed collection of boxes. Lattice point p sits at p_i / denominators_i.
class CubicalComplex {
 public:
  CubicalComplex() = default;
  /// Closes `cells` under faces. Cells are ordered by (dimension, lo, hi).
  CubicalComplex(int ambient_dimension, std::vector<Box> cells, std::vector<int> denominators = {});

  int ambient_dimension() const { return ambient_; }
  int dimension() const;
  const std::vector<Box>& cells() const { return cells_; }
  const std::vector<int>& denominators() const { return denominators_; }

  /// Number of cells of each dimension 0..dimension().
  std::vector<std::size_t> cell_counts() const;
  std::int64_t euler_characteristic() const;
  /// Indices of the codimension-one faces of cell i.
  std::vector<std::size_t> facet_indices(std::size_t i) const;
  std::size_t index_of(const Box& b) const;  // throws when absent
  bool contains(const Box& b) const;

  Eigen::VectorXd position(const LatticePoint& p) const;

  /// Cells lying in the boundary: faces of (n-1)-cells that bound exactly one n-cell.
  std::vector<bool> boundary_mask() const;

 private:
  int ambient_ = 0;
  std::vector<Box> cells_;
  std::vector<int> denominators_;
};

struct CornerLabel {
  LatticePoint corner;
  Simplex face;  // {z} at the origin, otherwise the face of sigma with vertices v_i, i in the support
};

struct ConeCube {
  CubicalComplex cube;
  std::vector<CornerLabel> labels;
};

/// The unit n-cube as the cone z * sigma on an (n-1)-simplex sigma = v_1..v_n:
/// z at the origin, v_i at e_i, and the barycenter of each face sigma' at
/// the sum of its e_i. Requires 1 <= n <= 6.
ConeCube cube_from_cone(int n);

/// Cuts the unit n-cube by counts[i] hyperplanes orthogonal to e_i. Lattice
/// coordinate x(i) ranges over 0..counts[i]+1 and sits at x(i)/(counts[i]+1).
CubicalComplex subdivide_cube(int n, const std::vector<int>& counts);

/// Generic face poset: the dual of a ball need not be cubical.
struct CellPoset {
  struct Cell {
    int dimension = 0;
    std::string label;
    std::vector<std::size_t> facets;  // codimension-one faces
  };
  std::vector<Cell> cells;
  std::vector<std::size_t> cell_counts() const;
};

CellPoset to_poset(const CubicalComplex& k);

/// Dual of a cubical n-ball. One dual (n-d)-cell per primal d-cell not in
/// the boundary; the dual of a cell spans from the centers of the adjacent
/// top cells, on a lattice of twice the resolution. Throws TopologyError if
/// the input fails the ball checks (pure, chi = 1, boundary chi = 1 + (-1)^(n-1)).
CubicalComplex dual_cells(const CubicalComplex& ball);
/// The dual box of one interior unit cell, on the doubled lattice.
Box dual_box(const Box& cell);

/// Dual of a simplicial n-ball: one dual cell per interior simplex, with
/// incidence reversed. Throws TopologyError if the input is not a ball.
CellPoset dual_cells(const SimplicialComplex& ball);

}  // namespace topmin
