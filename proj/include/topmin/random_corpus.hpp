// Seeded generators for the randomized property corpus. All randomness is
// drawn from an explicitly passed engine.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "topmin/additivity.hpp"
#include "topmin/simplicial_complex.hpp"
#include "topmin/surface_width.hpp"

namespace topmin {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);  // inclusive

/// Random complex on vertices 1..v (v in [1, max_vertices]) with 1..max_facets
/// random faces of size 1..max_facet_size.
SimplicialComplex random_complex(Rng& rng, int max_vertices, int max_facet_size, int max_facets,
                                 const std::string& name = "rand");

/// Complex drawn from a mix of shapes with nontrivial homology: random graphs,
/// dense low-dimensional complexes, induced parts of the 6-vertex projective
/// plane (torsion), and simplex boundaries with facets removed.
/// At most max_vertices vertices and dimension at most max_dim.
SimplicialComplex random_shaped_complex(Rng& rng, int max_vertices, int max_dim, const std::string& name = "rand");

/// Y with 3..max_vertices vertices, 1 <= dim(Y) <= max_dim, and X the full
/// subcomplex induced on a random nonempty proper vertex subset, redrawn
/// until X is not ACYCLIC.
std::pair<SimplicialComplex, SimplicialComplex> random_full_pair(Rng& rng, int max_vertices, int max_dim);

/// Matching-consistent configuration over 1..max_tets tetrahedra with at most
/// max_indexed copies of index-carrying pieces. Faces are glued only when a
/// permutation makes their arc counts agree.
SurfaceConfiguration random_configuration(Rng& rng, int max_tets, int max_indexed);

/// 1..max_components components, chi in [-max_abs_chi, 2], weight in [0, max_weight].
Surface random_surface(Rng& rng, int max_components, int max_abs_chi, int max_weight);

/// Subdivision counts for a random cube of dimension 1..max_dim.
std::vector<int> random_cut_counts(Rng& rng, int max_dim, int max_cuts);

}  // namespace topmin
