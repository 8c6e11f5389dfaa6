// Exhaustive check of the subcomplex dichotomy: for X a full subcomplex of Y
// with index n, either ind(Y) <= n or some simplex tau of Y outside X has
// ind(V_tau) <= n - dim(tau), where V_tau is the adjacency subcomplex.
// Indices are homology indices; an ACYCLIC complex satisfies no bound.
#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "topmin/homology.hpp"
#include "topmin/simplicial_complex.hpp"

namespace topmin {

struct DichotomyWitness {
  enum class Verdict { YSmall, TauFound, Failure };

  Verdict verdict = Verdict::Failure;
  std::optional<Simplex> tau;
  HomologyIndex index_x = HomologyIndex::zero();
  HomologyIndex index_y = HomologyIndex::zero();
  std::optional<HomologyIndex> index_v;  // for the returned tau
  int tau_dimension = -1;
  std::size_t candidates_examined = 0;
  /// Pairs sigma < tau among examined candidates with V_tau not inside V_sigma.
  std::size_t monotonicity_violations = 0;
  /// Kept so FAILURE verdicts can be archived with full data.
  HomologyProfile profile_x;
  HomologyProfile profile_y;
};

std::string_view verdict_name(DichotomyWitness::Verdict v);

/// Y_SMALL when ind(Y) <= n; otherwise the first tau (by increasing
/// dimension, then lexicographically) with all vertices outside X and
/// ind(V_tau) <= n - dim(tau); FAILURE if none exists. Throws TopologyError
/// when X is not a full subcomplex of Y or X is ACYCLIC.
DichotomyWitness check_dichotomy(const SimplicialComplex& x, const SimplicialComplex& y);

}  // namespace topmin
