#include "topmin/lemma_lab.hpp"

#include <algorithm>
#include <map>

namespace topmin {

std::string_view verdict_name(DichotomyWitness::Verdict v) {
  switch (v) {
    case DichotomyWitness::Verdict::YSmall:
      return "Y_SMALL";
    case DichotomyWitness::Verdict::TauFound:
      return "TAU_FOUND";
    case DichotomyWitness::Verdict::Failure:
      return "FAILURE";
  }
  return "?";
}

DichotomyWitness check_dichotomy(const SimplicialComplex& x, const SimplicialComplex& y) {
  if (!x.is_full_subcomplex_of(y)) throw TopologyError("dichotomy: X is not a full subcomplex of Y");
  DichotomyWitness w;
  w.profile_x = reduced_homology(x);
  w.profile_y = reduced_homology(y);
  w.index_x = homology_index(w.profile_x);
  w.index_y = homology_index(w.profile_y);
  if (w.index_x.is_acyclic()) throw TopologyError("dichotomy: X is acyclic, its index is undefined");
  const int n = *w.index_x.value();

  if (w.index_y.at_most(n)) {
    w.verdict = DichotomyWitness::Verdict::YSmall;
    return w;
  }

  std::map<Simplex, SimplicialComplex> adjacency;
  for (const auto& layer : y.faces_by_dimension()) {
    for (const auto& tau : layer) {
      bool outside = std::none_of(tau.vertices().begin(), tau.vertices().end(),
                                  [&](const Vertex& v) { return x.has_vertex(v); });
      if (!outside) continue;
      ++w.candidates_examined;
      auto v_tau = adjacency_subcomplex(x, y, tau);
      for (const auto& sigma : tau.boundary_faces()) {
        auto it = adjacency.find(sigma);
        if (it != adjacency.end() && !v_tau.is_subcomplex_of(it->second)) ++w.monotonicity_violations;
      }
      auto idx = homology_index(v_tau);
      if (idx.at_most(n - tau.dimension())) {
        w.verdict = DichotomyWitness::Verdict::TauFound;
        w.tau = tau;
        w.index_v = idx;
        w.tau_dimension = tau.dimension();
        return w;
      }
      adjacency.emplace(tau, std::move(v_tau));
    }
  }
  w.verdict = DichotomyWitness::Verdict::Failure;
  return w;
}

}  // namespace topmin
