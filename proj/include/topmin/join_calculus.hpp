// Milnor's formula for the reduced homology of a join, and the index law it implies.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "topmin/homology.hpp"

namespace topmin {

/// Tensor product of finitely generated abelian groups.
AbelianGroup tensor(const AbelianGroup& g, const AbelianGroup& h);
/// Tor_1^Z of finitely generated abelian groups.
AbelianGroup tor(const AbelianGroup& g, const AbelianGroup& h);

/// Reduced homology of A * B from the reduced homologies of A and B:
///   H~_k(A*B) = sum_{i+j=k-1} H~_i(A) (x) H~_j(B) + sum_{i+j=k-2} Tor(H~_i(A), H~_j(B)).
/// Sums with no terms are zero. Throws TopologyError on an empty-complex
/// operand; joins with the empty complex are identities at the complex level.
HomologyProfile join_homology_via_formula(const HomologyProfile& a, const HomologyProfile& b);

struct MilnorReport {
  std::string left_name;
  std::string right_name;
  HomologyProfile direct;        // reduced homology of the join complex
  HomologyProfile via_formula;   // formula applied to the operands' profiles
  bool identity_rule = false;    // an operand was empty
  std::vector<bool> agrees;      // per degree 0..max length - 1
  bool pass = false;
};

/// Compares the directly computed homology of A * B with the formula.
/// Overlapping vertex sets are namespaced before joining.
MilnorReport verify_milnor(const SimplicialComplex& a, const SimplicialComplex& b);

/// Index of a join from the operands' indices: ZERO is the identity, any
/// ACYCLIC operand makes the result ACYCLIC, otherwise indices add.
/// At the homology level this holds whenever the lowest nonzero groups of
/// the operands have a nonzero tensor product (always, unless both are
/// finite of coprime exponent).
HomologyIndex index_sum_law(std::span<const HomologyIndex> indices);

}  // namespace topmin
