// Exact reduced simplicial homology over Z and the homology index.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topmin/bigint.hpp"
#include "topmin/simplicial_complex.hpp"

namespace topmin {

/// Finitely generated abelian group Z^rank + Z/d1 + Z/d2 + ... with
/// d1 | d2 | ... and every d >= 2.
struct AbelianGroup {
  std::int64_t rank = 0;
  std::vector<BigInt> torsion;

  /// Builds a normalized group from arbitrary cyclic orders; orders 1 are dropped.
  static AbelianGroup make(std::int64_t rank, std::vector<BigInt> cyclic_orders = {});
  static AbelianGroup free(std::int64_t rank) { return {rank, {}}; }
  static AbelianGroup cyclic(const BigInt& order) { return make(0, {order}); }

  bool trivial() const { return rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) { return !(a == b); }
};

/// Direct sum, renormalized.
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Graded reduced homology. Trailing trivial groups are trimmed, so an
/// acyclic complex has no groups. The empty complex is a separate marker
/// (its reduced H_{-1} is Z).
class HomologyProfile {
 public:
  HomologyProfile() = default;
  explicit HomologyProfile(std::vector<AbelianGroup> groups);
  static HomologyProfile empty_complex();

  bool is_empty_marker() const { return empty_marker_; }
  const std::vector<AbelianGroup>& groups() const { return groups_; }
  /// Trivial group outside the stored range.
  AbelianGroup operator[](int k) const;
  /// Highest stored degree + 1.
  int length() const { return static_cast<int>(groups_.size()); }
  bool acyclic() const { return !empty_marker_ && groups_.empty(); }

  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    return a.empty_marker_ == b.empty_marker_ && a.groups_ == b.groups_;
  }
  friend bool operator!=(const HomologyProfile& a, const HomologyProfile& b) { return !(a == b); }

 private:
  std::vector<AbelianGroup> groups_;
  bool empty_marker_ = false;
};

using GradedGroupList = HomologyProfile;

/// ZERO for the empty complex, INDEX(n) for the smallest n with
/// H~_{n-1} != 0, ACYCLIC for a nonempty complex with no reduced homology.
class HomologyIndex {
 public:
  enum class Kind { Zero, Index, Acyclic };

  static HomologyIndex zero() { return HomologyIndex(Kind::Zero, 0); }
  static HomologyIndex index(int n);
  static HomologyIndex acyclic() { return HomologyIndex(Kind::Acyclic, 0); }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_index() const { return kind_ == Kind::Index; }
  bool is_acyclic() const { return kind_ == Kind::Acyclic; }
  /// 0 for ZERO, n for INDEX(n); nullopt for ACYCLIC.
  std::optional<int> value() const;
  /// ZERO and INDEX compare numerically; ACYCLIC is never at most anything.
  bool at_most(int n) const;
  /// "ZERO", "INDEX(3)", "ACYCLIC"
  std::string to_string() const;

  friend bool operator==(const HomologyIndex& a, const HomologyIndex& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_;
  }
  friend bool operator!=(const HomologyIndex& a, const HomologyIndex& b) { return !(a == b); }

 private:
  HomologyIndex(Kind kind, int n) : kind_(kind), n_(n) {}
  Kind kind_;
  int n_;
};

/// Reduced boundary operators of a nonempty complex. Entry 0 is the
/// augmentation C_0 -> Z (a 1 x f0 row of ones); entry k >= 1 maps
/// k-chains to (k-1)-chains. Columns and rows follow the sorted order of
/// `faces_by_dimension()`; the sign of vertex i in a face is (-1)^i.
std::vector<SparseIntegerMatrix> boundary_matrices(const SimplicialComplex& k);

HomologyProfile reduced_homology(const SimplicialComplex& k);
HomologyIndex homology_index(const SimplicialComplex& k);
HomologyIndex homology_index(const HomologyProfile& profile);

/// One line per degree, "H~k = Z^r + Z/d ..." up to the complex dimension.
std::string format_profile(const HomologyProfile& profile, int top_degree = -1);

}  // namespace topmin
