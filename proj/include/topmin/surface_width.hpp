// Width of a surface and its strict decrease under compressions.
#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "topmin/piece_catalog.hpp"

namespace topmin {

using Surface = std::vector<SurfaceComponentModel>;

/// (-chi, weight) for one component.
struct WidthPair {
  int neg_chi = 0;
  int weight = 0;
  auto operator<=>(const WidthPair&) const = default;
};

/// Multiset of component pairs in non-increasing lexicographic order.
/// Ordered lexicographically pair by pair; when one sequence is a prefix of
/// the other the shorter one is smaller.
class Width {
 public:
  explicit Width(std::vector<WidthPair> pairs);
  const std::vector<WidthPair>& pairs() const { return pairs_; }
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Width& a, const Width& b) {
    return std::lexicographical_compare_three_way(a.pairs_.begin(), a.pairs_.end(), b.pairs_.begin(),
                                                  b.pairs_.end());
  }
  friend bool operator==(const Width& a, const Width& b) { return a.pairs_ == b.pairs_; }

 private:
  std::vector<WidthPair> pairs_;
};

/// Components flagged in_ball are ignored. The empty surface has width {(0,0)}.
Width width(const Surface& surface);

enum class WidthOrdering { Less, Equal, Greater };
WidthOrdering compare_width(const Width& a, const Width& b);

struct SurgeryMove {
  enum class Kind { HonestCompressNonsep, HonestCompressSep, HonestBoundaryCompress, Dishonest };

  Kind kind = Kind::HonestCompressNonsep;
  std::size_t target = 0;
  /// HonestCompressSep only: the two resulting components.
  std::pair<SurfaceComponentModel, SurfaceComponentModel> split{};
  /// Dishonest only: how many fewer times the surface meets the 1-skeleton.
  int weight_reduction = 0;

  static SurgeryMove nonseparating(std::size_t target);
  static SurgeryMove separating(std::size_t target, SurfaceComponentModel a, SurfaceComponentModel b);
  static SurgeryMove boundary(std::size_t target);
  static SurgeryMove dishonest(std::size_t target, int k);
};

std::string_view move_name(SurgeryMove::Kind kind);

/// Empty if the move is valid on `surface`, else the reason.
///   nonseparating: target chi <= 0 (a compressing curve that does not separate).
///   boundary:      target chi <= 0.
///   separating:    parts' chi sum to chi + 2 (compression) or chi + 1
///                  (boundary compression along a separating arc), each part
///                  has -chi strictly below the target's and chi <= 2, and
///                  the parts' weights sum to the target weight.
///   dishonest:     1 <= k <= target weight.
std::string surgery_violation(const Surface& surface, const SurgeryMove& move);

/// Arithmetic effect of surgery on the target component:
///   nonseparating compression: chi += 2, weight unchanged;
///   boundary compression:      chi += 1, weight unchanged;
///   separating (compression or boundary compression): target replaced by
///     the two declared parts, whose chi sum is chi + 2 or chi + 1;
///   dishonest:                 weight -= k, chi unchanged; the sphere cut
///     off in a ball is discarded.
/// Throws TopologyError when the move is invalid.
Surface apply_surgery(const Surface& surface, const SurgeryMove& move);

struct WidthDecreaseVerdict {
  Width before;
  Width after;
  bool pass;
};

WidthDecreaseVerdict verify_width_decrease(const Surface& surface, const SurgeryMove& move);

/// Every valid move on `surface`, enumerating all separating splits and
/// dishonest reductions.
std::vector<SurgeryMove> available_moves(const Surface& surface);

}  // namespace topmin
