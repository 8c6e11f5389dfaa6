#include "topmin/surface_width.hpp"

#include <algorithm>

namespace topmin {

Width::Width(std::vector<WidthPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(), std::greater<>());
}

std::string Width::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(pairs_[i].neg_chi) + "," + std::to_string(pairs_[i].weight) + ")";
  }
  return s + "}";
}

Width width(const Surface& surface) {
  std::vector<WidthPair> pairs;
  for (const auto& c : surface)
    if (!c.in_ball) pairs.push_back({-c.chi, c.weight});
  if (pairs.empty()) pairs.push_back({0, 0});
  return Width(std::move(pairs));
}

WidthOrdering compare_width(const Width& a, const Width& b) {
  auto c = a <=> b;
  if (c < 0) return WidthOrdering::Less;
  if (c > 0) return WidthOrdering::Greater;
  return WidthOrdering::Equal;
}

SurgeryMove SurgeryMove::nonseparating(std::size_t target) {
  SurgeryMove m;
  m.kind = Kind::HonestCompressNonsep;
  m.target = target;
  return m;
}

SurgeryMove SurgeryMove::separating(std::size_t target, SurfaceComponentModel a, SurfaceComponentModel b) {
  SurgeryMove m;
  m.kind = Kind::HonestCompressSep;
  m.target = target;
  m.split = {a, b};
  return m;
}

SurgeryMove SurgeryMove::boundary(std::size_t target) {
  SurgeryMove m;
  m.kind = Kind::HonestBoundaryCompress;
  m.target = target;
  return m;
}

SurgeryMove SurgeryMove::dishonest(std::size_t target, int k) {
  SurgeryMove m;
  m.kind = Kind::Dishonest;
  m.target = target;
  m.weight_reduction = k;
  return m;
}

std::string_view move_name(SurgeryMove::Kind kind) {
  switch (kind) {
    case SurgeryMove::Kind::HonestCompressNonsep:
      return "HONEST_COMPRESS_NONSEP";
    case SurgeryMove::Kind::HonestCompressSep:
      return "HONEST_COMPRESS_SEP";
    case SurgeryMove::Kind::HonestBoundaryCompress:
      return "HONEST_BOUNDARY_COMPRESS";
    case SurgeryMove::Kind::Dishonest:
      return "DISHONEST";
  }
  return "?";
}

std::string surgery_violation(const Surface& surface, const SurgeryMove& move) {
  if (move.target >= surface.size()) return "no component " + std::to_string(move.target);
  const auto& t = surface[move.target];
  if (t.in_ball) return "target component was discarded";
  switch (move.kind) {
    case SurgeryMove::Kind::HonestCompressNonsep:
      if (t.chi > 0) return "no nonseparating compression on a component with chi > 0";
      return {};
    case SurgeryMove::Kind::HonestBoundaryCompress:
      if (t.chi > 0) return "no boundary compression on a component with chi > 0";
      return {};
    case SurgeryMove::Kind::HonestCompressSep: {
      const auto& [a, b] = move.split;
      const int sum = a.chi + b.chi;
      if (sum != t.chi + 2 && sum != t.chi + 1)
        return "split chi sum " + std::to_string(sum) + " is neither chi+2 nor chi+1";
      if (-a.chi >= -t.chi || -b.chi >= -t.chi) return "split part does not lower -chi";
      if (a.chi > 2 || b.chi > 2) return "split part has chi > 2";
      if (a.weight < 0 || b.weight < 0 || a.weight + b.weight != t.weight) return "split weights do not sum to target weight";
      return {};
    }
    case SurgeryMove::Kind::Dishonest:
      if (move.weight_reduction < 1) return "dishonest weight reduction must be at least 1";
      if (move.weight_reduction > t.weight) return "dishonest weight reduction exceeds target weight";
      return {};
  }
  return "unknown move";
}

Surface apply_surgery(const Surface& surface, const SurgeryMove& move) {
  if (auto why = surgery_violation(surface, move); !why.empty()) throw TopologyError("invalid surgery: " + why);
  Surface out = surface;
  auto& t = out[move.target];
  switch (move.kind) {
    case SurgeryMove::Kind::HonestCompressNonsep:
      t.chi += 2;
      break;
    case SurgeryMove::Kind::HonestBoundaryCompress:
      t.chi += 1;
      break;
    case SurgeryMove::Kind::HonestCompressSep:
      t = move.split.first;
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(move.target) + 1, move.split.second);
      break;
    case SurgeryMove::Kind::Dishonest:
      t.weight -= move.weight_reduction;
      break;
  }
  return out;
}

WidthDecreaseVerdict verify_width_decrease(const Surface& surface, const SurgeryMove& move) {
  Width before = width(surface);
  Width after = width(apply_surgery(surface, move));
  const bool pass = compare_width(after, before) == WidthOrdering::Less;
  return {std::move(before), std::move(after), pass};
}

std::vector<SurgeryMove> available_moves(const Surface& surface) {
  std::vector<SurgeryMove> moves;
  for (std::size_t i = 0; i < surface.size(); ++i) {
    const auto& t = surface[i];
    if (t.in_ball) continue;
    if (t.chi <= 0) {
      moves.push_back(SurgeryMove::nonseparating(i));
      moves.push_back(SurgeryMove::boundary(i));
    }
    for (int sum : {t.chi + 2, t.chi + 1}) {
      for (int ca = t.chi + 1; ca <= 2; ++ca) {
        const int cb = sum - ca;
        if (cb < ca || cb > 2 || cb <= t.chi) continue;
        for (int wa = 0; wa <= t.weight; ++wa)
          moves.push_back(SurgeryMove::separating(i, {ca, wa, false}, {cb, t.weight - wa, false}));
      }
    }
    for (int k = 1; k <= t.weight; ++k) moves.push_back(SurgeryMove::dishonest(i, k));
  }
  return moves;
}

}  // namespace topmin
