#include "topmin/join_calculus.hpp"

#include <algorithm>

#include "topmin/smith.hpp"

namespace topmin {

AbelianGroup tensor(const AbelianGroup& g, const AbelianGroup& h) {
  std::vector<BigInt> orders;
  for (std::int64_t i = 0; i < g.rank; ++i) orders.insert(orders.end(), h.torsion.begin(), h.torsion.end());
  for (std::int64_t i = 0; i < h.rank; ++i) orders.insert(orders.end(), g.torsion.begin(), g.torsion.end());
  for (const auto& d : g.torsion)
    for (const auto& e : h.torsion) orders.push_back(gcd_value(d, e));
  return AbelianGroup::make(g.rank * h.rank, std::move(orders));
}

AbelianGroup tor(const AbelianGroup& g, const AbelianGroup& h) {
  std::vector<BigInt> orders;
  for (const auto& d : g.torsion)
    for (const auto& e : h.torsion) orders.push_back(gcd_value(d, e));
  return AbelianGroup::make(0, std::move(orders));
}

HomologyProfile join_homology_via_formula(const HomologyProfile& a, const HomologyProfile& b) {
  if (a.is_empty_marker() || b.is_empty_marker()) {
    throw TopologyError("join formula needs nonempty operands; the join with the empty complex is the other complex");
  }
  // Highest possibly nonzero degree: (la - 1) + (lb - 1) + 2 from a Tor term.
  const int top = a.length() + b.length();
  std::vector<AbelianGroup> groups(static_cast<std::size_t>(top + 1));
  for (int i = 0; i < a.length(); ++i) {
    for (int j = 0; j < b.length(); ++j) {
      auto& t = groups[static_cast<std::size_t>(i + j + 1)];
      t = direct_sum(t, tensor(a[i], b[j]));
      auto& u = groups[static_cast<std::size_t>(i + j + 2)];
      u = direct_sum(u, tor(a[i], b[j]));
    }
  }
  return HomologyProfile(std::move(groups));
}

MilnorReport verify_milnor(const SimplicialComplex& a, const SimplicialComplex& b) {
  MilnorReport report;
  report.left_name = a.name();
  report.right_name = b.name();
  report.direct = reduced_homology(disjoint_join(a, b));
  if (a.empty() || b.empty()) {
    report.identity_rule = true;
    report.via_formula = reduced_homology(a.empty() ? b : a);
  } else {
    report.via_formula = join_homology_via_formula(reduced_homology(a), reduced_homology(b));
  }
  const int len = std::max(report.direct.length(), report.via_formula.length());
  for (int k = 0; k < len; ++k) report.agrees.push_back(report.direct[k] == report.via_formula[k]);
  report.pass = report.direct == report.via_formula;
  return report;
}

HomologyIndex index_sum_law(std::span<const HomologyIndex> indices) {
  int total = 0;
  for (const auto& idx : indices) {
    if (idx.is_acyclic()) return HomologyIndex::acyclic();
    total += *idx.value();
  }
  return total == 0 ? HomologyIndex::zero() : HomologyIndex::index(total);
}

}  // namespace topmin
