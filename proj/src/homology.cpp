#include "topmin/homology.hpp"

#include <algorithm>
#include <map>

#include "topmin/smith.hpp"

namespace topmin {

AbelianGroup AbelianGroup::make(std::int64_t rank, std::vector<BigInt> cyclic_orders) {
  if (rank < 0) throw TopologyError("abelian group rank must be nonnegative");
  std::vector<BigInt> nonunit;
  for (auto& d : cyclic_orders) {
    BigInt a = abs_value(d);
    if (a == 0) {
      ++rank;  // Z/0 = Z
    } else if (a != 1) {
      nonunit.push_back(a);
    }
  }
  // Coprime parts merge into a unit and a product: Z/2 + Z/3 = Z/1 + Z/6.
  auto chain = normalize_divisibility_chain(std::move(nonunit));
  std::erase(chain, BigInt(1));
  return {rank, std::move(chain)};
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::string s;
  if (rank == 1) s = "Z";
  if (rank > 1) s = "Z^" + std::to_string(rank);
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.str();
  }
  return s;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<BigInt> t = a.torsion;
  t.insert(t.end(), b.torsion.begin(), b.torsion.end());
  return AbelianGroup::make(a.rank + b.rank, std::move(t));
}

HomologyProfile::HomologyProfile(std::vector<AbelianGroup> groups) : groups_(std::move(groups)) {
  while (!groups_.empty() && groups_.back().trivial()) groups_.pop_back();
}

HomologyProfile HomologyProfile::empty_complex() {
  HomologyProfile p;
  p.empty_marker_ = true;
  return p;
}

AbelianGroup HomologyProfile::operator[](int k) const {
  if (k < 0 || k >= length()) return {};
  return groups_[static_cast<std::size_t>(k)];
}

HomologyIndex HomologyIndex::index(int n) {
  if (n < 1) throw TopologyError("INDEX(n) requires n >= 1");
  return {Kind::Index, n};
}

std::optional<int> HomologyIndex::value() const {
  if (kind_ == Kind::Acyclic) return std::nullopt;
  return n_;
}

bool HomologyIndex::at_most(int n) const {
  auto v = value();
  return v && *v <= n;
}

std::string HomologyIndex::to_string() const {
  switch (kind_) {
    case Kind::Zero:
      return "ZERO";
    case Kind::Index:
      return "INDEX(" + std::to_string(n_) + ")";
    case Kind::Acyclic:
      return "ACYCLIC";
  }
  return {};
}

namespace {

// Faces as sorted vertex-index lists, grouped by dimension.
std::vector<std::vector<std::vector<int>>> indexed_faces(const SimplicialComplex& k) {
  auto verts = k.vertices();
  auto id = [&](const Vertex& v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  auto by_dim = k.faces_by_dimension();
  std::vector<std::vector<std::vector<int>>> out(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    out[d].reserve(by_dim[d].size());
    for (const auto& s : by_dim[d]) {
      std::vector<int> ids;
      for (const auto& v : s.vertices()) ids.push_back(id(v));
      out[d].push_back(std::move(ids));
    }
    // Integer ids preserve the vertex order, so this is already sorted.
  }
  return out;
}

}  // namespace

std::vector<SparseIntegerMatrix> boundary_matrices(const SimplicialComplex& k) {
  if (k.empty()) throw TopologyError("boundary matrices need a nonempty complex");
  auto faces = indexed_faces(k);
  std::vector<SparseIntegerMatrix> out;
  out.reserve(faces.size());

  SparseIntegerMatrix augmentation(1, static_cast<Eigen::Index>(faces[0].size()));
  for (std::size_t j = 0; j < faces[0].size(); ++j) augmentation.insert(0, static_cast<Eigen::Index>(j)) = BigInt(1);
  augmentation.makeCompressed();
  out.push_back(std::move(augmentation));

  for (std::size_t d = 1; d < faces.size(); ++d) {
    const auto& lower = faces[d - 1];
    SparseIntegerMatrix m(static_cast<Eigen::Index>(lower.size()), static_cast<Eigen::Index>(faces[d].size()));
    std::vector<Eigen::Triplet<BigInt>> triplets;
    triplets.reserve(faces[d].size() * (d + 1));
    for (std::size_t j = 0; j < faces[d].size(); ++j) {
      const auto& s = faces[d][j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> f;
        f.reserve(s.size() - 1);
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != i) f.push_back(s[t]);
        auto row = std::lower_bound(lower.begin(), lower.end(), f) - lower.begin();
        triplets.emplace_back(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j),
                              BigInt(i % 2 == 0 ? 1 : -1));
      }
    }
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.makeCompressed();
    out.push_back(std::move(m));
  }
  return out;
}

HomologyProfile reduced_homology(const SimplicialComplex& k) {
  if (k.empty()) return HomologyProfile::empty_complex();
  auto boundaries = boundary_matrices(k);
  const std::size_t top = boundaries.size();  // chain groups C_0 .. C_{top-1}
  std::vector<std::int64_t> ranks(top + 1, 0);
  std::vector<std::vector<BigInt>> factors(top + 1);
  for (std::size_t d = 0; d < top; ++d) {
    factors[d] = smith_normal_form(boundaries[d]);
    ranks[d] = static_cast<std::int64_t>(factors[d].size());
  }
  std::vector<AbelianGroup> groups;
  for (std::size_t d = 0; d < top; ++d) {
    const auto chains = static_cast<std::int64_t>(boundaries[d].cols());
    std::int64_t betti = chains - ranks[d] - ranks[d + 1];
    groups.push_back(AbelianGroup::make(betti, factors[d + 1]));
  }
  return HomologyProfile(std::move(groups));
}

HomologyIndex homology_index(const HomologyProfile& profile) {
  if (profile.is_empty_marker()) return HomologyIndex::zero();
  for (int k = 0; k < profile.length(); ++k)
    if (!profile[k].trivial()) return HomologyIndex::index(k + 1);
  return HomologyIndex::acyclic();
}

HomologyIndex homology_index(const SimplicialComplex& k) { return homology_index(reduced_homology(k)); }

std::string format_profile(const HomologyProfile& profile, int top_degree) {
  if (profile.is_empty_marker()) return "H~-1 = Z (empty complex)\n";
  int top = std::max(top_degree, profile.length() - 1);
  std::string out;
  for (int k = 0; k <= top; ++k) out += "H~" + std::to_string(k) + " = " + profile[k].to_string() + "\n";
  if (top < 0) out += "(acyclic: all reduced groups trivial)\n";
  return out;
}

}  // namespace topmin
