#include "topmin/cubical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace topmin {

namespace {

bool by_dimension(const Box& a, const Box& b) {
  const int da = a.dimension();
  const int db = b.dimension();
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

int Box::dimension() const {
  int d = 0;
  for (std::size_t i = 0; i < lo.size(); ++i) d += lo[i] < hi[i] ? 1 : 0;
  return d;
}

bool Box::is_face_of(const Box& other) const {
  if (lo.size() != other.lo.size()) return false;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] < other.lo[i] || hi[i] > other.hi[i]) return false;
    // A face keeps each axis either whole or collapsed to an endpoint.
    if (lo[i] != hi[i] && (lo[i] != other.lo[i] || hi[i] != other.hi[i])) return false;
    if (lo[i] == hi[i] && other.lo[i] != other.hi[i] && lo[i] != other.lo[i] && lo[i] != other.hi[i]) return false;
  }
  return true;
}

std::vector<Box> Box::facets() const {
  std::vector<Box> out;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] == hi[i]) continue;
    Box low = *this;
    low.hi[i] = lo[i];
    Box high = *this;
    high.lo[i] = hi[i];
    out.push_back(std::move(low));
    out.push_back(std::move(high));
  }
  return out;
}

std::vector<LatticePoint> Box::corners() const {
  std::vector<LatticePoint> out{{}};
  for (std::size_t i = 0; i < lo.size(); ++i) {
    std::vector<LatticePoint> next;
    for (const auto& p : out) {
      for (int v : lo[i] == hi[i] ? std::vector<int>{lo[i]} : std::vector<int>{lo[i], hi[i]}) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CubicalComplex::CubicalComplex(int ambient_dimension, std::vector<Box> cells, std::vector<int> denominators)
    : ambient_(ambient_dimension), denominators_(std::move(denominators)) {
  if (denominators_.empty()) denominators_.assign(static_cast<std::size_t>(ambient_), 1);
  if (static_cast<int>(denominators_.size()) != ambient_) throw TopologyError("denominator count must match dimension");
  std::set<Box> closed;
  std::vector<Box> stack = std::move(cells);
  while (!stack.empty()) {
    Box b = std::move(stack.back());
    stack.pop_back();
    if (static_cast<int>(b.lo.size()) != ambient_ || b.hi.size() != b.lo.size())
      throw TopologyError("box has the wrong number of coordinates");
    for (std::size_t i = 0; i < b.lo.size(); ++i)
      if (b.lo[i] > b.hi[i]) throw TopologyError("box with lo > hi");
    if (!closed.insert(b).second) continue;
    for (auto& f : b.facets()) stack.push_back(std::move(f));
  }
  cells_.assign(closed.begin(), closed.end());
  std::sort(cells_.begin(), cells_.end(), by_dimension);
}

int CubicalComplex::dimension() const { return cells_.empty() ? -1 : cells_.back().dimension(); }

std::vector<std::size_t> CubicalComplex::cell_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& c : cells_) ++counts[static_cast<std::size_t>(c.dimension())];
  return counts;
}

std::int64_t CubicalComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& c : cells_) chi += c.dimension() % 2 == 0 ? 1 : -1;
  return chi;
}

std::size_t CubicalComplex::index_of(const Box& b) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), b, by_dimension);
  if (it == cells_.end() || *it != b) throw TopologyError("box is not a cell of the complex");
  return static_cast<std::size_t>(it - cells_.begin());
}

bool CubicalComplex::contains(const Box& b) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), b, by_dimension);
  return it != cells_.end() && *it == b;
}

std::vector<std::size_t> CubicalComplex::facet_indices(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& f : cells_.at(i).facets()) out.push_back(index_of(f));
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::VectorXd CubicalComplex::position(const LatticePoint& p) const {
  Eigen::VectorXd x(ambient_);
  for (int i = 0; i < ambient_; ++i) x(i) = static_cast<double>(p[static_cast<std::size_t>(i)]) / denominators_[static_cast<std::size_t>(i)];
  return x;
}

std::vector<bool> CubicalComplex::boundary_mask() const {
  const int n = dimension();
  std::vector<int> cofacets(cells_.size(), 0);
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dimension() == n)
      for (auto f : facet_indices(i)) ++cofacets[f];
  std::vector<bool> mask(cells_.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dimension() == n - 1 && cofacets[i] == 1) stack.push_back(i);
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    if (mask[i]) continue;
    mask[i] = true;
    for (auto f : facet_indices(i)) stack.push_back(f);
  }
  return mask;
}

ConeCube cube_from_cone(int n) {
  if (n < 1 || n > 6) throw TopologyError("cube_from_cone needs 1 <= n <= 6, got " + std::to_string(n));
  Box top{LatticePoint(static_cast<std::size_t>(n), 0), LatticePoint(static_cast<std::size_t>(n), 1)};
  ConeCube out{CubicalComplex(n, {top}), {}};
  for (const auto& corner : top.corners()) {
    std::vector<Vertex> support;
    for (int i = 0; i < n; ++i)
      if (corner[static_cast<std::size_t>(i)] == 1) support.emplace_back("v" + std::to_string(i + 1));
    if (support.empty()) support.emplace_back("z");
    out.labels.push_back({corner, Simplex(std::move(support))});
  }
  return out;
}

CubicalComplex subdivide_cube(int n, const std::vector<int>& counts) {
  if (n < 0 || static_cast<int>(counts.size()) != n) throw TopologyError("subdivide_cube needs one count per axis");
  for (int c : counts)
    if (c < 0) throw TopologyError("cut counts must be nonnegative");
  std::vector<Box> tops{{{}, {}}};
  for (int i = 0; i < n; ++i) {
    std::vector<Box> next;
    for (const auto& b : tops) {
      for (int x = 0; x <= counts[static_cast<std::size_t>(i)]; ++x) {
        Box c = b;
        c.lo.push_back(x);
        c.hi.push_back(x + 1);
        next.push_back(std::move(c));
      }
    }
    tops = std::move(next);
  }
  std::vector<int> denominators;
  for (int c : counts) denominators.push_back(c + 1);
  return CubicalComplex(n, std::move(tops), std::move(denominators));
}

std::vector<std::size_t> CellPoset::cell_counts() const {
  std::vector<std::size_t> counts;
  for (const auto& c : cells) {
    if (static_cast<int>(counts.size()) <= c.dimension) counts.resize(static_cast<std::size_t>(c.dimension + 1), 0);
    ++counts[static_cast<std::size_t>(c.dimension)];
  }
  return counts;
}

CellPoset to_poset(const CubicalComplex& k) {
  CellPoset p;
  for (std::size_t i = 0; i < k.cells().size(); ++i) {
    const auto& b = k.cells()[i];
    std::string label;
    for (std::size_t a = 0; a < b.lo.size(); ++a) {
      if (a) label += "x";
      label += b.lo[a] == b.hi[a] ? std::to_string(b.lo[a]) : "[" + std::to_string(b.lo[a]) + "," + std::to_string(b.hi[a]) + "]";
    }
    p.cells.push_back({b.dimension(), label, k.facet_indices(i)});
  }
  return p;
}

namespace {

void require_cubical_ball(const CubicalComplex& k) {
  const int n = k.dimension();
  if (n < 0) throw TopologyError("ball check: complex is empty");
  std::vector<int> cofacets(k.cells().size(), 0);
  for (std::size_t i = 0; i < k.cells().size(); ++i)
    for (auto f : k.facet_indices(i)) ++cofacets[f];
  for (std::size_t i = 0; i < k.cells().size(); ++i) {
    const int d = k.cells()[i].dimension();
    if (d < n && cofacets[i] == 0) throw TopologyError("ball check: complex is not pure");
    if (d == n - 1 && cofacets[i] > 2) throw TopologyError("ball check: a codimension-one cell has more than two cofaces");
  }
  if (k.euler_characteristic() != 1) throw TopologyError("ball check: Euler characteristic is not 1");
  auto mask = k.boundary_mask();
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) chi += k.cells()[i].dimension() % 2 == 0 ? 1 : -1;
  const std::int64_t sphere_chi = 1 + ((n - 1) % 2 == 0 ? 1 : -1);
  if (chi != sphere_chi) throw TopologyError("ball check: boundary is not a homology sphere by Euler characteristic");
}

}  // namespace

Box dual_box(const Box& c) {
  Box d{LatticePoint(c.lo.size()), LatticePoint(c.lo.size())};
  for (std::size_t a = 0; a < c.lo.size(); ++a) {
    if (c.hi[a] - c.lo[a] > 1) throw TopologyError("dual cells need unit boxes");
    if (c.lo[a] < c.hi[a]) {
      d.lo[a] = d.hi[a] = 2 * c.lo[a] + 1;
    } else {
      d.lo[a] = 2 * c.lo[a] - 1;
      d.hi[a] = 2 * c.lo[a] + 1;
    }
  }
  return d;
}

CubicalComplex dual_cells(const CubicalComplex& ball) {
  require_cubical_ball(ball);
  const int n = ball.ambient_dimension();
  auto mask = ball.boundary_mask();
  std::vector<Box> duals;
  for (std::size_t i = 0; i < ball.cells().size(); ++i) {
    if (mask[i]) continue;
    duals.push_back(dual_box(ball.cells()[i]));
  }
  std::vector<int> denominators;
  for (int den : ball.denominators()) denominators.push_back(2 * den);
  return CubicalComplex(n, std::move(duals), std::move(denominators));
}

CellPoset dual_cells(const SimplicialComplex& ball) {
  const int n = ball.dimension();
  if (n < 0) throw TopologyError("ball check: complex is empty");
  for (const auto& f : ball.facets())
    if (f.dimension() != n) throw TopologyError("ball check: complex is not pure");
  auto faces = ball.faces_by_dimension();
  std::map<Simplex, int> cofaces;
  for (const auto& s : faces[static_cast<std::size_t>(n)])
    for (const auto& f : s.boundary_faces()) ++cofaces[f];
  std::vector<Simplex> boundary_top;
  for (const auto& [f, count] : cofaces) {
    if (count > 2) throw TopologyError("ball check: face " + f.to_string() + " has more than two cofaces");
    if (count == 1) boundary_top.push_back(f);
  }
  if (ball.euler_characteristic() != 1) throw TopologyError("ball check: Euler characteristic is not 1");
  auto boundary = SimplicialComplex::from_simplices(boundary_top);
  const std::int64_t sphere_chi = n == 0 ? 0 : 1 + ((n - 1) % 2 == 0 ? 1 : -1);
  if (boundary.euler_characteristic() != sphere_chi)
    throw TopologyError("ball check: boundary is not a homology sphere by Euler characteristic");

  // Dual cells in order of increasing dual dimension (decreasing primal).
  CellPoset p;
  std::map<Simplex, std::size_t> position;
  for (int d = n; d >= 0; --d) {
    for (const auto& s : faces[static_cast<std::size_t>(d)]) {
      if (boundary.contains(s)) continue;
      position[s] = p.cells.size();
      p.cells.push_back({n - d, "*" + s.to_string(), {}});
    }
  }
  // Facets of s* are the duals of interior cofaces of s one dimension up.
  for (int d = n; d >= 1; --d) {
    for (const auto& t : faces[static_cast<std::size_t>(d)]) {
      auto ti = position.find(t);
      if (ti == position.end()) continue;
      for (const auto& s : t.boundary_faces()) {
        auto si = position.find(s);
        if (si != position.end()) p.cells[si->second].facets.push_back(ti->second);
      }
    }
  }
  for (auto& c : p.cells) std::sort(c.facets.begin(), c.facets.end());
  return p;
}

}  // namespace topmin
