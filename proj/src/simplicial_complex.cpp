#include "topmin/simplicial_complex.hpp"

#include <algorithm>
#include <set>

namespace topmin {

std::string Vertex::to_string() const {
  return is_integer() ? std::to_string(as_integer()) : as_string();
}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw TopologyError("simplex must have at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) {
    throw TopologyError("face repeats vertex " + dup->to_string());
  }
}

bool Simplex::contains(const Vertex& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

std::vector<Simplex> Simplex::faces() const {
  const std::size_t n = vertices_.size();
  if (n >= 8 * sizeof(unsigned long long) - 1) throw TopologyError("simplex too large to enumerate");
  std::vector<Simplex> out;
  out.reserve((1ULL << n) - 1);
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) vs.push_back(vertices_[i]);
    out.push_back(Simplex(Trusted{}, std::move(vs)));
  }
  return out;
}

std::vector<Simplex> Simplex::boundary_faces() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (i != skip) vs.push_back(vertices_[i]);
    out.push_back(Simplex(Trusted{}, std::move(vs)));
  }
  return out;
}

std::string Simplex::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ' ';
    s += vertices_[i].to_string();
  }
  return s + "]";
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices, std::string name) {
  // Largest first, so a face can only be dominated by something already kept.
  std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  std::vector<Simplex> kept;
  for (auto& s : simplices) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const Simplex& k) { return s.is_face_of(k); });
    if (!dominated) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  SimplicialComplex k;
  k.name_ = std::move(name);
  k.facets_ = std::move(kept);
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Vertex>>& candidate_faces,
                                                 std::string name) {
  std::vector<Simplex> simplices;
  simplices.reserve(candidate_faces.size());
  for (const auto& face : candidate_faces) {
    try {
      simplices.emplace_back(face);
    } catch (const TopologyError& e) {
      std::string shown = "[";
      for (std::size_t i = 0; i < face.size(); ++i) shown += (i ? "," : "") + face[i].to_string();
      throw TopologyError("malformed face " + shown + "]: " + e.what());
    }
  }
  return from_simplices(std::move(simplices), std::move(name));
}

SimplicialComplex SimplicialComplex::renamed(std::string name) const {
  SimplicialComplex k = *this;
  k.name_ = std::move(name);
  return k;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.dimension());
  return d;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::set<Vertex> vs;
  for (const auto& f : facets_) vs.insert(f.vertices().begin(), f.vertices().end());
  return {vs.begin(), vs.end()};
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return s.is_face_of(f); });
}

bool SimplicialComplex::has_vertex(const Vertex& v) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return f.contains(v); });
}

std::vector<std::vector<Simplex>> SimplicialComplex::faces_by_dimension() const {
  std::vector<std::set<Simplex>> by_dim(static_cast<std::size_t>(dimension() + 1));
  for (const auto& f : facets_)
    for (auto& face : f.faces()) by_dim[static_cast<std::size_t>(face.dimension())].insert(std::move(face));
  std::vector<std::vector<Simplex>> out;
  out.reserve(by_dim.size());
  for (auto& s : by_dim) out.emplace_back(s.begin(), s.end());
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& layer : faces_by_dimension()) f.push_back(layer.size());
  return f;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  std::int64_t sign = 1;
  for (std::size_t n : f_vector()) {
    chi += sign * static_cast<std::int64_t>(n);
    sign = -sign;
  }
  return chi;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<Vertex>& keep) const {
  std::set<Vertex> allowed(keep.begin(), keep.end());
  std::vector<Simplex> parts;
  for (const auto& f : facets_) {
    std::vector<Vertex> vs;
    for (const auto& v : f.vertices())
      if (allowed.count(v)) vs.push_back(v);
    if (!vs.empty()) parts.emplace_back(std::move(vs));
  }
  return from_simplices(std::move(parts), name_);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return other.contains(f); });
}

bool SimplicialComplex::is_full_subcomplex_of(const SimplicialComplex& other) const {
  return is_subcomplex_of(other) && other.induced(vertices()) == *this;
}

SimplicialComplex SimplicialComplex::relabeled(const std::string& prefix) const {
  std::vector<std::vector<Vertex>> faces;
  for (const auto& f : facets_) {
    std::vector<Vertex> vs;
    for (const auto& v : f.vertices()) vs.emplace_back(prefix + v.to_string());
    faces.push_back(std::move(vs));
  }
  return from_facets(faces, name_);
}

SimplicialComplex point(const Vertex& v) { return SimplicialComplex::from_facets({{v}}, "pt"); }

SimplicialComplex simplex_complex(const Simplex& s) {
  return SimplicialComplex::from_simplices({s}, "simplex" + s.to_string());
}

SimplicialComplex simplex_boundary(const Simplex& s) {
  return SimplicialComplex::from_simplices(s.boundary_faces(), "boundary" + s.to_string());
}

SimplicialComplex sphere(int k) {
  if (k < 0) throw TopologyError("sphere dimension must be nonnegative");
  std::vector<Vertex> vs;
  for (int i = 1; i <= k + 2; ++i) vs.emplace_back(i);
  return simplex_boundary(Simplex(vs)).renamed("S" + std::to_string(k));
}

SimplicialComplex real_projective_plane() {
  return SimplicialComplex::from_facets({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                         {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}},
                                        "RP2");
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  auto va = a.vertices();
  auto vb = b.vertices();
  std::vector<Vertex> shared;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
  if (!shared.empty()) throw TopologyError("join operands share vertex " + shared.front().to_string());
  std::vector<Simplex> facets;
  facets.reserve(a.facets().size() * b.facets().size());
  for (const auto& fa : a.facets()) {
    for (const auto& fb : b.facets()) {
      std::vector<Vertex> vs = fa.vertices();
      vs.insert(vs.end(), fb.vertices().begin(), fb.vertices().end());
      facets.emplace_back(std::move(vs));
    }
  }
  return SimplicialComplex::from_simplices(std::move(facets), "(" + a.name() + "*" + b.name() + ")");
}

SimplicialComplex disjoint_join(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto va = a.vertices();
  auto vb = b.vertices();
  std::vector<Vertex> shared;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
  if (shared.empty()) return join(a, b);
  auto j = join(a.relabeled("L:"), b.relabeled("R:"));
  return j.renamed("(" + a.name() + "*" + b.name() + ")[relabeled L:/R:]");
}

SimplicialComplex cone(const SimplicialComplex& k, const Vertex& apex) {
  if (k.has_vertex(apex)) throw TopologyError("cone apex " + apex.to_string() + " is already a vertex");
  return join(k, point(apex)).renamed("cone(" + k.name() + ")");
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& s) {
  if (!k.contains(s)) throw TopologyError("simplex " + s.to_string() + " is not in the complex");
  std::vector<Simplex> parts;
  for (const auto& f : k.facets()) {
    if (!s.is_face_of(f)) continue;
    std::vector<Vertex> rest;
    std::set_difference(f.vertices().begin(), f.vertices().end(), s.vertices().begin(),
                        s.vertices().end(), std::back_inserter(rest));
    if (!rest.empty()) parts.emplace_back(std::move(rest));
  }
  return SimplicialComplex::from_simplices(std::move(parts), "lk" + s.to_string());
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& s) {
  if (!k.contains(s)) throw TopologyError("simplex " + s.to_string() + " is not in the complex");
  std::vector<Simplex> parts;
  for (const auto& f : k.facets())
    if (s.is_face_of(f)) parts.push_back(f);
  return SimplicialComplex::from_simplices(std::move(parts), "st" + s.to_string());
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  std::vector<Simplex> chains;
  for (const auto& f : k.facets()) {
    std::vector<Vertex> order = f.vertices();
    do {
      std::vector<Vertex> chain;
      std::vector<Vertex> prefix;
      for (const auto& v : order) {
        prefix.push_back(v);
        chain.emplace_back(Simplex(prefix).to_string());
      }
      chains.emplace_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialComplex::from_simplices(std::move(chains), "sd(" + k.name() + ")");
}

SimplicialComplex adjacency_subcomplex(const SimplicialComplex& x, const SimplicialComplex& y,
                                       const Simplex& tau) {
  if (!x.is_subcomplex_of(y)) throw TopologyError("X is not a subcomplex of Y");
  if (!y.contains(tau)) throw TopologyError("simplex " + tau.to_string() + " is not in Y");
  std::vector<Vertex> outside;
  for (const auto& v : tau.vertices())
    if (!x.has_vertex(v)) outside.push_back(v);
  if (outside.empty()) return x;
  std::vector<Vertex> adjacent;
  for (const auto& v : x.vertices()) {
    bool all = std::all_of(outside.begin(), outside.end(),
                           [&](const Vertex& w) { return y.contains(Simplex{v, w}); });
    if (all) adjacent.push_back(v);
  }
  return x.induced(adjacent).renamed("V" + tau.to_string());
}

}  // namespace topmin
