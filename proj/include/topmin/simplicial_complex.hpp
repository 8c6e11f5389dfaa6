// Finite abstract simplicial complexes stored by their maximal faces.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace topmin {

/// Raised when an operation's precondition on complexes, simplices, or
/// catalog data is violated. The message names the offending object.
class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Opaque, totally ordered vertex token: an integer or a string.
/// Integers sort before strings.
class Vertex {
 public:
  Vertex(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Vertex(int value) : value_(static_cast<std::int64_t>(value)) {}  // NOLINT
  Vertex(std::string value) : value_(std::move(value)) {}  // NOLINT
  Vertex(const char* value) : value_(std::string(value)) {}  // NOLINT

  bool is_integer() const { return value_.index() == 0; }
  std::int64_t as_integer() const { return std::get<0>(value_); }
  const std::string& as_string() const { return std::get<1>(value_); }
  std::string to_string() const;

  friend bool operator==(const Vertex& a, const Vertex& b) { return a.value_ == b.value_; }
  friend bool operator<(const Vertex& a, const Vertex& b) { return a.value_ < b.value_; }
  friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
  friend bool operator>(const Vertex& a, const Vertex& b) { return b < a; }
  friend bool operator<=(const Vertex& a, const Vertex& b) { return !(b < a); }
  friend bool operator>=(const Vertex& a, const Vertex& b) { return !(a < b); }

 private:
  std::variant<std::int64_t, std::string> value_;
};

/// A nonempty, strictly sorted set of vertices.
class Simplex {
 public:
  /// Sorts the input. Throws TopologyError on an empty or repeated-vertex list.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(const Vertex& v) const;
  bool is_face_of(const Simplex& other) const;
  /// Every nonempty subset, including the simplex itself.
  std::vector<Simplex> faces() const;
  /// The codimension-one faces (empty for a vertex).
  std::vector<Simplex> boundary_faces() const;
  std::string to_string() const;

  friend bool operator==(const Simplex& a, const Simplex& b) { return a.vertices_ == b.vertices_; }
  friend bool operator!=(const Simplex& a, const Simplex& b) { return !(a == b); }
  friend bool operator<(const Simplex& a, const Simplex& b) { return a.vertices_ < b.vertices_; }

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<Vertex> sorted) : vertices_(std::move(sorted)) {}
  std::vector<Vertex> vertices_;
};

class SimplicialComplex {
 public:
  /// The empty complex: no vertices, no facets.
  SimplicialComplex() = default;

  /// Drops duplicate and dominated faces. Throws TopologyError naming the
  /// first face that is empty or repeats a vertex.
  static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& candidate_faces,
                                       std::string name = {});
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices, std::string name = {});

  const std::string& name() const { return name_; }
  SimplicialComplex renamed(std::string name) const;

  /// Facets, each sorted, listed lexicographically.
  const std::vector<Simplex>& facets() const { return facets_; }
  bool empty() const { return facets_.empty(); }
  /// -1 for the empty complex.
  int dimension() const;
  std::vector<Vertex> vertices() const;
  std::size_t vertex_count() const { return vertices().size(); }

  bool contains(const Simplex& s) const;
  bool has_vertex(const Vertex& v) const;

  /// All simplices grouped by dimension; entry k is sorted.
  std::vector<std::vector<Simplex>> faces_by_dimension() const;
  std::vector<std::size_t> f_vector() const;
  std::int64_t euler_characteristic() const;

  /// Subcomplex of all simplices whose vertices lie in `keep`.
  SimplicialComplex induced(const std::vector<Vertex>& keep) const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  /// Subcomplex, and every simplex of `other` on our vertices is ours.
  bool is_full_subcomplex_of(const SimplicialComplex& other) const;

  /// Copy with each vertex v renamed to the string prefix + v.
  SimplicialComplex relabeled(const std::string& prefix) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }
  friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) { return !(a == b); }

 private:
  std::string name_;
  std::vector<Simplex> facets_;
};

SimplicialComplex point(const Vertex& v);
/// The full simplex on `s` with all its faces.
SimplicialComplex simplex_complex(const Simplex& s);
/// The boundary of the simplex on `s` (a sphere of dimension |s| - 2).
SimplicialComplex simplex_boundary(const Simplex& s);
/// Boundary of the standard (k+1)-simplex on vertices 1..k+2: a k-sphere.
SimplicialComplex sphere(int k);
/// Minimal 6-vertex triangulation of the real projective plane.
SimplicialComplex real_projective_plane();

/// Join of complexes with disjoint vertex sets; the empty complex is the
/// identity. Throws TopologyError naming a shared vertex.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
/// Join that namespaces both operands ("L:" / "R:") when their vertex sets
/// collide; the relabeling is recorded in the result's name.
SimplicialComplex disjoint_join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& k, const Vertex& apex);
SimplicialComplex link(const SimplicialComplex& k, const Simplex& s);
/// Closed star of `s`.
SimplicialComplex star(const SimplicialComplex& k, const Simplex& s);
/// Vertices of the result are the simplices of `k`, named "[v0 v1 ...]".
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);
/// Subcomplex of X induced on the X-vertices adjacent in Y to every vertex
/// of tau outside X. Returns X itself when tau lies in X.
SimplicialComplex adjacency_subcomplex(const SimplicialComplex& x, const SimplicialComplex& y,
                                       const Simplex& tau);

}  // namespace topmin
