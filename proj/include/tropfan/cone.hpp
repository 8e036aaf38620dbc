#pragma once

// Polyhedral cones in canonical form, fans given by representing cones,
// common refinements and face statistics. All geometry goes through one
// double description routine.

#include "tropfan/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tropfan {

/// {w : E w = 0, A w >= 0}. Canonical fields:
///  - equations: primitive reduced echelon basis of the orthogonal complement
///    of the linear span;
///  - inequalities: the facet normals, reduced modulo the equations,
///    primitive, sorted and without duplicates;
///  - lineality: primitive reduced echelon basis of the lineality space;
///  - rays: extreme rays modulo lineality, reduced modulo the lineality
///    basis, primitive, sorted.
/// Equality and ordering only look at (ambient, equations, inequalities).
class Cone {
 public:
  Cone() = default;

  static Cone from_constraints(std::size_t n, const std::vector<IntVector>& equations,
                               const std::vector<IntVector>& inequalities);
  static Cone whole_space(std::size_t n);
  static Cone origin(std::size_t n);

  std::size_t ambient_dim() const { return n_; }
  const std::vector<IntVector>& equations() const { return equations_; }
  const std::vector<IntVector>& inequalities() const { return inequalities_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  std::size_t dimension() const { return dim_; }
  std::size_t lineality_dim() const { return lineality_.size(); }

  bool contains(const IntVector& w) const;
  /// Strictly inside every facet inequality (and on the span).
  bool contains_in_relative_interior(const IntVector& w) const;
  bool contains(const Cone& other) const;

  /// Image under the coordinate permutation coordinate i -> images[i].
  Cone permuted(const std::vector<std::size_t>& images) const;

  bool operator==(const Cone& o) const {
    return n_ == o.n_ && equations_ == o.equations_ && inequalities_ == o.inequalities_;
  }
  bool operator<(const Cone& o) const;

  /// Stable text key, also used for seeding per-cone randomness.
  std::string key() const;

 private:
  std::size_t n_ = 0;
  std::vector<IntVector> equations_;
  std::vector<IntVector> inequalities_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> rays_;
  std::size_t dim_ = 0;

  friend Cone canonicalize(std::size_t, const std::vector<IntVector>&, const std::vector<IntVector>&);
};

Cone canonicalize(std::size_t n, const std::vector<IntVector>& equations,
                  const std::vector<IntVector>& inequalities);

std::vector<IntVector> extreme_rays(const Cone& c);

/// Sum of the extreme rays (zero if there are none).
IntVector relative_interior_point(const Cone& c);
/// Positive combination of the extreme rays with pseudo-random coefficients
/// in [1, 2^32) drawn from `seed`.
IntVector generic_interior_point(const Cone& c, std::uint64_t seed);

Cone intersect(const Cone& a, const Cone& b);
std::vector<Cone> facets(const Cone& c);

/// A fan given by a set of cones; the fan is the set of all their faces.
struct Fan {
  std::size_t ambient_dim = 0;
  std::vector<Cone> cones;

  bool contains(const IntVector& w) const;
  /// Sorts and removes duplicates and cones contained in another listed cone.
  void normalize();
};

Fan common_refinement(const Fan& a, const Fan& b);
/// Reference implementation without OpenMP; same output as common_refinement.
Fan common_refinement_serial(const Fan& a, const Fan& b);

struct FanStatistics {
  std::size_t ambient_dim = 0;
  std::size_t lineality_dim = 0;
  std::size_t dim = 0;
  bool simplicial = true;
  /// f_vector[i] counts faces of dimension lineality_dim + 1 + i.
  std::vector<std::size_t> f_vector;
};

/// All faces of the given cones, deduplicated, grouped by dimension
/// (index = dimension). Faces below `min_dim` are not produced.
std::vector<std::vector<Cone>> fan_faces(const std::vector<Cone>& maximal, std::size_t min_dim);

FanStatistics fan_statistics(const Fan& maximal_cones, std::size_t lineality_dim);

/// Slice of a cone at w0 = 1, written in the remaining coordinates.
/// Rows (b, a) stand for b + <a, x> = 0 (equations) and b + <a, x> >= 0
/// (inequalities).
struct Polyhedron {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> equations;
  std::vector<IntVector> inequalities;
  std::vector<std::vector<Rational>> vertices;
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

/// Slices every cone meeting {w0 > 0}; cones without such points are dropped.
std::vector<Polyhedron> restrict_to_unit_first_coordinate(const Fan& fan);

}  // namespace tropfan
