#pragma once

// Tropical hypersurfaces and prevarieties, Gröbner cones, tropical bases of
// curves, starting cones and the traversal of a tropical variety.

#include "tropfan/cone.hpp"
#include "tropfan/groebner.hpp"
#include "tropfan/symmetry.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tropfan {

/// Raised when the starting cone search runs out of random attempts.
class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input violates a documented precondition (for instance a
/// curve routine applied to an ideal that is not a curve).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Codimension-one cones of the normal fan of New(f); empty for monomials.
Fan tropical_hypersurface(const Polynomial& f);

/// Common refinement of the hypersurfaces, fewest terms first.
Fan tropical_prevariety(const std::vector<Polynomial>& fs);
Fan tropical_prevariety_serial(const std::vector<Polynomial>& fs);

/// Equations and inequalities read off the supports of the pair.
Cone groebner_cone(const GroebnerConePair& pair);
/// Full-dimensional cone where the markings of g are the initial terms.
Cone marked_groebner_cone(const MarkedReducedGB& g);

/// FNV-1a mix of a global seed with a text key.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& key);

struct CurveResult {
  std::vector<Polynomial> basis;
  /// T(I) as a fan: the homogeneity space plus one cone per ray.
  Fan variety;
};

/// Tropical basis of a homogeneous curve ideal (dim = homog + 1). With
/// `pure_restart` every witness triggers a recomputation of the whole
/// prevariety instead of refining the current one.
CurveResult tropical_curve(const Ideal& ideal, std::uint64_t seed, bool pure_restart = false);
std::vector<Polynomial> tropical_basis_of_curve(const Ideal& ideal, std::uint64_t seed, bool pure_restart = false);

/// A pair whose cone is a maximal cone of T(I). Requires a homogeneous,
/// monomial-free ideal whose tropical variety is pure of dimension dim(I).
GroebnerConePair starting_cone(const Ideal& ideal, std::uint64_t seed);

/// Pairs of the maximal cones sharing a facet with the cone of `pair`
/// (the cone of `pair` itself is among them).
std::vector<GroebnerConePair> neighbors(const GroebnerConePair& pair, std::uint64_t seed);

struct TraversalOptions {
  const PermGroup* symmetry = nullptr;
  std::uint64_t seed = 0;
  /// Worker threads for the frontier; 0 keeps the OpenMP default.
  int jobs = 1;
};

struct TraversalResult {
  /// One pair per visited cone (per orbit with symmetry), sorted by cone.
  std::vector<GroebnerConePair> pairs;
  std::vector<Cone> visited;
  /// All maximal cones (orbits expanded), sorted.
  std::vector<Cone> cones;
  std::vector<IntVector> lineality;
};

TraversalResult traverse(const GroebnerConePair& start, const TraversalOptions& options);
/// Single-threaded reference traversal; same result as traverse().
TraversalResult traverse_serial(const GroebnerConePair& start, const TraversalOptions& options);

/// d x n coefficient matrix of d linear forms.
struct LinearIdealModel {
  RingPtr ring;
  RatMatrix matrix;
};

/// All circuits, primitive integer coefficients, first nonzero coefficient
/// positive, sorted. Throws std::invalid_argument if the rows are dependent.
std::vector<Polynomial> linear_circuits(const LinearIdealModel& m);

/// The d+1 smallest entries of w are equal.
bool uniform_bergman_member(const IntVector& w, std::size_t d);

}  // namespace tropfan
