#pragma once

// Text formats of the command line tool: input documents, Gröbner cone pairs
// and reports.
//
//   Q[a,b,c]                 ring line (required, first)
//   {a*b-c^2, a+b}           polynomial list
//   {(2,1,0)}                optional list of permutations
//
// A pair document has the ring line followed by two polynomial lists, the
// initial basis first; in each polynomial the first term is the marked one.

#include "tropfan/cone.hpp"
#include "tropfan/groebner.hpp"
#include "tropfan/symmetry.hpp"
#include "tropfan/tropical.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropfan {

struct InputDocument {
  RingPtr ring;
  std::vector<Polynomial> polynomials;
  std::vector<Permutation> symmetry;
};

struct PairDocument {
  GroebnerConePair pair;
  std::vector<Permutation> symmetry;
};

/// Throws ParseError with the position of the problem.
InputDocument parse_document(std::string_view text);
PairDocument parse_pair_document(std::string_view text);

/// A term order in which the markings are the initial terms (an interior
/// point of the marking cone). Throws std::invalid_argument if none exists.
TermOrder order_from_markings(const RingPtr& ring, const std::vector<MarkedPolynomial>& elements);

std::string format_ring(const Ring& ring);
std::string format_polynomials(const std::vector<Polynomial>& polys);
std::string format_marked(const MarkedReducedGB& g);
std::string format_pair(const GroebnerConePair& pair);
std::string format_document(const InputDocument& doc);
std::string format_vectors(const std::vector<IntVector>& rows);

struct TraversalReport {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> lineality;
  std::size_t dim = 0;
  bool simplicial = true;
  std::size_t group_order = 1;
  std::vector<std::size_t> f_vector;
  std::vector<IntVector> rays;
  /// incidences[k] lists, for each cone of dimension k modulo lineality
  /// (k >= 2), the indices of its rays.
  std::vector<std::vector<std::vector<std::size_t>>> incidences;
  /// orbit_sizes[k]: orbit size -> number of orbits, for cones of dimension
  /// k modulo lineality; filled only when a group is given.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> orbit_sizes;
};

TraversalReport make_report(const std::vector<Cone>& maximal_cones, const std::vector<IntVector>& lineality,
                            const PermGroup* group);
std::string format_report(const TraversalReport& r);

std::string format_fan(const Fan& fan);
std::string format_polyhedra(const std::vector<Polyhedron>& complex);

}  // namespace tropfan
