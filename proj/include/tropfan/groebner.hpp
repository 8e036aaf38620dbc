#pragma once

// Buchberger engine, marked reduced Gröbner bases and the ideal-level
// operations built on them (saturation, monomial containment, witnesses,
// lifting, dimension, homogeneity space).

#include "tropfan/polynomial.hpp"

#include <optional>
#include <vector>

namespace tropfan {

struct MarkedPolynomial {
  Polynomial poly;
  Monomial marked;

  const Rational& marked_coefficient() const;
  bool operator==(const MarkedPolynomial& o) const { return marked == o.marked && poly == o.poly; }
};

/// Reduced Gröbner basis with distinguished initial terms. Elements are kept
/// sorted by marked term (degrevlex descending), so two bases of the same ideal
/// with the same markings compare equal regardless of how they were computed.
/// The order is the one the basis was computed with; it does not take part in
/// equality.
class MarkedReducedGB {
 public:
  MarkedReducedGB() = default;
  MarkedReducedGB(RingPtr ring, std::vector<MarkedPolynomial> elements, TermOrder order);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MarkedPolynomial>& elements() const { return elements_; }
  const TermOrder& order() const { return order_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const;
  std::vector<Polynomial> polynomials() const;

  bool operator==(const MarkedReducedGB& o) const { return elements_ == o.elements_; }

 private:
  RingPtr ring_;
  std::vector<MarkedPolynomial> elements_;
  TermOrder order_;
};

/// (G(in_w(I)), G(I)) with respect to the same refined order; initial_gb[i] is
/// in_w(full_gb[i]) with the same marking.
struct GroebnerConePair {
  MarkedReducedGB initial_gb;
  MarkedReducedGB full_gb;

  const RingPtr& ring() const { return full_gb.ring(); }
  bool operator==(const GroebnerConePair& o) const = default;
};

struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;

  Ideal() = default;
  Ideal(RingPtr r, std::vector<Polynomial> gens);
  bool is_homogeneous() const;
};

/// Remainder of f modulo the marked terms of g, reducing terms in decreasing
/// order under g.order().
Polynomial normal_form(const Polynomial& f, const MarkedReducedGB& g);

/// Reduced marked Gröbner basis. Weight-refined orders are only well-founded
/// on homogeneous input (or weights <= 0 componentwise); throws
/// std::invalid_argument if all generators are zero and the ring is unknown.
MarkedReducedGB buchberger(const std::vector<Polynomial>& gens, const TermOrder& order);
MarkedReducedGB buchberger(const Ideal& ideal, const TermOrder& order);

/// Structural GroebnerConePair invariant check for a given weight.
bool is_valid_pair(const GroebnerConePair& pair, const IntVector& w);

/// {in_w(g) : g in basis}. Throws std::domain_error if some marked term is
/// not among the w-initial terms (w outside the cone).
std::vector<Polynomial> initial_ideal_gens(const MarkedReducedGB& g, const IntVector& w);
/// Marked variant: in_w of each element with the marking kept.
MarkedReducedGB initial_marked(const MarkedReducedGB& g, const IntVector& w);

/// (I : (x1...xn)^inf) as a reduced degrevlex basis.
MarkedReducedGB saturate_by_variable_product(const Ideal& ideal);

/// True iff the ideal contains a monomial (the saturation is the unit ideal).
bool contains_monomial(const Ideal& ideal);
/// The first power (x1...xn)^k in the ideal, the monomial 1 for the unit
/// ideal, or nothing if the ideal is monomial-free.
std::optional<Monomial> monomial_in_ideal(const Ideal& ideal);

/// x^m - nf(x^m, G_{<w}(I)) for a monomial x^m of in_w(I). Throws
/// std::domain_error if in_w(I) is monomial-free.
Polynomial witness(const Ideal& ideal, const IntVector& w);

/// One Gröbner walk step: lifts G_{<w}(in_w(I)) against G(I) to G_{<w}(I).
/// The order overload supplies the order of the result; the two-argument
/// form derives a weight order from the lifted markings.
MarkedReducedGB lift(const MarkedReducedGB& full_prev, const MarkedReducedGB& initial_target,
                     const TermOrder& target_order);
MarkedReducedGB lift(const MarkedReducedGB& full_prev, const MarkedReducedGB& initial_target);

/// Krull dimension of R/I, or -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);
int krull_dimension(const MarkedReducedGB& g);

/// Basis of {w : in_w(I) = I}.
std::vector<IntVector> homogeneity_space(const Ideal& ideal);
std::vector<IntVector> homogeneity_space(const MarkedReducedGB& g);

/// Marked terms of the inequalities "marked term leads" of a set of marked
/// polynomials, as rows c - a with <w, c - a> >= 0 for the min convention.
std::vector<IntVector> marking_inequalities(const std::vector<MarkedPolynomial>& elements, std::size_t n);

}  // namespace tropfan
