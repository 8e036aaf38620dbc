#pragma once

// Variable-permutation groups acting on polynomials, weight vectors and cones.

#include "tropfan/cone.hpp"
#include "tropfan/groebner.hpp"

#include <string>
#include <vector>

namespace tropfan {

/// Variable i is sent to variable images[i].
struct Permutation {
  std::vector<std::size_t> images;

  static Permutation identity(std::size_t n);
  std::size_t size() const { return images.size(); }
  /// (this * o)(i) = this(o(i)).
  Permutation compose(const Permutation& o) const;
  IntVector apply(const IntVector& w) const;
  Polynomial apply(const Polynomial& f) const;
  Cone apply(const Cone& c) const;

  bool operator==(const Permutation& o) const = default;
  auto operator<=>(const Permutation& o) const = default;
};

/// Throws std::invalid_argument unless images is a bijection of 0..n-1.
Permutation make_permutation(std::vector<std::size_t> images);

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t n, std::vector<Permutation> generators, std::vector<Permutation> elements)
      : n_(n), generators_(std::move(generators)), elements_(std::move(elements)) {}

  std::size_t degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// Sorted; the identity comes first.
  const std::vector<Permutation>& elements() const { return elements_; }

 private:
  std::size_t n_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Closure of the generators under composition.
PermGroup close_group(std::size_t n, const std::vector<Permutation>& generators);

/// Every generator maps every ideal generator into the ideal.
bool check_ideal_invariance(const Ideal& ideal, const PermGroup& group);

Cone canonical_orbit_representative(const Cone& c, const PermGroup& group);
/// Distinct images of c, sorted.
std::vector<Cone> orbit(const Cone& c, const PermGroup& group);

std::string to_string(const Permutation& p);

}  // namespace tropfan
