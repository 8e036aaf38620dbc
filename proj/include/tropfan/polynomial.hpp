#pragma once

// Sparse multivariate polynomials over Q, term orders and initial forms.
//
// Convention: the initial form in_w(f) collects the terms of LOWEST w-weight.
// A weight-refined order therefore treats smaller weight as larger (leading),
// and breaks ties with its lex or degrevlex tiebreak.

#include "tropfan/linalg.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropfan {

/// Maximum number of ring variables (including auxiliary ones such as the
/// homogenizing or saturating variable).
inline constexpr std::size_t kMaxVars = 32;

class Monomial {
 public:
  Monomial() { e_.fill(0); }
  explicit Monomial(const std::vector<int>& exps);

  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);

  int degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  /// Disjoint supports.
  bool coprime(const Monomial& other) const;
  std::uint64_t divmask() const;

  /// Checked arithmetic: throws std::overflow_error / std::domain_error.
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial pow(int k) const;

  /// Weight <w, u> (w given with at least as many entries as used variables).
  __int128 weight(const std::vector<std::int64_t>& w) const;
  Integer weight(const IntVector& w) const;

  IntVector exponent_vector(std::size_t n) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  /// Plain lexicographic comparison on the exponent array; used for hashing
  /// containers only.
  std::strong_ordering operator<=>(const Monomial& o) const { return e_ <=> o.e_; }

 private:
  std::array<std::int16_t, kMaxVars> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

struct Ring {
  std::vector<std::string> names;
  std::size_t n() const { return names.size(); }
  bool operator==(const Ring& o) const { return names == o.names; }
};

using RingPtr = std::shared_ptr<const Ring>;

/// Validates names (nonempty, distinct, at most kMaxVars - 1 variables).
RingPtr make_ring(std::vector<std::string> names);
bool same_ring(const RingPtr& a, const RingPtr& b);

enum class BaseOrder { Lex, DegRevLex };

/// lex, degrevlex, or a weight-refined order: the weight vectors are compared
/// in sequence (lower weight leads), then `tiebreak`.
class TermOrder {
 public:
  TermOrder() = default;
  static TermOrder lex() { return TermOrder(BaseOrder::Lex); }
  static TermOrder degrevlex() { return TermOrder(BaseOrder::DegRevLex); }
  static TermOrder weighted(std::vector<IntVector> weights, BaseOrder tiebreak = BaseOrder::DegRevLex);

  /// Same order with `w` placed in front of the existing weight list.
  TermOrder refined_by(const IntVector& w) const;

  /// Positive if a is larger (leading) than b, negative if smaller, zero if equal.
  int compare(const Monomial& a, const Monomial& b) const;

  bool is_weighted() const { return !weights_big_.empty(); }
  BaseOrder tiebreak() const { return tiebreak_; }
  const std::vector<IntVector>& weights() const { return weights_big_; }
  std::string describe() const;

  bool operator==(const TermOrder& o) const {
    return tiebreak_ == o.tiebreak_ && weights_big_ == o.weights_big_;
  }

 private:
  explicit TermOrder(BaseOrder base) : tiebreak_(base) {}
  BaseOrder tiebreak_ = BaseOrder::DegRevLex;
  // Machine-width copies of the weights, unless some entry is too large for
  // the fast path; then `exact_` is set and the GMP weights are compared.
  std::vector<std::vector<std::int64_t>> weights_;
  std::vector<IntVector> weights_big_;
  bool exact_ = false;
};

/// Base orders only, for monomials of arbitrary degree.
int compare_base(BaseOrder order, const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coef;
};

/// Polynomial with terms sorted descending in degrevlex; no zero
/// coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  static Polynomial variable(RingPtr ring, std::size_t i);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  int degree() const;
  bool is_homogeneous() const;
  std::optional<Rational> coefficient(const Monomial& m) const;

  /// Leading term under an arbitrary order (first term if equal keys).
  const Term& leading_term(const TermOrder& order) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial times(const Monomial& m, const Rational& c) const;
  Polynomial pow(int k) const;
  /// Divides all coefficients by the coefficient of `m` (which must occur).
  Polynomial normalized_at(const Monomial& m) const;

  /// Applies a variable map: exponent of variable i moves to images[i].
  Polynomial permuted(const std::vector<std::size_t>& images) const;
  /// Re-embeds into a ring with the same or more variables; old variable i
  /// becomes new variable positions[i].
  Polynomial embedded(RingPtr target, const std::vector<std::size_t>& positions) const;

  bool operator==(const Polynomial& o) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Builds a polynomial from unsorted terms, merging duplicates and dropping zeros.
Polynomial make_polynomial(RingPtr ring, std::vector<Term> terms);

/// in_w(f): the sub-sum of terms of lowest w-weight. Throws on length mismatch.
Polynomial initial_form(const Polynomial& f, const IntVector& w);
/// Iterated initial form in_{w_k}(...in_{w_1}(f)).
Polynomial initial_form(const Polynomial& f, const std::vector<IntVector>& weights);

bool is_w_homogeneous(const Polynomial& f, const IntVector& w);

/// Ring with one extra variable prepended (named x0, or a fresh variant).
RingPtr homogenizing_ring(const RingPtr& ring);
/// ^h f in homogenizing_ring(f.ring()) (or `target` if supplied).
Polynomial homogenize(const Polynomial& f, const RingPtr& target = nullptr);
/// Sets the first variable to 1 and drops it.
Polynomial dehomogenize(const Polynomial& f, const RingPtr& target);
RingPtr dehomogenizing_ring(const RingPtr& ring);

// ---- text grammar ---------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Terms in degrevlex-descending order, e.g. "-c^3+2*b*c*d-a*d^2".
std::string to_string(const Polynomial& f);
/// Marked term first, remaining terms in degrevlex-descending order.
std::string to_string_marked(const Polynomial& f, const Monomial& marked);
std::string to_string(const Monomial& m, const Ring& ring);

}  // namespace tropfan
