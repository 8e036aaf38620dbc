#pragma once

// Exact rational and integer linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tropfan {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer vector. Weight vectors, facet normals and rays all use this type.
using IntVector = std::vector<Integer>;

/// Rectangular matrix over the rationals, stored row-wise.
using RatMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form: `rows` are the nonzero rows with pivot entry 1,
/// `pivots[i]` is the pivot column of `rows[i]`.
struct Rref {
  RatMatrix rows;
  std::vector<std::size_t> pivots;
  std::size_t columns = 0;
};

Rref rref(RatMatrix m, std::size_t columns);

RatMatrix to_rational(const std::vector<IntVector>& rows);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<IntVector>& rows);

/// Basis of the null space {x : m x = 0}. One vector per free column of the
/// echelon form, in increasing column order; each vector primitive with its
/// first nonzero entry positive.
std::vector<IntVector> kernel_basis(const RatMatrix& m, std::size_t columns);
std::vector<IntVector> kernel_basis(const std::vector<IntVector>& rows, std::size_t columns);

/// Divides by the gcd of the entries. Direction is preserved. Throws
/// std::invalid_argument on the zero vector.
IntVector primitive(IntVector v);

/// Scales a rational vector by the lcm of its denominators (positive factor).
IntVector clear_denominators(const std::vector<Rational>& v);

bool is_zero(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, const Integer& s);
IntVector negate(IntVector a);
IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);

/// Canonical echelon basis of a row space: reduced echelon rows scaled to
/// primitive integer vectors (pivot entries positive).
std::vector<IntVector> canonical_row_basis(const std::vector<IntVector>& rows, std::size_t columns);

/// Reduces v modulo the span of an echelon basis (zeroes the pivot columns).
/// The result is a rational vector cleared to a primitive integer vector, or
/// the zero vector.
IntVector reduce_modulo(const IntVector& v, const Rref& basis);

/// Entry-wise conversion with overflow checks; throws std::overflow_error.
std::vector<std::int64_t> to_int64(const IntVector& v);
IntVector from_int64(const std::vector<std::int64_t>& v);
IntVector from_ints(std::initializer_list<long> v);

std::string to_string(const IntVector& v);

}  // namespace tropfan
