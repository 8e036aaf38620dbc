#include "tropfan/linalg.hpp"

#include <limits>
#include <stdexcept>

namespace tropfan {

Rref rref(RatMatrix m, std::size_t columns) {
  Rref out;
  out.columns = columns;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < columns; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < columns; ++j) m[i][j] -= f * m[row][j];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

RatMatrix to_rational(const std::vector<IntVector>& rows) {
  RatMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Rational> q(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) q[j] = r[j];
    m.push_back(std::move(q));
  }
  return m;
}

std::size_t rank(const RatMatrix& m) {
  if (m.empty()) return 0;
  return rref(m, m.front().size()).rows.size();
}

std::size_t rank(const std::vector<IntVector>& rows) { return rank(to_rational(rows)); }

std::vector<IntVector> kernel_basis(const RatMatrix& m, std::size_t columns) {
  const Rref r = rref(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rows.size(); ++i) v[r.pivots[i]] = -r.rows[i][free];
    IntVector iv = clear_denominators(v);
    for (const auto& x : iv) {
      if (x == 0) continue;
      if (x < 0) iv = negate(std::move(iv));
      break;
    }
    basis.push_back(primitive(std::move(iv)));
  }
  return basis;
}

std::vector<IntVector> kernel_basis(const std::vector<IntVector>& rows, std::size_t columns) {
  return kernel_basis(to_rational(rows), columns);
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  if (g != 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntVector clear_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  return out;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  IntVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

IntVector scale(const IntVector& a, const Integer& s) {
  IntVector out(a);
  for (auto& x : out) x *= s;
  return out;
}

IntVector negate(IntVector a) {
  for (auto& x : a) x = -x;
  return a;
}

IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v(n, Integer(0));
  v[i] = 1;
  return v;
}

std::vector<IntVector> canonical_row_basis(const std::vector<IntVector>& rows, std::size_t columns) {
  const Rref r = rref(to_rational(rows), columns);
  std::vector<IntVector> out;
  out.reserve(r.rows.size());
  for (const auto& row : r.rows) out.push_back(primitive(clear_denominators(row)));
  return out;
}

IntVector reduce_modulo(const IntVector& v, const Rref& basis) {
  std::vector<Rational> q(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) q[j] = v[j];
  for (std::size_t i = 0; i < basis.rows.size(); ++i) {
    const std::size_t p = basis.pivots[i];
    if (q[p] == 0) continue;
    const Rational f = q[p];
    for (std::size_t j = 0; j < q.size(); ++j)
      if (basis.rows[i][j] != 0) q[j] -= f * basis.rows[i][j];
  }
  IntVector out = clear_denominators(q);
  if (is_zero(out)) return out;
  return primitive(std::move(out));
}

std::vector<std::int64_t> to_int64(const IntVector& v) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) throw std::overflow_error("integer entry exceeds 64 bits");
    out[i] = v[i].get_si();
  }
  return out;
}

IntVector from_int64(const std::vector<std::int64_t>& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
  return out;
}

IntVector from_ints(std::initializer_list<long> v) {
  IntVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  s += ')';
  return s;
}

}  // namespace tropfan
