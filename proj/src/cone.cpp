#include "tropfan/cone.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace tropfan {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
  void resize(std::size_t n) { w_.resize((n + 63) / 64, 0); }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w_.resize(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  bool contains(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if ((o.w_[i] & ~w_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct DDRay {
  IntVector v;
  Bits tight;
};

// Double description: returns (lineality generators, extreme rays) of
// {E w = 0, A w >= 0}; rays are extreme modulo the lineality space.
void double_description(std::size_t n, const std::vector<IntVector>& equations,
                        const std::vector<IntVector>& inequalities, std::vector<IntVector>& lineality,
                        std::vector<IntVector>& rays) {
  lineality = kernel_basis(equations, n);
  std::vector<DDRay> current;
  const std::size_t m = inequalities.size();
  for (std::size_t k = 0; k < m; ++k) {
    const IntVector& a = inequalities[k];
    std::size_t pivot = lineality.size();
    Integer ap;
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      ap = dot(a, lineality[i]);
      if (ap != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < lineality.size()) {
      IntVector l0 = lineality[pivot];
      if (ap < 0) {
        l0 = negate(std::move(l0));
        ap = -ap;
      }
      std::vector<IntVector> next;
      for (std::size_t i = 0; i < lineality.size(); ++i) {
        if (i == pivot) continue;
        const Integer al = dot(a, lineality[i]);
        if (al == 0) next.push_back(lineality[i]);
        else next.push_back(primitive(subtract(scale(lineality[i], ap), scale(l0, al))));
      }
      lineality = std::move(next);
      for (auto& r : current) {
        const Integer ar = dot(a, r.v);
        if (ar != 0) r.v = primitive(subtract(scale(r.v, ap), scale(l0, ar)));
        r.tight.resize(m);
        r.tight.set(k);
      }
      Bits t(m);
      for (std::size_t j = 0; j < k; ++j) t.set(j);
      current.push_back({l0, std::move(t)});
      continue;
    }
    std::vector<std::size_t> pos, neg;
    std::vector<Integer> val(current.size());
    std::vector<DDRay> next;
    for (std::size_t i = 0; i < current.size(); ++i) {
      val[i] = dot(a, current[i].v);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
    }
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (val[i] < 0) continue;
      DDRay r = current[i];
      if (val[i] == 0) r.tight.set(k);
      next.push_back(std::move(r));
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const Bits common = current[p].tight & current[q].tight;
        bool adjacent = true;
        for (std::size_t r = 0; r < current.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (current[r].tight.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v = primitive(subtract(scale(current[q].v, val[p]), scale(current[p].v, val[q])));
        Bits t = common;
        t.set(k);
        next.push_back({std::move(v), std::move(t)});
      }
    }
    current = std::move(next);
  }
  rays.clear();
  for (auto& r : current) rays.push_back(std::move(r.v));
}

std::vector<IntVector> dedupe_inequalities(std::size_t n, const std::vector<IntVector>& rows) {
  std::set<IntVector> seen;
  std::vector<IntVector> out;
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("cone constraint has wrong length");
    if (is_zero(r)) continue;
    IntVector p = primitive(r);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<IntVector> stack(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  std::vector<IntVector> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<IntVector> reduced_sorted(const std::vector<IntVector>& rows, const Rref& basis) {
  std::set<IntVector> out;
  for (const auto& r : rows) {
    IntVector v = reduce_modulo(r, basis);
    if (!is_zero(v)) out.insert(std::move(v));
  }
  return {out.begin(), out.end()};
}

}  // namespace

Cone canonicalize(std::size_t n, const std::vector<IntVector>& equations,
                  const std::vector<IntVector>& inequalities) {
  for (const auto& e : equations)
    if (e.size() != n) throw std::invalid_argument("cone constraint has wrong length");
  const std::vector<IntVector> ineqs = dedupe_inequalities(n, inequalities);
  std::vector<IntVector> lin, rays;
  double_description(n, equations, ineqs, lin, rays);

  Cone c;
  c.n_ = n;
  const std::vector<IntVector> gens = stack(lin, rays);
  c.dim_ = gens.empty() ? 0 : rank(gens);
  c.equations_ = canonical_row_basis(kernel_basis(gens, n), n);
  c.lineality_ = canonical_row_basis(lin, n);

  const Rref eq_rref = rref(to_rational(c.equations_), n);
  std::set<IntVector> facet_set;
  for (const auto& a : ineqs) {
    std::vector<IntVector> tight = lin;
    bool all_tight = true;
    for (const auto& r : rays) {
      if (dot(a, r) == 0) tight.push_back(r);
      else all_tight = false;
    }
    if (all_tight) continue;
    const std::size_t tr = tight.empty() ? 0 : rank(tight);
    if (tr + 1 != c.dim_) continue;
    IntVector v = reduce_modulo(a, eq_rref);
    if (!is_zero(v)) facet_set.insert(std::move(v));
  }
  c.inequalities_.assign(facet_set.begin(), facet_set.end());

  const Rref lin_rref = rref(to_rational(c.lineality_), n);
  c.rays_ = reduced_sorted(rays, lin_rref);
  return c;
}

Cone Cone::from_constraints(std::size_t n, const std::vector<IntVector>& equations,
                            const std::vector<IntVector>& inequalities) {
  return canonicalize(n, equations, inequalities);
}

Cone Cone::whole_space(std::size_t n) { return canonicalize(n, {}, {}); }

Cone Cone::origin(std::size_t n) {
  std::vector<IntVector> eqs;
  for (std::size_t i = 0; i < n; ++i) eqs.push_back(unit_vector(n, i));
  return canonicalize(n, eqs, {});
}

bool Cone::contains(const IntVector& w) const {
  for (const auto& e : equations_)
    if (dot(e, w) != 0) return false;
  for (const auto& a : inequalities_)
    if (dot(a, w) < 0) return false;
  return true;
}

bool Cone::contains_in_relative_interior(const IntVector& w) const {
  for (const auto& e : equations_)
    if (dot(e, w) != 0) return false;
  for (const auto& a : inequalities_)
    if (dot(a, w) <= 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.n_ != n_) throw std::invalid_argument("cone dimension mismatch");
  for (const auto& l : other.lineality_) {
    if (!contains(l) || !contains(negate(l))) return false;
  }
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  return true;
}

Cone Cone::permuted(const std::vector<std::size_t>& images) const {
  if (images.size() != n_) throw std::invalid_argument("permutation length mismatch");
  auto map = [&](const IntVector& v) {
    IntVector out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[images[i]] = v[i];
    return out;
  };
  auto map_all = [&](const std::vector<IntVector>& rows) {
    std::vector<IntVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(map(r));
    return out;
  };
  Cone c;
  c.n_ = n_;
  c.dim_ = dim_;
  c.equations_ = canonical_row_basis(map_all(equations_), n_);
  c.inequalities_ = reduced_sorted(map_all(inequalities_), rref(to_rational(c.equations_), n_));
  c.lineality_ = canonical_row_basis(map_all(lineality_), n_);
  c.rays_ = reduced_sorted(map_all(rays_), rref(to_rational(c.lineality_), n_));
  return c;
}

bool Cone::operator<(const Cone& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (equations_ != o.equations_) return equations_ < o.equations_;
  return inequalities_ < o.inequalities_;
}

std::string Cone::key() const {
  std::string s = std::to_string(n_) + "|";
  for (const auto& e : equations_) s += to_string(e);
  s += "|";
  for (const auto& a : inequalities_) s += to_string(a);
  return s;
}

std::vector<IntVector> extreme_rays(const Cone& c) { return c.rays(); }

IntVector relative_interior_point(const Cone& c) {
  IntVector p = zero_vector(c.ambient_dim());
  for (const auto& r : c.rays()) p = add(p, r);
  return p;
}

IntVector generic_interior_point(const Cone& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coef(1, (std::uint64_t{1} << 32) - 1);
  IntVector p = zero_vector(c.ambient_dim());
  for (const auto& r : c.rays()) {
    Integer k;
    const std::uint64_t x = coef(rng);
    mpz_set_ui(k.get_mpz_t(), static_cast<unsigned long>(x));
    p = add(p, scale(r, k));
  }
  return p;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("cone dimension mismatch");
  return canonicalize(a.ambient_dim(), stack(a.equations(), b.equations()),
                      stack(a.inequalities(), b.inequalities()));
}

std::vector<Cone> facets(const Cone& c) {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < c.inequalities().size(); ++i) {
    std::vector<IntVector> eqs = c.equations();
    eqs.push_back(c.inequalities()[i]);
    std::vector<IntVector> ineqs;
    for (std::size_t j = 0; j < c.inequalities().size(); ++j)
      if (j != i) ineqs.push_back(c.inequalities()[j]);
    out.push_back(canonicalize(c.ambient_dim(), eqs, ineqs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- fans -------------------------------------------------------------------

bool Fan::contains(const IntVector& w) const {
  for (const auto& c : cones)
    if (c.contains(w)) return true;
  return false;
}

void Fan::normalize() {
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  std::vector<Cone> kept;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cones.size() && !dominated; ++j) {
      if (i == j || cones[j].dimension() <= cones[i].dimension()) continue;
      if (cones[j].contains(cones[i])) dominated = true;
    }
    if (!dominated) kept.push_back(cones[i]);
  }
  cones = std::move(kept);
}

Fan common_refinement_serial(const Fan& a, const Fan& b) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("fan dimension mismatch");
  Fan out{a.ambient_dim, {}};
  for (const auto& c1 : a.cones)
    for (const auto& c2 : b.cones) out.cones.push_back(intersect(c1, c2));
  out.normalize();
  return out;
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("fan dimension mismatch");
  const std::size_t na = a.cones.size(), nb = b.cones.size();
  std::vector<Cone> results(na * nb);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(na * nb); ++k) {
    const std::size_t i = static_cast<std::size_t>(k) / nb, j = static_cast<std::size_t>(k) % nb;
    results[static_cast<std::size_t>(k)] = intersect(a.cones[i], b.cones[j]);
  }
  Fan out{a.ambient_dim, std::move(results)};
  out.normalize();
  return out;
}

std::vector<std::vector<Cone>> fan_faces(const std::vector<Cone>& maximal, std::size_t min_dim) {
  std::size_t top = 0;
  for (const auto& c : maximal) top = std::max(top, c.dimension());
  std::vector<std::set<Cone>> levels(top + 1);
  for (const auto& c : maximal)
    if (c.dimension() >= min_dim) levels[c.dimension()].insert(c);
  for (std::size_t d = top; d > min_dim; --d)
    for (const auto& c : levels[d])
      for (auto& f : facets(c))
        if (f.dimension() >= min_dim) levels[f.dimension()].insert(std::move(f));
  std::vector<std::vector<Cone>> out(top + 1);
  for (std::size_t d = 0; d <= top; ++d) out[d].assign(levels[d].begin(), levels[d].end());
  return out;
}

FanStatistics fan_statistics(const Fan& maximal_cones, std::size_t lineality_dim) {
  FanStatistics s;
  s.ambient_dim = maximal_cones.ambient_dim;
  s.lineality_dim = lineality_dim;
  s.dim = lineality_dim;
  for (const auto& c : maximal_cones.cones) {
    s.dim = std::max(s.dim, c.dimension());
    if (c.rays().size() != c.dimension() - c.lineality_dim()) s.simplicial = false;
  }
  const auto faces = fan_faces(maximal_cones.cones, lineality_dim + 1);
  for (std::size_t d = lineality_dim + 1; d <= s.dim; ++d) s.f_vector.push_back(d < faces.size() ? faces[d].size() : 0);
  return s;
}

std::vector<Polyhedron> restrict_to_unit_first_coordinate(const Fan& fan) {
  if (fan.ambient_dim < 1) throw std::invalid_argument("restriction needs ambient dimension >= 1");
  const std::size_t m = fan.ambient_dim - 1;
  const Cone upper = canonicalize(fan.ambient_dim, {}, {unit_vector(fan.ambient_dim, 0)});
  auto tail = [](const IntVector& v) { return IntVector(v.begin() + 1, v.end()); };
  std::vector<Polyhedron> out;
  for (const auto& cone : fan.cones) {
    // Intersecting with {w0 >= 0} leaves a lineality space inside {w0 = 0},
    // so the slice is generated by the rays with positive first entry
    // (vertices) and those with zero first entry (recession directions).
    const Cone c = intersect(cone, upper);
    Polyhedron p;
    p.ambient_dim = m;
    for (const auto& r : c.rays()) {
      if (r[0] > 0) {
        std::vector<Rational> q(m);
        for (std::size_t i = 0; i < m; ++i) {
          q[i] = Rational(r[i + 1], r[0]);
          q[i].canonicalize();
        }
        p.vertices.push_back(std::move(q));
      } else {
        p.rays.push_back(tail(r));
      }
    }
    if (p.vertices.empty()) continue;
    p.equations = c.equations();
    for (const auto& a : c.inequalities())
      if (!(a == unit_vector(fan.ambient_dim, 0))) p.inequalities.push_back(a);
    for (const auto& l : c.lineality()) p.lineality.push_back(tail(l));
    std::sort(p.vertices.begin(), p.vertices.end());
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace tropfan
