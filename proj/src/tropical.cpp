#include "tropfan/tropical.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <map>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropfan {

// ---- hypersurfaces and prevarieties --------------------------------------------

Fan tropical_hypersurface(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("tropical hypersurface of the zero polynomial");
  const std::size_t n = f.ring()->n();
  Fan fan{n, {}};
  if (f.size() == 1) return fan;
  std::vector<IntVector> support;
  for (const auto& t : f.terms()) support.push_back(t.mono.exponent_vector(n));
  for (std::size_t i = 0; i < support.size(); ++i) {
    std::vector<IntVector> ineqs;
    for (std::size_t j = 0; j < support.size(); ++j)
      if (j != i) ineqs.push_back(subtract(support[j], support[i]));
    const Cone normal = canonicalize(n, {}, ineqs);
    if (normal.dimension() != n) continue;  // not a vertex of the Newton polytope
    for (auto& facet : facets(normal)) fan.cones.push_back(std::move(facet));
  }
  fan.normalize();
  return fan;
}

namespace {

template <typename Refine>
Fan prevariety_with(const std::vector<Polynomial>& fs, Refine refine) {
  if (fs.empty()) throw std::invalid_argument("prevariety of an empty list");
  std::vector<const Polynomial*> order;
  for (const auto& f : fs) order.push_back(&f);
  std::stable_sort(order.begin(), order.end(),
                   [](const Polynomial* a, const Polynomial* b) { return a->size() < b->size(); });
  Fan fan = tropical_hypersurface(*order.front());
  for (std::size_t i = 1; i < order.size() && !fan.cones.empty(); ++i)
    fan = refine(fan, tropical_hypersurface(*order[i]));
  return fan;
}

}  // namespace

Fan tropical_prevariety(const std::vector<Polynomial>& fs) {
  return prevariety_with(fs, [](const Fan& a, const Fan& b) { return common_refinement(a, b); });
}

Fan tropical_prevariety_serial(const std::vector<Polynomial>& fs) {
  return prevariety_with(fs, [](const Fan& a, const Fan& b) { return common_refinement_serial(a, b); });
}

// ---- Gröbner cones ---------------------------------------------------------------

Cone groebner_cone(const GroebnerConePair& pair) {
  const std::size_t n = pair.ring()->n();
  const auto& init = pair.initial_gb.elements();
  const auto& full = pair.full_gb.elements();
  if (init.size() != full.size()) throw std::invalid_argument("groebner_cone: bases of different sizes");
  std::vector<IntVector> eqs, ineqs;
  for (std::size_t i = 0; i < full.size(); ++i) {
    const Polynomial& h = init[i].poly;
    const IntVector a = h.terms().front().mono.exponent_vector(n);
    for (std::size_t k = 1; k < h.size(); ++k) eqs.push_back(subtract(h.terms()[k].mono.exponent_vector(n), a));
    for (const auto& t : full[i].poly.terms())
      if (!h.coefficient(t.mono)) ineqs.push_back(subtract(t.mono.exponent_vector(n), a));
  }
  return canonicalize(n, eqs, ineqs);
}

Cone marked_groebner_cone(const MarkedReducedGB& g) {
  const std::size_t n = g.ring()->n();
  return canonicalize(n, {}, marking_inequalities(g.elements(), n));
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::uint64_t z = h ^ (seed + 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// ---- curves ----------------------------------------------------------------------

CurveResult tropical_curve(const Ideal& ideal, std::uint64_t seed, bool pure_restart) {
  if (!ideal.is_homogeneous()) throw PreconditionError("curve ideal must be homogeneous");
  const MarkedReducedGB gb = buchberger(ideal, TermOrder::degrevlex());
  const int d = krull_dimension(gb);
  const std::size_t h = homogeneity_space(gb).size();
  if (d < 0 || static_cast<std::size_t>(d) != h + 1)
    throw PreconditionError("not a curve: dim = " + std::to_string(d) + ", homogeneity = " + std::to_string(h));

  CurveResult result;
  result.basis = ideal.generators;
  Fan prevariety = tropical_prevariety(result.basis);
  std::set<Cone> verified;
  int failures = 0;
  for (;;) {
    bool restart = false;
    for (const Cone& c : prevariety.cones) {
      if (c.dimension() <= h || verified.count(c)) continue;
      const std::size_t k = c.dimension() - h;
      const IntVector w = k == 1 ? relative_interior_point(c)
                                 : generic_interior_point(c, derive_seed(seed, c.key() + "#" + std::to_string(failures)));
      const MarkedReducedGB gw = buchberger(gb.polynomials(), TermOrder::weighted({w}));
      const auto m = monomial_in_ideal(Ideal(ideal.ring, initial_ideal_gens(gw, w)));
      if (m) {
        const Polynomial xm = Polynomial::monomial(ideal.ring, *m);
        const Polynomial f = xm - normal_form(xm, gw);
        result.basis.push_back(f);
        prevariety = pure_restart ? tropical_prevariety(result.basis)
                                  : common_refinement(prevariety, tropical_hypersurface(f));
        restart = true;
        break;
      }
      if (k >= 2) {
        // A generic point of a cone of dimension >= 2 (modulo the
        // homogeneity space) cannot lie on a curve; draw a new point.
        if (++failures > 16) throw std::runtime_error("tropical_curve: no generic point found");
        restart = true;
        break;
      }
      verified.insert(c);
    }
    if (!restart) break;
  }
  result.variety = std::move(prevariety);
  return result;
}

std::vector<Polynomial> tropical_basis_of_curve(const Ideal& ideal, std::uint64_t seed, bool pure_restart) {
  return tropical_curve(ideal, seed, pure_restart).basis;
}

// ---- starting cone ---------------------------------------------------------------

namespace {

GroebnerConePair starting_cone_rec(const RingPtr& ring, const std::vector<Polynomial>& gens, std::mt19937_64& rng) {
  const MarkedReducedGB g = buchberger(gens, TermOrder::degrevlex());
  const int d = krull_dimension(g);
  const std::size_t h = homogeneity_space(g).size();
  if (d >= 0 && static_cast<std::size_t>(d) == h) return {g, g};
  std::uniform_int_distribution<long> entry(-10000, 10000);
  const std::size_t n = ring->n();
  for (int attempt = 0; attempt < 64; ++attempt) {
    IntVector r(n);
    for (auto& x : r) x = entry(rng);
    const MarkedReducedGB gr = buchberger(gens, TermOrder::weighted({r}));
    const Cone c = marked_groebner_cone(gr);
    if (c.rays().empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, c.rays().size() - 1);
    const IntVector w = c.rays()[pick(rng)];
    const std::vector<Polynomial> in_w = initial_ideal_gens(gr, w);
    if (contains_monomial(Ideal(ring, in_w))) continue;
    const TermOrder ow = TermOrder::weighted({w});
    const MarkedReducedGB target = buchberger(in_w, ow);
    const MarkedReducedGB gw = lift(gr, target, ow);
    GroebnerConePair inner = starting_cone_rec(ring, target.polynomials(), rng);
    std::vector<IntVector> weights{w};
    for (const auto& v : inner.full_gb.order().weights()) weights.push_back(v);
    MarkedReducedGB full = lift(gw, inner.full_gb, TermOrder::weighted(weights));
    return {std::move(inner.initial_gb), std::move(full)};
  }
  throw RetryExhausted("starting cone: no monomial-free initial ideal found in 64 attempts");
}

}  // namespace

GroebnerConePair starting_cone(const Ideal& ideal, std::uint64_t seed) {
  if (!ideal.is_homogeneous()) throw PreconditionError("starting cone needs a homogeneous ideal");
  if (contains_monomial(ideal)) throw PreconditionError("the ideal contains a monomial; its tropical variety is empty");
  std::mt19937_64 rng(seed);
  GroebnerConePair pair;
  try {
    pair = starting_cone_rec(ideal.ring, ideal.generators, rng);
  } catch (const RetryExhausted& e) {
    throw RetryExhausted(std::string(e.what()) + " (seed " + std::to_string(seed) + ")");
  }
  const Cone c = groebner_cone(pair);
  if (!is_valid_pair(pair, relative_interior_point(c)))
    throw std::logic_error("starting cone: initial basis does not match the full basis");
  return pair;
}

// ---- neighbors and traversal -----------------------------------------------------

std::vector<GroebnerConePair> neighbors(const GroebnerConePair& pair, std::uint64_t seed) {
  const RingPtr& ring = pair.ring();
  const Cone c = groebner_cone(pair);
  std::vector<GroebnerConePair> out;
  for (const Cone& facet : facets(c)) {
    const IntVector u = relative_interior_point(facet);
    const std::vector<Polynomial> j = initial_ideal_gens(pair.full_gb, u);
    const CurveResult curve = tropical_curve(Ideal(ring, j), derive_seed(seed, facet.key()));
    for (const Cone& ray : curve.variety.cones) {
      if (ray.dimension() != facet.dimension() + 1) continue;
      const IntVector v = relative_interior_point(ray);
      const MarkedReducedGB target = buchberger(j, TermOrder::weighted({v}));
      const TermOrder order = TermOrder::weighted({u, v});
      MarkedReducedGB full = lift(pair.full_gb, target, order);
      std::vector<MarkedPolynomial> init;
      for (const auto& el : full.elements()) init.push_back({initial_form(el.poly, {u, v}), el.marked});
      out.push_back({MarkedReducedGB(ring, std::move(init), order), std::move(full)});
    }
  }
  return out;
}

namespace {

struct Found {
  GroebnerConePair pair;
  Cone cone;
  Cone key;
};

Cone visit_key(const Cone& c, const TraversalOptions& o) {
  return o.symmetry ? canonical_orbit_representative(c, *o.symmetry) : c;
}

TraversalResult finish(std::vector<GroebnerConePair> pairs, std::vector<Cone> cones, const TraversalOptions& o) {
  TraversalResult r;
  std::vector<std::size_t> idx(pairs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cones[a] < cones[b]; });
  std::set<Cone> all;
  for (auto i : idx) {
    r.pairs.push_back(pairs[i]);
    r.visited.push_back(cones[i]);
    if (o.symmetry)
      for (auto& img : orbit(cones[i], *o.symmetry)) all.insert(std::move(img));
    else
      all.insert(cones[i]);
  }
  r.cones.assign(all.begin(), all.end());
  if (!pairs.empty()) r.lineality = canonical_row_basis(homogeneity_space(pairs.front().full_gb), pairs.front().ring()->n());
  return r;
}

}  // namespace

TraversalResult traverse(const GroebnerConePair& start, const TraversalOptions& options) {
  std::vector<GroebnerConePair> pairs{start};
  std::vector<Cone> cones{groebner_cone(start)};
  std::set<Cone> visited{visit_key(cones.front(), options)};
  std::vector<std::size_t> frontier{0};
#ifdef _OPENMP
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#endif
  while (!frontier.empty()) {
    std::vector<std::vector<Found>> found(frontier.size());
    std::vector<std::exception_ptr> errors(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(frontier.size()); ++k) {
      const std::size_t i = frontier[static_cast<std::size_t>(k)];
      try {
        for (auto& p : neighbors(pairs[i], derive_seed(options.seed, cones[i].key()))) {
          Cone c = groebner_cone(p);
          Cone key = visit_key(c, options);
          found[static_cast<std::size_t>(k)].push_back({std::move(p), std::move(c), std::move(key)});
        }
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    std::vector<std::size_t> next;
    for (auto& batch : found)
      for (auto& f : batch) {
        if (!visited.insert(f.key).second) continue;
        next.push_back(pairs.size());
        pairs.push_back(std::move(f.pair));
        cones.push_back(std::move(f.cone));
      }
    frontier = std::move(next);
  }
  return finish(std::move(pairs), std::move(cones), options);
}

TraversalResult traverse_serial(const GroebnerConePair& start, const TraversalOptions& options) {
  std::vector<GroebnerConePair> pairs{start};
  std::vector<Cone> cones{groebner_cone(start)};
  std::set<Cone> visited{visit_key(cones.front(), options)};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (auto& p : neighbors(pairs[i], derive_seed(options.seed, cones[i].key()))) {
      Cone c = groebner_cone(p);
      if (!visited.insert(visit_key(c, options)).second) continue;
      queue.push_back(pairs.size());
      pairs.push_back(std::move(p));
      cones.push_back(std::move(c));
    }
  }
  return finish(std::move(pairs), std::move(cones), options);
}

// ---- linear ideals ---------------------------------------------------------------

std::vector<Polynomial> linear_circuits(const LinearIdealModel& m) {
  const std::size_t d = m.matrix.size();
  if (d == 0) throw std::invalid_argument("linear_circuits: empty matrix");
  const std::size_t n = m.matrix.front().size();
  if (n != m.ring->n()) throw std::invalid_argument("linear_circuits: matrix width differs from the ring");
  if (rank(m.matrix) != d) throw std::invalid_argument("linear_circuits: rows are linearly dependent");

  std::set<IntVector> circuits;
  std::vector<std::size_t> subset(d - 1);
  for (std::size_t i = 0; i + 1 < d; ++i) subset[i] = i;
  for (;;) {
    // Columns in `subset` as rows of A_T^T.
    RatMatrix at(subset.size(), std::vector<Rational>(d));
    for (std::size_t r = 0; r < subset.size(); ++r)
      for (std::size_t i = 0; i < d; ++i) at[r][i] = m.matrix[i][subset[r]];
    if (subset.empty() || rank(at) + 1 == d) {
      const auto ker = kernel_basis(at, d);
      if (ker.size() == 1) {
        std::vector<Rational> c(n);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < d; ++i) c[j] += Rational(ker[0][i]) * m.matrix[i][j];
        IntVector v = clear_denominators(c);
        if (!is_zero(v)) {
          v = primitive(std::move(v));
          for (const auto& x : v)
            if (x != 0) {
              if (x < 0) v = negate(std::move(v));
              break;
            }
          circuits.insert(std::move(v));
        }
      }
    }
    // Next (d-1)-subset of {0..n-1} in lexicographic order.
    std::size_t k = subset.size();
    while (k > 0 && subset[k - 1] == n - subset.size() + k - 1) --k;
    if (k == 0) break;
    ++subset[k - 1];
    for (std::size_t r = k; r < subset.size(); ++r) subset[r] = subset[r - 1] + 1;
  }
  std::vector<Polynomial> out;
  for (auto it = circuits.rbegin(); it != circuits.rend(); ++it) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j)
      if ((*it)[j] != 0) {
        Monomial x;
        x.set(j, 1);
        terms.push_back({x, Rational((*it)[j])});
      }
    out.push_back(make_polynomial(m.ring, std::move(terms)));
  }
  return out;
}

bool uniform_bergman_member(const IntVector& w, std::size_t d) {
  if (d >= w.size()) throw std::invalid_argument("uniform_bergman_member: need d < n");
  IntVector s = w;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 1; i <= d; ++i)
    if (s[i] != s[0]) return false;
  return true;
}

}  // namespace tropfan
