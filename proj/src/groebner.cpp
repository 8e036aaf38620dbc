#include "tropfan/groebner.hpp"

#include "tropfan/cone.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tropfan {

namespace {

// Terms sorted descending in the working order; leading coefficient 1.
struct OPoly {
  std::vector<Term> terms;
  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().mono; }
};

class Engine {
 public:
  explicit Engine(const TermOrder& order) : order_(order) {}

  OPoly to_opoly(const Polynomial& f) const {
    OPoly p{f.terms()};
    std::sort(p.terms.begin(), p.terms.end(),
              [&](const Term& a, const Term& b) { return order_.compare(a.mono, b.mono) > 0; });
    return p;
  }

  void make_monic(OPoly& p) const {
    if (p.empty() || p.terms.front().coef == 1) return;
    const Rational inv = 1 / p.terms.front().coef;
    for (auto& t : p.terms) t.coef *= inv;
  }

  // a - c * m * b, all sorted in the working order.
  std::vector<Term> sub_mul(const std::vector<Term>& a, std::size_t a_from, const Rational& c, const Monomial& m,
                            const std::vector<Term>& b, std::size_t b_from) const {
    std::vector<Term> out;
    out.reserve(a.size() - a_from + b.size() - b_from);
    std::size_t i = a_from, j = b_from;
    Monomial bm;
    bool have_bm = false;
    while (i < a.size() || j < b.size()) {
      if (j < b.size() && !have_bm) {
        bm = b[j].mono * m;
        have_bm = true;
      }
      int cmp;
      if (i == a.size()) cmp = -1;
      else if (j == b.size()) cmp = 1;
      else cmp = order_.compare(a[i].mono, bm);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({bm, -c * b[j].coef});
        ++j;
        have_bm = false;
      } else {
        Rational s = a[i].coef - c * b[j].coef;
        if (s != 0) out.push_back({bm, std::move(s)});
        ++i;
        ++j;
        have_bm = false;
      }
    }
    return out;
  }

  // Full reduction of p by the (monic) reducers; `skip_lead` keeps the
  // leading term untouched (tail reduction).
  template <typename Reducers>
  OPoly reduce(OPoly p, const Reducers& reducers, bool skip_lead) const {
    std::vector<Term> done;
    std::vector<Term> cur = std::move(p.terms);
    std::size_t pos = 0;
    if (skip_lead && !cur.empty()) {
      done.push_back(cur[0]);
      pos = 1;
    }
    while (pos < cur.size()) {
      const Term& t = cur[pos];
      const std::uint64_t mask = t.mono.divmask();
      const OPoly* div = reducers.find(t.mono, mask);
      if (!div) {
        done.push_back(t);
        ++pos;
        continue;
      }
      const Rational c = t.coef;
      const Monomial m = t.mono / div->lm();
      cur = sub_mul(cur, pos + 1, c, m, div->terms, 1);
      pos = 0;
    }
    return OPoly{std::move(done)};
  }

  const TermOrder& order() const { return order_; }

 private:
  const TermOrder& order_;
};

struct Reducer {
  OPoly poly;
  std::uint64_t mask;
  bool alive = true;
};

struct ReducerSet {
  const std::vector<Reducer>* items;
  std::size_t skip = static_cast<std::size_t>(-1);
  const OPoly* find(const Monomial& m, std::uint64_t mask) const {
    for (std::size_t i = 0; i < items->size(); ++i) {
      const Reducer& r = (*items)[i];
      if (!r.alive || i == skip) continue;
      if ((r.mask & ~mask) != 0) continue;
      if (r.poly.lm().divides(m)) return &r.poly;
    }
    return nullptr;
  }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int degree;
};

OPoly s_polynomial(const Engine& e, const OPoly& a, const OPoly& b, const Monomial& lcm) {
  const Monomial ma = lcm / a.lm();
  const Monomial mb = lcm / b.lm();
  std::vector<Term> left;
  left.reserve(a.terms.size());
  for (std::size_t k = 1; k < a.terms.size(); ++k) left.push_back({a.terms[k].mono * ma, a.terms[k].coef});
  return OPoly{e.sub_mul(left, 0, 1, mb, b.terms, 1)};
}

MarkedReducedGB to_marked(const RingPtr& ring, std::vector<OPoly> polys, const TermOrder& order) {
  std::vector<MarkedPolynomial> elems;
  elems.reserve(polys.size());
  for (auto& p : polys) {
    const Monomial lead = p.lm();
    elems.push_back({make_polynomial(ring, std::move(p.terms)), lead});
  }
  return MarkedReducedGB(ring, std::move(elems), order);
}

MarkedReducedGB run_buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, const TermOrder& order) {
  const Engine e(order);
  std::vector<Reducer> basis;
  std::vector<Pair> pairs;
  ReducerSet set{&basis};

  auto unit = [&]() {
    OPoly one{{Term{Monomial(), Rational(1)}}};
    std::vector<OPoly> v;
    v.push_back(std::move(one));
    return to_marked(ring, std::move(v), order);
  };

  // Gebauer–Möller update when h = basis.back() is added.
  auto update = [&]() {
    const std::size_t h = basis.size() - 1;
    const Monomial& lh = basis[h].poly.lm();
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < h; ++i) {
      if (!basis[i].alive) continue;
      const Monomial l = lh.lcm(basis[i].poly.lm());
      fresh.push_back({i, h, l, l.degree()});
    }
    // Chain criterion among the new pairs.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const bool coprime = lh.coprime(basis[fresh[a].i].poly.lm());
      bool drop = false;
      if (!coprime) {
        for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
          if (a == b) continue;
          if (fresh[b].lcm.divides(fresh[a].lcm)) {
            // Strict divisibility, or equal lcm with the earlier index kept.
            if (!(fresh[b].lcm == fresh[a].lcm) || b < a) drop = true;
          }
        }
      } else {
        // A coprime pair still removes the others with the same lcm.
        for (std::size_t b = 0; b < a && !drop; ++b)
          if (fresh[b].lcm == fresh[a].lcm) drop = true;
      }
      if (!drop) kept.push_back(fresh[a]);
    }
    // Product criterion.
    std::vector<Pair> keep_new;
    for (auto& p : kept)
      if (!lh.coprime(basis[p.i].poly.lm())) keep_new.push_back(p);
    // Old pairs made redundant by h.
    std::vector<Pair> old;
    old.reserve(pairs.size());
    for (auto& p : pairs) {
      if (lh.divides(p.lcm) && !(lh.lcm(basis[p.i].poly.lm()) == p.lcm) &&
          !(lh.lcm(basis[p.j].poly.lm()) == p.lcm))
        continue;
      old.push_back(std::move(p));
    }
    pairs = std::move(old);
    pairs.insert(pairs.end(), keep_new.begin(), keep_new.end());
    for (std::size_t i = 0; i < h; ++i)
      if (basis[i].alive && lh.divides(basis[i].poly.lm())) basis[i].alive = false;
  };

  auto add = [&](OPoly p) -> bool {
    e.make_monic(p);
    if (p.lm().is_one()) return false;
    basis.push_back({std::move(p), 0, true});
    basis.back().mask = basis.back().poly.lm().divmask();
    update();
    return true;
  };

  std::vector<OPoly> input;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring)) throw std::invalid_argument("buchberger: generators from different rings");
    input.push_back(e.to_opoly(g));
  }
  std::sort(input.begin(), input.end(), [&](const OPoly& a, const OPoly& b) {
    const int da = a.lm().degree(), db = b.lm().degree();
    if (da != db) return da < db;
    return e.order().compare(a.lm(), b.lm()) < 0;
  });
  for (auto& g : input) {
    OPoly r = e.reduce(std::move(g), set, false);
    if (r.empty()) continue;
    if (!add(std::move(r))) return unit();
  }

  while (!pairs.empty()) {
    // Normal strategy, by degree first so homogeneous input is processed
    // degree by degree even under non-graded weight orders.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (pairs[k].degree != pairs[best].degree) {
        if (pairs[k].degree < pairs[best].degree) best = k;
        continue;
      }
      if (e.order().compare(pairs[k].lcm, pairs[best].lcm) < 0) best = k;
    }
    const Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    OPoly s = s_polynomial(e, basis[p.i].poly, basis[p.j].poly, p.lcm);
    OPoly r = e.reduce(std::move(s), set, false);
    if (r.empty()) continue;
    if (!add(std::move(r))) return unit();
  }

  std::vector<OPoly> result;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].alive) continue;
    ReducerSet others{&basis, i};
    result.push_back(e.reduce(basis[i].poly, others, true));
  }
  return to_marked(ring, std::move(result), order);
}

struct MarkedReducers {
  std::vector<Reducer> items;
  ReducerSet set() const { return ReducerSet{&items}; }
};

MarkedReducers reducers_of(const Engine& e, const MarkedReducedGB& g) {
  MarkedReducers r;
  for (const auto& el : g.elements()) {
    OPoly p = e.to_opoly(el.poly);
    if (!(p.lm() == el.marked))
      throw std::logic_error("marked term is not the leading term under the basis order");
    e.make_monic(p);
    const std::uint64_t mask = p.lm().divmask();
    r.items.push_back({std::move(p), mask, true});
  }
  return r;
}

Monomial variable_product(std::size_t n, int k) {
  Monomial m;
  for (std::size_t i = 0; i < n; ++i) m.set(i, k);
  return m;
}

}  // namespace

// ---- MarkedReducedGB ---------------------------------------------------------

const Rational& MarkedPolynomial::marked_coefficient() const {
  for (const auto& t : poly.terms())
    if (t.mono == marked) return t.coef;
  throw std::logic_error("marked term not in support");
}

MarkedReducedGB::MarkedReducedGB(RingPtr ring, std::vector<MarkedPolynomial> elements, TermOrder order)
    : ring_(std::move(ring)), elements_(std::move(elements)), order_(std::move(order)) {
  for (auto& e : elements_) {
    const Rational c = e.marked_coefficient();
    if (c != 1) e.poly = e.poly * Rational(1 / c);
  }
  std::sort(elements_.begin(), elements_.end(), [](const MarkedPolynomial& a, const MarkedPolynomial& b) {
    return compare_base(BaseOrder::DegRevLex, a.marked, b.marked) > 0;
  });
}

bool MarkedReducedGB::is_unit() const { return elements_.size() == 1 && elements_[0].marked.is_one(); }

std::vector<Polynomial> MarkedReducedGB::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.poly);
  return out;
}

Ideal::Ideal(RingPtr r, std::vector<Polynomial> gens) : ring(std::move(r)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring)) throw std::invalid_argument("ideal generator from a different ring");
    generators.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : generators)
    if (!g.is_homogeneous()) return false;
  return true;
}

// ---- core operations ---------------------------------------------------------

Polynomial normal_form(const Polynomial& f, const MarkedReducedGB& g) {
  if (f.is_zero()) return f;
  const Engine e(g.order());
  const MarkedReducers r = reducers_of(e, g);
  OPoly p = e.reduce(e.to_opoly(f), r.set(), false);
  return make_polynomial(f.ring(), std::move(p.terms));
}

MarkedReducedGB buchberger(const std::vector<Polynomial>& gens, const TermOrder& order) {
  RingPtr ring;
  for (const auto& g : gens)
    if (g.ring()) ring = g.ring();
  if (!ring) throw std::invalid_argument("buchberger: cannot infer the ring");
  return run_buchberger(ring, gens, order);
}

MarkedReducedGB buchberger(const Ideal& ideal, const TermOrder& order) {
  return run_buchberger(ideal.ring, ideal.generators, order);
}

std::vector<Polynomial> initial_ideal_gens(const MarkedReducedGB& g, const IntVector& w) {
  return initial_marked(g, w).polynomials();
}

MarkedReducedGB initial_marked(const MarkedReducedGB& g, const IntVector& w) {
  std::vector<MarkedPolynomial> out;
  out.reserve(g.size());
  for (const auto& el : g.elements()) {
    Polynomial h = initial_form(el.poly, w);
    if (!h.coefficient(el.marked)) throw std::domain_error("weight vector outside the Gröbner cone");
    out.push_back({std::move(h), el.marked});
  }
  return MarkedReducedGB(g.ring(), std::move(out), g.order().refined_by(w));
}

bool is_valid_pair(const GroebnerConePair& pair, const IntVector& w) {
  const auto& a = pair.initial_gb.elements();
  const auto& b = pair.full_gb.elements();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].marked == b[i].marked)) return false;
    if (!(initial_form(b[i].poly, w) == a[i].poly)) return false;
  }
  return true;
}

// ---- saturation and monomials -------------------------------------------------

namespace {

// Saturation of a homogeneous ideal by one variable: with weight e_i first,
// x_i divides the leading term of a homogeneous g only if it divides g.
std::vector<Polynomial> saturate_homogeneous(const RingPtr& ring, std::vector<Polynomial> gens, std::size_t i,
                                             bool& unit) {
  const TermOrder order = TermOrder::weighted({unit_vector(ring->n(), i)});
  const MarkedReducedGB g = run_buchberger(ring, gens, order);
  unit = g.is_unit();
  std::vector<Polynomial> out;
  for (const auto& el : g.elements()) {
    int k = el.marked[i];
    if (k == 0) {
      out.push_back(el.poly);
      continue;
    }
    Monomial d;
    d.set(i, k);
    std::vector<Term> t;
    for (const auto& term : el.poly.terms()) t.push_back({term.mono / d, term.coef});
    Polynomial q = make_polynomial(ring, std::move(t));
    if (q.is_constant()) unit = true;
    out.push_back(std::move(q));
  }
  return out;
}

MarkedReducedGB saturate_inhomogeneous(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring;
  std::vector<std::string> names = ring->names;
  std::string t = "t";
  while (std::find(names.begin(), names.end(), t) != names.end()) t += "_";
  names.push_back(t);
  const RingPtr big = make_ring(names);
  std::vector<std::size_t> pos(ring->n());
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(g.embedded(big, pos));
  Monomial prod = variable_product(big->n(), 1);
  gens.push_back(Polynomial::monomial(big, prod) - Polynomial::constant(big, 1));
  IntVector elim = zero_vector(big->n());
  elim[big->n() - 1] = -1;
  const MarkedReducedGB g = run_buchberger(big, gens, TermOrder::weighted({elim}));
  std::vector<Polynomial> kept;
  for (const auto& el : g.elements()) {
    bool uses_t = false;
    for (const auto& term : el.poly.terms())
      if (term.mono[big->n() - 1]) uses_t = true;
    if (uses_t) continue;
    std::vector<Term> terms = el.poly.terms();
    kept.push_back(make_polynomial(ring, std::move(terms)));
  }
  return run_buchberger(ring, kept, TermOrder::degrevlex());
}

}  // namespace

MarkedReducedGB saturate_by_variable_product(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) return saturate_inhomogeneous(ideal);
  std::vector<Polynomial> gens = ideal.generators;
  for (std::size_t i = 0; i < ideal.ring->n(); ++i) {
    bool unit = false;
    gens = saturate_homogeneous(ideal.ring, std::move(gens), i, unit);
    if (unit) return run_buchberger(ideal.ring, {Polynomial::constant(ideal.ring, 1)}, TermOrder::degrevlex());
  }
  return run_buchberger(ideal.ring, gens, TermOrder::degrevlex());
}

bool contains_monomial(const Ideal& ideal) { return saturate_by_variable_product(ideal).is_unit(); }

std::optional<Monomial> monomial_in_ideal(const Ideal& ideal) {
  const MarkedReducedGB g = run_buchberger(ideal.ring, ideal.generators, TermOrder::degrevlex());
  if (g.is_unit()) return Monomial();
  if (!contains_monomial(ideal)) return std::nullopt;
  for (int k = 1;; ++k) {
    const Monomial m = variable_product(ideal.ring->n(), k);
    if (normal_form(Polynomial::monomial(ideal.ring, m), g).is_zero()) return m;
  }
}

Polynomial witness(const Ideal& ideal, const IntVector& w) {
  if (w.size() != ideal.ring->n()) throw std::invalid_argument("witness: weight length mismatch");
  if (!ideal.is_homogeneous()) {
    const MarkedReducedGB g = run_buchberger(ideal.ring, ideal.generators, TermOrder::degrevlex());
    const RingPtr hr = homogenizing_ring(ideal.ring);
    std::vector<Polynomial> hg;
    for (const auto& p : g.polynomials()) hg.push_back(homogenize(p, hr));
    IntVector hw{Integer(0)};
    hw.insert(hw.end(), w.begin(), w.end());
    return dehomogenize(witness(Ideal(hr, hg), hw), ideal.ring);
  }
  const MarkedReducedGB g = run_buchberger(ideal.ring, ideal.generators, TermOrder::weighted({w}));
  const auto m = monomial_in_ideal(Ideal(ideal.ring, initial_ideal_gens(g, w)));
  if (!m) throw std::domain_error("witness: the initial ideal contains no monomial");
  const Polynomial xm = Polynomial::monomial(ideal.ring, *m);
  return xm - normal_form(xm, g);
}

std::vector<IntVector> marking_inequalities(const std::vector<MarkedPolynomial>& elements, std::size_t n) {
  std::vector<IntVector> rows;
  for (const auto& el : elements) {
    const IntVector a = el.marked.exponent_vector(n);
    for (const auto& t : el.poly.terms())
      if (!(t.mono == el.marked)) rows.push_back(subtract(t.mono.exponent_vector(n), a));
  }
  return rows;
}

MarkedReducedGB lift(const MarkedReducedGB& full_prev, const MarkedReducedGB& initial_target,
                     const TermOrder& target_order) {
  const Engine e(target_order);
  std::vector<Reducer> items;
  for (const auto& g : initial_target.elements()) {
    const Polynomial h = g.poly - normal_form(g.poly, full_prev);
    if (h.is_zero() || !h.coefficient(g.marked)) throw std::runtime_error("lift: inconsistent input bases");
    OPoly p = e.to_opoly(h);
    if (!(p.lm() == g.marked)) throw std::runtime_error("lift: marking is not leading under the target order");
    e.make_monic(p);
    const std::uint64_t mask = p.lm().divmask();
    items.push_back({std::move(p), mask, true});
  }
  std::vector<OPoly> reduced;
  for (std::size_t i = 0; i < items.size(); ++i) {
    ReducerSet others{&items, i};
    reduced.push_back(e.reduce(items[i].poly, others, true));
  }
  return to_marked(full_prev.ring(), std::move(reduced), target_order);
}

MarkedReducedGB lift(const MarkedReducedGB& full_prev, const MarkedReducedGB& initial_target) {
  std::vector<MarkedPolynomial> lifted;
  for (const auto& g : initial_target.elements())
    lifted.push_back({g.poly - normal_form(g.poly, full_prev), g.marked});
  const std::size_t n = full_prev.ring()->n();
  const Cone c = canonicalize(n, {}, marking_inequalities(lifted, n));
  const IntVector w = relative_interior_point(c);
  return lift(full_prev, initial_target, TermOrder::weighted({w}));
}

// ---- dimension and homogeneity -------------------------------------------------

int krull_dimension(const MarkedReducedGB& g) {
  if (g.is_unit()) return -1;
  const std::size_t n = g.ring()->n();
  std::vector<std::uint32_t> supports;
  for (const auto& el : g.elements()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (el.marked[i]) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  std::function<void(std::size_t, std::uint32_t, int)> search = [&](std::size_t i, std::uint32_t set, int size) {
    if (size + static_cast<int>(n - i) <= best) return;
    if (i == n) {
      best = size;
      return;
    }
    const std::uint32_t with = set | (1u << i);
    bool ok = true;
    for (auto s : supports)
      if ((s & ~with) == 0) {
        ok = false;
        break;
      }
    if (ok) search(i + 1, with, size + 1);
    search(i + 1, set, size);
  };
  search(0, 0, 0);
  return best;
}

int krull_dimension(const Ideal& ideal) {
  return krull_dimension(run_buchberger(ideal.ring, ideal.generators, TermOrder::degrevlex()));
}

std::vector<IntVector> homogeneity_space(const MarkedReducedGB& g) {
  const std::size_t n = g.ring()->n();
  std::vector<IntVector> rows;
  for (const auto& el : g.elements()) {
    const IntVector a = el.poly.terms().front().mono.exponent_vector(n);
    for (std::size_t k = 1; k < el.poly.size(); ++k)
      rows.push_back(subtract(el.poly.terms()[k].mono.exponent_vector(n), a));
  }
  return kernel_basis(rows, n);
}

std::vector<IntVector> homogeneity_space(const Ideal& ideal) {
  return homogeneity_space(run_buchberger(ideal.ring, ideal.generators, TermOrder::degrevlex()));
}

}  // namespace tropfan
