#pragma once

// Shared helpers for the test programs: fixture loading, random ideals and
// one-call traversals.

#include "tropfan/io.hpp"
#include "tropfan/tropical.hpp"

#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>

namespace tropfan::testing {

inline std::string data_path(const std::string& name) { return std::string(TROPFAN_TEST_DATA) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

inline InputDocument load(const std::string& name) { return parse_document(read_file(data_path(name))); }

inline Ideal load_ideal(const std::string& name) {
  InputDocument doc = load(name);
  return Ideal(doc.ring, doc.polynomials);
}

// Homogenizations of the elements of a degrevlex basis generate ^hI.
inline Ideal homogenized(const Ideal& ideal) {
  const MarkedReducedGB g = buchberger(ideal, TermOrder::degrevlex());
  const RingPtr ring = homogenizing_ring(ideal.ring);
  std::vector<Polynomial> gens;
  for (const auto& p : g.polynomials()) gens.push_back(homogenize(p, ring));
  return Ideal(ring, gens);
}

inline Polynomial poly(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

struct Run {
  TraversalResult result;
  TraversalReport report;
  std::string text;
};

inline Run run_traversal(const Ideal& ideal, std::uint64_t seed, int jobs, const PermGroup* group = nullptr) {
  TraversalOptions options;
  options.seed = seed;
  options.jobs = jobs;
  options.symmetry = group;
  Run r;
  r.result = traverse(starting_cone(ideal, seed), options);
  r.report = make_report(r.result.cones, r.result.lineality, group);
  r.text = format_report(r.report);
  return r;
}

// Rays of a traversal reduced modulo its lineality space, as a set.
inline std::set<IntVector> rays_modulo(const std::vector<IntVector>& rays, const std::vector<IntVector>& lineality,
                                       std::size_t n) {
  const Rref basis = rref(to_rational(lineality), n);
  std::set<IntVector> out;
  for (const auto& r : rays) out.insert(reduce_modulo(r, basis));
  return out;
}

inline std::set<IntVector> negated(const std::set<IntVector>& s) {
  std::set<IntVector> out;
  for (const auto& v : s) out.insert(negate(v));
  return out;
}

// Random polynomial with at most `terms` terms of total degree <= max_degree
// (exactly max_degree when homogeneous) and coefficients in [-3,3].
inline Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, int terms, int max_degree,
                                    bool homogeneous) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> var(0, ring->n() - 1);
  std::uniform_int_distribution<int> deg(homogeneous ? max_degree : 0, max_degree);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(ring->n(), 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++e[var(rng)];
    int c = coef(rng);
    if (c == 0) c = 1;
    out.push_back({Monomial(e), Rational(c)});
  }
  return make_polynomial(ring, std::move(out));
}

inline RingPtr small_ring(std::size_t n) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  return make_ring(std::vector<std::string>(names, names + n));
}

// Two or three nonzero generators in n <= 4 variables, degree <= 3.
inline Ideal random_ideal(std::mt19937_64& rng, bool homogeneous) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
  const RingPtr ring = small_ring(n);
  const int count = std::uniform_int_distribution<int>(2, 3)(rng);
  std::vector<Polynomial> gens;
  while (static_cast<int>(gens.size()) < count) {
    const int d = std::uniform_int_distribution<int>(1, 3)(rng);
    Polynomial f = random_polynomial(ring, rng, std::uniform_int_distribution<int>(2, 4)(rng), d, homogeneous);
    if (!f.is_zero() && !f.is_constant()) gens.push_back(f);
  }
  return Ideal(ring, gens);
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Reduced degrevlex bases of two generating sets agree.
inline bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  return buchberger(a, TermOrder::degrevlex()) == buchberger(b, TermOrder::degrevlex());
}

}  // namespace tropfan::testing
