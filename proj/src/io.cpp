#include "tropfan/io.hpp"

#include "scanner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropfan {

namespace {

using detail::Scanner;

RingPtr parse_ring(Scanner& s) {
  const std::string field = s.identifier();
  if (field != "Q") s.fail("expected ring declaration Q[...]");
  s.expect('[');
  std::vector<std::string> names;
  if (s.peek() != ']') {
    do {
      names.push_back(s.identifier());
    } while (s.accept(','));
  }
  s.expect(']');
  try {
    return make_ring(std::move(names));
  } catch (const std::invalid_argument& e) {
    s.fail(e.what());
  }
}

std::vector<Polynomial> parse_list(Scanner& s, const RingPtr& ring, std::vector<Monomial>* marks) {
  s.expect('{');
  std::vector<Polynomial> out;
  if (s.accept('}')) return out;
  do {
    Polynomial first;
    Polynomial p = detail::parse_polynomial_expr(s, ring, marks ? &first : nullptr);
    if (marks) {
      if (first.size() != 1) s.fail("the first term of a marked polynomial must be a single term");
      const Monomial m = first.terms().front().mono;
      if (!p.coefficient(m)) s.fail("marked term cancels");
      marks->push_back(m);
    }
    out.push_back(std::move(p));
  } while (s.accept(','));
  s.expect('}');
  return out;
}

std::vector<Permutation> parse_permutations(Scanner& s, std::size_t n) {
  s.expect('{');
  std::vector<Permutation> out;
  if (s.accept('}')) return out;
  do {
    s.expect('(');
    std::vector<std::size_t> images;
    if (s.peek() != ')') {
      do {
        const std::string d = s.digits();
        if (d.size() > 6) s.fail("permutation entry too large");
        images.push_back(std::stoul(d));
      } while (s.accept(','));
    }
    s.expect(')');
    if (images.size() != n) s.fail("permutation length differs from the number of variables");
    try {
      out.push_back(make_permutation(std::move(images)));
    } catch (const std::invalid_argument& e) {
      s.fail(e.what());
    }
  } while (s.accept(','));
  s.expect('}');
  return out;
}

std::string join_vector_rows(const std::vector<std::string>& rows) {
  std::string s = "{";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ",\n ";
    s += rows[i];
  }
  return s + "}";
}

std::string format_rational_vector(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ")";
}

std::string format_sizes(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

InputDocument parse_document(std::string_view text) {
  Scanner s(text);
  InputDocument doc;
  doc.ring = parse_ring(s);
  doc.polynomials = parse_list(s, doc.ring, nullptr);
  if (doc.polynomials.empty()) s.fail("empty polynomial list");
  if (s.peek() == '{') doc.symmetry = parse_permutations(s, doc.ring->n());
  if (!s.at_end()) s.fail("unexpected trailing input");
  return doc;
}

TermOrder order_from_markings(const RingPtr& ring, const std::vector<MarkedPolynomial>& elements) {
  const std::size_t n = ring->n();
  const Cone c = canonicalize(n, {}, marking_inequalities(elements, n));
  const TermOrder order = TermOrder::weighted({relative_interior_point(c)});
  for (const auto& el : elements)
    if (!(el.poly.leading_term(order).mono == el.marked))
      throw std::invalid_argument("the markings are not induced by a term order");
  return order;
}

PairDocument parse_pair_document(std::string_view text) {
  Scanner s(text);
  const RingPtr ring = parse_ring(s);
  std::vector<Monomial> init_marks, full_marks;
  std::vector<Polynomial> init = parse_list(s, ring, &init_marks);
  std::vector<Polynomial> full = parse_list(s, ring, &full_marks);
  PairDocument doc;
  if (s.peek() == '{') doc.symmetry = parse_permutations(s, ring->n());
  if (!s.at_end()) s.fail("unexpected trailing input");
  if (init.size() != full.size()) s.fail("the two bases have different sizes");

  std::vector<MarkedPolynomial> ie, fe;
  for (std::size_t i = 0; i < init.size(); ++i) {
    ie.push_back({std::move(init[i]), init_marks[i]});
    fe.push_back({std::move(full[i]), full_marks[i]});
  }
  TermOrder order;
  try {
    order = order_from_markings(ring, fe);
  } catch (const std::invalid_argument& e) {
    s.fail(e.what());
  }
  doc.pair.initial_gb = MarkedReducedGB(ring, std::move(ie), order);
  doc.pair.full_gb = MarkedReducedGB(ring, std::move(fe), order);
  return doc;
}

std::string format_ring(const Ring& ring) {
  std::string s = "Q[";
  for (std::size_t i = 0; i < ring.n(); ++i) {
    if (i) s += ',';
    s += ring.names[i];
  }
  return s + "]";
}

std::string format_polynomials(const std::vector<Polynomial>& polys) {
  std::string s = "{\n";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ",\n";
    s += to_string(polys[i]);
  }
  return s + "}";
}

std::string format_marked(const MarkedReducedGB& g) {
  std::string s = "{\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",\n";
    s += to_string_marked(g.elements()[i].poly, g.elements()[i].marked);
  }
  return s + "}";
}

std::string format_pair(const GroebnerConePair& pair) {
  return format_ring(*pair.ring()) + "\n" + format_marked(pair.initial_gb) + "\n" + format_marked(pair.full_gb) + "\n";
}

std::string format_document(const InputDocument& doc) {
  std::string s = format_ring(*doc.ring) + "\n" + format_polynomials(doc.polynomials) + "\n";
  if (!doc.symmetry.empty()) {
    s += "{";
    for (std::size_t i = 0; i < doc.symmetry.size(); ++i) {
      if (i) s += ",";
      s += to_string(doc.symmetry[i]);
    }
    s += "}\n";
  }
  return s;
}

std::string format_vectors(const std::vector<IntVector>& rows) {
  std::vector<std::string> parts;
  for (const auto& r : rows) parts.push_back(to_string(r));
  return join_vector_rows(parts);
}

// ---- reports ----------------------------------------------------------------------

TraversalReport make_report(const std::vector<Cone>& maximal_cones, const std::vector<IntVector>& lineality,
                            const PermGroup* group) {
  TraversalReport r;
  const std::size_t lin = lineality.size();
  r.lineality = lineality;
  r.group_order = group ? group->order() : 1;
  r.dim = lin;
  Fan fan;
  fan.cones = maximal_cones;
  if (!maximal_cones.empty()) fan.ambient_dim = maximal_cones.front().ambient_dim();
  r.ambient_dim = fan.ambient_dim;
  const FanStatistics stats = fan_statistics(fan, lin);
  r.dim = stats.dim;
  r.simplicial = stats.simplicial;
  r.f_vector = stats.f_vector;

  const auto faces = fan_faces(maximal_cones, lin + 1);
  std::map<IntVector, std::size_t> ray_index;
  if (lin + 1 < faces.size())
    for (const auto& c : faces[lin + 1]) {
      ray_index.emplace(c.rays().front(), r.rays.size());
      r.rays.push_back(c.rays().front());
    }
  r.incidences.resize(r.dim - lin + 1);
  for (std::size_t k = 2; lin + k < faces.size(); ++k)
    for (const auto& c : faces[lin + k]) {
      std::vector<std::size_t> idx;
      for (const auto& ray : c.rays()) idx.push_back(ray_index.at(ray));
      std::sort(idx.begin(), idx.end());
      r.incidences[k].push_back(std::move(idx));
    }
  if (group) {
    r.orbit_sizes.resize(r.dim - lin + 1);
    for (std::size_t k = 1; lin + k < faces.size(); ++k) {
      std::map<Cone, std::size_t> reps;
      for (const auto& c : faces[lin + k]) ++reps[canonical_orbit_representative(c, *group)];
      std::map<std::size_t, std::size_t, std::greater<>> tally;
      for (const auto& [rep, size] : reps) ++tally[size];
      r.orbit_sizes[k].assign(tally.begin(), tally.end());
    }
  }
  return r;
}

std::string format_report(const TraversalReport& r) {
  std::string s;
  s += "Ambient dimension: " + std::to_string(r.ambient_dim) + "\n";
  s += "Dimension of homogeneity space: " + std::to_string(r.lineality.size()) + "\n";
  s += "Dimension of tropical variety: " + std::to_string(r.dim) + "\n";
  s += std::string("Simplicial: ") + (r.simplicial ? "true" : "false") + "\n";
  s += "Order of input symmetry group: " + std::to_string(r.group_order) + "\n";
  s += "F-vector: " + format_sizes(r.f_vector) + "\n";
  s += "Modulo the homogeneity space:\n" + format_vectors(r.lineality) + "\n";
  std::vector<std::string> rays;
  for (std::size_t i = 0; i < r.rays.size(); ++i) rays.push_back(std::to_string(i) + ": " + to_string(r.rays[i]));
  s += "Rays:\n" + join_vector_rows(rays) + "\n";
  for (std::size_t k = r.incidences.size(); k-- > 2;) {
    std::vector<std::string> cones;
    for (const auto& idx : r.incidences[k]) {
      std::string c = "{";
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) c += ',';
        c += std::to_string(idx[i]);
      }
      cones.push_back(c + "}");
    }
    s += "Rays incident to each dimension " + std::to_string(k) + " cone:\n" + join_vector_rows(cones) + "\n";
  }
  for (std::size_t k = 1; k < r.orbit_sizes.size(); ++k) {
    s += "Orbits of dimension " + std::to_string(k) + " cones:";
    for (std::size_t i = 0; i < r.orbit_sizes[k].size(); ++i)
      s += std::string(i ? "," : "") + " " + std::to_string(r.orbit_sizes[k][i].second) + " of size " +
           std::to_string(r.orbit_sizes[k][i].first);
    s += "\n";
  }
  return s;
}

std::string format_fan(const Fan& fan) {
  std::size_t lin = fan.ambient_dim;
  for (const auto& c : fan.cones) lin = std::min(lin, c.lineality_dim());
  std::string s;
  s += "Ambient dimension: " + std::to_string(fan.ambient_dim) + "\n";
  s += "Maximal cones: " + std::to_string(fan.cones.size()) + "\n";
  if (fan.cones.empty()) return s + "F-vector: ()\n";
  const FanStatistics stats = fan_statistics(fan, lin);
  s += "Lineality dimension: " + std::to_string(lin) + "\n";
  s += "F-vector: " + format_sizes(stats.f_vector) + "\n";
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const Cone& c = fan.cones[i];
    s += "Cone " + std::to_string(i) + " (dimension " + std::to_string(c.dimension()) + "):\n";
    s += "Equations:\n" + format_vectors(c.equations()) + "\n";
    s += "Inequalities:\n" + format_vectors(c.inequalities()) + "\n";
    s += "Lineality:\n" + format_vectors(c.lineality()) + "\n";
    s += "Rays:\n" + format_vectors(c.rays()) + "\n";
  }
  return s;
}

std::string format_polyhedra(const std::vector<Polyhedron>& complex) {
  std::string s = "Northern polyhedra: " + std::to_string(complex.size()) + "\n";
  for (std::size_t i = 0; i < complex.size(); ++i) {
    const Polyhedron& p = complex[i];
    std::vector<std::string> vs;
    for (const auto& v : p.vertices) vs.push_back(format_rational_vector(v));
    s += "Polyhedron " + std::to_string(i) + ":\n";
    s += "Vertices:\n" + join_vector_rows(vs) + "\n";
    s += "Rays:\n" + format_vectors(p.rays) + "\n";
    s += "Lineality:\n" + format_vectors(p.lineality) + "\n";
  }
  return s;
}

}  // namespace tropfan
