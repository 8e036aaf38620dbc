#include "tropfan/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace tropfan {

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

Permutation Permutation::compose(const Permutation& o) const {
  if (o.size() != size()) throw std::invalid_argument("permutation length mismatch");
  Permutation p;
  p.images.resize(size());
  for (std::size_t i = 0; i < size(); ++i) p.images[i] = images[o.images[i]];
  return p;
}

IntVector Permutation::apply(const IntVector& w) const {
  if (w.size() != size()) throw std::invalid_argument("permutation length mismatch");
  IntVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[images[i]] = w[i];
  return out;
}

Polynomial Permutation::apply(const Polynomial& f) const {
  if (f.ring() && f.ring()->n() != size()) throw std::invalid_argument("permutation length mismatch");
  return f.permuted(images);
}

Cone Permutation::apply(const Cone& c) const { return c.permuted(images); }

Permutation make_permutation(std::vector<std::size_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto i : images) {
    if (i >= images.size() || seen[i]) throw std::invalid_argument("not a permutation: " + to_string(Permutation{images}));
    seen[i] = true;
  }
  return Permutation{std::move(images)};
}

PermGroup close_group(std::size_t n, const std::vector<Permutation>& generators) {
  for (const auto& g : generators)
    if (g.size() != n) throw std::invalid_argument("permutation length does not match the ring");
  std::set<Permutation> elements{Permutation::identity(n)};
  std::deque<Permutation> queue{Permutation::identity(n)};
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation q = g.compose(p);
      if (elements.insert(q).second) queue.push_back(std::move(q));
    }
  }
  std::vector<Permutation> sorted(elements.begin(), elements.end());
  return PermGroup(n, generators, std::move(sorted));
}

bool check_ideal_invariance(const Ideal& ideal, const PermGroup& group) {
  if (group.degree() != ideal.ring->n()) return false;
  const MarkedReducedGB g = buchberger(ideal, TermOrder::degrevlex());
  for (const auto& sigma : group.generators())
    for (const auto& f : ideal.generators)
      if (!normal_form(sigma.apply(f), g).is_zero()) return false;
  return true;
}

std::vector<Cone> orbit(const Cone& c, const PermGroup& group) {
  std::set<Cone> images;
  for (const auto& sigma : group.elements()) images.insert(sigma.apply(c));
  return {images.begin(), images.end()};
}

Cone canonical_orbit_representative(const Cone& c, const PermGroup& group) {
  Cone best = c;
  for (const auto& sigma : group.elements()) {
    Cone img = sigma.apply(c);
    if (img < best) best = std::move(img);
  }
  return best;
}

std::string to_string(const Permutation& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.images[i]);
  }
  return s + ")";
}

}  // namespace tropfan
