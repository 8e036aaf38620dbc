#include "tropfan/polynomial.hpp"

#include "scanner.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace tropfan {

namespace {

std::int16_t checked16(int v) {
  if (v < 0) throw std::domain_error("negative exponent");
  if (v > std::numeric_limits<std::int16_t>::max()) throw std::overflow_error("exponent overflow");
  return static_cast<std::int16_t>(v);
}

void sort_desc(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_base(BaseOrder::DegRevLex, a.mono, b.mono) > 0;
  });
}

}  // namespace

// ---- Monomial ---------------------------------------------------------------

Monomial::Monomial(const std::vector<int>& exps) {
  e_.fill(0);
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) e_[i] = checked16(exps[i]);
}

void Monomial::set(std::size_t i, int value) { e_.at(i) = checked16(value); }

int Monomial::degree() const {
  int d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool Monomial::is_one() const {
  for (auto x : e_)
    if (x) return false;
  return true;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

std::uint64_t Monomial::divmask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] > 0) m |= std::uint64_t{1} << (2 * i);
    if (e_[i] > 1) m |= std::uint64_t{1} << (2 * i + 1);
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = checked16(int(e_[i]) + int(o.e_[i]));
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] < o.e_[i]) throw std::domain_error("monomial division: not divisible");
    r.e_[i] = static_cast<std::int16_t>(e_[i] - o.e_[i]);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
  return r;
}

Monomial Monomial::pow(int k) const {
  if (k < 0) throw std::domain_error("negative power");
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = checked16(int(e_[i]) * k);
  return r;
}

__int128 Monomial::weight(const std::vector<std::int64_t>& w) const {
  __int128 s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<__int128>(w[i]) * e_[i];
  return s;
}

Integer Monomial::weight(const IntVector& w) const {
  Integer s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (e_[i]) s += w[i] * static_cast<long>(e_[i]);
  return s;
}

IntVector Monomial::exponent_vector(std::size_t n) const {
  IntVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<long>(e_[i]);
  return v;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    h ^= static_cast<std::uint16_t>(m[i]);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// ---- Ring -------------------------------------------------------------------

RingPtr make_ring(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (names.size() >= kMaxVars) throw std::invalid_argument("too many variables");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
  }
  return std::make_shared<const Ring>(Ring{std::move(names)});
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

// ---- TermOrder --------------------------------------------------------------

int compare_base(BaseOrder order, const Monomial& a, const Monomial& b) {
  if (order == BaseOrder::DegRevLex) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = kMaxVars; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

TermOrder TermOrder::weighted(std::vector<IntVector> weights, BaseOrder tiebreak) {
  TermOrder o(tiebreak);
  const Integer limit = Integer(1) << 40;
  for (const auto& w : weights)
    for (const auto& x : w)
      if (abs(x) > limit) o.exact_ = true;
  if (!o.exact_)
    for (const auto& w : weights) o.weights_.push_back(to_int64(w));
  o.weights_big_ = std::move(weights);
  return o;
}

TermOrder TermOrder::refined_by(const IntVector& w) const {
  std::vector<IntVector> ws;
  ws.push_back(w);
  ws.insert(ws.end(), weights_big_.begin(), weights_big_.end());
  return weighted(std::move(ws), tiebreak_);
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (exact_) {
    for (const auto& w : weights_big_) {
      const int c = cmp(a.weight(w), b.weight(w));
      if (c != 0) return c < 0 ? 1 : -1;
    }
    return compare_base(tiebreak_, a, b);
  }
  for (const auto& w : weights_) {
    const __int128 wa = a.weight(w), wb = b.weight(w);
    if (wa != wb) return wa < wb ? 1 : -1;
  }
  return compare_base(tiebreak_, a, b);
}

std::string TermOrder::describe() const {
  std::string s = tiebreak_ == BaseOrder::Lex ? "lex" : "degrevlex";
  for (auto it = weights_big_.rbegin(); it != weights_big_.rend(); ++it) s = "weight" + to_string(*it) + "+" + s;
  return s;
}

// ---- Polynomial -------------------------------------------------------------

Polynomial make_polynomial(RingPtr ring, std::vector<Term> terms) {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (auto& t : terms) acc[t.mono] += t.coef;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  sort_desc(out);
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (std::size_t i = 0; i + 1 < terms_.size(); ++i)
    if (compare_base(BaseOrder::DegRevLex, terms_[i].mono, terms_[i + 1].mono) <= 0)
      throw std::invalid_argument("Polynomial terms must be strictly degrevlex-descending");
  for (const auto& t : terms_)
    if (t.coef == 0) throw std::invalid_argument("Polynomial terms must have nonzero coefficients");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  return monomial(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  if (c == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {Term{m, c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->n()) throw std::out_of_range("variable index");
  Monomial m;
  m.set(i, 1);
  return monomial(std::move(ring), m);
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

std::optional<Rational> Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return std::nullopt;
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

namespace {

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = compare_base(BaseOrder::DegRevLex, a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? Rational(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() && b.ring() && !same_ring(a.ring(), b.ring()))
    throw std::invalid_argument("polynomials from different rings");
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(*this, o);
  return Polynomial(ring_ ? ring_ : o.ring_, merge_add(terms_, o.terms_, false));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_ring(*this, o);
  return Polynomial(ring_ ? ring_ : o.ring_, merge_add(terms_, o.terms_, true));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coef = -x.coef;
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(*this, o);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.push_back({a.mono * b.mono, a.coef * b.coef});
  return make_polynomial(ring_ ? ring_ : o.ring_, std::move(acc));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coef *= c;
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({x.mono * m, x.coef * c});
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::domain_error("negative power");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::normalized_at(const Monomial& m) const {
  auto c = coefficient(m);
  if (!c) throw std::invalid_argument("normalized_at: monomial not in support");
  return *this * Rational(1 / *c);
}

Polynomial Polynomial::permuted(const std::vector<std::size_t>& images) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < images.size(); ++i) m.set(images[i], x.mono[i]);
    t.push_back({m, x.coef});
  }
  return make_polynomial(ring_, std::move(t));
}

Polynomial Polynomial::embedded(RingPtr target, const std::vector<std::size_t>& positions) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < positions.size(); ++i) m.set(positions[i], x.mono[i]);
    t.push_back({m, x.coef});
  }
  return make_polynomial(std::move(target), std::move(t));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

// ---- initial forms, homogenization -----------------------------------------

Polynomial initial_form(const Polynomial& f, const IntVector& w) {
  if (f.ring() && w.size() != f.ring()->n()) throw std::invalid_argument("initial_form: weight length mismatch");
  if (f.is_zero()) return f;
  std::vector<Integer> weights;
  weights.reserve(f.size());
  Integer best;
  for (std::size_t i = 0; i < f.size(); ++i) {
    weights.push_back(f.terms()[i].mono.weight(w));
    if (i == 0 || weights.back() < best) best = weights.back();
  }
  std::vector<Term> t;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (weights[i] == best) t.push_back(f.terms()[i]);
  return Polynomial(f.ring(), std::move(t));
}

Polynomial initial_form(const Polynomial& f, const std::vector<IntVector>& weights) {
  Polynomial g = f;
  for (const auto& w : weights) g = initial_form(g, w);
  return g;
}

bool is_w_homogeneous(const Polynomial& f, const IntVector& w) {
  if (f.size() < 2) return true;
  const Integer first = f.terms().front().mono.weight(w);
  for (const auto& t : f.terms())
    if (t.mono.weight(w) != first) return false;
  return true;
}

RingPtr homogenizing_ring(const RingPtr& ring) {
  std::set<std::string> used(ring->names.begin(), ring->names.end());
  std::string name = "x0";
  for (int k = 0; used.count(name); ++k) name = "x0_" + std::to_string(k);
  std::vector<std::string> names{name};
  names.insert(names.end(), ring->names.begin(), ring->names.end());
  return make_ring(std::move(names));
}

RingPtr dehomogenizing_ring(const RingPtr& ring) {
  return make_ring(std::vector<std::string>(ring->names.begin() + 1, ring->names.end()));
}

Polynomial homogenize(const Polynomial& f, const RingPtr& target) {
  RingPtr ring = target ? target : homogenizing_ring(f.ring());
  if (ring->n() != f.ring()->n() + 1) throw std::invalid_argument("homogenize: target ring size");
  const int deg = f.degree();
  std::vector<Term> t;
  t.reserve(f.size());
  for (const auto& x : f.terms()) {
    Monomial m;
    m.set(0, deg - x.mono.degree());
    for (std::size_t i = 0; i < f.ring()->n(); ++i) m.set(i + 1, x.mono[i]);
    t.push_back({m, x.coef});
  }
  return make_polynomial(ring, std::move(t));
}

Polynomial dehomogenize(const Polynomial& f, const RingPtr& target) {
  if (target->n() + 1 != f.ring()->n()) throw std::invalid_argument("dehomogenize: target ring size");
  std::vector<Term> t;
  t.reserve(f.size());
  for (const auto& x : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < target->n(); ++i) m.set(i, x.mono[i + 1]);
    t.push_back({m, x.coef});
  }
  return make_polynomial(target, std::move(t));
}

// ---- parsing ----------------------------------------------------------------

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace detail {
namespace {

Polynomial parse_factor(Scanner& s, const RingPtr& ring);

Polynomial parse_primary(Scanner& s, const RingPtr& ring) {
  const char c = s.peek();
  if (c == '(') {
    s.get();
    Polynomial p = parse_polynomial_expr(s, ring);
    s.expect(')');
    return p;
  }
  if (c == '-') {
    s.get();
    return -parse_factor(s, ring);
  }
  if (c == '+') {
    s.get();
    return parse_factor(s, ring);
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    Rational q(Integer(s.digits()));
    if (s.peek() == '/') {
      s.get();
      Integer den(s.digits());
      if (den == 0) s.fail("zero denominator");
      q /= den;
    }
    return Polynomial::constant(ring, q);
  }
  if (Scanner::is_ident_start(c)) {
    const auto where = s.position();
    const std::string name = s.identifier();
    for (std::size_t i = 0; i < ring->n(); ++i)
      if (ring->names[i] == name) return Polynomial::variable(ring, i);
    Scanner::fail_at("unknown variable '" + name + "'", where);
  }
  s.fail(c ? std::string("unexpected character '") + c + "'" : "unexpected end of input");
}

Polynomial parse_factor(Scanner& s, const RingPtr& ring) {
  Polynomial base = parse_primary(s, ring);
  if (s.accept('^')) {
    const std::string e = s.digits();
    if (e.size() > 4) s.fail("exponent too large");
    base = base.pow(std::stoi(e));
  }
  return base;
}

Polynomial parse_term(Scanner& s, const RingPtr& ring) {
  Polynomial p = parse_factor(s, ring);
  for (;;) {
    if (s.accept('*')) {
      p = p * parse_factor(s, ring);
      continue;
    }
    const char c = s.peek();
    // Juxtaposition such as "2d*e" multiplies implicitly.
    if (Scanner::is_ident_start(c) || c == '(') {
      p = p * parse_factor(s, ring);
      continue;
    }
    return p;
  }
}

}  // namespace

Polynomial parse_polynomial_expr(Scanner& s, const RingPtr& ring, Polynomial* first_term) {
  bool negate = false;
  if (s.accept('-')) negate = true;
  else s.accept('+');
  Polynomial p = parse_term(s, ring);
  if (negate) p = -p;
  if (first_term) *first_term = p;
  for (;;) {
    if (s.accept('+')) {
      p = p + parse_term(s, ring);
    } else if (s.accept('-')) {
      p = p - parse_term(s, ring);
    } else {
      return p;
    }
  }
}

}  // namespace detail

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  detail::Scanner s(text);
  Polynomial p = detail::parse_polynomial_expr(s, ring);
  if (!s.at_end()) s.fail("trailing characters after polynomial");
  return p;
}

// ---- printing ---------------------------------------------------------------

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < ring.n(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += ring.names[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

void append_term(std::string& s, const Term& t, const Ring& ring, bool first) {
  const bool neg = t.coef < 0;
  const Rational a = abs(t.coef);
  if (neg) s += '-';
  else if (!first) s += '+';
  if (t.mono.is_one()) {
    s += a.get_str();
    return;
  }
  if (a != 1) s += a.get_str() + '*';
  s += to_string(t.mono, ring);
}

}  // namespace

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    append_term(s, t, *f.ring(), first);
    first = false;
  }
  return s;
}

std::string to_string_marked(const Polynomial& f, const Monomial& marked) {
  if (f.is_zero()) return "0";
  std::string s;
  bool found = false;
  for (const auto& t : f.terms())
    if (t.mono == marked) {
      append_term(s, t, *f.ring(), true);
      found = true;
    }
  if (!found) throw std::invalid_argument("to_string_marked: marked term not in support");
  for (const auto& t : f.terms())
    if (!(t.mono == marked)) append_term(s, t, *f.ring(), false);
  return s;
}

}  // namespace tropfan
