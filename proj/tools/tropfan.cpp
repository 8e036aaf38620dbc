// tropfan: tropical varieties, prevarieties and curve bases from the shell.

#include "tropfan/io.hpp"
#include "tropfan/tropical.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace tropfan;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitRetry = 4;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void warn_primality() {
  std::cerr << "warning: the input ideal is assumed to be prime; otherwise only part of the tropical variety may be "
               "found\n";
}

// The ideal generated by the homogenized elements of a degrevlex basis.
Ideal homogenized_ideal(const Ideal& ideal) {
  const MarkedReducedGB g = buchberger(ideal, TermOrder::degrevlex());
  const RingPtr ring = homogenizing_ring(ideal.ring);
  std::vector<Polynomial> gens;
  for (const auto& p : g.polynomials()) gens.push_back(homogenize(p, ring));
  return Ideal(ring, gens);
}

int cmd_startingcone(const std::string& path, std::uint64_t seed) {
  const InputDocument doc = parse_document(read_input(path));
  Ideal ideal(doc.ring, doc.polynomials);
  if (!ideal.is_homogeneous()) {
    std::cerr << "warning: input is not homogeneous; computing with its homogenization\n";
    ideal = homogenized_ideal(ideal);
  }
  warn_primality();
  std::cout << format_pair(starting_cone(ideal, seed));
  return 0;
}

int cmd_traverse(const std::string& path, bool use_symmetry, std::uint64_t seed, int jobs, bool northern) {
  const PairDocument doc = parse_pair_document(read_input(path));
  const GroebnerConePair& pair = doc.pair;
  const Cone start = groebner_cone(pair);
  if (!is_valid_pair(pair, relative_interior_point(start)))
    throw PreconditionError("the two bases do not form a Gröbner cone pair");
  std::optional<PermGroup> group;
  if (use_symmetry) {
    group = close_group(pair.ring()->n(), doc.symmetry);
    if (!check_ideal_invariance(Ideal(pair.ring(), pair.full_gb.polynomials()), *group))
      throw PreconditionError("a permutation does not keep the ideal invariant");
  }
  warn_primality();
  TraversalOptions options;
  options.symmetry = group ? &*group : nullptr;
  options.seed = seed;
  options.jobs = jobs;
  const TraversalResult result = traverse(pair, options);
  std::cout << format_report(make_report(result.cones, result.lineality, options.symmetry));
  if (northern) {
    Fan fan{pair.ring()->n(), result.cones};
    std::cout << format_polyhedra(restrict_to_unit_first_coordinate(fan));
  }
  return 0;
}

int cmd_prevariety(const std::string& path) {
  const InputDocument doc = parse_document(read_input(path));
  std::cout << format_fan(tropical_prevariety(doc.polynomials));
  return 0;
}

int cmd_curvebasis(const std::string& path, std::uint64_t seed) {
  const InputDocument doc = parse_document(read_input(path));
  const Ideal ideal(doc.ring, doc.polynomials);
  if (ideal.is_homogeneous()) {
    std::cout << format_polynomials(tropical_basis_of_curve(ideal, seed)) << "\n";
    return 0;
  }
  std::cerr << "warning: input is not homogeneous; computing with its homogenization\n";
  std::vector<Polynomial> basis;
  for (const auto& f : tropical_basis_of_curve(homogenized_ideal(ideal), seed))
    basis.push_back(dehomogenize(f, doc.ring));
  std::cout << format_polynomials(basis) << "\n";
  return 0;
}

int cmd_monomial(const std::string& path) {
  const InputDocument doc = parse_document(read_input(path));
  const auto m = monomial_in_ideal(Ideal(doc.ring, doc.polynomials));
  std::cout << (m ? to_string(*m, *doc.ring) : "no") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical varieties and Gröbner cones over Q"};
  app.require_subcommand(1);
  std::string input;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool symmetry = false, northern = false;

  auto* start = app.add_subcommand("startingcone", "Gröbner cone pair of a maximal cone of T(I)");
  auto* trav = app.add_subcommand("traverse", "Traverse T(I) from a starting pair");
  auto* prev = app.add_subcommand("prevariety", "Common refinement of the tropical hypersurfaces");
  auto* curve = app.add_subcommand("curvebasis", "Tropical basis of a curve");
  auto* mono = app.add_subcommand("monomial", "A monomial in the ideal, or no");
  for (auto* sub : {start, trav, prev, curve, mono}) sub->add_option("input", input, "Input file (default stdin)");
  for (auto* sub : {start, trav, curve}) sub->add_option("--seed", seed, "Random seed");
  trav->add_flag("--symmetry", symmetry, "Use the permutations listed after the pair");
  trav->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  trav->add_flag("--restrict-northern", northern, "Also print the slice w0 = 1 of the fan");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*start) return cmd_startingcone(input, seed);
    if (*trav) return cmd_traverse(input, symmetry, seed, jobs, northern);
    if (*prev) return cmd_prevariety(input);
    if (*curve) return cmd_curvebasis(input, seed);
    if (*mono) return cmd_monomial(input);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const RetryExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRetry;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
