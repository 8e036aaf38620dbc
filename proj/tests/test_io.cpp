#include "tropfan/io.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace tropfan;
using namespace tropfan::testing;

TEST(Io, ParseDocument) {
  const InputDocument doc = parse_document("Q[a,b,c]\n{a*b-c^2, a+b} # comment\n{(2,1,0)}\n");
  EXPECT_EQ(doc.ring->names, (std::vector<std::string>{"a", "b", "c"}));
  ASSERT_EQ(doc.polynomials.size(), 2u);
  ASSERT_EQ(doc.symmetry.size(), 1u);
  EXPECT_EQ(doc.symmetry[0].images, (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(parse_document(format_document(doc)).polynomials, doc.polynomials);
}

TEST(Io, ParseErrors) {
  EXPECT_THROW(parse_document("{a}"), ParseError);
  EXPECT_THROW(parse_document("Q[a,a]\n{a}"), ParseError);
  EXPECT_THROW(parse_document("Q[a,b]\n{}"), ParseError);
  EXPECT_THROW(parse_document("Q[a,b]\n{a+c}"), ParseError);
  EXPECT_THROW(parse_document("Q[a,b]\n{a}\n{(0,0)}"), ParseError);
  EXPECT_THROW(parse_document("Q[a,b]\n{a}\n{(0,1,2)}"), ParseError);
  EXPECT_THROW(parse_document("Q[a,b]\n{a} junk"), ParseError);
  try {
    parse_document("Q[a,b]\n{a,\n b*}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Io, PairDocumentRoundTrip) {
  const Ideal I = load_ideal("hankel4.in");
  const GroebnerConePair pair = starting_cone(I, 1);
  const std::string text = format_pair(pair);
  const PairDocument doc = parse_pair_document(text);
  EXPECT_EQ(doc.pair, pair);
  EXPECT_EQ(groebner_cone(doc.pair), groebner_cone(pair));
  EXPECT_EQ(format_pair(doc.pair), text);
}

TEST(Io, MarkingsMustComeFromAnOrder) {
  // x marked in x - y and y marked in y - x cannot both lead
  EXPECT_THROW(parse_pair_document("Q[x,y]\n{x,y}\n{x-y,y-x}"), ParseError);
  EXPECT_THROW(parse_pair_document("Q[x,y]\n{x}\n{x-y,y}"), ParseError);
}

TEST(Io, MarkedTermPrintedFirst) {
  const auto r = make_ring({"x", "y"});
  EXPECT_EQ(to_string_marked(poly(r, "x^2+3*y"), Monomial({0, 1})), "3*y+x^2");
}

TEST(Io, ReportLayout) {
  const Ideal I = load_ideal("commuting2.in");
  const TraversalResult t = traverse(starting_cone(I, 1), {});
  const TraversalReport r = make_report(t.cones, t.lineality, nullptr);
  EXPECT_EQ(r.ambient_dim, 8u);
  EXPECT_EQ(r.lineality.size(), 4u);
  EXPECT_EQ(r.dim, 6u);
  EXPECT_TRUE(r.simplicial);
  EXPECT_EQ(r.f_vector, (std::vector<std::size_t>{4, 6}));
  const std::string text = format_report(r);
  EXPECT_NE(text.find("F-vector: (4,6)\n"), std::string::npos);
  EXPECT_NE(text.find("Dimension of homogeneity space: 4\n"), std::string::npos);
  EXPECT_NE(text.find("Rays incident to each dimension 2 cone:"), std::string::npos);
}

TEST(Io, NorthernOutput) {
  const Cone c = canonicalize(3, {from_ints({3, 0, -1})}, {from_ints({1, 0, 0}), from_ints({-2, 1, 0})});
  const std::string text = format_polyhedra(restrict_to_unit_first_coordinate(Fan{3, {c}}));
  EXPECT_NE(text.find("(2,3)"), std::string::npos);
}
