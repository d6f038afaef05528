#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "brt/abelian.hpp"
#include "brt/brown.hpp"

namespace brt {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> rendered(const FinitePresentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relators()) out.push_back(r.to_string());
  return out;
}

TEST(Assemble, DihedralFixture) {
  const FinitePresentation p = assemble(d4_fixture());
  EXPECT_EQ(p.generators(), (std::vector<std::string>{"sA", "sB", "sC"}));
  EXPECT_EQ(rendered(p), (std::vector<std::string>{"sA^2", "sB^2", "sC^2", "sA sC^-1",
                                                   "sC sB sC sB sC sB sC sB"}));
  EXPECT_EQ(abelianisation(p).order(), 4);
  EXPECT_EQ(abelianisation(p).to_string(), "Z_2 x Z_2");
  EXPECT_EQ(p.label(4), "square_BCDEFGHI");
}

TEST(Assemble, DoesNotRewriteModuloOtherRelators) {
  BrownInput in = d4_fixture();
  in.squares[1].closer = Word::generator("sB");
  const FinitePresentation p = assemble(in);
  EXPECT_EQ(p.relators().back().to_string(), "sC sB sC sB sC sB sC sB^-1");
}

TEST(Assemble, SingleVertexIsReturnedUnchanged) {
  BrownInput in;
  in.vertex_names = {"V"};
  in.vertices = {FinitePresentation({"g"}, {Word::parse("g^5")})};
  const FinitePresentation p = assemble(in);
  EXPECT_EQ(p.generators(), (std::vector<std::string>{"g"}));
  EXPECT_EQ(rendered(p), (std::vector<std::string>{"g^5"}));
}

TEST(Assemble, BraidedTwoThreeMatchesBuilder) {
  const Params p(2, 3);
  const FinitePresentation assembled = assemble(brT_brown_input(p));
  EXPECT_EQ(abelianisation(assembled), abelianisation(build_brT(p)));
  EXPECT_TRUE(verify_brown_brT(p).passed()) << verify_brown_brT(p).to_text();
}

TEST(Assemble, BraidedRelatorSetsAgreeAcrossParameters) {
  for (long n = 2; n <= 5; ++n)
    for (long m = 2; m <= 5; ++m) {
      const VerificationReport r = verify_brown_brT(Params(n, m));
      EXPECT_TRUE(r.passed()) << r.to_text();
    }
}

TEST(Assemble, DihedralReport) { EXPECT_TRUE(verify_d4().passed()); }

TEST(Validate, RejectsCycleAndUnknownVertex) {
  BrownInput in = d4_fixture();
  in.edges.push_back(BrownEdge{0, 2, {}, {}, {}});
  EXPECT_THROW(in.validate(), PresentationError);
  BrownInput bad = d4_fixture();
  bad.squares[0].steps[0].vertex = 9;
  EXPECT_THROW(bad.validate(), PresentationError);
}

TEST(Validate, RejectsMissingInjection) {
  BrownInput in = brT_brown_input(Params(2, 3));
  in.edges[1].into_origin.clear();
  EXPECT_THROW(in.validate(), PresentationError);
}

TEST(MergeIdentified, KeepsLeastName) {
  const FinitePresentation p({"a", "b", "c"}, {Word::parse("b a^-1"), Word::parse("b^2 c")});
  const FinitePresentation m = merge_identified(p);
  EXPECT_EQ(m.generators(), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(rendered(m), (std::vector<std::string>{"a^2 c"}));
}

TEST(RelatorSet, UpToInversion) {
  const FinitePresentation a({"x", "y"}, {Word::parse("x y"), Word::parse("x^2")});
  const FinitePresentation b({"x", "y"}, {Word::parse("y^-1 x^-1"), Word::parse("x^2"), Word::parse("x^-2")});
  EXPECT_EQ(relator_set_up_to_inversion(a), relator_set_up_to_inversion(b));
}

TEST(BrownJson, RoundTrip) {
  const BrownInput in = brT_brown_input(Params(2, 2));
  EXPECT_EQ(BrownInput::parse_json(in.to_json()).to_json(), in.to_json());
  EXPECT_THROW(BrownInput::parse_json("{\"vertices\": 3}"), ParseError);
}

TEST(Golden, DataFilesMatchGenerators) {
  const std::string dir = BRT_DATA_DIR "/brown/";
  EXPECT_EQ(slurp(dir + "d4.json"), d4_fixture().to_json() + "\n");
  EXPECT_EQ(slurp(dir + "brt_2_3.json"), brT_brown_input(Params(2, 3)).to_json() + "\n");
  EXPECT_EQ(assemble(BrownInput::parse_json(slurp(dir + "d4.json"))), assemble(d4_fixture()));
}

}  // namespace
}  // namespace brt
