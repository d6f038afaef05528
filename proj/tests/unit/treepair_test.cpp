#include <random>

#include <gtest/gtest.h>

#include "brt/builders.hpp"
#include "brt/treepair.hpp"
#include "properties.hpp"

namespace brt {
namespace {

TreePairElement caret_swap() {
  // T_{2,2}: caret on the first root in the domain, on the second in the range.
  return TreePairElement::make(NaryForest::from_preorder(2, "x..|."), NaryForest::from_preorder(2, ".|x.."), 0);
}

TEST(Forest, PreorderRoundTrip) {
  const NaryForest f = NaryForest::from_preorder(3, "x.x....|.");
  EXPECT_EQ(f.to_preorder(), "x.x....|.");
  EXPECT_EQ(f.leaf_count(), 6u);
  EXPECT_EQ(f.caret_count(), 2u);
  EXPECT_EQ(f.leaf_start(2), Rational(4, 9));
  EXPECT_EQ(f.leaf_width(5), Rational(1));
  EXPECT_THROW(NaryForest::from_preorder(2, "x.|."), ParseError);
}

TEST(Compose, InverseGivesIdentity) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto g = props::random_element(rng, 3, 2);
    EXPECT_TRUE(compose(g, inverse(g)).is_identity()) << g.to_string();
    EXPECT_EQ(inverse(inverse(g)), g);
  }
  EXPECT_EQ(inverse(TreePairElement::identity(2, 3)), TreePairElement::identity(2, 3));
}

TEST(Compose, ShiftsAddOnTrivialForests) {
  const NaryForest t = NaryForest::trivial(2, 5);
  const auto g = TreePairElement::make(t, t, 3), h = TreePairElement::make(t, t, 4);
  EXPECT_EQ(compose(g, h).shift(), 2);
  EXPECT_THROW(compose(g, TreePairElement::identity(3, 5)), std::invalid_argument);
}

TEST(Compose, ReducesCommonCarets) {
  const NaryForest t = NaryForest::trivial(2, 1);
  const auto g = TreePairElement::make_unreduced(t.expand(0), t.expand(0), 0);
  EXPECT_FALSE(g.is_reduced());
  EXPECT_TRUE(g.reduced().is_identity());
}

TEST(Rotation, ShapesAndShift) {
  const auto r = rotation_element(Params(2, 3), 0);
  EXPECT_EQ(r.domain(), NaryForest::trivial(2, 3));
  EXPECT_EQ(r.shift(), 1);
  EXPECT_EQ(rotation_forest(Params(3, 2), 2).leaf_count(), 6u);
  for (int k = 0; k <= 4; ++k) {
    const auto g = rotation_element(Params(3, 4), k);
    EXPECT_EQ(inverse(g).shift(), 4 + 2 * k - 1);
  }
}

TEST(Rotation, Orders) {
  EXPECT_TRUE(power(rotation_element(Params(2, 3), 0), 3).is_identity());
  EXPECT_EQ(element_order(TreePairElement::identity(2, 2), 10), 1);
  EXPECT_EQ(element_order(rotation_element(Params(2, 3), 0), 10), 3);
  EXPECT_EQ(element_order(rotation_element(Params(2, 3), 1), 10), 4);
  EXPECT_EQ(element_order(rotation_element(Params(2, 2), 2), 10), 4);
  EXPECT_FALSE(element_order(caret_swap(), 50).has_value());
}

TEST(Theta, Values) {
  EXPECT_EQ(theta(TreePairElement::identity(3, 4)), 0);
  for (long n = 2; n <= 6; ++n)
    for (long m = 2; m <= 6; ++m) {
      const long d = theta_modulus(static_cast<int>(n), static_cast<int>(m));
      EXPECT_EQ(theta(rotation_element(Params(n, m), 0)), 1 % d);
    }
}

TEST(CircleMap, ApplyAndSlopes) {
  const auto g = caret_swap();
  EXPECT_EQ(apply(g, Rational(1, 4)), Rational(1, 2));
  EXPECT_EQ(apply(g, Rational(3, 4)), Rational(5, 4));
  EXPECT_EQ(apply(g, Rational(3, 2)), Rational(7, 4));
  EXPECT_EQ(slopes_at(g, Rational(0)), std::make_pair(-1L, 1L));
  EXPECT_EQ(slopes_at(TreePairElement::identity(2, 2), Rational(3, 8)), std::make_pair(0L, 0L));
  EXPECT_THROW(slopes_at(rotation_element(Params(2, 3), 0), Rational(0)), std::invalid_argument);
  EXPECT_EQ(isolated_fixed_points(g), (std::vector<Rational>{Rational(0)}));
}

TEST(Json, RoundTrip) {
  const auto g = compose(caret_swap(), rotation_element(Params(2, 2), 3));
  EXPECT_EQ(TreePairElement::parse_json(g.to_json()), g);
  EXPECT_THROW(TreePairElement::parse_json("{\"arity\": 2}"), ParseError);
}

TEST(Presentation, RelatorsHoldInModel) {
  for (auto [n, m] : {std::pair{2L, 3L}, {2L, 2L}, {4L, 3L}}) {
    const VerificationReport r = verify_T_presentation(Params(n, m));
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_EQ(r.checks.size(), build_T(Params(n, m)).relators().size());
  }
}

TEST(Presentation, ReversedWordsFail) {
  // Evaluating words with the rightmost letter last breaks the square relators.
  const Params p(2, 3);
  long failures = 0;
  const FinitePresentation t = build_T(p);
  for (const auto& w : t.relators()) {
    std::vector<Syllable> reversed(w.syllables().rbegin(), w.syllables().rend());
    if (!evaluate_rotation_word(p, Word(reversed)).is_identity()) ++failures;
  }
  EXPECT_GT(failures, 0);
}

TEST(Presentation, PerturbedRelatorsFail) {
  const Params p(3, 2);
  const FinitePresentation t = build_T(p);
  for (const auto& w : t.relators())
    EXPECT_FALSE(evaluate_rotation_word(p, w * Word::generator("r0")).is_identity()) << w.to_string();
}

}  // namespace
}  // namespace brt
