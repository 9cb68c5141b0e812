#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace planemap;
using pmtest::fpp;
using pmtest::make_mapping;
using pmtest::qp;

TEST(Formulas, PaperValues) {
  auto b44 = formulas(4, 4);
  EXPECT_EQ(b44.c_max, 39);
  EXPECT_EQ(b44.n_max, 204);
  EXPECT_EQ(b44.R, 6);
  EXPECT_EQ(b44.D, 24);
  auto b54 = formulas(5, 4);
  EXPECT_EQ(b54.c_max, 54);
  EXPECT_EQ(b54.n_max, 387);
  auto b22 = formulas(2, 2);
  EXPECT_EQ(b22.c_max, 3);
  EXPECT_EQ(b22.n_max, 0);
  EXPECT_TRUE(b22.certifiable);
  EXPECT_FALSE(formulas(2, 1).certifiable);
  EXPECT_EQ(formulas(1, 1).c_max, 0);
  EXPECT_EQ(formulas(1, 1).n_max, 0);
  EXPECT_THROW(formulas(1, 2), std::invalid_argument);
  EXPECT_THROW(formulas(2, 0), std::invalid_argument);
}

TEST(Formulas, ClosedFormFamilies) {
  for (std::int64_t d1 = 1; d1 <= 12; ++d1) {
    auto b = formulas(d1, 1);
    EXPECT_EQ(b.c_max, (d1 - 1) * (d1 - 2));
    EXPECT_EQ(b.n_max, (d1 - 1) * (d1 - 2) * (d1 - 3) / 2);
  }
  for (std::int64_t d1 = 2; d1 <= 12; ++d1) {
    auto b = formulas(d1, 2);
    EXPECT_EQ(b.c_max, d1 * d1 - 1);
    EXPECT_EQ(b.n_max,
              (2 * d1 * d1 * d1 - 4 * d1 * d1 + d1 + 2 -
               std::gcd(d1, std::int64_t{2}) * d1) /
                  2);
  }
}

TEST(JacobianTriple, HandExpansions) {
  auto r = pmtest::qring();
  auto id = make_mapping<Rational>(r, "x", "y", 1, 1);
  auto T1 = build_jacobian_triple(id);
  EXPECT_EQ(T1.J, QPoly::constant_int(r, 1));
  EXPECT_TRUE(T1.J11.is_zero());
  EXPECT_TRUE(T1.J12.is_zero());

  auto fold = make_mapping<Rational>(r, "x^2", "y", 2, 1);
  auto T2 = build_jacobian_triple(fold);
  EXPECT_EQ(T2.J, qp(r, "2*x"));
  EXPECT_TRUE(T2.J11.is_zero());
  EXPECT_EQ(T2.J12, QPoly::constant_int(r, 2));

  // Cusp normal form (x, y^3 + x*y).
  auto cusp = make_mapping<Rational>(r, "x", "y^3 + x*y", 3, 3);
  auto T3 = build_jacobian_triple(cusp);
  EXPECT_EQ(T3.J, qp(r, "3*y^2 + x"));
  EXPECT_EQ(T3.J11, qp(r, "-6*y"));
  EXPECT_EQ(T3.J12, qp(r, "x - 3*y^2"));
}

TEST(JacobianTriple, DegreeBounds) {
  auto r = pmtest::fpring();
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    std::int64_t d1 = 2 + i % 3, d2 = 1 + i % 2;
    if (d2 > d1) std::swap(d1, d2);
    MappingPair<Fp> F(random_polynomial<Fp>(r, d1, rng),
                      random_polynomial<Fp>(r, d2, rng), d1, d2);
    auto T = build_jacobian_triple(F);
    EXPECT_LE(T.J.total_degree(), d1 + d2 - 2);
    EXPECT_LE(T.J11.total_degree(), 2 * d1 + d2 - 3);
    EXPECT_LE(T.J12.total_degree(), d1 + 2 * d2 - 3);
  }
}

TEST(MappingPair, Validation) {
  auto r = pmtest::qring();
  EXPECT_THROW(make_mapping<Rational>(r, "x^3", "y", 2, 1),
               std::invalid_argument);
  EXPECT_THROW(make_mapping<Rational>(r, "x", "y^2", 2, 1),
               std::invalid_argument);
  EXPECT_THROW(make_mapping<Rational>(r, "x", "y", 1, 2),
               std::invalid_argument);
  EXPECT_THROW(make_mapping<Rational>(r, "x", "y", 1, 0),
               std::invalid_argument);
  EXPECT_NO_THROW(make_mapping<Rational>(r, "x", "y", 3, 2));
}

TEST(CountCusps, CuspNormalFormSwapped) {
  // (x, y^3 + x*y) as a member of Omega_2 with coordinates swapped so that
  // d1 >= d2: F = (y^3 + x*y, x), (d1, d2) = (3, 1).
  auto r = pmtest::qring();
  auto F = make_mapping<Rational>(r, "y^3 + x*y", "x", 3, 1);
  auto cd = count_cusps(F, LinearChange<Rational>::identity(r->field()));
  EXPECT_EQ(cd.distinct, 1);
  EXPECT_EQ(cd.total_multiplicity, QuotientDimension::finite(1));
}

TEST(CountCusps, FoldOnlyMapHasUnitIdeal) {
  auto r = pmtest::qring();
  auto F = make_mapping<Rational>(r, "x^2", "y", 2, 1);
  auto cd = count_cusps(F, LinearChange<Rational>::identity(r->field()));
  EXPECT_EQ(cd.distinct, 0);
  EXPECT_EQ(cd.total_multiplicity, QuotientDimension::finite(0));
}

TEST(CountCusps, Example1DegreeFour) {
  auto r = pmtest::fpring();
  auto F = make_mapping<Fp>(r, pmtest::example1_f(4), "y", 4, 1);
  auto cd = count_cusps(F, LinearChange<Fp>::identity(r->field()));
  EXPECT_EQ(cd.distinct, 6);
  EXPECT_EQ(cd.total_multiplicity, QuotientDimension::finite(6));
}

TEST(CountCusps, DegenerateJacobianIsHardError) {
  auto r = pmtest::qring();
  auto F = make_mapping<Rational>(r, "x^2", "x^2", 2, 2);
  EXPECT_THROW(count_cusps(F, LinearChange<Rational>::identity(r->field())),
               DegenerateMappingError);
  EXPECT_THROW(count_nodes(F, NodeRandomizers<Rational>::defaults(r->field())),
               DegenerateMappingError);
  EXPECT_THROW(infinity_checks(F), DegenerateMappingError);
}

TEST(CountCusps, NonReducedJacobianVerticalCurve) {
  // F = (x^2*y, x): J = -x^2 is a square, so the cusp ideal contains the
  // line x = 0; the x-eliminant is nonzero but the ideal is not
  // zero-dimensional.
  auto r = pmtest::qring();
  auto F = make_mapping<Rational>(r, "x^2*y", "x", 3, 1);
  auto cd = count_cusps(F, LinearChange<Rational>::identity(r->field()));
  EXPECT_EQ(cd.total_multiplicity, QuotientDimension::infinite());
  EXPECT_EQ(cd.distinct, 1);  // the line contributes x = 0 only
}

TEST(CountCusps, CuspLocusCurveDominatingX) {
  // F = (x, y^3): J = 3y^2, cusp ideal (y) is the x-axis, which projects
  // onto the whole x-line.
  auto r = pmtest::qring();
  auto F = make_mapping<Rational>(r, "x", "y^3", 3, 3);
  EXPECT_THROW(count_cusps(F, LinearChange<Rational>::identity(r->field())),
               CurveLocusError);
}

TEST(CountNodes, FoldOnlyMapHasNoNodes) {
  auto r = pmtest::qring();
  auto F = make_mapping<Rational>(r, "x^2", "y", 2, 1);
  auto nd = count_nodes(F, NodeRandomizers<Rational>::defaults(r->field()));
  EXPECT_EQ(nd.distinct, 0);
  EXPECT_EQ(nd.ordered_pair_multiplicity, QuotientDimension::finite(0));
}

TEST(CountNodes, Example1Family) {
  auto r = pmtest::fpring();
  auto F4 = make_mapping<Fp>(r, pmtest::example1_f(4), "y", 4, 1);
  auto nd4 = count_nodes(F4, NodeRandomizers<Fp>::defaults(r->field()));
  EXPECT_EQ(nd4.distinct, 3);
  EXPECT_EQ(nd4.ordered_pair_multiplicity, QuotientDimension::finite(6));

  auto F3 = make_mapping<Fp>(r, pmtest::example1_f(3), "y", 3, 1);
  auto nd3 = count_nodes(F3, NodeRandomizers<Fp>::defaults(r->field()));
  EXPECT_EQ(nd3.distinct, 0);
}

TEST(CountNodes, RandomizerValidation) {
  auto r = pmtest::qring();
  auto F = make_mapping<Rational>(r, "x^2 + y", "x + y^2", 2, 2);
  NodeRandomizers<Rational> bad1{Rational(0), Rational(0), Rational(1),
                                 Rational(0), 0};
  NodeRandomizers<Rational> bad2{Rational(1), Rational(0), Rational(0),
                                 Rational(0), 0};
  EXPECT_THROW(count_nodes(F, bad1), std::invalid_argument);
  EXPECT_THROW(count_nodes(F, bad2), std::invalid_argument);
}

TEST(CountNodes, SelfIntersectingCriticalCurve) {
  // F = (x^2, y^2): C(F) = {xy = 0} self-intersects, and the pairs
  // ((x,0), (-x,0)) form a whole curve of coincident critical images. Every
  // randomizer choice must report the curve rather than a count.
  auto r = pmtest::qring();
  auto F = make_mapping<Rational>(r, "x^2", "y^2", 2, 2);
  EXPECT_THROW(
      count_nodes(F, NodeRandomizers<Rational>::defaults(r->field())),
      CurveLocusError);
  NodeRandomizers<Rational> diag{Rational(1), Rational(1), Rational(1),
                                 Rational(1), 0};
  EXPECT_THROW(count_nodes(F, diag), CurveLocusError);
}

TEST(InfinityChecks, CoprimeAndSharedLeadingForms) {
  auto r = pmtest::qring();
  auto pure = make_mapping<Rational>(r, "x^3", "y^2", 3, 2);
  auto rep1 = infinity_checks(pure);
  EXPECT_FALSE(rep1.common_point_f1_f2);

  auto shared = make_mapping<Rational>(r, "x^2", "x*y", 2, 2);
  auto rep2 = infinity_checks(shared);
  EXPECT_TRUE(rep2.common_point_f1_f2);

  auto ex1 = make_mapping<Rational>(r, pmtest::example1_f(4), "y", 4, 1);
  auto rep3 = infinity_checks(ex1);
  EXPECT_FALSE(rep3.common_point_f1_f2);
  // gcd(4, 1) = 1 = d2: the f1/J check is not engaged.
  EXPECT_FALSE(rep3.common_point_f1_J.has_value());
}

TEST(InfinityChecks, QuadMapPassesEverything) {
  auto r = pmtest::qring();
  auto F = make_mapping<Rational>(r, "x^2 + y", "x + y^2", 2, 2);
  auto rep = infinity_checks(F);
  EXPECT_FALSE(rep.common_point_f1_f2);
  EXPECT_TRUE(rep.jacobian_degree_max);
  EXPECT_TRUE(rep.critical_curve_smooth);
  EXPECT_FALSE(rep.common_point_f1_J.has_value());  // gcd(2,2) = 2 = d2
  EXPECT_TRUE(rep.all_pass());
}

TEST(InfinityChecks, EngagedF1JCheck) {
  auto r = pmtest::fpring();
  // (3, 2): gcd = 1 != 2, so the f1/J check is engaged; the certified
  // fixture passes it.
  auto F = make_mapping<Fp>(r, pmtest::example1_f(3), pmtest::example2_g(), 3,
                            2);
  auto rep = infinity_checks(F);
  ASSERT_TRUE(rep.common_point_f1_J.has_value());
  EXPECT_FALSE(*rep.common_point_f1_J);
  EXPECT_TRUE(rep.all_pass());
}

TEST(InfinityChecks, DegreeDropDetected) {
  auto r = pmtest::qring();
  // f = x^2 declared with d1 = 3: the degree-3 leading form vanishes, which
  // counts as a common point at infinity.
  auto F = make_mapping<Rational>(r, "x^2", "y", 3, 1);
  auto rep = infinity_checks(F);
  EXPECT_TRUE(rep.common_point_f1_f2);
}

TEST(TopologicalDegree, BezoutMaximalFibers) {
  auto r = pmtest::qring();
  Rng rng(11);
  auto powers = make_mapping<Rational>(r, "x^2", "y^2", 2, 2);
  EXPECT_TRUE(check_topological_degree(powers, rng));
  auto quad = make_mapping<Rational>(r, "x^2 + y", "x + y^2", 2, 2);
  EXPECT_TRUE(check_topological_degree(quad, rng));
  auto degenerate = make_mapping<Rational>(r, "x", "x", 1, 1);
  EXPECT_FALSE(check_topological_degree(degenerate, rng));
}

TEST(CoordinateChange, TotalMultiplicityInvariant) {
  auto r = pmtest::fpring();
  auto F = make_mapping<Fp>(r, pmtest::example1_f(4), "y", 4, 1);
  auto base = count_cusps(F, LinearChange<Fp>::identity(r->field()));
  ASSERT_TRUE(base.total_multiplicity.is_finite());
  std::int64_t max_distinct = base.distinct;
  for (std::uint64_t s = 1; s <= 5; ++s) {
    auto L = LinearChange<Fp>::random(r->field(), derive_seed(321, s));
    auto cd = count_cusps(F, L);
    EXPECT_EQ(cd.total_multiplicity, base.total_multiplicity);
    max_distinct = std::max(max_distinct, cd.distinct);
    EXPECT_LE(cd.distinct,
              static_cast<std::int64_t>(base.total_multiplicity.value()));
  }
  // All cusps of this fixture are simple, so a generic change separates them.
  EXPECT_EQ(max_distinct,
            static_cast<std::int64_t>(base.total_multiplicity.value()));
}

TEST(NodeRandomizers, OrderedMultiplicityStableAcrossGenericChoices) {
  auto r = pmtest::fpring();
  auto F = make_mapping<Fp>(r, pmtest::example1_f(4), "y", 4, 1);
  auto base = count_nodes(F, NodeRandomizers<Fp>::defaults(r->field()));
  ASSERT_TRUE(base.ordered_pair_multiplicity.is_finite());
  for (std::uint64_t s = 1; s <= 5; ++s) {
    auto rnd = NodeRandomizers<Fp>::random(r->field(), derive_seed(99, s));
    auto nd = count_nodes(F, rnd);
    // Generic randomizers exclude only the diagonal; the default x - p can
    // only exclude more, never less.
    ASSERT_TRUE(nd.ordered_pair_multiplicity.is_finite());
    EXPECT_GE(nd.ordered_pair_multiplicity.value(),
              base.ordered_pair_multiplicity.value());
    EXPECT_LE(nd.distinct * 2,
              static_cast<std::int64_t>(nd.ordered_pair_multiplicity.value()));
  }
}
