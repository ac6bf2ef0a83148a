/**
 * @file test_diffop.cpp
 * @brief Operator algebra: composition, weighted adjoint, compatibility conditions, factorization, symbols.
 */
#include "dgcalc/diffop.hpp"
#include "dgcalc/random.hpp"
#include "dgcalc/zoo.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace dgcalc;
using zoo::MetricKind;

namespace {

zoo::Metric euclid(int n) { return zoo::metric(MetricKind::Euclidean, n); }
zoo::Metric mink(int n) { return zoo::metric(MetricKind::Minkowski, n); }

std::vector<LinDiffOp> zoo_sample()
{
    std::vector<LinDiffOp> ops;
    for (const auto& name : zoo::generator_names()) {
        for (int n : {2, 3, 4}) {
            for (auto kind : {MetricKind::Euclidean, MetricKind::Minkowski}) {
                try {
                    ops.push_back(zoo::make(name, n, kind, Rational(2), Rational(1), 1));
                } catch (const std::exception&) {
                    // Not every generator exists in every dimension.
                }
            }
        }
    }
    return ops;
}

/// Adjoint rows of b with the column scaling from the target weights of a instead of b.
std::vector<FreeElem> rescaled_adjoint_rows(const LinDiffOp& a, const LinDiffOp& b)
{
    std::vector<FreeElem> out;
    const auto& wa = a.target().components();
    const auto& wb = b.target().components();
    const LinDiffOp ad = adjoint(b);
    for (const auto& r : ad.rows()) {
        std::vector<Poly> entries;
        for (size_t j = 0; j < wa.size(); ++j) {
            entries.push_back(Poly(r.nvars(), wa[j].weight / wb[j].weight) * r[j]);
        }
        out.emplace_back(std::move(entries));
    }
    return out;
}

}  // namespace

TEST(Compose, EinsteinIsCAfterRicci)
{
    EXPECT_TRUE(compose(zoo::c_map(mink(4)), zoo::ricci_lin(mink(4))).same_matrix(zoo::einstein_lin(mink(4))));
}

TEST(Compose, IdentityAndShape)
{
    const auto k = zoo::killing(euclid(3));
    EXPECT_TRUE(compose(LinDiffOp::identity(3, k.target()), k).same_matrix(k));
    EXPECT_TRUE(compose(k, LinDiffOp::identity(3, k.source())).same_matrix(k));
    EXPECT_THROW(compose(k, k), ShapeMismatch);
    const auto c = compose(zoo::div3(), zoo::grad3());
    EXPECT_EQ(c.nrows(), 1);
    EXPECT_EQ(c.at(0, 0), parse_poly("d1^2 + d2^2 + d3^2", 3));
}

TEST(Adjoint, RiemannTwoIsAiry)
{
    const auto a = adjoint(zoo::riemann_lin(euclid(2)));
    ASSERT_EQ(a.ncols(), 1);
    ASSERT_EQ(a.nrows(), 3);
    // Column read against (sigma11, sigma12, sigma22), up to one overall scalar.
    const Poly& s11 = a.at(0, 0);
    ASSERT_FALSE(s11.is_zero());
    const Rational c = s11.leading().second;
    EXPECT_EQ(s11, c * parse_poly("d2^2", 2));
    EXPECT_EQ(a.at(1, 0), c * parse_poly("-d1*d2", 2));
    EXPECT_EQ(a.at(2, 0), c * parse_poly("d1^2", 2));
}

TEST(Adjoint, EinsteinSelfAdjointRicciNot)
{
    for (const auto& w : {euclid(3), mink(4), euclid(4)}) {
        const auto e = zoo::einstein_lin(w);
        EXPECT_TRUE(adjoint(e).same_matrix(e)) << w.describe();
    }
    const auto r = zoo::ricci_lin(mink(4));
    EXPECT_FALSE(adjoint(r).same_matrix(r));
}

TEST(Adjoint, KillingIsMinusTwoCauchy)
{
    for (const auto& w : {euclid(2), euclid(3), mink(4)}) {
        EXPECT_TRUE(adjoint(zoo::killing(w)).same_matrix(zoo::cauchy(w).scaled(Rational(-2))));
    }
}

TEST(Adjoint, InvolutionOnZoo)
{
    for (const auto& op : zoo_sample()) {
        const auto aa = adjoint(adjoint(op));
        EXPECT_TRUE(aa.same_matrix(op)) << op.name();
        EXPECT_EQ(aa.source(), op.source());
        EXPECT_EQ(aa.target(), op.target());
    }
}

TEST(AdjointProperty, InvolutionAndContravariance)
{
    random::Generator g(21);
    for (int t = 0; t < 100; ++t) {
        const int n = g.uniform(1, 4);
        const int m = g.uniform(1, 3);
        const int p = g.uniform(1, 3);
        const int q = g.uniform(1, 3);
        const LinDiffOp b = g.op(n, p, m, 2, 3, "x", "y");
        LinDiffOp a = g.op(n, q, p, 2, 3, "y", "z");
        a = a.with_bundles(b.target(), a.target());
        EXPECT_TRUE(adjoint(adjoint(b)).same_matrix(b));
        EXPECT_TRUE(adjoint(compose(a, b)).same_matrix(compose(adjoint(b), adjoint(a)))) << "case " << t;
    }
}

TEST(AdjointProperty, WeightsOnlyRescaleColumns)
{
    random::Generator g(22);
    for (int t = 0; t < 20; ++t) {
        const LinDiffOp a = g.op(2, 2, 3, 2, 2);
        const LinDiffOp b = a.with_bundles(g.bundle("u", 3), g.bundle("v", 2));
        EXPECT_TRUE(module_equal(adjoint(a).rows(), rescaled_adjoint_rows(a, b))) << "case " << t;
    }
}

TEST(CC, KillingTwoIsTheRiemannRow)
{
    const auto c = cc(zoo::killing(euclid(2)));
    ASSERT_EQ(c.nrows(), 1);
    EXPECT_EQ(c.rows()[0].str(), FreeElem({parse_poly("d2^2", 2), parse_poly("-2*d1*d2", 2), parse_poly("d1^2", 2)})
                                     .str());
    EXPECT_EQ(c.target().dim(), 1);
    EXPECT_EQ(c.target().components()[0].label, "z1");
}

TEST(CC, EinsteinFourHasFourFirstOrderRows)
{
    const auto c = cc(zoo::einstein_lin(mink(4)));
    EXPECT_EQ(order_profile(c), std::vector<int>(4, 1));
}

TEST(CC, GradIsCurlAndZeroOperator)
{
    EXPECT_TRUE(module_equal(cc(zoo::grad3()).rows(), zoo::curl3().rows()));
    const auto z = LinDiffOp::zero("zero", 2, Bundle::numbered("a", "a", 2), Bundle::numbered("b", "b", 3));
    const auto c = cc(z);
    EXPECT_EQ(c.ncols(), 3);
    EXPECT_TRUE(module_equal(c.rows(), LinDiffOp::identity(2, z.target()).rows()));
}

TEST(CCProperty, AnnihilatesTheOperator)
{
    for (const auto& op : zoo_sample()) {
        if (op.nvars() > 3 && op.nrows() > 10) continue;
        const auto c = cc(op);
        EXPECT_TRUE(compose(c, op).is_zero()) << op.name();
    }
}

TEST(CCProperty, KillsImagesOfPolynomialSections)
{
    random::Generator g(23);
    const std::vector<LinDiffOp> ops = {zoo::killing(euclid(3)), zoo::grad3(), zoo::curl3(),
                                        zoo::conformal_killing(euclid(3)), zoo::riemann_lin(euclid(3)),
                                        zoo::exterior_derivative(4, 1)};
    for (const auto& op : ops) {
        const auto c = cc(op);
        for (int t = 0; t < 5; ++t) {
            std::vector<Poly> xi;
            for (int j = 0; j < op.ncols(); ++j) xi.push_back(g.poly(op.nvars(), 3 + (op.order() + c.order()), 6));
            const auto eta = oracle::apply_op(op, xi);
            for (const auto& z : oracle::apply_op(c, eta)) EXPECT_TRUE(z.is_zero()) << op.name();
        }
    }
}

TEST(Factor, RicciThroughRiemann)
{
    const auto q = factor_through(zoo::ricci_lin(mink(4)), zoo::riemann_lin(mink(4)));
    EXPECT_EQ(q.order(), 0);
    EXPECT_TRUE(compose(q, zoo::riemann_lin(mink(4))).same_matrix(zoo::ricci_lin(mink(4))));
}

TEST(Factor, EinsteinThroughRicciIsC)
{
    for (const auto& w : {euclid(3), mink(4)}) {
        const auto q = factor_through(zoo::einstein_lin(w), zoo::ricci_lin(w));
        EXPECT_TRUE(q.same_matrix(zoo::c_map(w)));
    }
}

TEST(Factor, RiemannThroughEinsteinFails)
{
    try {
        factor_through(zoo::riemann_lin(mink(4)), zoo::einstein_lin(mink(4)));
        FAIL() << "expected NotFactorable";
    } catch (const NotFactorable& e) {
        EXPECT_GE(e.row(), 0);
        EXPECT_FALSE(e.remainder().empty());
    }
}

TEST(Factor, RandomSoundness)
{
    random::Generator g(24);
    for (int t = 0; t < 15; ++t) {
        const LinDiffOp b = g.op(2, 3, 2, 2, 2);
        LinDiffOp q = g.op(2, 2, 3, 1, 2, "y", "z");
        q = q.with_bundles(b.target(), q.target());
        const LinDiffOp a = compose(q, b);
        const LinDiffOp found = factor_through(a, b);
        EXPECT_TRUE(compose(found, b).same_matrix(a)) << "case " << t;
    }
}

TEST(OrderProfile, Examples)
{
    EXPECT_EQ(order_profile(zoo::killing(euclid(3))), std::vector<int>(6, 1));
    const auto z = LinDiffOp::zero("zero", 2, Bundle::numbered("a", "a", 2), Bundle::numbered("b", "b", 0));
    EXPECT_TRUE(order_profile(z).empty());
    const auto step2 = cc(cc(zoo::conformal_killing(euclid(3))).renamed("c1"));
    EXPECT_EQ(order_profile(cc(zoo::conformal_killing(euclid(3)))), std::vector<int>(5, 3));
    EXPECT_EQ(order_profile(step2), std::vector<int>(3, 1));
}

TEST(Symbol, LameAndGrad)
{
    const auto s = symbol_at(zoo::lame(Rational(2), Rational(1), 3), {Rational(1), Rational(0), Rational(0)});
    const SymbolMatrix expect = {{Rational(4), Rational(0), Rational(0)},
                                 {Rational(0), Rational(1), Rational(0)},
                                 {Rational(0), Rational(0), Rational(1)}};
    EXPECT_EQ(s, expect);
    const auto gs = symbol_at(zoo::grad3(), {Rational(1), Rational(2), Rational(3)});
    EXPECT_EQ(gs, (SymbolMatrix{{Rational(1)}, {Rational(2)}, {Rational(3)}}));
    EXPECT_THROW(symbol_at(zoo::grad3(), {Rational(1)}), ShapeMismatch);
}

TEST(Symbol, AtZeroIsTheZerothOrderPart)
{
    const auto c = zoo::cosserat2d().spencer_d1;
    const auto s = symbol_at(c, {Rational(0), Rational(0)});
    const auto h = homogeneous_part(c, 0);
    for (int i = 0; i < c.nrows(); ++i) {
        for (int j = 0; j < c.ncols(); ++j) {
            EXPECT_EQ(Poly(2, s[static_cast<size_t>(i)][static_cast<size_t>(j)]), h.at(i, j));
        }
    }
}

TEST(Symbol, LameWaveSpeedsForOtherDirections)
{
    // Longitudinal eigenvalue (lambda + 2 mu)|k|^2 along k, transversal mu |k|^2.
    const auto l = zoo::lame(Rational(3), Rational(2), 3);
    const auto s = symbol_at(l, {Rational(0), Rational(1), Rational(1)});
    EXPECT_EQ(s[0][0], Rational(4));
    EXPECT_EQ(s[1][1], Rational(3 + 2 + 2 * 2));
    EXPECT_EQ(s[1][2], Rational(5));
}

TEST(Bundle, Labels)
{
    const auto b = zoo::sym_bundle("S2T", "O", 3);
    EXPECT_EQ(b.dim(), 6);
    EXPECT_EQ(b.components()[1].weight, Rational(2));
    EXPECT_EQ(b.index_of(b.components()[4].label), 4);
    EXPECT_THROW(Bundle("x", {{"a", Rational(1)}, {"a", Rational(1)}}), std::invalid_argument);
}
