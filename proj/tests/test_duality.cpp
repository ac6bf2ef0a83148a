/**
 * @file test_duality.cpp
 * @brief Parametrizability test, torsion, extension modules and minimal parametrizations.
 */
#include "dgcalc/duality.hpp"
#include "dgcalc/zoo.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace dgcalc;
using zoo::MetricKind;

namespace {

zoo::Metric euclid(int n) { return zoo::metric(MetricKind::Euclidean, n); }
zoo::Metric mink(int n) { return zoo::metric(MetricKind::Minkowski, n); }
zoo::Metric mink_first(int n)
{
    std::vector<Rational> d(static_cast<size_t>(n), Rational(1));
    d.front() = Rational(-1);
    return zoo::Metric::diagonal(d);
}

FreeElem row(std::initializer_list<const char*> entries, int n)
{
    std::vector<Poly> ps;
    for (const char* s : entries) ps.push_back(parse_poly(s, n));
    return FreeElem(std::move(ps));
}

bool equal_up_to_sign(const FreeElem& a, const FreeElem& b)
{
    return a == b || a == Poly(a.nvars(), Rational(-1)) * b;
}

/// The annihilator is reported primitive with a positive leading coefficient.
void expect_einstein_torsion(const zoo::Metric& w, const Poly& box)
{
    const auto e = zoo::einstein_lin(w);
    const ParamReport r = param_test(e);
    EXPECT_FALSE(r.parametrizable);
    EXPECT_FALSE(r.ext1_zero);
    EXPECT_EQ(r.parametrization.ncols(), 4);
    EXPECT_TRUE(module_equal(r.parametrization.column_rows(), zoo::killing(w).column_rows()));
    EXPECT_EQ(r.recomputed_cc.nrows(), 20);
    EXPECT_TRUE(module_equal(r.recomputed_cc.rows(), zoo::riemann_lin(w).rows()));
    ASSERT_EQ(r.torsion.size(), 10u);
    for (const auto& t : r.torsion) {
        EXPECT_FALSE(module_contains(e.rows(), t.residue));
        EXPECT_EQ(t.order, 2);
        EXPECT_EQ(t.annihilator, box);
        EXPECT_TRUE(module_contains(e.rows(), t.annihilator * t.residue));
    }
}

}  // namespace

TEST(ParamTest, DivIsParametrizedByCurl)
{
    const ParamReport r = param_test(zoo::div3());
    EXPECT_TRUE(r.parametrizable);
    EXPECT_TRUE(r.ext1_zero);
    EXPECT_TRUE(r.torsion.empty());
    EXPECT_TRUE(module_equal(r.parametrization.column_rows(), zoo::curl3().column_rows()));
    EXPECT_TRUE(compose(r.input, r.parametrization).is_zero());
    EXPECT_TRUE(module_equal(r.recomputed_cc.rows(), zoo::div3().rows()));
    EXPECT_TRUE(torsion_generators(zoo::div3()).empty());
}

TEST(ParamTest, EinsteinIsNotParametrizable)
{
    expect_einstein_torsion(mink(4), parse_poly("d1^2 + d2^2 + d3^2 - d4^2", 4));
}

TEST(ParamTest, EinsteinVerdictIndependentOfSignaturePlacement)
{
    expect_einstein_torsion(mink_first(4), parse_poly("d1^2 - d2^2 - d3^2 - d4^2", 4));
}

TEST(ParamTest, CauchyIsParametrizedByBeltrami)
{
    const ParamReport r = param_test(zoo::cauchy(euclid(3)));
    EXPECT_TRUE(r.parametrizable);
    EXPECT_TRUE(
        module_equal(r.parametrization.column_rows(), adjoint(zoo::riemann_lin(euclid(3))).column_rows()));
}

TEST(ParamTest, CosseratEquilibrium)
{
    const auto c = zoo::cosserat2d();
    const ParamReport r = param_test(c.equilibrium);
    EXPECT_TRUE(r.parametrizable);
    EXPECT_TRUE(module_equal(cc(c.parametrization).rows(), c.equilibrium.rows()));
    EXPECT_TRUE(module_equal(r.recomputed_cc.rows(), c.equilibrium.rows()));
}

TEST(ParamTest, EquivalenceOnZooOperators)
{
    std::vector<LinDiffOp> ops = {zoo::div3(),
                                  zoo::curl3(),
                                  zoo::grad3(),
                                  zoo::cauchy(euclid(2)),
                                  zoo::cauchy(mink(3)),
                                  zoo::killing(euclid(2)),
                                  zoo::einstein_lin(euclid(3)),
                                  zoo::exterior_derivative(3, 1),
                                  zoo::exterior_derivative(4, 2),
                                  zoo::riemann_lin(euclid(2)),
                                  zoo::lame(Rational(1), Rational(1), 2),
                                  zoo::cosserat2d().equilibrium};
    for (const auto& op : ops) {
        const ParamReport r = param_test(op);
        EXPECT_EQ(r.parametrizable, r.ext1_zero) << op.name();
        EXPECT_EQ(r.parametrizable, r.torsion.empty()) << op.name();
        EXPECT_EQ(r.parametrizable, module_equal(r.input.rows(), r.recomputed_cc.rows()) ||
                                        (r.input.rows().empty() && r.recomputed_cc.rows().empty()))
            << op.name();
        if (r.parametrizable && r.parametrization.ncols() > 0) {
            EXPECT_TRUE(compose(op, r.parametrization).is_zero()) << op.name();
        }
        const ExtReport e1 = ext_module(op, 1);
        EXPECT_EQ(e1.is_zero, r.ext1_zero) << op.name();
    }
}

TEST(ParamTest, DoubleApplication)
{
    const ParamReport r = param_test(zoo::div3());
    ASSERT_TRUE(r.parametrizable);
    ASSERT_TRUE(r.ext2_zero);
    const ParamReport again = param_test(r.parametrization);
    EXPECT_TRUE(again.parametrizable);
    // The potentials of the first step are only fixed up to sign, so the second step is grad up to signs.
    ASSERT_EQ(again.parametrization.ncols(), 1);
    EXPECT_TRUE(compose(r.parametrization, again.parametrization).is_zero());
    for (int i = 0; i < 3; ++i) {
        EXPECT_TRUE(equal_up_to_sign(again.parametrization.rows()[static_cast<size_t>(i)],
                                     zoo::grad3().rows()[static_cast<size_t>(i)]));
    }
}

TEST(Torsion, KillingTwoIsAllTorsion)
{
    const auto k = zoo::killing(euclid(2));
    EXPECT_EQ(module_rank(k), 0);
    for (int i = 0; i < 2; ++i) {
        const FreeElem e = FreeElem::unit(2, 2, i);
        const Poly a = torsion_witness(k.rows(), e, 4);
        EXPECT_FALSE(a.is_zero());
        EXPECT_TRUE(module_contains(k.rows(), a * e));
    }
    const auto t = torsion_generators(k);
    EXPECT_EQ(t.size(), 2u);
}

TEST(Torsion, WitnessBudget)
{
    const auto e = zoo::einstein_lin(mink(4));
    const auto t = torsion_generators(e);
    ASSERT_FALSE(t.empty());
    EXPECT_THROW(torsion_witness(e.rows(), t.front().residue, 1), WitnessNotFound);
    EXPECT_THROW(torsion_witness({FreeElem(2, 2)}, FreeElem::unit(2, 2, 0), 3), WitnessNotFound);
}

TEST(Ext, Einstein)
{
    const auto e = zoo::einstein_lin(mink(4));
    const ExtReport e0 = ext_module(e, 0);
    EXPECT_FALSE(e0.is_zero);
    EXPECT_EQ(e0.rank, 4);
    const ExtReport e1 = ext_module(e, 1);
    EXPECT_FALSE(e1.is_zero);
    EXPECT_EQ(e1.rank, 0);
    EXPECT_FALSE(e1.presentation.empty());
    for (int i = 3; i <= 4; ++i) EXPECT_TRUE(ext_module(e, i).is_zero) << i;
}

TEST(Ext, DivVanishes)
{
    EXPECT_TRUE(ext_module(zoo::div3(), 1).is_zero);
    EXPECT_TRUE(ext_module(zoo::div3(), 2).is_zero);
    EXPECT_THROW(ext_module(zoo::div3(), 4), std::invalid_argument);
}

TEST(Ext, HigherExtIsTorsionAndResolutionIndependent)
{
    const std::vector<LinDiffOp> ops = {zoo::div3(), zoo::curl3(), zoo::killing(euclid(2)), zoo::cauchy(euclid(2)),
                                        zoo::einstein_lin(euclid(3)), zoo::conformal_killing(euclid(3))};
    for (const auto& op : ops) {
        for (int i = 0; i <= op.nvars(); ++i) {
            const ExtReport plain = ext_module(op, i);
            const ExtReport redundant = ext_module(op, i, {}, true);
            EXPECT_EQ(plain.is_zero, redundant.is_zero) << op.name() << " ext " << i;
            EXPECT_EQ(plain.rank, redundant.rank) << op.name() << " ext " << i;
            if (i >= 1) EXPECT_EQ(plain.rank, 0) << op.name() << " ext " << i;
        }
    }
}

TEST(MinimalParametrization, DivNeedsTwoPotentials)
{
    const auto m = minimal_parametrization(zoo::div3());
    ASSERT_EQ(m.ncols(), 2);
    EXPECT_EQ(m.ncols(), 3 - fraction_rank(zoo::div3().rows(), 3));
    EXPECT_TRUE(module_equal(cc(m).rows(), zoo::div3().rows()));
    const std::vector<FreeElem> shown = {row({"-d3", "0"}, 3), row({"0", "d3"}, 3), row({"d1", "-d2"}, 3)};
    ASSERT_EQ(m.nrows(), 3);
    // Each potential is determined up to sign, and the two may come in either order.
    bool found = false;
    for (const auto& order : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
        const auto cand = m.columns(order);
        for (int signs = 0; signs < 4 && !found; ++signs) {
            bool all = true;
            for (size_t i = 0; i < 3; ++i) {
                for (size_t c = 0; c < 2; ++c) {
                    const Poly s = (signs >> c & 1) ? Poly(3, Rational(-1)) * cand.rows()[i][c] : cand.rows()[i][c];
                    all = all && s == shown[i][c];
                }
            }
            found = all;
        }
    }
    EXPECT_TRUE(found) << m.rows()[0].str() << " | " << m.rows()[1].str() << " | " << m.rows()[2].str();
}

TEST(MinimalParametrization, AiryAndMaxwell)
{
    const auto airy = minimal_parametrization(zoo::cauchy(euclid(2)));
    EXPECT_EQ(airy.ncols(), 1);
    EXPECT_TRUE(module_equal(airy.column_rows(), adjoint(zoo::riemann_lin(euclid(2))).column_rows()));
    const auto maxwell = minimal_parametrization(zoo::cauchy(euclid(3)));
    EXPECT_EQ(maxwell.ncols(), 3);
    EXPECT_TRUE(module_equal(cc(maxwell).rows(), zoo::cauchy(euclid(3)).rows()));
}

TEST(MinimalParametrization, Failures)
{
    EXPECT_THROW(minimal_parametrization(zoo::einstein_lin(mink(4))), NotParametrizable);
    DualityOptions tiny;
    tiny.subset_cap = 1;
    EXPECT_THROW(minimal_parametrization(zoo::cauchy(euclid(3)), tiny), NoMinimalSubsetFound);
}

TEST(Rank, ModuleRank)
{
    EXPECT_EQ(module_rank(zoo::div3()), 2);
    EXPECT_EQ(module_rank(zoo::curl3()), 1);
    EXPECT_EQ(module_rank(zoo::killing(mink(4))), 0);
    EXPECT_EQ(module_rank(zoo::einstein_lin(mink(4))), 4);
}
