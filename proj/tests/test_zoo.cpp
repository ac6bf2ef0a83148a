/**
 * @file test_zoo.cpp
 * @brief Named operators: explicit rows, structural identities, dimension formulas.
 */
#include "dgcalc/zoo.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

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

Poly P(const char* s, int n) { return parse_poly(s, n); }

FreeElem row(std::initializer_list<const char*> entries, int n)
{
    std::vector<Poly> ps;
    for (const char* s : entries) ps.push_back(P(s, n));
    return FreeElem(std::move(ps));
}

}  // namespace

TEST(Metric, Kinds)
{
    const auto e = euclid(3);
    const auto m = mink(4);
    EXPECT_EQ(e.lower(0, 0), Rational(1));
    EXPECT_EQ(e.lower(0, 1), Rational(0));
    EXPECT_EQ(m.lower(3, 3), Rational(-1));
    EXPECT_EQ(m.lower(2, 2), Rational(1));
    EXPECT_EQ(m.upper(3, 3), Rational(-1));
    EXPECT_THROW(zoo::metric(MetricKind::Euclidean, 1), std::invalid_argument);
    EXPECT_THROW(zoo::Metric::diagonal({Rational(1), Rational(0)}), std::invalid_argument);
    EXPECT_EQ(zoo::parse_metric_kind("minkowski"), MetricKind::Minkowski);
    EXPECT_THROW(zoo::parse_metric_kind("riemannian"), std::invalid_argument);
}

TEST(Metric, GeneralInverse)
{
    const zoo::Metric w({{Rational(2), Rational(1)}, {Rational(1), Rational(1)}});
    EXPECT_EQ(w.upper(0, 0), Rational(1));
    EXPECT_EQ(w.upper(0, 1), Rational(-1));
    EXPECT_EQ(w.upper(1, 1), Rational(2));
}

TEST(Killing, TwoDimensionalRows)
{
    const auto k = zoo::killing(euclid(2));
    ASSERT_EQ(k.nrows(), 3);
    EXPECT_EQ(k.rows()[0], row({"2*d1", "0"}, 2));
    EXPECT_EQ(k.rows()[1], row({"d2", "d1"}, 2));
    EXPECT_EQ(k.rows()[2], row({"0", "2*d2"}, 2));
}

TEST(Killing, PolynomialSolutionsAreTheIsometries)
{
    // Translations and rotations: n(n+1)/2, and nothing else in degree <= 3.
    for (const auto& w : {euclid(2), euclid(3), mink(4)}) {
        EXPECT_EQ(oracle::solution_dim(zoo::killing(w), 3), static_cast<size_t>(w.n() * (w.n() + 1) / 2));
    }
}

TEST(Killing, CCIsRiemannForBothSignatures)
{
    for (int n = 2; n <= 4; ++n) {
        for (const auto& w : {euclid(n), mink(n), mink_first(n)}) {
            EXPECT_TRUE(module_equal(cc(zoo::killing(w)).rows(), zoo::riemann_lin(w).rows())) << w.describe();
        }
    }
}

TEST(Conformal, PolynomialSolutionsAreTheConformalGroup)
{
    // (n+1)(n+2)/2 conformal vector fields, all of degree <= 2.
    for (const auto& w : {euclid(3), mink(4)}) {
        const int n = w.n();
        EXPECT_EQ(oracle::solution_dim(zoo::conformal_killing(w), 3), static_cast<size_t>((n + 1) * (n + 2) / 2));
    }
    // The Weyl group adds only the dilation.
    EXPECT_EQ(oracle::solution_dim(zoo::weyl_killing(euclid(3)), 3), 7u);
}

TEST(Conformal, RowsAreTraceFreeCombinations)
{
    // Every conformal row is a constant combination of Killing rows with zero trace.
    for (const auto& w : {euclid(3), mink(4)}) {
        const auto c = zoo::conformal_killing(w);
        const auto k = zoo::killing(w);
        EXPECT_EQ(c.nrows(), k.nrows() - 1);
        EXPECT_EQ(c.order(), 1);
        std::vector<FreeElem> trace_free;
        for (const auto& r : c.rows()) trace_free.push_back(r);
        FreeElem trace(w.n(), w.n());
        for (int i = 0; i < w.n(); ++i) {
            trace = trace + Poly(w.n(), w.upper(i, i)) * k.rows()[static_cast<size_t>(zoo::sym_index(w.n(), i, i))];
        }
        trace_free.push_back(trace);
        EXPECT_TRUE(module_equal(trace_free, k.rows()));
        EXPECT_EQ(fraction_rank(c.rows(), w.n()), w.n());
    }
}

TEST(Curvature, Dimensions)
{
    for (int n = 2; n <= 6; ++n) {
        const int f1 = n * n * (n * n - 1) / 12;
        EXPECT_EQ(zoo::riemann_lin(euclid(n)).nrows(), f1);
        EXPECT_EQ(static_cast<int>(zoo::riemann_components(n).size()), f1);
        EXPECT_EQ(zoo::dims(n).f1, f1);
        EXPECT_EQ(zoo::ricci_lin(euclid(n)).nrows(), n * (n + 1) / 2);
    }
    for (int n = 4; n <= 6; ++n) {
        const int f1hat = n * (n + 1) * (n + 2) * (n - 3) / 12;
        EXPECT_EQ(zoo::weyl_lin(euclid(n)).nrows(), f1hat);
        EXPECT_EQ(zoo::dims(n).f1hat, f1hat);
    }
    EXPECT_EQ(fraction_rank(zoo::weyl_components(euclid(3)).rows(), 6), 0);
    EXPECT_THROW(zoo::weyl_lin(euclid(3)), std::invalid_argument);
}

TEST(Curvature, RiemannDropRule)
{
    const auto comps = zoo::riemann_components(4);
    // R_{14,23} is re-expressed by the cyclic identity; R_{12,34} and R_{13,24} stay.
    auto has = [&](int a, int b, int c, int d) {
        for (const auto& [p, q] : comps) {
            if (p == std::make_pair(a, b) && q == std::make_pair(c, d)) return true;
        }
        return false;
    };
    EXPECT_TRUE(has(0, 1, 2, 3));
    EXPECT_TRUE(has(0, 2, 1, 3));
    EXPECT_FALSE(has(0, 3, 1, 2));
}

TEST(Einstein, ThreeDimensionalRows)
{
    const auto e = zoo::einstein_lin(euclid(3));
    const auto s = [](int i, int j) { return zoo::sym_index(3, i, j); };
    const auto& r12 = e.rows()[static_cast<size_t>(s(0, 1))];
    const Poly two(3, Rational(2));
    EXPECT_EQ(two * r12[static_cast<size_t>(s(0, 1))], P("d3^2", 3));
    EXPECT_EQ(two * r12[static_cast<size_t>(s(2, 2))], P("d1*d2", 3));
    EXPECT_EQ(two * r12[static_cast<size_t>(s(1, 2))], P("-d1*d3", 3));
    EXPECT_EQ(two * r12[static_cast<size_t>(s(0, 2))], P("-d2*d3", 3));
    EXPECT_TRUE(r12[static_cast<size_t>(s(0, 0))].is_zero());
    EXPECT_TRUE(r12[static_cast<size_t>(s(1, 1))].is_zero());
    const auto& r11 = e.rows()[static_cast<size_t>(s(0, 0))];
    const Poly m2(3, Rational(-2));
    EXPECT_EQ(m2 * r11[static_cast<size_t>(s(2, 2))], P("d2^2", 3));
    EXPECT_EQ(m2 * r11[static_cast<size_t>(s(1, 1))], P("d3^2", 3));
    EXPECT_EQ(m2 * r11[static_cast<size_t>(s(1, 2))], P("-2*d2*d3", 3));
    EXPECT_TRUE(r11[static_cast<size_t>(s(0, 0))].is_zero());
}

TEST(Einstein, Factorizations)
{
    for (const auto& w : {euclid(3), euclid(4), mink(4), mink_first(4)}) {
        const auto e = zoo::einstein_lin(w);
        const auto r = zoo::ricci_lin(w);
        EXPECT_TRUE(compose(zoo::c_map(w), r).same_matrix(e)) << w.describe();
        EXPECT_TRUE(compose(adjoint(r), zoo::c_map(w)).same_matrix(e)) << w.describe();
        EXPECT_TRUE(adjoint(e).same_matrix(e)) << w.describe();
        EXPECT_TRUE(factor_through(r, zoo::riemann_lin(w)).order() == 0);
    }
}

TEST(CMap, InverseAndTrace)
{
    for (const auto& w : {euclid(3), euclid(4), mink(4), euclid(5)}) {
        const auto c = zoo::c_map(w);
        EXPECT_EQ(c.order(), 0);
        const auto id = compose(zoo::c_map_inverse(w), c);
        EXPECT_TRUE(id.same_matrix(LinDiffOp::identity(w.n(), c.source())));
    }
    // tr C(R) = (1 - n/2) tr R, read in the Euclidean case where the trace is a plain diagonal sum.
    for (int n : {3, 4, 5}) {
        const auto c = zoo::c_map(euclid(n));
        FreeElem tr(n, c.ncols());
        for (int i = 0; i < n; ++i) tr = tr + c.rows()[static_cast<size_t>(zoo::sym_index(n, i, i))];
        FreeElem expect(n, c.ncols());
        for (int i = 0; i < n; ++i) {
            expect[static_cast<size_t>(zoo::sym_index(n, i, i))] = Poly(n, Rational(2 - n, 2));
        }
        EXPECT_EQ(tr, expect);
    }
}

TEST(Elasticity, CauchyRows)
{
    const auto c = zoo::cauchy(euclid(2));
    ASSERT_EQ(c.nrows(), 2);
    EXPECT_EQ(c.rows()[0], row({"d1", "d2", "0"}, 2));
    EXPECT_EQ(c.rows()[1], row({"0", "d1", "d2"}, 2));
}

TEST(Elasticity, HookeInverseAndTrace)
{
    for (const auto& [l, m] : {std::pair{Rational(1), Rational(1)}, std::pair{Rational(3, 2), Rational(2, 5)}}) {
        const auto h = zoo::hooke2d(l, m);
        const auto hi = zoo::hooke2d_inverse(l, m);
        EXPECT_TRUE(compose(h, hi).same_matrix(LinDiffOp::identity(2, hi.source())));
        EXPECT_TRUE(compose(hi, h).same_matrix(LinDiffOp::identity(2, h.source())));
        const FreeElem tr_sigma = h.rows()[0] + h.rows()[2];
        EXPECT_EQ(tr_sigma, Poly(2, l + m) * row({"1", "0", "1"}, 2));
    }
    EXPECT_THROW(zoo::hooke2d(Rational(-1), Rational(1)), std::invalid_argument);
    EXPECT_THROW(zoo::hooke2d_inverse(Rational(1), Rational(0)), std::invalid_argument);
}

TEST(Elasticity, DamIdentity)
{
    const auto r = zoo::riemann_lin(euclid(2));
    const auto d = compose(compose(r, zoo::hooke2d_inverse(Rational(1), Rational(1))), adjoint(r));
    ASSERT_EQ(d.nrows(), 1);
    ASSERT_EQ(d.ncols(), 1);
    EXPECT_EQ(d.at(0, 0), Rational(3, 4) * P("d1^4 + 2*d1^2*d2^2 + d2^4", 2));
}

TEST(Elasticity, LameSymbol)
{
    const auto s = symbol_at(zoo::lame(Rational(2), Rational(1), 3), {Rational(1), Rational(0), Rational(0)});
    EXPECT_EQ(s[0][0], Rational(4));
    EXPECT_EQ(s[1][1], Rational(1));
    EXPECT_EQ(s[2][2], Rational(1));
    EXPECT_EQ(s[0][1], Rational(0));
}

TEST(Exterior, PoincareSequence)
{
    for (int n = 2; n <= 4; ++n) {
        for (int r = 0; r + 1 < n; ++r) {
            EXPECT_TRUE(compose(zoo::exterior_derivative(n, r + 1), zoo::exterior_derivative(n, r)).is_zero());
        }
    }
    EXPECT_TRUE(module_equal(cc(zoo::exterior_derivative(4, 1)).rows(), zoo::exterior_derivative(4, 2).rows()));
    EXPECT_THROW(zoo::exterior_derivative(3, 3), std::invalid_argument);
    EXPECT_THROW(zoo::exterior_derivative(3, -1), std::invalid_argument);
}

TEST(Exterior, MaxwellSecondSet)
{
    // The adjoint of d on 1-forms reads F -> (sum_r d_r F^{ir}) up to sign.
    const auto a = adjoint(zoo::exterior_derivative(4, 1));
    EXPECT_EQ(a.nrows(), 4);
    EXPECT_EQ(a.ncols(), 6);
    EXPECT_EQ(a.order(), 1);
    for (const auto& r : a.rows()) {
        int nonzero = 0;
        for (const auto& p : r.entries()) nonzero += p.is_zero() ? 0 : 1;
        EXPECT_EQ(nonzero, 3);
    }
    EXPECT_TRUE(compose(a, adjoint(zoo::exterior_derivative(4, 2))).is_zero());
}

TEST(Dalembertian, IsTheWaveOperator)
{
    const auto b = Bundle::numbered("x", "x", 2);
    const auto d = zoo::dalembertian(mink(4), b);
    EXPECT_EQ(d.at(0, 0), P("d1^2 + d2^2 + d3^2 - d4^2", 4));
    EXPECT_TRUE(d.at(0, 1).is_zero());
    EXPECT_EQ(d.at(1, 1), d.at(0, 0));
}

TEST(Lichnerowicz, BoxWeylFactorsThroughRicci)
{
    for (const auto& w : {mink(4), mink_first(4)}) {
        const auto weyl = zoo::weyl_lin(w);
        const auto bw = compose(zoo::dalembertian(w, weyl.target()), weyl);
        const auto q = factor_through(bw, zoo::ricci_lin(w));
        EXPECT_EQ(q.order(), 2);
        EXPECT_TRUE(compose(q, zoo::ricci_lin(w)).same_matrix(bw));
    }
}

TEST(Cosserat, Structure)
{
    const auto c = zoo::cosserat2d();
    EXPECT_EQ(c.spencer_d1.ncols(), 3);
    EXPECT_EQ(c.spencer_d1.nrows(), 6);
    EXPECT_EQ(c.equilibrium.nrows(), 3);
    EXPECT_EQ(c.parametrization.ncols(), 3);
    EXPECT_TRUE(compose(c.equilibrium, c.parametrization).is_zero());
    EXPECT_TRUE(adjoint(c.spencer_d1).scaled(c.equilibrium_scale).same_matrix(c.equilibrium));
    // The couple-stress row carries the zeroth-order antisymmetric stress.
    int constants = 0;
    for (const auto& p : c.equilibrium.rows()[2].entries()) constants += (!p.is_zero() && p.degree() == 0) ? 1 : 0;
    EXPECT_EQ(constants, 2);
}

TEST(Dims, TheoremValuesAndGroups)
{
    EXPECT_EQ(zoo::dims(4).f1, 20);
    EXPECT_EQ(zoo::dims(4).f1hat, 10);
    const auto d2 = zoo::dims(2);
    EXPECT_EQ(d2.isometry, 3);
    EXPECT_EQ(d2.weyl_group, 4);
    EXPECT_EQ(d2.conformal, 6);
    EXPECT_EQ(zoo::jet_dim(2, 2, 3), 20);
    EXPECT_EQ(zoo::binomial(6, 2), 15);
    EXPECT_EQ(zoo::binomial(3, 5), 0);
}

TEST(Dims, DiagramSeeSaw)
{
    const auto t = zoo::diagram1_table();
    ASSERT_EQ(t.spencer.size(), 3u);
    ASSERT_EQ(t.janet.size(), 3u);
    for (size_t g = 0; g < 3; ++g) {
        for (size_t k = 0; k < 3; ++k) EXPECT_EQ(t.spencer[g][k] + t.janet[g][k], t.full[k]);
    }
    EXPECT_EQ(t.full, (std::vector<long long>{20, 30, 12}));
    // Spencer bundles are C(n, r) copies of the group dimension.
    const auto d2 = zoo::dims(2);
    for (size_t g = 0; g < 3; ++g) {
        const long long dim = t.spencer[g][0];
        EXPECT_EQ(t.spencer[g][1], 2 * dim);
        EXPECT_EQ(t.spencer[g][2], dim);
    }
    EXPECT_EQ(d2.spencer, t.spencer);
}

TEST(Make, EveryNameBuilds)
{
    for (const auto& name : zoo::generator_names()) {
        const int n = name.rfind("cosserat", 0) == 0 || name.rfind("hooke", 0) == 0 ? 2 : 4;
        EXPECT_NO_THROW(zoo::make(name, name == "grad" || name == "curl" || name == "div" ? 3 : n,
                                  MetricKind::Minkowski))
            << name;
    }
    EXPECT_THROW(zoo::make("nonexistent", 3, MetricKind::Euclidean), std::invalid_argument);
}
