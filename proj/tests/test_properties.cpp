/**
 * @file test_properties.cpp
 * @brief Randomized invariants across the engine, the operator layer and the duality layer.
 *
 * Inputs come from the seeded generator in random.hpp, so every failure
 * reproduces; the case index is printed with each assertion.
 */
#include "dgcalc/duality.hpp"
#include "dgcalc/io.hpp"
#include "dgcalc/random.hpp"
#include "dgcalc/reference.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <tuple>

using namespace dgcalc;

namespace {

/// Small random operator shapes that keep every computation below a second.
LinDiffOp small_op(random::Generator& g)
{
    const int n = g.uniform(2, 3);
    const int rows = g.uniform(1, 3);
    const int cols = g.uniform(1, 3);
    return g.op(n, rows, cols, 2, 2);
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

TEST(Property, GroebnerBasisIgnoresGeneratorOrderAndThreads)
{
    random::Generator g(31);
    for (int t = 0; t < 25; ++t) {
        const int n = g.uniform(2, 3);
        const int w = g.uniform(1, 3);
        auto rows = g.rows(n, g.uniform(2, 4), w, 2, 3);
        const std::string base = reduced_groebner(rows, w).str();
        std::shuffle(rows.begin(), rows.end(), g.engine());
        for (int th : {1, 2, 4}) {
            EngineOptions o;
            o.threads = th;
            EXPECT_EQ(reduced_groebner(rows, w, {}, o).str(), base) << "case " << t;
        }
        EngineOptions serial;
        serial.serial = true;
        EXPECT_EQ(reduced_groebner(rows, w, {}, serial).str(), base) << "case " << t;
    }
}

TEST(Property, ReducedBasisShape)
{
    // Leading term: largest monomial in degrevlex, ties broken by the lower position.
    const auto lead = [](const FreeElem& e) {
        int pos = -1;
        Monomial best;
        Rational coeff;
        for (int c = 0; c < e.width(); ++c) {
            const Poly& p = e[static_cast<size_t>(c)];
            if (p.is_zero()) continue;
            if (pos < 0 || Monomial::compare(p.leading().first, best) > 0) {
                pos = c;
                best = p.leading().first;
                coeff = p.leading().second;
            }
        }
        return std::make_tuple(pos, best, coeff);
    };
    random::Generator g(32);
    for (int t = 0; t < 25; ++t) {
        const int w = g.uniform(1, 3);
        const auto gb = reduced_groebner(g.rows(3, g.uniform(1, 4), w, 2, 3), w);
        const auto& gens = gb.generators();
        for (size_t i = 0; i < gens.size(); ++i) {
            const auto [pi, mi, ci] = lead(gens[i]);
            EXPECT_TRUE(ci.is_one()) << "case " << t;
            for (size_t j = 0; j < gens.size(); ++j) {
                if (j == i) continue;
                const auto [pj, mj, cj] = lead(gens[j]);
                for (const auto& [m, q] : gens[i][static_cast<size_t>(pj)].terms()) {
                    EXPECT_FALSE(mj.divides(m)) << "case " << t;
                }
            }
        }
        for (size_t i = 0; i + 1 < gens.size(); ++i) {
            const auto [p0, m0, c0] = lead(gens[i]);
            const auto [p1, m1, c1] = lead(gens[i + 1]);
            EXPECT_TRUE(p0 < p1 || (p0 == p1 && Monomial::compare(m0, m1) < 0)) << "case " << t;
        }
    }
}

TEST(Property, SyzygiesAreSoundAndCompleteInLowDegree)
{
    random::Generator g(33);
    for (int t = 0; t < 12; ++t) {
        const int w = g.uniform(1, 2);
        const auto rows = g.rows(2, g.uniform(2, 3), w, 2, 2);
        const auto s = syzygies(rows);
        for (const auto& z : s) {
            std::vector<Poly> c(z.entries().begin(), z.entries().end());
            EXPECT_TRUE(combine_rows(c, rows, w).is_zero()) << "case " << t;
        }
        for (const auto& cand : oracle::bounded_syzygies(rows, 2)) {
            EXPECT_TRUE(!s.empty() && module_contains(s, cand)) << "case " << t;
        }
    }
}

TEST(Property, AdjointInvolutionAndContravariance)
{
    random::Generator g(34);
    for (int t = 0; t < 60; ++t) {
        const LinDiffOp b = small_op(g);
        LinDiffOp a = g.op(b.nvars(), g.uniform(1, 3), b.nrows(), 2, 2, "p", "q");
        a = a.with_bundles(b.target(), a.target());
        EXPECT_TRUE(adjoint(adjoint(b)).same_matrix(b)) << "case " << t;
        EXPECT_TRUE(adjoint(compose(a, b)).same_matrix(compose(adjoint(b), adjoint(a)))) << "case " << t;
    }
}

TEST(Property, CompatibilityConditionsAnnihilate)
{
    random::Generator g(35);
    for (int t = 0; t < 20; ++t) {
        const LinDiffOp a = small_op(g);
        const LinDiffOp c = cc(a);
        EXPECT_TRUE(compose(c, a).is_zero()) << "case " << t;
        std::vector<Poly> xi;
        for (int j = 0; j < a.ncols(); ++j) xi.push_back(g.poly(a.nvars(), 3, 5));
        for (const auto& z : oracle::apply_op(c, oracle::apply_op(a, xi))) EXPECT_TRUE(z.is_zero()) << "case " << t;
        // Anything that annihilates A lies in the row module of cc(A).
        for (const auto& s : oracle::bounded_syzygies(a.rows(), 1)) {
            EXPECT_TRUE(module_contains(c.rows(), s)) << "case " << t;
        }
    }
}

TEST(Property, FactorThroughIsExact)
{
    random::Generator g(36);
    for (int t = 0; t < 20; ++t) {
        const LinDiffOp b = small_op(g);
        LinDiffOp q = g.op(b.nvars(), g.uniform(1, 3), b.nrows(), 1, 2, "p", "q");
        q = q.with_bundles(b.target(), q.target());
        const LinDiffOp a = compose(q, b);
        EXPECT_TRUE(compose(factor_through(a, b), b).same_matrix(a)) << "case " << t;
    }
}

TEST(Property, EulerCharacteristicIsTheRank)
{
    random::Generator g(37);
    for (int t = 0; t < 20; ++t) {
        const LinDiffOp a = small_op(g);
        const auto r = resolve_module(a.rows(), a.ncols(), a.nvars() + 1);
        ASSERT_TRUE(r.complete) << "case " << t;
        EXPECT_EQ(euler_characteristic(r), a.ncols() - fraction_rank(a.rows(), a.ncols())) << "case " << t;
        EXPECT_EQ(module_rank(a), a.ncols() - fraction_rank(a.rows(), a.ncols())) << "case " << t;
    }
}

TEST(Property, HigherExtModulesAreTorsion)
{
    random::Generator g(38);
    for (int t = 0; t < 12; ++t) {
        const LinDiffOp a = small_op(g);
        for (int i = 1; i <= a.nvars(); ++i) {
            const ExtReport e = ext_module(a, i);
            EXPECT_EQ(e.rank, 0) << "case " << t << " ext " << i;
            EXPECT_EQ(e.is_zero, ext_module(a, i, {}, true).is_zero) << "case " << t << " ext " << i;
        }
    }
}

TEST(Property, ParametrizabilityEquivalences)
{
    random::Generator g(39);
    for (int t = 0; t < 15; ++t) {
        const LinDiffOp a = small_op(g);
        const ParamReport r = param_test(a);
        EXPECT_EQ(r.parametrizable, r.ext1_zero) << "case " << t;
        EXPECT_EQ(r.parametrizable, r.torsion.empty()) << "case " << t;
        EXPECT_EQ(r.ext1_zero, ext_module(a, 1).is_zero) << "case " << t;
        if (r.parametrizable && r.parametrization.ncols() > 0) {
            EXPECT_TRUE(compose(a, r.parametrization).is_zero()) << "case " << t;
        }
        for (const auto& tg : r.torsion) {
            EXPECT_TRUE(module_contains(a.rows(), tg.annihilator * tg.residue)) << "case " << t;
            EXPECT_FALSE(module_contains(a.rows(), tg.residue)) << "case " << t;
        }
    }
}

TEST(Property, MinimalParametrizationSoundness)
{
    random::Generator g(40);
    int checked = 0;
    for (int t = 0; t < 30 && checked < 6; ++t) {
        const LinDiffOp a = g.op(3, 1, g.uniform(2, 3), 1, 2);
        if (!param_test(a).parametrizable) continue;
        const LinDiffOp m = minimal_parametrization(a);
        EXPECT_EQ(m.ncols(), a.ncols() - fraction_rank(a.rows(), a.ncols())) << "case " << t;
        EXPECT_TRUE(module_equal(cc(m).rows(), a.rows())) << "case " << t;
        ++checked;
    }
    EXPECT_GT(checked, 0);
}

TEST(Property, WeightsOnlyRescaleAdjointRows)
{
    random::Generator g(41);
    for (int t = 0; t < 20; ++t) {
        const LinDiffOp a = small_op(g);
        const LinDiffOp b = a.with_bundles(g.bundle("u", a.ncols()), g.bundle("v", a.nrows()));
        EXPECT_TRUE(module_equal(adjoint(a).rows(), rescaled_adjoint_rows(a, b))) << "case " << t;
        EXPECT_EQ(param_test(a).parametrizable, param_test(b).parametrizable) << "case " << t;
    }
}

TEST(Property, OperatorJsonRoundTrip)
{
    random::Generator g(42);
    for (int t = 0; t < 50; ++t) {
        const LinDiffOp a = small_op(g);
        const std::string text = io::dump(io::op_to_json(a));
        EXPECT_EQ(io::dump(io::op_to_json(io::op_from_json(io::Json::parse(text)).op)), text) << "case " << t;
    }
}
