/**
 * @file random.hpp
 * @brief Seeded generators of small polynomials and operators for property checks.
 */
#pragma once

#include "dgcalc/diffop.hpp"

#include <cstdint>
#include <random>

namespace dgcalc::random {

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational coefficient()
    {
        int num = uniform(-5, 5);
        if (num == 0) num = 1;
        return Rational(num, uniform(1, 3));
    }

    Monomial monomial(int nvars, int degree)
    {
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        for (int k = 0; k < degree; ++k) ++e[static_cast<size_t>(uniform(0, nvars - 1))];
        return Monomial::from_exponents(e);
    }

    /// Up to max_terms terms of degree <= max_degree; exactly `degree` when homogeneous >= 0.
    Poly poly(int nvars, int max_degree, int max_terms, int homogeneous = -1)
    {
        std::vector<Poly::Term> terms;
        const int k = uniform(0, max_terms);
        for (int t = 0; t < k; ++t) {
            const int deg = homogeneous >= 0 ? homogeneous : uniform(0, max_degree);
            terms.emplace_back(monomial(nvars, deg), coefficient());
        }
        return Poly(nvars, std::move(terms));
    }

    FreeElem elem(int nvars, int width, int max_degree, int max_terms)
    {
        std::vector<Poly> e;
        for (int j = 0; j < width; ++j) e.push_back(poly(nvars, max_degree, max_terms));
        return FreeElem(std::move(e));
    }

    /// Row with every entry homogeneous of degree `degree` (zero entries allowed).
    FreeElem homogeneous_elem(int nvars, int width, int degree, int max_terms)
    {
        std::vector<Poly> e;
        for (int j = 0; j < width; ++j) e.push_back(poly(nvars, degree, max_terms, degree));
        return FreeElem(std::move(e));
    }

    std::vector<FreeElem> rows(int nvars, int count, int width, int max_degree, int max_terms)
    {
        std::vector<FreeElem> out;
        for (int i = 0; i < count; ++i) out.push_back(elem(nvars, width, max_degree, max_terms));
        return out;
    }

    Bundle bundle(const std::string& prefix, int dim)
    {
        std::vector<Component> comps;
        for (int i = 0; i < dim; ++i) comps.push_back({prefix + std::to_string(i + 1), Rational(uniform(1, 3))});
        return {prefix, std::move(comps)};
    }

    /// Operator with random weights on both bundles.
    LinDiffOp op(int nvars, int nrows, int ncols, int max_degree, int max_terms, const std::string& src = "x",
                 const std::string& tgt = "y")
    {
        return {"random", nvars, bundle(src, ncols), bundle(tgt, nrows), rows(nvars, nrows, ncols, max_degree, max_terms)};
    }

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace dgcalc::random
