/**
 * @file duality.hpp
 * @brief Double duality: parametrizability, torsion, extension modules and minimal parametrizations.
 *
 * For an operator D1 with module M, the test runs
 *   D1 -> ad(D1) -> cc(ad(D1)) -> D = ad(cc(ad(D1))) -> D1' = cc(D).
 * D1 is parametrized by D exactly when D1 and D1' have the same row module;
 * otherwise the extra rows of D1' generate the torsion submodule of M.
 */
#pragma once

#include "dgcalc/diffop.hpp"

#include <stdexcept>
#include <vector>

namespace dgcalc {

class NotParametrizable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoMinimalSubsetFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No annihilator of a torsion residue was found within the degree budget.
class WitnessNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TorsionGenerator {
    /// Row of D1' outside the row module of D1.
    FreeElem residue;
    /// Total degree of the residue row.
    int order = 0;
    /// Nonzero a with a * residue in the row module of D1.
    Poly annihilator;
};

struct ParamReport {
    LinDiffOp input;
    LinDiffOp adjoint_cc;
    LinDiffOp parametrization;
    LinDiffOp recomputed_cc;
    bool parametrizable = false;
    std::vector<TorsionGenerator> torsion;
    bool ext1_zero = false;
    bool ext2_zero = false;
};

struct DualityOptions {
    EngineOptions engine;
    /// Largest annihilator degree tried for a torsion residue.
    int witness_degree = 6;
    /// Column subsets tried by minimal_parametrization.
    long long subset_cap = 10000;
};

ParamReport param_test(const LinDiffOp& d1, const DualityOptions& opts = {});

/// Generators of the torsion submodule of the module of d1, each with an annihilator.
std::vector<TorsionGenerator> torsion_generators(const LinDiffOp& d1, const DualityOptions& opts = {});

/// Annihilates residue modulo the row module of rows; searched up to max_degree by exact linear algebra.
Poly torsion_witness(const std::vector<FreeElem>& rows, const FreeElem& residue, int max_degree,
                     const EngineOptions& opts = {});

struct ExtReport {
    int index = 0;
    bool is_zero = false;
    /// Relations on the kernel generators; ext = D^(1 x presentation_width) / rows.
    std::vector<FreeElem> presentation;
    int presentation_width = 0;
    int rank = 0;
};

/**
 * ext^i of the module N presented by ad(a), from the transposed resolution.
 * With `redundant` every step of the resolution has each generator
 * duplicated; the verdicts must not change.
 */
ExtReport ext_module(const LinDiffOp& a, int i, const DualityOptions& opts = {}, bool redundant = false);

/// The first column subset of the parametrization, of size rank of M, that still parametrizes d1.
LinDiffOp minimal_parametrization(const LinDiffOp& d1, const DualityOptions& opts = {});

/// m - fraction rank of the rows: the rank of the module of d1.
int module_rank(const LinDiffOp& d1);

}  // namespace dgcalc
