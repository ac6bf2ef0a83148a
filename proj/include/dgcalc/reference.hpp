/**
 * @file reference.hpp
 * @brief Slow serial reference algorithms used to cross-check the engine.
 *
 * Textbook Buchberger over the rationals: no pair criteria besides the
 * position check, no parallelism, no integer normalization. Results are in
 * the same canonical form as reduced_groebner so they can be compared
 * bit-exactly.
 */
#pragma once

#include "dgcalc/module.hpp"

#include <vector>

namespace dgcalc::reference {

enum class Order {
    /// degrevlex, then lower position first (the public order).
    TermOverPosition,
    /// lower position first, then degrevlex.
    PositionOverTerm,
};

/// Reduced, monic Groebner basis sorted by (leading position, leading monomial).
std::vector<FreeElem> groebner(const std::vector<FreeElem>& gens, int width, Order order = Order::TermOverPosition);

/// Remainder of e modulo a Groebner basis computed by groebner() with the same order.
FreeElem reduce(const FreeElem& e, const std::vector<FreeElem>& gb, Order order = Order::TermOverPosition);

/// Syzygy generators by elimination: basis of [gens | I] in position-over-term order, rows with zero head.
std::vector<FreeElem> syzygies(const std::vector<FreeElem>& gens);

/// Rank over Q of the matrix evaluated at an integer point.
int rank_at(const std::vector<FreeElem>& rows, const std::vector<Rational>& point);

}  // namespace dgcalc::reference
