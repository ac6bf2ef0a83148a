// Sparse exact linear algebra over the rationals, used by the graded checks.
#pragma once

#include "dgcalc/module.hpp"
#include "engine.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dgcalc::detail {

using Key = unsigned __int128;

/// Entries sorted by key, descending; no zeros.
using SparseRow = std::vector<std::pair<Key, Rational>>;

SparseRow to_sparse(const FreeElem& e, const TermOrder& ord);

/// Row echelon form grown one row at a time.
class Echelon {
public:
    /// Adds the row; returns false when it was already in the span.
    bool insert(SparseRow row);
    [[nodiscard]] size_t rank() const noexcept { return rows_.size(); }
    /// Reduces the row against the stored pivots.
    [[nodiscard]] SparseRow reduce(SparseRow row) const;

private:
    std::map<Key, SparseRow> rows_;
};

size_t rank_of(const std::vector<SparseRow>& rows);

std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace dgcalc::detail
