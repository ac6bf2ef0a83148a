#include "linalg.hpp"

#include <algorithm>

namespace dgcalc::detail {

SparseRow to_sparse(const FreeElem& e, const TermOrder& ord)
{
    SparseRow out;
    for (size_t j = 0; j < e.entries().size(); ++j) {
        for (const auto& [m, c] : e[j].terms()) out.emplace_back(ord.key(m, static_cast<uint32_t>(j)), c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

namespace {

/// row - f * pivot, both sorted descending.
SparseRow subtract(const SparseRow& row, const Rational& f, const SparseRow& pivot)
{
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    size_t i = 0;
    size_t j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first > pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first > row[i].first) {
            out.emplace_back(pivot[j].first, -(f * pivot[j].second));
            ++j;
        } else {
            Rational v = row[i].second - f * pivot[j].second;
            if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseRow Echelon::reduce(SparseRow row) const
{
    size_t i = 0;
    while (i < row.size()) {
        const auto it = rows_.find(row[i].first);
        if (it == rows_.end()) {
            ++i;
            continue;
        }
        row = subtract(row, row[i].second, it->second);
    }
    return row;
}

bool Echelon::insert(SparseRow row)
{
    while (!row.empty()) {
        const auto it = rows_.find(row[0].first);
        if (it == rows_.end()) {
            const Rational inv = row[0].second.inverse();
            for (auto& [k, v] : row) v *= inv;
            rows_.emplace(row[0].first, std::move(row));
            return true;
        }
        row = subtract(row, row[0].second, it->second);
    }
    return false;
}

size_t rank_of(const std::vector<SparseRow>& rows)
{
    Echelon e;
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree)
{
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    // Enumerate compositions of `degree` into nvars parts.
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            e[static_cast<size_t>(var)] = left;
            out.push_back(Monomial::from_exponents(e));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<size_t>(var)] = k;
            self(self, var + 1, left - k);
        }
    };
    rec(rec, 0, degree);
    return out;
}

}  // namespace dgcalc::detail
