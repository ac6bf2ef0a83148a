/**
 * @file oracle.hpp
 * @brief Dense rational linear algebra used by tests as an engine-independent check.
 *
 * Everything here works degree by degree on coefficient vectors, so it never
 * touches Groebner bases. It is slow and only meant for small systems.
 */
#pragma once

#include "dgcalc/diffop.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using dgcalc::FreeElem;
using dgcalc::Monomial;
using dgcalc::Poly;
using dgcalc::Rational;

using Matrix = std::vector<std::vector<Rational>>;

/// Row echelon form in place; returns the pivot columns.
inline std::vector<size_t> echelon(Matrix& m)
{
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Rational inv = m[r][c].inverse();
        for (auto& x : m[r]) x = x * inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (size_t k = c; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(Matrix m) { return echelon(m).size(); }

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
inline std::vector<std::vector<Rational>> nullspace(Matrix m, size_t cols)
{
    const auto pivots = echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = Rational(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<Monomial> monomials_up_to(int nvars, int degree)
{
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    // Odometer over exponent vectors with total degree <= degree.
    while (true) {
        out.push_back(Monomial::from_exponents(e));
        size_t i = 0;
        while (i < e.size()) {
            ++e[i];
            int total = 0;
            for (int x : e) total += x;
            if (total <= degree) break;
            e[i] = 0;
            ++i;
        }
        if (i == e.size()) break;
    }
    return out;
}

inline std::vector<Monomial> monomials_of(int nvars, int degree)
{
    std::vector<Monomial> out;
    for (Monomial m : monomials_up_to(nvars, degree)) {
        if (m.degree() == degree) out.push_back(m);
    }
    return out;
}

/// Coordinates (column, monomial) -> index, grown on demand.
class Coords {
public:
    size_t at(int col, Monomial m)
    {
        const auto key = std::make_pair(col, m.word());
        const auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        const size_t k = index_.size();
        index_.emplace(key, k);
        return k;
    }
    [[nodiscard]] size_t size() const { return index_.size(); }

private:
    std::map<std::pair<int, uint64_t>, size_t> index_;
};

inline std::vector<std::pair<size_t, Rational>> expand(const FreeElem& e, Coords& coords)
{
    std::vector<std::pair<size_t, Rational>> out;
    for (int c = 0; c < e.width(); ++c) {
        for (const auto& [m, q] : e[static_cast<size_t>(c)].terms()) out.emplace_back(coords.at(c, m), q);
    }
    return out;
}

/// Dense matrix whose rows are the given elements in a common coordinate system.
inline Matrix to_matrix(const std::vector<FreeElem>& elems)
{
    Coords coords;
    std::vector<std::vector<std::pair<size_t, Rational>>> sparse;
    for (const auto& e : elems) sparse.push_back(expand(e, coords));
    Matrix m(elems.size(), std::vector<Rational>(coords.size(), Rational(0)));
    for (size_t i = 0; i < sparse.size(); ++i) {
        for (const auto& [k, q] : sparse[i]) m[i][k] = m[i][k] + q;
    }
    return m;
}

/// Q-linear membership of `e` in the span of `span`.
inline bool in_span(const std::vector<FreeElem>& span, const FreeElem& e)
{
    auto all = span;
    const size_t r0 = rank(to_matrix(span));
    all.push_back(e);
    return rank(to_matrix(all)) == r0;
}

/// Shifted degree of each row when the rows are homogeneous for the given column shifts.
inline std::optional<std::vector<int>> row_degrees(const std::vector<FreeElem>& rows, const std::vector<int>& shifts)
{
    std::vector<int> out;
    for (const auto& r : rows) {
        int d = -1;
        for (int c = 0; c < r.width(); ++c) {
            const Poly& p = r[static_cast<size_t>(c)];
            for (const auto& [m, q] : p.terms()) {
                const int t = m.degree() + shifts[static_cast<size_t>(c)];
                if (d >= 0 && t != d) return std::nullopt;
                d = t;
            }
        }
        if (d < 0) return std::nullopt;
        out.push_back(d);
    }
    return out;
}

/**
 * Graded Nakayama check: a homogeneous generating set is minimal exactly when
 * no generator lies in the Q-span of the same-degree multiples of the others.
 */
inline bool graded_minimal(const std::vector<FreeElem>& rows, const std::vector<int>& shifts)
{
    const auto deg = row_degrees(rows, shifts);
    if (!deg) return false;
    const int nvars = rows.front().nvars();
    for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<FreeElem> span;
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j == i || (*deg)[j] > (*deg)[i]) continue;
            for (Monomial m : monomials_of(nvars, (*deg)[i] - (*deg)[j])) {
                span.push_back(Poly::monomial(nvars, m) * rows[j]);
            }
        }
        if (in_span(span, rows[i])) return false;
    }
    return true;
}

/**
 * All syzygies of `gens` whose coefficients have degree <= max_degree, as a
 * Q-basis, obtained from the nullspace of the coefficient map.
 */
inline std::vector<FreeElem> bounded_syzygies(const std::vector<FreeElem>& gens, int max_degree)
{
    const int nvars = gens.front().nvars();
    const auto monos = monomials_up_to(nvars, max_degree);
    Coords coords;
    std::vector<std::vector<std::pair<size_t, Rational>>> columns;
    for (const auto& g : gens) {
        for (Monomial m : monos) columns.push_back(expand(Poly::monomial(nvars, m) * g, coords));
    }
    Matrix a(coords.size(), std::vector<Rational>(columns.size(), Rational(0)));
    for (size_t j = 0; j < columns.size(); ++j) {
        for (const auto& [k, q] : columns[j]) a[k][j] = a[k][j] + q;
    }
    std::vector<FreeElem> out;
    for (const auto& v : nullspace(a, columns.size())) {
        std::vector<Poly> entries;
        for (size_t i = 0; i < gens.size(); ++i) {
            std::vector<Poly::Term> terms;
            for (size_t t = 0; t < monos.size(); ++t) {
                const Rational& q = v[i * monos.size() + t];
                if (!q.is_zero()) terms.emplace_back(monos[t], q);
            }
            entries.emplace_back(nvars, std::move(terms));
        }
        out.emplace_back(std::move(entries));
    }
    return out;
}

/// Partial derivative of a polynomial function of x1..xn.
inline Poly partial(const Poly& f, int var)
{
    std::vector<Poly::Term> out;
    for (const auto& [m, q] : f.terms()) {
        auto e = m.exponents(f.nvars());
        const int k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        --e[static_cast<size_t>(var)];
        out.emplace_back(Monomial::from_exponents(e), q * Rational(k));
    }
    return Poly(f.nvars(), std::move(out));
}

/// Applies an operator entry p(d) to a function by actual differentiation.
inline Poly apply_entry(const Poly& p, const Poly& f)
{
    Poly acc(f.nvars());
    for (const auto& [m, q] : p.terms()) {
        Poly g = f;
        for (int i = 0; i < f.nvars(); ++i) {
            for (int k = 0; k < m.exponent(i); ++k) g = partial(g, i);
        }
        acc = acc + q * g;
    }
    return acc;
}

inline std::vector<Poly> apply_op(const dgcalc::LinDiffOp& a, const std::vector<Poly>& xi)
{
    std::vector<Poly> out;
    for (int i = 0; i < a.nrows(); ++i) {
        Poly acc(a.nvars());
        for (int j = 0; j < a.ncols(); ++j) acc = acc + apply_entry(a.at(i, j), xi[static_cast<size_t>(j)]);
        out.push_back(acc);
    }
    return out;
}

/// Dimension of the space of polynomial solutions of degree <= max_degree.
inline size_t solution_dim(const dgcalc::LinDiffOp& a, int max_degree)
{
    const int n = a.nvars();
    const auto monos = monomials_up_to(n, max_degree);
    std::vector<FreeElem> images;
    for (int j = 0; j < a.ncols(); ++j) {
        for (Monomial m : monos) {
            std::vector<Poly> xi(static_cast<size_t>(a.ncols()), Poly(n));
            xi[static_cast<size_t>(j)] = Poly::monomial(n, m);
            images.emplace_back(apply_op(a, xi));
        }
    }
    return images.size() - rank(to_matrix(images));
}

}  // namespace oracle
