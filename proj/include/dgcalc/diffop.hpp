/**
 * @file diffop.hpp
 * @brief Linear constant-coefficient differential operators as Poly matrices.
 *
 * An operator with p x m matrix R acts as eta = R(d) xi, taking sections of
 * the source bundle (m components) to the target bundle (p components). Its
 * module is M = D^(1 x m) / D^(1 x p) R, so compatibility conditions are the
 * syzygies of the rows.
 */
#pragma once

#include "dgcalc/module.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dgcalc {

class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A row of A outside the row module of B.
class NotFactorable : public std::runtime_error {
public:
    NotFactorable(int row, std::string remainder)
        : std::runtime_error("row " + std::to_string(row) + " is not in the row module; remainder " + remainder),
          row_(row),
          remainder_(std::move(remainder))
    {
    }
    [[nodiscard]] int row() const noexcept { return row_; }
    [[nodiscard]] const std::string& remainder() const noexcept { return remainder_; }

private:
    int row_;
    std::string remainder_;
};

struct Component {
    std::string label;
    /// Multiplicity in the duality pairing, e.g. 2 for an off-diagonal symmetric pair.
    Rational weight{1};

    friend bool operator==(const Component& a, const Component& b)
    {
        return a.label == b.label && a.weight == b.weight;
    }
};

class Bundle {
public:
    Bundle() = default;
    Bundle(std::string name, std::vector<Component> components);

    /// Components labelled prefix1..prefixk, all of weight 1.
    static Bundle numbered(const std::string& name, const std::string& prefix, int k);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<Component>& components() const noexcept { return components_; }
    [[nodiscard]] int dim() const noexcept { return static_cast<int>(components_.size()); }
    [[nodiscard]] int index_of(const std::string& label) const;

    friend bool operator==(const Bundle& a, const Bundle& b)
    {
        return a.name_ == b.name_ && a.components_ == b.components_;
    }

private:
    std::string name_;
    std::vector<Component> components_;
};

using SymbolMatrix = std::vector<std::vector<Rational>>;

class LinDiffOp {
public:
    LinDiffOp() = default;
    LinDiffOp(std::string name, int nvars, Bundle source, Bundle target, std::vector<FreeElem> rows);

    /// Zero operator between the bundles.
    static LinDiffOp zero(std::string name, int nvars, Bundle source, Bundle target);
    static LinDiffOp identity(int nvars, const Bundle& b);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] int nvars() const noexcept { return nvars_; }
    [[nodiscard]] const Bundle& source() const noexcept { return source_; }
    [[nodiscard]] const Bundle& target() const noexcept { return target_; }
    [[nodiscard]] const std::vector<FreeElem>& rows() const noexcept { return rows_; }
    [[nodiscard]] int nrows() const noexcept { return static_cast<int>(rows_.size()); }
    [[nodiscard]] int ncols() const noexcept { return source_.dim(); }
    [[nodiscard]] const Poly& at(int i, int j) const { return rows_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    /// Largest entry degree; -1 for the zero operator.
    [[nodiscard]] int order() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept;

    [[nodiscard]] LinDiffOp renamed(std::string name) const;
    [[nodiscard]] LinDiffOp with_bundles(Bundle source, Bundle target) const;
    /// Every entry multiplied by c.
    [[nodiscard]] LinDiffOp scaled(const Rational& c) const;
    /// Row i multiplied by factors[i].
    [[nodiscard]] LinDiffOp rows_scaled(const std::vector<Rational>& factors) const;
    /// Keeps the listed source columns, in the given order.
    [[nodiscard]] LinDiffOp columns(const std::vector<int>& keep) const;
    /// Keeps the listed rows, in the given order.
    [[nodiscard]] LinDiffOp select_rows(const std::vector<int>& keep) const;
    /// Operator whose rows are the transposed columns (used for image comparisons).
    [[nodiscard]] std::vector<FreeElem> column_rows() const;

    /// Entrywise equality of the matrices; bundles are not compared.
    [[nodiscard]] bool same_matrix(const LinDiffOp& other) const { return rows_ == other.rows_; }

private:
    std::string name_;
    int nvars_ = 1;
    Bundle source_;
    Bundle target_;
    std::vector<FreeElem> rows_;
};

/// A o B: first B, then A. Requires B.target.dim == A.source.dim.
LinDiffOp compose(const LinDiffOp& a, const LinDiffOp& b);

/// Entrywise sum; shapes must agree.
LinDiffOp add(const LinDiffOp& a, const LinDiffOp& b);

/// W_source^-1 * transpose(A(-d)) * W_target, with source and target swapped.
LinDiffOp adjoint(const LinDiffOp& a);

/// Generating compatibility conditions: minimized syzygies of the rows.
LinDiffOp cc(const LinDiffOp& a, const EngineOptions& opts = {});

/// Q with A = Q o B; throws NotFactorable with the first row outside the row module of B.
LinDiffOp factor_through(const LinDiffOp& a, const LinDiffOp& b, const EngineOptions& opts = {});

std::vector<int> order_profile(const LinDiffOp& a);

/// Full matrix evaluated at the covector k (all orders, not only the principal part).
SymbolMatrix symbol_at(const LinDiffOp& a, const std::vector<Rational>& k);

/// Homogeneous part of the given degree of every entry.
LinDiffOp homogeneous_part(const LinDiffOp& a, int degree);

}  // namespace dgcalc
