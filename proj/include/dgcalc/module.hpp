/**
 * @file module.hpp
 * @brief Submodules of free modules D^(1 x m): Groebner bases, membership,
 *        syzygies, ranks and free resolutions.
 *
 * Module elements are rows. Terms are ordered by degrevlex on the monomial
 * with term-over-position tie breaking (a lower column index ranks higher).
 * All user-facing values carry exact rational coefficients; internally the
 * engine works with integer-primitive rows.
 */
#pragma once

#include "dgcalc/poly.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgcalc {

class WidthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Groebner computation needed a pair of degree above the configured cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Element of D^(1 x width).
class FreeElem {
public:
    FreeElem() = default;
    /// Zero element.
    FreeElem(int nvars, int width);
    explicit FreeElem(std::vector<Poly> entries);

    static FreeElem unit(int nvars, int width, int index);

    [[nodiscard]] int nvars() const noexcept { return nvars_; }
    [[nodiscard]] int width() const noexcept { return static_cast<int>(entries_.size()); }
    [[nodiscard]] const std::vector<Poly>& entries() const noexcept { return entries_; }
    [[nodiscard]] const Poly& operator[](size_t i) const { return entries_[i]; }
    Poly& operator[](size_t i) { return entries_[i]; }

    [[nodiscard]] bool is_zero() const noexcept;
    /// Largest total degree of an entry; -1 for the zero element.
    [[nodiscard]] int degree() const noexcept;
    /// "[p1, p2, ...]" with canonical polynomial strings.
    [[nodiscard]] std::string str() const;

    /// Rescales to integer coefficients with unit content and a positive leading coefficient.
    [[nodiscard]] FreeElem primitive() const;

    friend FreeElem operator+(const FreeElem& a, const FreeElem& b);
    friend FreeElem operator-(const FreeElem& a, const FreeElem& b);
    friend FreeElem operator*(const Poly& p, const FreeElem& a);
    friend bool operator==(const FreeElem& a, const FreeElem& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const FreeElem& a, const FreeElem& b) { return !(a == b); }

private:
    int nvars_ = 1;
    std::vector<Poly> entries_;
};

/// Sum of coeffs[i] * rows[i].
FreeElem combine_rows(const std::vector<Poly>& coeffs, const std::vector<FreeElem>& rows, int width);

/// Module order. Shifts give column degrees; all-zero shifts is plain term-over-position degrevlex.
struct ModuleOrder {
    std::vector<int> shifts;
};

/// Knobs shared by every Groebner-based routine.
struct EngineOptions {
    /// Worker threads for the S-pair batches; 0 keeps the OpenMP default.
    int threads = 0;
    /// Cap on the degree of an S-pair lcm; <= 0 reads DGCALC_BUDGET_DEGREE (default 12).
    int max_degree = 0;
    /// Reduce each batch sequentially without OpenMP.
    bool serial = false;
    /// Record input coordinates of the basis so that lift() works.
    bool track = false;
};

/// Degree cap after resolving the environment override.
int effective_max_degree(const EngineOptions& opts);

namespace detail {
struct GbData;
}

class GroebnerBasis {
public:
    GroebnerBasis() = default;

    [[nodiscard]] int nvars() const noexcept { return nvars_; }
    [[nodiscard]] int width() const noexcept { return width_; }
    /// Reduced and monic, sorted by (leading position, leading monomial) ascending.
    [[nodiscard]] const std::vector<FreeElem>& generators() const noexcept { return gens_; }
    [[nodiscard]] size_t size() const noexcept { return gens_.size(); }
    [[nodiscard]] const ModuleOrder& order() const noexcept { return order_; }
    /// Leading column of each generator, aligned with generators().
    [[nodiscard]] const std::vector<int>& leading_positions() const noexcept { return lead_pos_; }

    [[nodiscard]] std::string str() const;

private:
    friend GroebnerBasis reduced_groebner(const std::vector<FreeElem>&, int, const ModuleOrder&,
                                          const EngineOptions&);
    friend FreeElem normal_form(const FreeElem&, const GroebnerBasis&);
    friend std::optional<std::vector<Poly>> lift(const FreeElem&, const GroebnerBasis&);

    int nvars_ = 1;
    int width_ = 0;
    ModuleOrder order_;
    std::vector<FreeElem> gens_;
    std::vector<int> lead_pos_;
    std::shared_ptr<const detail::GbData> data_;
};

/// Reduced Groebner basis of the row module. `width` is needed only when gens is empty.
GroebnerBasis reduced_groebner(const std::vector<FreeElem>& gens, int width = -1, const ModuleOrder& order = {},
                               const EngineOptions& opts = {});

/// Fully reduced remainder of e; e - normal_form(e) lies in the module.
FreeElem normal_form(const FreeElem& e, const GroebnerBasis& gb);

/// Coefficients c over the input generators of `gb` with e = sum c_i gens_i, if e is in the module.
std::optional<std::vector<Poly>> lift(const FreeElem& e, const GroebnerBasis& gb);

bool module_contains(const std::vector<FreeElem>& gens, const FreeElem& e, const EngineOptions& opts = {});
bool module_equal(const std::vector<FreeElem>& a, const std::vector<FreeElem>& b, const EngineOptions& opts = {});

/// Minimized generating set of the syzygy module of gens (relations among the rows).
std::vector<FreeElem> syzygies(const std::vector<FreeElem>& gens, const EngineOptions& opts = {});

/// Syzygies straight out of the Schreyer lifting: deduplicated, primitive, not minimized.
std::vector<FreeElem> raw_syzygies(const std::vector<FreeElem>& gens, const EngineOptions& opts = {});

/**
 * Drops redundant generators. Elements are visited in (total degree, string)
 * order and an element is dropped when it lies in the module of the others
 * that are still present. The survivors are returned primitive, sorted by
 * leading term ascending in the module order, ties by string.
 */
std::vector<FreeElem> minimize_generators(const std::vector<FreeElem>& gens, const EngineOptions& opts = {});

/// Elements of `extra` that are needed on top of `base`, by the same greedy rule.
std::vector<FreeElem> minimize_relative(const std::vector<FreeElem>& base, const std::vector<FreeElem>& extra,
                                        const EngineOptions& opts = {});

/// Rank over the fraction field of D, by fraction-free elimination.
int fraction_rank(const std::vector<FreeElem>& rows, int width = -1);

/// Same rank read off a Groebner basis: the number of columns hit by a leading term.
int fraction_rank_gb(const std::vector<FreeElem>& rows, int width = -1, const EngineOptions& opts = {});

struct Resolution {
    int nvars = 1;
    /// Width of the free module the first matrix acts on.
    int source_width = 0;
    /// steps[0] are the input rows; steps[k+1] are the minimized syzygies of steps[k].
    std::vector<std::vector<FreeElem>> steps;
    /// Row counts of each step.
    std::vector<int> dims;
    /// Sorted total degrees of the rows of each step.
    std::vector<std::vector<int>> orders;
    /// True when the last computed syzygy module is zero.
    bool complete = false;
    /// True when max_steps stopped the iteration first.
    bool truncated = false;
};

/// Iterated minimized syzygies until they vanish or max_steps matrices exist.
Resolution resolve_module(const std::vector<FreeElem>& rows, int width, int max_steps,
                          const EngineOptions& opts = {});

/// sum (-1)^r rank F_r including the source module F_0.
int euler_characteristic(const Resolution& r);

/**
 * Checks exactness of F_{k+1} -> F_k -> F_{k-1} in graded degree e by exact
 * linear algebra. Requires homogeneous rows. Returns the difference between
 * the kernel dimension and the image dimension (0 means exact there).
 */
int graded_exactness_defect(const std::vector<FreeElem>& rows, const std::vector<FreeElem>& next, int width,
                            int degree);

/// Sorted total degrees of the rows.
std::vector<int> order_profile(const std::vector<FreeElem>& rows);

/// Column shifts making every row homogeneous, if such shifts exist.
std::optional<std::vector<int>> homogenizing_shifts(const std::vector<FreeElem>& rows, int width);

}  // namespace dgcalc
