// Internal Groebner engine shared by the module-level routines.
#pragma once

#include "dgcalc/bigint.hpp"
#include "dgcalc/module.hpp"
#include "dgcalc/monomial.hpp"
#include "dgcalc/rational.hpp"

#include <cstdint>
#include <vector>

namespace dgcalc::detail {

struct Term {
    Monomial m;
    uint32_t pos = 0;
    Int c;
};

/// Sparse row with integer coefficients, terms sorted descending in the order.
using IVec = std::vector<Term>;

class TermOrder {
public:
    TermOrder() = default;
    explicit TermOrder(std::vector<int> shifts) : shifts_(std::move(shifts)) {}

    [[nodiscard]] int shift(uint32_t pos) const noexcept
    {
        return pos < shifts_.size() ? shifts_[pos] : 0;
    }
    [[nodiscard]] int wdeg(Monomial m, uint32_t pos) const noexcept { return m.degree() + shift(pos); }

    /// Sort key; larger key means larger term.
    [[nodiscard]] unsigned __int128 key(Monomial m, uint32_t pos) const noexcept
    {
        const auto wd = static_cast<uint64_t>(wdeg(m, pos) + 128);
        const uint64_t w = m.word();
        const uint64_t hi = (wd << 48) | ((w >> 56) << 40) | (0xFFFFFFFFFFULL & ~(w >> 16));
        const uint64_t lo = ((~w & 0xFFFFULL) << 48) | (0xFFFFFFFFULL - pos);
        return (static_cast<unsigned __int128>(hi) << 64) | lo;
    }
    [[nodiscard]] int compare(Monomial am, uint32_t ap, Monomial bm, uint32_t bp) const noexcept
    {
        const auto ka = key(am, ap);
        const auto kb = key(bm, bp);
        return ka == kb ? 0 : (ka > kb ? 1 : -1);
    }
    [[nodiscard]] const std::vector<int>& shifts() const noexcept { return shifts_; }

private:
    std::vector<int> shifts_;
};

/// beta*h - alpha*mult*g, merged in order.
IVec axpy(const Int& beta, const IVec& h, const Int& alpha, Monomial mult, const IVec& g, const TermOrder& ord);
/// Non-negative gcd of all coefficients.
Int content(const IVec& v);
void divide_exact(IVec& v, const Int& c);
IVec scale(const IVec& v, const Int& c);
IVec shifted(const IVec& v, Monomial mult);
/// Resorts terms (used after changing the order).
void sort_terms(IVec& v, const TermOrder& ord);
/// Highest weighted degree of any term; -1 for zero.
int max_wdeg(const IVec& v, const TermOrder& ord);

/// Clears denominators; returns the scale s with v = s * e as (num, den).
IVec to_ivec(const FreeElem& e, const TermOrder& ord, Int* num = nullptr, Int* den = nullptr);
FreeElem to_free(const IVec& v, int nvars, int width, const Rational& scale = Rational(1));

/// One basis element; when tracking, t . inputs = den * v.
struct Elem {
    IVec v;
    IVec t;
    Int den{1};
    int sugar = 0;
    bool redundant = false;
};

struct Pair {
    int i = -1;  // -1 marks an input pseudo-pair; j is then the input index
    int j = -1;
    Monomial lcm;
    uint32_t pos = 0;
    int sugar = 0;
};

struct EngineStats {
    size_t pairs_reduced = 0;
    size_t zero_reductions = 0;
    size_t batches = 0;
};

/// Buchberger with sugar batches, Gebauer-Moeller pair pruning and optional tracking.
class Engine {
public:
    Engine(int nvars, int width, TermOrder order, const EngineOptions& opts, bool track);

    /// Runs to completion on the inputs (already integer rows).
    void run(std::vector<IVec> inputs);

    [[nodiscard]] const std::vector<Elem>& elems() const noexcept { return elems_; }
    /// Tracking vectors of every zero reduction (relations among the inputs).
    [[nodiscard]] const std::vector<IVec>& zero_relations() const noexcept { return zero_rel_; }
    /// Indices of the non-redundant elements, i.e. a minimal Groebner basis.
    [[nodiscard]] std::vector<int> minimal_basis() const;
    [[nodiscard]] const TermOrder& order() const noexcept { return ord_; }
    [[nodiscard]] const EngineStats& stats() const noexcept { return stats_; }
    [[nodiscard]] int width() const noexcept { return width_; }
    [[nodiscard]] int nvars() const noexcept { return nvars_; }

    /// Interreduces the minimal basis in place and returns it sorted ascending by leading term.
    std::vector<int> reduce_basis();

private:
    Elem make_spair(const Pair& p) const;
    /// Top-reduces (and optionally tail-reduces) e against elements [0, limit).
    /// With skip_lead the leading term is kept and only the tail is reduced.
    void reduce(Elem& e, size_t limit, bool tail, bool skip_lead = false) const;
    int find_reducer(Monomial m, uint32_t pos, size_t limit) const;
    void normalize(Elem& e) const;
    void insert(Elem e);
    void record_zero(Elem& e);

    int nvars_;
    int width_;
    TermOrder ord_;
    EngineOptions opts_;
    int max_degree_;
    bool track_;

    std::vector<Elem> elems_;
    std::vector<std::vector<int>> by_pos_;
    std::vector<Pair> pairs_;
    std::vector<IVec> inputs_;
    std::vector<IVec> zero_rel_;
    EngineStats stats_;
};

/// Immutable reduced basis plus what is needed for division and lifting.
struct GbData {
    TermOrder order;
    std::vector<IVec> basis;       // integer-primitive, aligned with the public generators
    std::vector<IVec> tracking;    // tracking over the inputs, when recorded
    std::vector<Int> den;          // tracking denominators
    std::vector<std::vector<int>> by_pos;
    std::vector<Rational> input_scale;  // engine row i = input_scale[i] * caller row i
    int ninputs = 0;
};

/// v = rem_scale * remainder + (sum_k quotients_k * basis_k) / quot_den.
struct Division {
    IVec remainder;
    Rational rem_scale{1};
    IVec quotients;  // pos indexes the basis element
    Int quot_den{1};
};

Division divide(const IVec& v, const GbData& gb, bool want_quotients);

}  // namespace dgcalc::detail
