#include "dgcalc/diffop.hpp"

#include <algorithm>
#include <set>

namespace dgcalc {

Bundle::Bundle(std::string name, std::vector<Component> components)
    : name_(std::move(name)), components_(std::move(components))
{
    std::set<std::string> seen;
    for (const auto& c : components_) {
        if (!seen.insert(c.label).second) throw std::invalid_argument("duplicate component label " + c.label);
        if (c.weight.sign() <= 0) throw std::invalid_argument("component weights must be positive");
    }
}

Bundle Bundle::numbered(const std::string& name, const std::string& prefix, int k)
{
    std::vector<Component> comps;
    for (int i = 1; i <= k; ++i) comps.push_back({prefix + std::to_string(i), Rational(1)});
    return {name, std::move(comps)};
}

int Bundle::index_of(const std::string& label) const
{
    for (size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].label == label) return static_cast<int>(i);
    }
    throw std::out_of_range("no component " + label + " in bundle " + name_);
}

LinDiffOp::LinDiffOp(std::string name, int nvars, Bundle source, Bundle target, std::vector<FreeElem> rows)
    : name_(std::move(name)), nvars_(nvars), source_(std::move(source)), target_(std::move(target)),
      rows_(std::move(rows))
{
    if (static_cast<int>(rows_.size()) != target_.dim()) {
        throw ShapeMismatch("operator " + name_ + " has " + std::to_string(rows_.size()) +
                            " rows but its target has dimension " + std::to_string(target_.dim()));
    }
    for (const auto& r : rows_) {
        if (r.width() != source_.dim()) {
            throw ShapeMismatch("operator " + name_ + " has a row of width " + std::to_string(r.width()) +
                                " but its source has dimension " + std::to_string(source_.dim()));
        }
        for (const auto& p : r.entries()) {
            if (p.nvars() != nvars_) throw RingMismatch("operator " + name_ + " mixes rings");
        }
    }
}

LinDiffOp LinDiffOp::zero(std::string name, int nvars, Bundle source, Bundle target)
{
    std::vector<FreeElem> rows(static_cast<size_t>(target.dim()), FreeElem(nvars, source.dim()));
    return {std::move(name), nvars, std::move(source), std::move(target), std::move(rows)};
}

LinDiffOp LinDiffOp::identity(int nvars, const Bundle& b)
{
    std::vector<FreeElem> rows;
    for (int i = 0; i < b.dim(); ++i) rows.push_back(FreeElem::unit(nvars, b.dim(), i));
    return {"id", nvars, b, b, std::move(rows)};
}

int LinDiffOp::order() const noexcept
{
    int d = -1;
    for (const auto& r : rows_) d = std::max(d, r.degree());
    return d;
}

bool LinDiffOp::is_zero() const noexcept
{
    return std::all_of(rows_.begin(), rows_.end(), [](const FreeElem& r) { return r.is_zero(); });
}

LinDiffOp LinDiffOp::renamed(std::string name) const
{
    LinDiffOp r = *this;
    r.name_ = std::move(name);
    return r;
}

LinDiffOp LinDiffOp::with_bundles(Bundle source, Bundle target) const
{
    return {name_, nvars_, std::move(source), std::move(target), rows_};
}

LinDiffOp LinDiffOp::scaled(const Rational& c) const
{
    LinDiffOp r = *this;
    const Poly pc(nvars_, c);
    for (auto& row : r.rows_) row = pc * row;
    return r;
}

LinDiffOp LinDiffOp::rows_scaled(const std::vector<Rational>& factors) const
{
    if (factors.size() != rows_.size()) throw ShapeMismatch("one factor per row expected");
    LinDiffOp r = *this;
    for (size_t i = 0; i < factors.size(); ++i) r.rows_[i] = Poly(nvars_, factors[i]) * r.rows_[i];
    return r;
}

LinDiffOp LinDiffOp::columns(const std::vector<int>& keep) const
{
    std::vector<Component> comps;
    for (const int j : keep) comps.push_back(source_.components().at(static_cast<size_t>(j)));
    std::vector<FreeElem> rows;
    for (const auto& row : rows_) {
        std::vector<Poly> e;
        for (const int j : keep) e.push_back(row[static_cast<size_t>(j)]);
        rows.push_back(e.empty() ? FreeElem(nvars_, 0) : FreeElem(std::move(e)));
    }
    return {name_, nvars_, Bundle(source_.name(), std::move(comps)), target_, std::move(rows)};
}

LinDiffOp LinDiffOp::select_rows(const std::vector<int>& keep) const
{
    std::vector<Component> comps;
    std::vector<FreeElem> rows;
    for (const int i : keep) {
        comps.push_back(target_.components().at(static_cast<size_t>(i)));
        rows.push_back(rows_.at(static_cast<size_t>(i)));
    }
    return {name_, nvars_, source_, Bundle(target_.name(), std::move(comps)), std::move(rows)};
}

std::vector<FreeElem> LinDiffOp::column_rows() const
{
    std::vector<FreeElem> out;
    for (int j = 0; j < ncols(); ++j) {
        std::vector<Poly> e;
        for (const auto& row : rows_) e.push_back(row[static_cast<size_t>(j)]);
        out.push_back(e.empty() ? FreeElem(nvars_, 0) : FreeElem(std::move(e)));
    }
    return out;
}

LinDiffOp compose(const LinDiffOp& a, const LinDiffOp& b)
{
    if (b.target().dim() != a.source().dim()) {
        throw ShapeMismatch("cannot compose " + a.name() + " after " + b.name() + ": dimensions " +
                            std::to_string(b.target().dim()) + " and " + std::to_string(a.source().dim()));
    }
    if (a.nvars() != b.nvars()) throw RingMismatch("operators live in different rings");
    std::vector<FreeElem> rows;
    for (const auto& ar : a.rows()) rows.push_back(combine_rows(ar.entries(), b.rows(), b.source().dim()));
    return {a.name() + "*" + b.name(), a.nvars(), b.source(), a.target(), std::move(rows)};
}

LinDiffOp add(const LinDiffOp& a, const LinDiffOp& b)
{
    if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) throw ShapeMismatch("cannot add operators of different shapes");
    std::vector<FreeElem> rows;
    for (int i = 0; i < a.nrows(); ++i) rows.push_back(a.rows()[static_cast<size_t>(i)] + b.rows()[static_cast<size_t>(i)]);
    return {a.name() + "+" + b.name(), a.nvars(), a.source(), a.target(), std::move(rows)};
}

LinDiffOp adjoint(const LinDiffOp& a)
{
    const int p = a.nrows();
    const int m = a.ncols();
    std::vector<FreeElem> rows;
    for (int j = 0; j < m; ++j) {
        const Rational inv = a.source().components()[static_cast<size_t>(j)].weight.inverse();
        std::vector<Poly> e;
        for (int i = 0; i < p; ++i) {
            const Rational f = inv * a.target().components()[static_cast<size_t>(i)].weight;
            e.push_back(f * a.at(i, j).negate_vars());
        }
        rows.push_back(e.empty() ? FreeElem(a.nvars(), 0) : FreeElem(std::move(e)));
    }
    std::string name = a.name();
    if (name.rfind("ad(", 0) == 0 && name.back() == ')') {
        name = name.substr(3, name.size() - 4);
    } else {
        name = "ad(" + name + ")";
    }
    return {std::move(name), a.nvars(), a.target(), a.source(), std::move(rows)};
}

LinDiffOp cc(const LinDiffOp& a, const EngineOptions& opts)
{
    std::vector<FreeElem> rows;
    if (a.nrows() > 0) rows = syzygies(a.rows(), opts);
    const int k = static_cast<int>(rows.size());
    return {"cc(" + a.name() + ")", a.nvars(), a.target(), Bundle::numbered("cc", "z", k), std::move(rows)};
}

LinDiffOp factor_through(const LinDiffOp& a, const LinDiffOp& b, const EngineOptions& opts)
{
    if (a.ncols() != b.ncols()) throw ShapeMismatch("factor_through needs operators on the same source");
    EngineOptions o = opts;
    o.track = true;
    const GroebnerBasis gb = reduced_groebner(b.rows(), b.ncols(), {}, o);
    std::vector<FreeElem> q;
    for (int i = 0; i < a.nrows(); ++i) {
        const FreeElem& row = a.rows()[static_cast<size_t>(i)];
        auto coeffs = lift(row, gb);
        if (!coeffs) throw NotFactorable(i, normal_form(row, gb).str());
        q.push_back(coeffs->empty() ? FreeElem(a.nvars(), 0) : FreeElem(std::move(*coeffs)));
    }
    LinDiffOp out("Q", a.nvars(), b.target(), a.target(), std::move(q));
    if (!compose(out, b).same_matrix(a)) throw std::logic_error("factorization failed its exact check");
    return out;
}

std::vector<int> order_profile(const LinDiffOp& a) { return order_profile(a.rows()); }

SymbolMatrix symbol_at(const LinDiffOp& a, const std::vector<Rational>& k)
{
    if (static_cast<int>(k.size()) != a.nvars()) {
        throw ShapeMismatch("covector has " + std::to_string(k.size()) + " entries, ring has " +
                            std::to_string(a.nvars()) + " variables");
    }
    SymbolMatrix out;
    for (const auto& row : a.rows()) {
        std::vector<Rational> r;
        for (const auto& p : row.entries()) r.push_back(p.evaluate(k));
        out.push_back(std::move(r));
    }
    return out;
}

LinDiffOp homogeneous_part(const LinDiffOp& a, int degree)
{
    std::vector<FreeElem> rows;
    for (const auto& row : a.rows()) {
        std::vector<Poly> e;
        for (const auto& p : row.entries()) e.push_back(p.homogeneous_part(degree));
        rows.push_back(e.empty() ? FreeElem(a.nvars(), 0) : FreeElem(std::move(e)));
    }
    return {a.name(), a.nvars(), a.source(), a.target(), std::move(rows)};
}

}  // namespace dgcalc
