#include "dgcalc/module.hpp"

#include "engine.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dgcalc {

using detail::Engine;
using detail::GbData;
using detail::IVec;
using detail::TermOrder;

// ---------------------------------------------------------------------------
// FreeElem

FreeElem::FreeElem(int nvars, int width) : nvars_(nvars)
{
    if (width < 0) throw std::invalid_argument("negative width");
    entries_.assign(static_cast<size_t>(width), Poly(nvars));
}

FreeElem::FreeElem(std::vector<Poly> entries) : entries_(std::move(entries))
{
    if (!entries_.empty()) nvars_ = entries_[0].nvars();
    for (const auto& p : entries_) {
        if (p.nvars() != nvars_) throw RingMismatch("row entries live in different rings");
    }
}

FreeElem FreeElem::unit(int nvars, int width, int index)
{
    FreeElem e(nvars, width);
    e.entries_.at(static_cast<size_t>(index)) = Poly(nvars, Rational(1));
    return e;
}

bool FreeElem::is_zero() const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

int FreeElem::degree() const noexcept
{
    int d = -1;
    for (const auto& p : entries_) d = std::max(d, p.degree());
    return d;
}

std::string FreeElem::str() const
{
    std::string out = "[";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) out += ", ";
        out += entries_[i].str();
    }
    out += ']';
    return out;
}

FreeElem FreeElem::primitive() const
{
    if (is_zero()) return *this;
    const TermOrder plain;
    const IVec v = detail::to_ivec(*this, plain);
    const Rational sign(v[0].c.sign() < 0 ? -1 : 1);
    return detail::to_free(v, nvars_, width(), sign);
}

FreeElem operator+(const FreeElem& a, const FreeElem& b)
{
    if (a.width() != b.width()) throw WidthMismatch("row widths differ");
    FreeElem r = a;
    for (size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
    return r;
}

FreeElem operator-(const FreeElem& a, const FreeElem& b)
{
    if (a.width() != b.width()) throw WidthMismatch("row widths differ");
    FreeElem r = a;
    for (size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
    return r;
}

FreeElem operator*(const Poly& p, const FreeElem& a)
{
    FreeElem r = a;
    for (auto& e : r.entries_) e = p * e;
    return r;
}

FreeElem combine_rows(const std::vector<Poly>& coeffs, const std::vector<FreeElem>& rows, int width)
{
    if (coeffs.size() != rows.size()) throw WidthMismatch("coefficient count differs from row count");
    const int nvars = rows.empty() ? (coeffs.empty() ? 1 : coeffs[0].nvars()) : rows[0].nvars();
    FreeElem acc(nvars, width);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        acc = acc + coeffs[i] * rows[i];
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Shared helpers

int effective_max_degree(const EngineOptions& opts)
{
    if (opts.max_degree > 0) return opts.max_degree;
    if (const char* env = std::getenv("DGCALC_BUDGET_DEGREE")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 12;
}

namespace {

struct Shape {
    int nvars = 1;
    int width = 0;
};

Shape shape_of(const std::vector<FreeElem>& gens, int width)
{
    Shape s;
    if (!gens.empty()) {
        s.nvars = gens[0].nvars();
        s.width = gens[0].width();
    }
    if (width >= 0) {
        if (!gens.empty() && s.width != width) throw WidthMismatch("rows do not have the declared width");
        s.width = width;
    }
    for (const auto& g : gens) {
        if (g.width() != s.width) throw WidthMismatch("rows of different widths");
        if (g.nvars() != s.nvars && g.width() > 0) throw RingMismatch("rows live in different rings");
    }
    return s;
}

/// Internal order used for speed: weighted by homogenizing shifts when they exist.
TermOrder working_order(const std::vector<FreeElem>& gens, int width)
{
    if (auto s = homogenizing_shifts(gens, width)) return TermOrder(std::move(*s));
    return TermOrder();
}

struct Built {
    std::vector<IVec> rows;
    std::vector<Rational> scale;  // rows[k] = scale[k] * gens[k]
};

Built build_inputs(const std::vector<FreeElem>& gens, const TermOrder& ord)
{
    Built b;
    for (const auto& g : gens) {
        Int num;
        Int den;
        b.rows.push_back(detail::to_ivec(g, ord, &num, &den));
        b.scale.emplace_back(num, den);
    }
    return b;
}

std::shared_ptr<GbData> make_gbdata(Engine& eng, const std::vector<int>& basis, const std::vector<Rational>& scale,
                                    bool track)
{
    auto data = std::make_shared<GbData>();
    data->order = eng.order();
    data->by_pos.resize(static_cast<size_t>(eng.width()));
    data->ninputs = static_cast<int>(scale.size());
    for (const int idx : basis) {
        const auto& e = eng.elems()[static_cast<size_t>(idx)];
        data->by_pos[e.v[0].pos].push_back(static_cast<int>(data->basis.size()));
        data->basis.push_back(e.v);
        if (track) {
            data->tracking.push_back(e.t);
            data->den.push_back(e.den);
        }
    }
    return data;
}

/// Internal basis for membership and normal forms, in the working order.
std::shared_ptr<GbData> working_basis(const std::vector<FreeElem>& gens, int width, const TermOrder& ord,
                                      const EngineOptions& opts)
{
    const Shape s = shape_of(gens, width);
    Built in = build_inputs(gens, ord);
    Engine eng(s.nvars, s.width, ord, opts, false);
    eng.run(std::move(in.rows));
    const std::vector<int> basis = eng.reduce_basis();
    return make_gbdata(eng, basis, in.scale, false);
}

bool reduces_to_zero(const FreeElem& e, const GbData& gb)
{
    if (e.is_zero()) return true;
    const IVec v = detail::to_ivec(e, gb.order);
    return detail::divide(v, gb, false).remainder.empty();
}

std::string canonical(const FreeElem& e) { return e.str(); }

}  // namespace

// ---------------------------------------------------------------------------
// Groebner bases

std::string GroebnerBasis::str() const
{
    std::string out;
    for (const auto& g : gens_) {
        out += g.str();
        out += '\n';
    }
    return out;
}

GroebnerBasis reduced_groebner(const std::vector<FreeElem>& gens, int width, const ModuleOrder& order,
                               const EngineOptions& opts)
{
    const Shape s = shape_of(gens, width);
    GroebnerBasis gb;
    gb.nvars_ = s.nvars;
    gb.width_ = s.width;
    gb.order_ = order;
    const TermOrder ord(order.shifts);
    Built in = build_inputs(gens, ord);
    Engine eng(s.nvars, s.width, ord, opts, opts.track);
    eng.run(std::move(in.rows));
    std::vector<int> basis = eng.reduce_basis();
    std::sort(basis.begin(), basis.end(), [&](int a, int b) {
        const auto& ta = eng.elems()[static_cast<size_t>(a)].v[0];
        const auto& tb = eng.elems()[static_cast<size_t>(b)].v[0];
        if (ta.pos != tb.pos) return ta.pos < tb.pos;
        return Monomial::compare(ta.m, tb.m) < 0;
    });
    auto data = make_gbdata(eng, basis, in.scale, opts.track);
    data->input_scale = in.scale;
    for (const auto& v : data->basis) {
        const Rational lc(v[0].c);
        gb.gens_.push_back(detail::to_free(v, s.nvars, s.width, lc.inverse()));
        gb.lead_pos_.push_back(static_cast<int>(v[0].pos));
    }
    gb.data_ = std::move(data);
    return gb;
}

FreeElem normal_form(const FreeElem& e, const GroebnerBasis& gb)
{
    if (e.width() != gb.width_) throw WidthMismatch("element width differs from the basis width");
    if (!gb.data_ || gb.data_->basis.empty() || e.is_zero()) return e;
    Int num;
    Int den;
    const IVec v = detail::to_ivec(e, gb.data_->order, &num, &den);
    const auto div = detail::divide(v, *gb.data_, false);
    // v = (num/den) e, so NF(e) = (den/num) * rem_scale * remainder.
    return detail::to_free(div.remainder, gb.nvars_, gb.width_, Rational(den, num) * div.rem_scale);
}

std::optional<std::vector<Poly>> lift(const FreeElem& e, const GroebnerBasis& gb)
{
    if (e.width() != gb.width_) throw WidthMismatch("element width differs from the basis width");
    if (!gb.data_) throw std::logic_error("basis carries no data");
    const GbData& data = *gb.data_;
    const auto n = static_cast<size_t>(data.ninputs);
    std::vector<Poly> coeffs(n, Poly(gb.nvars_));
    if (e.is_zero()) return coeffs;
    if (data.tracking.size() != data.basis.size()) throw std::logic_error("basis was built without tracking");
    Int num;
    Int den;
    const IVec v = detail::to_ivec(e, data.order, &num, &den);
    const auto div = detail::divide(v, data, true);
    if (!div.remainder.empty()) return std::nullopt;
    // v = sum_k (q_k / quot_den) b_k, den_k b_k = sum_i T_ki u_i and u_i = input_scale_i f_i.
    std::vector<std::vector<Poly::Term>> acc(n);
    for (const auto& q : div.quotients) {
        const auto k = static_cast<size_t>(q.pos);
        const Rational qc = Rational(q.c, div.quot_den * data.den[k]);
        for (const auto& t : data.tracking[k]) {
            acc[t.pos].emplace_back(q.m * t.m, qc * Rational(t.c) * data.input_scale[t.pos]);
        }
    }
    const Rational back(den, num);
    for (size_t i = 0; i < n; ++i) coeffs[i] = back * Poly(gb.nvars_, std::move(acc[i]));
    return coeffs;
}

bool module_contains(const std::vector<FreeElem>& gens, const FreeElem& e, const EngineOptions& opts)
{
    if (!gens.empty() && gens[0].width() != e.width()) throw WidthMismatch("element width differs from the rows");
    if (e.is_zero()) return true;
    if (gens.empty()) return false;
    const TermOrder ord = working_order(gens, e.width());
    const auto gb = working_basis(gens, e.width(), ord, opts);
    return reduces_to_zero(e, *gb);
}

bool module_equal(const std::vector<FreeElem>& a, const std::vector<FreeElem>& b, const EngineOptions& opts)
{
    const int wa = a.empty() ? -1 : a[0].width();
    const int wb = b.empty() ? -1 : b[0].width();
    if (wa >= 0 && wb >= 0 && wa != wb) throw WidthMismatch("row modules live in different free modules");
    const int w = std::max(wa, wb);
    if (w < 0) return true;
    auto inside = [&](const std::vector<FreeElem>& gens, const std::vector<FreeElem>& probe) {
        if (std::all_of(probe.begin(), probe.end(), [](const FreeElem& x) { return x.is_zero(); })) return true;
        if (gens.empty()) return false;
        const TermOrder ord = working_order(gens, w);
        const auto gb = working_basis(gens, w, ord, opts);
        return std::all_of(probe.begin(), probe.end(), [&](const FreeElem& x) { return reduces_to_zero(x, *gb); });
    };
    return inside(a, b) && inside(b, a);
}

// ---------------------------------------------------------------------------
// Syzygies

std::vector<FreeElem> raw_syzygies(const std::vector<FreeElem>& gens, const EngineOptions& opts)
{
    if (gens.empty()) throw std::invalid_argument("syzygies of an empty row set");
    const Shape s = shape_of(gens, -1);
    const auto k = static_cast<int>(gens.size());
    if (s.width == 0) {
        std::vector<FreeElem> units;
        for (int i = 0; i < k; ++i) units.push_back(FreeElem::unit(s.nvars, k, i));
        return units;
    }
    const TermOrder ord = working_order(gens, s.width);
    Built in = build_inputs(gens, ord);
    Engine eng(s.nvars, s.width, ord, opts, true);
    eng.run(std::move(in.rows));
    std::vector<FreeElem> out;
    std::set<std::string> seen;
    for (const auto& t : eng.zero_relations()) {
        // sum t_i u_i = 0 with u_i = scale_i f_i.
        std::vector<std::vector<Poly::Term>> cols(static_cast<size_t>(k));
        for (const auto& term : t) cols[term.pos].emplace_back(term.m, in.scale[term.pos] * Rational(term.c));
        std::vector<Poly> entries;
        for (auto& c : cols) entries.emplace_back(s.nvars, std::move(c));
        FreeElem syz = FreeElem(std::move(entries)).primitive();
        if (syz.is_zero()) continue;
        if (seen.insert(syz.str()).second) out.push_back(std::move(syz));
    }
    return out;
}

std::vector<FreeElem> syzygies(const std::vector<FreeElem>& gens, const EngineOptions& opts)
{
    return minimize_generators(raw_syzygies(gens, opts), opts);
}

// ---------------------------------------------------------------------------
// Minimization

namespace {

struct Candidate {
    FreeElem elem;
    std::string key;
    int degree = 0;
    int graded = 0;
};

std::vector<Candidate> prepare(const std::vector<FreeElem>& gens)
{
    std::vector<Candidate> out;
    std::set<std::string> seen;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        FreeElem p = g.primitive();
        std::string k = canonical(p);
        if (!seen.insert(k).second) continue;
        out.push_back(Candidate{std::move(p), std::move(k), g.degree(), 0});
    }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.key < b.key;
    });
    return out;
}

int graded_degree(const FreeElem& e, const std::vector<int>& shifts)
{
    int d = -1;
    for (size_t j = 0; j < e.entries().size(); ++j) {
        if (!e[j].is_zero()) d = std::max(d, e[j].degree() + shifts[j]);
    }
    return d;
}

std::vector<FreeElem> sort_output(std::vector<FreeElem> kept)
{
    const TermOrder plain;
    std::vector<std::pair<unsigned __int128, std::string>> keys;
    std::vector<size_t> idx(kept.size());
    std::iota(idx.begin(), idx.end(), 0);
    keys.reserve(kept.size());
    for (const auto& e : kept) {
        const IVec v = detail::to_ivec(e, plain);
        keys.emplace_back(plain.key(v[0].m, v[0].pos), e.str());
    }
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (keys[a].first != keys[b].first) return keys[a].first < keys[b].first;
        return keys[a].second < keys[b].second;
    });
    std::vector<FreeElem> out;
    out.reserve(kept.size());
    for (const size_t i : idx) out.push_back(std::move(kept[i]));
    return out;
}

/// Greedy deletion; base elements are always present and never dropped.
std::vector<FreeElem> minimize_impl(const std::vector<FreeElem>& base_in, const std::vector<FreeElem>& extra,
                                    const EngineOptions& opts)
{
    std::vector<Candidate> cand = prepare(extra);
    if (cand.empty()) return {};
    const int width = cand[0].elem.width();
    const int nvars = cand[0].elem.nvars();
    std::vector<FreeElem> base;
    for (const auto& b : base_in) {
        if (b.width() != width) throw WidthMismatch("base and candidate rows differ in width");
        if (!b.is_zero()) base.push_back(b);
    }

    std::vector<FreeElem> all = base;
    for (const auto& c : cand) all.push_back(c.elem);
    const auto shifts = homogenizing_shifts(all, width);
    bool graded = shifts.has_value();
    if (graded) {
        for (auto& c : cand) c.graded = graded_degree(c.elem, *shifts);
        for (size_t i = 1; i < cand.size(); ++i) {
            if (cand[i].graded < cand[i - 1].graded) graded = false;
        }
    }

    std::vector<FreeElem> kept;
    if (graded) {
        const TermOrder ord(*shifts);
        std::vector<int> base_deg;
        for (const auto& b : base) base_deg.push_back(graded_degree(b, *shifts));
        size_t i = 0;
        while (i < cand.size()) {
            const int d = cand[i].graded;
            size_t end = i;
            while (end < cand.size() && cand[end].graded == d) ++end;
            std::vector<FreeElem> lower;
            for (size_t b = 0; b < base.size(); ++b) {
                if (base_deg[b] < d) lower.push_back(base[b]);
            }
            for (const auto& k : kept) lower.push_back(k);
            std::shared_ptr<GbData> gb;
            if (!lower.empty()) gb = working_basis(lower, width, ord, opts);
            auto nf = [&](const FreeElem& e) {
                IVec v = detail::to_ivec(e, ord);
                if (!gb) return detail::to_free(v, nvars, width);
                const auto div = detail::divide(v, *gb, false);
                return detail::to_free(div.remainder, nvars, width);
            };
            detail::Echelon ech;
            for (size_t b = 0; b < base.size(); ++b) {
                if (base_deg[b] == d) ech.insert(detail::to_sparse(nf(base[b]), ord));
            }
            std::vector<bool> keep(end - i, false);
            for (size_t k = end; k-- > i;) {
                keep[k - i] = ech.insert(detail::to_sparse(nf(cand[k].elem), ord));
            }
            for (size_t k = i; k < end; ++k) {
                if (keep[k - i]) kept.push_back(cand[k].elem);
            }
            i = end;
        }
    } else {
        std::vector<bool> alive(cand.size(), true);
        for (size_t i = 0; i < cand.size(); ++i) {
            std::vector<FreeElem> others = base;
            for (size_t j = 0; j < cand.size(); ++j) {
                if (j != i && alive[j]) others.push_back(cand[j].elem);
            }
            if (others.empty()) continue;
            const TermOrder ord = working_order(others, width);
            const auto gb = working_basis(others, width, ord, opts);
            if (reduces_to_zero(cand[i].elem, *gb)) alive[i] = false;
        }
        for (size_t i = 0; i < cand.size(); ++i) {
            if (alive[i]) kept.push_back(cand[i].elem);
        }
    }
    return sort_output(std::move(kept));
}

}  // namespace

std::vector<FreeElem> minimize_generators(const std::vector<FreeElem>& gens, const EngineOptions& opts)
{
    return minimize_impl({}, gens, opts);
}

std::vector<FreeElem> minimize_relative(const std::vector<FreeElem>& base, const std::vector<FreeElem>& extra,
                                        const EngineOptions& opts)
{
    return minimize_impl(base, extra, opts);
}

// ---------------------------------------------------------------------------
// Ranks

int fraction_rank(const std::vector<FreeElem>& rows, int width)
{
    const Shape s = shape_of(rows, width);
    std::vector<std::vector<Poly>> a;
    for (const auto& r : rows) {
        if (!r.is_zero()) a.push_back(r.entries());
    }
    const size_t p = a.size();
    const auto m = static_cast<size_t>(s.width);
    std::vector<size_t> cols(m);
    std::iota(cols.begin(), cols.end(), 0);
    Poly prev(s.nvars, Rational(1));
    size_t rank = 0;
    while (rank < p && rank < m) {
        // Sparsest nonzero pivot among the remaining block.
        size_t br = p;
        size_t bc = m;
        size_t best = 0;
        for (size_t i = rank; i < p; ++i) {
            for (size_t j = rank; j < m; ++j) {
                const Poly& x = a[i][cols[j]];
                if (x.is_zero()) continue;
                const size_t cost = x.size() * 256 + static_cast<size_t>(x.degree());
                if (br == p || cost < best) {
                    br = i;
                    bc = j;
                    best = cost;
                }
            }
        }
        if (br == p) break;
        std::swap(a[rank], a[br]);
        std::swap(cols[rank], cols[bc]);
        const Poly piv = a[rank][cols[rank]];
        for (size_t i = rank + 1; i < p; ++i) {
            const Poly f = a[i][cols[rank]];
            for (size_t j = rank + 1; j < m; ++j) {
                const size_t c = cols[j];
                Poly v = piv * a[i][c] - f * a[rank][c];
                a[i][c] = exact_divide(v, prev);
            }
            a[i][cols[rank]] = Poly(s.nvars);
        }
        prev = piv;
        ++rank;
    }
    return static_cast<int>(rank);
}

int fraction_rank_gb(const std::vector<FreeElem>& rows, int width, const EngineOptions& opts)
{
    const Shape s = shape_of(rows, width);
    if (rows.empty()) return 0;
    const TermOrder ord = working_order(rows, s.width);
    const auto gb = working_basis(rows, s.width, ord, opts);
    std::set<uint32_t> hit;
    for (const auto& b : gb->basis) hit.insert(b[0].pos);
    return static_cast<int>(hit.size());
}

// ---------------------------------------------------------------------------
// Resolutions

std::vector<int> order_profile(const std::vector<FreeElem>& rows)
{
    std::vector<int> out;
    for (const auto& r : rows) out.push_back(std::max(r.degree(), 0));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<int>> homogenizing_shifts(const std::vector<FreeElem>& rows, int width)
{
    // Unknowns: column shifts s_j and row degrees r_i with deg(term) + s_j = r_i.
    const auto w = static_cast<size_t>(width);
    const size_t nrows = rows.size();
    std::vector<std::optional<int>> col(w);
    std::vector<std::optional<int>> row(nrows);
    std::vector<std::vector<std::pair<size_t, int>>> col_edges(w);  // (row, degree)
    std::vector<std::vector<std::pair<size_t, int>>> row_edges(nrows);
    for (size_t i = 0; i < nrows; ++i) {
        for (size_t j = 0; j < w; ++j) {
            const Poly& p = rows[i][j];
            if (p.is_zero()) continue;
            if (!p.is_homogeneous()) return std::nullopt;
            row_edges[i].emplace_back(j, p.degree());
            col_edges[j].emplace_back(i, p.degree());
        }
    }
    for (size_t start = 0; start < w; ++start) {
        if (col[start]) continue;
        col[start] = 0;
        std::vector<std::pair<bool, size_t>> stack{{true, start}};
        while (!stack.empty()) {
            const auto [is_col, idx] = stack.back();
            stack.pop_back();
            if (is_col) {
                for (const auto& [i, d] : col_edges[idx]) {
                    const int want = d + *col[idx];
                    if (!row[i]) {
                        row[i] = want;
                        stack.emplace_back(false, i);
                    } else if (*row[i] != want) {
                        return std::nullopt;
                    }
                }
            } else {
                for (const auto& [j, d] : row_edges[idx]) {
                    const int want = *row[idx] - d;
                    if (!col[j]) {
                        col[j] = want;
                        stack.emplace_back(true, j);
                    } else if (*col[j] != want) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    std::vector<int> out(w);
    int lo = 0;
    for (size_t j = 0; j < w; ++j) lo = std::min(lo, *col[j]);
    for (size_t j = 0; j < w; ++j) out[j] = *col[j] - lo;
    return out;
}

Resolution resolve_module(const std::vector<FreeElem>& rows, int width, int max_steps, const EngineOptions& opts)
{
    if (max_steps < 1) throw std::invalid_argument("max_steps must be positive");
    if (rows.empty()) {
        // A free module: nothing to resolve beyond the source itself.
        if (width < 0) throw std::invalid_argument("an empty presentation needs an explicit width");
        Resolution r;
        r.source_width = width;
        r.complete = true;
        return r;
    }
    const Shape s = shape_of(rows, width);
    Resolution r;
    r.nvars = s.nvars;
    r.source_width = s.width;
    r.steps.push_back(rows);
    while (true) {
        std::vector<FreeElem> next = syzygies(r.steps.back(), opts);
        if (next.empty()) {
            r.complete = true;
            break;
        }
        if (static_cast<int>(r.steps.size()) == max_steps) {
            r.truncated = true;
            break;
        }
        r.steps.push_back(std::move(next));
    }
    for (const auto& st : r.steps) {
        r.dims.push_back(static_cast<int>(st.size()));
        r.orders.push_back(order_profile(st));
    }
    return r;
}

int euler_characteristic(const Resolution& r)
{
    int chi = r.source_width;
    int sign = -1;
    for (const int d : r.dims) {
        chi += sign * d;
        sign = -sign;
    }
    return chi;
}

int graded_exactness_defect(const std::vector<FreeElem>& rows, const std::vector<FreeElem>& next, int width,
                            int degree)
{
    const auto shifts = homogenizing_shifts(rows, width);
    if (!shifts) throw std::invalid_argument("exactness check needs homogeneous rows");
    const int nvars = rows.empty() ? 1 : rows[0].nvars();
    std::vector<int> row_deg;
    for (const auto& r : rows) row_deg.push_back(graded_degree(r, *shifts));
    // Source basis: (monomial mu, row i) with deg mu = degree - row_deg[i].
    std::map<std::pair<int, uint64_t>, size_t> src_index;
    std::vector<std::pair<int, Monomial>> src;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].is_zero()) continue;
        const int e = degree - row_deg[i];
        if (e < 0) continue;
        for (const Monomial mu : detail::monomials_of_degree(nvars, e)) {
            src_index[{static_cast<int>(i), mu.word()}] = src.size();
            src.emplace_back(static_cast<int>(i), mu);
        }
    }
    // Rank of the map c -> c*rows restricted to that basis.
    std::vector<detail::SparseRow> images;
    const TermOrder plain;
    for (const auto& [i, mu] : src) {
        const FreeElem img = Poly::monomial(nvars, mu) * rows[static_cast<size_t>(i)];
        images.push_back(detail::to_sparse(img, plain));
    }
    const size_t image_rank = detail::rank_of(images);
    const size_t kernel_dim = src.size() - image_rank;

    // Span of degree-`degree` multiples of the next rows, written in the source basis.
    std::vector<detail::SparseRow> gens;
    for (const auto& nr : next) {
        int t = -1;
        for (size_t i = 0; i < nr.entries().size(); ++i) {
            if (!nr[i].is_zero()) t = std::max(t, nr[i].degree() + row_deg[i]);
        }
        if (t < 0) continue;
        const int e = degree - t;
        if (e < 0) continue;
        for (const Monomial mu : detail::monomials_of_degree(nvars, e)) {
            detail::SparseRow sr;
            for (size_t i = 0; i < nr.entries().size(); ++i) {
                for (const auto& [m, c] : nr[i].terms()) {
                    const auto it = src_index.find({static_cast<int>(i), (m * mu).word()});
                    if (it == src_index.end()) throw std::logic_error("next step is not homogeneous");
                    sr.emplace_back(it->second, c);
                }
            }
            std::sort(sr.begin(), sr.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
            gens.push_back(std::move(sr));
        }
    }
    const size_t span = detail::rank_of(gens);
    return static_cast<int>(kernel_dim) - static_cast<int>(span);
}

}  // namespace dgcalc
