#include "dgcalc/reference.hpp"

#include <algorithm>

namespace dgcalc::reference {

namespace {

struct RTerm {
    int pos;
    Monomial m;
    Rational c;
};

using Vec = std::vector<RTerm>;

/// >0 when (a.m, a.pos) ranks above (b.m, b.pos).
int cmp(const RTerm& a, const RTerm& b, Order o)
{
    const int mc = Monomial::compare(a.m, b.m);
    const int pc = a.pos == b.pos ? 0 : (a.pos < b.pos ? 1 : -1);
    if (o == Order::TermOverPosition) return mc != 0 ? mc : pc;
    return pc != 0 ? pc : mc;
}

Vec to_vec(const FreeElem& e, Order o)
{
    Vec v;
    for (size_t j = 0; j < e.entries().size(); ++j) {
        for (const auto& [m, c] : e[j].terms()) v.push_back({static_cast<int>(j), m, c});
    }
    std::sort(v.begin(), v.end(), [o](const RTerm& a, const RTerm& b) { return cmp(a, b, o) > 0; });
    return v;
}

FreeElem to_elem(const Vec& v, int nvars, int width)
{
    std::vector<std::vector<Poly::Term>> cols(static_cast<size_t>(width));
    for (const auto& t : v) cols[static_cast<size_t>(t.pos)].emplace_back(t.m, t.c);
    std::vector<Poly> e;
    for (auto& c : cols) e.emplace_back(nvars, std::move(c));
    return FreeElem(std::move(e));
}

/// a - f * mono * b, all sorted.
Vec sub(const Vec& a, const Rational& f, Monomial mono, const Vec& b, Order o)
{
    Vec out;
    size_t i = 0;
    size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        RTerm t{b[j].pos, b[j].m * mono, -(f * b[j].c)};
        if (i == a.size()) {
            out.push_back(std::move(t));
            ++j;
            continue;
        }
        const int c = cmp(a[i], t, o);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(std::move(t));
            ++j;
        } else {
            Rational v = a[i].c + t.c;
            if (!v.is_zero()) out.push_back({a[i].pos, a[i].m, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

Vec reduce_vec(Vec v, const std::vector<Vec>& gb, Order o)
{
    Vec rem;
    while (!v.empty()) {
        const RTerm& lt = v.front();
        const Vec* hit = nullptr;
        for (const auto& g : gb) {
            if (g.front().pos == lt.pos && g.front().m.divides(lt.m)) {
                hit = &g;
                break;
            }
        }
        if (hit == nullptr) {
            rem.push_back(lt);
            v.erase(v.begin());
            continue;
        }
        v = sub(v, lt.c / hit->front().c, lt.m / hit->front().m, *hit, o);
    }
    return rem;
}

void make_monic(Vec& v)
{
    const Rational inv = v.front().c.inverse();
    for (auto& t : v) t.c *= inv;
}

std::vector<Vec> buchberger(const std::vector<FreeElem>& gens, Order o)
{
    std::vector<Vec> g;
    for (const auto& e : gens) {
        Vec v = reduce_vec(to_vec(e, o), g, o);
        if (v.empty()) continue;
        make_monic(v);
        g.push_back(std::move(v));
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t j = 0; j < g.size(); ++j) {
        for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    while (!pairs.empty()) {
        const auto [i, j] = pairs.back();
        pairs.pop_back();
        const RTerm& a = g[i].front();
        const RTerm& b = g[j].front();
        if (a.pos != b.pos) continue;
        const Monomial l = Monomial::lcm(a.m, b.m);
        Vec s = sub(sub(Vec{}, Rational(-1), l / a.m, g[i], o), Rational(1), l / b.m, g[j], o);
        s = reduce_vec(std::move(s), g, o);
        if (s.empty()) continue;
        make_monic(s);
        g.push_back(std::move(s));
        for (size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }
    // Minimal basis, then interreduction.
    std::vector<Vec> minimal;
    for (size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || g[j].front().pos != g[i].front().pos) continue;
            if (!g[j].front().m.divides(g[i].front().m)) continue;
            // Equal leads: keep the earlier one.
            redundant = g[j].front().m != g[i].front().m || j < i;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Vec> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Vec> others;
        for (size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        Vec tail(minimal[i].begin() + 1, minimal[i].end());
        Vec r{minimal[i].front()};
        const Vec red = reduce_vec(std::move(tail), others, o);
        r.insert(r.end(), red.begin(), red.end());
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [](const Vec& a, const Vec& b) {
        if (a.front().pos != b.front().pos) return a.front().pos < b.front().pos;
        return Monomial::compare(a.front().m, b.front().m) < 0;
    });
    return reduced;
}

}  // namespace

std::vector<FreeElem> groebner(const std::vector<FreeElem>& gens, int width, Order order)
{
    if (gens.empty()) return {};
    const int nvars = gens.front().nvars();
    std::vector<FreeElem> out;
    for (const auto& v : buchberger(gens, order)) out.push_back(to_elem(v, nvars, width));
    return out;
}

FreeElem reduce(const FreeElem& e, const std::vector<FreeElem>& gb, Order order)
{
    std::vector<Vec> g;
    for (const auto& b : gb) g.push_back(to_vec(b, order));
    return to_elem(reduce_vec(to_vec(e, order), g, order), e.nvars(), e.width());
}

std::vector<FreeElem> syzygies(const std::vector<FreeElem>& gens)
{
    if (gens.empty()) return {};
    const int nvars = gens.front().nvars();
    const int w = gens.front().width();
    const auto k = static_cast<int>(gens.size());
    std::vector<FreeElem> aug;
    for (int i = 0; i < k; ++i) {
        std::vector<Poly> e = gens[static_cast<size_t>(i)].entries();
        for (int j = 0; j < k; ++j) e.emplace_back(nvars, Rational(i == j ? 1 : 0));
        aug.emplace_back(std::move(e));
    }
    std::vector<FreeElem> out;
    for (const auto& v : buchberger(aug, Order::PositionOverTerm)) {
        if (v.front().pos < w) continue;
        std::vector<Poly> tail(static_cast<size_t>(k), Poly(nvars));
        std::vector<std::vector<Poly::Term>> cols(static_cast<size_t>(k));
        for (const auto& t : v) cols[static_cast<size_t>(t.pos - w)].emplace_back(t.m, t.c);
        for (int j = 0; j < k; ++j) tail[static_cast<size_t>(j)] = Poly(nvars, std::move(cols[static_cast<size_t>(j)]));
        out.push_back(FreeElem(std::move(tail)).primitive());
    }
    return out;
}

int rank_at(const std::vector<FreeElem>& rows, const std::vector<Rational>& point)
{
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) {
        std::vector<Rational> v;
        for (const auto& p : r.entries()) v.push_back(p.evaluate(point));
        m.push_back(std::move(v));
    }
    int rank = 0;
    const size_t cols = m.empty() ? 0 : m.front().size();
    for (size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        size_t piv = static_cast<size_t>(rank);
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[static_cast<size_t>(rank)]);
        const auto& p = m[static_cast<size_t>(rank)];
        for (size_t r = static_cast<size_t>(rank) + 1; r < m.size(); ++r) {
            if (m[r][c].is_zero()) continue;
            const Rational f = m[r][c] / p[c];
            for (size_t j = c; j < cols; ++j) m[r][j] -= f * p[j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace dgcalc::reference
